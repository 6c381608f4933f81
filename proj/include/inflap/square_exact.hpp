#pragma once

#include <stdexcept>

#include "inflap/geometry.hpp"

namespace inflap::sq {

// Exact evaluation of the potential of the punctured square [0,2]^2 with the
// center (1,1) removed: u = 0 on the outer boundary, u -> 1 at the center.
// On the closed subsquare [0,1]^2 the potential is the saddle value
//
//   u(x, y) = min_{0<=psi<=pi/2} max_{0<=rho<=1} { x rho cos psi
//             + y rho sin psi - W(rho, psi) }
//
// with the series
//
//   W(rho, psi) = (8/pi) sum_{n>=1} rho^{m^2} sin(m psi) / ((m^2 - 1) m),
//   m = m_n = 4n - 2,
//
// and is extended to the full square by the reflections x -> 2 - x,
// y -> 2 - y. On the diagonal the substitution t = W_rho(rho, pi/4) gives
// closed expressions for the value and for the pointwise Rayleigh quotient
// |grad u| / u, whose reciprocal is an alternating series in rho.

class SquareExactError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Truncation policy for the W-series and its termwise derivatives. With
/// ascending exponents m_n^2 the terms at psi = pi/4 alternate with
/// decreasing magnitudes, so the first omitted term bounds the tail.
struct SeriesTruncation {
  enum class Mode { FixedTerms, TailTolerance };
  Mode mode = Mode::FixedTerms;
  int terms = 8;            // FixedTerms: m_8 = 30, exponent 900
  double tail_tol = 1e-15;  // TailTolerance
  int max_terms = 2000;     // hard cap in either mode

  static SeriesTruncation fixed(int n) {
    SeriesTruncation t;
    t.mode = Mode::FixedTerms;
    t.terms = n;
    return t;
  }
  static SeriesTruncation tail(double eps, int cap = 2000) {
    SeriesTruncation t;
    t.mode = Mode::TailTolerance;
    t.tail_tol = eps;
    t.max_terms = cap;
    return t;
  }
};

/// Coordinates of a point of the full square [0,2]^2 folded into the
/// subsquare [0,1]^2 where the min-max formula applies.
struct SquareCoords {
  Vec2 full;       // input point
  Vec2 sub;        // (min(x, 2-x), min(y, 2-y))
  int parity_x;    // +1 if x <= 1, else -1
  int parity_y;
};

SquareCoords fold_to_subsquare(double x, double y);

double series_W(double rho, double psi,
                const SeriesTruncation& trunc = SeriesTruncation{});
double series_W_rho(double rho, double psi,
                    const SeriesTruncation& trunc = SeriesTruncation{});

/// Diagonal coordinate t(rho) = W_rho(rho, pi/4), strictly increasing from 0
/// to sqrt(2). Switches to series acceleration for rho > 0.9995 where plain
/// summation converges too slowly.
double diagonal_t(double rho, const SeriesTruncation& trunc = SeriesTruncation{});

/// Reciprocal Rayleigh quotient 1/R(rho) = (8/pi) sum (-1)^{n-1}
/// rho^{m_n^2 - 1} / m_n on the diagonal; equals 1 at rho = 1. Uses the same
/// acceleration switch as diagonal_t.
double rayleigh_reciprocal(double rho,
                           const SeriesTruncation& trunc = SeriesTruncation{});

/// Potential value at (x, y) in the closed square [0,2]^2. Exactly 0 on the
/// outer boundary, defined as 1 at the center. tol controls the widths of the
/// inner rho-bisection and outer psi golden-section.
double eval_potential(double x, double y,
                      const SeriesTruncation& trunc = SeriesTruncation{},
                      double tol = 1e-10);

/// Gradient at a strictly interior, non-center point, recovered from the
/// saddle (rho*, psi*) of the min-max as rho* (cos psi*, sin psi*) and mapped
/// back through the reflections. |grad u| = rho*.
Vec2 gradient_exact(double x, double y,
                    const SeriesTruncation& trunc = SeriesTruncation{},
                    double tol = 1e-10);

/// One row of the diagonal table.
struct DiagonalSample {
  double rho = 0.0;
  double t = 0.0;             // diagonal_t(rho), in [0, sqrt(2)]
  double u = 0.0;             // potential at (t/sqrt2, t/sqrt2)
  double recip_rayleigh = 0.0;
  Vec2 point;                 // (t/sqrt2, t/sqrt2), subsquare coordinates
};

DiagonalSample diagonal_sample(double rho,
                               const SeriesTruncation& trunc = SeriesTruncation{});

/// The numerical disproof of the potential/ground-state coincidence: at
/// rho* = 0.97 the reciprocal Rayleigh quotient exceeds 1 (Leibniz bracket
/// [S2, S3]), so |grad u|/u < 1 at a diagonal point near the center, which an
/// eigenfunction with Lambda = 1 cannot do.
struct DisproofReport {
  double rho_star = 0.97;
  double recip_rayleigh = 0.0;  // full series value
  double leibniz_lo = 0.0;      // two-term partial sum S2
  double leibniz_hi = 0.0;      // three-term partial sum S3
  double t = 0.0;
  Vec2 point;                   // subsquare coordinates
  double distance_to_center = 0.0;
  bool exceeds_one = false;
};

DisproofReport disproof_report(const SeriesTruncation& trunc = SeriesTruncation{});

}  // namespace inflap::sq
