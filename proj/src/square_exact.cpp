#include "inflap/square_exact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace inflap::sq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEightOverPi = 8.0 / kPi;
// Upper end of the rho bracket in the inner maximization. The series for
// W_rho converges for rho < 1 only conditionally at general psi, and the
// value of the saddle objective is flat in rho near 1, so capping at
// 1 - 1e-7 perturbs values far below any tolerance used here.
constexpr double kRhoCap = 1.0 - 1e-7;

inline int term_m(int n) { return 4 * n - 2; }

void check_rho(double rho) {
  if (!(rho >= 0.0 && rho <= 1.0))
    throw SquareExactError("rho must lie in [0, 1]");
}

// Generic truncated summation. term(n) is the full n-th term including sign;
// mag(n) bounds its magnitude for the tail test.
template <class Term, class Mag>
double sum_series(const SeriesTruncation& tr, Term term, Mag mag) {
  double s = 0.0;
  int limit = tr.mode == SeriesTruncation::Mode::FixedTerms
                  ? std::min(tr.terms, tr.max_terms)
                  : tr.max_terms;
  for (int n = 1; n <= limit; ++n) {
    s += term(n);
    if (tr.mode == SeriesTruncation::Mode::TailTolerance &&
        mag(n + 1) < tr.tail_tol)
      break;
  }
  return s;
}

// Cohen-Rodriguez Villegas-Zagier acceleration for alternating series
// sum_{k>=0} (-1)^k a_k with slowly decreasing positive a_k; converges like
// (3 + sqrt(8))^{-n}. Used at rho -> 1 where the plain sums are useless.
template <class A>
double cvz_accelerate(A a, int n = 48) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0, c = -d, s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

constexpr double kAccelSwitch = 0.9995;

}  // namespace

SquareCoords fold_to_subsquare(double x, double y) {
  if (!(x >= 0.0 && x <= 2.0 && y >= 0.0 && y <= 2.0))
    throw SquareExactError("point outside the closed square [0,2]^2");
  SquareCoords c;
  c.full = {x, y};
  c.parity_x = x <= 1.0 ? 1 : -1;
  c.parity_y = y <= 1.0 ? 1 : -1;
  c.sub = {std::min(x, 2.0 - x), std::min(y, 2.0 - y)};
  return c;
}

double series_W(double rho, double psi, const SeriesTruncation& tr) {
  check_rho(rho);
  auto term = [&](int n) {
    double m = term_m(n);
    return std::pow(rho, m * m) * std::sin(m * psi) / ((m * m - 1.0) * m);
  };
  auto mag = [&](int n) {
    double m = term_m(n);
    return std::pow(rho, m * m) / ((m * m - 1.0) * m);
  };
  return kEightOverPi * sum_series(tr, term, mag);
}

double series_W_rho(double rho, double psi, const SeriesTruncation& tr) {
  check_rho(rho);
  auto term = [&](int n) {
    double m = term_m(n);
    return m * std::pow(rho, m * m - 1.0) * std::sin(m * psi) / (m * m - 1.0);
  };
  auto mag = [&](int n) {
    double m = term_m(n);
    return m * std::pow(rho, m * m - 1.0) / (m * m - 1.0);
  };
  return kEightOverPi * sum_series(tr, term, mag);
}

double diagonal_t(double rho, const SeriesTruncation& tr) {
  check_rho(rho);
  if (rho > kAccelSwitch) {
    // sin(m_n pi/4) = (-1)^{n-1}; accelerate the alternating tail
    auto a = [&](int k) {
      double m = term_m(k + 1);
      return m * std::pow(rho, m * m - 1.0) / (m * m - 1.0);
    };
    return kEightOverPi * cvz_accelerate(a);
  }
  return series_W_rho(rho, kPi / 4, tr);
}

double rayleigh_reciprocal(double rho, const SeriesTruncation& tr) {
  check_rho(rho);
  if (rho > kAccelSwitch) {
    auto a = [&](int k) {
      double m = term_m(k + 1);
      return std::pow(rho, m * m - 1.0) / m;
    };
    return kEightOverPi * cvz_accelerate(a);
  }
  auto term = [&](int n) {
    double m = term_m(n);
    double sign = (n % 2 == 1) ? 1.0 : -1.0;
    return sign * std::pow(rho, m * m - 1.0) / m;
  };
  auto mag = [&](int n) {
    double m = term_m(n);
    return std::pow(rho, m * m - 1.0) / m;
  };
  return kEightOverPi * sum_series(tr, term, mag);
}

namespace {

double series_W_rho_rho(double rho, double psi, const SeriesTruncation& tr) {
  auto term = [&](int n) {
    double m = term_m(n);
    return m * std::pow(rho, m * m - 2.0) * std::sin(m * psi);
  };
  auto mag = [&](int n) {
    double m = term_m(n);
    return m * std::pow(rho, m * m - 2.0);
  };
  return kEightOverPi * sum_series(tr, term, mag);
}

struct InnerMax {
  double rho;
  double value;
};

// max over rho in [0, kRhoCap] of f(rho) = c rho - W(rho, psi) for fixed psi.
// Stationarity W_rho(rho, psi) = c is solved by Newton steps safeguarded by
// the bracket [lo, hi] with f'(lo) >= 0 > f'(hi); W_rho is increasing in rho
// on the relevant range.
InnerMax inner_max(double c, double psi, const SeriesTruncation& tr,
                   double tol) {
  auto fprime = [&](double rho) { return c - series_W_rho(rho, psi, tr); };
  auto value = [&](double rho) { return c * rho - series_W(rho, psi, tr); };
  if (c <= 0.0) return {0.0, 0.0};
  double lo = 0.0, hi = kRhoCap;
  if (fprime(hi) >= 0.0) return {hi, value(hi)};
  double rho = 0.5 * (lo + hi);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    double fp = fprime(rho);
    if (fp >= 0.0)
      lo = rho;
    else
      hi = rho;
    double curv = series_W_rho_rho(rho, psi, tr);
    double next = curv > 1e-300 ? rho + fp / curv : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - rho) <= 0.5 * tol) {
      rho = next;
      break;
    }
    rho = next;
  }
  return {rho, value(rho)};
}

struct Saddle {
  double rho;
  double psi;
  double value;
};

// Nested solve of the min-max at a subsquare point: coarse scan over psi,
// then golden-section refinement of the outer minimum.
Saddle solve_saddle(double xt, double yt, const SeriesTruncation& tr,
                    double tol) {
  auto outer = [&](double psi) {
    return inner_max(xt * std::cos(psi) + yt * std::sin(psi), psi, tr, tol);
  };

  const int n_scan = 33;
  int best = 0;
  double best_val = 1e300;
  for (int i = 0; i < n_scan; ++i) {
    double psi = (kPi / 2) * i / (n_scan - 1);
    double v = outer(psi).value;
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = (kPi / 2) * std::max(best - 1, 0) / (n_scan - 1);
  double b = (kPi / 2) * std::min(best + 1, n_scan - 1) / (n_scan - 1);

  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = outer(x1).value, f2 = outer(x2).value;
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = outer(x1).value;
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = outer(x2).value;
    }
  }
  double psi = 0.5 * (a + b);
  InnerMax im = outer(psi);
  return {im.rho, psi, im.value};
}

}  // namespace

double eval_potential(double x, double y, const SeriesTruncation& tr,
                      double tol) {
  SquareCoords c = fold_to_subsquare(x, y);
  double xt = c.sub.x, yt = c.sub.y;
  if (xt >= 1.0 && yt >= 1.0) return 1.0;  // the removed center
  if (xt <= 0.0 || yt <= 0.0) return 0.0;  // outer boundary
  double v = solve_saddle(xt, yt, tr, tol).value;
  return std::clamp(v, 0.0, 1.0);
}

Vec2 gradient_exact(double x, double y, const SeriesTruncation& tr,
                    double tol) {
  SquareCoords c = fold_to_subsquare(x, y);
  double xt = c.sub.x, yt = c.sub.y;
  if (xt >= 1.0 && yt >= 1.0)
    throw SquareExactError("gradient undefined at the center");
  if (xt <= 0.0 || yt <= 0.0)
    throw SquareExactError("gradient_exact requires a strictly interior point");
  Saddle s = solve_saddle(xt, yt, tr, tol);
  // envelope of the saddle objective in (x, y)
  return {c.parity_x * s.rho * std::cos(s.psi),
          c.parity_y * s.rho * std::sin(s.psi)};
}

DiagonalSample diagonal_sample(double rho, const SeriesTruncation& tr) {
  check_rho(rho);
  DiagonalSample d;
  d.rho = rho;
  d.t = diagonal_t(rho, tr);
  d.recip_rayleigh = rayleigh_reciprocal(rho, tr);
  double coord = d.t / std::numbers::sqrt2;
  d.point = {coord, coord};
  d.u = rho * d.t - series_W(rho, kPi / 4, tr);
  return d;
}

DisproofReport disproof_report(const SeriesTruncation& tr) {
  DisproofReport r;
  r.rho_star = 0.97;
  r.recip_rayleigh = rayleigh_reciprocal(r.rho_star, tr);
  r.leibniz_lo = rayleigh_reciprocal(r.rho_star, SeriesTruncation::fixed(2));
  r.leibniz_hi = rayleigh_reciprocal(r.rho_star, SeriesTruncation::fixed(3));
  r.t = diagonal_t(r.rho_star, tr);
  double coord = r.t / std::numbers::sqrt2;
  r.point = {coord, coord};
  r.distance_to_center = (Vec2{1.0, 1.0} - r.point).norm();
  r.exceeds_one = r.leibniz_lo > 1.0;
  return r;
}

}  // namespace inflap::sq
