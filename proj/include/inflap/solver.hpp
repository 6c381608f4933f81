#pragma once

#include <stdexcept>

#include "inflap/field.hpp"
#include "inflap/geometry.hpp"
#include "inflap/profile.hpp"

namespace inflap::solver {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveParams {
  int k = 3;                      // disk stencil radius r = k*h
  double tolerance = 1e-8;        // sup-norm change per sweep
  long max_iterations = 1000000;  // sweeps
  const ScalarField* warm_start = nullptr;  // optional initial values
  bool throw_on_nonconvergence = true;
};

/// Potential of the convex ring: midrange fixed point
/// u(x) = (max_N u + min_N u) / 2 on interior nodes, u = 0 on the outer
/// boundary, u = 1 on the obstacle. The neighborhood N is every valued node
/// within r = k*h plus the value 0 when the outer boundary cuts the stencil.
/// Jacobi full sweeps; values in [0,1].
ScalarField solve_potential(const ConvexDomain& domain, const Obstacle& obstacle,
                            const SolveParams& params = {});

struct EigenResult {
  ScalarField field;   // normalized, max = 1 on the High Ridge
  double lambda = 0.0; // 1 / inradius
  bool converged = false;
};

/// Ground state of the eigenvalue problem max{Lambda - |grad v|/v, D_inf v}=0
/// with Lambda = 1/R fixed from the inradius. Monotone complementarity
/// update v <- max{ (max_N v + min_N v)/2, min_N v / (1 - Lambda r) }: the
/// first branch enforces the infinity-Laplace equation, the second the
/// eikonal growth S^-(x) = Lambda v(x). High Ridge nodes are pinned to 1,
/// the boundary to 0, and the field is renormalized to max = 1 every sweep.
/// Initial guess dist/R. Detects stagnation to a zero field distinctly and
/// retries once with stencil k+1 if the sweep change stagnates above
/// tolerance.
EigenResult solve_ground_state(const ConvexDomain& domain,
                               const SolveParams& params = {});

/// p-harmonic ring problem by cyclic coordinate descent on the discrete
/// p-energy of the 4-neighbor edge graph (red-black ordering, normalized
/// edge differences so exponents up to p = 200 stay in range). Continuation
/// doubles p from 2 up to the target. Dirichlet data 0 / 1 as in
/// solve_potential.
ScalarField solve_p_harmonic(const ConvexDomain& domain,
                             const Obstacle& obstacle, double p,
                             const SolveParams& params = {});

/// Fundamental-solution profile of the p-Laplace equation on the punctured
/// disk of radius eps: (eps^q - s^q) / eps^q with q = (p-2)/(p-1).
double p_fundamental_ring(double s, double eps, double p);

/// Discrete descent-slope operator S^-(x) = (v(x) - min_N v) / r on interior
/// nodes, r = k*h over the disk stencil. Non-interior nodes get NaN.
ScalarField s_minus(const ScalarField& field, int k);

/// |grad u| along the outer boundary at the given angles, by second-order
/// one-sided differences along the inward normal with spacing 2h (the
/// boundary value itself is the exact Dirichlet datum 0). Samples are tagged
/// with arclength and curvature.
BoundaryProfile boundary_gradient(const ScalarField& field,
                                  const ConvexDomain& domain,
                                  const std::vector<double>& angles);

}  // namespace inflap::solver
