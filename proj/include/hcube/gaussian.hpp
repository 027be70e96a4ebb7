#pragma once

#include <span>
#include <vector>

#include "hcube/report.hpp"

namespace hcube {

// Coordinate halfspace on Gauss space: f(z) = +1 iff z[coord] <= a.
struct Halfspace {
  int coord = 0;
  double a = 0.0;
};

// Closed forms: mass = Phi(a), Var = 4 Phi(a)(1-Phi(a)), E|grad f| = 2 phi(a)
// (the limit of the smoothed family below), Inf_coord = Var, other
// influences exactly zero, W = Var^2.
struct HalfspaceStats {
  double mass_plus;
  double variance;
  double e_grad;
  std::vector<double> influences;
  double W;
};

HalfspaceStats halfspace_stats(const Halfspace& h, int n);

// Gauss-Hermite rule (weight e^{-x^2}) from the symmetric tridiagonal
// eigenproblem; total_weights[i] = weights[i] e^{nodes[i]^2} turn it
// into a plain integral rule for decaying integrands.
struct GaussHermite {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> total_weights;
  explicit GaussHermite(int count);
};

// E|grad f_eps| for the smoothing f_eps(z) = tanh((a - z)/eps) of the
// halfspace indicator; tends to 2 phi(a) as eps -> 0 with O(eps^2) bias.
// 201-node Gauss-Hermite after centering the sech^2 bump.
double smoothed_gradient_oracle(const Halfspace& h, double eps);
// Same integral by doubling trapezoid sums on [a - 40 eps, a + 40 eps].
double smoothed_gradient_trapezoid(const Halfspace& h, double eps);

// Per-threshold checks of the Gauss-space laws on coordinate
// halfspaces: Var <= sqrt(pi/2) E|grad f| (tight at a = 0), plus the
// two gradient lower bounds. C3 (variance-log law) and C4 (influence
// law) gate explicit constants when positive; 0 asks only for a
// positive ratio.
std::vector<InequalityReport> verify_ctns(std::span<const double> thresholds,
                                          double C3 = 0.0, double C4 = 0.0,
                                          double tol = kDefaultTol);

}  // namespace hcube
