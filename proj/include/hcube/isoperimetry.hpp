#pragma once

#include <span>

#include "hcube/boolean_core.hpp"
#include "hcube/report.hpp"

namespace hcube {

// Gaussian isoperimetric profile I(x) = pdf(quantile(x)) on [0,1],
// symmetric about 1/2 with I(0) = I(1) = 0. Below 1e-300 the
// asymptotic x sqrt(2 log(1/x)) takes over.
double gaussian_profile(double x);

struct ProfileBounds {
  double x;
  double value;      // I(x)
  double quadratic;  // sqrt(2/pi) (1/2 - 2 (1/2 - x)^2)
  double log_lower;  // c_log x(1-x) sqrt(log(1/(x(1-x))))
};

ProfileBounds profile_lower_bounds(double x);

// Largest c with I(x) >= c x(1-x) sqrt(log(1/(x(1-x)))) on (0,1),
// found by grid search plus local refinement and cached. Calibrated,
// not derived; reports carry an "empirical" note where it is used.
double log_profile_constant();

// I(E h) <= sqrt(2) E sqrt(sum_j Var_{x_j} h) for h valued in {0,1};
// biases[j] is the probability that coordinate j equals +1.
InequalityReport bobkov_gotze_check(const BooleanFunction& h,
                                    std::span<const double> biases,
                                    double tol = kDefaultTol);

// Pointwise bound I(P_t h) <= 2 sqrt(2) max(p,q) sqrt(1-e^{-2t}) P_t|grad h|
// for h valued in {0,1}; checks every point and reports the tightest one.
InequalityReport local_bobkov_discrete(const BooleanFunction& h,
                                       const BiasedMeasure& m, double t,
                                       double tol = kDefaultTol);

// Var(f) - Var(P_t f) <= 2 max(p,q) sqrt(pi (1-e^{-2t})) E|grad f| for
// Boolean f; t may be infinity, where the left side becomes Var(f).
InequalityReport verify_variance_drop(const BooleanFunction& f,
                                      const BiasedMeasure& m, double t,
                                      double tol = kDefaultTol);

}  // namespace hcube
