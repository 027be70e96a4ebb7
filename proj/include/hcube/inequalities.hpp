#pragma once

#include "hcube/boolean_core.hpp"
#include "hcube/report.hpp"

namespace hcube {

// E|grad f| >= C Var(f) sqrt(log(1 + e/W(f))): gradient versus total
// squared influence. C = 0 only asks for a strictly positive ratio;
// C > 0 checks that explicit constant.
InequalityReport verify_eldan_gross(const BooleanFunction& f,
                                    const BiasedMeasure& m, double C = 0.0,
                                    double tol = kDefaultTol);

// E|grad f| >= C Var(f) sqrt(log(e/Var(f))): gradient versus the
// variance-only lower bound.
InequalityReport verify_talagrand_logvar(const BooleanFunction& f,
                                         const BiasedMeasure& m,
                                         double C = 0.0,
                                         double tol = kDefaultTol);

// min over eps in (0, 1] of (1 - e^{1/(eps-2)}) / sqrt(1 + eps),
// the closing numeric step of the main proof; must stay above
// (1 - e^{-1/2}) / sqrt(2).
struct NumericalFactResult {
  double min_value;
  double arg_eps;
  double floor;  // (1 - e^{-1/2}) / sqrt(2)
};

NumericalFactResult numerical_fact_min(std::size_t grid_size = 100001);

}  // namespace hcube
