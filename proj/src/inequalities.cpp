#include "hcube/inequalities.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hcube {

namespace {

InequalityReport make_gradient_report(const char* law,
                                      const BooleanFunction& f,
                                      const BiasedMeasure& m, double rhs_unit,
                                      double e_grad, double C, double tol) {
  InequalityReport r;
  r.law = law;
  r.n = f.n();
  r.p = m.p;
  r.lhs = e_grad;
  r.rhs_unit = rhs_unit;
  r.ratio = rhs_unit > 0.0 ? e_grad / rhs_unit : 0.0;
  r.tol = tol;
  if (rhs_unit <= 0.0)
    r.pass = true;  // degenerate f, nothing to check
  else if (C > 0.0)
    r.pass = geq_tol(e_grad, C * rhs_unit, tol);
  else
    r.pass = r.ratio > 0.0;
  r.witness_hex = f.to_text();
  r.add_param("C", C);
  return r;
}

}  // namespace

InequalityReport verify_eldan_gross(const BooleanFunction& f,
                                    const BiasedMeasure& m, double C,
                                    double tol) {
  Statistics st = statistics(f, m);
  Influences infl = influences(f, m);
  double e_grad = boundary_profile(f, m).e_grad;
  double rhs = 0.0;
  if (st.variance > 0.0 && infl.W > 0.0)
    rhs = st.variance * std::sqrt(std::log1p(std::numbers::e / infl.W));
  InequalityReport r =
      make_gradient_report("eldan-gross", f, m, rhs, e_grad, C, tol);
  r.add_param("var", st.variance);
  r.add_param("W", infl.W);
  return r;
}

InequalityReport verify_talagrand_logvar(const BooleanFunction& f,
                                         const BiasedMeasure& m, double C,
                                         double tol) {
  Statistics st = statistics(f, m);
  double e_grad = boundary_profile(f, m).e_grad;
  double rhs = 0.0;
  if (st.variance > 0.0)
    rhs = st.variance * std::sqrt(1.0 - std::log(st.variance));
  InequalityReport r =
      make_gradient_report("talagrand-logvar", f, m, rhs, e_grad, C, tol);
  r.add_param("var", st.variance);
  return r;
}

NumericalFactResult numerical_fact_min(std::size_t grid_size) {
  if (grid_size < 3) throw std::invalid_argument("grid too small");
  auto g = [](double eps) {
    return (1.0 - std::exp(1.0 / (eps - 2.0))) / std::sqrt(1.0 + eps);
  };
  double best = std::numeric_limits<double>::infinity();
  double best_eps = 1.0;
  auto consider = [&](double eps) {
    double v = g(eps);
    if (v < best) {
      best = v;
      best_eps = eps;
    }
  };
  for (std::size_t i = 1; i <= grid_size; ++i)
    consider(static_cast<double>(i) / static_cast<double>(grid_size));
  double h = 1.0 / static_cast<double>(grid_size);
  for (int round = 0; round < 6; ++round) {
    double lo = std::max(best_eps - h, h * 1e-6);
    double hi = std::min(best_eps + h, 1.0);
    for (int i = 0; i <= 200; ++i) consider(lo + (hi - lo) * i / 200.0);
    h /= 100.0;
  }
  return {best, best_eps, (1.0 - std::exp(-0.5)) / std::numbers::sqrt2};
}

}  // namespace hcube
