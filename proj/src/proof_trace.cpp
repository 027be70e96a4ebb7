#include "hcube/proof_trace.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hcube/isoperimetry.hpp"
#include "hcube/semigroup.hpp"

namespace hcube {

const char* to_string(ProofBranch b) {
  switch (b) {
    case ProofBranch::w_large: return "w-large";
    case ProofBranch::var_below_sqrt_w: return "var-below-sqrt-w";
    case ProofBranch::var_below_100w: return "var-below-100w";
    case ProofBranch::main_case: return "main";
  }
  return "?";
}

namespace {

constexpr double kE = std::numbers::e;
constexpr double kSqrtPi = 1.7724538509055160273;

struct StepSink {
  std::vector<ProofStep> steps;
  double tol;
  void add(const char* name, double lhs, double rhs) {
    steps.push_back({name, lhs, rhs, rhs - lhs, leq_tol(lhs, rhs, tol)});
  }
};

}  // namespace

ProofTrace proof_chain_trace(const BooleanFunction& f, const BiasedMeasure& m,
                             double tol) {
  Statistics st = statistics(f, m);
  if (!(st.variance > 0.0))
    throw std::invalid_argument("trace requires a nonconstant function");
  double var = st.variance;
  double a = st.a;
  double w_stat = influences(f, m).W;
  double grad1 = boundary_profile(f, m).e_grad;
  double r = std::max(m.p, m.q);
  double target = std::sqrt(std::log1p(kE / w_stat));  // sqrt(log(1+e/W))

  ProofTrace tr;
  tr.W = w_stat;
  tr.var = var;
  tr.e_grad = grad1;
  tr.epsilon = tr.t = tr.theta = 0.0;
  StepSink sink{{}, tol};

  // isoperimetric route shared by the two middle branches, via
  // h = (1+f)/2 with E h = a and E|grad h| = E|grad f|/2
  auto isoperimetric_route = [&] {
    double c_log = log_profile_constant();
    double profile = gaussian_profile(a);
    sink.add("halfspace-profile-upper", profile,
             std::numbers::sqrt2 * r * grad1);
    double mass_log = -std::log(a) - std::log1p(-a);  // log(1/(a(1-a)))
    sink.add("profile-log-lower",
             c_log * a * (1.0 - a) * std::sqrt(mass_log), profile);
    sink.add("var-identity-log", 1.0 - std::log(var), mass_log);
    double c_explicit = c_log / (4.0 * std::numbers::sqrt2 * r);
    sink.add("explicit-logvar",
             c_explicit * var * std::sqrt(1.0 - std::log(var)), grad1);
    return c_explicit;
  };

  if (w_stat >= 0.01) {
    tr.branch = ProofBranch::w_large;
    sink.add("mean-drop-limit", var, 2.0 * r * kSqrtPi * grad1);
    sink.add("log-ceiling", std::log1p(kE / w_stat), std::log1p(100.0 * kE));
    tr.final_constant =
        1.0 / (2.0 * r * kSqrtPi * std::sqrt(std::log1p(100.0 * kE)));
    sink.add("assemble", tr.final_constant * var * target, grad1);
  } else if (var < std::sqrt(w_stat)) {
    tr.branch = ProofBranch::var_below_sqrt_w;
    double c_explicit = isoperimetric_route();
    sink.add("branch-premise", var, std::sqrt(w_stat));
    double half_log_w = 1.0 + 0.5 * std::log(1.0 / w_stat);
    sink.add("half-log-w", half_log_w, 1.0 - std::log(var));
    sink.add("target-log", 0.5 * std::log1p(kE / w_stat), half_log_w);
    tr.final_constant = c_explicit / std::numbers::sqrt2;
    sink.add("assemble", tr.final_constant * var * target, grad1);
  } else if (var < 100.0 * w_stat) {
    tr.branch = ProofBranch::var_below_100w;
    double c_explicit = isoperimetric_route();
    sink.add("branch-premise", var, 100.0 * w_stat);
    double log_100w = 1.0 - std::log(100.0 * w_stat);  // log(e/(100W))
    sink.add("log-monotone", log_100w, 1.0 - std::log(var));
    sink.add("target-log", 0.17 * std::log1p(kE / w_stat), log_100w);
    tr.final_constant = c_explicit * std::sqrt(0.17);
    sink.add("assemble", tr.final_constant * var * target, grad1);
  } else {
    tr.branch = ProofBranch::main_case;
    double eps = 1.0 / std::log(var / w_stat);
    // eps = 1 - e^{-2kt} for the mixing rate k = 4pq = 1/K of theta(t)
    double t = -std::log1p(-eps) * m.K / 2.0;
    double theta = noise_exponent(t, m);
    tr.epsilon = eps;
    tr.t = t;
    tr.theta = theta;

    sink.add("epsilon-window", eps, 1.0 / std::log(100.0));
    sink.add("theta-closed-form", std::fabs(theta - eps / (2.0 - eps)), 0.0);
    sink.add("power-identity",
             std::fabs(std::pow(w_stat / var, theta) -
                       std::exp(1.0 / (eps - 2.0))),
             0.0);

    NoiseParams np(t, m);
    RealFunction pf = apply_noise(RealFunction::from_boolean(f), np);
    double var_pt = moments(pf, m).variance;
    double rate = -std::expm1(-2.0 * t);  // 1 - e^{-2t}
    sink.add("mean-drop-at-t", var - var_pt,
             2.0 * r * std::sqrt(std::numbers::pi * rate) * grad1);
    sink.add("interpolation-at-t", var_pt,
             std::pow(w_stat, theta) * std::pow(var, 1.0 - theta));
    double drop = var * (1.0 - std::exp(1.0 / (eps - 2.0)));
    sink.add("combine", drop,
             2.0 * r * std::sqrt(std::numbers::pi * rate) * grad1);
    // 1 - e^{-2t} = 1 - (1-eps)^K <= K eps by Bernoulli, K >= 1
    sink.add("noise-rate-by-k", rate, m.K * eps);
    double c24 = (1.0 - std::exp(-0.5)) / std::numbers::sqrt2;
    sink.add("closing-minimum", c24 * std::sqrt(1.0 + 1.0 / eps),
             (1.0 - std::exp(1.0 / (eps - 2.0))) / std::sqrt(eps));
    sink.add("sqrt-w-premise", std::sqrt(w_stat), var);
    double half_log_w = 1.0 + 0.5 * std::log(1.0 / w_stat);
    sink.add("half-log-w", half_log_w, 1.0 + std::log(var / w_stat));
    sink.add("target-log", 0.5 * std::log1p(kE / w_stat), half_log_w);
    tr.final_constant =
        c24 / (2.0 * std::numbers::sqrt2 * r * kSqrtPi * std::sqrt(m.K));
    sink.add("assemble", tr.final_constant * var * target, grad1);
  }

  tr.steps = std::move(sink.steps);
  tr.all_pass = true;
  for (const auto& s : tr.steps) tr.all_pass = tr.all_pass && s.pass;
  return tr;
}

}  // namespace hcube
