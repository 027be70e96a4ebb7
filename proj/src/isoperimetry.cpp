#include "hcube/isoperimetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hcube/bits.hpp"
#include "hcube/kernels.hpp"
#include "hcube/normal.hpp"
#include "hcube/semigroup.hpp"

namespace hcube {

double gaussian_profile(double x) {
  if (!(x >= 0.0) || !(x <= 1.0))
    throw std::invalid_argument("profile argument outside [0,1]");
  if (x > 0.5) x = 1.0 - x;
  if (x == 0.0) return 0.0;
  if (x < 1e-300) return x * std::sqrt(-2.0 * std::log(x));
  return norm_pdf(norm_quantile(x));
}

namespace {

// I(x) relative to x(1-x) sqrt(log(1/(x(1-x)))), for x in (0, 1/2]
double log_bound_ratio(double x) {
  double l = -std::log(x) - std::log1p(-x);
  return gaussian_profile(x) / (x * (1.0 - x) * std::sqrt(l));
}

double calibrate_log_constant() {
  double best = std::numeric_limits<double>::infinity();
  double best_x = 0.25;
  auto consider = [&](double x) {
    double r = log_bound_ratio(x);
    if (r < best) {
      best = r;
      best_x = x;
    }
  };
  // log-spaced sweep down to the asymptotic regime
  for (double e = 0.30103; e <= 300.0; e += 0.05) consider(std::pow(10.0, -e));
  // fine linear sweep where the minimum actually lives
  double lo = 1e-3, hi = 0.5, step = 1e-5;
  for (double x = lo; x <= hi; x += step) consider(x);
  // ternary refinement around the best sample
  double a = std::max(best_x - step, 1e-6), b = std::min(best_x + step, 0.5);
  for (int it = 0; it < 200; ++it) {
    double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
    if (log_bound_ratio(m1) < log_bound_ratio(m2))
      b = m2;
    else
      a = m1;
  }
  consider(0.5 * (a + b));
  return best;
}

}  // namespace

double log_profile_constant() {
  static const double c = calibrate_log_constant();
  return c;
}

ProfileBounds profile_lower_bounds(double x) {
  ProfileBounds pb;
  pb.x = x;
  pb.value = gaussian_profile(x);
  double d = 0.5 - x;
  pb.quadratic = std::sqrt(2.0 / std::numbers::pi) * (0.5 - 2.0 * d * d);
  if (x == 0.0 || x == 1.0) {
    pb.log_lower = 0.0;
  } else {
    double l = -std::log(x) - std::log1p(-x);
    pb.log_lower = log_profile_constant() * x * (1.0 - x) * std::sqrt(l);
  }
  return pb;
}

InequalityReport bobkov_gotze_check(const BooleanFunction& h,
                                    std::span<const double> biases,
                                    double tol) {
  if (biases.size() != static_cast<std::size_t>(h.n()))
    throw std::invalid_argument("one bias per coordinate required");
  for (double b : biases)
    if (!(b > 0.0) || !(b < 1.0))
      throw std::invalid_argument("biases must lie in (0,1)");

  std::size_t size = h.size();
  std::vector<double> w(size, 1.0);
  for (int j = 0; j < h.n(); ++j) {
    for (std::size_t x = 0; x < size; ++x)
      w[x] *= ((x >> j) & 1u) ? biases[j] : 1.0 - biases[j];
  }

  const auto& k = kern::active();
  double mean = k.masked_sum(w.data(), h.words(), size);

  std::vector<double> varsum(size, 0.0);
  std::vector<std::uint64_t> d(h.word_count());
  for (int j = 0; j < h.n(); ++j) {
    bits::coord_diff(h.words(), d.data(), j, d.size());
    double vj = biases[j] * (1.0 - biases[j]);
    for (std::size_t wd = 0; wd < d.size(); ++wd) {
      std::uint64_t bitsw = d[wd];
      while (bitsw) {
        int b = std::countr_zero(bitsw);
        varsum[(wd << 6) | b] += vj;
        bitsw &= bitsw - 1;
      }
    }
  }
  double rhs = std::numbers::sqrt2 * k.dot_sqrt(w.data(), varsum.data(), size);
  double lhs = gaussian_profile(std::clamp(mean, 0.0, 1.0));

  InequalityReport r;
  r.law = "bobkov-gotze";
  r.n = h.n();
  r.p = biases[0];
  r.lhs = lhs;
  r.rhs_unit = rhs;
  r.ratio = rhs > 0.0 ? lhs / rhs : 0.0;
  r.tol = tol;
  r.pass = leq_tol(lhs, rhs, tol);
  r.witness_hex = h.to_text();
  r.add_param("mean", mean);
  for (int j = 0; j < h.n(); ++j)
    r.add_param("bias_" + std::to_string(j), biases[j]);
  return r;
}

InequalityReport local_bobkov_discrete(const BooleanFunction& h,
                                       const BiasedMeasure& m, double t,
                                       double tol) {
  NoiseParams np(t, m);
  RealFunction h01(h.n());
  for (std::size_t x = 0; x < h.size(); ++x) h01[x] = h.bit(x) ? 1.0 : 0.0;
  std::vector<double> s = sensitivity_table(h);
  RealFunction grad(h.n());
  for (std::size_t x = 0; x < h.size(); ++x) grad[x] = 0.5 * std::sqrt(s[x]);

  RealFunction ph = apply_noise(h01, np);
  RealFunction pg = apply_noise(grad, np);
  double factor = 2.0 * std::numbers::sqrt2 * std::max(m.p, m.q) *
                  std::sqrt(-std::expm1(-2.0 * t));

  bool all_pass = true;
  double worst_slack = std::numeric_limits<double>::infinity();
  std::size_t worst = 0;
  double worst_lhs = 0.0, worst_rhs = 0.0;
  for (std::size_t x = 0; x < h.size(); ++x) {
    double lhs = gaussian_profile(std::clamp(ph[x], 0.0, 1.0));
    double rhs = factor * pg[x];
    all_pass = all_pass && leq_tol(lhs, rhs, tol);
    double slack = rhs - lhs;
    if (slack < worst_slack) {
      worst_slack = slack;
      worst = x;
      worst_lhs = lhs;
      worst_rhs = rhs;
    }
  }

  InequalityReport r;
  r.law = "local-bobkov";
  r.n = h.n();
  r.p = m.p;
  r.lhs = worst_lhs;
  r.rhs_unit = worst_rhs;
  r.ratio = worst_rhs > 0.0 ? worst_lhs / worst_rhs : 0.0;
  r.tol = tol;
  r.pass = all_pass;
  r.witness_hex = h.to_text();
  r.add_param("t", t);
  r.add_param("worst_x", static_cast<double>(worst));
  r.add_param("slack", worst_slack);
  return r;
}

InequalityReport verify_variance_drop(const BooleanFunction& f,
                                      const BiasedMeasure& m, double t,
                                      double tol) {
  NoiseParams np(t, m);
  Statistics st = statistics(f, m);
  RealFunction pf = apply_noise(RealFunction::from_boolean(f), np);
  Moments pm = moments(pf, m);
  double lhs = st.variance - pm.variance;
  double grad1 = boundary_profile(f, m).e_grad;
  double rhs = 2.0 * std::max(m.p, m.q) *
               std::sqrt(std::numbers::pi * -std::expm1(-2.0 * t)) * grad1;

  // for Boolean f the drop equals 1 - E[(P_t f)^2]
  WeightTable w(f.n(), m);
  double second = kern::active().dot_sq(w.data(), pf.data(), pf.size());
  double identity_gap = std::fabs(lhs - (1.0 - second));

  InequalityReport r;
  r.law = "variance-drop";
  r.n = f.n();
  r.p = m.p;
  r.lhs = lhs;
  r.rhs_unit = rhs;
  r.ratio = rhs > 0.0 ? lhs / rhs : 0.0;
  r.tol = tol;
  r.pass = leq_tol(lhs, rhs, tol) && identity_gap <= 1e-12;
  r.witness_hex = f.to_text();
  r.add_param("t", t);
  r.add_param("e_grad", grad1);
  r.add_param("identity_gap", identity_gap);
  return r;
}

}  // namespace hcube
