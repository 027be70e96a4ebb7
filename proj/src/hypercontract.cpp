#include "hcube/hypercontract.hpp"

#include <cmath>
#include <stdexcept>

#include "hcube/kernels.hpp"
#include "hcube/semigroup.hpp"

namespace hcube {

namespace {

inline double tlogt(double t) { return t > 0.0 ? t * std::log(t) : 0.0; }

// c * log(t) with the 0 log 0 = 0 convention applied to the coefficient
inline double clog(double c, double t) { return c != 0.0 ? c * std::log(t) : 0.0; }

}  // namespace

double lp_norm(const RealFunction& g, const BiasedMeasure& m, double r) {
  if (!(r >= 1.0)) throw std::invalid_argument("norm exponent must be >= 1");
  WeightTable w(g.n(), m);
  const auto& k = kern::active();
  if (r == 1.0) return k.dot_abs(w.data(), g.data(), g.size());
  if (r == 2.0) return std::sqrt(k.dot_sq(w.data(), g.data(), g.size()));
  double acc = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x)
    acc += w[x] * std::pow(std::fabs(g[x]), r);
  return std::pow(acc, 1.0 / r);
}

double hypercontractive_time(double r, const BiasedMeasure& m) {
  if (!(r > 1.0) || !(r <= 2.0))
    throw std::invalid_argument("exponent must lie in (1,2]");
  return 0.5 * m.K * std::log(1.0 / (r - 1.0));
}

InequalityReport verify_hypercontractivity(const RealFunction& g,
                                           const BiasedMeasure& m, double r,
                                           double tol) {
  double t_star = hypercontractive_time(r, m);
  double rhs = lp_norm(g, m, r);
  double lhs = lp_norm(apply_noise(g, NoiseParams(t_star, m)), m, 2.0);
  double lhs2 = lp_norm(apply_noise(g, NoiseParams(2.0 * t_star, m)), m, 2.0);

  InequalityReport rep;
  rep.law = "hypercontractivity";
  rep.n = g.n();
  rep.p = m.p;
  rep.lhs = lhs;
  rep.rhs_unit = rhs;
  rep.ratio = rhs > 0.0 ? lhs / rhs : 0.0;
  rep.tol = tol;
  rep.pass = leq_tol(lhs, rhs, tol) && leq_tol(lhs2, lhs, tol);
  rep.add_param("r", r);
  rep.add_param("t_star", t_star);
  rep.add_param("norm_at_2t", lhs2);
  return rep;
}

double minimal_hypercontractive_time(const RealFunction& g,
                                     const BiasedMeasure& m, double r) {
  double rhs = lp_norm(g, m, r);
  auto ok = [&](double t) {
    return lp_norm(apply_noise(g, NoiseParams(t, m)), m, 2.0) <= rhs;
  };
  if (ok(0.0)) return 0.0;
  double lo = 0.0, hi = hypercontractive_time(r, m);
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (lo + hi);
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

LsiResult lsi_check(const RealFunction& g, const BiasedMeasure& m) {
  for (std::size_t x = 0; x < g.size(); ++x)
    if (g[x] < 0.0) throw std::invalid_argument("function must be >= 0");

  WeightTable w(g.n(), m);
  double second = 0.0, ent_raw = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    double sq = g[x] * g[x];
    second += w[x] * sq;
    ent_raw += w[x] * tlogt(sq);
  }
  double entropy = ent_raw - tlogt(second);

  double dirichlet = 0.0;
  for (int j = 0; j < g.n(); ++j) {
    const std::size_t stride = std::size_t{1} << j;
    for (std::size_t base = 0; base < g.size(); base += 2 * stride) {
      for (std::size_t i = 0; i < stride; ++i) {
        std::size_t xl = base + i, xh = base + stride + i;
        double d = g[xh] - g[xl];
        dirichlet += (w[xl] + w[xh]) * m.p * m.q * d * d;
      }
    }
  }
  double bound = dirichlet / (2.0 * m.p * m.q);
  return {entropy, bound, bound - entropy, g.n() == 1 ? "exact" : "extension"};
}

AppendixCalculus appendix_calculus(double s, double p) {
  if (!(s >= -1.0) || !(s <= 1.0)) throw std::invalid_argument("s outside [-1,1]");
  if (!(p >= 0.0) || !(p <= 1.0)) throw std::invalid_argument("p outside [0,1]");
  double q = 1.0 - p;
  double u = (1.0 + s) * (1.0 + s);
  double v = (1.0 - s) * (1.0 - s);
  double M = p * u + q * v;

  AppendixCalculus c;
  c.psi = p * tlogt(u) + q * tlogt(v) - tlogt(M) - 2.0 * s * s;
  c.psi_d1 = 4.0 * p * tlogt(1.0 + s) - 4.0 * q * tlogt(1.0 - s) -
             2.0 * (s + p - q) * std::log(M) - 4.0 * s;
  c.psi_d2 = clog(4.0 * p, 1.0 + s) + clog(4.0 * q, 1.0 - s) -
             2.0 * std::log(M) - 4.0 * (s + p - q) * (s + p - q) / M;
  c.phi = clog(4.0 * p, 1.0 + s) + clog(4.0 * q, 1.0 - s) - 2.0 * std::log(M);
  c.phi_d1 = 4.0 * std::log(1.0 + s) - 4.0 * std::log(1.0 - s) - 8.0 * s / M;
  c.phi_d2 = 32.0 * s * s / (M * M);
  return c;
}

}  // namespace hcube
