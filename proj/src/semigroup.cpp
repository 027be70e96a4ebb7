#include "hcube/semigroup.hpp"

#include <cmath>
#include <stdexcept>

#include "hcube/kernels.hpp"

namespace hcube {

NoiseParams::NoiseParams(double time, const BiasedMeasure& measure)
    : t(time), m(measure) {
  if (std::isnan(time) || time < 0.0)
    throw std::invalid_argument("noise time must be >= 0");
}

double noise_exponent(double t, const BiasedMeasure& m) {
  return std::tanh(t / m.K);
}

RealFunction apply_noise(const RealFunction& g, const NoiseParams& np) {
  RealFunction out = g;
  double a = std::exp(-np.t);
  double b = -std::expm1(-np.t);
  const double c[4] = {a + b * np.m.q, b * np.m.p, b * np.m.q,
                       a + b * np.m.p};
  const auto& k = kern::active();
  for (int j = 0; j < g.n(); ++j)
    k.mix_pass(out.data(), out.size(), std::size_t{1} << j, c);
  return out;
}

RealFunction coordinate_average(const RealFunction& g, const BiasedMeasure& m,
                                int j) {
  if (j < 0 || j >= g.n()) throw std::invalid_argument("coordinate out of range");
  RealFunction out = g;
  const double c[4] = {m.q, m.p, m.q, m.p};
  kern::active().mix_pass(out.data(), out.size(), std::size_t{1} << j, c);
  return out;
}

MartingaleDecomposition martingale_decompose(const RealFunction& g,
                                             const BiasedMeasure& m) {
  MartingaleDecomposition md;
  md.levels.reserve(g.n() + 1);
  md.levels.push_back(g);
  WeightTable w(g.n(), m);
  const auto& k = kern::active();
  for (int j = 0; j < g.n(); ++j) {
    md.levels.push_back(coordinate_average(md.levels.back(), m, j));
    const RealFunction& prev = md.levels[j];
    const RealFunction& next = md.levels[j + 1];
    RealFunction diff(g.n());
    for (std::size_t x = 0; x < diff.size(); ++x) diff[x] = prev[x] - next[x];
    md.gap_sq.push_back(k.dot_sq(w.data(), diff.data(), diff.size()));
  }
  return md;
}

std::vector<double> default_time_grid() {
  std::vector<double> grid(25);
  for (int i = 0; i < 25; ++i)
    grid[i] = std::pow(10.0, -3.0 + 4.0 * i / 24.0);
  return grid;
}

std::vector<InequalityReport> verify_variance_decay(
    const RealFunction& g, const BiasedMeasure& m,
    std::span<const double> t_grid, double tol) {
  Moments mom = moments(g, m);
  Influences infl = influences(g, m);
  double var = mom.variance;
  double w_stat = infl.W;

  std::vector<RealFunction> averaged;
  averaged.reserve(g.n());
  for (int j = 0; j < g.n(); ++j)
    averaged.push_back(coordinate_average(g, m, j));

  std::vector<InequalityReport> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    NoiseParams np(t, m);
    RealFunction pt = apply_noise(g, np);
    double var_pt = moments(pt, m).variance;
    double theta = noise_exponent(t, m);
    double rhs = (var <= 0.0 || w_stat <= 0.0)
                     ? 0.0
                     : std::pow(w_stat, theta) * std::pow(var, 1.0 - theta);

    double comm_gap = 0.0;
    for (int j = 0; j < g.n(); ++j) {
      RealFunction lhs_fn = coordinate_average(pt, m, j);
      RealFunction rhs_fn = apply_noise(averaged[j], np);
      for (std::size_t x = 0; x < lhs_fn.size(); ++x)
        comm_gap = std::max(comm_gap, std::fabs(lhs_fn[x] - rhs_fn[x]));
    }

    InequalityReport r;
    r.law = "variance-decay";
    r.n = g.n();
    r.p = m.p;
    r.lhs = var_pt;
    r.rhs_unit = rhs;
    r.ratio = rhs > 0.0 ? var_pt / rhs : 0.0;
    r.tol = tol;
    r.pass = leq_tol(var_pt, rhs, tol) && comm_gap <= 1e-12;
    r.add_param("t", t);
    r.add_param("theta", theta);
    r.add_param("W", w_stat);
    r.add_param("var", var);
    r.add_param("commutation_gap", comm_gap);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<InequalityReport> verify_variance_decay(
    const BooleanFunction& f, const BiasedMeasure& m,
    std::span<const double> t_grid, double tol) {
  auto out = verify_variance_decay(RealFunction::from_boolean(f), m, t_grid, tol);
  for (auto& r : out) r.witness_hex = f.to_text();
  return out;
}

}  // namespace hcube
