#pragma once

#include <span>
#include <vector>

#include "hcube/boolean_core.hpp"
#include "hcube/report.hpp"

namespace hcube {

// Noise semigroup P_t = (e^{-t} id + (1-e^{-t}) E)^{tensor n}: each
// coordinate is independently resampled from the measure with
// probability 1-e^{-t}. t = infinity collapses to the mean.
struct NoiseParams {
  double t;
  BiasedMeasure m;
  NoiseParams(double time, const BiasedMeasure& measure);
};

// Mixing exponent of the variance-decay bound. The two-point log-Sobolev
// constant 1/(2pq) gives ||P_t g||_2 <= ||g||_{1+exp(-8pq t)}, so
// theta(t) = (1 - e^{-2kt}) / (1 + e^{-2kt}) = tanh(kt) with k = 4pq = 1/K.
// (The rate is k = 4pq, not K = 1/(4pq): with K the bound fails for p != 1/2,
// e.g. the n = 1 one-coordinate function at p = 0.1.)
double noise_exponent(double t, const BiasedMeasure& m);

RealFunction apply_noise(const RealFunction& g, const NoiseParams& np);

// E_{x_j} g: averages out coordinate j (j in [0, n)).
RealFunction coordinate_average(const RealFunction& g,
                                const BiasedMeasure& m, int j);

// levels[j] = E_{x_0..x_{j-1}} g, so levels[0] = g and levels[n] is
// constant; successive squared gaps sum to Var(g).
struct MartingaleDecomposition {
  std::vector<RealFunction> levels;
  std::vector<double> gap_sq;  // ||levels[j] - levels[j+1]||_2^2
};

MartingaleDecomposition martingale_decompose(const RealFunction& g,
                                             const BiasedMeasure& m);

// 25 log-spaced times in [1e-3, 10].
std::vector<double> default_time_grid();

// Checks Var(P_t g) <= W(g)^theta Var(g)^(1-theta) on the grid, plus the
// commutation E_{x_j} P_t = P_t E_{x_j} within 1e-12 at every grid time.
std::vector<InequalityReport> verify_variance_decay(
    const RealFunction& g, const BiasedMeasure& m,
    std::span<const double> t_grid, double tol = kDefaultTol);

std::vector<InequalityReport> verify_variance_decay(
    const BooleanFunction& f, const BiasedMeasure& m,
    std::span<const double> t_grid, double tol = kDefaultTol);

}  // namespace hcube
