#include "hcube/gaussian.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hcube/normal.hpp"

namespace hcube {

HalfspaceStats halfspace_stats(const Halfspace& h, int n) {
  if (n < 1 || h.coord < 0 || h.coord >= n)
    throw std::invalid_argument("halfspace coordinate out of range");
  HalfspaceStats st;
  st.mass_plus = norm_cdf(h.a);
  st.variance = 4.0 * st.mass_plus * (1.0 - st.mass_plus);
  st.e_grad = 2.0 * norm_pdf(h.a);
  st.influences.assign(n, 0.0);
  st.influences[h.coord] = st.variance;
  st.W = st.variance * st.variance;
  return st;
}

GaussHermite::GaussHermite(int count) {
  if (count < 1) throw std::invalid_argument("node count must be >= 1");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(count, count);
  for (int k = 1; k < count; ++k) {
    double beta = std::sqrt(k / 2.0);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      jacobi, Eigen::EigenvaluesOnly);
  nodes.resize(count);
  weights.resize(count);
  total_weights.resize(count);
  // Christoffel form of the weights: 1/w_i = sum_k p_k(x_i)^2 over the
  // orthonormal polynomials. Folding e^{-x^2/2} into the recurrence
  // keeps every term in range, unlike the raw eigenvector components,
  // whose extreme entries underflow and poison w_i e^{x_i^2}.
  const double psi0_scale = std::pow(std::numbers::pi, -0.25);
  for (int i = 0; i < count; ++i) {
    double x = solver.eigenvalues()(i);
    nodes[i] = x;
    double prev = 0.0;
    double cur = psi0_scale * std::exp(-0.5 * x * x);
    double sum_sq = cur * cur;
    for (int k = 1; k < count; ++k) {
      double next =
          std::sqrt(2.0 / k) * x * cur - std::sqrt((k - 1.0) / k) * prev;
      prev = cur;
      cur = next;
      sum_sq += cur * cur;
    }
    total_weights[i] = 1.0 / sum_sq;
    weights[i] = std::exp(-x * x) / sum_sq;
  }
}

namespace {

double sech_sq(double u) {
  double c = std::cosh(u);
  return 1.0 / (c * c);
}

}  // namespace

double smoothed_gradient_oracle(const Halfspace& h, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  static const GaussHermite rule(201);
  // integral of sech^2(u) phi(a + eps u) du after u = (z - a)/eps
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.total_weights[i] * sech_sq(rule.nodes[i]) *
           norm_pdf(h.a + eps * rule.nodes[i]);
  return acc;
}

double smoothed_gradient_trapezoid(const Halfspace& h, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const double lo = h.a - 40.0 * eps, hi = h.a + 40.0 * eps;
  auto g = [&](double z) {
    return sech_sq((h.a - z) / eps) / eps * norm_pdf(z);
  };
  std::size_t n = 64;
  double step = (hi - lo) / static_cast<double>(n);
  double acc = 0.5 * (g(lo) + g(hi));
  for (std::size_t i = 1; i < n; ++i) acc += g(lo + step * i);
  double prev = acc * step;
  for (int round = 0; round < 16; ++round) {
    // add midpoints, halving the step
    double mids = 0.0;
    for (std::size_t i = 0; i < n; ++i) mids += g(lo + step * (i + 0.5));
    n *= 2;
    step *= 0.5;
    double cur = prev * 0.5 + mids * step;
    if (std::fabs(cur - prev) <= 1e-13 * std::max(1.0, std::fabs(cur)))
      return cur;
    prev = cur;
  }
  return prev;
}

std::vector<InequalityReport> verify_ctns(std::span<const double> thresholds,
                                          double C3, double C4, double tol) {
  std::vector<InequalityReport> out;
  out.reserve(3 * thresholds.size());
  const double root_half_pi = std::sqrt(std::numbers::pi / 2.0);
  for (double a : thresholds) {
    HalfspaceStats st = halfspace_stats({0, a}, 1);
    double var = st.variance, grad = st.e_grad;

    InequalityReport r13;
    r13.law = "gauss-variance-grad";
    r13.n = 1;
    r13.p = 0.5;
    r13.lhs = var;
    r13.rhs_unit = root_half_pi * grad;
    r13.ratio = r13.rhs_unit > 0.0 ? var / r13.rhs_unit : 0.0;
    r13.tol = tol;
    r13.pass = leq_tol(var, r13.rhs_unit, tol);
    r13.note = "gauss space, coordinate halfspace";
    r13.add_param("a", a);
    out.push_back(std::move(r13));

    auto gradient_law = [&](const char* law, double rhs_unit, double C) {
      InequalityReport r;
      r.law = law;
      r.n = 1;
      r.p = 0.5;
      r.lhs = grad;
      r.rhs_unit = rhs_unit;
      r.ratio = rhs_unit > 0.0 ? grad / rhs_unit : 0.0;
      r.tol = tol;
      if (C > 0.0)
        r.pass = leq_tol(C * rhs_unit, grad, tol);
      else
        r.pass = rhs_unit > 0.0 ? r.ratio > 0.0 : true;
      r.note = "gauss space, coordinate halfspace";
      r.add_param("a", a);
      r.add_param("var", var);
      out.push_back(std::move(r));
    };
    gradient_law("gauss-logvar",
                 var > 0.0 ? var * std::sqrt(1.0 - std::log(var)) : 0.0, C3);
    gradient_law("gauss-eldan-gross",
                 var > 0.0
                     ? var * std::sqrt(std::log1p(std::numbers::e / st.W))
                     : 0.0,
                 C4);
  }
  return out;
}

}  // namespace hcube
