#pragma once

#include "hcube/boolean_core.hpp"
#include "hcube/report.hpp"

namespace hcube {

// ||g||_r under the product measure, r >= 1.
double lp_norm(const RealFunction& g, const BiasedMeasure& m, double r);

// A time with a guaranteed ||P_t g||_2 <= ||g||_r for all g:
// t*(r) = (K/2) log(1/(r-1)) with K = 1/(4pq), for 1 < r <= 2. This is what
// the two-point log-Sobolev constant 1/(2pq) yields via Gross's equivalence;
// it is sufficient for every bias (and sharp at p = 1/2), while the shorter
// 2pq log(1/(r-1)) fails for p != 1/2 already on near-constant g at n = 1.
double hypercontractive_time(double r, const BiasedMeasure& m);

// Checks ||P_t g||_2 <= ||g||_r at t = t*(r), plus monotone slack at 2t*.
InequalityReport verify_hypercontractivity(const RealFunction& g,
                                           const BiasedMeasure& m, double r,
                                           double tol = kDefaultTol);

// Smallest t with ||P_t g||_2 <= ||g||_r for this particular g, by
// bisection on [0, t*(r)].
double minimal_hypercontractive_time(const RealFunction& g,
                                     const BiasedMeasure& m, double r);

// Entropy bound Ent(g^2) <= (1/(2pq)) sum_j E[Var_{x_j} g] for g >= 0.
// At n = 1 this is the exact two-point log-Sobolev inequality; for
// n > 1 it is the per-coordinate extension (see LsiResult::note).
struct LsiResult {
  double entropy;          // Ent(g^2) with 0 log 0 = 0
  double dirichlet_bound;  // (1/(2pq)) sum_j E Var_{x_j} g
  double deficit;          // dirichlet_bound - entropy
  const char* note;        // "exact" at n = 1, "extension" otherwise
};

LsiResult lsi_check(const RealFunction& g, const BiasedMeasure& m);

// One-dimensional potential calculus for f = 1 + s x on the two-point
// space: psi(s) = Ent_p(f^2) - Var_p(f)/(2pq) and the auxiliary
// phi(p) = 4p log(1+s) + 4q log(1-s) - 2 log M with
// M = p(1+s)^2 + q(1-s)^2. psi <= 0 and psi'' <= phi <= 0 drive the
// two-point inequality. Derivatives of psi are in s, of phi in p.
struct AppendixCalculus {
  double psi;
  double psi_d1;
  double psi_d2;
  double phi;
  double phi_d1;
  double phi_d2;
};

// s in [-1,1], p in [0,1]; the corners (s=1,p=0) and (s=-1,p=1) are
// outside the domain.
AppendixCalculus appendix_calculus(double s, double p);

}  // namespace hcube
