#pragma once

#include <string>
#include <vector>

#include "hcube/boolean_core.hpp"
#include "hcube/report.hpp"

namespace hcube {

// The lower bound E|grad f| >= C Var sqrt(log(1 + e/W)) is proved by a
// four-way case split; the tracer replays the branch taken for a
// concrete f, evaluating every intermediate inequality numerically.
enum class ProofBranch {
  w_large,          // W >= 1/100: mean-drop bound alone suffices
  var_below_sqrt_w, // Var < sqrt(W): isoperimetric route
  var_below_100w,   // sqrt(W) <= Var < 100 W: isoperimetric route
  main_case,        // Var >= 100 W: semigroup interpolation
};

const char* to_string(ProofBranch b);

// One replayed inequality, normalized to lhs <= rhs.
struct ProofStep {
  std::string name;
  double lhs;
  double rhs;
  double slack;  // rhs - lhs
  bool pass;
};

struct ProofTrace {
  ProofBranch branch;
  double W;
  double var;
  double e_grad;
  double epsilon;  // main case only, else 0
  double t;        // main case only, else 0
  double theta;    // main case only, else 0
  double final_constant;  // the C this branch certifies
  std::vector<ProofStep> steps;
  bool all_pass;
};

// Requires Var(f) > 0.
ProofTrace proof_chain_trace(const BooleanFunction& f, const BiasedMeasure& m,
                             double tol = kDefaultTol);

}  // namespace hcube
