#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace hcube {

// Outcome of checking one inequality instance, in the normal form
// lhs >= C * rhs_unit (or lhs <= rhs_unit for upper bounds; the law
// name fixes the orientation). ratio = lhs / rhs_unit where defined.
struct InequalityReport {
  std::string law;
  int n = 0;
  double p = 0.5;
  double lhs = 0.0;
  double rhs_unit = 0.0;
  double ratio = 0.0;
  bool pass = false;
  std::string witness_hex;  // truth-table text of the function checked
  double tol = 1e-9;
  // extra named values (t, r, slack, ...); kept ordered for stable output
  std::vector<std::pair<std::string, double>> params;
  std::string note;  // e.g. marks empirically calibrated constants

  void add_param(std::string key, double value) {
    params.emplace_back(std::move(key), value);
  }
};

inline constexpr double kDefaultTol = 1e-9;

// lhs <= rhs up to mixed absolute/relative tolerance.
inline bool leq_tol(double lhs, double rhs, double tol = kDefaultTol) {
  return lhs <= rhs + tol * std::max(1.0, std::fabs(rhs));
}

inline bool geq_tol(double lhs, double rhs, double tol = kDefaultTol) {
  return leq_tol(rhs, lhs, tol);
}

}  // namespace hcube
