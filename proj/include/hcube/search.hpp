#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hcube/boolean_core.hpp"

namespace hcube {

// Minimizes lhs/rhs_unit of a gradient law over truth tables, either
// exhaustively (n <= 4, optionally one representative per orbit under
// coordinate relabeling and global sign flip, both of which preserve
// the ratio) or over seeded random tables. Ties break toward the
// lexicographically smallest table, so the result is independent of
// how shards are scheduled.
struct SearchOptions {
  bool exhaustive = true;
  std::uint64_t samples = 0;  // random mode sample count
  std::uint64_t seed = 1;
  bool dedup = true;  // exhaustive mode only
};

struct SearchResult {
  std::string law;
  int n = 0;
  double p = 0.5;
  double min_ratio = 0.0;
  std::string argmin_hex;
  std::uint64_t evaluated = 0;  // candidates scored
  std::uint64_t excluded = 0;   // degenerate (Var = 0) candidates skipped
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// law is "eldan-gross" or "talagrand-logvar".
SearchResult search_extremal(int n, const BiasedMeasure& m,
                             std::string_view law, const SearchOptions& opt);

}  // namespace hcube
