#include "hcube/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hcube/inequalities.hpp"
#include "hcube/parallel.hpp"

namespace hcube {

namespace {

enum class Law { eldan_gross, talagrand_logvar };

Law parse_law(std::string_view law) {
  if (law == "eldan-gross") return Law::eldan_gross;
  if (law == "talagrand-logvar") return Law::talagrand_logvar;
  throw std::invalid_argument("unknown law for search");
}

// ratio of the law for one candidate; NaN marks a degenerate table
double law_ratio(Law law, const BooleanFunction& f, const BiasedMeasure& m) {
  Statistics st = statistics(f, m);
  if (!(st.variance > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  double grad1 = boundary_profile(f, m).e_grad;
  double rhs;
  if (law == Law::eldan_gross) {
    double w_stat = influences(f, m).W;
    rhs = st.variance * std::sqrt(std::log1p(std::numbers::e / w_stat));
  } else {
    rhs = st.variance * std::sqrt(1.0 - std::log(st.variance));
  }
  return grad1 / rhs;
}

// index remaps realizing every coordinate relabeling of an n <= 4 cube
std::vector<std::vector<int>> orbit_remaps(int n) {
  std::vector<int> perm(n);
  for (int j = 0; j < n; ++j) perm[j] = j;
  std::vector<std::vector<int>> maps;
  do {
    std::vector<int> idx(std::size_t{1} << n);
    for (std::size_t y = 0; y < idx.size(); ++y) {
      std::size_t x = 0;
      for (int j = 0; j < n; ++j)
        if ((y >> j) & 1u) x |= std::size_t{1} << perm[j];
      idx[y] = static_cast<int>(x);
    }
    maps.push_back(std::move(idx));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

std::uint64_t remap_table(std::uint64_t t, const std::vector<int>& idx) {
  std::uint64_t r = 0;
  for (std::size_t y = 0; y < idx.size(); ++y)
    r |= ((t >> idx[y]) & 1u) << y;
  return r;
}

// true iff t is the smallest table in its orbit
bool is_canonical(std::uint64_t t, std::uint64_t mask,
                  const std::vector<std::vector<int>>& maps) {
  for (const auto& idx : maps) {
    if (remap_table(t, idx) < t) return false;
    if (remap_table(~t & mask, idx) < t) return false;
  }
  return true;
}

struct ShardBest {
  double ratio = std::numeric_limits<double>::infinity();
  std::uint64_t table = 0;
  bool found = false;
  std::uint64_t evaluated = 0;
  std::uint64_t excluded = 0;
};

}  // namespace

SearchResult search_extremal(int n, const BiasedMeasure& m,
                             std::string_view law_name,
                             const SearchOptions& opt) {
  Law law = parse_law(law_name);
  SearchResult res;
  res.law = std::string(law_name);
  res.n = n;
  res.p = m.p;
  res.exhaustive = opt.exhaustive;
  res.samples = opt.exhaustive ? 0 : opt.samples;
  res.seed = opt.exhaustive ? 0 : opt.seed;

  if (opt.exhaustive) {
    if (n > 4)
      throw std::invalid_argument("exhaustive search limited to n <= 4");
    const std::size_t size = std::size_t{1} << n;
    const std::uint64_t mask =
        size == 64 ? ~0ULL : (std::uint64_t{1} << size) - 1;
    const std::uint64_t total = std::uint64_t{1} << size;
    auto maps = orbit_remaps(n);

    const std::uint64_t shard_size = 4096;
    const std::size_t shards = (total + shard_size - 1) / shard_size;
    std::vector<ShardBest> best(shards);
    run_sharded(shards, [&](std::size_t s) {
      ShardBest b;
      std::uint64_t lo = s * shard_size;
      std::uint64_t hi = std::min(total, lo + shard_size);
      for (std::uint64_t t = lo; t < hi; ++t) {
        if (opt.dedup && !is_canonical(t, mask, maps)) continue;
        double ratio = law_ratio(law, BooleanFunction::from_table_bits(n, t), m);
        if (std::isnan(ratio)) {
          ++b.excluded;
          continue;
        }
        ++b.evaluated;
        if (!b.found || ratio < b.ratio ||
            (ratio == b.ratio && t < b.table)) {
          b.found = true;
          b.ratio = ratio;
          b.table = t;
        }
      }
      best[s] = b;
    });

    ShardBest acc;
    for (const auto& b : best) {
      acc.evaluated += b.evaluated;
      acc.excluded += b.excluded;
      if (!b.found) continue;
      if (!acc.found || b.ratio < acc.ratio ||
          (b.ratio == acc.ratio && b.table < acc.table)) {
        acc.found = true;
        acc.ratio = b.ratio;
        acc.table = b.table;
      }
    }
    res.min_ratio = acc.ratio;
    res.argmin_hex =
        BooleanFunction::from_table_bits(n, acc.table).to_text();
    res.evaluated = acc.evaluated;
    res.excluded = acc.excluded;
    return res;
  }

  if (opt.samples == 0) throw std::invalid_argument("no samples requested");
  const std::size_t size = std::size_t{1} << n;
  const std::size_t words = (size + 63) >> 6;

  const std::uint64_t shard_size = 1024;
  const std::size_t shards = (opt.samples + shard_size - 1) / shard_size;
  std::vector<ShardBest> best(shards);
  std::vector<BooleanFunction> argmins(shards, BooleanFunction(n));
  run_sharded(shards, [&](std::size_t s) {
    ShardBest b;
    BooleanFunction f(n), arg(n);
    std::uint64_t lo = s * shard_size;
    std::uint64_t hi = std::min<std::uint64_t>(opt.samples, lo + shard_size);
    for (std::uint64_t i = lo; i < hi; ++i) {
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = counter_rand(opt.seed, i * words + w);
        if (w == words - 1 && n < 6) bits &= (std::uint64_t{1} << size) - 1;
        for (int bpos = 0; bpos < 64; ++bpos) {
          std::size_t x = (w << 6) | bpos;
          if (x >= size) break;
          f.set_bit(x, (bits >> bpos) & 1u);
        }
      }
      double ratio = law_ratio(law, f, m);
      if (std::isnan(ratio)) {
        ++b.excluded;
        continue;
      }
      ++b.evaluated;
      bool better = !b.found || ratio < b.ratio;
      if (!better && ratio == b.ratio) {
        for (std::size_t w = words; w-- > 0;) {
          if (f.words()[w] != arg.words()[w]) {
            better = f.words()[w] < arg.words()[w];
            break;
          }
        }
      }
      if (better) {
        b.found = true;
        b.ratio = ratio;
        arg = f;
      }
    }
    best[s] = b;
    argmins[s] = arg;
  });

  ShardBest acc;
  BooleanFunction argmin(n);
  for (std::size_t s = 0; s < shards; ++s) {
    const auto& b = best[s];
    acc.evaluated += b.evaluated;
    acc.excluded += b.excluded;
    if (!b.found) continue;
    bool better = !acc.found || b.ratio < acc.ratio;
    if (!better && b.ratio == acc.ratio) {
      for (std::size_t w = words; w-- > 0;) {
        if (argmins[s].words()[w] != argmin.words()[w]) {
          better = argmins[s].words()[w] < argmin.words()[w];
          break;
        }
      }
    }
    if (better) {
      acc.found = true;
      acc.ratio = b.ratio;
      argmin = argmins[s];
    }
  }
  if (!acc.found) throw std::runtime_error("all sampled tables degenerate");
  res.min_ratio = acc.ratio;
  res.argmin_hex = argmin.to_text();
  res.evaluated = acc.evaluated;
  res.excluded = acc.excluded;
  return res;
}

}  // namespace hcube
