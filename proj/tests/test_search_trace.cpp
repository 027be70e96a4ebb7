#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>
#include <string>

#include "doctest.h"
#include "hcube/proof_trace.hpp"
#include "hcube/search.hpp"
#include "naive_oracle.hpp"

using namespace hcube;

TEST_CASE("exhaustive search anchors") {
  BiasedMeasure m(0.5);
  SearchOptions opt;

  SearchResult one = search_extremal(1, m, "eldan-gross", opt);
  CHECK(one.min_ratio == doctest::Approx(0.8727).epsilon(1e-4));
  CHECK(one.argmin_hex == "n:1 hex:1");
  CHECK(one.evaluated == 1);
  CHECK(one.excluded == 1);

  SearchResult two = search_extremal(2, m, "eldan-gross", opt);
  CHECK(two.min_ratio <= one.min_ratio + 1e-12);

  SearchResult three = search_extremal(3, m, "eldan-gross", opt);
  CHECK(three.min_ratio == doctest::Approx(0.8166806672209563).epsilon(1e-12));
  CHECK(three.argmin_hex == "n:3 hex:01");
  CHECK(three.evaluated == 39);
  CHECK(three.excluded == 1);

  SearchOptions raw;
  raw.dedup = false;
  SearchResult full = search_extremal(3, m, "eldan-gross", raw);
  CHECK(full.min_ratio == three.min_ratio);
  CHECK(full.argmin_hex == three.argmin_hex);
  CHECK(full.evaluated == 254);
  CHECK(full.excluded == 2);

  SearchResult tl = search_extremal(3, m, "talagrand-logvar", opt);
  CHECK(tl.min_ratio > 0.0);
  CHECK(tl.law == "talagrand-logvar");

  CHECK_THROWS(search_extremal(5, m, "eldan-gross", opt));
  CHECK_THROWS(search_extremal(3, m, "nope", opt));
}

TEST_CASE("search minimum matches a naive recomputation") {
  double p = 0.3;
  BiasedMeasure m(p);
  SearchOptions raw;
  raw.dedup = false;
  SearchResult got = search_extremal(3, m, "eldan-gross", raw);

  double best = 1e300;
  std::uint64_t best_t = 0;
  for (std::uint64_t t = 1; t < 255; ++t) {
    BooleanFunction f = BooleanFunction::from_table_bits(3, t);
    double var = naive::variance(f, p);
    double w = 0.0;
    for (int j = 0; j < 3; ++j) {
      double inf = naive::influence(f, p, j);
      w += inf * inf;
    }
    double ratio = naive::e_grad(f, p) /
                   (var * std::sqrt(std::log1p(std::numbers::e / w)));
    if (ratio < best) {
      best = ratio;
      best_t = t;
    }
  }
  CHECK(got.min_ratio == doctest::Approx(best).epsilon(1e-12));
  // negated tables tie to the last ulp, so pin the argmin by its naive
  // ratio rather than by identity
  BooleanFunction arg = BooleanFunction::parse(got.argmin_hex);
  double w = 0.0;
  for (int j = 0; j < 3; ++j) {
    double inf = naive::influence(arg, p, j);
    w += inf * inf;
  }
  double arg_ratio =
      naive::e_grad(arg, p) /
      (naive::variance(arg, p) *
       std::sqrt(std::log1p(std::numbers::e / w)));
  CHECK(arg_ratio == doctest::Approx(best).epsilon(1e-12));
  CHECK(best_t != 0);
}

TEST_CASE("search is deterministic across worker counts") {
  BiasedMeasure m(0.25);
  SearchOptions opt;
  setenv("HCUBE_THREADS", "1", 1);
  SearchResult serial = search_extremal(4, m, "eldan-gross", opt);
  setenv("HCUBE_THREADS", "4", 1);
  SearchResult parallel = search_extremal(4, m, "eldan-gross", opt);
  unsetenv("HCUBE_THREADS");
  CHECK(serial.min_ratio == parallel.min_ratio);
  CHECK(serial.argmin_hex == parallel.argmin_hex);
  CHECK(serial.evaluated == parallel.evaluated);
  CHECK(serial.excluded == parallel.excluded);
  CHECK(serial.min_ratio > 0.0);
}

TEST_CASE("random search is seed-deterministic") {
  BiasedMeasure m(0.5);
  SearchOptions opt;
  opt.exhaustive = false;
  opt.samples = 500;
  opt.seed = 7;
  SearchResult a = search_extremal(6, m, "eldan-gross", opt);
  SearchResult b = search_extremal(6, m, "eldan-gross", opt);
  CHECK(a.min_ratio == b.min_ratio);
  CHECK(a.argmin_hex == b.argmin_hex);
  CHECK(a.evaluated + a.excluded == 500);
  CHECK(a.seed == 7);
  CHECK(a.samples == 500);
  CHECK_FALSE(a.exhaustive);

  opt.samples = 0;
  CHECK_THROWS(search_extremal(6, m, "eldan-gross", opt));
}

TEST_CASE("search argmin feeds straight into the tracer") {
  for (double p : {0.25, 0.5}) {
    BiasedMeasure m(p);
    SearchResult sr = search_extremal(4, m, "eldan-gross", {});
    BooleanFunction f = BooleanFunction::parse(sr.argmin_hex);
    ProofTrace tr = proof_chain_trace(f, m);
    CHECK(tr.all_pass);
    for (const auto& s : tr.steps) CHECK(s.slack >= -1e-9);
  }
}

TEST_CASE("trace hits each branch on a designed witness") {
  // W = 1/2 >= 1/100
  ProofTrace wl = proof_chain_trace(BooleanFunction::parse("n:2 hex:8"),
                                    BiasedMeasure(0.5));
  CHECK(wl.branch == ProofBranch::w_large);
  CHECK(std::string(to_string(wl.branch)) == "w-large");
  CHECK(wl.W == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(wl.var == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(wl.all_pass);

  // var = 4e-3 below sqrt(W) = 6.2e-3
  ProofTrace sq = proof_chain_trace(BooleanFunction::parse("n:3 hex:80"),
                                    BiasedMeasure(0.1));
  CHECK(sq.branch == ProofBranch::var_below_sqrt_w);
  CHECK(sq.W == doctest::Approx(3.888e-5).epsilon(1e-3));
  CHECK(sq.all_pass);

  // dictator at q = 1/100: sqrt(W) = var < 100 W
  ProofTrace mid = proof_chain_trace(BooleanFunction::parse("n:1 hex:2"),
                                     BiasedMeasure(0.99));
  CHECK(mid.branch == ProofBranch::var_below_100w);
  CHECK(mid.all_pass);
  CHECK(mid.final_constant == doctest::Approx(0.09150549022891372).epsilon(1e-12));

  // dictator at q = 1/500: var >= 100 W
  ProofTrace mc = proof_chain_trace(BooleanFunction::parse("n:1 hex:2"),
                                    BiasedMeasure(0.998));
  CHECK(mc.branch == ProofBranch::main_case);
  CHECK(std::string(to_string(mc.branch)) == "main");
  CHECK(mc.all_pass);
  CHECK(mc.epsilon == doctest::Approx(1.0 / std::log(mc.var / mc.W)).epsilon(1e-13));
  CHECK(mc.theta ==
        doctest::Approx(mc.epsilon / (2.0 - mc.epsilon)).epsilon(1e-12));
  BiasedMeasure m998(0.998);
  CHECK(std::exp(-2.0 * mc.t / m998.K) ==
        doctest::Approx(1.0 - mc.epsilon).epsilon(1e-12));
  CHECK(mc.final_constant == doctest::Approx(0.004968847779174959).epsilon(1e-12));

  for (const ProofTrace* tr : {&wl, &sq, &mid, &mc}) {
    CHECK(tr->final_constant > 0.0);
    CHECK(!tr->steps.empty());
    CHECK(tr->steps.back().name == "assemble");
    for (const ProofStep& s : tr->steps) {
      CAPTURE(s.name);
      CHECK(s.pass);
      CHECK(s.slack >= -1e-9);
    }
  }
}

TEST_CASE("every nonconstant table traces cleanly") {
  std::set<ProofBranch> seen;
  for (double p : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.998}) {
    BiasedMeasure m(p);
    for (int n = 1; n <= 3; ++n) {
      std::uint64_t tables = 1ull << (1ull << n);
      for (std::uint64_t t = 1; t + 1 < tables; ++t) {
        BooleanFunction f = BooleanFunction::from_table_bits(n, t);
        if (!(statistics(f, m).variance > 0.0)) continue;
        ProofTrace tr = proof_chain_trace(f, m);
        seen.insert(tr.branch);
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(t);
        CHECK(tr.all_pass);
        for (const ProofStep& s : tr.steps) CHECK(s.slack >= -1e-9);
      }
    }
  }
  CHECK(seen.size() == 4);

  CHECK_THROWS(proof_chain_trace(BooleanFunction::parse("n:2 hex:0"),
                                 BiasedMeasure(0.5)));
  CHECK_THROWS(proof_chain_trace(BooleanFunction::parse("n:2 hex:f"),
                                 BiasedMeasure(0.5)));
}
