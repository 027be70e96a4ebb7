#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hcube/inequalities.hpp"
#include "hcube/proof_trace.hpp"

using namespace hcube;

namespace {
constexpr double kE = std::numbers::e;
}

TEST_CASE("gradient versus total influence, closed-form anchors") {
  BiasedMeasure m(0.5);

  BooleanFunction dict = BooleanFunction::parse("n:1 hex:2");
  InequalityReport r = verify_eldan_gross(dict, m);
  CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.rhs_unit == doctest::Approx(std::sqrt(std::log1p(kE))).epsilon(1e-14));
  CHECK(r.rhs_unit == doctest::Approx(1.1459).epsilon(1e-4));
  CHECK(r.ratio == doctest::Approx(0.8727).epsilon(1e-4));
  CHECK(r.pass);
  CHECK(r.law == "eldan-gross");
  CHECK(r.witness_hex == "n:1 hex:2");

  BooleanFunction parity = BooleanFunction::parse("n:2 hex:6");
  InequalityReport pr = verify_eldan_gross(parity, m);
  CHECK(pr.lhs == doctest::Approx(std::numbers::sqrt2).epsilon(1e-14));
  CHECK(pr.rhs_unit ==
        doctest::Approx(std::sqrt(std::log1p(kE / 2.0))).epsilon(1e-14));
  CHECK(pr.rhs_unit == doctest::Approx(0.9266).epsilon(1e-4));
  CHECK(pr.ratio == doctest::Approx(1.526).epsilon(1e-3));
}

TEST_CASE("gradient versus log-variance, closed-form anchor") {
  BiasedMeasure m(0.5);

  // dictator: Var = 1 makes the log factor exactly 1
  BooleanFunction dict = BooleanFunction::parse("n:1 hex:2");
  InequalityReport d = verify_talagrand_logvar(dict, m);
  CHECK(d.lhs == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d.rhs_unit == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d.ratio == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d.pass);

  BooleanFunction point = BooleanFunction::parse("n:2 hex:8");
  InequalityReport r = verify_talagrand_logvar(point, m);
  double var = 0.75;
  CHECK(r.lhs == doctest::Approx((2.0 + std::numbers::sqrt2) / 4.0).epsilon(1e-14));
  CHECK(r.rhs_unit ==
        doctest::Approx(var * std::sqrt(1.0 - std::log(var))).epsilon(1e-14));
  CHECK(r.rhs_unit == doctest::Approx(0.8510706).epsilon(1e-6));
  CHECK(r.ratio == doctest::Approx(1.0029173).epsilon(1e-6));
  CHECK(r.pass);
}

TEST_CASE("explicit constants gate the pass flag") {
  BiasedMeasure m(0.5);
  BooleanFunction dict = BooleanFunction::parse("n:1 hex:2");
  CHECK(verify_eldan_gross(dict, m, 0.8).pass);
  CHECK_FALSE(verify_eldan_gross(dict, m, 0.9).pass);
  CHECK(verify_talagrand_logvar(dict, m, 0.9).pass);
}

TEST_CASE("degenerate functions report trivially") {
  BiasedMeasure m(0.3);
  BooleanFunction ones = BooleanFunction::parse("n:2 hex:f");
  InequalityReport r = verify_eldan_gross(ones, m);
  CHECK(r.pass);
  CHECK(r.rhs_unit == 0.0);
  CHECK(r.ratio == 0.0);
  CHECK(verify_talagrand_logvar(ones, m).pass);
}

TEST_CASE("positivity holds exhaustively at small dimension") {
  for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    BiasedMeasure m(p);
    for (int n = 1; n <= 3; ++n) {
      std::uint64_t tables = 1ull << (1ull << n);
      for (std::uint64_t t = 0; t < tables; ++t) {
        BooleanFunction f = BooleanFunction::from_table_bits(n, t);
        InequalityReport eg = verify_eldan_gross(f, m);
        InequalityReport tl = verify_talagrand_logvar(f, m);
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(t);
        CHECK(eg.pass);
        CHECK(tl.pass);
        if (eg.rhs_unit > 0.0) CHECK(eg.ratio > 0.0);
        if (tl.rhs_unit > 0.0) CHECK(tl.ratio > 0.0);
      }
    }
  }
}

TEST_CASE("traced constant is honored by the verifier") {
  for (double p : {0.1, 0.5, 0.9}) {
    BiasedMeasure m(p);
    for (std::uint64_t t = 1; t < 255; ++t) {
      BooleanFunction f = BooleanFunction::from_table_bits(3, t);
      ProofTrace tr = proof_chain_trace(f, m);
      CAPTURE(p);
      CAPTURE(t);
      CHECK(tr.all_pass);
      CHECK(verify_eldan_gross(f, m, tr.final_constant).pass);
    }
  }
}

TEST_CASE("closing minimum of the scalar function") {
  NumericalFactResult nf = numerical_fact_min();
  CHECK(nf.floor ==
        doctest::Approx((1.0 - std::exp(-0.5)) / std::numbers::sqrt2)
            .epsilon(1e-15));
  CHECK(nf.floor == doctest::Approx(0.27824).epsilon(1e-4));
  CHECK(nf.min_value >= nf.floor - 1e-9);
  CHECK(nf.min_value == doctest::Approx(0.389108).epsilon(1e-5));
  CHECK(nf.arg_eps == doctest::Approx(0.2024).epsilon(1e-2));

  auto g = [](double eps) {
    return (1.0 - std::exp(1.0 / (eps - 2.0))) / std::sqrt(1.0 + eps);
  };
  CHECK(g(1.0) == doctest::Approx(0.4470).epsilon(1e-3));
  CHECK(g(0.0) == doctest::Approx(0.3935).epsilon(1e-3));
  CHECK(nf.min_value <= g(nf.arg_eps) + 1e-15);

  NumericalFactResult fine = numerical_fact_min(1000001);
  CHECK(std::fabs(fine.min_value - nf.min_value) < 1e-6);
  CHECK_THROWS(numerical_fact_min(2));
}
