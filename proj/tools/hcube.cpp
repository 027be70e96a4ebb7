#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hcube/boolean_core.hpp"
#include "hcube/gaussian.hpp"
#include "hcube/hypercontract.hpp"
#include "hcube/inequalities.hpp"
#include "hcube/isoperimetry.hpp"
#include "hcube/kernels.hpp"
#include "hcube/normal.hpp"
#include "hcube/parallel.hpp"
#include "hcube/proof_trace.hpp"
#include "hcube/report_io.hpp"
#include "hcube/search.hpp"
#include "hcube/semigroup.hpp"

namespace {

using namespace hcube;

constexpr int kUsageError = 1;
constexpr int kViolationError = 2;

struct OutputOptions {
  std::string out_path;
  std::string format = "json";
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("-o,--out", out.out_path, "write the report to this file");
  cmd->add_option("--format", out.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

int finish(const OutputOptions& out, const ordered_json& config,
           const std::vector<InequalityReport>& reports, bool quiet_stdout) {
  ordered_json doc = report_document(config, reports);
  std::string payload = out.format == "csv" ? reports_csv(reports)
                                            : doc.dump(2) + "\n";
  if (!out.out_path.empty())
    write_text_file(out.out_path, payload);
  else if (!quiet_stdout)
    std::cout << payload;

  std::size_t violations = doc["summary"]["violations"];
  if (quiet_stdout || !out.out_path.empty()) {
    std::cout << "checks: " << reports.size() << "  violations: " << violations;
    if (doc["summary"].contains("min_ratio"))
      std::cout << "  min_ratio: " << doc["summary"]["min_ratio"].dump();
    std::cout << "\n";
  }
  if (violations == 0) return 0;
  const InequalityReport* worst = nullptr;
  for (const auto& r : reports)
    if (!r.pass && (!worst || r.ratio < worst->ratio)) worst = &r;
  std::cerr << "violation: law=" << worst->law << " witness=\""
            << worst->witness_hex << "\" lhs=" << worst->lhs
            << " rhs_unit=" << worst->rhs_unit << " ratio=" << worst->ratio
            << "\n";
  return kViolationError;
}

std::vector<BooleanFunction> collect_functions(int n,
                                               const std::vector<std::string>& fns,
                                               bool exhaustive,
                                               std::uint64_t random_count,
                                               std::uint64_t seed) {
  std::vector<BooleanFunction> out;
  for (const auto& text : fns) out.push_back(BooleanFunction::parse(text));
  if (exhaustive) {
    if (n > 4) throw CLI::ValidationError("--exhaustive needs --n <= 4");
    std::uint64_t total = std::uint64_t{1} << (std::size_t{1} << n);
    for (std::uint64_t t = 0; t < total; ++t)
      out.push_back(BooleanFunction::from_table_bits(n, t));
  }
  std::size_t size = std::size_t{1} << n;
  std::size_t words = (size + 63) >> 6;
  for (std::uint64_t i = 0; i < random_count; ++i) {
    BooleanFunction f(n);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = counter_rand(seed, i * words + w);
      for (int b = 0; b < 64; ++b) {
        std::size_t x = (w << 6) | static_cast<std::size_t>(b);
        if (x >= size) break;
        f.set_bit(x, (bits >> b) & 1u);
      }
    }
    out.push_back(std::move(f));
  }
  if (out.empty())
    throw CLI::ValidationError("no functions: pass --fn, --exhaustive, or --random");
  return out;
}

InequalityReport worst_of(std::vector<InequalityReport> rs, const char* t_key) {
  std::size_t worst = 0;
  double best_slack = std::numeric_limits<double>::infinity();
  bool all = true;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    all = all && rs[i].pass;
    double slack = rs[i].rhs_unit - rs[i].lhs;
    if (slack < best_slack) {
      best_slack = slack;
      worst = i;
    }
  }
  InequalityReport r = rs[worst];
  r.pass = all;
  (void)t_key;
  return r;
}

// aggregates used by `verify --all`

void appendix_reports(std::vector<InequalityReport>& reports, double tol) {
  double max_psi = -1e300, max_psi2 = -1e300, min_phi2 = 1e300;
  double worst_fd = 0.0;
  const double h = 1e-6;
  for (int i = 0; i <= 2000; ++i) {
    double s = -1.0 + i * 1e-3;
    for (int pi = 1; pi <= 19; ++pi) {
      double p = pi * 0.05;
      AppendixCalculus c = appendix_calculus(s, p);
      max_psi = std::max(max_psi, c.psi);
      max_psi2 = std::max(max_psi2, c.psi_d2);
      min_phi2 = std::min(min_phi2, c.phi_d2);
      if (s > -1.0 + 2 * h && s < 1.0 - 2 * h) {
        double fd = (appendix_calculus(s + h, p).psi -
                     appendix_calculus(s - h, p).psi) /
                    (2 * h);
        worst_fd = std::max(
            worst_fd, std::fabs(fd - c.psi_d1) /
                          std::max(1.0, std::fabs(c.psi_d1)));
      }
    }
  }
  InequalityReport r;
  r.law = "two-point-potential";
  r.n = 1;
  r.lhs = max_psi;
  r.rhs_unit = 0.0;
  r.ratio = 0.0;
  r.tol = tol;
  r.pass = max_psi <= 1e-10 && max_psi2 <= 1e-10 && min_phi2 >= 0.0 &&
           worst_fd <= 1e-5;
  r.add_param("max_psi", max_psi);
  r.add_param("max_psi_dd", max_psi2);
  r.add_param("min_phi_dd", min_phi2);
  r.add_param("worst_fd_rel", worst_fd);
  reports.push_back(std::move(r));
}

void numerical_fact_report(std::vector<InequalityReport>& reports, double tol,
                           std::size_t grid) {
  NumericalFactResult nf = numerical_fact_min(grid);
  InequalityReport r;
  r.law = "numerical-fact";
  r.n = 0;
  r.lhs = nf.floor;
  r.rhs_unit = nf.min_value;
  r.ratio = nf.min_value > 0 ? nf.floor / nf.min_value : 0.0;
  r.tol = tol;
  r.pass = leq_tol(nf.floor, nf.min_value, tol);
  r.add_param("min_value", nf.min_value);
  r.add_param("arg_eps", nf.arg_eps);
  reports.push_back(std::move(r));
}

void profile_reports(std::vector<InequalityReport>& reports, double tol,
                     std::size_t grid) {
  double worst_quad = 1e300, worst_log = 1e300;
  double at_quad = 0, at_log = 0;
  for (std::size_t i = 1; i + 1 <= grid; ++i) {
    double x = static_cast<double>(i) / static_cast<double>(grid);
    ProfileBounds b = profile_lower_bounds(x);
    if (b.value - b.quadratic < worst_quad) {
      worst_quad = b.value - b.quadratic;
      at_quad = x;
    }
    if (b.value - b.log_lower < worst_log) {
      worst_log = b.value - b.log_lower;
      at_log = x;
    }
  }
  InequalityReport r;
  r.law = "profile-bounds";
  r.n = 0;
  r.lhs = -worst_quad;
  r.rhs_unit = 0.0;
  r.tol = tol;
  r.pass = worst_quad >= -tol && worst_log >= -tol;
  r.note = "log-form constant is empirical";
  r.add_param("c_log", log_profile_constant());
  r.add_param("min_quadratic_slack", worst_quad);
  r.add_param("at_x_quadratic", at_quad);
  r.add_param("min_log_slack", worst_log);
  r.add_param("at_x_log", at_log);
  reports.push_back(std::move(r));
}

void gauss_reports(std::vector<InequalityReport>& reports, double tol,
                   std::size_t grid, double a_min, double a_max,
                   const std::vector<double>& eps_list) {
  std::vector<double> thresholds(grid);
  for (std::size_t i = 0; i < grid; ++i)
    thresholds[i] =
        a_min + (a_max - a_min) * static_cast<double>(i) /
                    static_cast<double>(grid - 1);
  auto rs = verify_ctns(thresholds, 0.0, 0.0, tol);
  for (const char* law :
       {"gauss-variance-grad", "gauss-logvar", "gauss-eldan-gross"}) {
    std::vector<InequalityReport> of_law;
    for (const auto& r : rs)
      if (r.law == law) of_law.push_back(r);
    InequalityReport agg = worst_of(std::move(of_law), "a");
    reports.push_back(std::move(agg));
  }

  // smoothing family: quadrature error against 2 phi(a) must shrink
  bool mono = true;
  double final_err = 0.0;
  for (double a : {0.0, 1.0, 2.0}) {
    double prev = 1e300;
    for (double eps : eps_list) {
      double err = std::fabs(smoothed_gradient_oracle({0, a}, eps) - 2 * norm_pdf(a));
      mono = mono && err < prev;
      prev = err;
    }
    final_err = std::max(final_err, prev);
  }
  InequalityReport r;
  r.law = "gauss-smoothing-limit";
  r.n = 1;
  r.lhs = final_err;
  r.rhs_unit = 1e-6;
  r.ratio = final_err / 1e-6;
  r.tol = tol;
  r.pass = mono && final_err <= 1e-6;
  r.note = "tanh smoothing family";
  r.add_param("eps_steps", static_cast<double>(eps_list.size()));
  reports.push_back(std::move(r));
}

void lsi_reports(std::vector<InequalityReport>& reports, double tol,
                 const std::vector<double>& p_grid) {
  for (double p : p_grid) {
    BiasedMeasure m(p);
    double worst = 1e300;
    double worst_s = 0;
    for (int i = -9; i <= 9; ++i) {
      double s = i * 0.11;
      RealFunction g(1);
      g[0] = 1.0 - s;
      g[1] = 1.0 + s;
      LsiResult lr = lsi_check(g, m);
      if (lr.deficit < worst) {
        worst = lr.deficit;
        worst_s = s;
      }
    }
    std::uint64_t seed = 2026;
    for (int i = 0; i < 1000; ++i) {
      RealFunction g(1);
      g[0] = counter_rand_unit(seed, 2 * i) * 2.0;
      g[1] = counter_rand_unit(seed, 2 * i + 1) * 2.0;
      LsiResult lr = lsi_check(g, m);
      if (lr.deficit < worst) {
        worst = lr.deficit;
        worst_s = g[1] - g[0];
      }
    }
    InequalityReport r;
    r.law = "log-sobolev-two-point";
    r.n = 1;
    r.p = p;
    r.lhs = -worst;
    r.rhs_unit = 0.0;
    r.tol = tol;
    r.pass = worst >= -tol;
    r.add_param("min_deficit", worst);
    r.add_param("at_gap", worst_s);
    reports.push_back(std::move(r));
  }
}

void trace_reports(std::vector<InequalityReport>& reports, double tol,
                   const std::vector<double>& p_grid) {
  std::size_t counts[4] = {0, 0, 0, 0};
  bool all_ok = true;
  double worst_slack = 1e300;
  for (int n = 1; n <= 3; ++n) {
    std::uint64_t total = std::uint64_t{1} << (std::size_t{1} << n);
    for (double p : p_grid) {
      BiasedMeasure m(p);
      for (std::uint64_t t = 1; t + 1 < total; ++t) {
        ProofTrace tr =
            proof_chain_trace(BooleanFunction::from_table_bits(n, t), m, tol);
        counts[static_cast<int>(tr.branch)]++;
        all_ok = all_ok && tr.all_pass;
        for (const auto& s : tr.steps)
          worst_slack = std::min(
              worst_slack, s.slack / std::max(1.0, std::fabs(s.rhs)));
      }
    }
  }
  InequalityReport r;
  r.law = "proof-trace";
  r.n = 3;
  r.lhs = -worst_slack;
  r.rhs_unit = 0.0;
  r.tol = tol;
  r.pass = all_ok;
  r.add_param("w_large", static_cast<double>(counts[0]));
  r.add_param("var_below_sqrt_w", static_cast<double>(counts[1]));
  r.add_param("var_below_100w", static_cast<double>(counts[2]));
  r.add_param("main", static_cast<double>(counts[3]));
  r.add_param("min_rel_slack", worst_slack);
  reports.push_back(std::move(r));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inequality toolkit for Boolean functions on the biased cube"};
  app.require_subcommand(1);

  std::string kernel;
  app.add_option("--kernel", kernel,
                 "force a kernel variant (scalar, avx2)");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "check one law or the full suite");
  std::string law;
  int n = 2;
  std::vector<double> p_list{0.5};
  std::vector<std::string> fn_list;
  bool exhaustive = false;
  std::uint64_t random_count = 0, seed = 1;
  double C = 0.0, tol = kDefaultTol;
  std::vector<double> t_grid, r_list{1.5}, bias_grid{0.1, 0.3, 0.5, 0.7, 0.9};
  bool run_all = false;
  std::size_t grid = 100001;
  OutputOptions verify_out;
  verify->add_option("--law", law,
                     "eldan-gross | talagrand-logvar | variance-decay | "
                     "variance-drop | local-bobkov | bobkov-gotze | "
                     "hypercontractivity | log-sobolev | two-point-potential | "
                     "numerical-fact | profile-bounds | proof-trace");
  verify->add_flag("--all", run_all, "run the canned n <= 3 suite for every law");
  verify->add_option("--n", n, "dimension")->check(CLI::Range(1, kMaxDim));
  verify->add_option("--p", p_list, "bias value(s)");
  verify->add_option("--fn", fn_list, "truth table(s), e.g. \"n:2 hex:8\"");
  verify->add_flag("--exhaustive", exhaustive, "all truth tables (n <= 4)");
  verify->add_option("--random", random_count, "count of seeded random tables");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--C", C, "explicit constant (0 = positivity check)");
  verify->add_option("--tol", tol, "comparison tolerance");
  verify->add_option("--t-grid", t_grid, "noise times (default: 25 log-spaced)");
  verify->add_option("--r", r_list, "norm exponent(s) in (1,2]");
  verify->add_option("--bias-grid", bias_grid, "biases for bobkov-gotze");
  verify->add_option("--grid", grid, "grid size for grid-based laws");
  add_output_options(verify, verify_out);

  // ---- search ----
  auto* search = app.add_subcommand("search", "minimize a law ratio over truth tables");
  std::string s_law = "eldan-gross";
  int s_n = 3;
  double s_p = 0.5;
  bool s_exhaustive = false;
  std::uint64_t s_random = 0, s_seed = 1;
  bool s_no_dedup = false;
  OutputOptions search_out;
  search->add_option("--law", s_law, "eldan-gross | talagrand-logvar");
  search->add_option("--n", s_n, "dimension")->check(CLI::Range(1, kMaxDim));
  search->add_option("--p", s_p, "bias");
  search->add_flag("--exhaustive", s_exhaustive, "all truth tables (n <= 4)");
  search->add_option("--random", s_random, "random sample count");
  search->add_option("--seed", s_seed, "random seed");
  search->add_flag("--no-dedup", s_no_dedup, "score every table, not one per orbit");
  add_output_options(search, search_out);

  // ---- trace ----
  auto* trace = app.add_subcommand("trace", "replay the proof chain for one function");
  std::string tr_fn;
  double tr_p = 0.5, tr_tol = kDefaultTol;
  OutputOptions trace_out;
  trace->add_option("--fn", tr_fn, "truth table, e.g. \"n:2 hex:8\"")->required();
  trace->add_option("--p", tr_p, "bias");
  trace->add_option("--tol", tr_tol, "step tolerance");
  add_output_options(trace, trace_out);

  // ---- profile ----
  auto* profile = app.add_subcommand("profile", "isoperimetric profile and its lower bounds");
  std::size_t pr_grid = 1001;
  std::vector<double> pr_x;
  OutputOptions profile_out;
  profile->add_option("--grid", pr_grid, "interior grid size");
  profile->add_option("--x", pr_x, "explicit evaluation points");
  add_output_options(profile, profile_out);

  // ---- gauss ----
  auto* gauss = app.add_subcommand("gauss", "halfspace checks on Gauss space");
  std::size_t g_grid = 1201;
  double g_amin = -6.0, g_amax = 6.0, g_tol = kDefaultTol;
  std::vector<double> g_eps{1e-1, 1e-2, 1e-3};
  OutputOptions gauss_out;
  gauss->add_option("--grid", g_grid, "threshold count");
  gauss->add_option("--a-min", g_amin, "lowest threshold");
  gauss->add_option("--a-max", g_amax, "highest threshold");
  gauss->add_option("--eps", g_eps, "smoothing widths");
  gauss->add_option("--tol", g_tol, "comparison tolerance");
  add_output_options(gauss, gauss_out);

  // ---- report ----
  auto* report = app.add_subcommand("report", "convert a report file");
  std::string rep_in;
  OutputOptions report_out;
  report->add_option("--in", rep_in, "existing JSON report")->required();
  add_output_options(report, report_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (!kernel.empty() && !kern::set_active(kernel)) {
    std::cerr << "unknown kernel \"" << kernel << "\"; available:";
    for (const auto& k : kern::available()) std::cerr << " " << k;
    std::cerr << "\n";
    return kUsageError;
  }

  try {
    if (verify->parsed()) {
      std::vector<InequalityReport> reports;
      ordered_json config;
      config["command"] = "verify";
      config["tol"] = tol;

      auto default_grid = default_time_grid();
      if (t_grid.empty()) t_grid = default_grid;

      auto for_functions = [&](auto&& fn) {
        auto fns = collect_functions(n, fn_list, exhaustive, random_count, seed);
        for (double p : p_list) {
          BiasedMeasure m(p);
          for (const auto& f : fns) fn(f, m);
        }
      };

      auto run_law = [&](const std::string& which) {
        if (which == "eldan-gross") {
          for_functions([&](const BooleanFunction& f, const BiasedMeasure& m) {
            reports.push_back(verify_eldan_gross(f, m, C, tol));
          });
        } else if (which == "talagrand-logvar") {
          for_functions([&](const BooleanFunction& f, const BiasedMeasure& m) {
            reports.push_back(verify_talagrand_logvar(f, m, C, tol));
          });
        } else if (which == "variance-decay") {
          for_functions([&](const BooleanFunction& f, const BiasedMeasure& m) {
            reports.push_back(
                worst_of(verify_variance_decay(f, m, t_grid, tol), "t"));
          });
        } else if (which == "variance-drop") {
          for_functions([&](const BooleanFunction& f, const BiasedMeasure& m) {
            std::vector<InequalityReport> rs;
            for (double t : t_grid)
              rs.push_back(verify_variance_drop(f, m, t, tol));
            rs.push_back(verify_variance_drop(
                f, m, std::numeric_limits<double>::infinity(), tol));
            reports.push_back(worst_of(std::move(rs), "t"));
          });
        } else if (which == "local-bobkov") {
          for_functions([&](const BooleanFunction& f, const BiasedMeasure& m) {
            std::vector<InequalityReport> rs;
            for (double t : t_grid)
              rs.push_back(local_bobkov_discrete(f, m, t, tol));
            reports.push_back(worst_of(std::move(rs), "t"));
          });
        } else if (which == "bobkov-gotze") {
          auto fns = collect_functions(n, fn_list, exhaustive, random_count, seed);
          for (double b : bias_grid) {
            std::vector<double> biases(n, b);
            for (const auto& f : fns)
              reports.push_back(bobkov_gotze_check(f, biases, tol));
          }
          if (n == 3 && bias_grid.size() >= 3) {
            std::vector<double> mixed{bias_grid.front(),
                                      bias_grid[bias_grid.size() / 2],
                                      bias_grid.back()};
            for (const auto& f : fns)
              reports.push_back(bobkov_gotze_check(f, mixed, tol));
          }
        } else if (which == "hypercontractivity") {
          for_functions([&](const BooleanFunction& f, const BiasedMeasure& m) {
            for (double r : r_list)
              reports.push_back(
                  verify_hypercontractivity(RealFunction::from_boolean(f), m, r, tol));
          });
        } else if (which == "log-sobolev") {
          lsi_reports(reports, tol, p_list);
        } else if (which == "two-point-potential") {
          appendix_reports(reports, tol);
        } else if (which == "numerical-fact") {
          numerical_fact_report(reports, tol, grid);
        } else if (which == "profile-bounds") {
          profile_reports(reports, tol, grid == 100001 ? 100001 : grid);
        } else if (which == "proof-trace") {
          trace_reports(reports, tol, p_list);
        } else {
          throw CLI::ValidationError("unknown law \"" + which + "\"");
        }
      };

      if (run_all) {
        n = 3;
        exhaustive = true;
        fn_list.clear();
        random_count = 0;
        p_list = {0.1, 0.3, 0.5, 0.7, 0.9};
        config["suite"] = "all";
        for (const char* which :
             {"eldan-gross", "talagrand-logvar", "variance-decay",
              "variance-drop", "local-bobkov", "bobkov-gotze",
              "hypercontractivity", "log-sobolev", "two-point-potential",
              "numerical-fact", "profile-bounds", "proof-trace"}) {
          std::size_t before = reports.size();
          run_law(which);
          std::size_t passed = 0;
          for (std::size_t i = before; i < reports.size(); ++i)
            passed += reports[i].pass;
          std::printf("%-22s %6zu checks  %6zu passed\n", which,
                      reports.size() - before, passed);
        }
        std::size_t before = reports.size();
        gauss_reports(reports, tol, 1201, -6.0, 6.0, {1e-1, 1e-2, 1e-3});
        std::size_t passed = 0;
        for (std::size_t i = before; i < reports.size(); ++i)
          passed += reports[i].pass;
        std::printf("%-22s %6zu checks  %6zu passed\n", "gauss-analogues",
                    reports.size() - before, passed);
        return finish(verify_out, config, reports, true);
      }

      if (law.empty())
        throw CLI::ValidationError("pass --law or --all");
      config["law"] = law;
      config["n"] = n;
      run_law(law);
      return finish(verify_out, config, reports, false);
    }

    if (search->parsed()) {
      SearchOptions opt;
      opt.exhaustive = s_exhaustive || s_random == 0;
      opt.samples = s_random;
      opt.seed = s_seed;
      opt.dedup = !s_no_dedup;
      SearchResult res = search_extremal(s_n, BiasedMeasure(s_p), s_law, opt);
      ordered_json j = to_json(res);
      std::string payload = j.dump(2) + "\n";
      if (!search_out.out_path.empty()) {
        write_text_file(search_out.out_path, payload);
        std::cout << "min_ratio: " << res.min_ratio
                  << "  argmin: " << res.argmin_hex << "\n";
      } else {
        std::cout << payload;
      }
      return 0;
    }

    if (trace->parsed()) {
      BooleanFunction f = BooleanFunction::parse(tr_fn);
      ProofTrace tr = proof_chain_trace(f, BiasedMeasure(tr_p), tr_tol);
      ordered_json j = to_json(tr);
      j["witness_hex"] = f.to_text();
      std::string payload = j.dump(2) + "\n";
      if (!trace_out.out_path.empty()) {
        write_text_file(trace_out.out_path, payload);
        std::cout << "branch: " << to_string(tr.branch)
                  << "  all_pass: " << (tr.all_pass ? "true" : "false") << "\n";
      } else {
        std::cout << payload;
      }
      return tr.all_pass ? 0 : kViolationError;
    }

    if (profile->parsed()) {
      ordered_json j;
      j["c_log"] = log_profile_constant();
      j["c_log_kind"] = "empirical";
      ordered_json rows = ordered_json::array();
      bool ok = true;
      auto eval = [&](double x) {
        ProfileBounds b = profile_lower_bounds(x);
        ok = ok && leq_tol(b.quadratic, b.value) && leq_tol(b.log_lower, b.value);
        rows.push_back(to_json(b));
      };
      for (double x : pr_x) eval(x);
      if (pr_x.empty())
        for (std::size_t i = 1; i + 1 <= pr_grid; ++i)
          eval(static_cast<double>(i) / static_cast<double>(pr_grid));
      j["rows"] = std::move(rows);
      j["all_bounds_hold"] = ok;
      std::string payload = j.dump(2) + "\n";
      if (!profile_out.out_path.empty()) {
        write_text_file(profile_out.out_path, payload);
        std::cout << "c_log: " << log_profile_constant()
                  << "  bounds_hold: " << (ok ? "true" : "false") << "\n";
      } else {
        std::cout << payload;
      }
      return ok ? 0 : kViolationError;
    }

    if (gauss->parsed()) {
      std::vector<InequalityReport> reports;
      gauss_reports(reports, g_tol, g_grid, g_amin, g_amax, g_eps);
      ordered_json config;
      config["command"] = "gauss";
      config["grid"] = g_grid;
      return finish(gauss_out, config, reports, false);
    }

    if (report->parsed()) {
      std::ifstream in(rep_in);
      if (!in) {
        std::cerr << "cannot read " << rep_in << "\n";
        return kUsageError;
      }
      ordered_json doc = ordered_json::parse(in);
      std::vector<InequalityReport> reports;
      for (const auto& r : doc.at("reports")) {
        InequalityReport rep;
        rep.law = r.at("law");
        rep.n = r.at("n");
        auto num = [](const ordered_json& v) {
          return v.is_number() ? v.get<double>()
                               : std::numeric_limits<double>::quiet_NaN();
        };
        rep.p = num(r.at("p"));
        rep.lhs = num(r.at("lhs"));
        rep.rhs_unit = num(r.at("rhs_unit"));
        rep.ratio = num(r.at("ratio"));
        rep.pass = r.at("pass");
        rep.witness_hex = r.at("witness_hex");
        rep.tol = num(r.at("tol"));
        reports.push_back(std::move(rep));
      }
      std::string payload = report_out.format == "csv"
                                ? reports_csv(reports)
                                : report_document(doc.value("config", ordered_json::object()), reports).dump(2) + "\n";
      if (!report_out.out_path.empty())
        write_text_file(report_out.out_path, payload);
      else
        std::cout << payload;
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  }
  return 0;
}
