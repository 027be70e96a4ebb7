#include "hcube/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace hcube {

ordered_json json_num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

ordered_json to_json(const InequalityReport& r) {
  ordered_json j;
  j["law"] = r.law;
  j["n"] = r.n;
  j["p"] = json_num(r.p);
  j["lhs"] = json_num(r.lhs);
  j["rhs_unit"] = json_num(r.rhs_unit);
  j["ratio"] = json_num(r.ratio);
  j["pass"] = r.pass;
  j["witness_hex"] = r.witness_hex;
  j["tol"] = json_num(r.tol);
  if (!r.params.empty()) {
    ordered_json params;
    for (const auto& [k, v] : r.params) params[k] = json_num(v);
    j["params"] = std::move(params);
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

ordered_json to_json(const ProofStep& s) {
  ordered_json j;
  j["name"] = s.name;
  j["lhs"] = json_num(s.lhs);
  j["rhs"] = json_num(s.rhs);
  j["slack"] = json_num(s.slack);
  j["pass"] = s.pass;
  return j;
}

ordered_json to_json(const ProofTrace& t) {
  ordered_json j;
  j["branch"] = to_string(t.branch);
  j["W"] = json_num(t.W);
  j["var"] = json_num(t.var);
  j["e_grad"] = json_num(t.e_grad);
  j["epsilon"] = json_num(t.epsilon);
  j["t"] = json_num(t.t);
  j["theta"] = json_num(t.theta);
  j["final_constant"] = json_num(t.final_constant);
  j["all_pass"] = t.all_pass;
  ordered_json steps = ordered_json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  j["steps"] = std::move(steps);
  return j;
}

ordered_json to_json(const SearchResult& s) {
  ordered_json j;
  j["law"] = s.law;
  j["n"] = s.n;
  j["p"] = json_num(s.p);
  j["mode"] = s.exhaustive ? "exhaustive" : "random";
  if (!s.exhaustive) {
    j["samples"] = s.samples;
    j["seed"] = s.seed;
  }
  j["min_ratio"] = json_num(s.min_ratio);
  j["argmin"] = s.argmin_hex;
  j["evaluated"] = s.evaluated;
  j["excluded"] = s.excluded;
  return j;
}

ordered_json to_json(const ProfileBounds& b) {
  ordered_json j;
  j["x"] = json_num(b.x);
  j["value"] = json_num(b.value);
  j["quadratic"] = json_num(b.quadratic);
  j["log_lower"] = json_num(b.log_lower);
  return j;
}

ordered_json report_document(const ordered_json& config,
                             const std::vector<InequalityReport>& reports) {
  ordered_json doc;
  doc["tool"] = "hcube";
  doc["version"] = "0.1.0";
  doc["generated_at"] = utc_timestamp();
  doc["config"] = config;

  std::size_t passed = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  const InequalityReport* worst = nullptr;
  for (const auto& r : reports) {
    if (r.pass) ++passed;
    if (r.rhs_unit > 0.0 && r.ratio < min_ratio) {
      min_ratio = r.ratio;
      worst = &r;
    }
  }
  ordered_json summary;
  summary["total"] = reports.size();
  summary["passed"] = passed;
  summary["violations"] = reports.size() - passed;
  if (worst) {
    summary["min_ratio"] = json_num(min_ratio);
    summary["min_ratio_law"] = worst->law;
    summary["min_ratio_witness"] = worst->witness_hex;
  }
  doc["summary"] = std::move(summary);

  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  doc["reports"] = std::move(arr);
  return doc;
}

namespace {

std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string reports_csv(const std::vector<InequalityReport>& reports) {
  std::string out = "law,n,p,lhs,rhs_unit,ratio,pass,witness_hex,tol\n";
  for (const auto& r : reports) {
    out += r.law;
    out += ',';
    out += std::to_string(r.n);
    out += ',';
    out += csv_num(r.p);
    out += ',';
    out += csv_num(r.lhs);
    out += ',';
    out += csv_num(r.rhs_unit);
    out += ',';
    out += csv_num(r.ratio);
    out += ',';
    out += r.pass ? "true" : "false";
    out += ',';
    out += r.witness_hex;
    out += ',';
    out += csv_num(r.tol);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream fs(path, std::ios::binary);
  if (!fs) throw std::runtime_error("cannot open " + path + " for writing");
  fs << content;
  if (!fs) throw std::runtime_error("short write to " + path);
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace hcube
