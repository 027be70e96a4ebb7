#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hcube/isoperimetry.hpp"
#include "hcube/proof_trace.hpp"
#include "hcube/report.hpp"
#include "hcube/search.hpp"

namespace hcube {

using ordered_json = nlohmann::ordered_json;

// Non-finite doubles have no JSON form; they serialize as the strings
// "inf", "-inf", "nan" so that documents stay loadable.
ordered_json json_num(double v);

ordered_json to_json(const InequalityReport& r);
ordered_json to_json(const ProofStep& s);
ordered_json to_json(const ProofTrace& t);
ordered_json to_json(const SearchResult& s);
ordered_json to_json(const ProfileBounds& b);

// Full document: tool header, echo of the run configuration, pass/fail
// summary, then the per-instance reports. Identical inputs give
// byte-identical output except for the generated_at field.
ordered_json report_document(const ordered_json& config,
                             const std::vector<InequalityReport>& reports);

// Flat CSV with exactly the report schema columns.
std::string reports_csv(const std::vector<InequalityReport>& reports);

void write_text_file(const std::string& path, const std::string& content);

std::string utc_timestamp();

}  // namespace hcube
