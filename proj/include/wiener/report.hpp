#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wiener/constructors.hpp"
#include "wiener/oracle.hpp"

namespace wiener {

// One entry of the "candidates" array in a run report.
struct CandidateArtifact {
    std::string kind;
    std::int64_t wiener = 0;
    std::string canonical;
    std::string dot_path;  // relative path, kept stable across output dirs
};

struct RunReport {
    Degrees degrees;
    int girth = 0;
    std::vector<CandidateArtifact> candidates;
    std::optional<EnumerationReport> oracle;
    std::vector<CheckOutcome> checks;
};

// Schema: { "degrees": [...], "girth": g,
//           "candidates": [{"kind","wiener","canonical","dot_path"}],
//           "oracle": {"exhaustive","min_wiener","count","minimizers"} | null,
//           "checks": [{"id","tested","violations"}] }
std::string report_to_json(const RunReport& report);

// Parse and re-emit; byte-identical output for anything report_to_json wrote.
std::string reemit_json(const std::string& json_text);

std::string conjecture_to_json(const ConjectureTable& table);
std::string conjecture_to_text(const ConjectureTable& table);

}  // namespace wiener
