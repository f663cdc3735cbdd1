#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "padic/counting.hpp"
#include "padic/lifting.hpp"
#include "padic/montecarlo.hpp"

namespace padic {

inline constexpr const char* kArtifactName = "padic-lab";
inline constexpr const char* kArtifactVersion = "0.1.0";

// Exact integers and rationals are serialized as decimal strings; doubles are
// rendered with a fixed number of digits so reports are byte-stable.

std::string count_csv_header();
std::string count_csv_row(const CountReport& report);
nlohmann::json count_json_row(const CountReport& report);
nlohmann::json count_json_report(const std::vector<CountReport>& rows);

std::string estimate_csv_header();
std::string estimate_csv_row(const EstimateReport& report);
nlohmann::json estimate_json_row(const EstimateReport& report);
nlohmann::json estimate_json_report(const std::vector<EstimateReport>& rows);

nlohmann::json trace_json(const LiftTrace& trace);
nlohmann::json defect_json(const DefectReport& report);

/// Human-readable one-liner for the defect, used by the CLI.
std::string defect_text(const DefectReport& report);

}  // namespace padic
