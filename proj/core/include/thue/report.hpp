#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "thue/miner.hpp"
#include "thue/oracle.hpp"

namespace thue {

/// JSON shape shared by mining results and oracle listings:
/// {"episodes": [{"episode", "utility", "mo_count", "mos": [{"start",
/// "end", "embedding"}]}], "stats": {...}}. Timing lives in a single
/// stats field ("elapsed_seconds") so consumers can compare reports
/// byte-for-byte after dropping it.
nlohmann::json to_json(const HueResult& result, const EventCatalog& catalog);
nlohmann::json to_json(const MiningStats& stats);
nlohmann::json entries_to_json(const std::vector<OracleEntry>& entries,
                               const EventCatalog& catalog);

/// Full run record written by the command-line tool.
struct RunReport {
  std::string command;
  nlohmann::json config;
  std::string host;
  std::string build;
  nlohmann::json result;
};

nlohmann::json to_json(const RunReport& report);
RunReport run_report_from_json(const nlohmann::json& j);

/// "rank,episode,utility,mo_count" rows; episodes are quoted.
std::string episodes_csv(const HueResult& result, const EventCatalog& catalog);

/// Human-oriented summary table.
std::string episodes_text(const HueResult& result,
                          const EventCatalog& catalog);

std::string host_name();
std::string build_id();

}  // namespace thue
