#include "thue/report.hpp"

#include <unistd.h>

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace thue {

namespace {

nlohmann::json occurrence_json(const Occurrence& occ) {
  return {{"start", occ.start},
          {"end", occ.end},
          {"embedding", occ.embedding}};
}

template <typename Entry>
nlohmann::json entry_json(const Entry& entry, const EventCatalog& catalog) {
  nlohmann::json mos = nlohmann::json::array();
  for (const auto& occ : entry.mos)
    mos.push_back(occurrence_json(occ));
  return {{"episode", entry.episode.format(catalog)},
          {"utility", entry.utility},
          {"mo_count", entry.mos.size()},
          {"mos", std::move(mos)}};
}

}  // namespace

nlohmann::json to_json(const MiningStats& stats) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& [ordinal, value] : stats.threshold_trace)
    trace.push_back({ordinal, value});
  return {{"candidates", stats.candidates},
          {"initial_min_util", stats.initial_min_util},
          {"final_min_util", stats.final_min_util},
          {"threshold_trace", std::move(trace)},
          {"elapsed_seconds", stats.elapsed_seconds},
          {"peak_tracked_bytes", stats.peak_tracked_bytes}};
}

nlohmann::json to_json(const HueResult& result, const EventCatalog& catalog) {
  nlohmann::json episodes = nlohmann::json::array();
  for (const auto& entry : result.episodes)
    episodes.push_back(entry_json(entry, catalog));
  return {{"episodes", std::move(episodes)}, {"stats", to_json(result.stats)}};
}

nlohmann::json entries_to_json(const std::vector<OracleEntry>& entries,
                               const EventCatalog& catalog) {
  nlohmann::json episodes = nlohmann::json::array();
  for (const auto& entry : entries)
    episodes.push_back(entry_json(entry, catalog));
  return episodes;
}

nlohmann::json to_json(const RunReport& report) {
  return {{"command", report.command},
          {"config", report.config},
          {"environment", {{"host", report.host}, {"build", report.build}}},
          {"result", report.result}};
}

RunReport run_report_from_json(const nlohmann::json& j) {
  RunReport report;
  report.command = j.at("command").get<std::string>();
  report.config = j.at("config");
  report.host = j.at("environment").at("host").get<std::string>();
  report.build = j.at("environment").at("build").get<std::string>();
  report.result = j.at("result");
  return report;
}

std::string episodes_csv(const HueResult& result,
                         const EventCatalog& catalog) {
  std::ostringstream out;
  out << "rank,episode,utility,mo_count\n";
  std::size_t rank = 0;
  for (const auto& entry : result.episodes)
    out << ++rank << ",\"" << entry.episode.format(catalog) << "\","
        << entry.utility << ',' << entry.mos.size() << '\n';
  return out.str();
}

std::string episodes_text(const HueResult& result,
                          const EventCatalog& catalog) {
  std::ostringstream out;
  std::size_t width = 7;
  for (const auto& entry : result.episodes)
    width = std::max(width, entry.episode.format(catalog).size());
  out << std::left << std::setw(6) << "rank" << std::setw(width + 2)
      << "episode" << std::right << std::setw(10) << "utility"
      << std::setw(10) << "mo_count" << '\n';
  std::size_t rank = 0;
  for (const auto& entry : result.episodes)
    out << std::left << std::setw(6) << ++rank << std::setw(width + 2)
        << entry.episode.format(catalog) << std::right << std::setw(10)
        << entry.utility << std::setw(10) << entry.mos.size() << '\n';
  const auto& s = result.stats;
  out << "candidates: " << s.candidates
      << "  min_util: " << s.initial_min_util << " -> " << s.final_min_util
      << "  elapsed: " << s.elapsed_seconds << "s\n";
  return out.str();
}

std::string host_name() {
  char buf[256] = {};
  if (gethostname(buf, sizeof buf - 1) != 0)
    return "unknown";
  return buf;
}

std::string build_id() {
  return "thue 0.1.0 (" +
#if defined(__clang__)
         std::string("clang ") + __clang_version__
#elif defined(__GNUC__)
         std::string("gcc ") + std::to_string(__GNUC__) + "." +
         std::to_string(__GNUC_MINOR__)
#else
         std::string("unknown compiler")
#endif
         + ")";
}

}  // namespace thue
