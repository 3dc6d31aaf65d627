#pragma once

#include <string>
#include <vector>

#include "dplt/config.hpp"
#include "dplt/engine.hpp"

namespace dplt::csv {

inline constexpr const char* kRecordsHeader =
    "tick,time_ms,true_x,true_y,est_x,est_y,error_m,mode_a,mode_c,ref_a,ref_c,"
    "zone_x,zone_y,zone_r,beamwidth_rad,zone_updated,coverage_gap";

inline constexpr const char* kSummaryHeader =
    "mean_error_m,accuracy,zone_update_count,mean_broadcast_time_s,"
    "coverage_gap_fraction,ref_switch_count";

// All numeric fields use '.' decimals, '\n' newlines, 9 significant digits.
std::string records_csv(const std::vector<engine::StepRecord>& records);
std::string summary_csv(const engine::SummaryMetrics& summary);
std::string speed_sweep_csv(const std::vector<engine::SpeedSweepRow>& rows);
std::string tradeoff_csv(const std::vector<engine::TradeoffRow>& rows);
std::string broadcast_csv(const std::vector<engine::BroadcastRow>& rows);
std::string fec_csv(const std::vector<engine::FecRow>& rows);
std::string compare_csv(const std::vector<engine::CompareRow>& rows);

// Config echo + seed; re-running from the manifest reproduces the run.
std::string manifest_text(const ScenarioConfig& cfg);

void write_file(const std::string& path, const std::string& content);

// Re-parse a records CSV body (used by round-trip tests).
std::vector<engine::StepRecord> parse_records_csv(const std::string& body);

} // namespace dplt::csv
