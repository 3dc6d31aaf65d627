#pragma once

#include <string>
#include <vector>

#include "dplt/agents.hpp"
#include "dplt/config.hpp"
#include "dplt/estimators.hpp"

namespace dplt::engine {

struct StepRecord {
    long tick = 0;
    double time_ms = 0.0;
    geom::Point2D true_pos;
    geom::Point2D estimate;
    double error_m = 0.0;
    agents::Mode mode_a = agents::Mode::Searching;
    agents::Mode mode_c = agents::Mode::Searching;
    int ref_a = -1;
    int ref_c = -1;
    geom::Point2D zone_center;
    double zone_radius = 0.0;
    double beamwidth_rad = 0.0;
    bool zone_updated = false;
    bool coverage_gap = false;
};

struct SummaryMetrics {
    double mean_error_m = 0.0;
    double accuracy = 0.0; // fraction of ticks with error <= eps
    long zone_update_count = 0;
    double mean_broadcast_time_s = 0.0;
    double coverage_gap_fraction = 0.0;
    long ref_switch_count = 0;
};

struct RunResult {
    std::vector<StepRecord> records;
    SummaryMetrics summary;
    // Channel sample-error bookkeeping (populated when sample errors are on).
    long raw_sample_errors = 0;
    long residual_sample_errors = 0;
    long total_samples = 0;
};

struct SpeedSweepRow {
    double speed_mps = 0.0;
    double mean_error_m = 0.0;
};

struct TradeoffRow {
    double beamwidth_deg = 0.0;
    double zone_updates_per_s = 0.0;
    double mean_error_m = 0.0;
    double t_zonal_s = 0.0;  // analytic
    double p_error_m = 0.0;  // analytic
};

struct BroadcastRow {
    double p_turn_per_s = 0.0;
    double beamwidth_deg = 0.0; // 0 encodes omni
    bool omni = false;
    double mean_time_s = 0.0;
};

struct FecRow {
    double ebn0_db = 0.0;
    double accuracy_fec_on = 0.0;
    double accuracy_fec_off = 0.0;
    double residual_ber = 0.0;
    double raw_ber = 0.0;
};

struct CompareRow {
    std::uint64_t seed = 0;
    double err_dplt = 0.0;
    double err_aoa = 0.0;
    double err_rss = 0.0;
};

// Deterministic: identical (config, seed) gives identical output.
RunResult run_scenario(const ScenarioConfig& cfg);

SummaryMetrics summarize(const std::vector<StepRecord>& records, double accuracy_eps_m);

// Each sweep derives cell seeds from (master seed, cell parameters), so
// results do not depend on list order or execution order.
std::vector<SpeedSweepRow> speed_sweep(const ScenarioConfig& cfg,
                                       const std::vector<double>& speeds_mps,
                                       int seeds_per_cell = 5);

std::vector<TradeoffRow> beamwidth_tradeoff_sweep(const ScenarioConfig& cfg,
                                                  const std::vector<double>& beamwidths_deg,
                                                  int seeds_per_cell = 5);

// Beamwidths in degrees; a non-positive value selects the omni baseline.
std::vector<BroadcastRow> broadcasting_time_experiment(const ScenarioConfig& cfg,
                                                       const std::vector<double>& p_turns_per_s,
                                                       const std::vector<double>& beamwidths_deg,
                                                       int seeds_per_cell = 100);

std::vector<FecRow> fec_accuracy_experiment(const ScenarioConfig& cfg,
                                            const std::vector<double>& ebn0_db,
                                            int seeds_per_cell = 5);

// Same trajectory per seed across estimators; independent noise streams.
std::vector<CompareRow> compare_estimators(const ScenarioConfig& cfg, int seeds);

} // namespace dplt::engine
