#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "dplt/agents.hpp"
#include "dplt/estimators.hpp"
#include "dplt/rf.hpp"

namespace dplt {

struct RangingConfig {
    double bias_ns = 0.0;
    double jitter_ns = 3.0;
    int ensemble = 128;          // averaged timing packets per measurement
    bool round_trip = false;
    bool beam_jitter_scaling = true; // timing noise grows with beamwidth
};

struct RssConfig {
    estimators::PathLossModel model;
    double shadowing_db = 4.0;
};

struct AoaConfig {
    double sigma_deg = 2.0;
};

struct TrackerConfig {
    double tau_ms = 1500.0;
    double rc_ms = 500.0;
    double scan_rate_deg_s = 90.0;
    double sector_margin_deg = 2.0; // detection slack beyond the half-beamwidth
};

struct BroadcastConfig {
    int bits = 128;
    double sync_ms = 1000.0; // re-acquisition outage after a direction change
    double max_wait_s = 30.0;
};

struct SimConfig {
    double tick_ms = 10.0;
    double duration_s = 30.0;
    double accuracy_eps_m = 1.0;
};

struct ScenarioConfig {
    double area_w = 500.0;
    double area_h = 500.0;
    int node_count = 60;
    double tx_power_dbm = 40.0; // user-facing; antenna.tx_power_w is derived
    rf::AntennaParams antenna;
    rf::ChannelParams channel;
    bool channel_sample_errors = false; // corrupt ranging packets at the channel BER
    agents::MobilityParams mobility;
    estimators::EstimatorKind estimator = estimators::EstimatorKind::Dplt;
    TrackerConfig tracker;
    double min_beamwidth_deg = 5.0;
    double zone_r_min = 0.5;
    double doppler_ref_hz = 250.0;
    RangingConfig ranging;
    RssConfig rss;
    AoaConfig aoa;
    rf::FecConfig fec;
    int fec_blocks_per_packet = 4;
    BroadcastConfig broadcast;
    SimConfig sim;
    std::uint64_t seed = 1;
};

// Defaults <- file <- flag overrides. Unknown keys are hard errors.
ScenarioConfig parse_config_file(const std::string& path,
                                 const std::map<std::string, std::string>& overrides = {});
ScenarioConfig parse_config_text(const std::string& text,
                                 const std::map<std::string, std::string>& overrides = {},
                                 const std::string& origin = "<inline>");

// Full key=value echo; feeding it back through the parser reproduces the
// configuration bit-exactly.
std::string serialize_config(const ScenarioConfig& cfg);

void validate_config(const ScenarioConfig& cfg);

} // namespace dplt
