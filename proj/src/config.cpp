#include "dplt/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

namespace dplt {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid numeric value for '" + key + "': " + value);
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer value for '" + key + "': " + value);
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid seed value for '" + key + "': " + value);
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "on" || value == "1") return true;
    if (value == "false" || value == "off" || value == "0") return false;
    throw ConfigError("invalid boolean value for '" + key + "': " + value);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct KeyEntry {
    std::function<void(ScenarioConfig&, const std::string&, const std::string&)> set;
    std::function<std::string(const ScenarioConfig&)> get;
};

const std::vector<std::pair<std::string, KeyEntry>>& key_table() {
    using C = ScenarioConfig;
    static const std::vector<std::pair<std::string, KeyEntry>> table = {
        {"area.width", {[](C& c, const std::string& k, const std::string& v) { c.area_w = parse_double(k, v); },
                        [](const C& c) { return fmt(c.area_w); }}},
        {"area.height", {[](C& c, const std::string& k, const std::string& v) { c.area_h = parse_double(k, v); },
                         [](const C& c) { return fmt(c.area_h); }}},
        {"nodes.count", {[](C& c, const std::string& k, const std::string& v) { c.node_count = parse_int(k, v); },
                         [](const C& c) { return std::to_string(c.node_count); }}},
        {"antenna.efficiency", {[](C& c, const std::string& k, const std::string& v) { c.antenna.efficiency = parse_double(k, v); },
                                [](const C& c) { return fmt(c.antenna.efficiency); }}},
        {"antenna.tx_power_dbm", {[](C& c, const std::string& k, const std::string& v) { c.tx_power_dbm = parse_double(k, v); },
                                  [](const C& c) { return fmt(c.tx_power_dbm); }}},
        {"antenna.elements", {[](C& c, const std::string& k, const std::string& v) { c.antenna.elements = parse_int(k, v); },
                              [](const C& c) { return std::to_string(c.antenna.elements); }}},
        {"antenna.aperture_m", {[](C& c, const std::string& k, const std::string& v) { c.antenna.aperture_m = parse_double(k, v); },
                                [](const C& c) { return fmt(c.antenna.aperture_m); }}},
        {"antenna.max_range_m", {[](C& c, const std::string& k, const std::string& v) { c.antenna.max_range_m = parse_double(k, v); },
                                 [](const C& c) { return fmt(c.antenna.max_range_m); }}},
        {"antenna.range_ref_m", {[](C& c, const std::string& k, const std::string& v) { c.antenna.range_ref_m = parse_double(k, v); },
                                 [](const C& c) { return fmt(c.antenna.range_ref_m); }}},
        {"antenna.sidelobe_gain_db", {[](C& c, const std::string& k, const std::string& v) { c.antenna.sidelobe_gain_db = parse_double(k, v); },
                                      [](const C& c) { return fmt(c.antenna.sidelobe_gain_db); }}},
        {"channel.carrier_hz", {[](C& c, const std::string& k, const std::string& v) { c.channel.carrier_hz = parse_double(k, v); },
                                [](const C& c) { return fmt(c.channel.carrier_hz); }}},
        {"channel.ebn0_db", {[](C& c, const std::string& k, const std::string& v) { c.channel.ebn0_db = parse_double(k, v); },
                             [](const C& c) { return fmt(c.channel.ebn0_db); }}},
        {"channel.fading", {[](C& c, const std::string& k, const std::string& v) {
                                if (v == "awgn") c.channel.fading = rf::Fading::Awgn;
                                else if (v == "rayleigh") c.channel.fading = rf::Fading::Rayleigh;
                                else throw ConfigError("invalid fading mode for '" + k + "': " + v);
                            },
                            [](const C& c) {
                                return std::string(c.channel.fading == rf::Fading::Awgn ? "awgn" : "rayleigh");
                            }}},
        {"channel.sample_errors", {[](C& c, const std::string& k, const std::string& v) { c.channel_sample_errors = parse_bool(k, v); },
                                   [](const C& c) { return std::string(c.channel_sample_errors ? "true" : "false"); }}},
        {"channel.doppler_ref_hz", {[](C& c, const std::string& k, const std::string& v) { c.doppler_ref_hz = parse_double(k, v); },
                                    [](const C& c) { return fmt(c.doppler_ref_hz); }}},
        {"mobility.speed_min", {[](C& c, const std::string& k, const std::string& v) { c.mobility.speed_min = parse_double(k, v); },
                                [](const C& c) { return fmt(c.mobility.speed_min); }}},
        {"mobility.speed_max", {[](C& c, const std::string& k, const std::string& v) { c.mobility.speed_max = parse_double(k, v); },
                                [](const C& c) { return fmt(c.mobility.speed_max); }}},
        {"mobility.p_turn", {[](C& c, const std::string& k, const std::string& v) { c.mobility.p_turn = parse_double(k, v); },
                             [](const C& c) { return fmt(c.mobility.p_turn); }}},
        {"mobility.turn_slowdown", {[](C& c, const std::string& k, const std::string& v) { c.mobility.turn_slowdown = parse_double(k, v); },
                                    [](const C& c) { return fmt(c.mobility.turn_slowdown); }}},
        {"estimator", {[](C& c, const std::string& k, const std::string& v) {
                           if (v == "dplt") c.estimator = estimators::EstimatorKind::Dplt;
                           else if (v == "rss") c.estimator = estimators::EstimatorKind::Rss;
                           else if (v == "aoa") c.estimator = estimators::EstimatorKind::Aoa;
                           else throw ConfigError("invalid estimator for '" + k + "': " + v);
                       },
                       [](const C& c) {
                           switch (c.estimator) {
                               case estimators::EstimatorKind::Dplt: return std::string("dplt");
                               case estimators::EstimatorKind::Rss: return std::string("rss");
                               default: return std::string("aoa");
                           }
                       }}},
        {"tracker.tau_ms", {[](C& c, const std::string& k, const std::string& v) { c.tracker.tau_ms = parse_double(k, v); },
                            [](const C& c) { return fmt(c.tracker.tau_ms); }}},
        {"tracker.rc_ms", {[](C& c, const std::string& k, const std::string& v) { c.tracker.rc_ms = parse_double(k, v); },
                           [](const C& c) { return fmt(c.tracker.rc_ms); }}},
        {"tracker.scan_rate_deg_s", {[](C& c, const std::string& k, const std::string& v) { c.tracker.scan_rate_deg_s = parse_double(k, v); },
                                     [](const C& c) { return fmt(c.tracker.scan_rate_deg_s); }}},
        {"tracker.sector_margin_deg", {[](C& c, const std::string& k, const std::string& v) { c.tracker.sector_margin_deg = parse_double(k, v); },
                                       [](const C& c) { return fmt(c.tracker.sector_margin_deg); }}},
        {"beam.min_deg", {[](C& c, const std::string& k, const std::string& v) { c.min_beamwidth_deg = parse_double(k, v); },
                          [](const C& c) { return fmt(c.min_beamwidth_deg); }}},
        {"zone.r_min_m", {[](C& c, const std::string& k, const std::string& v) { c.zone_r_min = parse_double(k, v); },
                          [](const C& c) { return fmt(c.zone_r_min); }}},
        {"ranging.bias_ns", {[](C& c, const std::string& k, const std::string& v) { c.ranging.bias_ns = parse_double(k, v); },
                             [](const C& c) { return fmt(c.ranging.bias_ns); }}},
        {"ranging.jitter_ns", {[](C& c, const std::string& k, const std::string& v) { c.ranging.jitter_ns = parse_double(k, v); },
                               [](const C& c) { return fmt(c.ranging.jitter_ns); }}},
        {"ranging.ensemble", {[](C& c, const std::string& k, const std::string& v) { c.ranging.ensemble = parse_int(k, v); },
                              [](const C& c) { return std::to_string(c.ranging.ensemble); }}},
        {"ranging.round_trip", {[](C& c, const std::string& k, const std::string& v) { c.ranging.round_trip = parse_bool(k, v); },
                                [](const C& c) { return std::string(c.ranging.round_trip ? "true" : "false"); }}},
        {"ranging.beam_jitter_scaling", {[](C& c, const std::string& k, const std::string& v) { c.ranging.beam_jitter_scaling = parse_bool(k, v); },
                                         [](const C& c) { return std::string(c.ranging.beam_jitter_scaling ? "true" : "false"); }}},
        {"rss.exponent", {[](C& c, const std::string& k, const std::string& v) { c.rss.model.exponent = parse_double(k, v); },
                          [](const C& c) { return fmt(c.rss.model.exponent); }}},
        {"rss.ref_distance_m", {[](C& c, const std::string& k, const std::string& v) { c.rss.model.ref_distance_m = parse_double(k, v); },
                                [](const C& c) { return fmt(c.rss.model.ref_distance_m); }}},
        {"rss.ref_loss_db", {[](C& c, const std::string& k, const std::string& v) { c.rss.model.ref_loss_db = parse_double(k, v); },
                             [](const C& c) { return fmt(c.rss.model.ref_loss_db); }}},
        {"rss.shadowing_db", {[](C& c, const std::string& k, const std::string& v) { c.rss.shadowing_db = parse_double(k, v); },
                              [](const C& c) { return fmt(c.rss.shadowing_db); }}},
        {"aoa.sigma_deg", {[](C& c, const std::string& k, const std::string& v) { c.aoa.sigma_deg = parse_double(k, v); },
                           [](const C& c) { return fmt(c.aoa.sigma_deg); }}},
        {"fec.enabled", {[](C& c, const std::string& k, const std::string& v) { c.fec.enabled = parse_bool(k, v); },
                         [](const C& c) { return std::string(c.fec.enabled ? "true" : "false"); }}},
        {"fec.blocks_per_packet", {[](C& c, const std::string& k, const std::string& v) { c.fec_blocks_per_packet = parse_int(k, v); },
                                   [](const C& c) { return std::to_string(c.fec_blocks_per_packet); }}},
        {"broadcast.bits", {[](C& c, const std::string& k, const std::string& v) { c.broadcast.bits = parse_int(k, v); },
                            [](const C& c) { return std::to_string(c.broadcast.bits); }}},
        {"broadcast.sync_ms", {[](C& c, const std::string& k, const std::string& v) { c.broadcast.sync_ms = parse_double(k, v); },
                               [](const C& c) { return fmt(c.broadcast.sync_ms); }}},
        {"broadcast.max_wait_s", {[](C& c, const std::string& k, const std::string& v) { c.broadcast.max_wait_s = parse_double(k, v); },
                                  [](const C& c) { return fmt(c.broadcast.max_wait_s); }}},
        {"sim.tick_ms", {[](C& c, const std::string& k, const std::string& v) { c.sim.tick_ms = parse_double(k, v); },
                         [](const C& c) { return fmt(c.sim.tick_ms); }}},
        {"sim.duration_s", {[](C& c, const std::string& k, const std::string& v) { c.sim.duration_s = parse_double(k, v); },
                            [](const C& c) { return fmt(c.sim.duration_s); }}},
        {"sim.accuracy_eps_m", {[](C& c, const std::string& k, const std::string& v) { c.sim.accuracy_eps_m = parse_double(k, v); },
                                [](const C& c) { return fmt(c.sim.accuracy_eps_m); }}},
        {"seed", {[](C& c, const std::string& k, const std::string& v) { c.seed = parse_u64(k, v); },
                  [](const C& c) { return std::to_string(c.seed); }}},
    };
    return table;
}

const KeyEntry* find_key(const std::string& key) {
    for (const auto& [name, entry] : key_table())
        if (name == key) return &entry;
    return nullptr;
}

void apply_pair(ScenarioConfig& cfg, const std::string& key, const std::string& value,
                const std::string& origin, int line) {
    const KeyEntry* entry = find_key(key);
    if (!entry)
        throw ConfigError(origin + ":" + std::to_string(line) + ": unknown key '" + key + "'");
    entry->set(cfg, key, value);
}

} // namespace

ScenarioConfig parse_config_text(const std::string& text,
                                 const std::map<std::string, std::string>& overrides,
                                 const std::string& origin) {
    ScenarioConfig cfg;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected key = value");
        apply_pair(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), origin, line_no);
    }
    for (const auto& [key, value] : overrides) apply_pair(cfg, key, value, "<flag>", 0);
    cfg.antenna.tx_power_w = std::pow(10.0, (cfg.tx_power_dbm - 30.0) / 10.0);
    validate_config(cfg);
    return cfg;
}

ScenarioConfig parse_config_file(const std::string& path,
                                 const std::map<std::string, std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), overrides, path);
}

std::string serialize_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    for (const auto& [name, entry] : key_table()) out << name << " = " << entry.get(cfg) << "\n";
    return out.str();
}

void validate_config(const ScenarioConfig& cfg) {
    auto fail = [](const std::string& field, const std::string& why) {
        throw ConfigError(field + ": " + why);
    };
    if (!(cfg.area_w > 0.0) || !(cfg.area_h > 0.0)) fail("area", "must be positive");
    if (cfg.node_count < 2) fail("nodes.count", "need at least two friendly nodes");
    if (!(cfg.antenna.efficiency > 0.0) || cfg.antenna.efficiency > 1.0)
        fail("antenna.efficiency", "must be in (0, 1]");
    if (!(cfg.antenna.max_range_m > 0.0)) fail("antenna.max_range_m", "must be positive");
    if (!(cfg.antenna.range_ref_m > 0.0)) fail("antenna.range_ref_m", "must be positive");
    if (!(cfg.channel.carrier_hz > 0.0)) fail("channel.carrier_hz", "must be positive");
    if (!(cfg.mobility.speed_min > 0.0) || cfg.mobility.speed_min > cfg.mobility.speed_max)
        fail("mobility.speed_min", "need 0 < speed_min <= speed_max");
    if (cfg.mobility.p_turn < 0.0 || cfg.mobility.p_turn > 1.0)
        fail("mobility.p_turn", "must be in [0, 1]");
    if (!(cfg.mobility.turn_slowdown > 0.0) || cfg.mobility.turn_slowdown > 1.0)
        fail("mobility.turn_slowdown", "must be in (0, 1]");
    if (!(cfg.tracker.tau_ms > 0.0)) fail("tracker.tau_ms", "must be positive");
    if (!(cfg.tracker.rc_ms > 0.0)) fail("tracker.rc_ms", "must be positive");
    if (!(cfg.min_beamwidth_deg > 0.0) || cfg.min_beamwidth_deg > 180.0)
        fail("beam.min_deg", "must be in (0, 180]");
    if (!(cfg.zone_r_min > 0.0)) fail("zone.r_min_m", "must be positive");
    if (cfg.ranging.jitter_ns < 0.0) fail("ranging.jitter_ns", "must be non-negative");
    if (cfg.ranging.ensemble < 1) fail("ranging.ensemble", "must be at least 1");
    if (!(cfg.rss.model.exponent > 0.0)) fail("rss.exponent", "must be positive");
    if (cfg.fec_blocks_per_packet < 1) fail("fec.blocks_per_packet", "must be at least 1");
    if (cfg.broadcast.bits < 1) fail("broadcast.bits", "must be at least 1");
    if (!(cfg.sim.tick_ms > 0.0)) fail("sim.tick_ms", "must be positive");
    if (cfg.sim.duration_s * 1000.0 < cfg.sim.tick_ms) fail("sim.duration_s", "shorter than one tick");
    if (!(cfg.doppler_ref_hz > 0.0)) fail("channel.doppler_ref_hz", "must be positive");
}

} // namespace dplt
