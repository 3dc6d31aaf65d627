#include "dplt/engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "dplt/ranging.hpp"

namespace dplt::engine {

using agents::Event;
using agents::Mode;
using agents::TrackerState;
using estimators::EstimatorKind;
using geom::Point2D;

namespace {

constexpr std::uint64_t kPlacementSalt = 0x706c6163;
constexpr std::uint64_t kMobilitySalt = 0x6d6f6269;
constexpr std::uint64_t kNoiseSalt = 0x6e6f6973;

// Replicate seeds are shared across parameter values: each replicate keeps
// its node placement and trajectory while the swept parameter varies, which
// pairs the cells and removes placement luck from cross-cell comparisons.
// They depend only on (master seed, replicate index), never execution order.
std::uint64_t replicate_seed(std::uint64_t master, std::uint64_t index) {
    return Rng::mix(master, index + 1);
}

double bearing(const Point2D& from, const Point2D& to) {
    return rf::wrap_angle(std::atan2(to.y - from.y, to.x - from.x));
}

// Effective ranging sigma: clock jitter inflated by Doppler spread, scaled
// with the beamwidth (wider beam, less concentrated power), reduced by
// ensemble averaging.
double range_sigma_m(const ScenarioConfig& cfg, double target_speed, double beamwidth_rad) {
    double sigma = cfg.ranging.jitter_ns * 1e-9 * rf::kSpeedOfLight;
    sigma *= 1.0 + rf::doppler_shift(target_speed, cfg.channel.carrier_hz) / cfg.doppler_ref_hz;
    if (cfg.ranging.beam_jitter_scaling) {
        const double bw_deg = beamwidth_rad * 180.0 / rf::kPi;
        sigma *= std::sqrt(std::max(bw_deg, 1e-6) / 10.0);
    }
    return sigma / std::sqrt(static_cast<double>(cfg.ranging.ensemble));
}

struct PacketOutcome {
    bool corrupted = false;
    int raw_errors = 0;
    int residual_errors = 0;
    int samples = 0;
};

// Sample-level channel: each discrete sample flips at the bit error rate;
// interleaved 1-of-4 correction runs when FEC is enabled.
PacketOutcome transmit_packet(const ScenarioConfig& cfg, Rng& rng) {
    PacketOutcome out;
    const int n = cfg.fec_blocks_per_packet * 4;
    out.samples = n;
    const double p = rf::ber(cfg.channel.ebn0_db, cfg.channel.fading);
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(n));
    for (auto& m : mask) {
        m = rng.uniform() < p ? 1 : 0;
        out.raw_errors += m;
    }
    if (cfg.fec.enabled) mask = rf::apply_fec(rf::deinterleave(mask), cfg.fec);
    for (auto m : mask) out.residual_errors += m;
    out.corrupted = out.residual_errors > 0;
    return out;
}

struct RoleState {
    int node = -1;
    TrackerState tracker;
};

} // namespace

RunResult run_scenario(const ScenarioConfig& cfg) {
    validate_config(cfg);

    Rng place_rng(Rng::mix(cfg.seed, kPlacementSalt));
    Rng mob_rng(Rng::mix(cfg.seed, kMobilitySalt));
    Rng noise_rng(Rng::mix(Rng::mix(cfg.seed, kNoiseSalt),
                           static_cast<std::uint64_t>(cfg.estimator)));

    const double tick_s = cfg.sim.tick_ms / 1000.0;
    const long ticks = static_cast<long>(std::llround(cfg.sim.duration_s * 1000.0 / cfg.sim.tick_ms));
    const double min_bw_rad = cfg.min_beamwidth_deg * rf::kPi / 180.0;
    const double margin_rad = cfg.tracker.sector_margin_deg * rf::kPi / 180.0;
    const double scan_rate_rad = cfg.tracker.scan_rate_deg_s * rf::kPi / 180.0;
    const bool dplt = cfg.estimator == EstimatorKind::Dplt;
    const double sel_range = dplt
        ? std::min(cfg.antenna.max_range_m, rf::directional_range(cfg.antenna, min_bw_rad))
        : cfg.antenna.max_range_m;

    std::vector<Point2D> friendly(static_cast<std::size_t>(cfg.node_count));
    for (auto& p : friendly)
        p = {place_rng.uniform(0.0, cfg.area_w), place_rng.uniform(0.0, cfg.area_h)};

    agents::MobilityParams mobility = cfg.mobility;
    mobility.bounds_w = cfg.area_w;
    mobility.bounds_h = cfg.area_h;
    agents::TargetState target;
    target.pos = {0.5 * cfg.area_w, 0.5 * cfg.area_h};
    target.heading_rad = mob_rng.uniform(0.0, 2.0 * rf::kPi);
    target.speed = mob_rng.uniform(mobility.speed_min, mobility.speed_max);

    estimators::DpltTracker::Options topts;
    topts.r_min = cfg.zone_r_min;
    topts.min_beamwidth_rad = min_bw_rad;
    estimators::DpltTracker tracker(topts);

    std::optional<Point2D> estimate; // latest estimate of any estimator
    std::optional<Point2D> prev_estimate;

    RoleState role_a, role_c;
    auto init_role = [&](RoleState& role, int node, double now_ms, const Point2D& guess) {
        role.node = node;
        role.tracker = TrackerState{};
        role.tracker.node_id = node;
        role.tracker.mode = Mode::Searching;
        role.tracker.mode_entry_ms = now_ms;
        role.tracker.tau_ms = cfg.tracker.tau_ms;
        role.tracker.rc_ms = cfg.tracker.rc_ms;
        role.tracker.beam.beamwidth_rad = rf::kPi;
        role.tracker.beam.sidelobe_gain_db = cfg.antenna.sidelobe_gain_db;
        role.tracker.beam.steering_rad = bearing(friendly[static_cast<std::size_t>(node)], guess);
    };

    RunResult result;
    result.records.reserve(static_cast<std::size_t>(ticks));
    long gap_ticks = 0;
    long switches = 0;
    bool have_refs = false;
    long stale_ticks = 0; // consecutive ticks without an accepted fix
    const long stale_limit = 50;

    const Point2D center{0.5 * cfg.area_w, 0.5 * cfg.area_h};
    try {
        const auto pair = agents::select_references(center, friendly, sel_range, {-1, -1});
        init_role(role_a, pair.first, 0.0, center);
        init_role(role_c, pair.second, 0.0, center);
        have_refs = true;
    } catch (const CoverageGap&) {
    }

    for (long t = 1; t <= ticks; ++t) {
        const double now_ms = static_cast<double>(t) * cfg.sim.tick_ms;
        target = agents::move_target(target, mobility, tick_s, mob_rng);
        const Point2D guess = estimate.value_or(center);

        StepRecord rec;
        rec.tick = t;
        rec.time_ms = now_ms;
        rec.true_pos = target.pos;

        // Reference maintenance; a switch restarts the incoming node in 'S'.
        try {
            const std::pair<int, int> current =
                have_refs ? std::pair<int, int>{role_a.node, role_c.node}
                          : std::pair<int, int>{-1, -1};
            const auto pair = agents::select_references(guess, friendly, sel_range, current);
            if (!have_refs || pair != current) {
                if (have_refs) ++switches;
                if (pair.first != role_a.node) init_role(role_a, pair.first, now_ms, guess);
                if (pair.second != role_c.node) init_role(role_c, pair.second, now_ms, guess);
                have_refs = true;
            }
        } catch (const CoverageGap&) {
            ++gap_ticks;
            rec.coverage_gap = true;
            rec.estimate = guess;
            rec.error_m = geom::distance(guess, target.pos);
            rec.mode_a = role_a.tracker.mode;
            rec.mode_c = role_c.tracker.mode;
            rec.ref_a = role_a.node;
            rec.ref_c = role_c.node;
            result.records.push_back(rec);
            continue;
        }

        const Point2D pos_a = friendly[static_cast<std::size_t>(role_a.node)];
        const Point2D pos_c = friendly[static_cast<std::size_t>(role_c.node)];

        auto advance_role = [&](RoleState& role, const Point2D& ref_pos) {
            const double d = geom::distance(ref_pos, target.pos);
            bool detected = false;
            if (role.tracker.mode == Mode::Searching) {
                detected = d <= sel_range; // omni listen while searching
            } else if (role.tracker.mode == Mode::Tracking) {
                const double off = std::fabs(rf::angle_diff(bearing(ref_pos, target.pos),
                                                            role.tracker.beam.steering_rad));
                detected = d <= sel_range &&
                           off <= 0.5 * role.tracker.beam.beamwidth_rad + margin_rad;
            }
            Event ev = Event::None;
            if (detected)
                ev = Event::TargetDetected;
            else if (role.tracker.mode == Mode::Tracking)
                ev = Event::TargetLost;
            role.tracker = agents::step_mode(role.tracker, ev, now_ms);
            if (role.tracker.mode != Mode::Tracking) {
                // Wide listening beam until a fresh measurement narrows it.
                role.tracker.beam.beamwidth_rad = rf::kPi;
                role.tracker.beam.steering_rad =
                    rf::wrap_angle(role.tracker.beam.steering_rad + scan_rate_rad * tick_s);
            }
        };
        advance_role(role_a, pos_a);
        advance_role(role_c, pos_c);

        const bool measuring = dplt
            ? (role_a.tracker.mode == Mode::Tracking && role_c.tracker.mode == Mode::Tracking)
            : (geom::distance(pos_a, target.pos) <= sel_range &&
               geom::distance(pos_c, target.pos) <= sel_range);

        // A received signal implies the target is in range of both refs and
        // inside the arena; fixes violating that are measurement artifacts.
        auto plausible = [&](const Point2D& fix, const Point2D& a, const Point2D& c) {
            return fix.x >= 0.0 && fix.x <= cfg.area_w && fix.y >= 0.0 && fix.y <= cfg.area_h &&
                   geom::distance(fix, a) <= sel_range && geom::distance(fix, c) <= sel_range;
        };

        bool accepted_fix = false;
        if (measuring) {
            const double true_da = geom::distance(pos_a, target.pos);
            const double true_dc = geom::distance(pos_c, target.pos);
            switch (cfg.estimator) {
                case EstimatorKind::Dplt: {
                    auto measure = [&](const Point2D& ref_pos, double true_d, int node) {
                        const double bw = tracker.zone() ? tracker.beamwidth_for(ref_pos)
                                                        : rf::kPi;
                        const double sigma = range_sigma_m(cfg, target.speed, bw);
                        ranging::ClockModel clock{cfg.ranging.bias_ns,
                                                  sigma / (1e-9 * rf::kSpeedOfLight)};
                        auto m = ranging::measure_range(true_d, clock, noise_rng, node);
                        if (cfg.channel_sample_errors) {
                            const auto pkt = transmit_packet(cfg, noise_rng);
                            result.raw_sample_errors += pkt.raw_errors;
                            result.residual_sample_errors += pkt.residual_errors;
                            result.total_samples += pkt.samples;
                            const double outlier = noise_rng.uniform(0.0, cfg.antenna.max_range_m);
                            if (pkt.corrupted) m.distance_m = outlier;
                        }
                        return m;
                    };
                    const auto meas_a = measure(pos_a, true_da, role_a.node);
                    const auto meas_c = measure(pos_c, true_dc, role_c.node);
                    // Ref A's array reports the arrival bearing every tick;
                    // the tracker uses it only to pick a mirror lobe.
                    const double cue =
                        ranging::measure_bearing(pos_a, target.pos,
                                                 cfg.aoa.sigma_deg * rf::kPi / 180.0,
                                                 noise_rng, role_a.node)
                            .bearing_rad;
                    const auto er = tracker.step(t, pos_a, meas_a, pos_c, meas_c, cue);
                    accepted_fix = !er.gated;
                    prev_estimate = estimate;
                    estimate = er.position;
                    rec.zone_center = er.zone.center;
                    rec.zone_radius = er.zone.radius;
                    rec.beamwidth_rad = er.beamwidth_rad;
                    rec.zone_updated = er.zone_updated;
                    // Steer both beams onto the zone for the next tick.
                    auto steer = [&](RoleState& role, const Point2D& ref_pos) {
                        if (!tracker.zone()) return;
                        role.tracker.beam.steering_rad = bearing(ref_pos, tracker.zone()->center);
                        role.tracker.beam.beamwidth_rad = tracker.beamwidth_for(ref_pos);
                    };
                    steer(role_a, pos_a);
                    steer(role_c, pos_c);
                    break;
                }
                case EstimatorKind::Rss: {
                    auto received_dbm = [&](double true_d) {
                        const auto& m = cfg.rss.model;
                        const double d = std::max(true_d, m.ref_distance_m * 1e-2);
                        const double loss =
                            m.ref_loss_db + 10.0 * m.exponent * std::log10(d / m.ref_distance_m);
                        double pr = cfg.tx_power_dbm - loss;
                        if (cfg.rss.shadowing_db > 0.0)
                            pr += cfg.rss.shadowing_db * noise_rng.gaussian();
                        return pr;
                    };
                    const double pr_a = received_dbm(true_da);
                    const double pr_c = received_dbm(true_dc);
                    // 'guess' seeds the mirror disambiguation before any fix
                    // exists; afterwards it equals the latest estimate.
                    const Point2D fix = estimators::rss_estimate(
                        pr_a, pr_c, pos_a, pos_c, cfg.tx_power_dbm, 0.0, cfg.rss.model,
                        std::nullopt, guess);
                    if (plausible(fix, pos_a, pos_c)) {
                        prev_estimate = estimate;
                        estimate = fix;
                        accepted_fix = true;
                    }
                    rec.beamwidth_rad = rf::kPi;
                    break;
                }
                case EstimatorKind::Aoa: {
                    const double sigma = cfg.aoa.sigma_deg * rf::kPi / 180.0;
                    const auto ba = ranging::measure_bearing(pos_a, target.pos, sigma, noise_rng,
                                                             role_a.node);
                    const auto bc = ranging::measure_bearing(pos_c, target.pos, sigma, noise_rng,
                                                             role_c.node);
                    try {
                        const Point2D fix = estimators::aoa_estimate(ba, bc, pos_a, pos_c);
                        if (plausible(fix, pos_a, pos_c)) {
                            prev_estimate = estimate;
                            estimate = fix;
                            accepted_fix = true;
                        }
                    } catch (const ParallelBearings&) {
                    } catch (const BehindRay&) {
                    }
                    rec.beamwidth_rad = rf::kPi;
                    break;
                }
            }
        } else if (dplt && tracker.zone()) {
            rec.zone_center = tracker.zone()->center;
            rec.zone_radius = tracker.zone()->radius;
        }

        // Staleness bookkeeping and reacquisition, shared by all estimators.
        stale_ticks = accepted_fix ? 0 : stale_ticks + 1;
        if (stale_ticks >= 10) {
            // Acquisition fallback after a sustained outage: the strongest
            // single-node contact (nearest in-range friendly node) reports
            // its range and arrival bearing as a coarse polar fix, which
            // re-anchors reference selection near the target.
            int contact = -1;
            double best_d = sel_range;
            for (std::size_t i = 0; i < friendly.size(); ++i) {
                const double d = geom::distance(friendly[i], target.pos);
                if (d <= best_d) {
                    best_d = d;
                    contact = static_cast<int>(i);
                }
            }
            if (contact >= 0) {
                const Point2D cp = friendly[static_cast<std::size_t>(contact)];
                const double sigma = range_sigma_m(cfg, target.speed, rf::kPi);
                ranging::ClockModel clock{cfg.ranging.bias_ns,
                                          sigma / (1e-9 * rf::kSpeedOfLight)};
                const auto m = ranging::measure_range(best_d, clock, noise_rng, contact);
                const double cue =
                    ranging::measure_bearing(cp, target.pos,
                                             cfg.aoa.sigma_deg * rf::kPi / 180.0,
                                             noise_rng, contact)
                        .bearing_rad;
                prev_estimate = estimate;
                estimate = cp + Point2D{std::cos(cue), std::sin(cue)} * m.distance_m;
            }
        }
        if (dplt && stale_ticks >= stale_limit) {
            // Prolonged failure to land a fix means the track is stale;
            // forget it and reacquire from scratch with wide beams.
            tracker.reset();
            init_role(role_a, role_a.node, now_ms, estimate.value_or(center));
            init_role(role_c, role_c.node, now_ms, estimate.value_or(center));
            stale_ticks = 0;
        }

        rec.estimate = estimate.value_or(center);
        rec.error_m = geom::distance(rec.estimate, target.pos);
        rec.mode_a = role_a.tracker.mode;
        rec.mode_c = role_c.tracker.mode;
        rec.ref_a = role_a.node;
        rec.ref_c = role_c.node;
        result.records.push_back(rec);
    }

    result.summary = summarize(result.records, cfg.sim.accuracy_eps_m);
    result.summary.zone_update_count = tracker.zone_update_count();
    result.summary.coverage_gap_fraction =
        static_cast<double>(gap_ticks) / static_cast<double>(ticks);
    result.summary.ref_switch_count = switches;
    return result;
}

SummaryMetrics summarize(const std::vector<StepRecord>& records, double accuracy_eps_m) {
    if (records.empty()) throw EmptyRun("no records to summarize");
    SummaryMetrics s;
    long hits = 0;
    long updates = 0;
    long gaps = 0;
    for (const auto& r : records) {
        s.mean_error_m += r.error_m;
        if (r.error_m <= accuracy_eps_m) ++hits;
        if (r.zone_updated) ++updates;
        if (r.coverage_gap) ++gaps;
    }
    const double n = static_cast<double>(records.size());
    s.mean_error_m /= n;
    s.accuracy = static_cast<double>(hits) / n;
    s.zone_update_count = updates;
    s.coverage_gap_fraction = static_cast<double>(gaps) / n;
    return s;
}

std::vector<SpeedSweepRow> speed_sweep(const ScenarioConfig& cfg,
                                       const std::vector<double>& speeds_mps,
                                       int seeds_per_cell) {
    if (speeds_mps.empty()) throw ConfigError("speed sweep needs at least one speed");
    std::vector<SpeedSweepRow> rows;
    rows.reserve(speeds_mps.size());
    for (const double speed : speeds_mps) {
        ScenarioConfig cell = cfg;
        cell.mobility.speed_min = speed;
        cell.mobility.speed_max = speed;
        double sum = 0.0;
        for (int j = 0; j < seeds_per_cell; ++j) {
            cell.seed = replicate_seed(cfg.seed, static_cast<std::uint64_t>(j));
            sum += run_scenario(cell).summary.mean_error_m;
        }
        rows.push_back({speed, sum / seeds_per_cell});
    }
    return rows;
}

std::vector<TradeoffRow> beamwidth_tradeoff_sweep(const ScenarioConfig& cfg,
                                                  const std::vector<double>& beamwidths_deg,
                                                  int seeds_per_cell) {
    if (beamwidths_deg.empty()) throw ConfigError("beamwidth sweep needs at least one width");
    std::vector<TradeoffRow> rows;
    rows.reserve(beamwidths_deg.size());
    for (const double bw : beamwidths_deg) {
        if (!(bw > 0.0)) throw InvalidBeamwidth("beamwidth must be positive");
        ScenarioConfig cell = cfg;
        cell.estimator = EstimatorKind::Dplt;
        cell.min_beamwidth_deg = bw;
        double err = 0.0;
        double overhead = 0.0;
        for (int j = 0; j < seeds_per_cell; ++j) {
            cell.seed = replicate_seed(cfg.seed, static_cast<std::uint64_t>(j));
            const auto res = run_scenario(cell);
            err += res.summary.mean_error_m;
            overhead += static_cast<double>(res.summary.zone_update_count) / cfg.sim.duration_s;
        }
        const auto [t_zonal, p_error] = rf::tradeoff_map(bw);
        rows.push_back({bw, overhead / seeds_per_cell, err / seeds_per_cell, t_zonal, p_error});
    }
    return rows;
}

std::vector<BroadcastRow> broadcasting_time_experiment(const ScenarioConfig& cfg,
                                                       const std::vector<double>& p_turns_per_s,
                                                       const std::vector<double>& beamwidths_deg,
                                                       int seeds_per_cell) {
    if (p_turns_per_s.empty() || beamwidths_deg.empty())
        throw ConfigError("broadcast experiment needs non-empty parameter lists");
    const double tick_s = cfg.sim.tick_ms / 1000.0;
    const long sync_ticks = std::max<long>(1, std::lround(cfg.broadcast.sync_ms / cfg.sim.tick_ms));
    const long warmup = 2 * sync_ticks;
    const long max_ticks = std::max<long>(1, std::lround(cfg.broadcast.max_wait_s / tick_s));

    std::vector<BroadcastRow> rows;
    for (const double p_s : p_turns_per_s) {
        const double p_tick = 1.0 - std::pow(1.0 - std::clamp(p_s, 0.0, 1.0), tick_s);
        for (const double bw_deg : beamwidths_deg) {
            const bool omni = !(bw_deg > 0.0);
            // Both ends run the same beam; aligned mainlobe-to-mainlobe
            // except while re-acquiring after a direction change.
            const double gain_db = omni
                ? 0.0
                : 10.0 * std::log10(2.0 * rf::kPi * cfg.antenna.efficiency /
                                    (bw_deg * rf::kPi / 180.0));
            const double p_bit = rf::ber(cfg.channel.ebn0_db + gain_db, cfg.channel.fading);
            const double p_ok = std::pow(1.0 - p_bit, cfg.broadcast.bits);

            double total_s = 0.0;
            for (int j = 0; j < seeds_per_cell; ++j) {
                // Shared stream per seed: the same turn/link draws drive every
                // grid cell, so trends hold sample-wise, not just in the mean.
                Rng rng(Rng::mix(cfg.seed, static_cast<std::uint64_t>(j) + 1));
                long last_turn = -sync_ticks - 1;
                for (long t = -warmup; t < 0; ++t) {
                    const double u_turn = rng.uniform();
                    rng.uniform(); // link slot, keeps per-tick consumption fixed
                    if (u_turn < p_tick) last_turn = t;
                }
                double elapsed = cfg.broadcast.max_wait_s;
                for (long t = 1; t <= max_ticks; ++t) {
                    const double u_turn = rng.uniform();
                    const double u_link = rng.uniform();
                    if (u_turn < p_tick) last_turn = t;
                    const bool outage = t - last_turn < sync_ticks;
                    if (!outage && u_link < p_ok) {
                        elapsed = static_cast<double>(t) * tick_s;
                        break;
                    }
                }
                total_s += elapsed;
            }
            rows.push_back({p_s, omni ? 0.0 : bw_deg, omni, total_s / seeds_per_cell});
        }
    }
    return rows;
}

std::vector<FecRow> fec_accuracy_experiment(const ScenarioConfig& cfg,
                                            const std::vector<double>& ebn0_db,
                                            int seeds_per_cell) {
    if (ebn0_db.empty()) throw ConfigError("fec experiment needs at least one Eb/N0 point");
    std::vector<FecRow> rows;
    rows.reserve(ebn0_db.size());
    for (const double e : ebn0_db) {
        ScenarioConfig cell = cfg;
        cell.estimator = EstimatorKind::Dplt;
        cell.channel.ebn0_db = e;
        cell.channel_sample_errors = true;
        FecRow row;
        row.ebn0_db = e;
        long raw = 0, residual = 0, total = 0;
        for (int j = 0; j < seeds_per_cell; ++j) {
            cell.seed = replicate_seed(cfg.seed, static_cast<std::uint64_t>(j));
            cell.fec.enabled = true;
            const auto on = run_scenario(cell);
            cell.fec.enabled = false;
            const auto off = run_scenario(cell);
            row.accuracy_fec_on += on.summary.accuracy;
            row.accuracy_fec_off += off.summary.accuracy;
            raw += on.raw_sample_errors;
            residual += on.residual_sample_errors;
            total += on.total_samples;
        }
        row.accuracy_fec_on /= seeds_per_cell;
        row.accuracy_fec_off /= seeds_per_cell;
        row.raw_ber = total > 0 ? static_cast<double>(raw) / total : 0.0;
        row.residual_ber = total > 0 ? static_cast<double>(residual) / total : 0.0;
        rows.push_back(row);
    }
    return rows;
}

std::vector<CompareRow> compare_estimators(const ScenarioConfig& cfg, int seeds) {
    if (seeds < 1) throw ConfigError("need at least one seed");
    std::vector<CompareRow> rows;
    rows.reserve(static_cast<std::size_t>(seeds));
    for (int i = 0; i < seeds; ++i) {
        ScenarioConfig cell = cfg;
        cell.seed = Rng::mix(cfg.seed, static_cast<std::uint64_t>(i) + 1);
        CompareRow row;
        row.seed = cell.seed;
        cell.estimator = EstimatorKind::Dplt;
        row.err_dplt = run_scenario(cell).summary.mean_error_m;
        cell.estimator = EstimatorKind::Aoa;
        row.err_aoa = run_scenario(cell).summary.mean_error_m;
        cell.estimator = EstimatorKind::Rss;
        row.err_rss = run_scenario(cell).summary.mean_error_m;
        rows.push_back(row);
    }
    return rows;
}

} // namespace dplt::engine
