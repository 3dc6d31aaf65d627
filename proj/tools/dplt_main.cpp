#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <map>
#include <string>
#include <vector>

#include "dplt/csv.hpp"
#include "dplt/engine.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitCoverage = 4;

struct SharedArgs {
    std::string config_path;
    std::string out_dir = "out";
    std::map<std::string, std::string> overrides;
};

void add_shared(CLI::App* cmd, SharedArgs& args) {
    cmd->add_option("--config", args.config_path, "Configuration file (key = value lines)");
    cmd->add_option("--out", args.out_dir, "Output directory");
    auto override_opt = [&args, cmd](const std::string& flag, const std::string& key,
                                     const std::string& help) {
        cmd->add_option_function<std::string>(
            flag, [&args, key](const std::string& v) { args.overrides[key] = v; }, help);
    };
    override_opt("--seed", "seed", "Master seed");
    override_opt("--estimator", "estimator", "Estimator: dplt|rss|aoa");
    override_opt("--duration-s", "sim.duration_s", "Scenario duration in seconds");
    override_opt("--ticks-ms", "sim.tick_ms", "Simulation tick in milliseconds");
}

dplt::ScenarioConfig load_config(const SharedArgs& args) {
    if (!args.config_path.empty())
        return dplt::parse_config_file(args.config_path, args.overrides);
    return dplt::parse_config_text("", args.overrides, "<defaults>");
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw dplt::IoError("cannot create output directory: " + dir);
}

std::vector<double> parse_list(const std::vector<std::string>& items, bool allow_omni) {
    std::vector<double> values;
    for (const auto& item : items) {
        std::string token;
        std::istringstream ss(item);
        while (std::getline(ss, token, ',')) {
            if (token.empty()) continue;
            if (allow_omni && token == "omni") {
                values.push_back(0.0); // non-positive encodes omni
                continue;
            }
            values.push_back(std::stod(token));
        }
    }
    return values;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic two-reference position location and tracking simulator"};
    app.require_subcommand(1);

    SharedArgs shared;
    std::vector<std::string> speeds_raw{"5,10,15,20,25,30,35,40,45,50"};
    std::vector<std::string> beamwidths_raw{"15,30,45,60,90,omni"};
    std::vector<std::string> p_turns_raw{"0,0.2,0.4"};
    std::vector<std::string> ebn0_raw{"4,6,8,10"};
    std::string fec_mode = "both";
    int seeds = 5;

    auto* run = app.add_subcommand("run", "Run one scenario and emit records/summary");
    add_shared(run, shared);
    run->add_option_function<std::string>(
        "--fec",
        [&shared](const std::string& v) {
            if (v == "on")
                shared.overrides["fec.enabled"] = "true";
            else if (v == "off")
                shared.overrides["fec.enabled"] = "false";
            else if (v != "both")
                throw CLI::ValidationError("--fec must be on|off|both");
        },
        "FEC correction: on|off|both");

    auto* sweep_speed = app.add_subcommand("sweep-speed", "Mean error across target speeds");
    add_shared(sweep_speed, shared);
    sweep_speed->add_option("--speeds", speeds_raw, "Comma-separated speeds in m/s");
    sweep_speed->add_option("--seeds", seeds, "Seeds per sweep cell");

    auto* sweep_bw = app.add_subcommand("sweep-beamwidth", "Zone overhead and error across beamwidths");
    add_shared(sweep_bw, shared);
    sweep_bw->add_option("--beamwidths-deg", beamwidths_raw, "Comma-separated beamwidths in degrees");
    sweep_bw->add_option("--seeds", seeds, "Seeds per sweep cell");

    auto* broadcast = app.add_subcommand("broadcast-time", "Mean broadcasting time experiment");
    add_shared(broadcast, shared);
    broadcast->add_option("--beamwidths-deg", beamwidths_raw,
                          "Comma-separated beamwidths in degrees, 'omni' allowed");
    broadcast->add_option("--p-turns", p_turns_raw, "Turn probabilities per second");
    broadcast->add_option("--seeds", seeds, "Seeds per grid cell")->default_val(100);

    auto* fec = app.add_subcommand("fec-accuracy", "Tracking accuracy with and without FEC");
    add_shared(fec, shared);
    fec->add_option("--ebn0-db", ebn0_raw, "Comma-separated Eb/N0 points in dB");
    fec->add_option("--seeds", seeds, "Seeds per point");
    fec->add_option("--fec", fec_mode, "Accepted for symmetry; both legs are always reported");

    auto* compare = app.add_subcommand("compare-estimators", "DPL&T vs AoA vs RSS on shared trajectories");
    add_shared(compare, shared);
    compare->add_option("--seeds", seeds, "Number of shared-trajectory seeds")->default_val(10);

    CLI11_PARSE(app, argc, argv);

    try {
        const dplt::ScenarioConfig cfg = load_config(shared);
        ensure_out_dir(shared.out_dir);
        const fs::path out(shared.out_dir);
        dplt::csv::write_file((out / "manifest.txt").string(), dplt::csv::manifest_text(cfg));

        if (run->parsed()) {
            const auto res = dplt::engine::run_scenario(cfg);
            dplt::csv::write_file((out / "records.csv").string(),
                                  dplt::csv::records_csv(res.records));
            dplt::csv::write_file((out / "summary.csv").string(),
                                  dplt::csv::summary_csv(res.summary));
            std::cout << "mean_error_m=" << res.summary.mean_error_m
                      << " accuracy=" << res.summary.accuracy
                      << " zone_updates=" << res.summary.zone_update_count << "\n";
            if (res.summary.coverage_gap_fraction >= 0.99) {
                std::cerr << "coverage collapse: no reference pair in range\n";
                return kExitCoverage;
            }
        } else if (sweep_speed->parsed()) {
            const auto rows = dplt::engine::speed_sweep(cfg, parse_list(speeds_raw, false), seeds);
            dplt::csv::write_file((out / "speed_sweep.csv").string(),
                                  dplt::csv::speed_sweep_csv(rows));
        } else if (sweep_bw->parsed()) {
            const auto rows = dplt::engine::beamwidth_tradeoff_sweep(
                cfg, parse_list(beamwidths_raw, false), seeds);
            dplt::csv::write_file((out / "beamwidth_tradeoff.csv").string(),
                                  dplt::csv::tradeoff_csv(rows));
        } else if (broadcast->parsed()) {
            const auto rows = dplt::engine::broadcasting_time_experiment(
                cfg, parse_list(p_turns_raw, false), parse_list(beamwidths_raw, true), seeds);
            dplt::csv::write_file((out / "broadcast_time.csv").string(),
                                  dplt::csv::broadcast_csv(rows));
        } else if (fec->parsed()) {
            const auto rows =
                dplt::engine::fec_accuracy_experiment(cfg, parse_list(ebn0_raw, false), seeds);
            dplt::csv::write_file((out / "fec_accuracy.csv").string(), dplt::csv::fec_csv(rows));
        } else if (compare->parsed()) {
            const auto rows = dplt::engine::compare_estimators(cfg, seeds);
            dplt::csv::write_file((out / "compare_estimators.csv").string(),
                                  dplt::csv::compare_csv(rows));
        }
    } catch (const dplt::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const dplt::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
