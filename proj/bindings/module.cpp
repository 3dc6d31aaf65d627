#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dplt/csv.hpp"
#include "dplt/engine.hpp"
#include "dplt/geom.hpp"
#include "dplt/rf.hpp"

namespace py = pybind11;
using namespace dplt;

namespace {

py::dict summary_dict(const engine::SummaryMetrics& s) {
    py::dict d;
    d["mean_error_m"] = s.mean_error_m;
    d["accuracy"] = s.accuracy;
    d["zone_update_count"] = s.zone_update_count;
    d["mean_broadcast_time_s"] = s.mean_broadcast_time_s;
    d["coverage_gap_fraction"] = s.coverage_gap_fraction;
    d["ref_switch_count"] = s.ref_switch_count;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Target localization and tracking simulator core";

    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def("__repr__",
             [](const ScenarioConfig& c) {
                 return "<ScenarioConfig seed=" + std::to_string(c.seed) + ">";
             });

    m.def(
        "load_config",
        [](const std::string& text, const std::map<std::string, std::string>& overrides) {
            return parse_config_text(text, overrides, "<python>");
        },
        py::arg("text") = "", py::arg("overrides") = std::map<std::string, std::string>{},
        "Parse a key=value configuration; overrides map beats the text.");
    m.def("serialize_config", &serialize_config);

    m.def(
        "run_scenario",
        [](const ScenarioConfig& cfg) {
            const auto res = engine::run_scenario(cfg);
            py::dict d;
            d["summary"] = summary_dict(res.summary);
            d["records_csv"] = csv::records_csv(res.records);
            d["ticks"] = static_cast<long>(res.records.size());
            return d;
        },
        py::arg("config"));

    m.def(
        "speed_sweep",
        [](const ScenarioConfig& cfg, const std::vector<double>& speeds, int seeds) {
            std::vector<std::pair<double, double>> out;
            for (const auto& r : engine::speed_sweep(cfg, speeds, seeds))
                out.emplace_back(r.speed_mps, r.mean_error_m);
            return out;
        },
        py::arg("config"), py::arg("speeds"), py::arg("seeds") = 5);

    m.def(
        "compare_estimators",
        [](const ScenarioConfig& cfg, int seeds) {
            std::vector<py::dict> out;
            for (const auto& r : engine::compare_estimators(cfg, seeds)) {
                py::dict d;
                d["seed"] = r.seed;
                d["err_dplt"] = r.err_dplt;
                d["err_aoa"] = r.err_aoa;
                d["err_rss"] = r.err_rss;
                out.push_back(d);
            }
            return out;
        },
        py::arg("config"), py::arg("seeds") = 10);

    m.def("tradeoff_map", &rf::tradeoff_map, py::arg("beamwidth_deg"),
          "Return (T_zonal seconds, P_error meters) for a beamwidth in degrees.");
    m.def("ber", [](double ebn0_db, const std::string& fading) {
        return rf::ber(ebn0_db, fading == "awgn" ? rf::Fading::Awgn : rf::Fading::Rayleigh);
    }, py::arg("ebn0_db"), py::arg("fading") = "rayleigh");
    m.def("inradius", [](double a, double b, double c) {
        return geom::inradius({a, b, c});
    });

    // Translators run newest-first: register the base before the subclass so
    // ConfigError is matched ahead of the generic handler.
    const auto sim_error = py::register_exception<Error>(m, "SimError");
    py::register_exception<ConfigError>(m, "ConfigError", sim_error.ptr());
}
