#include "dplt/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dplt::csv {

namespace {

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

char mode_letter(agents::Mode m) {
    switch (m) {
        case agents::Mode::Searching: return 'S';
        case agents::Mode::Tracking: return 'T';
        default: return 'R';
    }
}

agents::Mode mode_from(char c) {
    if (c == 'S') return agents::Mode::Searching;
    if (c == 'T') return agents::Mode::Tracking;
    return agents::Mode::Reset;
}

} // namespace

std::string records_csv(const std::vector<engine::StepRecord>& records) {
    std::ostringstream out;
    out << kRecordsHeader << "\n";
    for (const auto& r : records) {
        out << r.tick << ',' << num(r.time_ms) << ',' << num(r.true_pos.x) << ','
            << num(r.true_pos.y) << ',' << num(r.estimate.x) << ',' << num(r.estimate.y) << ','
            << num(r.error_m) << ',' << mode_letter(r.mode_a) << ',' << mode_letter(r.mode_c)
            << ',' << r.ref_a << ',' << r.ref_c << ',' << num(r.zone_center.x) << ','
            << num(r.zone_center.y) << ',' << num(r.zone_radius) << ',' << num(r.beamwidth_rad)
            << ',' << (r.zone_updated ? 1 : 0) << ',' << (r.coverage_gap ? 1 : 0) << "\n";
    }
    return out.str();
}

std::string summary_csv(const engine::SummaryMetrics& s) {
    std::ostringstream out;
    out << kSummaryHeader << "\n"
        << num(s.mean_error_m) << ',' << num(s.accuracy) << ',' << s.zone_update_count << ','
        << num(s.mean_broadcast_time_s) << ',' << num(s.coverage_gap_fraction) << ','
        << s.ref_switch_count << "\n";
    return out.str();
}

std::string speed_sweep_csv(const std::vector<engine::SpeedSweepRow>& rows) {
    std::ostringstream out;
    out << "speed_mps,mean_error_m\n";
    for (const auto& r : rows) out << num(r.speed_mps) << ',' << num(r.mean_error_m) << "\n";
    return out.str();
}

std::string tradeoff_csv(const std::vector<engine::TradeoffRow>& rows) {
    std::ostringstream out;
    out << "beamwidth_deg,zone_updates_per_s,mean_error_m,t_zonal_s,p_error_m\n";
    for (const auto& r : rows)
        out << num(r.beamwidth_deg) << ',' << num(r.zone_updates_per_s) << ','
            << num(r.mean_error_m) << ',' << num(r.t_zonal_s) << ',' << num(r.p_error_m) << "\n";
    return out.str();
}

std::string broadcast_csv(const std::vector<engine::BroadcastRow>& rows) {
    std::ostringstream out;
    out << "p_turn_per_s,beamwidth,mean_time_s\n";
    for (const auto& r : rows)
        out << num(r.p_turn_per_s) << ','
            << (r.omni ? std::string("omni") : num(r.beamwidth_deg)) << ','
            << num(r.mean_time_s) << "\n";
    return out.str();
}

std::string fec_csv(const std::vector<engine::FecRow>& rows) {
    std::ostringstream out;
    out << "ebn0_db,accuracy_fec_on,accuracy_fec_off,residual_ber,raw_ber\n";
    for (const auto& r : rows)
        out << num(r.ebn0_db) << ',' << num(r.accuracy_fec_on) << ',' << num(r.accuracy_fec_off)
            << ',' << num(r.residual_ber) << ',' << num(r.raw_ber) << "\n";
    return out.str();
}

std::string compare_csv(const std::vector<engine::CompareRow>& rows) {
    std::ostringstream out;
    out << "seed,err_dplt_m,err_aoa_m,err_rss_m\n";
    double dplt = 0.0, aoa = 0.0, rss = 0.0;
    for (const auto& r : rows) {
        out << r.seed << ',' << num(r.err_dplt) << ',' << num(r.err_aoa) << ',' << num(r.err_rss)
            << "\n";
        dplt += r.err_dplt;
        aoa += r.err_aoa;
        rss += r.err_rss;
    }
    const double n = static_cast<double>(rows.size());
    out << "pooled," << num(dplt / n) << ',' << num(aoa / n) << ',' << num(rss / n) << "\n";
    return out.str();
}

std::string manifest_text(const ScenarioConfig& cfg) {
    return "# dpltsim manifest v1\n" + serialize_config(cfg);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

std::vector<engine::StepRecord> parse_records_csv(const std::string& body) {
    std::vector<engine::StepRecord> records;
    std::istringstream in(body);
    std::string line;
    if (!std::getline(in, line) || line != kRecordsHeader)
        throw IoError("unexpected records header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 17) throw IoError("malformed records row");
        engine::StepRecord r;
        r.tick = std::stol(fields[0]);
        r.time_ms = std::stod(fields[1]);
        r.true_pos = {std::stod(fields[2]), std::stod(fields[3])};
        r.estimate = {std::stod(fields[4]), std::stod(fields[5])};
        r.error_m = std::stod(fields[6]);
        r.mode_a = mode_from(fields[7][0]);
        r.mode_c = mode_from(fields[8][0]);
        r.ref_a = std::stoi(fields[9]);
        r.ref_c = std::stoi(fields[10]);
        r.zone_center = {std::stod(fields[11]), std::stod(fields[12])};
        r.zone_radius = std::stod(fields[13]);
        r.beamwidth_rad = std::stod(fields[14]);
        r.zone_updated = fields[15] == "1";
        r.coverage_gap = fields[16] == "1";
        records.push_back(r);
    }
    return records;
}

} // namespace dplt::csv
