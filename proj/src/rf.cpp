#include "dplt/rf.hpp"

#include <algorithm>
#include <cmath>

namespace dplt::rf {

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    return a;
}

double angle_diff(double a, double b) {
    double d = std::fmod(a - b, 2.0 * kPi);
    if (d > kPi) d -= 2.0 * kPi;
    if (d < -kPi) d += 2.0 * kPi;
    return d;
}

double required_beamwidth(double zone_radius, double distance) {
    if (!(distance > 0.0) || zone_radius > distance || !(zone_radius > 0.0))
        throw InvalidGeometry("zone radius must satisfy 0 < r <= d");
    return std::min(kPi, 2.0 * std::asin(zone_radius / distance));
}

double directional_range_raw(double efficiency, double tx_power_w, double theta) {
    if (!(theta > 0.0) || theta > kPi)
        throw InvalidBeamwidth("beamwidth outside (0, pi]");
    return std::sqrt(efficiency * tx_power_w * std::pow(theta, -0.5));
}

double directional_range(const AntennaParams& ant, double theta) {
    if (!(theta > 0.0) || theta > kPi)
        throw InvalidBeamwidth("beamwidth outside (0, pi]");
    // Relative law theta^(-1/4), anchored so the widest beam reaches range_ref_m.
    return ant.range_ref_m * std::pow(kPi / theta, 0.25);
}

std::pair<double, double> tradeoff_map(double bw_deg) {
    if (!(bw_deg > 0.0)) throw InvalidBeamwidth("beamwidth must be positive");
    return {10.0 / bw_deg, 0.025 * bw_deg};
}

double antenna_gain_db(const BeamConfig& beam, double bearing_to_peer, double efficiency) {
    const double misalign = std::fabs(angle_diff(bearing_to_peer, beam.steering_rad));
    if (misalign > 0.5 * beam.beamwidth_rad) return beam.sidelobe_gain_db;
    return 10.0 * std::log10(2.0 * kPi * efficiency / beam.beamwidth_rad);
}

double pair_gain_db(const BeamConfig& tx, const BeamConfig& rx,
                    double bearing_tx_to_rx, double bearing_rx_to_tx,
                    double efficiency) {
    return std::min(antenna_gain_db(tx, bearing_tx_to_rx, efficiency),
                    antenna_gain_db(rx, bearing_rx_to_tx, efficiency));
}

double ber(double ebn0_db, Fading fading) {
    const double gamma = std::pow(10.0, ebn0_db / 10.0);
    if (fading == Fading::Awgn)
        return 0.5 * std::erfc(std::sqrt(gamma));
    return 0.5 * (1.0 - std::sqrt(gamma / (1.0 + gamma)));
}

std::vector<std::uint8_t> apply_fec(std::vector<std::uint8_t> error_mask, const FecConfig& fec) {
    if (!fec.enabled) return error_mask;
    const std::size_t block = static_cast<std::size_t>(fec.block);
    const std::size_t whole = (error_mask.size() / block) * block;
    for (std::size_t start = 0; start < whole; start += block) {
        int errored = 0;
        for (std::size_t i = 0; i < block; ++i) errored += error_mask[start + i] ? 1 : 0;
        if (errored <= fec.correctable)
            std::fill_n(error_mask.begin() + static_cast<long>(start), block, std::uint8_t{0});
    }
    return error_mask;
}

std::vector<std::uint8_t> interleave(const std::vector<std::uint8_t>& samples, int depth) {
    const std::size_t n = samples.size();
    const std::size_t d = static_cast<std::size_t>(depth);
    std::vector<std::uint8_t> out(n);
    const std::size_t rows = (n + d - 1) / d;
    std::size_t k = 0;
    for (std::size_t col = 0; col < d; ++col)
        for (std::size_t row = 0; row < rows; ++row) {
            const std::size_t src = row * d + col;
            if (src < n) out[k++] = samples[src];
        }
    return out;
}

std::vector<std::uint8_t> deinterleave(const std::vector<std::uint8_t>& samples, int depth) {
    const std::size_t n = samples.size();
    const std::size_t d = static_cast<std::size_t>(depth);
    std::vector<std::uint8_t> out(n);
    const std::size_t rows = (n + d - 1) / d;
    std::size_t k = 0;
    for (std::size_t col = 0; col < d; ++col)
        for (std::size_t row = 0; row < rows; ++row) {
            const std::size_t dst = row * d + col;
            if (dst < n) out[dst] = samples[k++];
        }
    return out;
}

double doppler_shift(double speed, double carrier_hz) {
    if (speed < 0.0) throw InvalidGeometry("speed must be non-negative");
    return speed * carrier_hz / kSpeedOfLight;
}

bool packet_success(double bit_error_rate, int bits, Rng& rng) {
    if (bit_error_rate < 0.0 || bit_error_rate > 1.0)
        throw InvalidGeometry("bit error rate outside [0, 1]");
    const double p_ok = std::pow(1.0 - bit_error_rate, bits);
    return rng.uniform() < p_ok;
}

} // namespace dplt::rf
