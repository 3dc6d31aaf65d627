#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dplt/errors.hpp"
#include "dplt/rng.hpp"

namespace dplt::rf {

constexpr double kSpeedOfLight = 299792458.0; // m/s
constexpr double kPi = 3.14159265358979323846;

struct AntennaParams {
    double efficiency = 0.82;
    double tx_power_w = 10.0; // 40 dBm
    int elements = 5;
    double aperture_m = 1.0;
    double max_range_m = 300.0;
    double range_ref_m = 75.0; // range assigned to the widest beam
    double sidelobe_gain_db = -10.0;
};

struct BeamConfig {
    double beamwidth_rad = kPi;
    double steering_rad = 0.0;
    double sidelobe_gain_db = -10.0;
};

enum class Fading { Awgn, Rayleigh };

struct ChannelParams {
    double carrier_hz = 2.54e9;
    double ebn0_db = 10.0;
    Fading fading = Fading::Rayleigh;
    double target_speed = 0.0;
};

struct FecConfig {
    int block = 4;
    int correctable = 1;
    bool enabled = false;
};

// Normalize an angle to [0, 2*pi).
double wrap_angle(double a);

// Signed smallest difference between two bearings, in [-pi, pi].
double angle_diff(double a, double b);

// Beamwidth needed to cover a zone of radius r seen from distance d.
double required_beamwidth(double zone_radius, double distance);

// Unscaled range law: sqrt(eta * P_t * theta^(-1/2)).
double directional_range_raw(double efficiency, double tx_power_w, double theta);

// Range law normalized so theta = pi maps to range_ref_m.
double directional_range(const AntennaParams& ant, double theta);

// (T_zonal seconds, P_error meters) for a beamwidth in degrees.
std::pair<double, double> tradeoff_map(double bw_deg);

// Mainlobe gain when the peer bearing falls inside the beam, else sidelobe.
double antenna_gain_db(const BeamConfig& beam, double bearing_to_peer, double efficiency);

double pair_gain_db(const BeamConfig& tx, const BeamConfig& rx,
                    double bearing_tx_to_rx, double bearing_rx_to_tx,
                    double efficiency);

// BPSK bit error rate.
double ber(double ebn0_db, Fading fading);

// Per-block correction of up to one errored sample out of four. A trailing
// partial block passes through untouched.
std::vector<std::uint8_t> apply_fec(std::vector<std::uint8_t> error_mask, const FecConfig& fec);

// Depth-4 block interleaving: sample i goes to slot (i%4)*rows + i/4.
std::vector<std::uint8_t> interleave(const std::vector<std::uint8_t>& samples, int depth = 4);
std::vector<std::uint8_t> deinterleave(const std::vector<std::uint8_t>& samples, int depth = 4);

double doppler_shift(double speed, double carrier_hz);

bool packet_success(double bit_error_rate, int bits, Rng& rng);

} // namespace dplt::rf
