#pragma once

#include <optional>

#include "dplt/geom.hpp"
#include "dplt/rng.hpp"

namespace dplt::ranging {

struct TimestampPair {
    double tod_ns = 0.0;
    double toa_ns = 0.0;
};

struct ClockModel {
    double bias_ns = 0.0;
    double jitter_sigma_ns = 3.0;
};

struct RangeMeasurement {
    int ref_id = 0;
    double distance_m = 0.0;
    double sigma_m = 0.0;
};

struct BearingMeasurement {
    int ref_id = 0;
    double bearing_rad = 0.0;
    double sigma_rad = 0.0;
};

// One-way flight time scaled by c; round_trip halves the interval.
double distance_from_timing(const TimestampPair& ts, bool round_trip = false);

RangeMeasurement measure_range(double true_distance, const ClockModel& clock, Rng& rng,
                               int ref_id = 0);

BearingMeasurement measure_bearing(const geom::Point2D& ref, const geom::Point2D& target,
                                   double sigma_rad, Rng& rng, int ref_id = 0);

// Two-circle fix. With two candidates, prefer the one inside the zone, then
// the one nearer the previous estimate, then the (smaller y, smaller x)
// candidate. Disjoint circles yield the repair point splitting the baseline
// in ratio dA:dC.
geom::Point2D triangulate_two_ref(const geom::Point2D& ref_a, double d_a,
                                  const geom::Point2D& ref_c, double d_c,
                                  const std::optional<geom::TrackingZone>& zone = std::nullopt,
                                  const std::optional<geom::Point2D>& prev = std::nullopt);

} // namespace dplt::ranging
