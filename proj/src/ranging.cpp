#include "dplt/ranging.hpp"

#include <algorithm>
#include <cmath>

#include "dplt/rf.hpp"

namespace dplt::ranging {

using geom::Point2D;
using geom::TrackingZone;

double distance_from_timing(const TimestampPair& ts, bool round_trip) {
    if (ts.toa_ns < ts.tod_ns) throw NegativeFlight("arrival precedes departure");
    double dt_ns = ts.toa_ns - ts.tod_ns;
    if (round_trip) dt_ns *= 0.5;
    return dt_ns * 1e-9 * rf::kSpeedOfLight;
}

RangeMeasurement measure_range(double true_distance, const ClockModel& clock, Rng& rng,
                               int ref_id) {
    if (true_distance < 0.0) throw InvalidGeometry("negative true distance");
    const double sigma_m = clock.jitter_sigma_ns * 1e-9 * rf::kSpeedOfLight;
    double d = true_distance + clock.bias_ns * 1e-9 * rf::kSpeedOfLight;
    if (clock.jitter_sigma_ns > 0.0) d += sigma_m * rng.gaussian();
    return {ref_id, std::max(0.0, d), sigma_m};
}

BearingMeasurement measure_bearing(const Point2D& ref, const Point2D& target,
                                   double sigma_rad, Rng& rng, int ref_id) {
    if (ref == target) throw CoincidentPoints("bearing to coincident point");
    double bearing = std::atan2(target.y - ref.y, target.x - ref.x);
    if (sigma_rad > 0.0) bearing += sigma_rad * rng.gaussian();
    return {ref_id, rf::wrap_angle(bearing), sigma_rad};
}

Point2D triangulate_two_ref(const Point2D& ref_a, double d_a,
                            const Point2D& ref_c, double d_c,
                            const std::optional<TrackingZone>& zone,
                            const std::optional<Point2D>& prev) {
    if (ref_a == ref_c) throw InvalidGeometry("coincident references");
    if (!(d_a > 0.0 && d_c > 0.0)) throw InvalidGeometry("non-positive range");

    const auto candidates = geom::intersect_circles({ref_a, d_a}, {ref_c, d_c});
    if (candidates.empty()) {
        // Noisy disjoint circles: split the baseline in ratio dA:dC.
        const double t = d_a / (d_a + d_c);
        return ref_a + (ref_c - ref_a) * t;
    }
    if (candidates.size() == 1) return candidates[0];

    const Point2D& p0 = candidates[0];
    const Point2D& p1 = candidates[1];
    if (zone) {
        const bool in0 = geom::zone_contains(*zone, p0);
        const bool in1 = geom::zone_contains(*zone, p1);
        if (in0 != in1) return in0 ? p0 : p1;
    }
    if (prev) {
        const double e0 = geom::distance(p0, *prev);
        const double e1 = geom::distance(p1, *prev);
        if (e0 != e1) return e0 < e1 ? p0 : p1;
    }
    // Deterministic tie-break: smaller y, then smaller x (candidates are
    // already emitted in that order).
    return p0;
}

} // namespace dplt::ranging
