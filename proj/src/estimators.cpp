#include "dplt/estimators.hpp"

#include <algorithm>
#include <cmath>

namespace dplt::estimators {

using geom::Point2D;
using geom::TrackingZone;

double rss_distance(double pr_dbm, double tx_power_dbm, double gain_db,
                    const PathLossModel& model) {
    if (!(model.exponent > 0.0) || !(model.ref_distance_m > 0.0))
        throw InvalidGeometry("invalid path loss model");
    const double excess = tx_power_dbm + gain_db - model.ref_loss_db - pr_dbm;
    return model.ref_distance_m * std::pow(10.0, excess / (10.0 * model.exponent));
}

Point2D rss_estimate(double pr_a_dbm, double pr_c_dbm,
                     const Point2D& ref_a, const Point2D& ref_c,
                     double tx_power_dbm, double gain_db, const PathLossModel& model,
                     const std::optional<TrackingZone>& zone,
                     const std::optional<Point2D>& prev) {
    const double d_a = rss_distance(pr_a_dbm, tx_power_dbm, gain_db, model);
    const double d_c = rss_distance(pr_c_dbm, tx_power_dbm, gain_db, model);
    return ranging::triangulate_two_ref(ref_a, d_a, ref_c, d_c, zone, prev);
}

Point2D aoa_estimate(const ranging::BearingMeasurement& bearing_a,
                     const ranging::BearingMeasurement& bearing_c,
                     const Point2D& ref_a, const Point2D& ref_c) {
    const Point2D dir_a{std::cos(bearing_a.bearing_rad), std::sin(bearing_a.bearing_rad)};
    const Point2D dir_c{std::cos(bearing_c.bearing_rad), std::sin(bearing_c.bearing_rad)};
    const double denom = dir_a.cross(dir_c);
    if (std::fabs(denom) < 1e-6) throw ParallelBearings("bearings nearly parallel");
    // ref_a + t*dir_a = ref_c + s*dir_c
    const Point2D rhs = ref_c - ref_a;
    const double t = rhs.cross(dir_c) / denom;
    const double s = rhs.cross(dir_a) / denom;
    if (t < 0.0 || s < 0.0) throw BehindRay("intersection behind a reference");
    return ref_a + dir_a * t;
}

double DpltTracker::zone_floor_radius(const Point2D& ref_a, const Point2D& ref_c,
                                      const Point2D& center) const {
    const double d = 0.5 * (geom::distance(ref_a, center) + geom::distance(ref_c, center));
    return d * std::sin(0.5 * opts_.min_beamwidth_rad);
}

double DpltTracker::beamwidth_for(const Point2D& ref) const {
    if (!zone_) return rf::kPi;
    const double d = geom::distance(ref, zone_->center);
    if (d <= zone_->radius) return rf::kPi;
    return std::max(opts_.min_beamwidth_rad, rf::required_beamwidth(zone_->radius, d));
}

EstimateRecord DpltTracker::step(long tick,
                                 const Point2D& ref_a, const ranging::RangeMeasurement& meas_a,
                                 const Point2D& ref_c, const ranging::RangeMeasurement& meas_c,
                                 std::optional<double> bearing_cue_a) {
    EstimateRecord rec;
    rec.tick = tick;
    rec.kind = EstimatorKind::Dplt;

    // The bearing cue from ref A's array only ever picks between the two
    // mirror solutions; position comes from the ranges alone. Relying on the
    // zone or the previous fix for that choice instead can lock onto the
    // mirror ghost when the target runs close to the reference baseline.
    Point2D fix;
    const auto candidates =
        geom::intersect_circles({ref_a, meas_a.distance_m}, {ref_c, meas_c.distance_m});
    if (candidates.empty() && bearing_cue_a) {
        // Disjoint circles leave no trilateration solution; fall back to a
        // polar fix from ref A's range and arrival bearing.
        fix = ref_a + Point2D{std::cos(*bearing_cue_a), std::sin(*bearing_cue_a)} *
                          meas_a.distance_m;
    } else if (candidates.size() > 1 && bearing_cue_a) {
        fix = candidates[0];
        double best = 2.0 * rf::kPi;
        for (const auto& cand : candidates) {
            if (cand == ref_a) continue;
            const double bearing = std::atan2(cand.y - ref_a.y, cand.x - ref_a.x);
            const double off = std::fabs(rf::angle_diff(bearing, *bearing_cue_a));
            if (off < best) {
                best = off;
                fix = cand;
            }
        }
    } else {
        fix = ranging::triangulate_two_ref(ref_a, meas_a.distance_m, ref_c, meas_c.distance_m,
                                           zone_, last_estimate_);
    }

    // Plausibility gate against range outliers from corrupted packets;
    // engages only once the zone is established.
    if (last_estimate_ && zone_) {
        const double gate = std::max(opts_.gate_min_m, opts_.gate_zone_factor * zone_->radius);
        if (geom::distance(fix, *last_estimate_) > gate &&
            gated_streak_ < opts_.gate_escape_ticks) {
            ++gated_streak_;
            rec.gated = true;
            rec.position = *last_estimate_;
            if (zone_) rec.zone = *zone_;
            rec.beamwidth_rad = zone_ ? 0.5 * (beamwidth_for(ref_a) + beamwidth_for(ref_c))
                                      : rf::kPi;
            return rec;
        }
    }
    gated_streak_ = 0;

    // An implausible jump means the track was lost; restart the zone
    // lifecycle from this fix rather than predicting across the gap.
    if (last_estimate_ && geom::distance(fix, *last_estimate_) > opts_.max_step_m) {
        zone_.reset();
        prev_estimate_.reset();
        last_estimate_.reset();
    }

    bool zone_updated = false;
    if (last_estimate_ && prev_estimate_) {
        if (!zone_ || !geom::zone_contains(*zone_, fix)) {
            zone_updated = zone_.has_value();
            TrackingZone z;
            if (*last_estimate_ == fix) {
                z = {fix, opts_.r_min, tick};
            } else {
                z = geom::predict_zone(ref_a, ref_c, *last_estimate_, fix,
                                       std::max(meas_a.distance_m, 1e-9),
                                       std::max(meas_c.distance_m, 1e-9),
                                       opts_.r_min, tick);
            }
            z.radius = std::max(z.radius, zone_floor_radius(ref_a, ref_c, z.center));
            zone_ = z;
            if (zone_updated) ++zone_updates_;
        }
    }

    prev_estimate_ = last_estimate_;
    last_estimate_ = fix;

    rec.position = fix;
    if (zone_) rec.zone = *zone_;
    rec.zone_updated = zone_updated;
    rec.beamwidth_rad = zone_ ? 0.5 * (beamwidth_for(ref_a) + beamwidth_for(ref_c))
                              : rf::kPi;
    return rec;
}

} // namespace dplt::estimators
