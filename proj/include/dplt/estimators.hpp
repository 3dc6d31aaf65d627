#pragma once

#include <optional>

#include "dplt/geom.hpp"
#include "dplt/ranging.hpp"
#include "dplt/rf.hpp"

namespace dplt::estimators {

enum class EstimatorKind { Dplt, Rss, Aoa };

struct PathLossModel {
    double exponent = 3.0;
    double ref_distance_m = 1.0;
    double ref_loss_db = 40.0;
};

struct EstimateRecord {
    long tick = 0;
    EstimatorKind kind = EstimatorKind::Dplt;
    geom::Point2D position;
    geom::TrackingZone zone;
    double beamwidth_rad = 0.0;
    bool zone_updated = false;
    bool gated = false; // measurement rejected as an outlier, estimate coasted
};

// Invert the log-distance path loss law to a distance.
double rss_distance(double pr_dbm, double tx_power_dbm, double gain_db,
                    const PathLossModel& model);

geom::Point2D rss_estimate(double pr_a_dbm, double pr_c_dbm,
                           const geom::Point2D& ref_a, const geom::Point2D& ref_c,
                           double tx_power_dbm, double gain_db, const PathLossModel& model,
                           const std::optional<geom::TrackingZone>& zone = std::nullopt,
                           const std::optional<geom::Point2D>& prev = std::nullopt);

geom::Point2D aoa_estimate(const ranging::BearingMeasurement& bearing_a,
                           const ranging::BearingMeasurement& bearing_c,
                           const geom::Point2D& ref_a, const geom::Point2D& ref_c);

// Zone-driven tracker: triangulates inside the current zone, rebuilds the
// zone when the fix escapes it, and derives the next beamwidth from the zone
// radius. Outlier fixes far outside the zone are rejected and the estimate
// coasts until a plausible fix returns.
class DpltTracker {
public:
    struct Options {
        double r_min = 0.5;
        double min_beamwidth_rad = 5.0 * rf::kPi / 180.0;
        double gate_min_m = 10.0;
        double gate_zone_factor = 5.0;
        int gate_escape_ticks = 20;
        // Largest believable displacement between consecutive fixes; a bigger
        // jump restarts the zone lifecycle instead of predicting from it.
        double max_step_m = 8.0;
    };

    explicit DpltTracker(Options opts) : opts_(opts) {}

    EstimateRecord step(long tick,
                        const geom::Point2D& ref_a, const ranging::RangeMeasurement& meas_a,
                        const geom::Point2D& ref_c, const ranging::RangeMeasurement& meas_c,
                        std::optional<double> bearing_cue_a = std::nullopt);

    // Forget all track state; the next step re-bootstraps from scratch.
    void reset() {
        last_estimate_.reset();
        prev_estimate_.reset();
        zone_.reset();
        gated_streak_ = 0;
    }

    // Estimate held across ticks with no measurement.
    std::optional<geom::Point2D> last_estimate() const { return last_estimate_; }
    const std::optional<geom::TrackingZone>& zone() const { return zone_; }
    double beamwidth_for(const geom::Point2D& ref) const;
    long zone_update_count() const { return zone_updates_; }

private:
    Options opts_;
    std::optional<geom::Point2D> last_estimate_;
    std::optional<geom::Point2D> prev_estimate_;
    std::optional<geom::TrackingZone> zone_;
    long zone_updates_ = 0;
    int gated_streak_ = 0;

    double zone_floor_radius(const geom::Point2D& ref_a, const geom::Point2D& ref_c,
                             const geom::Point2D& center) const;
};

} // namespace dplt::estimators
