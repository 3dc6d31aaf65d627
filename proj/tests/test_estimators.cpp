#include "doctest.h"

#include <cmath>

#include "dplt/estimators.hpp"
#include "dplt/rng.hpp"

using namespace dplt;
using geom::Point2D;

namespace {

double path_loss_db(double d, const estimators::PathLossModel& m) {
    return m.ref_loss_db + 10.0 * m.exponent * std::log10(d / m.ref_distance_m);
}

ranging::RangeMeasurement exact_range(const Point2D& ref, const Point2D& target, int id) {
    return {id, geom::distance(ref, target), 0.0};
}

double cue_to(const Point2D& ref, const Point2D& target) {
    return std::atan2(target.y - ref.y, target.x - ref.x);
}

} // namespace

TEST_CASE("RSS distance inversion") {
    estimators::PathLossModel model; // n=3, d0=1, PL0=40
    // Received power at the reference distance inverts to d0 exactly.
    CHECK(estimators::rss_distance(20.0 + 5.0 - 40.0, 20.0, 5.0, model) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // 30 dB below the reference level with n=3 -> 10 m.
    CHECK(estimators::rss_distance(20.0 + 5.0 - 40.0 - 30.0, 20.0, 5.0, model) ==
          doctest::Approx(10.0).epsilon(1e-12));
    model.exponent = 0.0;
    CHECK_THROWS_AS(estimators::rss_distance(0.0, 20.0, 5.0, model), InvalidGeometry);
}

TEST_CASE("noise-free RSS round trip") {
    Rng rng(11);
    estimators::PathLossModel model;
    const double tx = 40.0, gain = 5.0;
    for (int i = 0; i < 300; ++i) {
        const Point2D a{rng.uniform(0.0, 200.0), rng.uniform(0.0, 200.0)};
        const Point2D c{rng.uniform(0.0, 200.0), rng.uniform(0.0, 200.0)};
        const Point2D target{rng.uniform(0.0, 200.0), rng.uniform(0.0, 200.0)};
        const double d_a = geom::distance(a, target);
        const double d_c = geom::distance(c, target);
        if (geom::distance(a, c) < 1.0 || d_a < 1.0 || d_c < 1.0) continue;
        const Point2D u = c - a;
        if (std::fabs(u.cross(target - a)) / u.norm() < 0.5) continue;
        const double pr_a = tx + gain - path_loss_db(d_a, model);
        const double pr_c = tx + gain - path_loss_db(d_c, model);
        const geom::TrackingZone zone{target, 0.25, 0};
        const Point2D p = estimators::rss_estimate(pr_a, pr_c, a, c, tx, gain, model, zone);
        CHECK(geom::distance(p, target) < 1e-9);
    }
}

TEST_CASE("AoA ray intersection") {
    const Point2D p = estimators::aoa_estimate({0, rf::kPi / 4.0, 0.0},
                                               {1, 3.0 * rf::kPi / 4.0, 0.0},
                                               {0.0, 0.0}, {6.0, 0.0});
    CHECK(p.x == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(p.y == doctest::Approx(3.0).epsilon(1e-12));

    CHECK_THROWS_AS(estimators::aoa_estimate({0, 0.0, 0.0}, {1, 0.0, 0.0},
                                             {0.0, 0.0}, {6.0, 0.0}),
                    ParallelBearings);
    // Rays meeting only on their backward extensions: A aims up-left, C
    // up-right; the lines cross below both references.
    CHECK_THROWS_AS(estimators::aoa_estimate({0, 3.0 * rf::kPi / 4.0, 0.0},
                                             {1, rf::kPi / 4.0, 0.0},
                                             {0.0, 0.0}, {6.0, 0.0}),
                    BehindRay);
}

TEST_CASE("noise-free AoA round trip") {
    Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        const Point2D a{rng.uniform(0.0, 200.0), rng.uniform(0.0, 200.0)};
        const Point2D c{rng.uniform(0.0, 200.0), rng.uniform(0.0, 200.0)};
        const Point2D target{rng.uniform(0.0, 200.0), rng.uniform(0.0, 200.0)};
        if (geom::distance(a, c) < 1.0) continue;
        if (geom::distance(a, target) < 1.0 || geom::distance(c, target) < 1.0) continue;
        const Point2D u = c - a;
        if (std::fabs(u.cross(target - a)) / u.norm() < 0.5) continue;
        const double b_a = std::atan2(target.y - a.y, target.x - a.x);
        const double b_c = std::atan2(target.y - c.y, target.x - c.x);
        const Point2D p = estimators::aoa_estimate({0, b_a, 0.0}, {1, b_c, 0.0}, a, c);
        CHECK(geom::distance(p, target) < 1e-9);
    }
}

TEST_CASE("tracker follows a noiseless straight line without spurious updates") {
    estimators::DpltTracker tracker({});
    const Point2D ref_a{0.0, 0.0}, ref_c{100.0, 0.0};
    long updates_after_warmup = -1;
    for (int t = 0; t < 100; ++t) {
        const Point2D truth{30.0 + 0.01 * t, 60.0};
        const auto rec = tracker.step(t, ref_a, exact_range(ref_a, truth, 0),
                                      ref_c, exact_range(ref_c, truth, 1),
                                      cue_to(ref_a, truth));
        CHECK(geom::distance(rec.position, truth) < 1e-9);
        if (t == 10) updates_after_warmup = tracker.zone_update_count();
        if (t > 10) {
            // 0.01 m steps stay inside the first zone built after bootstrap.
            CHECK(tracker.zone_update_count() == updates_after_warmup);
            CHECK_FALSE(rec.zone_updated);
        }
    }
    REQUIRE(tracker.zone().has_value());
}

TEST_CASE("zone updates are triggered exactly when the fix escapes the zone") {
    estimators::DpltTracker tracker({});
    const Point2D ref_a{0.0, 0.0}, ref_c{100.0, 0.0};
    bool saw_update = false;
    std::optional<geom::TrackingZone> prev_zone;
    for (int t = 0; t < 200; ++t) {
        const Point2D truth{20.0 + 0.4 * t, 50.0}; // fast enough to escape zones
        const auto rec = tracker.step(t, ref_a, exact_range(ref_a, truth, 0),
                                      ref_c, exact_range(ref_c, truth, 1),
                                      cue_to(ref_a, truth));
        if (prev_zone && tracker.zone()) {
            const bool escaped = !geom::zone_contains(*prev_zone, rec.position);
            CHECK(rec.zone_updated == escaped);
            if (rec.zone_updated) saw_update = true;
        }
        prev_zone = tracker.zone();
    }
    CHECK(saw_update);
}

TEST_CASE("beamwidth shrinks with the zone radius at fixed distance") {
    // Mapping used by the tracker: smaller zone -> narrower beam.
    double prev_bw = rf::kPi;
    for (double radius = 50.0; radius >= 1.0; radius -= 1.0) {
        const double bw = rf::required_beamwidth(radius, 150.0);
        CHECK(bw <= prev_bw);
        prev_bw = bw;
    }
    // beamwidth_for floors at the configured minimum and goes wide when the
    // reference sits inside the zone.
    estimators::DpltTracker tracker({});
    CHECK(tracker.beamwidth_for({0.0, 0.0}) == rf::kPi); // no zone yet
}

TEST_CASE("outlier gate coasts the estimate and counts the streak") {
    estimators::DpltTracker tracker({});
    const Point2D ref_a{0.0, 0.0}, ref_c{100.0, 0.0};
    Point2D truth{30.0, 60.0};
    for (int t = 0; t < 10; ++t) {
        truth.x += 0.05;
        tracker.step(t, ref_a, exact_range(ref_a, truth, 0), ref_c,
                     exact_range(ref_c, truth, 1), cue_to(ref_a, truth));
    }
    REQUIRE(tracker.zone().has_value());
    const Point2D held = *tracker.last_estimate();

    // A wild range pair produces a far-away fix; the gate must reject it.
    const auto rec = tracker.step(10, ref_a, {0, 250.0, 0.0}, ref_c, {1, 260.0, 0.0});
    CHECK(rec.gated);
    CHECK(rec.position == held);

    // A sane measurement immediately recovers.
    truth.x += 0.05;
    const auto ok = tracker.step(11, ref_a, exact_range(ref_a, truth, 0), ref_c,
                                 exact_range(ref_c, truth, 1), cue_to(ref_a, truth));
    CHECK_FALSE(ok.gated);
    CHECK(geom::distance(ok.position, truth) < 1e-9);
}

TEST_CASE("bearing cue picks the mirror lobe nearest the arrival direction") {
    estimators::DpltTracker tracker({});
    const Point2D ref_a{0.0, 0.0}, ref_c{6.0, 0.0};
    // Equal ranges give mirrors (3, 4) and (3, -4); cue points to the upper one.
    const double cue = std::atan2(4.0, 3.0);
    const auto rec = tracker.step(0, ref_a, {0, 5.0, 0.0}, ref_c, {1, 5.0, 0.0}, cue);
    CHECK(rec.position.x == doctest::Approx(3.0));
    CHECK(rec.position.y == doctest::Approx(4.0));
}

TEST_CASE("disjoint circles fall back to a polar fix along the cue") {
    estimators::DpltTracker tracker({});
    const Point2D ref_a{0.0, 0.0}, ref_c{100.0, 0.0};
    const auto rec = tracker.step(0, ref_a, {0, 10.0, 0.0}, ref_c, {1, 10.0, 0.0},
                                  rf::kPi / 2.0);
    CHECK(rec.position.x == doctest::Approx(0.0));
    CHECK(rec.position.y == doctest::Approx(10.0));
}

TEST_CASE("reset clears all track state") {
    estimators::DpltTracker tracker({});
    const Point2D ref_a{0.0, 0.0}, ref_c{100.0, 0.0};
    for (int t = 0; t < 5; ++t) {
        const Point2D truth{30.0 + 0.05 * t, 60.0};
        tracker.step(t, ref_a, exact_range(ref_a, truth, 0), ref_c,
                     exact_range(ref_c, truth, 1));
    }
    REQUIRE(tracker.last_estimate().has_value());
    tracker.reset();
    CHECK_FALSE(tracker.last_estimate().has_value());
    CHECK_FALSE(tracker.zone().has_value());
}
