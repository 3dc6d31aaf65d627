#include "doctest.h"

#include <cmath>

#include "dplt/ranging.hpp"
#include "dplt/rf.hpp"
#include "dplt/rng.hpp"

using namespace dplt;
using geom::Point2D;

TEST_CASE("distance from timestamps") {
    CHECK(ranging::distance_from_timing({0.0, 1000.0}) ==
          doctest::Approx(299.792458).epsilon(1e-12));
    CHECK(ranging::distance_from_timing({0.0, 1000.0}, true) ==
          doctest::Approx(149.896229).epsilon(1e-12));
    CHECK(ranging::distance_from_timing({500.0, 500.0}) == 0.0);
    CHECK_THROWS_AS(ranging::distance_from_timing({10.0, 5.0}), NegativeFlight);
}

TEST_CASE("range measurement bias and clamping") {
    Rng rng(1);
    ranging::ClockModel clock;
    clock.bias_ns = 10.0;
    clock.jitter_sigma_ns = 0.0;
    const auto m = ranging::measure_range(100.0, clock, rng, 3);
    CHECK(m.distance_m == doctest::Approx(102.99792458).epsilon(1e-12));
    CHECK(m.ref_id == 3);
    CHECK(m.sigma_m == 0.0);

    clock.bias_ns = -10.0;
    const auto clamped = ranging::measure_range(1.0, clock, rng);
    CHECK(clamped.distance_m == 0.0);

    CHECK_THROWS_AS(ranging::measure_range(-1.0, clock, rng), InvalidGeometry);
}

TEST_CASE("range measurement noise statistics") {
    Rng rng(2);
    ranging::ClockModel clock; // jitter 3 ns
    const double sigma_m = 3.0e-9 * rf::kSpeedOfLight;
    double sum = 0.0, sum2 = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double d = ranging::measure_range(1000.0, clock, rng).distance_m;
        sum += d;
        sum2 += d * d;
    }
    const double mean = sum / n;
    const double sd = std::sqrt(sum2 / n - mean * mean);
    CHECK(mean == doctest::Approx(1000.0).epsilon(1e-3));
    CHECK(sd == doctest::Approx(sigma_m).epsilon(0.05));
}

TEST_CASE("bearing measurement") {
    Rng rng(3);
    const auto b = ranging::measure_bearing({0.0, 0.0}, {1.0, 1.0}, 0.0, rng, 7);
    CHECK(b.bearing_rad == doctest::Approx(rf::kPi / 4.0).epsilon(1e-12));
    CHECK(b.ref_id == 7);
    const auto wrapped = ranging::measure_bearing({1.0, 1.0}, {0.0, 0.0}, 0.0, rng);
    CHECK(wrapped.bearing_rad == doctest::Approx(1.25 * rf::kPi).epsilon(1e-12));
    CHECK_THROWS_AS(ranging::measure_bearing({1.0, 1.0}, {1.0, 1.0}, 0.0, rng),
                    CoincidentPoints);
}

TEST_CASE("two-reference triangulation disambiguation") {
    const Point2D a{0.0, 0.0}, c{6.0, 0.0};

    SUBCASE("zone picks the correct mirror") {
        const geom::TrackingZone zone{{3.0, 4.0}, 1.0, 0};
        const Point2D p = ranging::triangulate_two_ref(a, 5.0, c, 5.0, zone);
        CHECK(p.x == doctest::Approx(3.0));
        CHECK(p.y == doctest::Approx(4.0));
    }
    SUBCASE("previous estimate breaks the tie when no zone") {
        const Point2D p = ranging::triangulate_two_ref(a, 5.0, c, 5.0, std::nullopt,
                                                       Point2D{3.2, 3.9});
        CHECK(p.y == doctest::Approx(4.0));
    }
    SUBCASE("deterministic tie-break prefers smaller y") {
        const Point2D p = ranging::triangulate_two_ref(a, 5.0, c, 5.0);
        CHECK(p.y == doctest::Approx(-4.0));
    }
    SUBCASE("disjoint circles yield the baseline repair point") {
        const Point2D p = ranging::triangulate_two_ref({0.0, 0.0}, 2.0, {10.0, 0.0}, 2.0);
        CHECK(p.x == doctest::Approx(5.0));
        CHECK(p.y == doctest::Approx(0.0));
    }
    SUBCASE("ratio split when ranges differ") {
        const Point2D p = ranging::triangulate_two_ref({0.0, 0.0}, 1.0, {10.0, 0.0}, 3.0);
        CHECK(p.x == doctest::Approx(2.5));
    }
    SUBCASE("invalid inputs") {
        CHECK_THROWS_AS(ranging::triangulate_two_ref(a, 5.0, a, 5.0), InvalidGeometry);
        CHECK_THROWS_AS(ranging::triangulate_two_ref(a, 0.0, c, 5.0), InvalidGeometry);
    }
}

TEST_CASE("noiseless triangulation round trip") {
    Rng rng(42);
    for (int i = 0; i < 500; ++i) {
        const Point2D a{rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0)};
        const Point2D c{rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0)};
        const Point2D target{rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0)};
        if (geom::distance(a, c) < 1.0) continue;
        const double d_a = geom::distance(a, target);
        const double d_c = geom::distance(c, target);
        if (d_a < 0.5 || d_c < 0.5) continue;
        // Keep the mirror solution outside the disambiguation zone.
        const Point2D u = c - a;
        if (std::fabs(u.cross(target - a)) / u.norm() < 0.5) continue;
        const geom::TrackingZone zone{target, 0.25, 0};
        const Point2D p = ranging::triangulate_two_ref(a, d_a, c, d_c, zone);
        CHECK(geom::distance(p, target) < 1e-9);
    }
}
