#include "doctest.h"

#include <cmath>

#include "dplt/geom.hpp"
#include "dplt/rng.hpp"

using namespace dplt;
using geom::Circle;
using geom::Point2D;

namespace {

double heron_inradius(double a, double b, double c) {
    const double s = 0.5 * (a + b + c);
    return std::sqrt(s * (s - a) * (s - b) * (s - c)) / s;
}

double point_line_distance(const Point2D& p, const Point2D& a, const Point2D& b) {
    const Point2D d = b - a;
    return std::fabs(d.cross(p - a)) / d.norm();
}

} // namespace

TEST_CASE("inradius on known triangles") {
    CHECK(geom::inradius({3.0, 4.0, 5.0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(geom::inradius({2.0, 2.0, 2.0}) ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("inradius rejects degenerate side lengths") {
    CHECK_THROWS_AS(geom::inradius({1.0, 2.0, 3.0}), DegenerateTriangle);
    CHECK_THROWS_AS(geom::inradius({0.0, 1.0, 1.0}), DegenerateTriangle);
    CHECK_THROWS_AS(geom::inradius({-1.0, 2.0, 2.0}), DegenerateTriangle);
}

TEST_CASE("inradius matches the Heron formula on random triangles") {
    Rng rng(101);
    int done = 0;
    while (done < 200) {
        const double a = rng.uniform(0.1, 100.0);
        const double b = rng.uniform(0.1, 100.0);
        const double c = rng.uniform(0.1, 100.0);
        if (a + b <= c * 1.001 || b + c <= a * 1.001 || c + a <= b * 1.001) continue;
        const double r = geom::inradius({a, b, c});
        CHECK(r == doctest::Approx(heron_inradius(a, b, c)).epsilon(1e-12));
        ++done;
    }
}

TEST_CASE("incircle of the 3-4-5 right triangle") {
    const Circle c = geom::incircle({0.0, 0.0}, {4.0, 0.0}, {0.0, 3.0});
    CHECK(c.center.x == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(c.center.y == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(c.radius == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("incircle rejects collinear vertices") {
    CHECK_THROWS_AS(geom::incircle({0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}), DegenerateTriangle);
}

TEST_CASE("incircle is tangent to all three sides") {
    Rng rng(202);
    int done = 0;
    while (done < 200) {
        const Point2D va{rng.uniform(-50.0, 50.0), rng.uniform(-50.0, 50.0)};
        const Point2D vb{rng.uniform(-50.0, 50.0), rng.uniform(-50.0, 50.0)};
        const Point2D vc{rng.uniform(-50.0, 50.0), rng.uniform(-50.0, 50.0)};
        if (std::fabs((vb - va).cross(vc - va)) < 1.0) continue;
        const Circle c = geom::incircle(va, vb, vc);
        CHECK(point_line_distance(c.center, va, vb) == doctest::Approx(c.radius).epsilon(1e-9));
        CHECK(point_line_distance(c.center, vb, vc) == doctest::Approx(c.radius).epsilon(1e-9));
        CHECK(point_line_distance(c.center, vc, va) == doctest::Approx(c.radius).epsilon(1e-9));
        ++done;
    }
}

TEST_CASE("line_through slope-intercept and vertical forms") {
    const auto l1 = geom::line_through({0.0, 0.0}, {2.0, 2.0});
    CHECK_FALSE(l1.vertical);
    CHECK(l1.slope == doctest::Approx(1.0));
    CHECK(l1.intercept == doctest::Approx(0.0));

    const auto l2 = geom::line_through({1.0, -3.0}, {1.0, 5.0});
    CHECK(l2.vertical);
    CHECK(l2.x0 == doctest::Approx(1.0));

    CHECK_THROWS_AS(geom::line_through({1.0, 1.0}, {1.0, 1.0}), CoincidentPoints);
}

TEST_CASE("motion_circle covers half the last displacement") {
    const Circle mc = geom::motion_circle({0.0, 0.0}, {4.0, 0.0});
    CHECK(mc.center == Point2D{4.0, 0.0});
    CHECK(mc.radius == doctest::Approx(2.0));
    CHECK_THROWS_AS(geom::motion_circle({2.0, 2.0}, {2.0, 2.0}), CoincidentPoints);
}

TEST_CASE("intersect_line_circle secant, tangent, and miss") {
    const Circle unit{{0.0, 0.0}, 1.0};
    const auto secant = geom::intersect_line_circle({0.0, 0.0, false, 0.0}, unit);
    REQUIRE(secant.size() == 2);
    CHECK(secant[0].x == doctest::Approx(-1.0));
    CHECK(secant[1].x == doctest::Approx(1.0));

    const auto tangent = geom::intersect_line_circle({0.0, 1.0, false, 0.0}, unit);
    REQUIRE(tangent.size() == 1);
    CHECK(tangent[0].x == doctest::Approx(0.0));
    CHECK(tangent[0].y == doctest::Approx(1.0));

    CHECK(geom::intersect_line_circle({0.0, 2.0, false, 0.0}, unit).empty());

    geom::LineParams vertical;
    vertical.vertical = true;
    vertical.x0 = 0.5;
    const auto v = geom::intersect_line_circle(vertical, unit);
    REQUIRE(v.size() == 2);
    CHECK(v[0].y == doctest::Approx(-std::sqrt(0.75)));
    CHECK(v[1].y == doctest::Approx(std::sqrt(0.75)));
}

TEST_CASE("intersect_circles secant, tangent, disjoint, degenerate") {
    const auto two = geom::intersect_circles({{0.0, 0.0}, 5.0}, {{6.0, 0.0}, 5.0});
    REQUIRE(two.size() == 2);
    CHECK(two[0].x == doctest::Approx(3.0));
    CHECK(two[0].y == doctest::Approx(-4.0));
    CHECK(two[1].y == doctest::Approx(4.0));

    const auto one = geom::intersect_circles({{0.0, 0.0}, 1.0}, {{2.0, 0.0}, 1.0});
    REQUIRE(one.size() == 1);
    CHECK(one[0].x == doctest::Approx(1.0));

    CHECK(geom::intersect_circles({{0.0, 0.0}, 1.0}, {{10.0, 0.0}, 1.0}).empty());
    CHECK(geom::intersect_circles({{0.0, 0.0}, 1.0}, {{0.0, 0.0}, 2.0}).empty());
    CHECK_THROWS_AS(geom::intersect_circles({{0.0, 0.0}, 1.0}, {{0.0, 0.0}, 1.0}),
                    CoincidentCircles);
    CHECK_THROWS_AS(geom::intersect_circles({{0.0, 0.0}, -1.0}, {{1.0, 0.0}, 1.0}),
                    InvalidGeometry);
}

TEST_CASE("prediction triangle for a vertical track between symmetric references") {
    const double d = std::sqrt(61.0);
    const auto tri = geom::build_prediction_triangle({0.0, 0.0}, {10.0, 0.0},
                                                     {5.0, 4.0}, {5.0, 6.0}, d, d);
    CHECK(tri.apex.x == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(tri.apex.y == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(tri.base_a.x == doctest::Approx(35.0 / 6.0).epsilon(1e-12));
    CHECK(tri.base_a.y == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(tri.base_c.x == doctest::Approx(25.0 / 6.0).epsilon(1e-12));
    CHECK(tri.base_c.y == doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("prediction triangle rejects bad inputs") {
    CHECK_THROWS_AS(geom::build_prediction_triangle({0.0, 0.0}, {10.0, 0.0}, {5.0, 4.0},
                                                    {5.0, 4.0}, 1.0, 1.0),
                    CoincidentPoints);
    CHECK_THROWS_AS(geom::build_prediction_triangle({0.0, 0.0}, {10.0, 0.0}, {5.0, 4.0},
                                                    {5.0, 6.0}, 0.0, 1.0),
                    InvalidGeometry);
    CHECK_THROWS_AS(geom::build_prediction_triangle({0.0, 0.0}, {0.0, 0.0}, {5.0, 4.0},
                                                    {5.0, 6.0}, 1.0, 1.0),
                    UnstableGeometry);
}

TEST_CASE("predict_zone center sits one motion radius ahead on the track line") {
    Rng rng(303);
    for (int i = 0; i < 200; ++i) {
        const Point2D ref_a{rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0)};
        const Point2D ref_c{rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0)};
        const Point2D prev{rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0)};
        const Point2D cur{rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0)};
        if (prev == cur || ref_a == ref_c) continue;
        const double d_a = geom::distance(ref_a, cur);
        const double d_c = geom::distance(ref_c, cur);
        if (d_a < 1e-6 || d_c < 1e-6) continue;
        const double r_n = 0.5 * geom::distance(prev, cur);
        const auto zone = geom::predict_zone(ref_a, ref_c, prev, cur, d_a, d_c, 0.01);

        // Center is the forward point: cur advanced by r_n along the motion.
        const Point2D u = (cur - prev) * (1.0 / (2.0 * r_n));
        const Point2D forward = cur + u * r_n;
        const bool triangle_path = geom::distance(zone.center, forward) < 1e-9;
        const bool fallback_path = geom::distance(zone.center, cur) < 1e-9;
        CHECK((triangle_path || fallback_path));
        CHECK(zone.radius >= 0.01);
        if (triangle_path) CHECK(zone.radius <= r_n + 1e-9);
    }
}

TEST_CASE("predict_zone falls back to the motion circle when the triangle degenerates") {
    // Track parallel to the reference baseline through both side rays ->
    // the side through each reference is parallel to the base line.
    const auto zone = geom::predict_zone({0.0, 2.0}, {10.0, 2.0}, {4.0, 2.0}, {6.0, 2.0},
                                         4.0, 4.0, 0.1);
    CHECK(zone.center.x == doctest::Approx(6.0));
    CHECK(zone.center.y == doctest::Approx(2.0));
    CHECK(zone.radius == doctest::Approx(1.0));
}

TEST_CASE("predict_zone enforces the minimum radius") {
    const auto zone = geom::predict_zone({0.0, 0.0}, {10.0, 0.0}, {5.0, 5.0},
                                         {5.0, 5.001}, 7.0, 7.0, 0.5);
    CHECK(zone.radius == doctest::Approx(0.5));
}

TEST_CASE("zone_contains includes the boundary") {
    const geom::TrackingZone zone{{0.0, 0.0}, 2.0, 0};
    CHECK(geom::zone_contains(zone, {2.0, 0.0}));
    CHECK(geom::zone_contains(zone, {0.0, 0.0}));
    CHECK_FALSE(geom::zone_contains(zone, {2.0 + 1e-9, 0.0}));
}

TEST_CASE("zone_contains is monotone in radius") {
    Rng rng(404);
    for (int i = 0; i < 100; ++i) {
        const geom::TrackingZone small{{0.0, 0.0}, rng.uniform(0.1, 5.0), 0};
        const geom::TrackingZone big{{0.0, 0.0}, small.radius + rng.uniform(0.0, 5.0), 0};
        const Point2D p{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        if (geom::zone_contains(small, p)) CHECK(geom::zone_contains(big, p));
    }
}

TEST_CASE("range consistency sanity check") {
    const Point2D ref_a{0.0, 0.0}, ref_c{10.0, 0.0}, target{5.0, 5.0};
    const double d = geom::distance(ref_a, target);
    CHECK(geom::range_consistency_ok(ref_a, ref_c, target, d, d));
    CHECK_FALSE(geom::range_consistency_ok(ref_a, ref_c, target, 100.0 * d, 100.0 * d));
}
