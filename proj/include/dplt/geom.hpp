#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "dplt/errors.hpp"

namespace dplt::geom {

struct Point2D {
    double x = 0.0;
    double y = 0.0;

    Point2D operator+(const Point2D& o) const { return {x + o.x, y + o.y}; }
    Point2D operator-(const Point2D& o) const { return {x - o.x, y - o.y}; }
    Point2D operator*(double k) const { return {x * k, y * k}; }
    bool operator==(const Point2D& o) const { return x == o.x && y == o.y; }

    double norm() const { return std::hypot(x, y); }
    double dot(const Point2D& o) const { return x * o.x + y * o.y; }
    double cross(const Point2D& o) const { return x * o.y - y * o.x; }
};

inline double distance(const Point2D& a, const Point2D& b) { return (a - b).norm(); }

// Line in slope/intercept form, or the vertical special case x = x0.
struct LineParams {
    double slope = 0.0;
    double intercept = 0.0;
    bool vertical = false;
    double x0 = 0.0;
};

struct Circle {
    Point2D center;
    double radius = 0.0;
};

struct TriangleSides {
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;

    double semi_perimeter() const { return 0.5 * (d1 + d2 + d3); }
};

struct TrackingZone {
    Point2D center;
    double radius = 0.0;
    long created_step = 0;
};

struct PredictionTriangle {
    Point2D apex;   // latest target fix
    Point2D base_a; // side through reference A meets the base line here
    Point2D base_c; // side through reference C meets the base line here
};

// Inscribed-circle radius of a triangle given by its side lengths.
double inradius(const TriangleSides& sides);

// Inscribed circle of the triangle with the given vertices.
Circle incircle(const Point2D& va, const Point2D& vb, const Point2D& vc);

// Line through the last two target positions.
LineParams line_through(const Point2D& p_prev, const Point2D& p_cur);

// Circle centered at the latest position whose radius is half the last
// displacement; covers the forward continuation of the motion.
Circle motion_circle(const Point2D& p_prev, const Point2D& p_cur);

std::vector<Point2D> intersect_line_circle(const LineParams& line, const Circle& circle);
std::vector<Point2D> intersect_circles(const Circle& c1, const Circle& c2);

// Prediction triangle: apex at the latest fix, two sides along the rays from
// the references through the apex, base parallel to the reference baseline
// and one motion-circle radius ahead of the apex.
PredictionTriangle build_prediction_triangle(const Point2D& ref_a, const Point2D& ref_c,
                                             const Point2D& b_prev, const Point2D& b_cur,
                                             double d_a, double d_c);

// Predicted circular region for the next target position. Falls back to the
// motion circle when the triangle construction is degenerate.
TrackingZone predict_zone(const Point2D& ref_a, const Point2D& ref_c,
                          const Point2D& b_prev, const Point2D& b_cur,
                          double d_a, double d_c,
                          double r_min = 0.5, long created_step = 0);

bool zone_contains(const TrackingZone& zone, const Point2D& p);

inline double d_average(double d_a, double d_c) { return 0.5 * (d_a + d_c); }

// Sanity check relating the measured average distance to the reference
// midpoint; a failure is a diagnostic, not an error.
bool range_consistency_ok(const Point2D& ref_a, const Point2D& ref_c,
                          const Point2D& target, double d_a, double d_c,
                          double factor = 2.0);

} // namespace dplt::geom
