#include "dplt/geom.hpp"

#include <algorithm>
#include <cmath>

namespace dplt::geom {

namespace {

constexpr double kGeomEps = 1e-9;
constexpr double kAngularEps = 1e-6;

void require_finite(const Point2D& p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw InvalidGeometry("non-finite coordinate");
}

bool point_less(const Point2D& a, const Point2D& b) {
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
}

} // namespace

double inradius(const TriangleSides& sides) {
    const double d1 = sides.d1, d2 = sides.d2, d3 = sides.d3;
    if (!(d1 > 0.0 && d2 > 0.0 && d3 > 0.0))
        throw DegenerateTriangle("non-positive side length");
    if (d1 + d2 <= d3 || d2 + d3 <= d1 || d3 + d1 <= d2)
        throw DegenerateTriangle("triangle inequality violated");
    const double s = sides.semi_perimeter();
    return std::sqrt((s - d1) * (s - d2) * (s - d3) / s);
}

Circle incircle(const Point2D& va, const Point2D& vb, const Point2D& vc) {
    require_finite(va);
    require_finite(vb);
    require_finite(vc);
    const double a = distance(vb, vc); // opposite va
    const double b = distance(vc, va); // opposite vb
    const double c = distance(va, vb); // opposite vc
    const double twice_area = std::fabs((vb - va).cross(vc - va));
    if (twice_area <= 1e-12 * std::max(1.0, b * c))
        throw DegenerateTriangle("collinear vertices");
    const double perim = a + b + c;
    const Point2D center{(a * va.x + b * vb.x + c * vc.x) / perim,
                         (a * va.y + b * vb.y + c * vc.y) / perim};
    return {center, inradius({a, b, c})};
}

LineParams line_through(const Point2D& p_prev, const Point2D& p_cur) {
    require_finite(p_prev);
    require_finite(p_cur);
    if (p_prev == p_cur) throw CoincidentPoints("line through coincident points");
    LineParams line;
    if (p_prev.x == p_cur.x) {
        line.vertical = true;
        line.x0 = p_cur.x;
        return line;
    }
    line.slope = (p_cur.y - p_prev.y) / (p_cur.x - p_prev.x);
    line.intercept = (p_cur.x * p_prev.y - p_prev.x * p_cur.y) / (p_cur.x - p_prev.x);
    return line;
}

Circle motion_circle(const Point2D& p_prev, const Point2D& p_cur) {
    require_finite(p_prev);
    require_finite(p_cur);
    if (p_prev == p_cur) throw CoincidentPoints("zero displacement");
    return {p_cur, 0.5 * distance(p_prev, p_cur)};
}

std::vector<Point2D> intersect_line_circle(const LineParams& line, const Circle& circle) {
    require_finite(circle.center);
    if (circle.radius < 0.0) throw InvalidGeometry("negative radius");
    std::vector<Point2D> out;
    const double r = circle.radius;
    if (line.vertical) {
        const double dx = line.x0 - circle.center.x;
        const double disc = r * r - dx * dx;
        const double tol = kGeomEps * std::max(1.0, r * r);
        if (disc < -tol) return out;
        if (std::fabs(disc) <= tol) {
            out.push_back({line.x0, circle.center.y});
            return out;
        }
        const double h = std::sqrt(disc);
        out.push_back({line.x0, circle.center.y - h});
        out.push_back({line.x0, circle.center.y + h});
        return out;
    }
    // Substitute y = kx + c into the circle equation.
    const double k = line.slope;
    const double c0 = line.intercept - circle.center.y;
    const double a = 1.0 + k * k;
    const double b = 2.0 * (k * c0 - circle.center.x);
    const double c = circle.center.x * circle.center.x + c0 * c0 - r * r;
    const double disc = b * b - 4.0 * a * c;
    const double tol = kGeomEps * std::max(1.0, a * std::max(1.0, r * r));
    if (disc < -tol) return out;
    if (std::fabs(disc) <= tol) {
        const double x = -b / (2.0 * a);
        out.push_back({x, k * x + line.intercept});
        return out;
    }
    const double h = std::sqrt(disc);
    const double x1 = (-b - h) / (2.0 * a);
    const double x2 = (-b + h) / (2.0 * a);
    out.push_back({x1, k * x1 + line.intercept});
    out.push_back({x2, k * x2 + line.intercept});
    if (point_less(out[1], out[0])) std::swap(out[0], out[1]);
    return out;
}

std::vector<Point2D> intersect_circles(const Circle& c1, const Circle& c2) {
    require_finite(c1.center);
    require_finite(c2.center);
    if (c1.radius < 0.0 || c2.radius < 0.0) throw InvalidGeometry("negative radius");
    if (c1.center == c2.center && c1.radius == c2.radius)
        throw CoincidentCircles("identical circles");
    std::vector<Point2D> out;
    const double d = distance(c1.center, c2.center);
    if (d == 0.0) return out; // concentric, distinct radii
    const double a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
    const double h2 = c1.radius * c1.radius - a * a;
    const double tol = kGeomEps * std::max(1.0, c1.radius * c1.radius);
    if (h2 < -tol) return out;
    const Point2D u = (c2.center - c1.center) * (1.0 / d);
    const Point2D base = c1.center + u * a;
    if (std::fabs(h2) <= tol) {
        out.push_back(base);
        return out;
    }
    const double h = std::sqrt(h2);
    const Point2D perp{-u.y, u.x};
    out.push_back(base + perp * h);
    out.push_back(base - perp * h);
    if (point_less(out[1], out[0])) std::swap(out[0], out[1]);
    return out;
}

PredictionTriangle build_prediction_triangle(const Point2D& ref_a, const Point2D& ref_c,
                                             const Point2D& b_prev, const Point2D& b_cur,
                                             double d_a, double d_c) {
    require_finite(ref_a);
    require_finite(ref_c);
    require_finite(b_prev);
    require_finite(b_cur);
    if (b_prev == b_cur) throw CoincidentPoints("coincident target fixes");
    if (!(d_a > 0.0 && d_c > 0.0)) throw InvalidGeometry("non-positive reference distance");
    if (ref_a == ref_c) throw UnstableGeometry("coincident references");

    const Point2D motion = b_cur - b_prev;
    const double step = motion.norm();
    const Point2D u = motion * (1.0 / step);
    const double r_n = 0.5 * step;
    const Point2D q = b_cur + u * r_n; // base passes through here

    const Point2D base_dir = ref_c - ref_a;
    const double base_len = base_dir.norm();

    auto side_hit = [&](const Point2D& ref) {
        const Point2D side = b_cur - ref;
        const double side_len = side.norm();
        if (side_len == 0.0) throw UnstableGeometry("reference coincides with target");
        const double sin_angle = std::fabs(side.cross(base_dir)) / (side_len * base_len);
        if (sin_angle < kAngularEps)
            throw UnstableGeometry("side ray parallel to base line");
        // Solve ref + t*side = q + s*base_dir.
        const double t = (q - ref).cross(base_dir) / side.cross(base_dir);
        return ref + side * t;
    };

    return {b_cur, side_hit(ref_a), side_hit(ref_c)};
}

TrackingZone predict_zone(const Point2D& ref_a, const Point2D& ref_c,
                          const Point2D& b_prev, const Point2D& b_cur,
                          double d_a, double d_c,
                          double r_min, long created_step) {
    const Circle mc = motion_circle(b_prev, b_cur); // throws on coincident fixes
    const double r_n = mc.radius;
    const Point2D u = (b_cur - b_prev) * (1.0 / (2.0 * r_n));
    const Point2D forward = b_cur + u * r_n;
    try {
        const PredictionTriangle tri = build_prediction_triangle(ref_a, ref_c, b_prev, b_cur, d_a, d_c);
        const TriangleSides sides{distance(tri.apex, tri.base_a),
                                  distance(tri.apex, tri.base_c),
                                  distance(tri.base_a, tri.base_c)};
        const double r_m = inradius(sides);
        return {forward, std::max(r_min, std::min(r_m, r_n)), created_step};
    } catch (const UnstableGeometry&) {
    } catch (const DegenerateTriangle&) {
    }
    return {mc.center, std::max(r_min, mc.radius), created_step};
}

bool zone_contains(const TrackingZone& zone, const Point2D& p) {
    return distance(zone.center, p) <= zone.radius;
}

bool range_consistency_ok(const Point2D& ref_a, const Point2D& ref_c,
                          const Point2D& target, double d_a, double d_c,
                          double factor) {
    const Point2D mid = (ref_a + ref_c) * 0.5;
    const double avg = d_average(d_a, d_c);
    const double actual = distance(target, mid);
    return actual <= factor * avg && avg <= factor * std::max(actual, 1e-9);
}

} // namespace dplt::geom
