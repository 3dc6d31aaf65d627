#include "dplt/agents.hpp"

#include <algorithm>
#include <cmath>

namespace dplt::agents {

using geom::Point2D;

TrackerState step_mode(TrackerState state, Event event, double now_ms) {
    if (now_ms < state.mode_entry_ms) throw InvalidGeometry("clock moved backwards");
    const double elapsed = now_ms - state.mode_entry_ms;
    Mode next = state.mode;
    switch (state.mode) {
        case Mode::Searching:
            if (event == Event::TargetDetected)
                next = Mode::Tracking;
            else if (elapsed > state.tau_ms)
                next = Mode::Reset;
            break;
        case Mode::Tracking:
            if (event == Event::TargetLost) next = Mode::Searching;
            break;
        case Mode::Reset:
            if (elapsed > state.rc_ms) next = Mode::Searching;
            break;
    }
    if (next != state.mode) {
        state.mode = next;
        state.mode_entry_ms = now_ms;
    }
    return state;
}

double detection_hazard(double elapsed_ms, double tau_ms) {
    if (elapsed_ms < 0.0 || !(tau_ms > 0.0)) throw InvalidGeometry("bad hazard arguments");
    return 1.0 - std::pow(2.0, -elapsed_ms / (0.5 * tau_ms));
}

TargetState move_target(const TargetState& state, const MobilityParams& params,
                        double dt_s, Rng& rng) {
    // Fixed draw count per call keeps parallel scenario streams aligned.
    const double u_turn = rng.uniform();
    const double u_heading = rng.uniform();
    const double u_speed = rng.uniform();
    if (dt_s == 0.0) return state;

    TargetState next = state;
    next.turned = false;
    next.sharp_turn = false;
    const double drawn_speed = params.speed_min + u_speed * (params.speed_max - params.speed_min);
    if (u_turn < params.p_turn) {
        const double new_heading = u_heading * 2.0 * rf::kPi;
        const double dh = rf::angle_diff(new_heading, state.heading_rad);
        next.turned = true;
        next.heading_rad = new_heading;
        next.speed = drawn_speed;
        if (std::fabs(dh) > rf::kPi / 4.0) {
            next.speed *= params.turn_slowdown;
            next.sharp_turn = true;
        }
    } else {
        next.speed = state.speed + 0.1 * (drawn_speed - state.speed);
    }

    next.pos.x += next.speed * dt_s * std::cos(next.heading_rad);
    next.pos.y += next.speed * dt_s * std::sin(next.heading_rad);

    // Specular reflection at the rectangle bounds.
    auto reflect = [](double v, double lo, double hi) {
        double span = 2.0 * (hi - lo);
        double t = std::fmod(v - lo, span);
        if (t < 0.0) t += span;
        return t <= hi - lo ? lo + t : hi - (t - (hi - lo));
    };
    const bool flip_x = next.pos.x < 0.0 || next.pos.x > params.bounds_w;
    const bool flip_y = next.pos.y < 0.0 || next.pos.y > params.bounds_h;
    next.pos.x = reflect(next.pos.x, 0.0, params.bounds_w);
    next.pos.y = reflect(next.pos.y, 0.0, params.bounds_h);
    if (flip_x || flip_y) {
        double hx = std::cos(next.heading_rad);
        double hy = std::sin(next.heading_rad);
        if (flip_x) hx = -hx;
        if (flip_y) hy = -hy;
        next.heading_rad = rf::wrap_angle(std::atan2(hy, hx));
    }
    return next;
}

std::pair<int, int> select_references(const Point2D& target_est,
                                      const std::vector<Point2D>& friendly,
                                      double max_range,
                                      std::pair<int, int> current) {
    if (friendly.empty()) throw CoverageGap("no friendly nodes");
    auto in_range = [&](int id) {
        return id >= 0 && id < static_cast<int>(friendly.size()) &&
               geom::distance(friendly[static_cast<std::size_t>(id)], target_est) <= max_range;
    };
    if (in_range(current.first) && in_range(current.second)) return current;

    std::vector<int> ids;
    for (int i = 0; i < static_cast<int>(friendly.size()); ++i)
        if (in_range(i)) ids.push_back(i);
    if (ids.size() < 2) throw CoverageGap("fewer than two friendly nodes in range");
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        const double da = geom::distance(friendly[static_cast<std::size_t>(a)], target_est);
        const double db = geom::distance(friendly[static_cast<std::size_t>(b)], target_est);
        if (da != db) return da < db;
        return a < b;
    });
    return {ids[0], ids[1]};
}

} // namespace dplt::agents
