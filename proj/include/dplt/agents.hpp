#pragma once

#include <utility>
#include <vector>

#include "dplt/geom.hpp"
#include "dplt/rf.hpp"
#include "dplt/rng.hpp"

namespace dplt::agents {

enum class Mode { Searching, Tracking, Reset };

enum class Event { TargetDetected, TargetLost, None };

struct TrackerState {
    int node_id = 0;
    Mode mode = Mode::Searching;
    double mode_entry_ms = 0.0;
    rf::BeamConfig beam;
    double tau_ms = 1500.0;
    double rc_ms = 500.0;
};

struct MobilityParams {
    double speed_min = 10.0;
    double speed_max = 40.0;
    double p_turn = 0.01; // per tick
    double turn_slowdown = 0.5;
    double bounds_w = 500.0;
    double bounds_h = 500.0;
};

struct TargetState {
    geom::Point2D pos;
    double heading_rad = 0.0;
    double speed = 0.0;
    bool turned = false;      // this step changed heading
    bool sharp_turn = false;  // heading change exceeded pi/4
};

// S -> T on detection, S -> R strictly after tau, R -> S strictly after rc,
// T -> S on target loss. Detection beats timeout within a tick.
TrackerState step_mode(TrackerState state, Event event, double now_ms);

// Probability a searching node has detected the target by `elapsed`;
// half-life at tau/2.
double detection_hazard(double elapsed_ms, double tau_ms);

// Random-direction mobility with sharp-turn slowdown and specular reflection
// at the area bounds. Always consumes three uniform draws.
TargetState move_target(const TargetState& state, const MobilityParams& params,
                        double dt_s, Rng& rng);

// Keeps the current pair while both stay in range, otherwise picks the two
// nearest in-range nodes (ties by id).
std::pair<int, int> select_references(const geom::Point2D& target_est,
                                      const std::vector<geom::Point2D>& friendly,
                                      double max_range,
                                      std::pair<int, int> current);

} // namespace dplt::agents
