#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ringsense/geometry.hpp"
#include "ringsense/kinematics.hpp"
#include "ringsense/rng.hpp"

namespace ringsense::simworld {

enum class HitLabel { None, Robot, Human };

/// One unit's reading for a tick. `range` empty means no return within
/// reach (label None); Robot-labeled returns are self-hits and are dropped
/// by associate() before anything downstream sees them.
struct LidarObservation {
    int ring = 0;  // 1..3
    int unit = 0;  // 1..16
    std::optional<double> range;
    std::optional<Eigen::Vector3d> hit_point_world;
    HitLabel label = HitLabel::None;
};

/// Planar human state; z is identically zero by construction.
struct HumanState {
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;  // rad
    double speed = 0.0;    // m/s
};

/// Vertical-cylinder body model standing on the floor.
struct HumanGeometry {
    double body_radius = 0.25;
    double body_height = 1.7;

    void validate() const;
};

struct WorldState {
    double time = 0.0;
    kinematics::JointConfig q;
    kinematics::JointConfig q_target;
    HumanState human;
};

struct SimParams {
    double workspace_radius = 2.5;  // m, human confined to this disc
    double dt = 0.05;               // s per tick
    double human_speed = 0.5;       // m/s
    double p_turn = 0.05;           // per-tick probability of a random turn
    double max_turn = 1.5707963267948966;  // rad, turn increment bound
    double joint_speed = 2.0;       // rad/s per joint toward its target
    double reach_eps = 0.05;        // rad, target-reached threshold
    int fov_rays = 5;               // rays approximating the 25 degree cone
    std::array<double, kinematics::kJointCount> link_radii{0.05, 0.05, 0.05,
                                                           0.05, 0.05, 0.05};

    void validate() const;
};

/// Random-turn walk with reflection at the workspace boundary.
HumanState step_human(const HumanState& h, double dt, const SimParams& params, Rng& rng);

/// Rate-limited move toward q_target; draws a fresh uniform target once all
/// joints are within reach_eps. Returns the new (q, q_target).
std::pair<kinematics::JointConfig, kinematics::JointConfig> step_robot(
    const WorldState& w, double dt, const kinematics::RobotModel& model, const SimParams& params,
    Rng& rng);

geometry::VerticalCylinder human_cylinder(const HumanState& h, const HumanGeometry& geom);

/// One capsule per link segment: frame i-1 origin to frame i origin.
std::array<geometry::Capsule, kinematics::kJointCount> robot_capsules(
    const kinematics::RobotModel& model, const kinematics::LinkTransforms& links,
    const SimParams& params);

struct RayHit {
    std::optional<double> distance;
    HitLabel label = HitLabel::None;
};

/// Nearest intersection within max range among the human cylinder and the
/// robot link capsules; ties go to Robot. A ray starting inside a robot
/// capsule reports an immediate self-hit. Throws for a non-unit direction.
RayHit cast_ray(const Eigen::Vector3d& origin, const Eigen::Vector3d& dir, const WorldState& w,
                const HumanGeometry& geom, const kinematics::RobotModel& model,
                const SimParams& params);

/// All 48 unit readings for the current world state. Each unit's 25 degree
/// cone is approximated by fov_rays rays (central + rim); the unit reports
/// the minimum hit distance over those rays.
std::vector<LidarObservation> sense(const WorldState& w,
                                    const std::array<kinematics::RingSpec, 3>& rings,
                                    const HumanGeometry& geom,
                                    const kinematics::RobotModel& model, const SimParams& params);

/// Keeps Human-labeled observations only.
std::vector<LidarObservation> associate(const std::vector<LidarObservation>& obs);

/// Episode driver: owns the world state and the episode's random stream.
class Simulator {
public:
    struct Tick {
        WorldState state;
        std::vector<LidarObservation> observations;  // all 48
        std::vector<LidarObservation> human_hits;    // associate(observations)
    };

    Simulator(kinematics::RobotModel model, std::array<kinematics::RingSpec, 3> rings,
              HumanGeometry geom, SimParams params, std::uint64_t seed, double start_time = 0.0);

    /// Advances robot and human by one dt and senses the new state.
    Tick tick();

    const WorldState& state() const { return state_; }

private:
    kinematics::RobotModel model_;
    std::array<kinematics::RingSpec, 3> rings_;
    HumanGeometry geom_;
    SimParams params_;
    Rng rng_;
    WorldState state_;
};

}  // namespace ringsense::simworld
