#include "ringsense/simworld.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ringsense::simworld {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Range reported when a ray starts inside a robot capsule: the beam is
// blocked at the sensor face, but reported ranges must stay positive.
constexpr double kContactRange = 1e-9;

struct SceneShapes {
    geometry::VerticalCylinder human;
    std::array<geometry::Capsule, kinematics::kJointCount> robot;
    double max_range = kinematics::kMaxRange;
};

RayHit cast_against(const Eigen::Vector3d& origin, const Eigen::Vector3d& dir,
                    const SceneShapes& scene) {
    const geometry::Ray ray{origin, dir};

    std::optional<double> robot_t;
    for (const auto& cap : scene.robot) {
        if (cap.contains(origin)) {
            robot_t = kContactRange;
            break;
        }
        if (auto t = geometry::intersect(ray, cap)) {
            if (!robot_t || *t < *robot_t) robot_t = *t;
        }
    }
    const std::optional<double> human_t = geometry::intersect(ray, scene.human);

    RayHit hit;
    // Ties go to Robot: prefer reading a hit as self-occlusion.
    if (robot_t && (!human_t || *robot_t <= *human_t)) {
        hit.distance = robot_t;
        hit.label = HitLabel::Robot;
    } else if (human_t) {
        hit.distance = human_t;
        hit.label = HitLabel::Human;
    }
    if (hit.distance && *hit.distance > scene.max_range) {
        hit.distance.reset();
        hit.label = HitLabel::None;
    }
    return hit;
}

std::vector<Eigen::Vector3d> cone_directions(const kinematics::Transform& unit_pose,
                                             double half_angle, int ray_count) {
    std::vector<Eigen::Vector3d> dirs;
    dirs.reserve(static_cast<std::size_t>(ray_count));
    dirs.push_back(unit_pose.rotation * Eigen::Vector3d::UnitX());
    const int rim = ray_count - 1;
    const double ca = std::cos(half_angle), sa = std::sin(half_angle);
    for (int m = 0; m < rim; ++m) {
        const double phi = 2.0 * kPi * static_cast<double>(m) / static_cast<double>(rim);
        const Eigen::Vector3d local{ca, sa * std::cos(phi), sa * std::sin(phi)};
        dirs.push_back(unit_pose.rotation * local);
    }
    return dirs;
}

}  // namespace

void HumanGeometry::validate() const {
    if (!(body_radius > 0.0)) throw std::invalid_argument("human body radius must be positive");
    if (!(body_height > 0.0)) throw std::invalid_argument("human body height must be positive");
}

void SimParams::validate() const {
    if (!(workspace_radius > 0.0)) throw std::invalid_argument("workspace radius must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("tick dt must be positive");
    if (p_turn < 0.0 || p_turn > 1.0) throw std::invalid_argument("p_turn must be in [0,1]");
    if (!(joint_speed > 0.0)) throw std::invalid_argument("joint speed must be positive");
    if (!(reach_eps > 0.0)) throw std::invalid_argument("reach epsilon must be positive");
    if (fov_rays < 1) throw std::invalid_argument("cone needs at least one ray");
    for (double r : link_radii) {
        if (r < 0.0) throw std::invalid_argument("link radius must be nonnegative");
    }
}

HumanState step_human(const HumanState& h, double dt, const SimParams& params, Rng& rng) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_human: dt must be positive");
    HumanState out = h;
    if (rng.bernoulli(params.p_turn)) {
        out.heading += rng.uniform(-params.max_turn, params.max_turn);
    }
    out.x += out.speed * dt * std::cos(out.heading);
    out.y += out.speed * dt * std::sin(out.heading);

    const double rho = std::hypot(out.x, out.y);
    if (rho > params.workspace_radius) {
        // Reflect the walking direction about the boundary normal and clamp
        // the position back onto the disc.
        const double nx = out.x / rho, ny = out.y / rho;
        const double dx = std::cos(out.heading), dy = std::sin(out.heading);
        const double dn = dx * nx + dy * ny;
        out.heading = std::atan2(dy - 2.0 * dn * ny, dx - 2.0 * dn * nx);
        out.x = nx * params.workspace_radius;
        out.y = ny * params.workspace_radius;
    }
    return out;
}

std::pair<kinematics::JointConfig, kinematics::JointConfig> step_robot(
    const WorldState& w, double dt, const kinematics::RobotModel& model, const SimParams& params,
    Rng& rng) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_robot: dt must be positive");
    kinematics::JointConfig q = w.q;
    kinematics::JointConfig target = w.q_target;

    bool reached = true;
    for (int i = 0; i < kinematics::kJointCount; ++i) {
        if (std::abs(target[i] - q[i]) > params.reach_eps) {
            reached = false;
            break;
        }
    }
    if (reached) {
        for (int i = 0; i < kinematics::kJointCount; ++i) {
            const auto& lim = model.limits[static_cast<std::size_t>(i)];
            target[i] = rng.uniform(lim.low, lim.high);
        }
        return {q, target};  // q holds still on the retarget tick
    }

    const double max_step = params.joint_speed * dt;
    for (int i = 0; i < kinematics::kJointCount; ++i) {
        q[i] += std::clamp(target[i] - q[i], -max_step, max_step);
    }
    return {q, target};
}

geometry::VerticalCylinder human_cylinder(const HumanState& h, const HumanGeometry& geom) {
    return {h.x, h.y, geom.body_radius, 0.0, geom.body_height};
}

std::array<geometry::Capsule, kinematics::kJointCount> robot_capsules(
    const kinematics::RobotModel& model, const kinematics::LinkTransforms& links,
    const SimParams& params) {
    std::array<geometry::Capsule, kinematics::kJointCount> caps;
    Eigen::Vector3d prev = model.base_in_world.translation;
    for (int i = 0; i < kinematics::kJointCount; ++i) {
        const Eigen::Vector3d end = links[static_cast<std::size_t>(i)].translation;
        caps[static_cast<std::size_t>(i)] =
            geometry::Capsule{prev, end, params.link_radii[static_cast<std::size_t>(i)]};
        prev = end;
    }
    return caps;
}

RayHit cast_ray(const Eigen::Vector3d& origin, const Eigen::Vector3d& dir, const WorldState& w,
                const HumanGeometry& geom, const kinematics::RobotModel& model,
                const SimParams& params) {
    if (std::abs(dir.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("cast_ray: direction must be unit length");
    }
    const auto links = kinematics::forward_kinematics(model, w.q);
    const SceneShapes scene{human_cylinder(w.human, geom), robot_capsules(model, links, params)};
    return cast_against(origin, dir, scene);
}

std::vector<LidarObservation> sense(const WorldState& w,
                                    const std::array<kinematics::RingSpec, 3>& rings,
                                    const HumanGeometry& geom,
                                    const kinematics::RobotModel& model, const SimParams& params) {
    const auto links = kinematics::forward_kinematics(model, w.q);
    const SceneShapes scene{human_cylinder(w.human, geom), robot_capsules(model, links, params)};

    std::vector<LidarObservation> out;
    out.reserve(static_cast<std::size_t>(kinematics::kRingCount * kinematics::kUnitsPerRing));
    for (int r = 0; r < kinematics::kRingCount; ++r) {
        const auto& ring = rings[static_cast<std::size_t>(r)];
        for (int u = 1; u <= ring.unit_count; ++u) {
            const auto pose = kinematics::lidar_pose(links, ring, u);
            LidarObservation obs;
            obs.ring = r + 1;
            obs.unit = u;
            for (const auto& dir : cone_directions(pose, ring.fov_half_angle, params.fov_rays)) {
                const RayHit hit = cast_against(pose.translation, dir, scene);
                if (hit.distance && (!obs.range || *hit.distance < *obs.range)) {
                    obs.range = hit.distance;
                    obs.label = hit.label;
                    obs.hit_point_world = pose.translation + *hit.distance * dir;
                }
            }
            out.push_back(std::move(obs));
        }
    }
    return out;
}

std::vector<LidarObservation> associate(const std::vector<LidarObservation>& obs) {
    std::vector<LidarObservation> kept;
    for (const auto& o : obs) {
        if (o.label == HitLabel::Human) kept.push_back(o);
    }
    return kept;
}

Simulator::Simulator(kinematics::RobotModel model, std::array<kinematics::RingSpec, 3> rings,
                     HumanGeometry geom, SimParams params, std::uint64_t seed, double start_time)
    : model_(std::move(model)),
      rings_(rings),
      geom_(geom),
      params_(params),
      rng_(seed) {
    model_.validate();
    for (const auto& ring : rings_) ring.validate();
    geom_.validate();
    params_.validate();

    state_.time = start_time;
    for (int i = 0; i < kinematics::kJointCount; ++i) {
        const auto& lim = model_.limits[static_cast<std::size_t>(i)];
        state_.q[i] = rng_.uniform(lim.low, lim.high);
        state_.q_target[i] = rng_.uniform(lim.low, lim.high);
    }
    const double rho = params_.workspace_radius * std::sqrt(rng_.uniform());
    const double phi = rng_.uniform(-kPi, kPi);
    state_.human.x = rho * std::cos(phi);
    state_.human.y = rho * std::sin(phi);
    state_.human.heading = rng_.uniform(-kPi, kPi);
    state_.human.speed = params_.human_speed;
}

Simulator::Tick Simulator::tick() {
    auto [q, target] = step_robot(state_, params_.dt, model_, params_, rng_);
    state_.q = q;
    state_.q_target = target;
    state_.human = step_human(state_.human, params_.dt, params_, rng_);
    state_.time += params_.dt;

    Tick t;
    t.state = state_;
    t.observations = sense(state_, rings_, geom_, model_, params_);
    t.human_hits = associate(t.observations);
    return t;
}

}  // namespace ringsense::simworld
