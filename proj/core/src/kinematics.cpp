#include "ringsense/kinematics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ringsense::kinematics {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kBaseXyTol = 1e-12;
}  // namespace

void RobotModel::validate() const {
    for (int i = 0; i < kJointCount; ++i) {
        const auto& lim = limits[static_cast<std::size_t>(i)];
        if (!(lim.low <= lim.high)) {
            throw std::invalid_argument("joint " + std::to_string(i + 1) +
                                        ": limit low exceeds high");
        }
    }
    if (std::abs(base_in_world.translation.x()) > kBaseXyTol ||
        std::abs(base_in_world.translation.y()) > kBaseXyTol) {
        throw std::invalid_argument("base frame must sit on the world origin in x,y");
    }
    if (!is_rigid(base_in_world)) {
        throw std::invalid_argument("base_in_world rotation is not a rigid rotation");
    }
}

void RingSpec::validate() const {
    if (link_index < 1 || link_index > kJointCount) {
        throw std::invalid_argument("ring link index " + std::to_string(link_index) +
                                    " outside 1..6");
    }
    if (unit_count != kUnitsPerRing) {
        throw std::invalid_argument("ring must carry exactly 16 units");
    }
    if (radius < 0.0) throw std::invalid_argument("ring radius must be nonnegative");
    if (max_range != kMaxRange) throw std::invalid_argument("unit max range is fixed at 2.0 m");
}

Transform dh_transform(const DhRow& row, double q) {
    const double theta = q + row.theta_offset;
    const double ct = std::cos(theta), st = std::sin(theta);
    const double ca = std::cos(row.alpha), sa = std::sin(row.alpha);
    Transform t;
    t.rotation << ct, -st * ca, st * sa,
                  st, ct * ca, -ct * sa,
                  0.0, sa, ca;
    t.translation << row.a * ct, row.a * st, row.d;
    return t;
}

LinkTransforms forward_kinematics(const RobotModel& model, const JointConfig& q) {
    for (int i = 0; i < kJointCount; ++i) {
        const auto& lim = model.limits[static_cast<std::size_t>(i)];
        if (q[i] < lim.low || q[i] > lim.high) {
            throw std::invalid_argument("joint " + std::to_string(i + 1) + " angle " +
                                        std::to_string(q[i]) + " outside limits [" +
                                        std::to_string(lim.low) + ", " + std::to_string(lim.high) +
                                        "]");
        }
    }
    LinkTransforms links;
    Transform chain = model.base_in_world;
    for (int i = 0; i < kJointCount; ++i) {
        chain = chain * dh_transform(model.dh[static_cast<std::size_t>(i)], q[i]);
        links[static_cast<std::size_t>(i)] = chain;
    }
    return links;
}

double unit_azimuth(int unit_index) {
    if (unit_index < 1 || unit_index > kUnitsPerRing) {
        throw std::out_of_range("unit index " + std::to_string(unit_index) + " outside 1..16");
    }
    return 2.0 * kPi * static_cast<double>(unit_index - 1) / static_cast<double>(kUnitsPerRing);
}

Transform unit_in_ring(const RingSpec& ring, int unit_index) {
    return rot_z(unit_azimuth(unit_index)) * translate({ring.radius, 0.0, 0.0});
}

Transform lidar_pose(const LinkTransforms& links, const RingSpec& ring, int unit_index) {
    const Transform& link = links[static_cast<std::size_t>(ring.link_index - 1)];
    return link * unit_in_ring(ring, unit_index);
}

Transform lidar_pose(const RobotModel& model, const JointConfig& q, const RingSpec& ring,
                     int unit_index) {
    ring.validate();
    return lidar_pose(forward_kinematics(model, q), ring, unit_index);
}

Eigen::Vector3d observation_to_world(const Transform& pose, double range, double max_range) {
    if (!(range > 0.0) || range > max_range) {
        throw std::invalid_argument("range " + std::to_string(range) + " outside (0, " +
                                    std::to_string(max_range) + "]");
    }
    return pose.translation + range * (pose.rotation * Eigen::Vector3d::UnitX());
}

}  // namespace ringsense::kinematics
