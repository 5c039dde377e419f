#pragma once

#include <array>

#include "ringsense/transform.hpp"

namespace ringsense::kinematics {

inline constexpr int kJointCount = 6;
inline constexpr int kRingCount = 3;
inline constexpr int kUnitsPerRing = 16;

/// Reach of a single lidar unit, meters.
inline constexpr double kMaxRange = 2.0;
/// Half of the 25 degree per-unit field of view, radians.
inline constexpr double kFovHalfAngle = 12.5 * 3.141592653589793238462643383279502884 / 180.0;

/// One row of a standard Denavit-Hartenberg table:
/// DH(q) = RotZ(q + theta_offset) * TransZ(d) * TransX(a) * RotX(alpha).
struct DhRow {
    double a = 0.0;             // link length, m
    double alpha = 0.0;         // link twist, rad
    double d = 0.0;             // link offset, m
    double theta_offset = 0.0;  // joint angle offset, rad
};

struct JointLimit {
    double low = 0.0;
    double high = 0.0;
};

struct RobotModel {
    std::array<DhRow, kJointCount> dh{};
    std::array<JointLimit, kJointCount> limits{};
    Transform base_in_world;  // x,y translation must stay at the world origin

    /// Throws std::invalid_argument when a limit pair is inverted or the
    /// base frame is displaced from the world origin in x or y.
    void validate() const;
};

struct JointConfig {
    std::array<double, kJointCount> angles{};

    double& operator[](int i) { return angles[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return angles[static_cast<std::size_t>(i)]; }
};

/// One circular array of 16 single-unit lidars rigidly attached to a link
/// frame: zero translation and rotation between ring frame and link frame.
/// Units sit in the frame's xy-plane at `radius` from the link axis, each
/// sensing radially outward.
struct RingSpec {
    int link_index = 2;  // 1..6
    double radius = 0.08;
    int unit_count = kUnitsPerRing;
    double fov_half_angle = kFovHalfAngle;
    double max_range = kMaxRange;

    void validate() const;
};

using LinkTransforms = std::array<Transform, kJointCount>;

/// DH transform of one row at joint angle q.
Transform dh_transform(const DhRow& row, double q);

/// World-frame transform of every link:
/// link i = base_in_world * DH(1) * ... * DH(i).
/// Throws std::invalid_argument naming the joint when q violates a limit.
LinkTransforms forward_kinematics(const RobotModel& model, const JointConfig& q);

/// Azimuth of unit j (1-based) around the ring: 2*pi*(j-1)/16.
double unit_azimuth(int unit_index);

/// Ring-local pose of one unit: azimuth rotation then radial offset.
/// The unit's sensing axis is its local +x, pointing radially outward.
Transform unit_in_ring(const RingSpec& ring, int unit_index);

/// World pose of one lidar unit given precomputed link transforms.
Transform lidar_pose(const LinkTransforms& links, const RingSpec& ring, int unit_index);

/// Convenience overload running forward kinematics internally.
Transform lidar_pose(const RobotModel& model, const JointConfig& q, const RingSpec& ring,
                     int unit_index);

/// A scalar range reading converted to a world-frame point along the unit's
/// sensing axis. Throws std::invalid_argument for range <= 0 or > max_range.
Eigen::Vector3d observation_to_world(const Transform& pose, double range,
                                     double max_range = kMaxRange);

}  // namespace ringsense::kinematics
