#pragma once

#include <Eigen/Dense>

namespace ringsense::kinematics {

/// Rigid 3-D pose: rotation plus translation, the currency of the
/// kinematic chain. Composition is `a * b` (apply b first, then a).
struct Transform {
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d translation = Eigen::Vector3d::Zero();

    static Transform identity() { return {}; }

    Transform operator*(const Transform& rhs) const {
        return {rotation * rhs.rotation, rotation * rhs.translation + translation};
    }

    Eigen::Vector3d apply(const Eigen::Vector3d& p) const { return rotation * p + translation; }

    Transform inverse() const {
        Eigen::Matrix3d rt = rotation.transpose();
        return {rt, -(rt * translation)};
    }
};

/// True when R is orthonormal with det +1 within tol.
bool is_rigid(const Transform& t, double tol = 1e-9);

Transform rot_x(double angle);
Transform rot_z(double angle);
Transform translate(const Eigen::Vector3d& v);

}  // namespace ringsense::kinematics
