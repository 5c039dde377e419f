#include "ringsense/transform.hpp"

#include <cmath>

namespace ringsense::kinematics {

bool is_rigid(const Transform& t, double tol) {
    const Eigen::Matrix3d err = t.rotation.transpose() * t.rotation - Eigen::Matrix3d::Identity();
    if (err.cwiseAbs().maxCoeff() > tol) return false;
    return std::abs(t.rotation.determinant() - 1.0) <= tol;
}

Transform rot_x(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Transform t;
    t.rotation << 1, 0, 0,
                  0, c, -s,
                  0, s, c;
    return t;
}

Transform rot_z(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Transform t;
    t.rotation << c, -s, 0,
                  s, c, 0,
                  0, 0, 1;
    return t;
}

Transform translate(const Eigen::Vector3d& v) {
    Transform t;
    t.translation = v;
    return t;
}

}  // namespace ringsense::kinematics
