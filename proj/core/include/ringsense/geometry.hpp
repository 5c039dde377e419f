#pragma once

#include <optional>

#include <Eigen/Dense>

namespace ringsense::geometry {

/// Half-line from origin along a unit direction.
struct Ray {
    Eigen::Vector3d origin;
    Eigen::Vector3d dir;  // must be unit length
};

/// Closed vertical cylinder: axis through (cx, cy), z in [z0, z1].
/// Models the human body.
struct VerticalCylinder {
    double cx = 0.0;
    double cy = 0.0;
    double radius = 0.0;
    double z0 = 0.0;
    double z1 = 0.0;

    bool contains(const Eigen::Vector3d& p, double tol = 0.0) const;

    /// Unsigned distance from p to the closed surface (lateral wall and
    /// both end caps). Zero on the surface.
    double surface_distance(const Eigen::Vector3d& p) const;
};

/// Capsule: segment a-b swept by a sphere of the given radius.
/// Models one robot link.
struct Capsule {
    Eigen::Vector3d a;
    Eigen::Vector3d b;
    double radius = 0.0;

    bool contains(const Eigen::Vector3d& p, double tol = 0.0) const;
};

/// Nearest strictly positive surface-crossing parameter, if any.
/// For an origin inside the solid this is the exit point.
std::optional<double> intersect(const Ray& ray, const VerticalCylinder& cyl);
std::optional<double> intersect(const Ray& ray, const Capsule& cap);

}  // namespace ringsense::geometry
