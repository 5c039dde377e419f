#include "ringsense/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ringsense::geometry {

namespace {

// Hits closer than this are treated as numerical contact, not crossings.
constexpr double kMinHit = 1e-12;

void consider(std::optional<double>& best, double t) {
    if (t > kMinHit && (!best || t < *best)) best = t;
}

}  // namespace

bool VerticalCylinder::contains(const Eigen::Vector3d& p, double tol) const {
    if (p.z() < z0 - tol || p.z() > z1 + tol) return false;
    const double dx = p.x() - cx, dy = p.y() - cy;
    return dx * dx + dy * dy <= (radius + tol) * (radius + tol);
}

double VerticalCylinder::surface_distance(const Eigen::Vector3d& p) const {
    const double rho = std::hypot(p.x() - cx, p.y() - cy);
    const double dr = rho - radius;                                  // signed, + outside wall
    const double dz = std::max({z0 - p.z(), p.z() - z1});            // signed, + outside caps
    if (dr <= 0.0 && dz <= 0.0) return std::min(-dr, -dz);           // inside: nearest face
    if (dr <= 0.0) return dz;                                        // above/below, over the disc
    if (dz <= 0.0) return dr;                                        // beside the wall
    return std::hypot(dr, dz);                                       // outside an edge circle
}

bool Capsule::contains(const Eigen::Vector3d& p, double tol) const {
    const Eigen::Vector3d u = b - a;
    const double len2 = u.squaredNorm();
    double s = 0.0;
    if (len2 > 0.0) s = std::clamp((p - a).dot(u) / len2, 0.0, 1.0);
    const double d2 = (p - (a + s * u)).squaredNorm();
    return d2 <= (radius + tol) * (radius + tol);
}

std::optional<double> intersect(const Ray& ray, const VerticalCylinder& cyl) {
    std::optional<double> best;

    const double px = ray.origin.x() - cyl.cx, py = ray.origin.y() - cyl.cy;
    const double dx = ray.dir.x(), dy = ray.dir.y();

    // Lateral wall: quadratic in the ground-plane projection.
    const double a = dx * dx + dy * dy;
    const double b = 2.0 * (px * dx + py * dy);
    const double c = px * px + py * py - cyl.radius * cyl.radius;
    if (a > 0.0) {
        const double disc = b * b - 4.0 * a * c;
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            for (double t : {(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)}) {
                const double z = ray.origin.z() + t * ray.dir.z();
                if (z >= cyl.z0 && z <= cyl.z1) consider(best, t);
            }
        }
    }

    // End caps.
    if (ray.dir.z() != 0.0) {
        for (double zc : {cyl.z0, cyl.z1}) {
            const double t = (zc - ray.origin.z()) / ray.dir.z();
            const double x = px + t * dx, y = py + t * dy;
            if (x * x + y * y <= cyl.radius * cyl.radius) consider(best, t);
        }
    }
    return best;
}

std::optional<double> intersect(const Ray& ray, const Capsule& cap) {
    std::optional<double> best;

    const Eigen::Vector3d axis = cap.b - cap.a;
    const double len = axis.norm();
    const double r2 = cap.radius * cap.radius;

    if (len > 0.0) {
        // Cylindrical body: work in components orthogonal to the axis.
        const Eigen::Vector3d u = axis / len;
        const Eigen::Vector3d m = ray.origin - cap.a;
        const Eigen::Vector3d d_perp = ray.dir - ray.dir.dot(u) * u;
        const Eigen::Vector3d m_perp = m - m.dot(u) * u;
        const double a = d_perp.squaredNorm();
        if (a > 0.0) {
            const double b = 2.0 * m_perp.dot(d_perp);
            const double c = m_perp.squaredNorm() - r2;
            const double disc = b * b - 4.0 * a * c;
            if (disc >= 0.0) {
                const double sq = std::sqrt(disc);
                for (double t : {(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)}) {
                    const double s = (m + t * ray.dir).dot(u);
                    if (s >= 0.0 && s <= len) consider(best, t);
                }
            }
        }
    }

    // End spheres.
    for (const Eigen::Vector3d& center : {cap.a, cap.b}) {
        const Eigen::Vector3d m = ray.origin - center;
        const double b = 2.0 * m.dot(ray.dir);
        const double c = m.squaredNorm() - r2;
        const double disc = b * b - 4.0 * c;  // |dir| = 1
        if (disc < 0.0) continue;
        const double sq = std::sqrt(disc);
        consider(best, (-b - sq) / 2.0);
        consider(best, (-b + sq) / 2.0);
    }
    return best;
}

}  // namespace ringsense::geometry
