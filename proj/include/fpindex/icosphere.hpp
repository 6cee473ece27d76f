// Geodesic icosphere: subdivided icosahedron projected to the unit sphere,
// with consistently outward-oriented faces.
#pragma once

#include <array>
#include <vector>

#include "fpindex/realization.hpp"  // Vec3

namespace fpindex {

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 normalized(const Vec3& a);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& a);
// Angle between unit vectors, numerically stable near 0 and pi.
double angle_between(const Vec3& a, const Vec3& b);
// Rotation of v about the (unit) axis by the given angle.
Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle);

struct TriangleMesh {
    std::vector<Vec3> vertices;              // unit vectors
    std::vector<std::array<int, 3>> faces;   // outward (counterclockwise) orientation
};

// Subdivision level L: 20 * 4^L faces, 10 * 4^L + 2 vertices.
TriangleMesh icosphere(int level);

}  // namespace fpindex
