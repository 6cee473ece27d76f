#include "fpindex/icosphere.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace fpindex {

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 normalized(const Vec3& a) {
    double n = norm(a);
    if (n == 0.0)
        throw std::invalid_argument("cannot normalize zero vector");
    return {a.x / n, a.y / n, a.z / n};
}

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }

double angle_between(const Vec3& a, const Vec3& b) {
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle) {
    // Rodrigues rotation
    double c = std::cos(angle), s = std::sin(angle);
    Vec3 k = axis;
    return c * v + s * cross(k, v) + (dot(k, v) * (1.0 - c)) * k;
}

namespace {

struct MeshBuilder {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;
    std::map<std::pair<int, int>, int> midpoint_cache;

    int midpoint(int a, int b) {
        auto key = std::minmax(a, b);
        auto it = midpoint_cache.find(key);
        if (it != midpoint_cache.end())
            return it->second;
        Vec3 m = normalized(vertices[static_cast<size_t>(a)] + vertices[static_cast<size_t>(b)]);
        vertices.push_back(m);
        int idx = static_cast<int>(vertices.size()) - 1;
        midpoint_cache.emplace(key, idx);
        return idx;
    }
};

}  // namespace

TriangleMesh icosphere(int level) {
    if (level < 0 || level > 8)
        throw std::invalid_argument("icosphere: level must be in [0, 8]");

    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    MeshBuilder b;
    const double raw[12][3] = {
        {-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
        {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
        {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1},
    };
    for (const auto& v : raw)
        b.vertices.push_back(normalized(Vec3{v[0], v[1], v[2]}));
    b.faces = {
        {0, 11, 5},  {0, 5, 1},   {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
        {1, 5, 9},   {5, 11, 4},  {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4},   {3, 4, 2},   {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
        {4, 9, 5},   {2, 4, 11},  {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
    };

    // Enforce outward orientation on the base solid.
    for (auto& f : b.faces) {
        const Vec3& p = b.vertices[static_cast<size_t>(f[0])];
        const Vec3& q = b.vertices[static_cast<size_t>(f[1])];
        const Vec3& r = b.vertices[static_cast<size_t>(f[2])];
        if (dot(cross(q - p, r - p), p + q + r) < 0)
            std::swap(f[1], f[2]);
    }

    for (int l = 0; l < level; ++l) {
        std::vector<std::array<int, 3>> next;
        next.reserve(b.faces.size() * 4);
        for (const auto& f : b.faces) {
            int ab = b.midpoint(f[0], f[1]);
            int bc = b.midpoint(f[1], f[2]);
            int ca = b.midpoint(f[2], f[0]);
            next.push_back({f[0], ab, ca});
            next.push_back({f[1], bc, ab});
            next.push_back({f[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        b.faces = std::move(next);
        b.midpoint_cache.clear();
    }
    return TriangleMesh{std::move(b.vertices), std::move(b.faces)};
}

}  // namespace fpindex
