#include "fpindex/degree.hpp"

#include <cmath>
#include <numbers>

#include "fpindex/int_matrix.hpp"

namespace fpindex {

void TriangulatedSphereMap::validate() const {
    if (images.size() != mesh.vertices.size())
        throw std::invalid_argument("sphere map: one image per mesh vertex required");
    for (const Vec3& v : images)
        if (std::abs(norm(v) - 1.0) > 1e-12)
            throw std::invalid_argument("sphere map: image vectors must be unit length");
}

DegreeReport sphere_degree(const TriangulatedSphereMap& m) {
    m.validate();
    const double pi = std::numbers::pi;
    double total = 0;
    double max_diameter = 0;
    for (const auto& f : m.mesh.faces) {
        const Vec3& a = m.images[static_cast<size_t>(f[0])];
        const Vec3& b = m.images[static_cast<size_t>(f[1])];
        const Vec3& c = m.images[static_cast<size_t>(f[2])];
        double diameter = std::max({angle_between(a, b), angle_between(b, c),
                                    angle_between(c, a)});
        max_diameter = std::max(max_diameter, diameter);
        // Signed solid angle (van Oosterom-Strackee); valid while the
        // triangle stays well inside a hemisphere.
        double num = dot(a, cross(b, c));
        double den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
        if (den <= 1e-12 || diameter > 0.9 * pi)
            throw MeshTooCoarse("image triangle subtends a near-hemisphere");
        total += 2.0 * std::atan2(num, den);
    }
    double scaled = total / (4.0 * pi);
    long long deg = std::llround(scaled);
    double residual = std::abs(scaled - static_cast<double>(deg));
    if (residual > 0.1)
        throw MeshTooCoarse("solid-angle sum is not close to an integer multiple of 4pi");
    return DegreeReport{deg, residual, max_diameter};
}

namespace {

Vec3 iterate_map(const SpaceMap& f, const Vec3& v, long long n) {
    Vec3 w = v;
    for (long long i = 0; i < n; ++i)
        w = f(w);
    return w;
}

DegreeReport displacement_degree(const SpaceMap& f, long long n, double eps,
                                 const TriangleMesh& mesh) {
    TriangulatedSphereMap sm;
    sm.mesh = mesh;
    sm.images.reserve(mesh.vertices.size());
    for (const Vec3& z : mesh.vertices) {
        Vec3 p = eps * z;
        Vec3 w = p - iterate_map(f, p, n);
        if (norm(w) < 1e-9)
            throw DegenerateDisplacement(
                "displacement vanishes on the sphere of radius " + std::to_string(eps));
        sm.images.push_back(normalized(w));
    }
    return sphere_degree(sm);
}

}  // namespace

IndexReport fixed_point_index(const SpaceMap& f, long long n, double eps, int level) {
    if (n < 1)
        throw std::invalid_argument("fixed_point_index: n must be >= 1");
    if (eps <= 0)
        throw std::invalid_argument("fixed_point_index: eps must be positive");
    for (int attempt = 0;; ++attempt) {
        try {
            TriangleMesh mesh = icosphere(level + attempt);
            DegreeReport full = displacement_degree(f, n, eps, mesh);
            DegreeReport half = displacement_degree(f, n, eps / 2.0, mesh);
            // Mesh-independence is the confidence check: a too-coarse mesh
            // can alias to a clean but wrong integer.
            DegreeReport finer = displacement_degree(f, n, eps, icosphere(level + attempt + 1));
            if (full.degree != finer.degree)
                throw MeshTooCoarse("degree changes under refinement");
            return IndexReport{full.degree, full.residual, level + attempt,
                               full.degree == half.degree};
        } catch (const MeshTooCoarse&) {
            if (attempt >= 3)
                throw;
        }
    }
}

const std::vector<CatalogMap>& catalog() {
    static const std::vector<CatalogMap> maps = [] {
        std::vector<CatalogMap> out;
        out.push_back({"contraction",
                       [](const Vec3& v) { return 0.5 * v; },
                       [](const Vec3& v) { return 2.0 * v; },
                       true, true,
                       "attracting homothety, index constantly 1"});
        out.push_back({"expansion",
                       [](const Vec3& v) { return 2.0 * v; },
                       [](const Vec3& v) { return 0.5 * v; },
                       true, true,
                       "orientation-preserving repeller, index constantly -1"});
        out.push_back({"l",
                       [](const Vec3& v) { return Vec3{v.x / 2, v.y / 2, 2 * v.z}; },
                       [](const Vec3& v) { return Vec3{2 * v.x, 2 * v.y, v.z / 2}; },
                       true, true,
                       "hyperbolic with two attracting directions, index -1"});
        out.push_back({"l-inverse",
                       [](const Vec3& v) { return Vec3{2 * v.x, 2 * v.y, v.z / 2}; },
                       [](const Vec3& v) { return Vec3{v.x / 2, v.y / 2, 2 * v.z}; },
                       true, true,
                       "inverse of l, index constantly 1"});
        out.push_back({"l-prime",
                       [](const Vec3& v) { return Vec3{v.x / 2, v.y / 2, -2 * v.z}; },
                       [](const Vec3& v) { return Vec3{2 * v.x, 2 * v.y, -v.z / 2}; },
                       false, true,
                       "orientation-reversing hyperbolic, indices 1, -1, 1, -1, ..."});
        out.push_back({"l-prime-inverse",
                       [](const Vec3& v) { return Vec3{2 * v.x, 2 * v.y, -v.z / 2}; },
                       [](const Vec3& v) { return Vec3{v.x / 2, v.y / 2, -2 * v.z}; },
                       false, true,
                       "inverse of l-prime"});
        return out;
    }();
    return maps;
}

std::optional<CatalogMap> catalog_find(const std::string& id) {
    for (const CatalogMap& m : catalog())
        if (m.id == id)
            return m;
    return std::nullopt;
}

bool inverse_index_relation(const CatalogMap& f, long long n, double eps, int level) {
    if (!f.invertible || !f.inverse)
        throw std::invalid_argument("inverse_index_relation: map is not invertible");
    long long forward = fixed_point_index(f.map, n, eps, level).index;
    long long backward = fixed_point_index(f.inverse, n, eps, level).index;
    // The sign is governed by the orientation of f^n: an orientation-
    // reversing f has orientation-preserving even iterates.
    bool iterate_preserves = f.orientation_preserving || n % 2 == 0;
    return iterate_preserves ? (backward == -forward) : (backward == forward);
}

std::vector<long long> anosov_index_sequence(long long n_max) {
    if (n_max < 1)
        throw std::invalid_argument("anosov_index_sequence: n_max must be >= 1");
    if (n_max > 44)
        throw std::overflow_error("anosov_index_sequence: values exceed 64 bits past n = 44");
    IntMatrix a = IntMatrix::from_rows({{2, 1}, {1, 1}});
    std::vector<long long> out;
    IntMatrix power = a;
    for (long long n = 1; n <= n_max; ++n) {
        out.push_back(to_long_checked(power.trace() - 1));
        if (n < n_max)
            power = power * a;
    }
    return out;
}

}  // namespace fpindex
