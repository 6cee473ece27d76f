// Topological degree of sphere maps by signed solid-angle summation, and
// the numerical fixed point index of R^3 maps at 0 via the normalized
// displacement z -> (eps z - f^n(eps z)) / |eps z - f^n(eps z)|.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fpindex/icosphere.hpp"

namespace fpindex {

struct MeshTooCoarse : std::runtime_error {
    explicit MeshTooCoarse(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateDisplacement : std::runtime_error {
    explicit DegenerateDisplacement(const std::string& what) : std::runtime_error(what) {}
};

// A sphere map sampled on an icosphere: one unit image vector per vertex.
struct TriangulatedSphereMap {
    TriangleMesh mesh;
    std::vector<Vec3> images;

    void validate() const;  // unit norms within 1e-12, matching sizes
};

struct DegreeReport {
    long long degree = 0;
    double residual = 0;            // |solid-angle sum / 4pi - degree|
    double max_image_diameter = 0;  // largest angular extent of an image triangle
};

// Degree = (1/4pi) * sum of signed image-triangle solid angles. Throws
// MeshTooCoarse when an image triangle subtends a near-hemisphere or the
// residual exceeds 0.1.
DegreeReport sphere_degree(const TriangulatedSphereMap& m);

using SpaceMap = std::function<Vec3(const Vec3&)>;

struct IndexReport {
    long long index = 0;
    double residual = 0;
    int level_used = 0;
    bool epsilon_check = false;  // degree at eps and eps/2 agree
};

// Fixed point index of f^n at 0: displacement degree on the eps-sphere,
// auto-refining the mesh up to 3 extra levels on MeshTooCoarse. The
// eps/2 independence check is always run. Throws DegenerateDisplacement
// when the displacement nearly vanishes at a mesh vertex.
IndexReport fixed_point_index(const SpaceMap& f, long long n, double eps = 1e-2, int level = 4);

// An explicit R^3 homeomorphism with fixed point 0.
struct CatalogMap {
    std::string id;
    SpaceMap map;
    SpaceMap inverse;  // empty when not invertible
    bool orientation_preserving = true;
    bool invertible = true;
    std::string note;
};

// Built-in catalog: contraction v/2, expansion 2v, the hyperbolic maps
// l = (x/2, y/2, 2z) and l' = (x/2, y/2, -2z), and their inverses.
const std::vector<CatalogMap>& catalog();
std::optional<CatalogMap> catalog_find(const std::string& id);

// Checks the orientation relation between i(f^n, 0) and i(f^{-n}, 0) for
// m = 3: opposite signs when f preserves orientation, equal when it
// reverses orientation.
bool inverse_index_relation(const CatalogMap& f, long long n, double eps = 1e-2, int level = 4);

// I_n = -1 + tr(A^n) for A = [[2,1],[1,1]], exact integer matrix powers.
// The sequence is unbounded (growth (3+sqrt 5)/2), the failure mode of the
// periodicity statement once the construction is lifted above dimension 3.
// n_max <= 44 so every value fits in 64 bits.
std::vector<long long> anosov_index_sequence(long long n_max);

}  // namespace fpindex
