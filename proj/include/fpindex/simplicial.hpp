// Finite simplicial complexes of dimension <= 3 with integer boundary
// matrices. Orientation convention: simplices are stored with ascending
// vertex order and oriented by that order.
#pragma once

#include <array>
#include <vector>

#include "fpindex/int_matrix.hpp"

namespace fpindex {

constexpr int kMaxDim = 3;

using Simplex = std::vector<int>;  // sorted, distinct vertex ids

class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    // Builds a complex from arbitrary simplices. With auto_close, missing
    // faces are added (closed_faces_added reports how many); without it,
    // a non-face-closed input throws std::invalid_argument.
    static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices,
                                            bool auto_close = false,
                                            size_t* closed_faces_added = nullptr);

    const std::vector<Simplex>& simplices(int dim) const;
    size_t count(int dim) const { return simplices(dim).size(); }
    bool contains(const Simplex& s) const;

    bool empty() const;

    // Alternating sum of simplex counts.
    long long euler_characteristic() const;

  private:
    std::array<std::vector<Simplex>, kMaxDim + 1> by_dim_;
};

struct SimplicialPair {
    SimplicialComplex total;  // N
    SimplicialComplex sub;    // L, must be a face-closed subcomplex of N

    void validate() const;  // throws std::invalid_argument when sub is not a subcomplex
};

// Boundary matrices d_1..d_3 of the (relative) chain complex. Columns are
// indexed by p-simplices of total not in sub, rows by (p-1)-simplices of
// total not in sub; d_{p-1} d_p = 0.
std::array<IntMatrix, kMaxDim> boundary_matrices(const SimplicialComplex& c);
std::array<IntMatrix, kMaxDim> boundary_matrices(const SimplicialPair& p);

// Basis of the relative chain group in dimension dim: simplices of total
// not contained in sub, in the complex's canonical order.
std::vector<Simplex> relative_basis(const SimplicialPair& p, int dim);

}  // namespace fpindex
