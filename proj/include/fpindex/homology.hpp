// Integer homology of simplicial pairs via Smith normal form, Lefschetz
// numbers of iterates, and the exact spectral certificates used by the
// periodicity argument: equality of nonzero spectra from trace data and
// the all-eigenvalues-are-roots-of-unity test.
#pragma once

#include <array>
#include <optional>

#include "fpindex/int_matrix.hpp"
#include "fpindex/simplicial.hpp"

namespace fpindex {

// U * M * V = D with U, V unimodular and D diagonal, d_j | d_{j+1}, d_j >= 0.
struct SmithForm {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
    std::vector<Int> invariant_factors() const;  // nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMatrix& m);

struct HomologyGroup {
    long long betti = 0;
    std::vector<Int> torsion;  // invariant factors >= 2, each dividing the next

    bool operator==(const HomologyGroup&) const = default;
};

// H_0..H_3 of the relative chain complex C_*(N)/C_*(L).
std::array<HomologyGroup, kMaxDim + 1> relative_homology(const SimplicialPair& p);

// One square integer matrix per dimension. Used in two roles: matrices of a
// simplicial self-map on the relative chain basis (where they commute with
// the boundary), or matrices of the induced map on the free part of
// homology. The alternating trace formula gives the same Lefschetz numbers
// in either role (Hopf trace).
struct ChainMap {
    std::array<IntMatrix, kMaxDim + 1> matrices;
};

// Chain matrices induced by a simplicial vertex map of the pair (must map
// sub into sub and simplices onto simplices of the complex). Verifies the
// boundary commutation d M = M d and throws std::invalid_argument otherwise.
ChainMap chain_map_from_vertex_map(const SimplicialPair& p, const std::vector<int>& vertex_map);

// Lambda(f^n) = sum_i (-1)^i tr(M_i^n), exact.
Int lefschetz_number(const ChainMap& m, long long n);

// -tr(M_1^n) + tr(M_2^n) for a map on H_*(N_L) in the neither-attractor-
// nor-repeller case; requires M_0 = [1] and M_3 zero (or empty) and equals
// lefschetz_number(m, n) - 1 there.
Int index_from_traces(const ChainMap& m, long long n);

// True iff u and v have the same nonzero eigenvalues with multiplicity,
// equivalently tr(u^k) = tr(v^k) for k = 1..bound once bound >= dim u +
// dim v. Decided exactly: the characteristic polynomials with their X^s
// factors stripped must coincide.
bool nonzero_spectrum_match(const IntMatrix& u, const IntMatrix& v, long long bound);

struct EigencheckResult {
    bool all_roots_of_unity = false;
    // Minimal n >= 1 with every nonzero eigenvalue^n = 1 (1 when the matrix
    // is nilpotent or empty); unset when the check fails.
    std::optional<long long> period;
};

// Strips X^s from the characteristic polynomial and tests whether the rest
// is a product of cyclotomic polynomials (orders up to max_order).
EigencheckResult roots_of_unity_eigencheck(const IntMatrix& m, long long max_order = 64);

}  // namespace fpindex
