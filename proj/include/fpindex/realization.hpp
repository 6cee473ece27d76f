// Combinatorial realization of a Dold-admissible periodic sequence by a
// radial homeomorphism of R^3: after the sigma^1 shift, negative
// coefficients become families of k cyclically permuted attracting disks
// on S^2, positive ones become attracting annuli with k expanding holes;
// the index sequence is recovered exactly from the per-family Lefschetz
// blocks (k or -k at multiples of k).
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fpindex/sequence_algebra.hpp"

namespace fpindex {

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

struct FamilySpec {
    long long k = 1;      // period of the family
    long long count = 1;  // number of family instances with this period
    bool operator==(const FamilySpec&) const = default;
};

// Placement of one family instance on S^2, used only by the evaluable map.
struct FamilyPlacement {
    long long k = 1;
    bool annulus = false;
    Vec3 center;                      // unit vector, family cap axis
    double cap_radius = 0;            // angular radius of the family cap
    std::vector<double> spot_phases;  // k phase angles of the spot centers
};

struct RealizationPlan {
    // Coefficients after the sigma^1 shift (entry at k=1 reduced by 1);
    // zero entries omitted.
    std::map<long long, long long> shifted_coefficients;
    std::vector<FamilySpec> disk_families;     // k -> count = -a_k over a_k < 0
    std::vector<FamilySpec> annulus_families;  // k -> count = a_k over a_k > 0
    std::vector<FamilyPlacement> geometry;     // one record per family instance

    long long total_instances() const;
    long long total_disks() const;    // sum over disk families of count * k
    long long total_annuli() const;   // sum over annulus families of count
};

// Builds the plan for a Dold-admissible sequence; throws DoldViolation
// with the integrality witness otherwise. Placements are equally spaced on
// the equator with cap radius pi/(2F), disjoint by construction.
RealizationPlan plan_realization(const PeriodicSequence& seq);

// Same plan from an integral decomposition directly.
RealizationPlan plan_from_coefficients(const std::map<long long, long long>& coefficients);

// Lambda((g restricted to the invariant blocks)^n): each disk family
// contributes k at multiples of k, each annulus family -k.
long long block_lefschetz(const RealizationPlan& plan, long long n);

// i(f^n, 0) = 1 - block_lefschetz(plan, n).
long long index_sequence(const RealizationPlan& plan, long long n);

// Index sequence of the inverse homeomorphism: the complement computation
// of S^2 minus the absorbing region gives 2 - block_lefschetz by
// Poincare-Hopf, so i(f^{-n}, 0) = block_lefschetz(plan, n) - 1 and the
// two sequences cancel for every n.
long long inverse_index_sequence(const RealizationPlan& plan, long long n);

struct RoundtripReport {
    bool ok = false;
    long long checked_up_to = 0;
    std::vector<std::array<long long, 3>> table;  // n, expected, realized
};

// Checks index_sequence(plan_realization(seq), n) = seq(n) for
// n = 1..2*lcm(period, family periods).
RoundtripReport verify_roundtrip(const PeriodicSequence& seq);

}  // namespace fpindex
