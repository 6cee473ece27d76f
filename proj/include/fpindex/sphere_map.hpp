// Evaluable model of the radial homeomorphism realizing a plan: a sphere
// homeomorphism g blending per-family rotate-and-contract maps (disk
// families) and rotate-and-expand-holes maps (annulus families) into the
// identity, a height function phi positive exactly on the interior of the
// absorbing region, and the R^3 suspension v -> e^{phi(u)} |v| g(u).
#pragma once

#include <memory>

#include "fpindex/degree.hpp"
#include "fpindex/realization.hpp"

namespace fpindex {

struct GeometryOverlap : std::runtime_error {
    explicit GeometryOverlap(const std::string& what) : std::runtime_error(what) {}
};

struct PropertyPViolation : std::runtime_error {
    PropertyPViolation(const std::string& what, Vec3 where)
        : std::runtime_error(what), witness(where) {}
    Vec3 witness;
};

class SkewProductSpec {
  public:
    const RealizationPlan& plan() const { return plan_; }
    // The margin of the escape property: phi(x) >= -phi_margin forces
    // phi(g(x)) >= phi_margin on the verification grid.
    double phi_margin() const { return phi_margin_; }

    Vec3 apply_g(const Vec3& unit) const;
    Vec3 apply_g_inverse(const Vec3& unit) const;
    double phi(const Vec3& unit) const;

    // v -> e^{phi(u)} |v| g(u) with u = v/|v|, fixing 0.
    Vec3 map_r3(const Vec3& v) const;
    Vec3 inverse_r3(const Vec3& v) const;

    SpaceMap as_space_map() const;
    SpaceMap as_inverse_space_map() const;

  private:
    friend SkewProductSpec build_skew_product(const RealizationPlan&, unsigned);
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    RealizationPlan plan_;
    double phi_margin_ = 0;
};

// Builds and verifies the evaluable map. Requirements: at most 36 family
// instances (GeometryOverlap beyond), annulus families with k <= 6
// (std::invalid_argument). The escape property is checked on a sample grid
// (Fibonacci points plus boundary rings); PropertyPViolation carries a
// witness point on failure. The seed jitters the grid.
SkewProductSpec build_skew_product(const RealizationPlan& plan, unsigned seed = 0);

}  // namespace fpindex
