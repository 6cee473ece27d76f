#include "fpindex/sphere_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fpindex {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDiskContraction = 0.5;  // spot shrink factor inside disk families
constexpr double kHoleExpansion = 1.5;    // hole growth factor inside annulus families

// Strictly increasing piecewise-linear map of angular distances with
// fixed endpoints: knots start at (0, 0) and the map is the identity at and
// beyond the last knot.
struct RadialProfile {
    std::vector<double> in;   // ascending, in.front() = 0
    std::vector<double> out;  // ascending, out.front() = 0, out.back() = in.back()

    double operator()(double t) const {
        if (t <= 0 || t >= in.back())
            return t;
        auto hi = std::upper_bound(in.begin(), in.end(), t);
        size_t i = static_cast<size_t>(hi - in.begin());
        double f = (t - in[i - 1]) / (in[i] - in[i - 1]);
        return out[i - 1] + f * (out[i] - out[i - 1]);
    }

    RadialProfile inverse() const { return RadialProfile{out, in}; }
};

// Rotation fraction: 1 up to full_until, 0 from zero_at on, linear between.
struct TaperRamp {
    double full_until = 0;
    double zero_at = 0;

    double operator()(double colat) const {
        if (colat <= full_until)
            return 1.0;
        if (colat >= zero_at)
            return 0.0;
        return (zero_at - colat) / (zero_at - full_until);
    }
};

// Point at angular distance t from p along the arc through x.
Vec3 geodesic_at(const Vec3& p, const Vec3& x, double t) {
    Vec3 tangent = x - dot(x, p) * p;
    double len = norm(tangent);
    if (len < 1e-14)
        return p;  // x on the axis: direction undefined, only reached with t ~ 0
    Vec3 u = (1.0 / len) * tangent;
    return std::cos(t) * p + std::sin(t) * u;
}

struct Instance {
    long long k = 1;
    bool annulus = false;
    Vec3 axis;
    double cap_radius = 0;
    std::vector<Vec3> spots;  // sub-disk (disk family) or hole (annulus) centers
    double spot_radius = 0;
    double step_angle = 0;    // signed rotation per application (0 for k = 1 disks)
    RadialProfile spot_profile;
    RadialProfile spot_profile_inv;
    RadialProfile colat_profile;      // annulus attraction toward the mid band
    RadialProfile colat_profile_inv;
    bool has_colat_profile = false;
    TaperRamp taper;

    double signed_distance(const Vec3& x) const {
        if (!annulus) {
            double best = spot_radius - angle_between(x, spots.front());
            for (size_t i = 1; i < spots.size(); ++i)
                best = std::max(best, spot_radius - angle_between(x, spots[i]));
            return best;
        }
        double colat = angle_between(x, axis);
        double s = std::min(colat - 0.25 * cap_radius, 0.75 * cap_radius - colat);
        for (const Vec3& w : spots)
            s = std::min(s, angle_between(x, w) - spot_radius);
        return s;
    }

    Vec3 apply(const Vec3& x) const {
        Vec3 y = x;
        if (has_colat_profile)
            y = geodesic_at(axis, y, colat_profile(angle_between(y, axis)));
        for (const Vec3& w : spots) {
            double t = angle_between(y, w);
            if (t < 2.0 * spot_radius) {  // spot zones are pairwise disjoint
                y = geodesic_at(w, y, spot_profile(t));
                break;
            }
        }
        double theta = step_angle * taper(angle_between(y, axis));
        return theta == 0 ? y : rotate_about(y, axis, theta);
    }

    Vec3 apply_inverse(const Vec3& x) const {
        double theta = step_angle * taper(angle_between(x, axis));
        Vec3 y = theta == 0 ? x : rotate_about(x, axis, -theta);
        for (const Vec3& w : spots) {
            double t = angle_between(y, w);
            if (t < 2.0 * spot_radius) {  // each spot zone maps onto itself
                y = geodesic_at(w, y, spot_profile_inv(t));
                break;
            }
        }
        if (has_colat_profile)
            y = geodesic_at(axis, y, colat_profile_inv(angle_between(y, axis)));
        return y;
    }
};

}  // namespace

struct SkewProductSpec::Impl {
    std::vector<Instance> instances;

    double phi(const Vec3& u) const {
        double best = -1.0;
        for (const Instance& inst : instances)
            best = std::max(best, inst.signed_distance(u));
        return std::clamp(best, -1.0, 1.0);
    }

    Vec3 apply_g(const Vec3& u) const {
        for (const Instance& inst : instances)
            if (angle_between(u, inst.axis) < inst.cap_radius)
                return inst.apply(u);
        return u;
    }

    Vec3 apply_g_inverse(const Vec3& u) const {
        for (const Instance& inst : instances)
            if (angle_between(u, inst.axis) < inst.cap_radius)
                return inst.apply_inverse(u);
        return u;
    }
};

Vec3 SkewProductSpec::apply_g(const Vec3& unit) const { return impl_->apply_g(unit); }
Vec3 SkewProductSpec::apply_g_inverse(const Vec3& unit) const {
    return impl_->apply_g_inverse(unit);
}
double SkewProductSpec::phi(const Vec3& unit) const { return impl_->phi(unit); }

Vec3 SkewProductSpec::map_r3(const Vec3& v) const { return as_space_map()(v); }
Vec3 SkewProductSpec::inverse_r3(const Vec3& v) const { return as_inverse_space_map()(v); }

SpaceMap SkewProductSpec::as_space_map() const {
    auto impl = impl_;
    return [impl](const Vec3& v) {
        double r = norm(v);
        if (r == 0.0)
            return Vec3{0, 0, 0};
        Vec3 u = (1.0 / r) * v;
        return (std::exp(impl->phi(u)) * r) * impl->apply_g(u);
    };
}

SpaceMap SkewProductSpec::as_inverse_space_map() const {
    auto impl = impl_;
    return [impl](const Vec3& v) {
        double r = norm(v);
        if (r == 0.0)
            return Vec3{0, 0, 0};
        Vec3 u = (1.0 / r) * v;
        Vec3 pre = impl->apply_g_inverse(u);
        return (std::exp(-impl->phi(pre)) * r) * pre;
    };
}

namespace {

// Orthonormal tangent frame at a unit vector.
std::pair<Vec3, Vec3> tangent_frame(const Vec3& axis) {
    Vec3 ref = std::abs(axis.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    Vec3 t0 = normalized(cross(axis, ref));
    Vec3 t1 = cross(axis, t0);
    return {t0, t1};
}

Instance make_instance(const FamilyPlacement& placement) {
    Instance inst;
    inst.k = placement.k;
    inst.annulus = placement.annulus;
    inst.axis = normalized(placement.center);
    inst.cap_radius = placement.cap_radius;

    const double rho = placement.cap_radius;
    auto [t0, t1] = tangent_frame(inst.axis);
    const double orbit_colat = 0.5 * rho;
    for (double phase : placement.spot_phases) {
        Vec3 dir = std::cos(phase) * t0 + std::sin(phase) * t1;
        inst.spots.push_back(std::cos(orbit_colat) * inst.axis + std::sin(orbit_colat) * dir);
    }

    double neighbor_gap = kPi;
    if (inst.k >= 2)
        neighbor_gap = angle_between(inst.spots[0], inst.spots[1]);

    if (!inst.annulus) {
        inst.spot_radius = std::min(0.1 * rho, 0.2 * neighbor_gap);
        const double r = inst.spot_radius, s = kDiskContraction;
        inst.spot_profile = RadialProfile{{0.0, r, 2.0 * r}, {0.0, s * r, 2.0 * r}};
        inst.step_angle = inst.k == 1 ? 0.0 : 2.0 * kPi / static_cast<double>(inst.k);
        inst.taper = TaperRamp{0.75 * rho, rho};
    } else {
        inst.spot_radius = std::min(0.05 * rho, 0.2 * neighbor_gap);
        const double r = inst.spot_radius, s = kHoleExpansion;
        inst.spot_profile = RadialProfile{{0.0, r, 2.0 * r}, {0.0, s * r, 2.0 * r}};
        inst.step_angle = -2.0 * kPi / static_cast<double>(inst.k);
        inst.taper = TaperRamp{0.85 * rho, rho};
        inst.colat_profile = RadialProfile{
            {0.0, 0.25 * rho, 0.4 * rho, 0.6 * rho, 0.75 * rho, 0.9 * rho, rho},
            {0.0, 0.30 * rho, 0.4 * rho, 0.6 * rho, 0.70 * rho, 0.9 * rho, rho}};
        inst.has_colat_profile = true;
        inst.colat_profile_inv = inst.colat_profile.inverse();
    }
    inst.spot_profile_inv = inst.spot_profile.inverse();
    return inst;
}

std::vector<Vec3> fibonacci_sphere(size_t n, unsigned seed) {
    std::vector<Vec3> pts;
    pts.reserve(n);
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    const double offset = static_cast<double>(seed % 997) * 1e-3;
    for (size_t i = 0; i < n; ++i) {
        double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double theta = golden * static_cast<double>(i) + offset;
        pts.push_back(Vec3{r * std::cos(theta), r * std::sin(theta), z});
    }
    return pts;
}

}  // namespace

SkewProductSpec build_skew_product(const RealizationPlan& plan, unsigned seed) {
    for (const FamilySpec& f : plan.annulus_families)
        if (f.k > 6)
            throw std::invalid_argument(
                "build_skew_product: annulus families supported for k <= 6 only");
    const long long total = plan.total_instances();
    if (total > 36)
        throw GeometryOverlap("build_skew_product: more than 36 family instances");
    if (static_cast<long long>(plan.geometry.size()) != total)
        throw std::invalid_argument("build_skew_product: plan geometry is incomplete");

    auto impl = std::make_shared<SkewProductSpec::Impl>();
    for (const FamilyPlacement& placement : plan.geometry)
        impl->instances.push_back(make_instance(placement));

    for (size_t i = 0; i < impl->instances.size(); ++i)
        for (size_t j = i + 1; j < impl->instances.size(); ++j) {
            double sep = angle_between(impl->instances[i].axis, impl->instances[j].axis);
            if (sep <= impl->instances[i].cap_radius + impl->instances[j].cap_radius)
                throw GeometryOverlap("family caps overlap");
        }

    // Escape-property margin from the construction's inclusion gaps.
    double margin = 0.5;
    for (const Instance& inst : impl->instances) {
        if (!inst.annulus)
            margin = std::min(margin, (1.0 - kDiskContraction) * inst.spot_radius / 4.0);
        else
            margin = std::min(margin, std::min(0.02 * inst.cap_radius,
                                               (kHoleExpansion - 1.0) * inst.spot_radius / 4.0));
    }

    SkewProductSpec spec;
    spec.impl_ = impl;
    spec.plan_ = plan;
    spec.phi_margin_ = margin;

    // Verification grid: global Fibonacci points plus rings straddling every
    // boundary circle of the absorbing region.
    std::vector<Vec3> grid = fibonacci_sphere(4096, seed);
    for (const Instance& inst : impl->instances) {
        auto add_ring = [&](const Vec3& about, double radius) {
            auto [t0, t1] = tangent_frame(about);
            for (int a = 0; a < 64; ++a) {
                double ang = 2.0 * kPi * static_cast<double>(a) / 64.0;
                Vec3 dir = std::cos(ang) * t0 + std::sin(ang) * t1;
                grid.push_back(std::cos(radius) * about + std::sin(radius) * dir);
            }
        };
        for (const Vec3& w : inst.spots)
            for (double f : {0.5, 0.999999, 1.000001, 1.5})
                add_ring(w, f * inst.spot_radius);
        if (inst.annulus)
            for (double c : {0.250001, 0.3, 0.5, 0.7, 0.749999})
                add_ring(inst.axis, c * inst.cap_radius);
    }

    for (const Vec3& x : grid) {
        double before = spec.phi(x);
        if (before < -spec.phi_margin())
            continue;
        double after = spec.phi(spec.apply_g(x));
        if (after < spec.phi_margin())
            throw PropertyPViolation("escape property fails on the sample grid", x);
    }
    return spec;
}

}  // namespace fpindex
