#include "fpindex/realization.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fpindex {

long long RealizationPlan::total_instances() const {
    long long n = 0;
    for (const FamilySpec& f : disk_families)
        n += f.count;
    for (const FamilySpec& f : annulus_families)
        n += f.count;
    return n;
}

long long RealizationPlan::total_disks() const {
    long long n = 0;
    for (const FamilySpec& f : disk_families)
        n += f.count * f.k;
    return n;
}

long long RealizationPlan::total_annuli() const {
    long long n = 0;
    for (const FamilySpec& f : annulus_families)
        n += f.count;
    return n;
}

namespace {

void assign_geometry(RealizationPlan& plan) {
    const long long total = plan.total_instances();
    if (total == 0)
        return;
    const double pi = std::numbers::pi;
    // Equally spaced cap axes on the equator; cap radius equal to half the
    // angular gap between adjacent axes keeps the closed caps disjoint.
    const double cap_radius = total == 1 ? pi / 4.0 : pi / (2.0 * static_cast<double>(total));
    long long slot = 0;
    auto place = [&](const FamilySpec& fam, bool annulus) {
        for (long long i = 0; i < fam.count; ++i) {
            double lon = 2.0 * pi * static_cast<double>(slot) / static_cast<double>(total);
            FamilyPlacement p;
            p.k = fam.k;
            p.annulus = annulus;
            p.center = Vec3{std::cos(lon), std::sin(lon), 0.0};
            p.cap_radius = cap_radius;
            for (long long j = 0; j < fam.k; ++j)
                p.spot_phases.push_back(2.0 * pi * static_cast<double>(j) /
                                        static_cast<double>(fam.k));
            plan.geometry.push_back(std::move(p));
            ++slot;
        }
    };
    for (const FamilySpec& f : plan.disk_families)
        place(f, false);
    for (const FamilySpec& f : plan.annulus_families)
        place(f, true);
}

}  // namespace

RealizationPlan plan_from_coefficients(const std::map<long long, long long>& coefficients) {
    RealizationPlan plan;
    std::map<long long, long long> shifted = coefficients;
    shifted[1] -= 1;  // the sigma^1 normalization of the construction
    for (auto it = shifted.begin(); it != shifted.end();) {
        if (it->second == 0)
            it = shifted.erase(it);
        else
            ++it;
    }
    plan.shifted_coefficients = shifted;
    for (const auto& [k, a] : shifted) {
        if (a < 0)
            plan.disk_families.push_back(FamilySpec{k, -a});
        else
            plan.annulus_families.push_back(FamilySpec{k, a});
    }
    assign_geometry(plan);
    return plan;
}

RealizationPlan plan_realization(const PeriodicSequence& seq) {
    DoldCheck check = check_dold(seq);
    if (!check.ok)
        throw DoldViolation(*check.witness);
    std::map<long long, long long> coeffs;
    for (const auto& [k, a] : dold_coefficients(seq).coefficients)
        coeffs[k] = to_long_checked(a.get_num());
    return plan_from_coefficients(coeffs);
}

long long block_lefschetz(const RealizationPlan& plan, long long n) {
    if (n < 1)
        throw std::invalid_argument("block_lefschetz: n must be >= 1");
    long long total = 0;
    for (const FamilySpec& f : plan.disk_families)
        if (n % f.k == 0)
            total += f.count * f.k;
    for (const FamilySpec& f : plan.annulus_families)
        if (n % f.k == 0)
            total -= f.count * f.k;
    return total;
}

long long index_sequence(const RealizationPlan& plan, long long n) {
    return 1 - block_lefschetz(plan, n);
}

long long inverse_index_sequence(const RealizationPlan& plan, long long n) {
    return block_lefschetz(plan, n) - 1;
}

RoundtripReport verify_roundtrip(const PeriodicSequence& seq) {
    RealizationPlan plan = plan_realization(seq);
    long long l = seq.period();
    for (const FamilySpec& f : plan.disk_families)
        l = lcm_ll(l, f.k);
    for (const FamilySpec& f : plan.annulus_families)
        l = lcm_ll(l, f.k);

    RoundtripReport report;
    report.checked_up_to = 2 * l;
    report.ok = true;
    for (long long n = 1; n <= report.checked_up_to; ++n) {
        long long expected = seq.value_at(n);
        long long realized = index_sequence(plan, n);
        report.table.push_back({n, expected, realized});
        if (expected != realized)
            report.ok = false;
    }
    return report;
}

}  // namespace fpindex
