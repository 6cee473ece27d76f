#include <doctest.h>

#include <cmath>
#include <random>

#include "fpindex/realization.hpp"

using namespace fpindex;

namespace {

PeriodicSequence seq(std::vector<long long> values) {
    long long q = static_cast<long long>(values.size());
    return PeriodicSequence(q, std::move(values));
}

PeriodicSequence sequence_of(const std::map<long long, long long>& coeffs) {
    long long q = 1;
    for (const auto& [k, a] : coeffs)
        if (a != 0)
            q = lcm_ll(q, k);
    std::vector<long long> values;
    for (long long n = 1; n <= q; ++n) {
        long long v = 0;
        for (const auto& [k, a] : coeffs)
            if (n % k == 0)
                v += k * a;
        values.push_back(v);
    }
    return PeriodicSequence(q, std::move(values));
}

}  // namespace

TEST_SUITE("plan_realization") {
    TEST_CASE("constant 1 yields the empty plan") {
        auto plan = plan_realization(seq({1}));
        CHECK(plan.shifted_coefficients.empty());
        CHECK(plan.disk_families.empty());
        CHECK(plan.annulus_families.empty());
        CHECK(plan.geometry.empty());
    }

    TEST_CASE("constant -1 yields two period-1 disk families") {
        auto plan = plan_realization(seq({-1}));
        CHECK(plan.shifted_coefficients == std::map<long long, long long>{{1, -2}});
        REQUIRE(plan.disk_families.size() == 1);
        CHECK(plan.disk_families[0] == FamilySpec{1, 2});
        CHECK(plan.annulus_families.empty());
        CHECK(plan.geometry.size() == 2);
    }

    TEST_CASE("alternating sequence yields one family of two permuting disks") {
        auto plan = plan_realization(seq({1, -1}));
        CHECK(plan.shifted_coefficients == std::map<long long, long long>{{2, -1}});
        REQUIRE(plan.disk_families.size() == 1);
        CHECK(plan.disk_families[0] == FamilySpec{2, 1});
        CHECK(plan.total_disks() == 2);
    }

    TEST_CASE("mixed decomposition keeps the shifted period-1 family") {
        // I = -sigma^2 + 2 sigma^3 has a_1 = 0; the shift adds a period-1
        // disk family, without which the realized indices would be off by
        // one at every n coprime to 6.
        auto plan = plan_from_coefficients({{2, -1}, {3, 2}});
        CHECK(plan.shifted_coefficients ==
              std::map<long long, long long>{{1, -1}, {2, -1}, {3, 2}});
        REQUIRE(plan.disk_families.size() == 2);
        CHECK(plan.disk_families[0] == FamilySpec{1, 1});
        CHECK(plan.disk_families[1] == FamilySpec{2, 1});
        REQUIRE(plan.annulus_families.size() == 1);
        CHECK(plan.annulus_families[0] == FamilySpec{3, 2});
        PeriodicSequence s = sequence_of({{2, -1}, {3, 2}});
        for (long long n = 1; n <= 12; ++n)
            CHECK(index_sequence(plan, n) == s.value_at(n));
    }

    TEST_CASE("rejects non-admissible sequences with the witness") {
        try {
            plan_realization(seq({0, 1}));
            FAIL("expected DoldViolation");
        } catch (const DoldViolation& e) {
            CHECK(e.witness.k == 2);
            CHECK(e.witness.value == Rat(1, 2));
        }
    }

    TEST_CASE("family counts match the coefficient sums") {
        std::mt19937 rng(37);
        std::uniform_int_distribution<long long> coeff(-5, 5);
        std::uniform_int_distribution<int> pick(1, 12);
        for (int trial = 0; trial < 100; ++trial) {
            std::map<long long, long long> coeffs;
            for (int t = 0; t < 3; ++t)
                coeffs[pick(rng)] = coeff(rng);
            auto plan = plan_from_coefficients(coeffs);
            long long disks = 0, annuli = 0, neg = 0, pos = 0;
            for (const auto& [k, a] : plan.shifted_coefficients)
                (a < 0 ? neg : pos) += a < 0 ? -a : a;
            for (const FamilySpec& f : plan.disk_families)
                disks += f.count;
            for (const FamilySpec& f : plan.annulus_families)
                annuli += f.count;
            CHECK(disks == neg);
            CHECK(annuli == pos);
            long long disk_caps = 0, annulus_count = 0;
            for (const auto& [k, a] : plan.shifted_coefficients) {
                if (a < 0)
                    disk_caps += -a * k;
                else
                    annulus_count += a;
            }
            CHECK(plan.total_disks() == disk_caps);
            CHECK(plan.total_annuli() == annulus_count);
            // every instance is placed, and the caps never touch
            CHECK(static_cast<long long>(plan.geometry.size()) == plan.total_instances());
            for (size_t i = 0; i < plan.geometry.size(); ++i)
                for (size_t j = i + 1; j < plan.geometry.size(); ++j) {
                    const auto& a = plan.geometry[i];
                    const auto& b = plan.geometry[j];
                    double dot = a.center.x * b.center.x + a.center.y * b.center.y +
                                 a.center.z * b.center.z;
                    double sep = std::acos(std::min(1.0, std::max(-1.0, dot)));
                    CHECK(sep > a.cap_radius + b.cap_radius);
                }
        }
    }
}

TEST_SUITE("block_lefschetz and index_sequence") {
    TEST_CASE("empty plan") {
        RealizationPlan plan;
        for (long long n = 1; n <= 6; ++n) {
            CHECK(block_lefschetz(plan, n) == 0);
            CHECK(index_sequence(plan, n) == 1);
        }
    }

    TEST_CASE("one period-2 disk family") {
        RealizationPlan plan;
        plan.disk_families.push_back({2, 1});
        CHECK(block_lefschetz(plan, 1) == 0);
        CHECK(block_lefschetz(plan, 2) == 2);
        CHECK(index_sequence(plan, 1) == 1);
        CHECK(index_sequence(plan, 2) == -1);
    }

    TEST_CASE("one period-3 annulus family") {
        RealizationPlan plan;
        plan.annulus_families.push_back({3, 1});
        CHECK(block_lefschetz(plan, 3) == -3);
        CHECK(block_lefschetz(plan, 2) == 0);
    }

    TEST_CASE("two period-1 disk families give the constant -1 sequence") {
        RealizationPlan plan;
        plan.disk_families.push_back({1, 2});
        for (long long n = 1; n <= 6; ++n)
            CHECK(index_sequence(plan, n) == -1);
    }

    TEST_CASE("antisymmetry with the inverse index sequence") {
        std::mt19937 rng(2222);
        std::uniform_int_distribution<long long> coeff(-5, 5);
        std::uniform_int_distribution<int> pick(1, 12);
        for (int trial = 0; trial < 60; ++trial) {
            std::map<long long, long long> coeffs{{pick(rng), coeff(rng)}, {pick(rng), coeff(rng)}};
            auto plan = plan_from_coefficients(coeffs);
            for (long long n = 1; n <= 24; ++n)
                CHECK(index_sequence(plan, n) + inverse_index_sequence(plan, n) == 0);
        }
    }
}

TEST_SUITE("verify_roundtrip") {
    TEST_CASE("base examples") {
        CHECK(verify_roundtrip(seq({1})).ok);
        CHECK(verify_roundtrip(seq({1, -1})).ok);
    }

    TEST_CASE("round trip on random integral decompositions") {
        std::mt19937 rng(555);
        std::uniform_int_distribution<long long> coeff(-5, 5);
        std::uniform_int_distribution<int> pick(1, 12);
        for (int trial = 0; trial < 200; ++trial) {
            std::map<long long, long long> coeffs;
            int terms = 1 + trial % 3;
            for (int t = 0; t < terms; ++t)
                coeffs[pick(rng)] = coeff(rng);
            PeriodicSequence s = sequence_of(coeffs);
            auto report = verify_roundtrip(s);
            CHECK(report.ok);
            CHECK(report.checked_up_to >= 2 * s.period());
            for (const auto& row : report.table)
                CHECK(row[1] == row[2]);
        }
    }
}
