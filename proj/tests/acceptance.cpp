// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Each criterion is self-contained and uses its own independent oracles.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "fpindex/degree.hpp"
#include "fpindex/homology.hpp"
#include "fpindex/realization.hpp"
#include "fpindex/sequence_algebra.hpp"
#include "fpindex/sphere_map.hpp"

using namespace fpindex;

namespace {

int failures = 0;

void criterion(const char* name, double budget_seconds, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
        ok = false;
        note += " (over budget)";
    }
    std::printf("[%s] %-28s %6.2fs%s\n", ok ? "PASS" : "FAIL", name, elapsed, note.c_str());
    if (!ok)
        ++failures;
}

std::vector<int> sieve_moebius(int n) {
    std::vector<int> primes;
    std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
    std::vector<int> mu(static_cast<size_t>(n) + 1, 1);
    for (int i = 2; i <= n; ++i) {
        if (!composite[static_cast<size_t>(i)]) {
            primes.push_back(i);
            mu[static_cast<size_t>(i)] = -1;
        }
        for (int p : primes) {
            long long ip = 1LL * i * p;
            if (ip > n)
                break;
            composite[static_cast<size_t>(ip)] = true;
            if (i % p == 0) {
                mu[static_cast<size_t>(ip)] = 0;
                break;
            }
            mu[static_cast<size_t>(ip)] = -mu[static_cast<size_t>(i)];
        }
    }
    return mu;
}

struct Corpus {
    std::map<long long, long long> coefficients;
    PeriodicSequence sequence;
};

std::vector<Corpus> make_corpus(int count, long long max_k, long long max_abs, unsigned seed,
                                bool force_nontrivial_period) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long long> coeff(-max_abs, max_abs);
    std::uniform_int_distribution<long long> pick(1, max_k);
    std::uniform_int_distribution<int> terms(1, 4);
    std::vector<Corpus> corpus;
    while (static_cast<int>(corpus.size()) < count) {
        std::map<long long, long long> coeffs;
        int t = terms(rng);
        for (int i = 0; i < t; ++i) {
            long long a = coeff(rng);
            if (a != 0)
                coeffs[pick(rng)] = a;
        }
        if (coeffs.empty())
            continue;
        if (force_nontrivial_period) {
            bool has_high = false;
            for (const auto& [k, a] : coeffs)
                has_high = has_high || k >= 2;
            if (!has_high)
                continue;
        }
        long long q = 1;
        for (const auto& [k, a] : coeffs)
            q = lcm_ll(q, k);
        std::vector<long long> values;
        for (long long n = 1; n <= q; ++n) {
            long long v = 0;
            for (const auto& [k, a] : coeffs)
                if (n % k == 0)
                    v += k * a;
            values.push_back(v);
        }
        corpus.push_back(Corpus{coeffs, PeriodicSequence(q, values)});
    }
    return corpus;
}

// Independent Moebius-inversion oracle with a sieve table.
std::map<long long, long long> inversion_oracle(const PeriodicSequence& s,
                                                const std::vector<int>& mu) {
    std::map<long long, long long> out;
    for (long long k = 1; k <= s.period(); ++k) {
        long long acc = 0;
        for (long long d = 1; d <= k; ++d)
            if (k % d == 0)
                acc += mu[static_cast<size_t>(k / d)] * s.value_at(d);
        if (acc % k != 0)
            return {{-1, -1}};  // non-integral: cannot happen on this corpus
        if (acc != 0)
            out[k] = acc / k;
    }
    return out;
}

bool dold_round_trip() {
    auto corpus = make_corpus(1000, 12, 9, 1001, false);
    long long max_period = 1;
    for (const Corpus& c : corpus)
        max_period = std::max(max_period, c.sequence.period());
    auto mu = sieve_moebius(static_cast<int>(max_period));
    for (const Corpus& c : corpus) {
        DoldDecomposition d = dold_coefficients(c.sequence);
        if (!d.is_integral)
            return false;
        std::map<long long, long long> plain;
        for (const auto& [k, a] : d.coefficients)
            plain[k] = to_long_checked(a.get_num());
        if (plain != c.coefficients)
            return false;
        if (inversion_oracle(c.sequence, mu) != c.coefficients)
            return false;
        for (long long n = 1; n <= 2 * c.sequence.period(); ++n)
            if (evaluate(d, n) != to_rat(c.sequence.value_at(n)))
                return false;
    }
    return true;
}

bool dold_congruence_equivalence() {
    auto corpus = make_corpus(1000, 12, 9, 2002, true);
    auto mu = sieve_moebius(24);
    std::mt19937 rng(77);
    for (const Corpus& c : corpus) {
        for (long long n = 1; n <= 24; ++n) {
            long long acc = 0;
            for (long long d = 1; d <= n; ++d)
                if (n % d == 0)
                    acc += mu[static_cast<size_t>(n / d)] * c.sequence.value_at(d);
            if (acc % n != 0)
                return false;
        }
        std::vector<long long> bumped = c.sequence.values();
        size_t pos = std::uniform_int_distribution<size_t>(0, bumped.size() - 1)(rng);
        bumped[pos] += 1;
        if (check_dold(PeriodicSequence(c.sequence.period(), bumped)).ok)
            return false;
    }
    return true;
}

bool attractor_repeller_patterns() {
    struct Expect {
        const char* id;
        std::vector<long long> indices;
    };
    const std::vector<Expect> cases = {
        {"contraction", {1, 1, 1, 1}},
        {"expansion", {-1, -1, -1, -1}},
        {"l-prime", {1, -1, 1, -1}},
    };
    for (const Expect& c : cases) {
        auto m = catalog_find(c.id);
        if (!m)
            return false;
        for (double eps : {1e-2, 5e-3})
            for (long long n = 1; n <= 4; ++n) {
                IndexReport r = fixed_point_index(m->map, n, eps, 4);
                if (r.index != c.indices[static_cast<size_t>(n - 1)])
                    return false;
                if (r.level_used > 5 || !r.epsilon_check)
                    return false;
            }
    }
    return true;
}

bool realization_roundtrip() {
    std::mt19937 rng(3003);
    std::uniform_int_distribution<long long> coeff(-5, 5);
    std::uniform_int_distribution<long long> period_pick(1, 12);
    int done = 0;
    while (done < 200) {
        long long p = period_pick(rng);
        auto divisors = divisors_of(p);
        std::map<long long, long long> coeffs;
        coeffs[p] = 0;
        while (coeffs[p] == 0)
            coeffs[p] = coeff(rng);
        for (long long d : divisors)
            if (d != p && std::uniform_int_distribution<int>(0, 1)(rng)) {
                long long a = coeff(rng);
                if (a != 0)
                    coeffs[d] = a;
            }
        long long q = 1;
        for (const auto& [k, a] : coeffs)
            q = lcm_ll(q, k);
        std::vector<long long> values;
        for (long long n = 1; n <= q; ++n) {
            long long v = 0;
            for (const auto& [k, a] : coeffs)
                if (n % k == 0)
                    v += k * a;
            values.push_back(v);
        }
        PeriodicSequence s(q, values);
        if (!check_dold(s).ok)
            return false;
        if (!verify_roundtrip(s).ok)
            return false;
        ++done;
    }
    return true;
}

bool anosov_unboundedness() {
    auto values = anosov_index_sequence(40);
    std::vector<long long> t{3, 7};
    for (size_t i = 2; i < 40; ++i)
        t.push_back(3 * t[i - 1] - t[i - 2]);
    for (size_t i = 0; i < 40; ++i)
        if (values[i] != t[i] - 1)
            return false;
    if (values[0] != 2 || values[1] != 6 || values[2] != 17 || values[3] != 46)
        return false;
    std::vector<long long> head(values.begin(), values.begin() + 30);
    double expected = std::log((3.0 + std::sqrt(5.0)) / 2.0);
    return std::abs(growth_exponent(head) - expected) <= 0.01;
}

bool homology_engine() {
    SimplicialComplex tetra = SimplicialComplex::from_simplices(
        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, true);
    auto h = relative_homology(SimplicialPair{tetra, {}});
    if (!(h[0] == HomologyGroup{1, {}} && h[1] == HomologyGroup{0, {}} &&
          h[2] == HomologyGroup{1, {}}))
        return false;

    std::vector<Simplex> torus_faces;
    for (int i = 0; i < 7; ++i) {
        torus_faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
        torus_faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    auto torus = SimplicialComplex::from_simplices(torus_faces, true);
    auto ht = relative_homology(SimplicialPair{torus, {}});
    if (!(ht[1] == HomologyGroup{2, {}}))
        return false;

    std::mt19937 rng(6006);
    std::uniform_int_distribution<int> vertex(0, 6);
    std::uniform_int_distribution<int> dim(0, 3);
    std::uniform_int_distribution<int> count(1, 6);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Simplex> simplices;
        int n = count(rng);
        for (int i = 0; i < n; ++i) {
            std::set<int> s;
            int d = dim(rng);
            while (static_cast<int>(s.size()) < d + 1)
                s.insert(vertex(rng));
            simplices.push_back(Simplex(s.begin(), s.end()));
        }
        auto c = SimplicialComplex::from_simplices(simplices, true);
        SimplicialPair pair{c, {}};
        auto groups = relative_homology(pair);
        ChainMap identity;
        for (int d = 0; d <= kMaxDim; ++d)
            identity.matrices[static_cast<size_t>(d)] =
                IntMatrix::identity(static_cast<size_t>(groups[static_cast<size_t>(d)].betti));
        if (lefschetz_number(identity, 1) != to_int(c.euler_characteristic()))
            return false;
        auto b = boundary_matrices(pair);
        for (int d = 1; d < kMaxDim; ++d) {
            const IntMatrix& lo = b[static_cast<size_t>(d - 1)];
            const IntMatrix& hi = b[static_cast<size_t>(d)];
            if (!lo.empty() && !hi.empty() && !(lo * hi).is_zero())
                return false;
        }
    }
    return true;
}

bool spectral_certificates() {
    std::mt19937 rng(7007);
    std::uniform_int_distribution<long long> order(1, 12);
    for (int trial = 0; trial < 40; ++trial) {
        long long d1 = order(rng), d2 = order(rng);
        IntPoly p = poly_mul(cyclotomic(d1), cyclotomic(d2));
        size_t deg = p.size() - 1;
        IntMatrix companion(deg, deg);
        for (size_t i = 1; i < deg; ++i)
            companion.at(i, i - 1) = 1;
        for (size_t i = 0; i < deg; ++i)
            companion.at(i, deg - 1) = -p[i];
        auto r = roots_of_unity_eigencheck(companion);
        if (!r.all_roots_of_unity || r.period != lcm_ll(d1, d2))
            return false;
    }
    // golden-ratio companion: spectral radius > 1
    if (roots_of_unity_eigencheck(IntMatrix::from_rows({{0, 1}, {1, 1}})).all_roots_of_unity)
        return false;

    std::uniform_int_distribution<long long> entry(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        size_t n = 1 + static_cast<size_t>(trial % 3);
        IntMatrix u(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                u.at(i, j) = to_int(entry(rng));
        size_t extra = 1 + static_cast<size_t>(trial % 2);
        IntMatrix padded(n + extra, n + extra);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                padded.at(i, j) = u.at(i, j);
        for (size_t i = n; i + 1 < n + extra; ++i)
            padded.at(i, i + 1) = to_int(entry(rng));
        if (!nonzero_spectrum_match(u, padded, static_cast<long long>(2 * n + extra)))
            return false;
        if (nonzero_spectrum_match(u, u + IntMatrix::identity(n), static_cast<long long>(2 * n)))
            return false;
    }
    return true;
}

bool degree_robustness() {
    for (int level = 2; level <= 5; ++level) {
        TriangulatedSphereMap identity;
        identity.mesh = icosphere(level);
        identity.images = identity.mesh.vertices;
        if (sphere_degree(identity).degree != 1)
            return false;
        TriangulatedSphereMap antipodal;
        antipodal.mesh = icosphere(level);
        for (const Vec3& v : antipodal.mesh.vertices)
            antipodal.images.push_back(Vec3{-v.x, -v.y, -v.z});
        if (sphere_degree(antipodal).degree != -1)
            return false;
    }
    for (const CatalogMap& m : catalog())
        for (long long n = 1; n <= 2; ++n) {
            IndexReport base = fixed_point_index(m.map, n, 1e-2, 4);
            if (!base.epsilon_check)
                return false;
            if (fixed_point_index(m.map, n, 5e-3, 4).index != base.index)
                return false;
            if (fixed_point_index(m.map, n, 1e-2, 5).index != base.index)
                return false;
        }
    return true;
}

bool inverse_antisymmetry() {
    for (const char* id : {"contraction", "expansion", "l", "l-inverse"}) {
        auto m = catalog_find(id);
        if (!m || !m->orientation_preserving || !m->invertible)
            return false;
        for (long long n = 1; n <= 4; ++n) {
            long long fwd = fixed_point_index(m->map, n).index;
            long long bwd = fixed_point_index(m->inverse, n).index;
            if (fwd + bwd != 0)
                return false;
        }
    }
    // plan-built radial map: two permuting disks
    RealizationPlan plan = plan_from_coefficients({{1, 1}, {2, -1}});
    SkewProductSpec spec = build_skew_product(plan);
    for (long long n = 1; n <= 4; ++n) {
        long long fwd = fixed_point_index(spec.as_space_map(), n, 1e-2, 5).index;
        long long bwd = fixed_point_index(spec.as_inverse_space_map(), n, 1e-2, 5).index;
        if (fwd + bwd != 0)
            return false;
        if (fwd != index_sequence(plan, n))
            return false;
    }
    return true;
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion("dold-round-trip", 5, dold_round_trip);
    criterion("dold-congruence-equivalence", 10, dold_congruence_equivalence);
    criterion("index-pattern-catalog", 60, attractor_repeller_patterns);
    criterion("realization-roundtrip", 5, realization_roundtrip);
    criterion("anosov-unboundedness", 0, anosov_unboundedness);
    criterion("homology-engine", 5, homology_engine);
    criterion("spectral-certificates", 0, spectral_certificates);
    criterion("degree-robustness", 0, degree_robustness);
    criterion("inverse-antisymmetry", 0, inverse_antisymmetry);
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
