#include "fpindex/sequence_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fpindex {

PeriodicSequence::PeriodicSequence(long long period, std::vector<long long> values)
    : period_(period), values_(std::move(values)) {
    if (period_ < 1)
        throw std::invalid_argument("PeriodicSequence: period must be >= 1");
    if (static_cast<long long>(values_.size()) != period_)
        throw std::invalid_argument("PeriodicSequence: values size must equal period");
}

long long PeriodicSequence::value_at(long long n) const {
    if (n < 1)
        throw std::invalid_argument("PeriodicSequence: n must be >= 1");
    return values_[static_cast<size_t>((n - 1) % period_)];
}

DoldViolation::DoldViolation(DoldWitness w)
    : std::runtime_error("Dold congruence violation at k=" + std::to_string(w.k) +
                         " (a_k = " + rat_to_string(w.value) + ", " + w.reason + ")"),
      witness(std::move(w)) {}

namespace {

// a_k for a single k, straight from the inversion formula.
Rat inversion_coefficient(const PeriodicSequence& seq, long long k) {
    Int acc = 0;
    for (long long d : divisors_of(k))
        acc += Int(moebius(k / d)) * to_int(seq.value_at(d));
    Rat a(acc, to_int(k));
    a.canonicalize();
    return a;
}

}  // namespace

DoldDecomposition dold_coefficients(const PeriodicSequence& seq) {
    DoldDecomposition out;
    for (long long k = 1; k <= seq.period(); ++k) {
        Rat a = inversion_coefficient(seq, k);
        if (a != 0) {
            if (!is_integer(a))
                out.is_integral = false;
            out.coefficients.emplace(k, a);
        }
    }
    return out;
}

DoldCheck check_dold(const PeriodicSequence& seq) {
    const long long q = seq.period();
    DoldDecomposition decomp = dold_coefficients(seq);

    // Finite support forces support | q; a nonzero a_k with k not dividing q
    // means the formal expansion never terminates.
    std::optional<long long> support_violation;
    for (const auto& [k, a] : decomp.coefficients) {
        if (q % k != 0) {
            support_violation = k;
            break;
        }
    }
    bool integral_on_divisors = true;
    for (const auto& [k, a] : decomp.coefficients) {
        if (q % k == 0 && !is_integer(a)) {
            integral_on_divisors = false;
            break;
        }
    }

    if (integral_on_divisors && !support_violation)
        return DoldCheck{true, std::nullopt};

    // Certificate: the first non-integral coefficient, searching past the
    // period when the violation only shows up there.
    for (long long k = 1; k <= 4 * q; ++k) {
        Rat a = inversion_coefficient(seq, k);
        if (!is_integer(a))
            return DoldCheck{false, DoldWitness{k, a, "non-integral"}};
    }
    // Integrality held out to 4q; report the infinite-support witness.
    long long k = *support_violation;
    return DoldCheck{false, DoldWitness{k, decomp.coefficients.at(k), "support"}};
}

Rat evaluate(const DoldDecomposition& decomp, long long n) {
    if (n < 1)
        throw std::invalid_argument("evaluate: n must be >= 1");
    Rat acc = 0;
    for (const auto& [k, a] : decomp.coefficients)
        if (n % k == 0)
            acc += Rat(to_int(k)) * a;
    acc.canonicalize();
    return acc;
}

long long support_lcm(const DoldDecomposition& decomp) {
    long long l = 1;
    for (const auto& [k, a] : decomp.coefficients)
        l = lcm_ll(l, k);
    return l;
}

RootOfUnityForm roots_of_unity_form(const PeriodicSequence& seq) {
    DoldCheck check = check_dold(seq);
    if (!check.ok)
        throw DoldViolation(*check.witness);

    RootOfUnityForm form;
    for (const auto& [k, a] : dold_coefficients(seq).coefficients) {
        long long copies = to_long_checked(a.get_num());
        auto& side = copies > 0 ? form.mu_orders : form.lambda_orders;
        long long mult = copies > 0 ? copies : -copies;
        for (long long j = 0; j < k; ++j) {
            long long g = gcd_ll(j, k);  // gcd(0, k) = k, so j = 0 normalizes to order 1
            RootOfUnity root{k / g, j / g};
            for (long long c = 0; c < mult; ++c)
                side.push_back(root);
        }
    }
    std::sort(form.lambda_orders.begin(), form.lambda_orders.end());
    std::sort(form.mu_orders.begin(), form.mu_orders.end());
    return form;
}

namespace {

// Exact sum over a multiset of roots of unity raised to the n-th power.
// After powering, every root is rewritten as a primitive d-th root; a sum
// of primitive d-th roots is rational only when all phi(d) classes occur
// with one multiplicity m, in which case it equals m * mu(d).
long long sum_of_powers(const std::vector<RootOfUnity>& roots, long long n) {
    std::map<long long, std::map<long long, long long>> counts;  // d -> class -> count
    for (const RootOfUnity& r : roots) {
        long long g = gcd_ll(r.order, n);
        long long d = r.order / g;
        long long j = (r.exponent * ((n / g) % d)) % d;  // stays primitive mod d
        counts[d][j] += 1;
    }
    long long total = 0;
    for (const auto& [d, classes] : counts) {
        long long phi = 0;
        for (long long j = 0; j < d; ++j)
            if (gcd_ll(j, d) == 1)
                ++phi;
        long long mult = classes.begin()->second;
        long long seen = 0;
        for (const auto& [j, c] : classes) {
            if (c != mult)
                throw std::domain_error("root-of-unity multiset is not Galois-stable");
            ++seen;
        }
        if (seen != phi)
            throw std::domain_error("root-of-unity multiset is not Galois-stable");
        total += mult * moebius(d);
    }
    return total;
}

}  // namespace

long long evaluate_form(const RootOfUnityForm& form, long long n) {
    if (n < 1)
        throw std::invalid_argument("evaluate_form: n must be >= 1");
    return -sum_of_powers(form.lambda_orders, n) + sum_of_powers(form.mu_orders, n);
}

double growth_exponent(const std::vector<long long>& samples) {
    const long long n_max = static_cast<long long>(samples.size());
    if (n_max < 8)
        throw std::invalid_argument("growth_exponent: need at least 8 samples");
    double best = 0.0;
    for (long long n = (n_max + 1) / 2; n <= n_max; ++n) {
        long long v = samples[static_cast<size_t>(n - 1)];
        if (v == 0)
            continue;
        double term = std::log(std::abs(static_cast<double>(v))) / static_cast<double>(n);
        best = std::max(best, term);
    }
    return best;
}

}  // namespace fpindex
