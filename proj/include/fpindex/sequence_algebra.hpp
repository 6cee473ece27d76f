// Exact algebra of periodic integer sequences: decomposition into the
// normalized sequences sigma^k (sigma^k_n = k when k | n, else 0), the
// divisibility congruences that characterize index sequences, the
// roots-of-unity canonical form, and a growth-rate diagnostic.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fpindex/exact.hpp"

namespace fpindex {

// A q-periodic integer sequence, stored as one period I_1..I_q and
// evaluated by value_at(n) = values[(n-1) mod q].
class PeriodicSequence {
  public:
    PeriodicSequence(long long period, std::vector<long long> values);

    long long period() const { return period_; }
    const std::vector<long long>& values() const { return values_; }
    long long value_at(long long n) const;

  private:
    long long period_;
    std::vector<long long> values_;
};

// Coefficients a_k of the formal expansion I = sum_k a_k sigma^k, obtained
// by Moebius inversion of I_n = sum_{k|n} k a_k. Exact rationals: a
// sequence violating the congruences yields non-integral entries instead
// of failing. Zero coefficients are omitted from the map.
struct DoldDecomposition {
    std::map<long long, Rat> coefficients;
    bool is_integral = true;
};

struct DoldWitness {
    long long k = 0;       // offending coefficient index
    Rat value;             // its exact value
    std::string reason;    // "non-integral" or "support" (a_k != 0 with k not dividing the period)
};

struct DoldCheck {
    bool ok = false;
    std::optional<DoldWitness> witness;
};

// Multiset of roots of unity in symbolic (order d, exponent class j) form,
// j/d in lowest terms, encoding lambda = e^{2 pi i j / d}. The sequence is
// recovered as I_n = -sum lambda_i^n + sum mu_j^n.
struct RootOfUnity {
    long long order = 1;     // d >= 1
    long long exponent = 0;  // 0 <= j < d, gcd(j, d) = 1 for d > 1

    auto operator<=>(const RootOfUnity&) const = default;
};

struct RootOfUnityForm {
    std::vector<RootOfUnity> lambda_orders;  // subtracted side, sorted
    std::vector<RootOfUnity> mu_orders;      // added side, sorted
};

// a_k = (1/k) sum_{d|k} mu(k/d) I_d for k = 1..period. Total on valid input.
DoldDecomposition dold_coefficients(const PeriodicSequence& seq);

// True iff the full (infinite) coefficient family is integral. For a
// q-periodic sequence this is decided finitely: a_k must vanish for every
// k <= q that does not divide q (else the formal expansion has infinite
// support) and be an integer for every k | q. The certificate carries the
// first offending coefficient.
DoldCheck check_dold(const PeriodicSequence& seq);

// sum_{k | n} k a_k as an exact rational.
Rat evaluate(const DoldDecomposition& decomp, long long n);

// Smallest period on which a decomposition's reconstruction is periodic:
// lcm of the support (1 for the empty decomposition).
long long support_lcm(const DoldDecomposition& decomp);

// Expands each a_k sigma^k into |a_k| copies of the full set of k-th roots
// of unity; positive coefficients land in mu, negative in lambda.
// Throws DoldViolation when check_dold fails.
RootOfUnityForm roots_of_unity_form(const PeriodicSequence& seq);

// Exact evaluation of -sum lambda^n + sum mu^n over the encoded roots.
// Throws std::domain_error if the multiset is not Galois-stable (cannot
// happen for forms produced by roots_of_unity_form).
long long evaluate_form(const RootOfUnityForm& form, long long n);

// max over the tail window n in [N/2, N] of log|I_n| / n (0 where I_n = 0);
// a lower-bound estimate of limsup log|I_n|/n. Requires N >= 8.
double growth_exponent(const std::vector<long long>& samples);

// Thrown when an operation requires a Dold-admissible sequence.
struct DoldViolation : std::runtime_error {
    explicit DoldViolation(DoldWitness w);
    DoldWitness witness;
};

}  // namespace fpindex
