// Exact arithmetic aliases and small helpers shared across the library.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpindex {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// gmpxx has no long long constructor; long is 64-bit on every platform
// this project targets.
static_assert(sizeof(long) >= 8, "64-bit long required");
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

// Serializes a rational as "p" when integral, "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline long long to_long_checked(const Int& v) {
    if (!v.fits_slong_p())
        throw std::overflow_error("exact integer exceeds machine range: " + v.get_str());
    return v.get_si();
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0)
        return 0;
    return a / gcd_ll(a, b) * b;
}

inline std::vector<long long> divisors_of(long long n) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it)
        small.push_back(*it);
    return small;
}

// Moebius function by trial factorization; inputs here are tiny.
inline int moebius(long long n) {
    if (n < 1)
        throw std::invalid_argument("moebius: n must be positive");
    int factors = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            ++factors;
        }
    }
    if (n > 1)
        ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

}  // namespace fpindex
