#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace motreal {

using Int = boost::multiprecision::cpp_int;

inline std::string to_string(const Int& v) { return v.str(); }

inline Int abs(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(abs(a), abs(b));
}

inline bool fits_int64(const Int& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const Int& v) {
    if (!fits_int64(v)) throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
    return static_cast<std::int64_t>(v);
}

/// Floor division and non-negative remainder (for b > 0).
inline std::pair<Int, Int> floor_divmod(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (r < 0) {
        r += b;
        q -= 1;
    }
    return {q, r};
}

/// Deterministic sieve of Eratosthenes; all primes <= limit in increasing order.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Largest e with p^e | n. Requires p prime and n != 0.
inline unsigned padic_valuation(std::uint64_t p, const Int& n) {
    if (p < 2) throw std::invalid_argument("padic_valuation: p must be prime");
    if (n == 0) throw std::invalid_argument("padic_valuation: n must be nonzero");
    Int m = abs(n);
    unsigned e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

inline unsigned padic_valuation(std::uint64_t p, std::uint64_t n) {
    if (p < 2) throw std::invalid_argument("padic_valuation: p must be prime");
    if (n == 0) throw std::invalid_argument("padic_valuation: n must be nonzero");
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

inline Int ipow(const Int& base, unsigned e) { return boost::multiprecision::pow(base, e); }

/// Prime factorization by trial division. Desk-scale inputs only.
inline std::map<std::uint64_t, unsigned> factorize(const Int& n) {
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    std::map<std::uint64_t, unsigned> out;
    Int m = abs(n);
    for (std::uint64_t d = 2; Int(d) * d <= m; d += (d == 2 ? 1 : 2)) {
        while (m % d == 0) {
            m /= d;
            ++out[d];
        }
    }
    if (m > 1) {
        if (m > Int(std::numeric_limits<std::uint64_t>::max()))
            throw std::overflow_error("factorize: prime factor exceeds 64 bits");
        ++out[static_cast<std::uint64_t>(m)];
    }
    return out;
}

/// Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0.
inline std::tuple<Int, Int, Int> extended_gcd(const Int& a, const Int& b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

/// Inverse of a modulo m (m >= 1, gcd(a, m) = 1), normalized into [0, m).
inline Int mod_inverse(const Int& a, const Int& m) {
    auto [g, x, y] = extended_gcd(a, m);
    (void)y;
    if (g != 1) throw std::invalid_argument("mod_inverse: arguments are not coprime");
    return floor_divmod(x, m).second;
}

}  // namespace motreal
