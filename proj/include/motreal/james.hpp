#pragma once

#include "motreal/integer.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace motreal {

/// The James (Atiyah-Todd) number b_q with its prime factorization.
struct JamesFactorization {
    std::uint64_t q = 1;
    std::map<std::uint64_t, unsigned> exponents;  // positive entries only
    Int value = 1;
};

/// v_p(b_q) = max{ s + v_p(s) : 1 <= s <= floor((q-1)/(p-1)) } when q >= p, else 0.
inline unsigned james_valuation(std::uint64_t p, std::uint64_t q) {
    if (!is_prime(p)) throw std::invalid_argument("james_valuation: " + std::to_string(p) + " is not prime");
    if (q < 1) throw std::invalid_argument("james_valuation: q must be positive");
    if (q < p) return 0;
    const std::uint64_t upper = (q - 1) / (p - 1);
    unsigned best = 0;
    for (std::uint64_t s = 1; s <= upper; ++s) {
        const unsigned candidate = static_cast<unsigned>(s) + padic_valuation(p, s);
        if (candidate > best) best = candidate;
    }
    return best;
}

inline JamesFactorization james_number(std::uint64_t q) {
    if (q < 1) throw std::invalid_argument("james_number: q must be positive");
    JamesFactorization out;
    out.q = q;
    for (auto p : primes_up_to(q)) {
        const unsigned e = james_valuation(p, q);
        if (e == 0) continue;
        out.exponents.emplace(p, e);
        out.value *= ipow(Int(p), e);
    }
    return out;
}

struct JamesDivisibility {
    bool divides = false;
    JamesFactorization james;
    /// n / b_r when divides.
    std::optional<Int> quotient;
    /// Smallest prime with v_p(b_r) > v_p(n) when not divides.
    std::optional<std::uint64_t> failing_prime;
};

/// Whether b_r divides n, with a certificate either way.
inline JamesDivisibility james_divides(std::uint64_t r, const Int& n) {
    if (r < 1) throw std::invalid_argument("james_divides: r must be positive");
    if (n < 1) throw std::invalid_argument("james_divides: n must be positive");
    JamesDivisibility out;
    out.james = james_number(r);
    for (const auto& [p, e] : out.james.exponents) {
        if (padic_valuation(p, n) < e) {
            out.failing_prime = p;
            return out;
        }
    }
    out.divides = true;
    out.quotient = n / out.james.value;
    return out;
}

}  // namespace motreal
