#pragma once

#include "motreal/abelian_group.hpp"
#include "motreal/errors.hpp"
#include "motreal/integer.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace motreal {

/// Element of Q/Z as the reduced fraction a/b with 0 <= a < b.
class RationalMod1 {
public:
    RationalMod1() = default;
    RationalMod1(const Int& numerator, const Int& denominator) {
        if (denominator == 0) throw std::invalid_argument("RationalMod1: zero denominator");
        if (fits_int64(numerator) && fits_int64(denominator) && denominator > 0) {
            set_small(static_cast<std::int64_t>(numerator), static_cast<std::int64_t>(denominator));
            return;
        }
        Int a = numerator, b = denominator;
        if (b < 0) {
            a = -a;
            b = -b;
        }
        a = floor_divmod(a, b).second;
        const Int g = gcd(a, b);  // gcd(0, b) = b gives 0/1
        num_ = a / g;
        den_ = b / g;
    }

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    friend RationalMod1 operator+(const RationalMod1& x, const RationalMod1& y) {
        if (fits_int64(x.den_) && fits_int64(y.den_)) {
            const auto xn = static_cast<__int128>(static_cast<std::int64_t>(x.num_));
            const auto xd = static_cast<__int128>(static_cast<std::int64_t>(x.den_));
            const auto yn = static_cast<__int128>(static_cast<std::int64_t>(y.num_));
            const auto yd = static_cast<__int128>(static_cast<std::int64_t>(y.den_));
            const __int128 limit = std::numeric_limits<std::int64_t>::max();
            const __int128 den = xd * yd;
            if (den <= limit) {
                RationalMod1 out;
                // 0 <= num < 2 * den, so one subtraction reduces it.
                __int128 num = xn * yd + yn * xd;
                if (num >= den) num -= den;
                out.set_small(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
                return out;
            }
        }
        return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
    }

    friend bool operator==(const RationalMod1&, const RationalMod1&) = default;

    std::string to_string() const { return num_.str() + "/" + den_.str(); }

private:
    void set_small(std::int64_t a, std::int64_t b) {
        a %= b;
        if (a < 0) a += b;
        const std::int64_t g = std::gcd(a, b);
        num_ = a / g;
        den_ = b / g;
    }

    Int num_ = 0;
    Int den_ = 1;
};

/// Per-prime idempotent data for a fixed denominator b = prod p^{s_p}:
/// x = a/b splits as sum_p (a * inv_p mod p^{s_p}) / p^{s_p},
/// where inv_p is the inverse of b / p^{s_p} modulo p^{s_p}.
class PartialFractionBasis {
public:
    struct Component {
        std::uint64_t prime;
        Int prime_power;  // p^{s_p}
        Int cofactor_inverse;
        // Copies of the two above when p^{s_p} < 2^63, else 0.
        std::uint64_t small_power = 0;
        std::uint64_t small_inverse = 0;
    };

    PartialFractionBasis(const Int& denominator, const PrimeSet& primes) : denominator_(denominator) {
        if (denominator < 1) throw std::invalid_argument("PartialFractionBasis: denominator must be positive");
        for (auto [p, s] : factorize(denominator)) {
            if (!primes.contains(p))
                throw PrimeOutsideSet("partial fraction: denominator prime " + std::to_string(p) + " is not in " +
                                      primes.to_string());
            Component c{p, ipow(Int(p), s), 0};
            c.cofactor_inverse = mod_inverse(denominator / c.prime_power, c.prime_power);
            if (fits_int64(c.prime_power)) {
                c.small_power = static_cast<std::uint64_t>(c.prime_power);
                c.small_inverse = static_cast<std::uint64_t>(c.cofactor_inverse);
            }
            components_.push_back(std::move(c));
        }
    }

    const Int& denominator() const { return denominator_; }
    const std::vector<Component>& components() const { return components_; }

    /// Decompose numerator/denominator; numerator must be coprime to the denominator
    /// for the result to be in lowest terms (callers pass reduced fractions).
    std::map<std::uint64_t, RationalMod1> decompose(const Int& numerator) const {
        std::map<std::uint64_t, RationalMod1> out;
        for (const auto& c : components_) {
            if (c.small_power != 0) {
                std::uint64_t residue;
                if (fits_int64(numerator)) {
                    const auto pp = static_cast<std::int64_t>(c.small_power);
                    const auto r = static_cast<std::int64_t>(numerator) % pp;
                    residue = static_cast<std::uint64_t>(r < 0 ? r + pp : r);
                } else {
                    residue = static_cast<std::uint64_t>(floor_divmod(numerator, c.prime_power).second);
                }
                const auto a_p = static_cast<std::uint64_t>(static_cast<unsigned __int128>(residue) * c.small_inverse %
                                                            c.small_power);
                if (a_p != 0) out.emplace(c.prime, RationalMod1(Int(a_p), c.prime_power));
                continue;
            }
            const Int a_p = floor_divmod(numerator * c.cofactor_inverse, c.prime_power).second;
            if (a_p != 0) out.emplace(c.prime, RationalMod1(a_p, c.prime_power));
        }
        return out;
    }

private:
    Int denominator_;
    std::vector<Component> components_;
};

/// The unique p -> a_p / p^{s_p} (0 <= a_p < p^{s_p}, zero terms omitted)
/// summing to x in Q/Z. Throws PrimeOutsideSet when a denominator prime is not in I.
inline std::map<std::uint64_t, RationalMod1> partial_fraction_decompose(const RationalMod1& x,
                                                                          const PrimeSet& primes) {
    return PartialFractionBasis(x.denominator(), primes).decompose(x.numerator());
}

inline RationalMod1 sum_mod1(const std::map<std::uint64_t, RationalMod1>& parts) {
    RationalMod1 acc;
    for (const auto& [p, term] : parts) acc = acc + term;
    return acc;
}

}  // namespace motreal
