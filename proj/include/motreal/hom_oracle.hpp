#pragma once

#include "motreal/abelian_group.hpp"
#include "motreal/errors.hpp"

#include <cstdint>
#include <vector>

namespace motreal {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 16;

/// Elements of a small finite group as coordinate vectors in prod Z/d_i.
class ElementEnumerator {
public:
    explicit ElementEnumerator(const FinAbGroup& g) {
        for (const Int& d : g.invariant_factors()) moduli_.push_back(static_cast<std::uint64_t>(to_int64(d)));
    }

    const std::vector<std::uint64_t>& moduli() const { return moduli_; }

    std::uint64_t size() const {
        std::uint64_t n = 1;
        for (auto d : moduli_) n *= d;
        return n;
    }

    /// Calls f(element) for every element, in mixed-radix order starting at zero.
    template <class F>
    void for_each(F&& f) const {
        std::vector<std::uint64_t> x(moduli_.size(), 0);
        for (;;) {
            f(x);
            std::size_t i = 0;
            while (i < x.size() && ++x[i] == moduli_[i]) x[i++] = 0;
            if (i == x.size()) return;
        }
    }

    std::vector<std::uint64_t> scale(const std::vector<std::uint64_t>& x, std::uint64_t m) const {
        std::vector<std::uint64_t> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] * (m % moduli_[i])) % moduli_[i];
        return y;
    }

    /// m * x == 0, without materializing m * x.
    bool annihilates(const std::vector<std::uint64_t>& x, std::uint64_t m) const {
        for (std::size_t i = 0; i < x.size(); ++i)
            if ((x[i] * (m % moduli_[i])) % moduli_[i] != 0) return false;
        return true;
    }

    /// Mixed-radix index of m * x.
    std::uint64_t scaled_index(const std::vector<std::uint64_t>& x, std::uint64_t m) const {
        std::uint64_t idx = 0, stride = 1;
        for (std::size_t i = 0; i < x.size(); ++i) {
            idx += (x[i] * (m % moduli_[i])) % moduli_[i] * stride;
            stride *= moduli_[i];
        }
        return idx;
    }

    bool is_zero(const std::vector<std::uint64_t>& x) const {
        for (auto v : x)
            if (v) return false;
        return true;
    }

private:
    std::vector<std::uint64_t> moduli_;
};

/// Number of homomorphisms A -> B by enumeration.
///
/// A is presented by generators g_i with the single relation d_i g_i = 0, so a
/// homomorphism is a free choice, per generator, of some b in B with d_i b = 0.
/// The candidate images are enumerated over all of B for each generator.
/// Throws BoundExceeded when |A| * |B| exceeds the budget.
inline Int brute_force_hom_count(const FinAbGroup& a, const FinAbGroup& b,
                                 std::uint64_t budget = kDefaultEnumerationBudget) {
    if (a.order() * b.order() > budget)
        throw BoundExceeded("brute_force_hom_count: |A|*|B| = " + (a.order() * b.order()).str() +
                            " exceeds budget " + std::to_string(budget));
    const ElementEnumerator target(b);
    Int count = 1;
    for (const Int& d : a.invariant_factors()) {
        const auto relation = static_cast<std::uint64_t>(to_int64(d));
        std::uint64_t admissible = 0;
        target.for_each([&](const std::vector<std::uint64_t>& y) {
            if (target.annihilates(y, relation)) ++admissible;
        });
        count *= admissible;
    }
    return count;
}

/// Closed form prod_{i,j} gcd(d_i, e_j), the cross-check for the enumeration.
inline Int hom_count_closed_form(const FinAbGroup& a, const FinAbGroup& b) {
    Int count = 1;
    for (const Int& d : a.invariant_factors())
        for (const Int& e : b.invariant_factors()) count *= gcd(d, e);
    return count;
}

}  // namespace motreal
