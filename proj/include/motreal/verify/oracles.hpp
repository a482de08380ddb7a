#pragma once

// Enumeration oracles. Everything here works element-by-element on small
// groups or re-derives a value by an independent loop; nothing calls the
// closed-form routines it is used to check.

#include "motreal/abelian_group.hpp"
#include "motreal/hom_oracle.hpp"
#include "motreal/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace motreal::verify {

/// Every divisor chain d_1 | ... | d_k (d_i >= 2) with product n.
inline std::vector<std::vector<std::uint64_t>> invariant_factor_shapes(std::uint64_t n) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> chain;
    auto rec = [&](auto&& self, std::uint64_t remaining, std::uint64_t last) -> void {
        if (remaining == 1) {
            out.push_back(chain);
            return;
        }
        for (std::uint64_t d = 2; d <= remaining; ++d) {
            if (remaining % d != 0 || d % last != 0) continue;
            chain.push_back(d);
            self(self, remaining / d, d);
            chain.pop_back();
        }
    };
    rec(rec, n, 1);
    return out;
}

/// All finite abelian groups of order <= max_order, one per isomorphism class.
inline std::vector<FinAbGroup> all_groups_up_to(std::uint64_t max_order) {
    std::vector<FinAbGroup> out;
    for (std::uint64_t n = 1; n <= max_order; ++n)
        for (const auto& shape : invariant_factor_shapes(n)) out.emplace_back(std::vector<Int>(shape.begin(), shape.end()));
    return out;
}

/// Dense index of an element in mixed radix (first coordinate fastest).
inline std::uint64_t element_index(const std::vector<std::uint64_t>& moduli, const std::vector<std::uint64_t>& x) {
    std::uint64_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        idx += x[i] * stride;
        stride *= moduli[i];
    }
    return idx;
}

inline std::uint64_t count_m_torsion(const FinAbGroup& g, std::uint64_t m) {
    const ElementEnumerator en(g);
    std::uint64_t count = 0;
    en.for_each([&](const std::vector<std::uint64_t>& x) {
        if (en.annihilates(x, m)) ++count;
    });
    return count;
}

/// Indicator of the subgroup m * G.
inline std::vector<bool> multiples_indicator(const FinAbGroup& g, std::uint64_t m) {
    const ElementEnumerator en(g);
    std::vector<bool> hit(en.size(), false);
    en.for_each([&](const std::vector<std::uint64_t>& x) { hit[en.scaled_index(x, m)] = true; });
    return hit;
}

/// |G / mG| by enumerating the image of multiplication by m.
inline std::uint64_t count_mod_m(const FinAbGroup& g, std::uint64_t m) {
    const auto hit = multiples_indicator(g, m);
    const auto image = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), true));
    return hit.size() / image;
}

/// Additive order of an element, by repeated addition.
inline std::uint64_t element_order(const ElementEnumerator& en, const std::vector<std::uint64_t>& x) {
    std::vector<std::uint64_t> acc = x;
    std::uint64_t k = 1;
    while (!en.is_zero(acc)) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = (acc[i] + x[i]) % en.moduli()[i];
        ++k;
    }
    return k;
}

/// Isomorphism type of a subgroup of g, given by its indicator, from the
/// counts |S[p^k]| (a finite abelian group is determined by them).
inline FinAbGroup subgroup_type(const FinAbGroup& g, const std::vector<bool>& member) {
    const ElementEnumerator en(g);
    std::uint64_t size = 0;
    for (bool b : member) size += b ? 1 : 0;
    std::vector<Int> cyclic_orders;
    if (size <= 1) return FinAbGroup();
    // Prime factors of |S| by trial division.
    std::vector<std::uint64_t> primes;
    {
        std::uint64_t m = size;
        for (std::uint64_t p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                primes.push_back(p);
                while (m % p == 0) m /= p;
            }
        if (m > 1) primes.push_back(m);
    }
    for (auto p : primes) {
        // rank_k = number of cyclic summands of order >= p^k = log_p(|S[p^k]| / |S[p^(k-1)]|)
        std::vector<std::uint64_t> at_least;
        std::uint64_t prev = 1, pk = 1;
        for (;;) {
            pk *= p;
            std::uint64_t cnt = 0;
            en.for_each([&](const std::vector<std::uint64_t>& x) {
                if (member[element_index(en.moduli(), x)] && en.annihilates(x, pk)) ++cnt;
            });
            std::uint64_t ratio = cnt / prev, rank = 0;
            while (ratio > 1) {
                ratio /= p;
                ++rank;
            }
            if (rank == 0) break;
            at_least.push_back(rank);
            prev = cnt;
        }
        for (std::size_t k = 0; k < at_least.size(); ++k) {
            const std::uint64_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
            for (std::uint64_t c = 0; c < at_least[k] - next; ++c) cyclic_orders.push_back(ipow(Int(p), static_cast<unsigned>(k + 1)));
        }
    }
    return FinAbGroup::from_cyclic_orders(cyclic_orders);
}

/// Elements whose order is a product of primes in the set: those killed by
/// N = prod p^{v_p(|G|)} over members p dividing |G|.
inline std::vector<bool> prime_set_torsion_indicator(const FinAbGroup& g, const PrimeSet& primes) {
    const ElementEnumerator en(g);
    const auto order = static_cast<std::uint64_t>(to_int64(g.order()));
    std::uint64_t killer = 1, rest = order;
    for (std::uint64_t p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        std::uint64_t pk = 1;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
        }
        if (primes.contains(p)) killer *= pk;
    }
    std::vector<bool> member(en.size(), false);
    en.for_each([&](const std::vector<std::uint64_t>& x) { member[element_index(en.moduli(), x)] = en.annihilates(x, killer); });
    return member;
}

/// Elements a with a in nG for every product n of primes in the set. For a
/// finite group it suffices to intersect p^{v_p(|G|)} G over members p dividing |G|.
inline std::vector<bool> prime_set_divisible_indicator(const FinAbGroup& g, const PrimeSet& primes) {
    const ElementEnumerator en(g);
    std::vector<bool> member(en.size(), true);
    const auto order = static_cast<std::uint64_t>(to_int64(g.order()));
    for (std::uint64_t p = 2; p <= order; ++p) {
        if (order % p != 0 || !is_prime(p) || !primes.contains(p)) continue;
        std::uint64_t pk = 1, rest = order;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
        }
        const auto hit = multiples_indicator(g, pk);
        for (std::size_t i = 0; i < member.size(); ++i) member[i] = member[i] && hit[i];
    }
    return member;
}

/// v_p(b_q) by a fresh scan: s runs while s(p-1) <= q-1; v_p(s) by repeated division.
inline unsigned naive_james_valuation(std::uint64_t p, std::uint64_t q) {
    if (q < p) return 0;
    unsigned best = 0;
    for (std::uint64_t s = 1; s * (p - 1) <= q - 1; ++s) {
        std::uint64_t t = s;
        unsigned v = 0;
        while (t % p == 0) {
            t /= p;
            ++v;
        }
        best = std::max<unsigned>(best, static_cast<unsigned>(s) + v);
    }
    return best;
}

}  // namespace motreal::verify
