#pragma once

#include "motreal/int_matrix.hpp"
#include "motreal/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace motreal {

/// Finite abelian group in invariant-factor form Z/d_1 + ... + Z/d_k,
/// d_i >= 2 and d_i | d_{i+1}. The empty sequence is the trivial group.
/// Equality of groups is equality of this canonical form.
class FinAbGroup {
public:
    FinAbGroup() = default;

    explicit FinAbGroup(std::vector<Int> invariant_factors) : factors_(std::move(invariant_factors)) {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i] < 2) throw std::invalid_argument("FinAbGroup: invariant factors must be >= 2");
            if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
                throw std::invalid_argument("FinAbGroup: invariant factors must form a divisibility chain");
        }
    }

    /// Canonical form of Z/n_1 + ... + Z/n_k for arbitrary positive n_i
    /// (orders equal to 1 are dropped). Goes through the primary decomposition.
    static FinAbGroup from_cyclic_orders(const std::vector<Int>& orders) {
        std::map<std::uint64_t, std::vector<unsigned>> exponents;
        for (const Int& n : orders) {
            if (n < 1) throw std::invalid_argument("FinAbGroup: cyclic orders must be positive");
            for (auto [p, e] : factorize(n)) exponents[p].push_back(e);
        }
        std::size_t length = 0;
        for (auto& [p, es] : exponents) {
            std::sort(es.begin(), es.end(), std::greater<>());
            length = std::max(length, es.size());
        }
        // Largest invariant factor collects the largest power of every prime, and so on.
        std::vector<Int> factors(length, Int(1));
        for (const auto& [p, es] : exponents)
            for (std::size_t i = 0; i < es.size(); ++i) factors[length - 1 - i] *= ipow(Int(p), es[i]);
        return FinAbGroup(std::move(factors));
    }

    static FinAbGroup cyclic(const Int& n) { return from_cyclic_orders({n}); }

    const std::vector<Int>& invariant_factors() const { return factors_; }
    bool is_trivial() const { return factors_.empty(); }

    Int order() const {
        Int o = 1;
        for (const Int& d : factors_) o *= d;
        return o;
    }

    /// Smallest positive e with e * G = 0.
    Int exponent() const { return factors_.empty() ? Int(1) : factors_.back(); }

    friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

    friend FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
        std::vector<Int> all = a.factors_;
        all.insert(all.end(), b.factors_.begin(), b.factors_.end());
        return from_cyclic_orders(all);
    }

    std::string to_string() const {
        if (factors_.empty()) return "0";
        std::ostringstream os;
        for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? " + " : "") << "Z/" << factors_[i];
        return os.str();
    }

private:
    std::vector<Int> factors_;
};

/// Q^q_rank + Z^free_rank + (finite torsion), the representable class of groups.
struct AbGroupFQ {
    std::uint64_t q_rank = 0;
    std::uint64_t free_rank = 0;
    FinAbGroup torsion;

    static AbGroupFQ finite(FinAbGroup g) { return {0, 0, std::move(g)}; }

    bool is_uniquely_divisible() const { return free_rank == 0 && torsion.is_trivial(); }
    bool is_trivial() const { return q_rank == 0 && free_rank == 0 && torsion.is_trivial(); }
    bool is_finite() const { return q_rank == 0 && free_rank == 0; }

    /// The maximal divisible subgroup, Q^q_rank.
    AbGroupFQ maximal_divisible_subgroup() const { return {q_rank, 0, {}}; }

    friend bool operator==(const AbGroupFQ&, const AbGroupFQ&) = default;

    friend AbGroupFQ direct_sum(const AbGroupFQ& a, const AbGroupFQ& b) {
        return {a.q_rank + b.q_rank, a.free_rank + b.free_rank, direct_sum(a.torsion, b.torsion)};
    }

    std::string to_string() const {
        std::vector<std::string> parts;
        if (q_rank) parts.push_back(q_rank == 1 ? "Q" : "Q^" + std::to_string(q_rank));
        if (free_rank) parts.push_back(free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank));
        if (!torsion.is_trivial()) parts.push_back(torsion.to_string());
        if (parts.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
        return out;
    }
};

inline std::ostream& operator<<(std::ostream& os, const FinAbGroup& g) { return os << g.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const AbGroupFQ& g) { return os << g.to_string(); }

/// A set of primes: either every prime, or an explicit finite set.
/// The complement of an explicit set is never materialized.
class PrimeSet {
public:
    static PrimeSet all() { return PrimeSet(true, {}); }

    static PrimeSet of(std::vector<std::uint64_t> primes) {
        std::sort(primes.begin(), primes.end());
        if (std::adjacent_find(primes.begin(), primes.end()) != primes.end())
            throw std::invalid_argument("PrimeSet: duplicate prime");
        for (auto p : primes)
            if (!is_prime(p)) throw std::invalid_argument("PrimeSet: " + std::to_string(p) + " is not prime");
        return PrimeSet(false, std::move(primes));
    }

    bool is_all() const { return all_; }
    /// Sorted explicit members; empty for the all-primes set.
    const std::vector<std::uint64_t>& explicit_primes() const { return primes_; }

    bool contains(std::uint64_t p) const {
        return all_ || std::binary_search(primes_.begin(), primes_.end(), p);
    }

    /// n >= 1 is a product of primes in this set. (1 qualifies for every set.)
    bool is_product_of_members(const Int& n) const {
        if (n < 1) throw std::invalid_argument("PrimeSet: expected a positive integer");
        if (all_) return true;
        Int m = n;
        for (auto p : primes_)
            while (m % p == 0) m /= p;
        return m == 1;
    }

    /// Members that divide n (n >= 1), in increasing order.
    std::vector<std::uint64_t> members_dividing(const Int& n) const {
        std::vector<std::uint64_t> out;
        if (all_) {
            for (auto [p, e] : factorize(n)) out.push_back(p);
        } else {
            for (auto p : primes_)
                if (n % p == 0) out.push_back(p);
        }
        return out;
    }

    friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

    std::string to_string() const {
        if (all_) return "all";
        std::string out = "{";
        for (std::size_t i = 0; i < primes_.size(); ++i) out += (i ? "," : "") + std::to_string(primes_[i]);
        return out + "}";
    }

private:
    PrimeSet(bool all, std::vector<std::uint64_t> primes) : all_(all), primes_(std::move(primes)) {}
    bool all_;
    std::vector<std::uint64_t> primes_;
};

/// Cokernel Z^rows / image(M) of an integer matrix, columns being relations.
inline AbGroupFQ group_from_presentation(const IntMatrix& relations) {
    const auto snf = smith_normal_form(relations);
    std::vector<Int> factors;
    std::uint64_t rank = 0;
    for (const Int& d : snf.diagonal.diagonal_entries()) {
        if (d == 0) continue;
        ++rank;
        if (d > 1) factors.push_back(d);
    }
    return {0, relations.rows() - rank, FinAbGroup(std::move(factors))};
}

/// A[m] = Hom(Z/m, A).
inline AbGroupFQ m_torsion(const AbGroupFQ& a, const Int& m) {
    if (m < 1) throw std::invalid_argument("m_torsion: m must be positive");
    std::vector<Int> orders;
    for (const Int& d : a.torsion.invariant_factors()) orders.push_back(gcd(d, m));
    return AbGroupFQ::finite(FinAbGroup::from_cyclic_orders(orders));
}

/// A / mA = Ext(Z/m, A). The Q summands are m-divisible and vanish.
inline AbGroupFQ mod_m(const AbGroupFQ& a, const Int& m) {
    if (m < 1) throw std::invalid_argument("mod_m: m must be positive");
    std::vector<Int> orders(a.free_rank, m);
    for (const Int& d : a.torsion.invariant_factors()) orders.push_back(gcd(d, m));
    return AbGroupFQ::finite(FinAbGroup::from_cyclic_orders(orders));
}

inline FinAbGroup primary_part(const FinAbGroup& g, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("primary_part: " + std::to_string(p) + " is not prime");
    std::vector<Int> factors;
    for (const Int& d : g.invariant_factors()) {
        const unsigned e = padic_valuation(p, d);
        if (e > 0) factors.push_back(ipow(Int(p), e));
    }
    return FinAbGroup(std::move(factors));
}

/// p-primary component of the torsion subgroup.
inline FinAbGroup primary_part(const AbGroupFQ& a, std::uint64_t p) { return primary_part(a.torsion, p); }

/// Largest divisor of n that is a product of primes in `primes`.
inline Int prime_set_part(const Int& n, const PrimeSet& primes) {
    Int part = 1;
    for (auto p : primes.members_dividing(n))
        part *= ipow(Int(p), padic_valuation(p, n));
    return part;
}

/// The I-torsion subgroup of the torsion part: elements whose order is a product of primes in I.
inline FinAbGroup prime_set_torsion(const FinAbGroup& g, const PrimeSet& primes) {
    std::vector<Int> orders;
    for (const Int& d : g.invariant_factors()) orders.push_back(prime_set_part(d, primes));
    return FinAbGroup::from_cyclic_orders(orders);
}

/// Torsion elements of order prime to every member of I.
inline FinAbGroup prime_set_coprimary(const FinAbGroup& g, const PrimeSet& primes) {
    std::vector<Int> orders;
    for (const Int& d : g.invariant_factors()) orders.push_back(d / prime_set_part(d, primes));
    return FinAbGroup::from_cyclic_orders(orders);
}

struct DivisibilityPredicates {
    bool is_divisible = false;
    bool is_uniquely_divisible = false;
    bool is_torsion_free = false;
    bool is_bounded_torsion = false;

    friend bool operator==(const DivisibilityPredicates&, const DivisibilityPredicates&) = default;
};

/// I-divisibility, unique I-divisibility, I-torsion-freeness and I-bounded torsion.
///
/// Multiplication by a prime p is onto Q, never onto a nonzero Z, and onto Z/d
/// exactly when p does not divide d. The empty prime set makes every group
/// uniquely divisible (the only product of no primes is 1).
inline DivisibilityPredicates divisibility_predicates(const AbGroupFQ& a, const PrimeSet& primes) {
    const bool empty_set = !primes.is_all() && primes.explicit_primes().empty();
    bool torsion_free = true;
    for (const Int& d : a.torsion.invariant_factors())
        if (!primes.members_dividing(d).empty()) torsion_free = false;

    DivisibilityPredicates out;
    out.is_torsion_free = torsion_free;
    out.is_divisible = empty_set || (a.free_rank == 0 && torsion_free);
    out.is_uniquely_divisible = out.is_divisible && torsion_free;
    out.is_bounded_torsion = a.is_finite() && primes.is_product_of_members(a.torsion.exponent());
    return out;
}

}  // namespace motreal
