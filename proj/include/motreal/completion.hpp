#pragma once

#include "motreal/abelian_group.hpp"
#include "motreal/errors.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace motreal {

/// Value of an Ext-completion Ext(Z/(I^inf), A) on the representable class:
/// a p-adic free module of rank `padic_rank` for every p in the prime set,
/// plus a finite p-primary part for finitely many p.
///
/// The p-adic factors are symbolic. With padic_rank 0 the value is the
/// finite group given by the direct sum of `finite_parts`.
struct ICompleteGroup {
    PrimeSet prime_set = PrimeSet::of({});
    std::uint64_t padic_rank = 0;
    std::map<std::uint64_t, FinAbGroup> finite_parts;

    bool is_finite() const {
        const bool no_primes = !prime_set.is_all() && prime_set.explicit_primes().empty();
        return padic_rank == 0 || no_primes;
    }

    /// Order of the finite value; meaningful only when is_finite().
    Int order() const {
        Int o = 1;
        for (const auto& [p, part] : finite_parts) o *= part.order();
        return o;
    }

    /// The finite value as one canonical group; meaningful only when is_finite().
    FinAbGroup finite_value() const {
        FinAbGroup acc;
        for (const auto& [p, part] : finite_parts) acc = direct_sum(acc, part);
        return acc;
    }

    friend bool operator==(const ICompleteGroup&, const ICompleteGroup&) = default;

    std::string to_string() const {
        std::string out;
        auto append = [&](const std::string& s) { out += (out.empty() ? "" : " + ") + s; };
        if (padic_rank > 0) {
            const std::string rank = padic_rank == 1 ? "" : "^" + std::to_string(padic_rank);
            if (prime_set.is_all()) {
                append("Zhat" + rank);
            } else {
                for (auto p : prime_set.explicit_primes()) append("Z_" + std::to_string(p) + rank);
            }
        }
        for (const auto& [p, part] : finite_parts) append(part.to_string());
        return out.empty() ? "0" : out;
    }
};

/// Ext(Z/(I^inf), A). Ext into Q vanishes; Ext(Z/(p^inf), Z) = Z_p is recorded
/// as rank; the torsion contributes its p-primary parts for p in I.
inline ICompleteGroup ext_completion(const AbGroupFQ& a, const PrimeSet& primes) {
    ICompleteGroup out;
    out.prime_set = primes;
    const bool no_primes = !primes.is_all() && primes.explicit_primes().empty();
    out.padic_rank = no_primes ? 0 : a.free_rank;
    for (auto p : primes.members_dividing(a.torsion.order())) out.finite_parts.emplace(p, primary_part(a.torsion, p));
    return out;
}

/// The split short exact sequence 0 -> K -> A -> completion -> 0 with
/// K the I-divisible elements and the section landing on the I-torsion.
struct CompletionDecomposition {
    AbGroupFQ kernel;
    FinAbGroup completion;
    FinAbGroup section_image;
};

/// Requires free_rank(A) = 0: otherwise the completion carries p-adic
/// summands and is not of I-bounded torsion. Hom(Z/(I^inf), A) vanishes on
/// the whole representable class, so that hypothesis never fails here.
inline CompletionDecomposition completion_decomposition(const AbGroupFQ& a, const PrimeSet& primes) {
    if (a.free_rank > 0)
        throw HypothesisViolated("completion_decomposition: completion is not of I-bounded torsion (free rank " +
                                 std::to_string(a.free_rank) + " > 0)");
    CompletionDecomposition out;
    out.completion = ext_completion(a, primes).finite_value();
    out.kernel = {a.q_rank, 0, prime_set_coprimary(a.torsion, primes)};
    out.section_image = prime_set_torsion(a.torsion, primes);
    return out;
}

}  // namespace motreal
