#pragma once

#include "motreal/errors.hpp"
#include "motreal/verdict.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace motreal {

/// Bigrading conventions: stem-weight (s, w) and coweight-weight c + w*alpha,
/// the latter read as (c + w, w).
enum class Convention { StemWeight, CoweightWeight };

struct Bidegree {
    Convention convention = Convention::StemWeight;
    std::int64_t first = 0;   // s or c
    std::int64_t second = 0;  // w

    static Bidegree stem_weight(std::int64_t s, std::int64_t w) { return {Convention::StemWeight, s, w}; }
    static Bidegree coweight_weight(std::int64_t c, std::int64_t w) { return {Convention::CoweightWeight, c, w}; }

    std::int64_t stem() const { return convention == Convention::StemWeight ? first : first + second; }
    std::int64_t coweight() const { return convention == Convention::CoweightWeight ? first : first - second; }
    std::int64_t weight() const { return second; }

    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

inline Bidegree convert(const Bidegree& b, Convention target) {
    if (b.convention == target) return b;
    return target == Convention::StemWeight ? Bidegree::stem_weight(b.stem(), b.weight())
                                            : Bidegree::coweight_weight(b.coweight(), b.weight());
}

/// Assumptions about the ground field beyond what is proved.
struct Assumptions {
    /// Beilinson-Soule vanishing for k (known over number fields, hence for Qbar).
    bool beilinson_soule = false;
};

/// Outcome of a range test; `failed` names the first violated hypothesis.
struct RangeCheck {
    bool holds = false;
    std::optional<Hypothesis> failed;
    explicit operator bool() const { return holds; }
};

/// Motivic Freudenthal range for S^{a,b} -> Q S^{a,b} on pi_{a+s, b+w}:
/// b >= 2, a - b >= 2 and s - w <= min{a-b-2, b-2}.
inline RangeCheck freudenthal_stable(std::int64_t a, std::int64_t b, std::int64_t s, std::int64_t w) {
    if (b < 2 || a - b < 2) return {false, Hypothesis::SphereTooSmall};
    if (s - w > std::min(a - b - 2, b - 2)) return {false, Hypothesis::FreudenthalFails};
    return {true, std::nullopt};
}

/// Same range for S^{x + y alpha} at coweight offset c: x, y >= 2, c <= min{x-2, y-2}.
inline RangeCheck freudenthal_stable_coweight(std::int64_t x, std::int64_t y, std::int64_t c) {
    if (x < 2 || y < 2) return {false, Hypothesis::SphereTooSmall};
    if (c > std::min(x - 2, y - 2)) return {false, Hypothesis::FreudenthalFails};
    return {true, std::nullopt};
}

/// Complex realization pi_{s,w}(1) -> pi_s(S) of the motivic sphere spectrum.
///
/// Ordered decision tree:
///  s = 0 -> excluded; 2w > s + 2 -> not covered;
///  w >= -1, s != -1 -> iso (kernel H^{-s}(Z(-w)) vanishes);
///  s = -1, w >= 0 -> iso (source vanishes);
///  s = -1 otherwise -> split onto 0, divisible kernel not identified;
///  Beilinson-Soule and s >= 1 -> iso;
///  else split surjective with kernel H^{-s}(Spec k; Z(-w)).
inline Verdict classify_stable_realization(std::int64_t s, std::int64_t w, Assumptions asm_ = {}) {
    if (s == 0) return Verdict::excluded_zero_stem(Citation::Thm3_2);
    if (2 * w > s + 2) return Verdict::not_covered({Hypothesis::WeightTooLarge});
    if (w >= -1 && s != -1) return Verdict::isomorphism(Citation::Rmk3_5);
    if (s == -1 && w >= 0) return Verdict::isomorphism(Citation::Cor3_3);
    if (s == -1) return Verdict::split_surjective(KernelLabel::divisible(), true, Citation::Cor3_4);
    if (asm_.beilinson_soule && s >= 1) return Verdict::isomorphism(Citation::Rmk3_5);
    return Verdict::split_surjective(KernelLabel::motivic_cohomology(-s, -w), true, Citation::Cor3_4);
}

/// Complex realization pi_{d + e alpha}(S^{x + y alpha}) -> pi_{d+e}(S^{x+y}).
///
/// Ordered decision tree (first match wins):
///  (i)    x < 2 or y < 2                 -> not covered
///  (ii)   d < x                          -> zero source
///  (iii)  d > min{2x-2, x+y-2}            -> not covered (Freudenthal)
///  (iv)   e - y > d - x + 2               -> not covered (stable comparison)
///  (v)    d + e = x + y                   -> 0-stem, excluded
///  (vi)   d + e = x + y - 1               -> target 0, divisible kernel not identified
///  (vii)  e >= y - 1                      -> iso
///  (viii) Beilinson-Soule, d + e > x + y  -> iso
///  (ix)   d + e < x + y - 1               -> target 0, kernel H^{x+y-d-e}(Z(y-e))
///  (x)    otherwise                       -> split surjective, same kernel label
///
/// The -1-stem test precedes the weight test: at (d, e) = (x, y-1) the stable
/// bidegree is (-1, -1), where the source is K^MW_1(k) and the target is 0.
inline Verdict classify_sphere_unstable(std::int64_t x, std::int64_t y, std::int64_t d, std::int64_t e,
                                        Assumptions asm_ = {}) {
    if (x < 2 || y < 2) return Verdict::not_covered({Hypothesis::SphereTooSmall});
    if (d < x) return Verdict::zero_source(Citation::Fig1);
    if (d > std::min(2 * x - 2, x + y - 2)) return Verdict::not_covered({Hypothesis::FreudenthalFails});
    if (e - y > d - x + 2) return Verdict::not_covered({Hypothesis::StableComparisonUnknown});
    const std::int64_t total = d + e, sphere = x + y;
    if (total == sphere) return Verdict::excluded_zero_stem(Citation::Prop4_3);
    if (total == sphere - 1) return Verdict::target_zero(KernelLabel::divisible(), Citation::Fig1);
    if (e >= y - 1) return Verdict::isomorphism(Citation::Prop4_3);
    if (asm_.beilinson_soule && total > sphere) return Verdict::isomorphism(Citation::Prop4_3);
    const auto kernel = KernelLabel::motivic_cohomology(sphere - total, y - e);
    if (total < sphere - 1) return Verdict::target_zero(kernel, Citation::Fig1);
    return Verdict::split_surjective(kernel, true, Citation::Prop4_3);
}

namespace detail {

inline void require_stiefel_parameters(std::int64_t n, std::int64_t r) {
    if (n < 1 || r < 1)
        throw InvalidParameters("Stiefel classification requires n >= 1 and r >= 1 (got n=" + std::to_string(n) +
                                ", r=" + std::to_string(r) + ")");
}

/// Failed members of the common hypotheses r <= n-2, d <= 2n-2r-3, e <= bound, 2n <= e+d.
inline std::vector<Hypothesis> stiefel_failures(std::int64_t n, std::int64_t r, std::int64_t d, std::int64_t e,
                                                std::int64_t weight_bound, Hypothesis weight_hypothesis) {
    std::vector<Hypothesis> failed;
    if (r > n - 2) failed.push_back(Hypothesis::RankTooLarge);
    if (d > 2 * n - 2 * r - 3) failed.push_back(Hypothesis::DimensionTooLarge);
    if (e > weight_bound) failed.push_back(weight_hypothesis);
    if (2 * n > e + d) failed.push_back(Hypothesis::TotalDegreeTooSmall);
    return failed;
}

}  // namespace detail

/// Realization pi_{d + e alpha}(V_r(A^n)) -> pi_{d+e}(W_r(C^n)), surjectivity form.
///
/// Under r <= n-2, d <= 2n-2r-3, e <= d+4-r, 2n <= e+d the map is split
/// surjective onto a torsion group with uniquely divisible kernel; it is an
/// isomorphism when n-1 <= e, relaxed to min{n-1, 2n-d} <= e under
/// Beilinson-Soule.
inline Verdict classify_stiefel_surjective(std::int64_t n, std::int64_t r, std::int64_t d, std::int64_t e,
                                           Assumptions asm_ = {}) {
    detail::require_stiefel_parameters(n, r);
    auto failed = detail::stiefel_failures(n, r, d, e, d + 4 - r, Hypothesis::WeightAboveSurjectiveBound);
    if (!failed.empty()) return Verdict::not_covered(std::move(failed));
    if (n - 1 <= e) return Verdict::isomorphism(Citation::Thm4_4);
    if (asm_.beilinson_soule && std::min(n - 1, 2 * n - d) <= e) return Verdict::isomorphism(Citation::RmkPost4_5);
    return Verdict::split_surjective(KernelLabel::divisible(true), true, Citation::Thm4_4);
}

/// Realization pi_{d + e alpha}(V_r(A^n)) -> pi_{d+e}(W_r(C^n)), injectivity form:
/// r <= n-2, d <= 2n-2r-3, e <= d+3, 2n <= e+d and n-1 <= e
/// (the last relaxed to min{n-1, 2n-d} <= e under Beilinson-Soule).
inline Verdict classify_stiefel_injective(std::int64_t n, std::int64_t r, std::int64_t d, std::int64_t e,
                                          Assumptions asm_ = {}) {
    detail::require_stiefel_parameters(n, r);
    auto failed = detail::stiefel_failures(n, r, d, e, d + 3, Hypothesis::WeightAboveInjectiveBound);
    const bool plain_bound = n - 1 <= e;
    const bool relaxed_bound = asm_.beilinson_soule && std::min(n - 1, 2 * n - d) <= e;
    if (!plain_bound && !relaxed_bound) failed.push_back(Hypothesis::WeightBelowIsomorphismBound);
    if (!failed.empty()) return Verdict::not_covered(std::move(failed));
    return Verdict::injective(plain_bound ? Citation::Thm4_5 : Citation::RmkPost4_5);
}

}  // namespace motreal
