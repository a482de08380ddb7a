#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace motreal {

/// Provenance tag attached to every classification.
enum class Citation {
    None,
    Thm3_2,
    Cor3_3,
    Cor3_4,
    Rmk3_5,
    Rmk3_8,
    Prop4_1,
    Prop4_3,
    Fig1,
    Thm4_4,
    Thm4_5,
    RmkPost4_5,
};

inline std::string_view citation_name(Citation c) {
    switch (c) {
        case Citation::None: return "";
        case Citation::Thm3_2: return "Thm3.2";
        case Citation::Cor3_3: return "Cor3.3";
        case Citation::Cor3_4: return "Cor3.4";
        case Citation::Rmk3_5: return "Rmk3.5";
        case Citation::Rmk3_8: return "Rmk3.8";
        case Citation::Prop4_1: return "Prop4.1";
        case Citation::Prop4_3: return "Prop4.3";
        case Citation::Fig1: return "Fig1";
        case Citation::Thm4_4: return "Thm4.4";
        case Citation::Thm4_5: return "Thm4.5";
        case Citation::RmkPost4_5: return "Rmk-post-4.5";
    }
    return "";
}

/// Hypotheses whose failure leaves a bidegree uncovered.
enum class Hypothesis {
    SphereTooSmall,            // x >= 2 and y >= 2
    FreudenthalFails,          // d <= min{2x-2, x+y-2}
    StableComparisonUnknown,   // e - y <= d - x + 2
    WeightTooLarge,            // 2w <= s + 2
    RankTooLarge,              // r <= n - 2
    DimensionTooLarge,         // d <= 2n - 2r - 3
    WeightAboveSurjectiveBound,  // e <= d + 4 - r
    WeightAboveInjectiveBound,   // e <= d + 3
    TotalDegreeTooSmall,       // 2n <= e + d
    WeightBelowIsomorphismBound,  // n - 1 <= e (or min{n-1, 2n-d} <= e)
};

inline std::string_view hypothesis_name(Hypothesis h) {
    switch (h) {
        case Hypothesis::SphereTooSmall: return "SphereTooSmall";
        case Hypothesis::FreudenthalFails: return "FreudenthalFails";
        case Hypothesis::StableComparisonUnknown: return "StableComparisonUnknown";
        case Hypothesis::WeightTooLarge: return "WeightTooLarge";
        case Hypothesis::RankTooLarge: return "RankTooLarge";
        case Hypothesis::DimensionTooLarge: return "DimensionTooLarge";
        case Hypothesis::WeightAboveSurjectiveBound: return "WeightAboveSurjectiveBound";
        case Hypothesis::WeightAboveInjectiveBound: return "WeightAboveInjectiveBound";
        case Hypothesis::TotalDegreeTooSmall: return "TotalDegreeTooSmall";
        case Hypothesis::WeightBelowIsomorphismBound: return "WeightBelowIsomorphismBound";
    }
    return "";
}

/// Symbolic name for the kernel of a comparison map; no group is computed.
struct KernelLabel {
    enum class Kind { Zero, MotCoh, DivisibleUnidentified };
    Kind kind = Kind::Zero;
    /// H^degree(Spec k; Z(twist)) for Kind::MotCoh.
    std::int64_t degree = 0;
    std::int64_t twist = 0;
    /// For DivisibleUnidentified: known to be uniquely divisible.
    bool uniquely_divisible = false;

    static KernelLabel zero() { return {}; }
    static KernelLabel motivic_cohomology(std::int64_t degree, std::int64_t twist) {
        return {Kind::MotCoh, degree, twist, true};
    }
    static KernelLabel divisible(bool uniquely = false) { return {Kind::DivisibleUnidentified, 0, 0, uniquely}; }

    friend bool operator==(const KernelLabel&, const KernelLabel&) = default;

    std::string to_string() const {
        switch (kind) {
            case Kind::Zero: return "0";
            case Kind::MotCoh:
                return "H^" + std::to_string(degree) + "(Spec k; Z(" + std::to_string(twist) + "))";
            case Kind::DivisibleUnidentified:
                return uniquely_divisible ? "uniquely divisible (unidentified)" : "divisible (unidentified)";
        }
        return "";
    }
};

enum class VerdictKind {
    ZeroSource,
    Isomorphism,
    SplitSurjective,
    TargetZeroDivisibleKernel,
    Injective,
    ExcludedZeroStem,
    NotCovered,
};

inline std::string_view verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::ZeroSource: return "ZeroSource";
        case VerdictKind::Isomorphism: return "Isomorphism";
        case VerdictKind::SplitSurjective: return "SplitSurjective";
        case VerdictKind::TargetZeroDivisibleKernel: return "TargetZeroDivisibleKernel";
        case VerdictKind::Injective: return "Injective";
        case VerdictKind::ExcludedZeroStem: return "ExcludedZeroStem";
        case VerdictKind::NotCovered: return "NotCovered";
    }
    return "";
}

/// Classification of a realization/comparison map at one bidegree.
/// NotCovered verdicts carry the failed hypotheses (first one decisive) and no
/// citation; every other verdict carries exactly one citation.
struct Verdict {
    VerdictKind kind = VerdictKind::NotCovered;
    std::optional<KernelLabel> kernel;
    bool target_torsion = false;
    Citation citation = Citation::None;
    std::vector<Hypothesis> failed;

    static Verdict zero_source(Citation c) { return {VerdictKind::ZeroSource, KernelLabel::zero(), false, c, {}}; }
    static Verdict isomorphism(Citation c) { return {VerdictKind::Isomorphism, KernelLabel::zero(), false, c, {}}; }
    static Verdict split_surjective(KernelLabel k, bool target_torsion, Citation c) {
        return {VerdictKind::SplitSurjective, k, target_torsion, c, {}};
    }
    static Verdict target_zero(KernelLabel k, Citation c) {
        return {VerdictKind::TargetZeroDivisibleKernel, k, true, c, {}};
    }
    static Verdict injective(Citation c) { return {VerdictKind::Injective, std::nullopt, false, c, {}}; }
    static Verdict excluded_zero_stem(Citation c) { return {VerdictKind::ExcludedZeroStem, std::nullopt, false, c, {}}; }
    static Verdict not_covered(std::vector<Hypothesis> failed) {
        return {VerdictKind::NotCovered, std::nullopt, false, Citation::None, std::move(failed)};
    }

    /// Position in the refinement order NotCovered < surjective-type < Isomorphism.
    int strength() const {
        switch (kind) {
            case VerdictKind::NotCovered:
            case VerdictKind::ExcludedZeroStem: return 0;
            case VerdictKind::SplitSurjective:
            case VerdictKind::TargetZeroDivisibleKernel:
            case VerdictKind::Injective: return 1;
            case VerdictKind::Isomorphism:
            case VerdictKind::ZeroSource: return 2;
        }
        return 0;
    }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace motreal
