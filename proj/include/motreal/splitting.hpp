#pragma once

#include "motreal/errors.hpp"
#include "motreal/james.hpp"
#include "motreal/range_classifier.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace motreal {

/// Hypothesis under which every section decision is stated.
inline constexpr std::string_view kSplittingHypothesis = "ring contains algebraic closure of Q";

enum class SectionVerdict { Yes, No, TriviallyYes, OutOfTheoremRange };

inline std::string_view section_verdict_name(SectionVerdict v) {
    switch (v) {
        case SectionVerdict::Yes: return "Yes";
        case SectionVerdict::No: return "No";
        case SectionVerdict::TriviallyYes: return "TriviallyYes";
        case SectionVerdict::OutOfTheoremRange: return "OutOfTheoremRange";
    }
    return "";
}

enum class SectionCitation { None, Thm5_1, Cor5_2, RaynaudObstruction };

inline std::string_view section_citation_name(SectionCitation c) {
    switch (c) {
        case SectionCitation::None: return "";
        case SectionCitation::Thm5_1: return "Thm5.1";
        case SectionCitation::Cor5_2: return "Cor5.2";
        case SectionCitation::RaynaudObstruction: return "Raynaud-obstruction";
    }
    return "";
}

/// Whether V_r(A^n) -> V_1(A^n) has a right inverse over Qbar; equivalently
/// whether a stably free P with P + R = R^n has a free summand of rank r-1.
struct SectionDecision {
    std::int64_t n = 1;
    std::int64_t r = 1;
    SectionVerdict verdict = SectionVerdict::TriviallyYes;
    JamesFactorization james;
    std::optional<Int> quotient;                 // n / b_r on Yes
    std::optional<std::uint64_t> failing_prime;  // v_p(b_r) > v_p(n) on No
    SectionCitation citation = SectionCitation::None;

    bool has_section() const { return verdict == SectionVerdict::Yes || verdict == SectionVerdict::TriviallyYes; }
};

/// r = 1: the projection is the identity. r > n-2: outside the theorem.
/// Otherwise a section exists iff b_r | n.
inline SectionDecision decide_section(std::int64_t n, std::int64_t r) {
    if (n < 1 || r < 1)
        throw InvalidParameters("decide_section requires n >= 1 and r >= 1 (got n=" + std::to_string(n) +
                                ", r=" + std::to_string(r) + ")");
    SectionDecision out;
    out.n = n;
    out.r = r;
    out.james = james_number(static_cast<std::uint64_t>(r));
    if (r == 1) {
        out.verdict = SectionVerdict::TriviallyYes;
        out.quotient = Int(n);
        return out;
    }
    if (r > n - 2) {
        out.verdict = SectionVerdict::OutOfTheoremRange;
        return out;
    }
    auto div = james_divides(static_cast<std::uint64_t>(r), Int(n));
    out.quotient = div.quotient;
    out.failing_prime = div.failing_prime;
    out.verdict = div.divides ? SectionVerdict::Yes : SectionVerdict::No;
    out.citation = div.divides ? SectionCitation::Thm5_1 : SectionCitation::RaynaudObstruction;
    return out;
}

/// Free summand of rank t in P (P + R = R^n) corresponds to a section for r = t + 1.
inline SectionDecision free_summand_decision(std::int64_t n, std::int64_t t) {
    if (t < 0) throw InvalidParameters("free_summand_decision requires t >= 0");
    auto out = decide_section(n, t + 1);
    if (out.verdict == SectionVerdict::Yes) out.citation = SectionCitation::Cor5_2;
    return out;
}

/// Largest t with a guaranteed free summand of rank t, scanning r = t + 1 up to
/// max(1, n-2). b_r | b_{r+1}, so the scan stops at the first failure.
inline std::int64_t max_guaranteed_free_rank(std::int64_t n) {
    if (n < 1) throw InvalidParameters("max_guaranteed_free_rank requires n >= 1");
    const std::int64_t limit = std::max<std::int64_t>(1, n - 2);
    std::int64_t best = 0;
    for (std::int64_t r = 1; r <= limit; ++r) {
        if (!decide_section(n, r).has_section()) break;
        best = r - 1;
    }
    return best;
}

struct ProofCheck {
    std::string name;
    std::string inequality;  // instantiated
    bool holds = false;
    std::string citation;
};

struct ProofTrace {
    std::int64_t n = 0;
    std::int64_t r = 0;
    std::string branch;  // which case of the r < n/2 argument fired
    std::vector<ProofCheck> checks;

    bool passing() const {
        for (const auto& c : checks)
            if (!c.holds) return false;
        return true;
    }
};

/// Replays the inequality chain behind the existence half of the section
/// criterion for 3 <= r <= n-2 with b_r | n:
///  (i)   2^{r-1} <= b_r <= n,
///  (ii)  r < n/2 (n >= 9 via the logarithmic bound; n in 5..8 forces b_r = 2),
///  (iii) the injectivity hypotheses at (n', r', d, e) = (n-1, r-1, n-2, n).
inline ProofTrace verify_splitting_proof_inequalities(std::int64_t n, std::int64_t r) {
    if (r < 3 || r > n - 2)
        throw OutOfRange("verify_splitting_proof_inequalities requires 3 <= r <= n-2 (got n=" + std::to_string(n) +
                         ", r=" + std::to_string(r) + ")");
    const auto div = james_divides(static_cast<std::uint64_t>(r), Int(n));
    if (!div.divides)
        throw OutOfRange("verify_splitting_proof_inequalities requires b_r | n (b_" + std::to_string(r) + " = " +
                         div.james.value.str() + ", n = " + std::to_string(n) + ")");

    ProofTrace trace;
    trace.n = n;
    trace.r = r;
    const Int b = div.james.value;
    const Int rough = ipow(Int(2), static_cast<unsigned>(r - 1));
    auto check = [&](std::string name, std::string inequality, bool holds, std::string citation) {
        trace.checks.push_back({std::move(name), std::move(inequality), holds, std::move(citation)});
    };
    auto le = [](const auto& lhs, const auto& rhs) {
        using std::to_string;
        return to_string(lhs) + " <= " + to_string(rhs);
    };

    check("rough bound 2^(r-1) <= b_r", "2^" + std::to_string(r - 1) + " = " + rough.str() + " <= " + b.str(),
          rough <= b, "Thm5.1");
    check("b_r <= n from b_r | n", b.str() + " <= " + std::to_string(n), b <= Int(n), "Thm5.1");
    check("r <= log2(n) + 1", "2^" + std::to_string(r - 1) + " <= " + std::to_string(n), rough <= Int(n), "Thm5.1");
    if (n >= 9) {
        trace.branch = "n >= 9";
        check("r < n/2", std::to_string(2 * r) + " < " + std::to_string(n), 2 * r < n, "Thm5.1");
    } else {
        trace.branch = "n in {5,...,8}";
        check("b_r <= n forces b_r = 2", b.str() + " = 2", b == 2, "Thm5.1");
        check("r < n/2", std::to_string(2 * r) + " < " + std::to_string(n), 2 * r < n, "Thm5.1");
    }

    const std::int64_t n1 = n - 1, r1 = r - 1, d = n - 2, e = n;
    check("r' <= n'-2", le(r1, n1 - 2), r1 <= n1 - 2, "Thm4.5");
    check("d <= 2n'-2r'-3", le(d, 2 * n1 - 2 * r1 - 3), d <= 2 * n1 - 2 * r1 - 3, "Thm4.5");
    check("e <= d+3", le(e, d + 3), e <= d + 3, "Thm4.5");
    check("2n' <= e+d", le(2 * n1, e + d), 2 * n1 <= e + d, "Thm4.5");
    check("n'-1 <= e", le(n1 - 1, e), n1 - 1 <= e, "Thm4.5");
    const auto verdict = classify_stiefel_injective(n1, r1, d, e);
    check("realization injective at (n', r', d, e)",
          "classify_stiefel_injective(" + std::to_string(n1) + ", " + std::to_string(r1) + ", " + std::to_string(d) +
              ", " + std::to_string(e) + ") = " + std::string(verdict_kind_name(verdict.kind)),
          verdict.kind == VerdictKind::Injective, "Thm4.5");
    return trace;
}

}  // namespace motreal
