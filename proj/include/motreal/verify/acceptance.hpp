#pragma once

// Acceptance criteria as runnable checks. Each criterion reports pass/fail,
// a one-line detail and its wall time against a fixed limit.

#include "motreal/abelian_group.hpp"
#include "motreal/chart.hpp"
#include "motreal/completion.hpp"
#include "motreal/hom_oracle.hpp"
#include "motreal/james.hpp"
#include "motreal/partial_fractions.hpp"
#include "motreal/range_classifier.hpp"
#include "motreal/splitting.hpp"
#include "motreal/verify/figure_oracle.hpp"
#include "motreal/verify/oracles.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace motreal::verify {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool checks_passed = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;

    bool passed() const { return checks_passed && seconds < limit_seconds; }
};

struct AcceptanceOptions {
    /// Smaller sweeps for interactive use; thresholds and tolerances are unchanged.
    bool quick = false;
    /// Golden TSV for the reference chart; the byte comparison is skipped when absent.
    std::optional<std::string> golden_chart_path;
};

namespace detail {

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    std::string first_failure;
    std::size_t checks = 0;

    void expect(bool condition, const std::string& what) {
        ++checks;
        if (!condition && ok) {
            ok = false;
            first_failure = what;
        } else if (!condition) {
            ok = false;
        }
    }
    std::string detail() const {
        std::string out = std::to_string(checks) + " checks";
        const auto extra = note.str();
        if (!extra.empty()) out += "; " + extra;
        if (!ok) out += "; first failure: " + first_failure;
        return out;
    }
};

inline CriterionResult timed(int id, std::string title, double limit, const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(outcome);
    } catch (const std::exception& ex) {
        outcome.expect(false, std::string("exception: ") + ex.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {id, std::move(title), outcome.ok, outcome.detail(), seconds, limit};
}

}  // namespace detail

inline CriterionResult criterion_james_constants() {
    return detail::timed(1, "James constants b_1..b_5 = 1, 2, 24, 24, 2880", 1.0, [](detail::Outcome& o) {
        const std::vector<Int> expected{1, 2, 24, 24, 2880};
        for (std::uint64_t q = 1; q <= 5; ++q) {
            const auto b = james_number(q);
            o.expect(b.value == expected[q - 1], "b_" + std::to_string(q) + " = " + b.value.str());
        }
        const auto b5 = james_number(5);
        o.expect(b5.exponents == std::map<std::uint64_t, unsigned>{{2, 6}, {3, 2}, {5, 1}}, "b_5 = 2^6 3^2 5");
    });
}

inline CriterionResult criterion_james_bound() {
    return detail::timed(2, "James bound v_2(b_q) >= q-1 (2..64) and b_q | b_{q+1} (1..63)", 1.0,
                         [](detail::Outcome& o) {
                             std::vector<JamesFactorization> b;
                             for (std::uint64_t q = 1; q <= 64; ++q) b.push_back(james_number(q));
                             for (std::uint64_t q = 2; q <= 64; ++q) {
                                 const auto it = b[q - 1].exponents.find(2);
                                 const unsigned v2 = it == b[q - 1].exponents.end() ? 0 : it->second;
                                 o.expect(v2 >= q - 1, "v_2(b_" + std::to_string(q) + ") = " + std::to_string(v2));
                                 o.expect(b[q - 1].value >= ipow(Int(2), static_cast<unsigned>(q - 1)),
                                          "b_" + std::to_string(q) + " >= 2^(q-1)");
                             }
                             for (std::uint64_t q = 1; q <= 63; ++q)
                                 o.expect(b[q].value % b[q - 1].value == 0,
                                          "b_" + std::to_string(q) + " | b_" + std::to_string(q + 1));
                         });
}

inline CriterionResult criterion_hom_ext_oracles(bool quick) {
    const std::uint64_t max_order = quick ? 16 : 32;
    return detail::timed(
        3, "Hom/Ext oracle equivalence over all groups of order <= " + std::to_string(max_order), 30.0,
        [max_order](detail::Outcome& o) {
            const auto groups = all_groups_up_to(max_order);
            o.note << groups.size() << " groups";
            for (const auto& g : groups) {
                const auto a = AbGroupFQ::finite(g);
                for (std::uint64_t m = 1; m <= 2 * max_order; ++m) {
                    o.expect(m_torsion(a, Int(m)).torsion.order() == count_m_torsion(g, m),
                             "|" + g.to_string() + "[" + std::to_string(m) + "]|");
                    o.expect(mod_m(a, Int(m)).torsion.order() == count_mod_m(g, m),
                             "|" + g.to_string() + " / " + std::to_string(m) + "|");
                }
            }
            for (const auto& a : groups)
                for (const auto& b : groups) {
                    o.expect(brute_force_hom_count(a, b) == hom_count_closed_form(a, b),
                             "Hom(" + a.to_string() + ", " + b.to_string() + ")");
                }
        });
}

inline CriterionResult criterion_partial_fractions(bool quick) {
    const std::int64_t max_den = quick ? 500 : 5000;
    return detail::timed(
        4, "Partial fractions on every reduced a/b with b <= " + std::to_string(max_den), 10.0,
        [max_den](detail::Outcome& o) {
            const auto all = PrimeSet::all();
            std::uint64_t fractions = 0;
            for (std::int64_t b = 1; b <= max_den; ++b) {
                // partial_fraction_decompose(a/b) is PartialFractionBasis(b).decompose(a); the basis is shared per b.
                const PartialFractionBasis basis(Int(b), all);
                for (std::int64_t a = 0; a < b; ++a) {
                    if (std::gcd(a, b) != 1) continue;
                    ++fractions;
                    const RationalMod1 x{Int(a), Int(b)};
                    const auto parts = basis.decompose(x.numerator());
                    bool normalized = true;
                    for (const auto& [p, term] : parts) {
                        const Int* power = nullptr;
                        for (const auto& c : basis.components())
                            if (c.prime == p) power = &c.prime_power;
                        // Reduced fraction a/b: every term is a unit over the full p^{s_p}.
                        normalized = normalized && power != nullptr && term.denominator() == *power &&
                                     term.numerator() > 0 && term.numerator() < *power;
                    }
                    if (!normalized || parts.size() != basis.components().size() || sum_mod1(parts) != x)
                        o.expect(false, std::to_string(a) + "/" + std::to_string(b));
                }
            }
            o.checks += fractions;
            o.note << fractions << " fractions";
        });
}

inline CriterionResult criterion_completion_structure() {
    return detail::timed(5, "Completion splitting on 200 random groups", 5.0, [](detail::Outcome& o) {
        std::mt19937_64 rng(20251018);
        const std::vector<std::uint64_t> prime_pool{2, 3, 5, 7, 11, 13};
        for (int trial = 0; trial < 200; ++trial) {
            // Random torsion of order <= 10^4 as a product of random cyclic orders.
            std::vector<Int> orders;
            std::uint64_t order = 1;
            for (int k = 0; k < 4; ++k) {
                const std::uint64_t c = std::uniform_int_distribution<std::uint64_t>(1, 40)(rng);
                if (order * c > 10000) continue;
                order *= c;
                orders.emplace_back(c);
            }
            AbGroupFQ a{std::uniform_int_distribution<std::uint64_t>(0, 3)(rng), 0,
                        FinAbGroup::from_cyclic_orders(orders)};
            std::vector<std::uint64_t> chosen;
            for (auto p : prime_pool)
                if (rng() % 2) chosen.push_back(p);
            const auto primes = PrimeSet::of(chosen);
            const auto dec = completion_decomposition(a, primes);
            const std::string where = a.to_string() + " at " + primes.to_string();

            o.expect(direct_sum(dec.kernel, AbGroupFQ::finite(dec.section_image)) == a, "kernel + section = A, " + where);
            o.expect(dec.section_image == subgroup_type(a.torsion, prime_set_torsion_indicator(a.torsion, primes)),
                     "section image = I-torsion, " + where);
            o.expect(dec.kernel.q_rank == a.q_rank &&
                         dec.kernel.torsion ==
                             subgroup_type(a.torsion, prime_set_divisible_indicator(a.torsion, primes)),
                     "kernel = I-divisible, " + where);
            o.expect(dec.completion == dec.section_image, "completion = section image, " + where);
            o.expect(divisibility_predicates(dec.kernel, primes).is_divisible, "kernel I-divisible, " + where);
            o.expect(divisibility_predicates(AbGroupFQ::finite(dec.completion), primes).is_bounded_torsion,
                     "completion of I-bounded torsion, " + where);
        }
    });
}

inline CriterionResult criterion_reference_chart(const std::optional<std::string>& golden_path) {
    return detail::timed(
        6, "Reference chart x=8 y=9, d in [0,20], e in [-2,20]", 1.0, [&golden_path](detail::Outcome& o) {
            const Chart chart(8, 9, {0, 20}, {-2, 20});
            const ReferenceChart reference;
            for (std::int64_t e = -2; e <= 20; ++e)
                for (std::int64_t d = 0; d <= 20; ++d) {
                    const std::string code(region_code(chart.at(d, e)));
                    const auto expected = reference.label({d, e});
                    o.expect(code == expected, "(" + std::to_string(d) + "," + std::to_string(e) + ") = " + code +
                                                   ", drawn region " + expected);
                }
            // ISO cells are exactly the closed pentagon minus the 0-stem line.
            std::size_t iso_cells = 0;
            for (std::int64_t e = -2; e <= 20; ++e)
                for (std::int64_t d = 0; d <= 20; ++d) {
                    const bool in_pentagon = reference.iso.contains({d, e}) && d + e != 17;
                    const bool iso = chart.at(d, e).kind == VerdictKind::Isomorphism;
                    iso_cells += iso ? 1 : 0;
                    o.expect(iso == in_pentagon, "ISO pentagon at (" + std::to_string(d) + "," + std::to_string(e) + ")");
                }
            o.note << iso_cells << " ISO cells";
            // The six boundary lines.
            const std::vector<std::string> equations{"d=8", "d=14", "e=8", "e=d+3", "d+e=17", "d+e=16"};
            const auto lines = chart.boundaries();
            o.expect(lines.size() == equations.size(), "six boundary lines");
            for (std::size_t i = 0; i < lines.size() && i < equations.size(); ++i)
                o.expect(lines[i].equation == equations[i], "boundary " + lines[i].equation);
            if (golden_path) {
                std::ifstream in(*golden_path, std::ios::binary);
                o.expect(static_cast<bool>(in), "golden file readable: " + *golden_path);
                std::ostringstream buf;
                buf << in.rdbuf();
                o.expect(buf.str() == chart.to_tsv(), "TSV matches golden file byte for byte");
                o.note << ", golden TSV compared";
            } else {
                o.note << ", no golden file given";
            }
        });
}

inline CriterionResult criterion_section_decisions() {
    return detail::timed(7, "Section decisions and b_r | n sweep for n <= 256", 5.0, [](detail::Outcome& o) {
        auto verdict = [](std::int64_t n, std::int64_t r) { return decide_section(n, r).verdict; };
        for (auto [n, r] : std::vector<std::pair<std::int64_t, std::int64_t>>{{24, 3}, {24, 4}, {48, 3}, {2880, 6}})
            o.expect(verdict(n, r) == SectionVerdict::Yes, "Yes at (" + std::to_string(n) + "," + std::to_string(r) + ")");
        for (std::int64_t m = 1; m <= 10; ++m)
            o.expect(verdict(24 * m, 4) == SectionVerdict::Yes, "Yes at (" + std::to_string(24 * m) + ",4)");
        for (auto [n, r] : std::vector<std::pair<std::int64_t, std::int64_t>>{{25, 3}, {24, 5}})
            o.expect(verdict(n, r) == SectionVerdict::No, "No at (" + std::to_string(n) + "," + std::to_string(r) + ")");
        // (3, 2) lies outside 2 <= r <= n-2, so no section is asserted; b_2 = 2 does not divide 3.
        const auto small = decide_section(3, 2);
        o.expect(small.verdict == SectionVerdict::OutOfTheoremRange && !small.has_section() &&
                     Int(3) % james_number(2).value != 0,
                 "no section at (3,2)");

        std::vector<Int> b(255);
        for (std::int64_t r = 1; r <= 254; ++r) b[r] = james_number(static_cast<std::uint64_t>(r)).value;
        std::size_t cases = 0;
        for (std::int64_t n = 4; n <= 256; ++n)
            for (std::int64_t r = 2; r <= n - 2; ++r) {
                ++cases;
                const bool divides = Int(n) % b[r] == 0;
                const auto v = verdict(n, r);
                o.expect(v == (divides ? SectionVerdict::Yes : SectionVerdict::No),
                         "(" + std::to_string(n) + "," + std::to_string(r) + ")");
            }
        o.note << cases << " (n,r) pairs";
    });
}

inline CriterionResult criterion_proof_obligations() {
    return detail::timed(8, "Proof-obligation sweep over the Yes-set with 3 <= r <= n-2, n <= 256", 5.0,
                         [](detail::Outcome& o) {
                             std::size_t traces = 0;
                             for (std::int64_t n = 5; n <= 256; ++n)
                                 for (std::int64_t r = 3; r <= n - 2; ++r) {
                                     if (Int(n) % james_number(static_cast<std::uint64_t>(r)).value != 0) continue;
                                     ++traces;
                                     const auto trace = verify_splitting_proof_inequalities(n, r);
                                     o.expect(trace.passing(),
                                              "trace (" + std::to_string(n) + "," + std::to_string(r) + ")");
                                 }
                             o.expect(traces > 0, "nonempty Yes-set");
                             o.note << traces << " traces";
                         });
}

inline CriterionResult criterion_stable_band() {
    return detail::timed(9, "Stable realization: iso for 1 <= s <= 20, -1 <= 2w <= s+2; uncovered for 2w > s+2", 1.0,
                         [](detail::Outcome& o) {
                             for (std::int64_t s = 1; s <= 20; ++s)
                                 for (std::int64_t w = -40; w <= 40; ++w) {
                                     const auto v = classify_stable_realization(s, w);
                                     const std::string at = "(" + std::to_string(s) + "," + std::to_string(w) + ")";
                                     if (-1 <= 2 * w && 2 * w <= s + 2)
                                         o.expect(v.kind == VerdictKind::Isomorphism, "iso at " + at);
                                     if (2 * w > s + 2) o.expect(v.kind == VerdictKind::NotCovered, "uncovered at " + at);
                                 }
                             for (std::int64_t s = -20; s <= 20; ++s)
                                 for (std::int64_t w = -40; w <= 40; ++w)
                                     if (s != 0 && 2 * w > s + 2)
                                         o.expect(classify_stable_realization(s, w, {true}).kind == VerdictKind::NotCovered,
                                                  "uncovered with B-S at (" + std::to_string(s) + "," + std::to_string(w) + ")");
                         });
}

inline CriterionResult criterion_convention_coherence(bool quick) {
    const std::int64_t bound = quick ? 12 : 30;
    return detail::timed(
        10, "Freudenthal conventions agree and B-S never downgrades, |params| <= " + std::to_string(bound), 5.0,
        [bound](detail::Outcome& o) {
            std::uint64_t agree = 0, total = 0;
            for (std::int64_t a = -bound; a <= bound; ++a)
                for (std::int64_t b = -bound; b <= bound; ++b)
                    for (std::int64_t s = -bound; s <= bound; ++s)
                        for (std::int64_t w = -bound; w <= bound; ++w) {
                            const auto stem = freudenthal_stable(a, b, s, w).holds;
                            const auto c = convert(Bidegree::stem_weight(s, w), Convention::CoweightWeight).first;
                            const auto cow = freudenthal_stable_coweight(a - b, b, c).holds;
                            ++total;
                            agree += stem == cow ? 1 : 0;
                        }
            o.expect(agree == total, "Freudenthal agreement " + std::to_string(agree) + "/" + std::to_string(total));

            std::uint64_t compared = 0;
            auto monotone = [&](const Verdict& plain, const Verdict& bs, const std::string& where) {
                ++compared;
                if (bs.strength() < plain.strength()) o.expect(false, "B-S downgrades " + where);
            };
            for (std::int64_t x = -bound; x <= bound; ++x)
                for (std::int64_t y = -bound; y <= bound; ++y)
                    for (std::int64_t d = -bound; d <= bound; ++d)
                        for (std::int64_t e = -bound; e <= bound; ++e)
                            monotone(classify_sphere_unstable(x, y, d, e), classify_sphere_unstable(x, y, d, e, {true}),
                                     "sphere");
            for (std::int64_t s = -bound; s <= bound; ++s)
                for (std::int64_t w = -bound; w <= bound; ++w)
                    monotone(classify_stable_realization(s, w), classify_stable_realization(s, w, {true}), "stable");
            for (std::int64_t n = 1; n <= bound; ++n)
                for (std::int64_t r = 1; r <= bound; ++r)
                    for (std::int64_t d = -bound; d <= bound; ++d)
                        for (std::int64_t e = -bound; e <= bound; ++e) {
                            monotone(classify_stiefel_surjective(n, r, d, e),
                                     classify_stiefel_surjective(n, r, d, e, {true}), "stiefel-surj");
                            monotone(classify_stiefel_injective(n, r, d, e),
                                     classify_stiefel_injective(n, r, d, e, {true}), "stiefel-inj");
                        }
            o.expect(true, "monotonicity sweep");
            o.note << total << " Freudenthal points, " << compared << " flag comparisons";
        });
}

inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {}) {
    return {
        criterion_james_constants(),
        criterion_james_bound(),
        criterion_hom_ext_oracles(options.quick),
        criterion_partial_fractions(options.quick),
        criterion_completion_structure(),
        criterion_reference_chart(options.golden_chart_path),
        criterion_section_decisions(),
        criterion_proof_obligations(),
        criterion_stable_band(),
        criterion_convention_coherence(options.quick),
    };
}

inline void print_results(std::ostream& os, const std::vector<CriterionResult>& results) {
    for (const auto& r : results) {
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.3fs / limit %.0fs", r.seconds, r.limit_seconds);
        os << (r.passed() ? "PASS" : "FAIL") << "  AC" << r.id << "  " << r.title << "  [" << timing << "]  "
           << r.detail << (r.checks_passed && !r.passed() ? "; over time limit" : "") << "\n";
    }
}

inline bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed()) return false;
    return true;
}

}  // namespace motreal::verify
