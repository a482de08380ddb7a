#pragma once

// The `motreal` command line, as a function of argv so tests can drive it
// without spawning processes.

#include "motreal/motreal.hpp"
#include "motreal/serialize.hpp"
#include "motreal/verify/acceptance.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace motreal::cli {

/// Raised for inputs that parse but violate a precondition; reported with exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline PrimeSet parse_prime_set(const std::string& text) {
    if (text == "all") return PrimeSet::all();
    std::vector<std::uint64_t> primes;
    if (text.empty() || text == "none") return PrimeSet::of({});
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("--primes: expected \"all\", \"none\" or a comma-separated list of primes, got \"" +
                             text + "\"");
        primes.push_back(std::stoull(item));
    }
    return PrimeSet::of(std::move(primes));
}

inline std::string join_failed(const std::vector<Hypothesis>& failed) {
    std::string out;
    for (std::size_t i = 0; i < failed.size(); ++i) out += (i ? ", " : "") + std::string(hypothesis_name(failed[i]));
    return out;
}

inline std::string verdict_text(const Verdict& v) {
    if (v.kind == VerdictKind::NotCovered)
        return "NotCovered: outside the comparison theorems (failed: " + join_failed(v.failed) + ")\n";
    std::string out(verdict_kind_name(v.kind));
    if (v.kernel) out += ", kernel " + v.kernel->to_string();
    if (v.target_torsion) out += ", target is torsion";
    return out + " (by " + std::string(citation_name(v.citation)) + ")\n";
}

inline std::string section_text(const SectionDecision& s) {
    std::ostringstream os;
    os << "n=" << s.n << " r=" << s.r << ": " << section_verdict_name(s.verdict);
    os << "; b_" << s.r << " = " << s.james.value.str();
    if (s.verdict == SectionVerdict::Yes || s.verdict == SectionVerdict::TriviallyYes)
        os << ", n / b_r = " << s.quotient->str();
    if (s.failing_prime) os << ", v_" << *s.failing_prime << "(b_r) > v_" << *s.failing_prime << "(n)";
    switch (s.verdict) {
        case SectionVerdict::TriviallyYes: os << " (r = 1: the projection is the identity)"; break;
        case SectionVerdict::OutOfTheoremRange: os << " (Thm5.1 covers 2 <= r <= n-2 only)"; break;
        default: os << " (by " << section_citation_name(s.citation) << ")"; break;
    }
    os << "\nassuming: " << kSplittingHypothesis << "\n";
    return os.str();
}

inline std::string james_text(const JamesFactorization& j) {
    std::string factors;
    for (const auto& [p, e] : j.exponents) {
        if (!factors.empty()) factors += " * ";
        factors += std::to_string(p) + (e > 1 ? "^" + std::to_string(e) : "");
    }
    if (factors.empty()) factors = "1";
    return "b_" + std::to_string(j.q) + " = " + j.value.str() + " = " + factors +
           " (v_p(b_q) = max{s + v_p(s) : 1 <= s <= (q-1)/(p-1)}, as in Thm5.1)\n";
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct GroupArgs {
    std::string op;
    std::string group = "{}";
    std::string group2 = "{}";
    std::string matrix;
    std::string m = "1";
    std::uint64_t p = 2;
    std::string primes = "all";
    std::string numerator = "0";
    std::string denominator = "1";
    std::uint64_t budget = kDefaultEnumerationBudget;
};

inline AbGroupFQ parse_group(const std::string& text) {
    return group_from_json(Json::parse(text));
}

inline FinAbGroup parse_finite_group(const std::string& text, const char* flag) {
    const auto a = parse_group(text);
    if (a.q_rank != 0 || a.free_rank != 0) throw UsageError(std::string(flag) + ": expected a finite group");
    return a.torsion;
}

inline Int parse_int(const std::string& text, const char* flag) {
    if (text.empty() || text.find_first_not_of("-0123456789") != std::string::npos ||
        text.find('-', 1) != std::string::npos)
        throw UsageError(std::string(flag) + ": expected an integer, got \"" + text + "\"");
    return Int(text);
}

inline std::string run_group(const GroupArgs& g, bool json) {
    Json out{{"op", g.op}};
    std::string text;
    if (g.op == "normalize") {
        const auto a = parse_group(g.group);
        out["group"] = to_json(a);
        text = a.to_string() + "\n";
    } else if (g.op == "snf" || g.op == "cokernel") {
        if (g.matrix.empty()) throw UsageError("group " + g.op + ": --matrix is required");
        const auto m = matrix_from_json(Json::parse(g.matrix));
        if (g.op == "snf") {
            const auto d = smith_normal_form(m);
            out["diagonal"] = to_json(d.diagonal);
            out["left"] = to_json(d.left);
            out["right"] = to_json(d.right);
            text = "D = U M V with diag(";
            const auto diag = d.diagonal.diagonal_entries();
            for (std::size_t i = 0; i < diag.size(); ++i) text += (i ? ", " : "") + diag[i].str();
            text += ")\n";
        } else {
            const auto a = group_from_presentation(m);
            out["group"] = to_json(a);
            text = a.to_string() + "\n";
        }
    } else if (g.op == "torsion" || g.op == "mod") {
        const Int m = parse_int(g.m, "--m");
        if (m < 1) throw UsageError("--m must be positive");
        const auto a = parse_group(g.group);
        const auto r = g.op == "torsion" ? m_torsion(a, m) : mod_m(a, m);
        out["m"] = int_to_json(m);
        out["group"] = to_json(r);
        text = (g.op == "torsion" ? "A[" + m.str() + "] = " : "A/" + m.str() + " = ") + r.to_string() + "\n";
    } else if (g.op == "primary") {
        if (!is_prime(g.p)) throw UsageError("--p must be prime");
        const auto r = primary_part(parse_group(g.group), g.p);
        out["p"] = g.p;
        out["group"] = to_json(AbGroupFQ::finite(r));
        text = std::to_string(g.p) + "-primary part: " + r.to_string() + "\n";
    } else if (g.op == "predicates") {
        const auto primes = parse_prime_set(g.primes);
        const auto pr = divisibility_predicates(parse_group(g.group), primes);
        out["prime_set"] = to_json(primes);
        out["divisible"] = pr.is_divisible;
        out["uniquely_divisible"] = pr.is_uniquely_divisible;
        out["torsion_free"] = pr.is_torsion_free;
        out["bounded_torsion"] = pr.is_bounded_torsion;
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        text = "I = " + primes.to_string() + ": I-divisible " + yn(pr.is_divisible) + ", uniquely I-divisible " +
               yn(pr.is_uniquely_divisible) + ", I-torsion-free " + yn(pr.is_torsion_free) + ", I-bounded torsion " +
               yn(pr.is_bounded_torsion) + "\n";
    } else if (g.op == "complete") {
        const auto primes = parse_prime_set(g.primes);
        const auto c = ext_completion(parse_group(g.group), primes);
        out["completion"] = to_json(c);
        text = "Ext(Z/(I^inf), A) = " + c.to_string() + " (by Cor2.4)\n";
    } else if (g.op == "decompose") {
        const auto primes = parse_prime_set(g.primes);
        const auto d = completion_decomposition(parse_group(g.group), primes);
        out["prime_set"] = to_json(primes);
        out["kernel"] = to_json(d.kernel);
        out["completion"] = to_json(d.completion);
        out["section_image"] = to_json(d.section_image);
        text = "0 -> " + d.kernel.to_string() + " -> A -> " + d.completion.to_string() + " -> 0, split by " +
               d.section_image.to_string() + " (by Prop2.7)\n";
    } else if (g.op == "hom") {
        const auto a = parse_finite_group(g.group, "--group");
        const auto b = parse_finite_group(g.group2, "--group2");
        const Int closed = hom_count_closed_form(a, b);
        const Int brute = brute_force_hom_count(a, b, g.budget);
        out["closed_form"] = int_to_json(closed);
        out["brute_force"] = int_to_json(brute);
        out["agree"] = closed == brute;
        text = "|Hom(" + a.to_string() + ", " + b.to_string() + ")| = " + closed.str() + " (enumeration: " +
               brute.str() + ")\n";
    } else if (g.op == "fraction") {
        const Int den = parse_int(g.denominator, "--den");
        if (den < 1) throw UsageError("--den must be positive");
        const RationalMod1 x(parse_int(g.numerator, "--num"), den);
        const auto primes = parse_prime_set(g.primes);
        const auto parts = partial_fraction_decompose(x, primes);
        Json jparts = Json::object();
        text = x.to_string() + " =";
        for (const auto& [p, part] : parts) {
            jparts[std::to_string(p)] = to_json(part);
            text += (jparts.size() == 1 ? " " : " + ") + part.to_string();
        }
        if (parts.empty()) text += " 0";
        out["input"] = to_json(x);
        out["prime_set"] = to_json(primes);
        out["parts"] = jparts;
        out["sum"] = to_json(sum_mod1(parts));
        text += " in Q/Z (by Prop2.3)\n";
    } else {
        throw UsageError("group: unknown op \"" + g.op + "\"");
    }
    return json ? dump(out) : text;
}

#ifndef MOTREAL_GOLDEN_DIR
#define MOTREAL_GOLDEN_DIR ""
#endif

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations around motivic-to-classical comparison maps", "motreal"};
    app.require_subcommand(1);
    app.fallthrough(false);

    std::string format = "json";
    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    std::uint64_t q = 0;
    auto* james = app.add_subcommand("james", "James number b_q with its factorization");
    james->add_option("q", q, "Index q >= 1")->required()->check(CLI::PositiveNumber);
    add_format(james);

    std::int64_t n = 0, r = 0, t = 0;
    bool verify_trace = false;
    auto* split = app.add_subcommand("split", "Does V_r(A^n) -> V_1(A^n) have a section");
    split->add_option("--n", n, "Ambient dimension n >= 1")->required();
    split->add_option("--r", r, "Number of vectors r >= 1")->required();
    split->add_flag("--verify", verify_trace, "Append the proof trace when 3 <= r <= n-2 and b_r | n");
    add_format(split);

    auto* summand = app.add_subcommand("summand", "Free summand of rank t in P with P + R = R^n");
    summand->add_option("--n", n, "Rank n >= 1")->required();
    summand->add_option("--rank", t, "Desired free rank t >= 0")->required();
    add_format(summand);

    bool bs = false;
    std::int64_t s = 0, w = 0, x = 0, y = 0, d = 0, e = 0;
    auto* classify = app.add_subcommand("classify", "Classify a comparison map at one bidegree");
    classify->require_subcommand(1);
    auto* stable = classify->add_subcommand("stable", "Stable realization at stem s, weight w");
    stable->add_option("--s", s)->required();
    stable->add_option("--w", w)->required();
    auto* sphere = classify->add_subcommand("sphere", "Unstable sphere S^{x + y alpha} at (d, e)");
    sphere->add_option("--x", x)->required();
    sphere->add_option("--y", y)->required();
    sphere->add_option("--d", d)->required();
    sphere->add_option("--e", e)->required();
    auto* surj = classify->add_subcommand("stiefel-surj", "Stiefel variety, surjectivity range");
    auto* inj = classify->add_subcommand("stiefel-inj", "Stiefel variety, injectivity range");
    for (auto* sub : {surj, inj}) {
        sub->add_option("--n", n)->required();
        sub->add_option("--r", r)->required();
        sub->add_option("--d", d)->required();
        sub->add_option("--e", e)->required();
    }
    for (auto* sub : {stable, sphere, surj, inj}) {
        sub->add_flag("--bs", bs, "Assume the Beilinson-Soule vanishing conjecture");
        add_format(sub);
    }

    std::int64_t d0 = 0, d1 = 0, e0 = 0, e1 = 0;
    std::string chart_format = "tsv";
    auto* chart = app.add_subcommand("chart", "Region chart for S^{x + y alpha} over a (d, e) window");
    chart->add_option("--x", x)->required();
    chart->add_option("--y", y)->required();
    chart->add_option("--d0", d0)->required();
    chart->add_option("--d1", d1)->required();
    chart->add_option("--e0", e0)->required();
    chart->add_option("--e1", e1)->required();
    chart->add_flag("--bs", bs, "Assume the Beilinson-Soule vanishing conjecture");
    chart->add_option("--format", chart_format)->check(CLI::IsMember({"tsv", "svg"}));

    GroupArgs g;
    auto* group = app.add_subcommand("group", "Finitely generated abelian group operations");
    group->add_option("op", g.op, "normalize|snf|cokernel|torsion|mod|primary|predicates|complete|decompose|hom|fraction")
        ->required()
        ->check(CLI::IsMember({"normalize", "snf", "cokernel", "torsion", "mod", "primary", "predicates", "complete",
                               "decompose", "hom", "fraction"}));
    group->add_option("--group", g.group, "Group as JSON {q_rank, free_rank, invariant_factors}");
    group->add_option("--group2", g.group2, "Second group (hom)");
    group->add_option("--matrix", g.matrix, "Matrix as JSON {rows, cols, entries}");
    group->add_option("--m", g.m, "Integer m >= 1");
    group->add_option("--p", g.p, "Prime p");
    group->add_option("--primes", g.primes, "\"all\", \"none\" or a comma-separated list");
    group->add_option("--num", g.numerator, "Numerator (fraction)");
    group->add_option("--den", g.denominator, "Denominator (fraction)");
    group->add_option("--budget", g.budget, "Enumeration budget for hom");
    add_format(group);

    bool quick = false;
    std::string golden = MOTREAL_GOLDEN_DIR;
    auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
    verify->add_flag("--quick", quick, "Smaller sweeps");
    verify->add_option("--golden", golden, "Directory holding golden files");
    add_format(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto* help_target = &app;
        for (auto* sub : app.get_subcommands()) {
            help_target = sub;
            for (auto* inner : sub->get_subcommands()) help_target = inner;
        }
        out << help_target->help();
        return 0;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n\n" << app.help();
        return 2;
    }

    const bool json = format == "json";
    try {
        if (james->parsed()) {
            const auto b = james_number(q);
            out << (json ? dump(to_json(b)) : james_text(b));
        } else if (split->parsed()) {
            const auto decision = decide_section(n, r);
            Json j = to_json(decision);
            std::string text = section_text(decision);
            if (verify_trace) {
                if (r >= 3 && r <= n - 2 && decision.verdict == SectionVerdict::Yes) {
                    const auto trace = verify_splitting_proof_inequalities(n, r);
                    j["proof_trace"] = to_json(trace);
                    text += "proof trace (" + trace.branch + "): " + (trace.passing() ? "passing" : "FAILING") + "\n";
                    for (const auto& c : trace.checks)
                        text += std::string("  [") + (c.holds ? "ok" : "FAIL") + "] " + c.name + ": " + c.inequality +
                                " (" + c.citation + ")\n";
                } else {
                    j["proof_trace"] = nullptr;
                    text += "proof trace: not applicable (needs 3 <= r <= n-2 and b_r | n)\n";
                }
            }
            out << (json ? dump(j) : text);
        } else if (summand->parsed()) {
            const auto decision = free_summand_decision(n, t);
            Json j = to_json(decision);
            j["rank"] = t;
            out << (json ? dump(j) : "free summand of rank " + std::to_string(t) + ": " + section_text(decision));
        } else if (classify->parsed()) {
            const Assumptions asm_{bs};
            Verdict v;
            if (stable->parsed())
                v = classify_stable_realization(s, w, asm_);
            else if (sphere->parsed())
                v = classify_sphere_unstable(x, y, d, e, asm_);
            else if (surj->parsed())
                v = classify_stiefel_surjective(n, r, d, e, asm_);
            else
                v = classify_stiefel_injective(n, r, d, e, asm_);
            out << (json ? dump(to_json(v)) : verdict_text(v));
        } else if (chart->parsed()) {
            if (d1 < d0 || e1 < e0) throw UsageError("chart: need d0 <= d1 and e0 <= e1");
            const Chart c(x, y, {d0, d1}, {e0, e1}, {bs});
            out << (chart_format == "svg" ? c.to_svg() : c.to_tsv());
        } else if (group->parsed()) {
            out << run_group(g, json);
        } else if (verify->parsed()) {
            verify::AcceptanceOptions options;
            options.quick = quick;
            if (!golden.empty()) options.golden_chart_path = golden + "/fig1_x8_y9.tsv";
            const auto results = verify::run_acceptance(options);
            if (json) {
                Json list = Json::array();
                for (const auto& res : results)
                    list.push_back(Json{{"id", res.id},
                                        {"title", res.title},
                                        {"passed", res.passed()},
                                        {"detail", res.detail},
                                        {"limit_seconds", res.limit_seconds}});
                out << dump(Json{{"quick", quick}, {"all_passed", verify::all_passed(results)}, {"criteria", list}});
            } else {
                verify::print_results(out, results);
            }
            return verify::all_passed(results) ? 0 : 1;
        }
    } catch (const Json::exception& ex) {
        err << "error: malformed JSON argument: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::out_of_range& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const BoundExceeded& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace motreal::cli
