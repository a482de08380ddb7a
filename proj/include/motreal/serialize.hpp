#pragma once

#include "motreal/abelian_group.hpp"
#include "motreal/chart.hpp"
#include "motreal/completion.hpp"
#include "motreal/int_matrix.hpp"
#include "motreal/james.hpp"
#include "motreal/partial_fractions.hpp"
#include "motreal/range_classifier.hpp"
#include "motreal/splitting.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace motreal {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
inline Json int_to_json(const Int& v) {
    if (fits_int64(v)) return static_cast<std::int64_t>(v);
    return v.str();
}

inline Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos || s.find('-', 1) != std::string::npos)
            throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
        return Int(s);
    }
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline std::uint64_t count_from_json(const Json& j, const char* key) {
    if (!j.contains(key)) return 0;
    const Int v = int_from_json(j.at(key));
    if (v < 0) throw std::invalid_argument(std::string(key) + " must be non-negative");
    return static_cast<std::uint64_t>(to_int64(v));
}

inline Json to_json(const FinAbGroup& g) {
    Json factors = Json::array();
    for (const Int& d : g.invariant_factors()) factors.push_back(int_to_json(d));
    return factors;
}

/// {"q_rank": n, "free_rank": n, "invariant_factors": [d1, ...]}
inline Json to_json(const AbGroupFQ& a) {
    return Json{{"q_rank", a.q_rank}, {"free_rank", a.free_rank}, {"invariant_factors", to_json(a.torsion)}};
}

/// Accepts any positive cyclic orders in "invariant_factors" and canonicalizes,
/// unless `strict` is set, in which case the list must already be canonical.
inline AbGroupFQ group_from_json(const Json& j, bool strict = false) {
    if (!j.is_object()) throw std::invalid_argument("group must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (key != "q_rank" && key != "free_rank" && key != "invariant_factors")
            throw std::invalid_argument("unknown group field \"" + key + "\"");
    AbGroupFQ a;
    a.q_rank = count_from_json(j, "q_rank");
    a.free_rank = count_from_json(j, "free_rank");
    std::vector<Int> orders;
    if (j.contains("invariant_factors")) {
        if (!j.at("invariant_factors").is_array()) throw std::invalid_argument("invariant_factors must be an array");
        for (const auto& v : j.at("invariant_factors")) orders.push_back(int_from_json(v));
    }
    a.torsion = strict ? FinAbGroup(orders) : FinAbGroup::from_cyclic_orders(orders);
    return a;
}

/// {"rows": r, "cols": c, "entries": [row-major]}
inline Json to_json(const IntMatrix& m) {
    Json entries = Json::array();
    for (const Int& v : m.entries()) entries.push_back(int_to_json(v));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("matrix must be an object with rows, cols, entries");
    std::vector<Int> entries;
    for (const auto& v : j.at("entries")) entries.push_back(int_from_json(v));
    return IntMatrix(count_from_json(j, "rows"), count_from_json(j, "cols"), std::move(entries));
}

inline Json to_json(const PrimeSet& s) {
    if (s.is_all()) return "all";
    return Json(s.explicit_primes());
}

inline Json to_json(const ICompleteGroup& c) {
    Json parts = Json::object();
    for (const auto& [p, g] : c.finite_parts) parts[std::to_string(p)] = to_json(g);
    Json out{{"prime_set", to_json(c.prime_set)}, {"padic_rank", c.padic_rank}, {"finite_parts", parts}};
    if (c.is_finite()) out["order"] = int_to_json(c.order());
    return out;
}

inline Json to_json(const RationalMod1& x) {
    return Json{{"numerator", int_to_json(x.numerator())}, {"denominator", int_to_json(x.denominator())}};
}

inline Json to_json(const JamesFactorization& j) {
    Json factorization = Json::object();
    for (const auto& [p, e] : j.exponents) factorization[std::to_string(p)] = e;
    return Json{{"q", j.q}, {"value", j.value.str()}, {"factorization", factorization}};
}

/// {"verdict", "kernel", "target_torsion", "citation", "failed": [...]}
inline Json to_json(const Verdict& v) {
    Json failed = Json::array();
    for (auto h : v.failed) failed.push_back(std::string(hypothesis_name(h)));
    return Json{{"verdict", std::string(verdict_kind_name(v.kind))},
                {"kernel", v.kernel ? Json(v.kernel->to_string()) : Json(nullptr)},
                {"target_torsion", v.target_torsion},
                {"citation", v.citation == Citation::None ? Json(nullptr) : Json(std::string(citation_name(v.citation)))},
                {"failed", failed}};
}

inline Json to_json(const ProofTrace& t) {
    Json checks = Json::array();
    for (const auto& c : t.checks)
        checks.push_back(Json{{"name", c.name}, {"inequality", c.inequality}, {"holds", c.holds}, {"citation", c.citation}});
    return Json{{"n", t.n}, {"r", t.r}, {"branch", t.branch}, {"passing", t.passing()}, {"checks", checks}};
}

/// {"verdict", "james": {...}, "certificate", "citation", "hypothesis"}
inline Json to_json(const SectionDecision& s) {
    Json certificate = nullptr;
    if (s.quotient)
        certificate = Json{{"quotient", int_to_json(*s.quotient)}};
    else if (s.failing_prime)
        certificate = Json{{"failing_prime", *s.failing_prime}};
    return Json{{"n", s.n},
                {"r", s.r},
                {"verdict", std::string(section_verdict_name(s.verdict))},
                {"james", to_json(s.james)},
                {"certificate", certificate},
                {"citation", s.citation == SectionCitation::None ? Json(nullptr)
                                                                 : Json(std::string(section_citation_name(s.citation)))},
                {"hypothesis", std::string(kSplittingHypothesis)}};
}

}  // namespace motreal
