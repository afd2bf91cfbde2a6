#pragma once

#include <string>

#include "json.hpp"
#include "specht/cyclo.hpp"
#include "specht/perms.hpp"
#include "specht/repmod.hpp"
#include "specht/shapes.hpp"
#include "specht/specht.hpp"
#include "specht/words.hpp"

namespace specht {

using json = nlohmann::json;

// CycloInt: a bare integer for r <= 2, else {"r": r, "coeffs": [...]}.
inline json to_json(const CycloInt& v) {
    if (v.order() <= 2) return v.integer_value();
    return json{{"r", v.order()}, {"coeffs", v.coeffs()}};
}

inline CycloInt cyclo_from_json(const json& j, int default_r = 1) {
    if (j.is_number_integer()) return CycloInt(default_r, j.get<long long>());
    return CycloInt::from_coeffs(j.at("r").get<int>(),
                                 j.at("coeffs").get<std::vector<long long>>());
}

// Shapes: nested integer arrays.
inline json to_json(const Partition& p) { return json(p.parts()); }
inline json to_json(const MultiPartition& m) {
    json arr = json::array();
    for (const auto& c : m.components()) arr.push_back(to_json(c));
    return arr;
}
inline json to_json(const BiPartition& b) {
    return json::array({to_json(b.component(0)), to_json(b.component(1))});
}

inline Partition partition_from_json(const json& j) {
    return j.empty() ? Partition() : Partition(j.get<std::vector<int>>());
}
inline MultiPartition multipartition_from_json(const json& j) {
    std::vector<Partition> comps;
    for (const auto& c : j) comps.push_back(partition_from_json(c));
    return MultiPartition(std::move(comps));
}
inline BiPartition bipartition_from_json(const json& j) {
    return BiPartition::from_multipartition(multipartition_from_json(j));
}

// Group elements: {"n":…, "r":…, "phases":[…], "perm":[one-line]}.
inline json to_json(const MonomialElement& m) {
    return json{{"n", m.size()},
                {"r", m.order()},
                {"phases", m.phases()},
                {"perm", m.permutation().images()}};
}
inline json to_json(const SignedPermutation& s) { return to_json(to_monomial(s)); }
inline json to_json(const Permutation& p) {
    return to_json(MonomialElement::from_permutation(1, p));
}

inline MonomialElement element_from_json(const json& j) {
    return MonomialElement(j.at("r").get<int>(), j.at("phases").get<std::vector<int>>(),
                           Permutation(j.at("perm").get<std::vector<int>>()));
}

// Words render as their text form.
inline json to_json(const Word& w) { return to_string(w); }
inline Word word_from_json(const json& j, WordSystem sys, int r) {
    return parse_word(sys, r, j.get<std::string>());
}

inline json to_json(const VerifyReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back(json{{"suite", c.suite},
                              {"name", c.name},
                              {"pass", c.pass},
                              {"witness", c.witness}});
    return json{{"checks", checks}, {"failures", report.failures()}};
}

inline json to_json(const CharacterTable& t) {
    json classes = json::array();
    for (const auto& c : t.classes)
        classes.push_back(json{{"type", to_json(c.type)},
                               {"representative", to_json(c.representative)},
                               {"size", c.size}});
    json values = json::array();
    for (const auto& row : t.values) {
        json jrow = json::array();
        for (const auto& v : row) jrow.push_back(to_json(v));
        values.push_back(std::move(jrow));
    }
    return json{{"flavor", to_string(t.flavor)}, {"n", t.n},       {"r", t.r},
                {"shapes", t.shapes},            {"classes", classes}, {"values", values}};
}

}  // namespace specht
