#pragma once

// JSON encodings of groups, decompositions and cobordism answers.

#include <string>

#include <nlohmann/json.hpp>

#include "ptcalc/abelian.hpp"
#include "ptcalc/cobordism.hpp"
#include "ptcalc/splitter.hpp"

namespace ptc {

inline nlohmann::json group_json(const KnownGroup& g) { return {{"rank", g.rank}, {"torsion", g.torsion}}; }

/// {"rank": r, "torsion": [...]}, {"symbolic": "label"}, or {"sum": [...]}
/// for a mixed sum.
inline nlohmann::json group_json(const FgAbelianGroup& g) {
    auto term_json = [](const GroupTerm& t) -> nlohmann::json {
        if (auto k = std::get_if<KnownGroup>(&t)) return group_json(*k);
        return {{"symbolic", std::get<SymbolicGroup>(t).label}};
    };
    if (!g.is_symbolic_sum()) return term_json(g.terms().front());
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& t : g.terms()) parts.push_back(term_json(t));
    return {{"sum", parts}};
}

inline FgAbelianGroup group_from_json(const nlohmann::json& j) {
    if (j.contains("symbolic")) return FgAbelianGroup::symbolic(j.at("symbolic").get<std::string>());
    if (j.contains("sum")) {
        FgAbelianGroup acc;
        for (const auto& part : j.at("sum")) acc = direct_sum(acc, group_from_json(part));
        return acc;
    }
    return normal_form(j.at("rank").get<int>(), j.at("torsion").get<std::vector<std::int64_t>>());
}

inline nlohmann::json decomposition_json(const Decomposition& d) {
    nlohmann::json summands = nlohmann::json::array();
    for (const auto& s : d.summands)
        summands.push_back({{"label", s.label}, {"space", to_string(s.space)}, {"group", group_json(s.group)}});
    return {{"degree", d.degree},
            {"route", route_name(d.route)},
            {"truncation_weight", d.truncation_weight},
            {"summands", summands},
            {"total", group_json(d.total())}};
}

inline nlohmann::json answer_json(const CobordismAnswer& a) {
    nlohmann::json j;
    j["status"] = status_name(a.status);
    j["space"] = to_string(a.space);
    j["theorems"] = a.notes;
    nlohmann::json summands = nlohmann::json::array();
    if (a.decomposition) {
        j["degree"] = a.decomposition->degree;
        j["route"] = route_name(a.decomposition->route);
        for (const auto& s : a.decomposition->summands)
            summands.push_back({{"label", s.label},
                                {"geometric_name", a.geometric_name(s.label)},
                                {"space", to_string(s.space)},
                                {"group", group_json(s.group)}});
    }
    j["summands"] = summands;
    if (auto t = a.total()) j["total"] = group_json(*t);
    return j;
}

} // namespace ptc
