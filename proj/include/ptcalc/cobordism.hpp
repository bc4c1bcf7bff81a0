#pragma once

/**
 * @file cobordism.hpp
 * @brief Cobordism queries answered through their Pontryagin-Thom spaces.
 *
 * Plain, link, nested and stable cobordism of submanifolds of spheres are
 * translated into homotopy groups of Thom spaces (or wedges and plus-smash
 * products of them), which are then split and evaluated. Queries outside
 * the range where the cobordism set is a group are answered with the
 * classifying space only.
 */

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptcalc/abelian.hpp"
#include "ptcalc/errors.hpp"
#include "ptcalc/rewrite.hpp"
#include "ptcalc/space.hpp"
#include "ptcalc/sphere_table.hpp"
#include "ptcalc/splitter.hpp"
#include "ptcalc/thom.hpp"

namespace ptc {

enum class Status { Group, SetOnly };

inline std::string status_name(Status s) { return s == Status::Group ? "group" : "set-only"; }

struct CobordismAnswer {
    Status status = Status::SetOnly;
    SpaceExpr space = SpaceExpr::point(); // classifying space (or spectrum level)
    std::optional<Decomposition> decomposition;
    std::map<std::string, std::string> invariant_labels; // summand label -> geometric name
    std::vector<std::string> notes;

    /// Only reported for group answers that were evaluated.
    std::optional<FgAbelianGroup> total() const {
        if (status != Status::Group || !decomposition) return std::nullopt;
        return decomposition->total();
    }

    std::string geometric_name(const std::string& label) const {
        auto it = invariant_labels.find(label);
        return it == invariant_labels.end() ? std::string{} : it->second;
    }
};

/// Cobordism classes of codimension-`codim` submanifolds of an m-manifold
/// form a group iff codim > (m+1)/2, or the ambient is S^m and codim > 1.
inline Status group_conditions(int m, int codim, bool ambient_is_sphere) {
    if (m < 1 || codim < 1 || codim > m) throw domain_error("group conditions need m >= 1 and 1 <= codim <= m");
    if (2 * codim > m + 1) return Status::Group;
    if (ambient_is_sphere && codim > 1) return Status::Group;
    return Status::SetOnly;
}

namespace detail {

inline std::string iota_name(int index) {
    switch (index) {
    case 1: return "ι";
    case 2: return "ι′";
    case 3: return "ι″";
    case 4: return "ι‴";
    default: return "ι_" + std::to_string(index);
    }
}

inline std::string iota_bracket(const BasicProduct& p) {
    if (p.is_generator()) return iota_name(p.generator_index());
    return "[" + iota_bracket(p.left()) + "," + iota_bracket(p.right()) + "]";
}

/// Wang-style invariant names: generators and the weight-2 bracket always;
/// higher products only when `full_system` (fully framed, codim > 1).
inline void attach_link_labels(CobordismAnswer& a, bool full_system) {
    if (!a.decomposition) return;
    for (const auto& s : a.decomposition->summands) {
        if (!s.product) continue;
        if (s.product->weight() <= 2 || full_system) a.invariant_labels[s.label] = "Δ_" + iota_bracket(*s.product);
    }
}

inline const char* kSignNote = "Δ_[ι,ι′] is identified with Wang's τ summand only up to sign";

inline Decomposition single_summand(int m, std::string label, const SpaceExpr& space, const SphereTable& table) {
    Decomposition d;
    d.degree = m;
    d.truncation_weight = 2;
    if (connectivity(space) < m)
        d.summands.push_back(Summand{std::move(label), std::nullopt, space, evaluate_pi(m, space, table)});
    return d;
}

inline void check_rank(const ThomStructure& s, int m, const char* what) {
    if (s.rank() < 1 || s.rank() > m)
        throw domain_error(std::string(what) + " rank " + std::to_string(s.rank()) + " must lie in [1, " +
                           std::to_string(m) + "]");
}

} // namespace detail

/// Cob^θ(M): classes of θ-submanifolds of an m-manifold, via [M, Th θ].
inline CobordismAnswer cob(int m, const ThomStructure& theta, bool ambient_is_sphere, const SphereTable& table) {
    detail::check_rank(theta, m, "structure");
    CobordismAnswer a;
    a.space = thom_space(theta);
    a.status = group_conditions(m, theta.rank(), ambient_is_sphere);
    a.notes.push_back("Pontryagin-Thom: Cob(M) = [M, Th]");
    if (!ambient_is_sphere) {
        a.notes.push_back("generic ambient manifold: [M, Th] is not evaluated");
        return a;
    }
    if (a.status == Status::SetOnly) {
        a.notes.push_back("codimension too small for a group structure; not evaluated");
        return a;
    }
    a.decomposition = detail::single_summand(m, "i1", a.space, table);
    a.invariant_labels["i1"] = "[K]";
    return a;
}

/// LCob^(θ′,θ)(S^m): links K ⊔ K′ with K a θ-submanifold and K′ a
/// θ′-submanifold, via π_m(Th θ ∨ Th θ′). Generator ι is K, ι′ is K′.
inline CobordismAnswer lcob(int m, const ThomStructure& theta_prime, const ThomStructure& theta,
                            const SphereTable& table) {
    detail::check_rank(theta, m, "θ");
    detail::check_rank(theta_prime, m, "θ′");
    SpaceExpr th = thom_space(theta);
    SpaceExpr th_prime = thom_space(theta_prime);

    CobordismAnswer a;
    a.space = normalize(SpaceExpr::wedge({th, th_prime}));
    bool group = group_conditions(m, theta.rank(), true) == Status::Group &&
                 group_conditions(m, theta_prime.rank(), true) == Status::Group;
    a.status = group ? Status::Group : Status::SetOnly;
    a.notes.push_back("link Pontryagin-Thom: LCob(S^m) = π_m(Th θ ∨ Th θ′)");
    if (!group) {
        a.notes.push_back("codimension too small for a group structure; not evaluated");
        return a;
    }

    auto y = desuspend(th);
    auto y_prime = desuspend(th_prime);
    if (!theta.has_framed_direction() || !theta_prime.has_framed_direction() || !y || !y_prime) {
        a.decomposition = detail::single_summand(m, "wedge", a.space, table);
        a.invariant_labels["wedge"] = "(Δ_ι, Δ_ι′) jointly";
        a.notes.push_back("Thom spaces are not both suspensions; no Hilton-Milnor splitting");
        return a;
    }

    a.decomposition = hilton_milnor(m, {*y, *y_prime}, table);
    bool full = theta.fully_framed() && theta_prime.fully_framed() && theta.rank() > 1 && theta_prime.rank() > 1;
    detail::attach_link_labels(a, full);
    a.notes.push_back("Hilton-Milnor splitting of π_m(ΣY ∨ ΣY′)");
    a.notes.push_back("Δ_ι = [K], Δ_ι′ = [K′] (forgetful maps)");
    a.notes.push_back(detail::kSignNote);
    a.notes.push_back(full ? "Δ_λ over all basic products form a full set of invariants (framed links)"
                           : "only Δ_ι, Δ_ι′, Δ_[ι,ι′] are geometric invariants here");
    return a;
}

/// NCob^(θ′,θ)(S^m): nested K′ ⊆ K ⊆ S^m, with rank θ = m − k1 and
/// rank θ′ = k1 − k2, via π_m(Th(θ′)+ ∧ Th θ). When θ has a framed direction
/// the answer is transported to LCob^(θ′×θ,θ) by unnesting.
inline CobordismAnswer ncob(int m, const ThomStructure& theta_prime, const ThomStructure& theta,
                            const SphereTable& table) {
    detail::check_rank(theta, m, "θ");
    if (theta_prime.rank() < 1 || theta.rank() + theta_prime.rank() > m)
        throw domain_error("nested dimensions need 0 <= k2 < k1 < m (rank θ′ = " +
                           std::to_string(theta_prime.rank()) + ", rank θ = " + std::to_string(theta.rank()) +
                           ", m = " + std::to_string(m) + ")");
    SpaceExpr th = thom_space(theta);
    SpaceExpr th_prime = thom_space(theta_prime);

    CobordismAnswer a;
    a.space = normalize(SpaceExpr::smash({SpaceExpr::plus(th_prime), th}));
    a.status = group_conditions(m, theta.rank(), true);
    a.notes.push_back("nested Pontryagin-Thom: NCob(S^m) = π_m(Th(θ′)+ ∧ Th θ)");

    if (!theta.has_framed_direction()) {
        a.notes.push_back("θ has no framed direction: no unnesting map, the plus-smash does not split");
        if (a.status == Status::Group) {
            a.decomposition = detail::single_summand(m, "nested", a.space, table);
        }
        return a;
    }
    a.notes.push_back("unnesting: Th(θ′)+ ∧ Th θ ≃ Th(θ′×θ) ∨ Th θ");
    a.notes.push_back("NCob^(θ′,θ) ≅ LCob^(θ′×θ,θ) via Υ");
    if (a.status == Status::SetOnly) {
        a.notes.push_back("codimension too small for a group structure; not evaluated");
        return a;
    }

    Decomposition d = split_plus_smash(m, th_prime, th, SplitMode::Unstable, table);
    for (auto& s : d.summands)
        if (s.product) s.label = s.product->str();
    a.decomposition = std::move(d);
    bool full = theta.fully_framed() && theta_prime.fully_framed() && theta.rank() > 1;
    detail::attach_link_labels(a, full);
    a.notes.push_back("Δ_ι(Υ[K′⊆K]) = [K], Δ_ι′(Υ[K′⊆K]) = [K′]");
    a.notes.push_back(detail::kSignNote);
    a.notes.push_back(full ? "[K′⊆K] = 0 iff Δ_λ(Υ[K′⊆K]) = 0 for every basic product λ"
                           : "[K′⊆K] = 0 implies [K], [K′], Δ_[ι,ι′](Υ[K′⊆K]) vanish");
    return a;
}

/// Ω_k^Θ = π_k(Th Θ) for a stable structure Θ.
inline CobordismAnswer stable_cob(int k, const ThomStructure& stable_theta, const SphereTable& table) {
    if (k < 0) throw domain_error("stable degree must be non-negative");
    CobordismAnswer a;
    a.status = Status::Group;
    a.notes.push_back("stable Pontryagin-Thom: Ω_k = π_k(Th Θ)");
    Decomposition d;
    d.degree = k;
    std::string label = "Ω_" + std::to_string(k);
    if (stable_theta.fully_framed()) {
        a.space = SpaceExpr::sphere(0);
        d.summands.push_back(Summand{label, std::nullopt, a.space, stable_stem(k, table)});
        a.notes.push_back("framed: Ω_k^fr = π_k𝕊");
    } else {
        a.space = SpaceExpr::atom("Th" + stable_theta.label(), -1);
        d.summands.push_back(Summand{label, std::nullopt, a.space,
                                     FgAbelianGroup::symbolic("π_" + std::to_string(k) + "(Th" +
                                                              stable_theta.label() + ")")});
    }
    a.decomposition = std::move(d);
    return a;
}

/// Ω_{k1}^{(θ′,Θ)} = Ω_{k2}^{θ′×Θ} ⊕ Ω_{k1}^Θ, cross-checked against the
/// stable plus-smash split of π_{k1}(Th(θ′)+ ∧ Th Θ) when everything is framed.
inline CobordismAnswer stable_ncob(int k1, int k2, const ThomStructure& theta_prime,
                                   const ThomStructure& stable_theta, const SphereTable& table) {
    if (k2 < 0 || k2 >= k1) throw domain_error("stable nested degrees need 0 <= k2 < k1");
    if (theta_prime.rank() != k1 - k2)
        throw domain_error("rank θ′ must equal k1 − k2 = " + std::to_string(k1 - k2));

    ThomStructure product = ThomStructure::product({theta_prime, stable_theta});
    CobordismAnswer inner = stable_cob(k2, product, table);
    CobordismAnswer outer = stable_cob(k1, stable_theta, table);

    CobordismAnswer a;
    a.status = Status::Group;
    a.space = normalize(SpaceExpr::smash({SpaceExpr::plus(thom_space(theta_prime)), outer.space}));
    Decomposition d;
    d.degree = k1;
    d.route = Route::PlusSmashStable;
    std::string inner_label = "Ω_" + std::to_string(k2) + "^{θ′×Θ}";
    std::string outer_label = "Ω_" + std::to_string(k1) + "^Θ";
    FgAbelianGroup inner_group = inner.decomposition->summands.front().group;
    if (!product.fully_framed() && inner_group.is_symbolic())
        inner_group = FgAbelianGroup::symbolic("Ω^{" + theta_prime.label() + "×" +
                                               (stable_theta.fully_framed() ? std::string("fr") : stable_theta.label()) +
                                               "}_" + std::to_string(k2));
    d.summands.push_back(Summand{inner_label, std::nullopt, SpaceExpr::sphere(k1 - k2), inner_group});
    d.summands.push_back(Summand{outer_label, std::nullopt, outer.space, outer.decomposition->summands.front().group});
    a.decomposition = std::move(d);
    a.invariant_labels[inner_label] = "[K′] ∈ " + inner_label;
    a.invariant_labels[outer_label] = "[K] ∈ " + outer_label;
    a.notes.push_back("stable nested Pontryagin-Thom: Ω^{(θ′,Θ)}_{k1} = π_{k1}(Th(θ′)+ ∧ Th Θ)");
    a.notes.push_back("retract splitting: Ω^{(θ′,Θ)}_{k1} ≅ Ω^{θ′×Θ}_{k2} ⊕ Ω^Θ_{k1}");

    if (theta_prime.fully_framed() && stable_theta.fully_framed()) {
        Decomposition check =
            split_plus_smash(k1, thom_space(theta_prime), SpaceExpr::sphere(0), SplitMode::Stable, table);
        if (render(check.total()) != render(a.decomposition->total()))
            throw std::logic_error("stable splitting routes disagree: " + render(check.total()) + " vs " +
                                   render(a.decomposition->total()));
        a.notes.push_back("cross-checked against the stable plus-smash route");
    }
    return a;
}

/// Iterated nesting K_r ⊆ ... ⊆ K′ ⊆ K ⊆ S^m. `structures` runs from the
/// innermost θ_r out to θ; ranks must sum to m − k_r with k_r >= 0.
inline CobordismAnswer nested_chain(int m, const std::vector<ThomStructure>& structures, const SphereTable& table) {
    if (structures.empty()) throw domain_error("nested chain needs at least one structure");
    int total_rank = 0;
    for (const auto& s : structures) {
        if (s.rank() < 1) throw domain_error("nested chain ranks must be positive");
        total_rank += s.rank();
    }
    if (total_rank > m)
        throw domain_error("nested chain ranks sum to " + std::to_string(total_rank) + " > m = " + std::to_string(m) +
                           " (telescope mismatch)");
    if (structures.size() == 1) return cob(m, structures.front(), true, table);
    if (structures.size() == 2) return ncob(m, structures[0], structures[1], table);

    const ThomStructure& outer = structures.back();
    CobordismAnswer a;
    SpaceExpr iterated = thom_space(structures.front());
    for (std::size_t i = 1; i < structures.size(); ++i)
        iterated = SpaceExpr::smash({SpaceExpr::plus(iterated), thom_space(structures[i])});
    a.space = normalize(iterated);
    a.status = group_conditions(m, outer.rank(), true);
    a.notes.push_back("iterated nested Pontryagin-Thom: π_m(((Th θ_r)+ ∧ ...)+ ∧ Th θ)");

    bool unnestable = true;
    for (std::size_t i = 1; i < structures.size(); ++i) unnestable = unnestable && structures[i].has_framed_direction();
    if (!unnestable || contains(a.space, SpaceExpr::Kind::Plus)) {
        a.notes.push_back("some outer structure has no framed direction: Plus survives, result is symbolic");
        if (a.status == Status::Group) a.decomposition = detail::single_summand(m, "nested", a.space, table);
        return a;
    }
    if (a.status == Status::SetOnly) {
        a.notes.push_back("codimension too small for a group structure; not evaluated");
        return a;
    }

    // Unnested clauses: Th θ first, then each inner clause smashed with Th θ.
    std::vector<SpaceExpr> clauses{thom_space(structures.front())};
    for (std::size_t i = 1; i < structures.size(); ++i) {
        SpaceExpr th = thom_space(structures[i]);
        std::vector<SpaceExpr> next{th};
        for (const auto& c : clauses) next.push_back(normalize(SpaceExpr::smash({c, th})));
        clauses = std::move(next);
    }
    std::vector<SpaceExpr> ys;
    for (const auto& c : clauses) {
        auto y = desuspend(c);
        if (!y) throw domain_error("clause " + to_string(c) + " is not a suspension");
        ys.push_back(std::move(*y));
    }
    a.decomposition = hilton_milnor(m, ys, table);
    bool full = outer.rank() > 1;
    for (const auto& s : structures) full = full && s.fully_framed();
    detail::attach_link_labels(a, full);
    a.notes.push_back("iterated unnesting to a " + std::to_string(ys.size()) + "-component link, g-fold Hilton-Milnor");
    a.notes.push_back(detail::kSignNote);
    return a;
}

} // namespace ptc
