#pragma once

/**
 * @file splitter.hpp
 * @brief Hilton-Milnor decompositions and the two routes for splitting
 *        pi_m(X+ ^ Z).
 *
 * pi_m(SY_1 v ... v SY_g) = (+)_lambda pi_m(S Y_lambda), one summand per
 * basic product lambda. Summands whose space is m-connected vanish, and
 * since conn(S Y_lambda) >= weight(lambda) * (1 + min conn Y_i), only
 * finitely many weights contribute.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptcalc/abelian.hpp"
#include "ptcalc/errors.hpp"
#include "ptcalc/hall.hpp"
#include "ptcalc/rewrite.hpp"
#include "ptcalc/space.hpp"
#include "ptcalc/sphere_table.hpp"

namespace ptc {

enum class Route { Hilton, PlusSmashUnstable, PlusSmashStable };

inline std::string route_name(Route r) {
    switch (r) {
    case Route::Hilton: return "hilton";
    case Route::PlusSmashUnstable: return "plus-smash-unstable";
    case Route::PlusSmashStable: return "plus-smash-stable";
    }
    return "?";
}

struct Summand {
    std::string label;                  // bracket string, or a generator tag such as "base"
    std::optional<BasicProduct> product; // absent for stable-route summands
    SpaceExpr space;
    FgAbelianGroup group;
};

struct Decomposition {
    int degree = 0;
    std::vector<Summand> summands;
    int truncation_weight = 1;
    Route route = Route::Hilton;

    FgAbelianGroup total() const {
        FgAbelianGroup acc;
        for (const auto& s : summands) acc = direct_sum(acc, s.group);
        return acc;
    }
};

/// Least weight w >= 1 with w * (1 + min_i conn Y_i) >= m. Every basic
/// product of weight >= w then has an m-connected space S Y_lambda.
inline int truncation_bound(int m, const std::vector<SpaceExpr>& ys) {
    int c = kInfiniteConnectivity;
    for (const auto& y : ys) c = std::min(c, connectivity(y));
    if (c == kInfiniteConnectivity || m <= 0) return 1;
    if (c < 0) throw domain_error("truncation bound needs connected spaces (connectivity >= 0)");
    int step = c + 1;
    return std::max(1, (m + step - 1) / step);
}

/// pi_m of a normalized single-clause space: table lookup for spheres,
/// symbolic otherwise.
inline FgAbelianGroup evaluate_pi(int m, const SpaceExpr& space, const SphereTable& table) {
    if (space.is(SpaceExpr::Kind::Point)) return FgAbelianGroup::zero();
    if (space.is(SpaceExpr::Kind::Sphere) && space.dimension() >= 1) return lookup_pi(m, space.dimension(), table);
    if (connectivity(space) >= m) return FgAbelianGroup::zero();
    return FgAbelianGroup::symbolic("π_" + std::to_string(m) + "(" + to_string(space) + ")");
}

/// Hilton-Milnor decomposition of pi_m(SY_1 v ... v SY_g). Each Y_i must be
/// a single normalized clause (wedges are split by the caller) of
/// connectivity >= 0.
inline Decomposition hilton_milnor(int m, const std::vector<SpaceExpr>& ys, const SphereTable& table) {
    if (m < 0) throw domain_error("degree must be non-negative");
    if (ys.empty()) throw domain_error("Hilton-Milnor needs at least one space");
    std::vector<SpaceExpr> nys;
    for (const auto& y : ys) {
        SpaceExpr ny = normalize(y);
        if (ny.is(SpaceExpr::Kind::Wedge))
            throw domain_error("Hilton-Milnor input " + to_string(ny) + " is a wedge; split it first");
        if (connectivity(ny) < 0)
            throw domain_error("Hilton-Milnor input " + to_string(ny) + " is not connected");
        nys.push_back(std::move(ny));
    }

    Decomposition d;
    d.degree = m;
    d.route = Route::Hilton;
    d.truncation_weight = truncation_bound(m, nys);
    if (d.truncation_weight <= 1) return d;

    ProductSystem sys = generate_system(static_cast<int>(nys.size()), d.truncation_weight - 1);
    for (const auto& lambda : sys.products()) {
        SpaceExpr space = normalize(SpaceExpr::susp(smash_space(lambda, nys)));
        if (connectivity(space) >= m) continue;
        FgAbelianGroup group = evaluate_pi(m, space, table);
        d.summands.push_back(Summand{lambda.str(), lambda, std::move(space), std::move(group)});
    }
    return d;
}

enum class SplitMode { Unstable, Stable };

namespace detail {

inline std::string generator_tag(std::size_t index, std::size_t smash_clauses) {
    if (index == 0) return "base";
    if (smash_clauses == 1) return "smash";
    return "smash" + std::to_string(index);
}

} // namespace detail

/// pi_m(X+ ^ Z) split into a `smash` part (X ^ Z) and a `base` part (Z).
///
/// Unstable mode rewrites X+ ^ Z as (X ^ Z) v Z, which needs a suspension
/// coordinate in Z, and runs Hilton-Milnor on the wedge with `base` as the
/// first generator. Stable mode uses the retraction onto Z and evaluates both
/// parts as stable homotopy.
inline Decomposition split_plus_smash(int m, const SpaceExpr& x, const SpaceExpr& z, SplitMode mode,
                                      const SphereTable& table) {
    if (m < 0) throw domain_error("degree must be non-negative");
    SpaceExpr base = normalize(z);
    std::vector<SpaceExpr> smash_clauses = wedge_clauses(normalize(SpaceExpr::smash({x, z})));

    if (mode == SplitMode::Stable) {
        auto stable_pi = [&](const SpaceExpr& space) -> FgAbelianGroup {
            auto spherical = as_wedge_of_spheres(space);
            if (auto dims = std::get_if<std::vector<int>>(&spherical)) {
                FgAbelianGroup acc;
                for (int n : *dims) acc = direct_sum(acc, stable_stem(m - n, table));
                return acc;
            }
            return FgAbelianGroup::symbolic("π^s_" + std::to_string(m) + "(" + to_string(space) + ")");
        };
        Decomposition d;
        d.degree = m;
        d.route = Route::PlusSmashStable;
        SpaceExpr smash_part = detail::make_wedge(smash_clauses);
        FgAbelianGroup smash_group = stable_pi(smash_part);
        d.summands.push_back(Summand{"smash", std::nullopt, smash_part, std::move(smash_group)});
        FgAbelianGroup base_group = stable_pi(base);
        d.summands.push_back(Summand{"base", std::nullopt, base, std::move(base_group)});
        return d;
    }

    if (base.is(SpaceExpr::Kind::Wedge) || !desuspend(base))
        throw domain_error("no framed direction: unnesting map undefined (" + to_string(base) +
                           " is not a suspension; the splitting requires θ factoring over BO(d−1))");

    std::vector<SpaceExpr> ys{*desuspend(base)};
    for (const auto& clause : smash_clauses) {
        auto y = desuspend(clause);
        if (!y) throw domain_error("smash clause " + to_string(clause) + " is not a suspension");
        ys.push_back(std::move(*y));
    }

    Decomposition d = hilton_milnor(m, ys, table);
    d.route = Route::PlusSmashUnstable;
    for (auto& s : d.summands) {
        if (s.product && s.product->is_generator())
            s.label = detail::generator_tag(static_cast<std::size_t>(s.product->generator_index() - 1),
                                            smash_clauses.size());
    }
    return d;
}

/// The `pi` entry point: splits a wedge term into its clauses, desuspends
/// each, and runs Hilton-Milnor.
inline Decomposition pi_of_wedge(int m, const SpaceExpr& term, const SphereTable& table) {
    std::vector<SpaceExpr> ys;
    for (const auto& clause : wedge_clauses(normalize(term))) {
        auto y = desuspend(clause);
        if (!y) throw domain_error("clause " + to_string(clause) + " is not a suspension");
        if (connectivity(*y) < 0)
            throw domain_error("clause " + to_string(clause) + " is not the suspension of a connected space");
        ys.push_back(std::move(*y));
    }
    if (ys.empty()) {
        Decomposition d;
        d.degree = m;
        return d;
    }
    return hilton_milnor(m, ys, table);
}

} // namespace ptc
