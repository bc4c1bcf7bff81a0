#pragma once

/**
 * @file rewrite.hpp
 * @brief Rewriting of formal spaces into wedges of smash clauses.
 *
 * Rules (each applies at the root of a subterm):
 *
 *   susp-to-smash    Susp(X)                 -> (X ^ S1)
 *   plus-point       Plus(pt)                -> S0
 *   wedge-flatten    (.. v (A v B) v ..)     -> (.. v A v B v ..)
 *   wedge-point      (.. v pt v ..)          -> (.. v ..)
 *   smash-flatten    (.. ^ (A ^ B) ^ ..)     -> (.. ^ A ^ B ^ ..)
 *   smash-point      (.. ^ pt ^ ..)          -> pt
 *   smash-unit       (.. ^ S0 ^ ..)          -> (.. ^ ..)
 *   sphere-merge     (.. ^ Sa ^ .. ^ Sb ^ ..) -> (.. ^ S(a+b) ^ ..)
 *   distribute       (C ^ (A v B))           -> ((C ^ A) v (C ^ B))
 *   plus-eliminate   (Plus(X) ^ W) with Sk in W, k >= 1 -> ((X ^ W) v W)
 *
 * The last rule is Sigma(X+) ~ Sigma X v S1 smashed with the rest of the
 * clause. It only fires when the clause carries a sphere of positive
 * dimension, so Plus survives (and the term stays non-spherical) otherwise.
 *
 * Rewriting to a fixed point is followed by a canonical ordering pass:
 * smash factors sorted by serialization with the sphere last, wedge clauses
 * by sphere dimension descending, then by the remaining factors.
 */

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ptcalc/space.hpp"

namespace ptc {

enum class RewriteRule {
    SuspToSmash,
    PlusPoint,
    WedgeFlatten,
    WedgePoint,
    SmashFlatten,
    SmashPoint,
    SmashUnit,
    SphereMerge,
    Distribute,
    PlusEliminate,
};

inline std::string_view rule_name(RewriteRule r) {
    switch (r) {
    case RewriteRule::SuspToSmash: return "susp-to-smash";
    case RewriteRule::PlusPoint: return "plus-point";
    case RewriteRule::WedgeFlatten: return "wedge-flatten";
    case RewriteRule::WedgePoint: return "wedge-point";
    case RewriteRule::SmashFlatten: return "smash-flatten";
    case RewriteRule::SmashPoint: return "smash-point";
    case RewriteRule::SmashUnit: return "smash-unit";
    case RewriteRule::SphereMerge: return "sphere-merge";
    case RewriteRule::Distribute: return "distribute";
    case RewriteRule::PlusEliminate: return "plus-eliminate";
    }
    return "?";
}

enum class Strategy { Innermost, Outermost };

/// Called with (redex, contractum, rule) for every rewrite step.
using RewriteObserver = std::function<void(const SpaceExpr&, const SpaceExpr&, RewriteRule)>;

/// Polynomial interpretation that strictly decreases on every rule and is
/// strictly monotone in each argument, so it bounds the length of any
/// rewrite sequence. Leaves 2, Susp 4x+1, Plus x+2, Wedge sum+1, Smash 2*prod.
inline boost::multiprecision::cpp_int termination_measure(const SpaceExpr& e) {
    using K = SpaceExpr::Kind;
    using boost::multiprecision::cpp_int;
    switch (e.kind()) {
    case K::Point:
    case K::Sphere:
    case K::Atom: return 2;
    case K::Susp: return 4 * termination_measure(e.inner()) + 1;
    case K::Plus: return termination_measure(e.inner()) + 2;
    case K::Wedge: {
        cpp_int s = 1;
        for (const auto& c : e.children()) s += termination_measure(c);
        return s;
    }
    case K::Smash: {
        cpp_int p = 2;
        for (const auto& c : e.children()) p *= termination_measure(c);
        return p;
    }
    }
    return 0;
}

namespace detail {

// Collapsing constructors: empty smash is the unit S0, empty wedge the point.
inline SpaceExpr make_smash(std::vector<SpaceExpr> xs) {
    if (xs.empty()) return SpaceExpr::sphere(0);
    if (xs.size() == 1) return std::move(xs.front());
    return SpaceExpr::smash(std::move(xs));
}

inline SpaceExpr make_wedge(std::vector<SpaceExpr> xs) {
    if (xs.empty()) return SpaceExpr::point();
    if (xs.size() == 1) return std::move(xs.front());
    return SpaceExpr::wedge(std::move(xs));
}

inline std::vector<SpaceExpr> child_vector(const SpaceExpr& e) {
    return {e.children().begin(), e.children().end()};
}

inline SpaceExpr with_children(const SpaceExpr& e, std::vector<SpaceExpr> kids) {
    using K = SpaceExpr::Kind;
    switch (e.kind()) {
    case K::Wedge: return SpaceExpr::wedge(std::move(kids));
    case K::Smash: return SpaceExpr::smash(std::move(kids));
    case K::Susp: return SpaceExpr::susp(std::move(kids.at(0)));
    case K::Plus: return SpaceExpr::plus(std::move(kids.at(0)));
    default: return e;
    }
}

struct Step {
    SpaceExpr result;
    RewriteRule rule;
};

inline std::optional<Step> rewrite_root(const SpaceExpr& e) {
    using K = SpaceExpr::Kind;
    auto is_kind = [](K k) { return [k](const SpaceExpr& c) { return c.is(k); }; };

    switch (e.kind()) {
    case K::Susp:
        return Step{SpaceExpr::smash({e.inner(), SpaceExpr::sphere(1)}), RewriteRule::SuspToSmash};

    case K::Plus:
        if (e.inner().is(K::Point)) return Step{SpaceExpr::sphere(0), RewriteRule::PlusPoint};
        return std::nullopt;

    case K::Wedge: {
        auto kids = e.children();
        if (std::ranges::any_of(kids, is_kind(K::Wedge))) {
            std::vector<SpaceExpr> flat;
            for (const auto& c : kids) {
                if (c.is(K::Wedge)) flat.insert(flat.end(), c.children().begin(), c.children().end());
                else flat.push_back(c);
            }
            return Step{make_wedge(std::move(flat)), RewriteRule::WedgeFlatten};
        }
        if (std::ranges::any_of(kids, is_kind(K::Point))) {
            std::vector<SpaceExpr> rest;
            for (const auto& c : kids)
                if (!c.is(K::Point)) rest.push_back(c);
            return Step{make_wedge(std::move(rest)), RewriteRule::WedgePoint};
        }
        return std::nullopt;
    }

    case K::Smash: {
        auto kids = e.children();
        if (std::ranges::any_of(kids, is_kind(K::Smash))) {
            std::vector<SpaceExpr> flat;
            for (const auto& c : kids) {
                if (c.is(K::Smash)) flat.insert(flat.end(), c.children().begin(), c.children().end());
                else flat.push_back(c);
            }
            return Step{make_smash(std::move(flat)), RewriteRule::SmashFlatten};
        }
        if (std::ranges::any_of(kids, is_kind(K::Point)))
            return Step{SpaceExpr::point(), RewriteRule::SmashPoint};
        auto is_unit = [](const SpaceExpr& c) { return c.is(K::Sphere) && c.dimension() == 0; };
        if (std::ranges::any_of(kids, is_unit)) {
            std::vector<SpaceExpr> rest;
            bool dropped = false;
            for (const auto& c : kids) {
                if (!dropped && is_unit(c)) {
                    dropped = true;
                    continue;
                }
                rest.push_back(c);
            }
            return Step{make_smash(std::move(rest)), RewriteRule::SmashUnit};
        }
        if (std::ranges::count_if(kids, is_kind(K::Sphere)) >= 2) {
            std::vector<SpaceExpr> out;
            int first = -1;
            int second = -1;
            for (int i = 0; i < static_cast<int>(kids.size()); ++i) {
                if (!kids[i].is(K::Sphere)) continue;
                if (first < 0) first = i;
                else if (second < 0) second = i;
            }
            for (int i = 0; i < static_cast<int>(kids.size()); ++i) {
                if (i == second) continue;
                if (i == first)
                    out.push_back(SpaceExpr::sphere(kids[first].dimension() + kids[second].dimension()));
                else out.push_back(kids[i]);
            }
            return Step{make_smash(std::move(out)), RewriteRule::SphereMerge};
        }
        if (auto w = std::ranges::find_if(kids, is_kind(K::Wedge)); w != kids.end()) {
            std::size_t at = static_cast<std::size_t>(w - kids.begin());
            std::vector<SpaceExpr> clauses;
            for (const auto& branch : w->children()) {
                std::vector<SpaceExpr> factors = child_vector(e);
                factors[at] = branch;
                clauses.push_back(make_smash(std::move(factors)));
            }
            return Step{make_wedge(std::move(clauses)), RewriteRule::Distribute};
        }
        auto positive_sphere = [](const SpaceExpr& c) { return c.is(K::Sphere) && c.dimension() >= 1; };
        if (std::ranges::any_of(kids, positive_sphere)) {
            if (auto p = std::ranges::find_if(kids, is_kind(K::Plus)); p != kids.end()) {
                std::size_t at = static_cast<std::size_t>(p - kids.begin());
                std::vector<SpaceExpr> with_x = child_vector(e);
                with_x[at] = p->inner();
                std::vector<SpaceExpr> without = child_vector(e);
                without.erase(without.begin() + static_cast<std::ptrdiff_t>(at));
                return Step{SpaceExpr::wedge({make_smash(std::move(with_x)), make_smash(std::move(without))}),
                            RewriteRule::PlusEliminate};
            }
        }
        return std::nullopt;
    }

    default: return std::nullopt;
    }
}

inline SpaceExpr rewrite_innermost(const SpaceExpr& e, const RewriteObserver& obs) {
    SpaceExpr cur = e;
    if (!e.children().empty()) {
        std::vector<SpaceExpr> kids;
        kids.reserve(e.children().size());
        for (const auto& c : e.children()) kids.push_back(rewrite_innermost(c, obs));
        cur = with_children(e, std::move(kids));
    }
    if (auto step = rewrite_root(cur)) {
        if (obs) obs(cur, step->result, step->rule);
        return rewrite_innermost(step->result, obs);
    }
    return cur;
}

// One leftmost-outermost step; nullopt when `e` is irreducible.
inline std::optional<SpaceExpr> step_outermost(const SpaceExpr& e, const RewriteObserver& obs) {
    if (auto step = rewrite_root(e)) {
        if (obs) obs(e, step->result, step->rule);
        return std::move(step->result);
    }
    auto kids = e.children();
    for (std::size_t i = 0; i < kids.size(); ++i) {
        if (auto r = step_outermost(kids[i], obs)) {
            std::vector<SpaceExpr> next = child_vector(e);
            next[i] = std::move(*r);
            return with_children(e, std::move(next));
        }
    }
    return std::nullopt;
}

inline SpaceExpr rewrite_outermost(const SpaceExpr& e, const RewriteObserver& obs) {
    SpaceExpr cur = e;
    while (auto next = step_outermost(cur, obs)) cur = std::move(*next);
    return cur;
}

inline int clause_sphere_dimension(const SpaceExpr& c) {
    using K = SpaceExpr::Kind;
    if (c.is(K::Sphere)) return c.dimension();
    if (c.is(K::Smash)) {
        for (const auto& f : c.children())
            if (f.is(K::Sphere)) return f.dimension();
    }
    return 0;
}

inline std::string clause_factor_key(const SpaceExpr& c) {
    using K = SpaceExpr::Kind;
    if (c.is(K::Sphere)) return "";
    if (!c.is(K::Smash)) return to_string(c);
    std::string key;
    for (const auto& f : c.children()) {
        if (f.is(K::Sphere)) continue;
        key += to_string(f);
        key += '\x1f';
    }
    return key;
}

} // namespace detail

/// Sorts smash factors and wedge clauses into the canonical order. Only
/// reorders children; never changes the multiset of subterms.
inline SpaceExpr canonicalize(const SpaceExpr& e) {
    using K = SpaceExpr::Kind;
    if (e.children().empty()) return e;
    std::vector<SpaceExpr> kids;
    for (const auto& c : e.children()) kids.push_back(canonicalize(c));
    if (e.is(K::Smash)) {
        std::ranges::stable_sort(kids, [](const SpaceExpr& a, const SpaceExpr& b) {
            bool sa = a.is(K::Sphere);
            bool sb = b.is(K::Sphere);
            if (sa != sb) return sb;
            if (sa) return a.dimension() > b.dimension();
            return to_string(a) < to_string(b);
        });
    } else if (e.is(K::Wedge)) {
        std::ranges::stable_sort(kids, [](const SpaceExpr& a, const SpaceExpr& b) {
            int da = detail::clause_sphere_dimension(a);
            int db = detail::clause_sphere_dimension(b);
            if (da != db) return da > db;
            return detail::clause_factor_key(a) < detail::clause_factor_key(b);
        });
    }
    return detail::with_children(e, std::move(kids));
}

/// Exhaustive rewriting under the given strategy, then canonical ordering.
inline SpaceExpr normalize(const SpaceExpr& e, Strategy strategy, const RewriteObserver& obs = {}) {
    SpaceExpr fixed = strategy == Strategy::Innermost ? detail::rewrite_innermost(e, obs)
                                                      : detail::rewrite_outermost(e, obs);
    return canonicalize(fixed);
}

inline SpaceExpr normalize(const SpaceExpr& e) { return normalize(e, Strategy::Innermost); }

/// True when no rule applies anywhere in `e`.
inline bool is_irreducible(const SpaceExpr& e) {
    if (detail::rewrite_root(e)) return false;
    return std::ranges::all_of(e.children(), [](const SpaceExpr& c) { return is_irreducible(c); });
}

/// A normal form that still contains Plus (or opaque atoms) and so is not a
/// wedge of spheres.
struct NonSpherical {
    SpaceExpr normal_form;
};

/// Sphere dimensions of normalize(e) in clause order, or the normal form when
/// some clause is not a sphere. The point gives an empty list.
inline std::variant<std::vector<int>, NonSpherical> as_wedge_of_spheres(const SpaceExpr& e) {
    using K = SpaceExpr::Kind;
    SpaceExpr nf = normalize(e);
    std::vector<int> dims;
    if (nf.is(K::Point)) return dims;
    if (nf.is(K::Sphere)) return std::vector<int>{nf.dimension()};
    if (nf.is(K::Wedge)) {
        for (const auto& c : nf.children()) {
            if (!c.is(K::Sphere)) return NonSpherical{nf};
            dims.push_back(c.dimension());
        }
        return dims;
    }
    return NonSpherical{nf};
}

/// Clauses of a normal form: the wedge summands, or the term itself.
inline std::vector<SpaceExpr> wedge_clauses(const SpaceExpr& nf) {
    if (nf.is(SpaceExpr::Kind::Point)) return {};
    if (nf.is(SpaceExpr::Kind::Wedge)) return detail::child_vector(nf);
    return {nf};
}

/// Removes one suspension coordinate from a normalized clause: S^n -> S^(n-1),
/// (A ^ Sk) -> (A ^ S(k-1)). Returns nullopt when the clause has no sphere
/// factor of positive dimension.
inline std::optional<SpaceExpr> desuspend(const SpaceExpr& clause) {
    using K = SpaceExpr::Kind;
    if (clause.is(K::Sphere)) {
        if (clause.dimension() < 1) return std::nullopt;
        return SpaceExpr::sphere(clause.dimension() - 1);
    }
    if (clause.is(K::Smash)) {
        std::vector<SpaceExpr> factors;
        bool found = false;
        for (const auto& f : clause.children()) {
            if (!found && f.is(K::Sphere) && f.dimension() >= 1) {
                found = true;
                factors.push_back(SpaceExpr::sphere(f.dimension() - 1));
            } else {
                factors.push_back(f);
            }
        }
        if (!found) return std::nullopt;
        return normalize(detail::make_smash(std::move(factors)));
    }
    return std::nullopt;
}

} // namespace ptc
