#pragma once

/**
 * @file thom.hpp
 * @brief Formal normal structures (maps B -> BO(d)) and their Thom spaces.
 */

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptcalc/errors.hpp"
#include "ptcalc/rewrite.hpp"
#include "ptcalc/space.hpp"

namespace ptc {

class ThomStructure {
public:
    enum class Kind { Framed, Generic, Product };

    static ThomStructure framed(int rank) {
        ThomStructure s(Kind::Framed);
        s.rank_ = rank;
        s.framed_directions_ = rank;
        return s;
    }

    /// `framed_directions` counts the trivial line bundles split off, i.e.
    /// the structure factors through BO(rank - framed_directions).
    static ThomStructure generic(std::string name, int rank, int framed_directions = 0,
                                 int base_connectivity = 0) {
        if (framed_directions < 0 || framed_directions > rank)
            throw std::invalid_argument("framed directions must lie in [0, rank]");
        if (base_connectivity < 0) throw std::invalid_argument("base connectivity must be >= 0");
        ThomStructure s(Kind::Generic);
        s.name_ = std::move(name);
        s.rank_ = rank;
        s.framed_directions_ = framed_directions;
        s.base_connectivity_ = base_connectivity;
        return s;
    }

    static ThomStructure product(std::vector<ThomStructure> factors) {
        if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
        ThomStructure s(Kind::Product);
        for (const auto& f : factors) {
            s.rank_ += f.rank_;
            s.framed_directions_ += f.framed_directions_;
        }
        s.factors_ = std::move(factors);
        return s;
    }

    Kind kind() const noexcept { return kind_; }
    int rank() const noexcept { return rank_; }
    int framed_directions() const noexcept { return framed_directions_; }
    int base_connectivity() const noexcept { return base_connectivity_; }
    const std::string& name() const noexcept { return name_; }
    const std::vector<ThomStructure>& factors() const noexcept { return factors_; }

    /// Every normal direction is trivialized (framed, or generic with all
    /// directions split off).
    bool fully_framed() const noexcept { return framed_directions_ == rank_; }
    bool has_framed_direction() const noexcept { return framed_directions_ >= 1; }

    /// Short human-readable label, e.g. "fr", "id", "fr x id".
    std::string label() const {
        switch (kind_) {
        case Kind::Framed: return "fr";
        case Kind::Generic: return fully_framed() ? "fr" : name_;
        case Kind::Product: {
            std::string s;
            for (const auto& f : factors_) {
                if (!s.empty()) s += " x ";
                s += f.label();
            }
            return s;
        }
        }
        return "?";
    }

    bool operator==(const ThomStructure&) const = default;

private:
    explicit ThomStructure(Kind k) : kind_(k) {}

    Kind kind_;
    std::string name_;
    int rank_ = 0;
    int framed_directions_ = 0;
    int base_connectivity_ = 0;
    std::vector<ThomStructure> factors_;
};

namespace detail {

inline SpaceExpr raw_thom_space(const ThomStructure& s) {
    switch (s.kind()) {
    case ThomStructure::Kind::Framed: return SpaceExpr::sphere(s.rank());
    case ThomStructure::Kind::Generic: {
        if (s.fully_framed()) return SpaceExpr::sphere(s.rank());
        int f = s.framed_directions();
        // Th of the rank-(d-f) structure over a connected base; base
        // connectivity is recorded but not used.
        std::string name = s.name();
        if (f == 1) name += "̃";
        else if (f > 1) name += "̃" + std::to_string(f);
        return SpaceExpr::susp(SpaceExpr::atom("Th(" + name + ")", s.rank() - f - 1), f);
    }
    case ThomStructure::Kind::Product: {
        std::vector<SpaceExpr> parts;
        for (const auto& f : s.factors()) parts.push_back(raw_thom_space(f));
        return make_smash(std::move(parts));
    }
    }
    return SpaceExpr::point();
}

} // namespace detail

/// Normalized Thom space of the pulled-back universal bundle. Rank-zero
/// structures are rejected.
inline SpaceExpr thom_space(const ThomStructure& s) {
    if (s.rank() <= 0) throw domain_error("rank 0 structures are not supported (codimension 0)");
    return normalize(detail::raw_thom_space(s));
}

} // namespace ptc
