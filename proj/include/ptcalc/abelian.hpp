#pragma once

/**
 * @file abelian.hpp
 * @brief Finitely generated abelian groups in invariant-factor form, with
 *        symbolic placeholders for groups the calculator cannot evaluate.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ptc {

/// Z^rank (+) Z/t1 (+) ... (+) Z/tk with t1 | t2 | ... | tk, all ti >= 2.
struct KnownGroup {
    int rank = 0;
    std::vector<std::int64_t> torsion;

    bool is_zero() const noexcept { return rank == 0 && torsion.empty(); }
    bool operator==(const KnownGroup&) const = default;
};

/// An unevaluated group such as "π_9(S^4)".
struct SymbolicGroup {
    std::string label;
    bool operator==(const SymbolicGroup&) const = default;
};

using GroupTerm = std::variant<KnownGroup, SymbolicGroup>;

class FgAbelianGroup {
public:
    FgAbelianGroup() = default; // zero group
    FgAbelianGroup(KnownGroup k) : terms_{std::move(k)} {}
    FgAbelianGroup(SymbolicGroup s) : terms_{std::move(s)} {}

    static FgAbelianGroup zero() { return {}; }
    static FgAbelianGroup integers(int rank = 1) { return KnownGroup{rank, {}}; }
    static FgAbelianGroup symbolic(std::string label) { return SymbolicGroup{std::move(label)}; }

    bool is_known() const noexcept {
        return terms_.size() == 1 && std::holds_alternative<KnownGroup>(terms_.front());
    }
    bool is_symbolic() const noexcept {
        return terms_.size() == 1 && std::holds_alternative<SymbolicGroup>(terms_.front());
    }
    bool is_symbolic_sum() const noexcept { return terms_.size() > 1; }
    bool is_zero() const noexcept { return is_known() && known().is_zero(); }

    const KnownGroup& known() const { return std::get<KnownGroup>(terms_.at(0)); }
    const std::string& label() const { return std::get<SymbolicGroup>(terms_.at(0)).label; }

    /// Summands in order; a single entry unless this is a symbolic sum.
    const std::vector<GroupTerm>& terms() const noexcept { return terms_; }

    static FgAbelianGroup symbolic_sum(std::vector<GroupTerm> terms) {
        FgAbelianGroup g;
        g.terms_ = std::move(terms);
        if (g.terms_.empty()) g.terms_.emplace_back(KnownGroup{});
        return g;
    }

    bool operator==(const FgAbelianGroup&) const = default;

private:
    std::vector<GroupTerm> terms_{KnownGroup{}};
};

namespace detail {

inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

} // namespace detail

/// Invariant-factor normal form. Torsion goes through its primary
/// decomposition and is regrouped into a divisibility chain.
inline KnownGroup normal_form(int rank, const std::vector<std::int64_t>& torsion) {
    if (rank < 0) throw std::invalid_argument("rank must be non-negative");
    std::map<std::int64_t, std::vector<std::int64_t>> prime_powers;
    for (std::int64_t t : torsion) {
        if (t < 1) throw std::invalid_argument("torsion orders must be positive");
        for (auto [p, e] : detail::factorize(t)) {
            std::int64_t q = 1;
            for (int i = 0; i < e; ++i) q *= p;
            prime_powers[p].push_back(q);
        }
    }
    std::size_t chain = 0;
    for (auto& [p, qs] : prime_powers) {
        std::ranges::sort(qs, std::greater<>());
        chain = std::max(chain, qs.size());
    }
    // factors[0] is the largest invariant factor.
    std::vector<std::int64_t> factors(chain, 1);
    for (const auto& [p, qs] : prime_powers)
        for (std::size_t i = 0; i < qs.size(); ++i) factors[i] *= qs[i];
    std::ranges::reverse(factors);
    return KnownGroup{rank, std::move(factors)};
}

inline KnownGroup normal_form(const KnownGroup& g) { return normal_form(g.rank, g.torsion); }

inline FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_known() && b.is_known()) {
        std::vector<std::int64_t> t = a.known().torsion;
        t.insert(t.end(), b.known().torsion.begin(), b.known().torsion.end());
        return normal_form(a.known().rank + b.known().rank, t);
    }
    std::vector<GroupTerm> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return FgAbelianGroup::symbolic_sum(std::move(terms));
}

inline FgAbelianGroup direct_sum(const std::vector<FgAbelianGroup>& gs) {
    FgAbelianGroup acc;
    for (const auto& g : gs) acc = direct_sum(acc, g);
    return acc;
}

inline std::string render(const KnownGroup& g) {
    std::string out;
    auto add = [&out](const std::string& part) {
        if (!out.empty()) out += " (+) ";
        out += part;
    };
    if (g.rank == 1) add("Z");
    else if (g.rank > 1) add("Z^" + std::to_string(g.rank));
    for (auto t : g.torsion) add("Z/" + std::to_string(t));
    return out.empty() ? "0" : out;
}

/// `Z^r (+) Z/t1 (+) ...`, `0` for the zero group; symbolic terms by label.
inline std::string render(const FgAbelianGroup& g) {
    std::string out;
    for (const auto& term : g.terms()) {
        if (!out.empty()) out += " (+) ";
        if (auto k = std::get_if<KnownGroup>(&term)) out += render(*k);
        else out += std::get<SymbolicGroup>(term).label;
    }
    return out;
}

} // namespace ptc
