#pragma once

/**
 * @file space.hpp
 * @brief Formal pointed spaces: the term type, its text grammar and
 *        structural connectivity.
 *
 * Grammar (bit-exact, used by the CLI and JSON output):
 *
 *     pt            the one-point space
 *     S<n>          the n-sphere, n >= 0
 *     A(<name>,<c>) an opaque space with connectivity c >= -1
 *     (e v e v ...) wedge sum
 *     (e ^ e ^ ...) smash product
 *     Susp(e)       reduced suspension
 *     Plus(e)       disjoint basepoint
 */

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptcalc/errors.hpp"

namespace ptc {

class SpaceExpr {
public:
    enum class Kind { Point, Sphere, Atom, Wedge, Smash, Susp, Plus };

    static SpaceExpr point() { return SpaceExpr(Kind::Point); }

    static SpaceExpr sphere(int n) {
        if (n < 0) throw std::invalid_argument("sphere dimension must be non-negative");
        SpaceExpr e(Kind::Sphere);
        e.value_ = n;
        return e;
    }

    static SpaceExpr atom(std::string name, int connectivity) {
        if (name.empty()) throw std::invalid_argument("atom name must be non-empty");
        if (connectivity < -1) throw std::invalid_argument("atom connectivity must be >= -1");
        SpaceExpr e(Kind::Atom);
        e.name_ = std::move(name);
        e.value_ = connectivity;
        return e;
    }

    static SpaceExpr wedge(std::vector<SpaceExpr> children) {
        return nary(Kind::Wedge, std::move(children));
    }

    static SpaceExpr smash(std::vector<SpaceExpr> children) {
        return nary(Kind::Smash, std::move(children));
    }

    static SpaceExpr susp(SpaceExpr inner) { return unary(Kind::Susp, std::move(inner)); }
    static SpaceExpr plus(SpaceExpr inner) { return unary(Kind::Plus, std::move(inner)); }

    /// Iterated suspension; `times == 0` returns `inner` unchanged.
    static SpaceExpr susp(SpaceExpr inner, int times) {
        for (int i = 0; i < times; ++i) inner = susp(std::move(inner));
        return inner;
    }

    Kind kind() const noexcept { return kind_; }
    bool is(Kind k) const noexcept { return kind_ == k; }

    int dimension() const noexcept { return value_; }          // Sphere
    int atom_connectivity() const noexcept { return value_; }  // Atom
    const std::string& name() const noexcept { return name_; } // Atom

    std::span<const SpaceExpr> children() const noexcept { return children_; }
    const SpaceExpr& inner() const { return children_.at(0); } // Susp, Plus

    bool operator==(const SpaceExpr&) const = default;

private:
    explicit SpaceExpr(Kind k) : kind_(k) {}

    static SpaceExpr nary(Kind k, std::vector<SpaceExpr> children) {
        if (children.size() < 2) throw std::invalid_argument("wedge/smash needs at least two children");
        SpaceExpr e(k);
        e.children_ = std::move(children);
        return e;
    }

    static SpaceExpr unary(Kind k, SpaceExpr inner) {
        SpaceExpr e(k);
        e.children_.push_back(std::move(inner));
        return e;
    }

    Kind kind_;
    int value_ = 0;
    std::string name_;
    std::vector<SpaceExpr> children_;
};

// ---------------------------------------------------------------------------
// Serialization

inline void write_space(std::string& out, const SpaceExpr& e) {
    using K = SpaceExpr::Kind;
    switch (e.kind()) {
    case K::Point: out += "pt"; return;
    case K::Sphere: out += "S" + std::to_string(e.dimension()); return;
    case K::Atom:
        out += "A(" + e.name() + "," + std::to_string(e.atom_connectivity()) + ")";
        return;
    case K::Wedge:
    case K::Smash: {
        const char* sep = e.is(K::Wedge) ? " v " : " ^ ";
        out += '(';
        bool first = true;
        for (const auto& c : e.children()) {
            if (!first) out += sep;
            first = false;
            write_space(out, c);
        }
        out += ')';
        return;
    }
    case K::Susp:
    case K::Plus:
        out += e.is(K::Susp) ? "Susp(" : "Plus(";
        write_space(out, e.inner());
        out += ')';
        return;
    }
}

inline std::string to_string(const SpaceExpr& e) {
    std::string s;
    write_space(s, e);
    return s;
}

namespace detail {

class SpaceParser {
public:
    explicit SpaceParser(std::string_view text) : text_(text) {}

    SpaceExpr parse_all() {
        SpaceExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error("space term: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                          std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok) {
        if (!consume(tok)) fail("expected '" + std::string(tok) + "'");
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected integer");
        std::string_view num = text_.substr(start, pos_ - start);
        if (num.size() > 9) fail("integer out of range");
        return std::stoi(std::string(num));
    }

    SpaceExpr parse_expr() {
        skip_ws();
        if (consume("(")) {
            std::vector<SpaceExpr> items;
            items.push_back(parse_expr());
            char op = 0;
            for (;;) {
                skip_ws();
                if (consume(")")) break;
                char next = 0;
                if (consume("v")) next = 'v';
                else if (consume("^")) next = '^';
                else fail("expected 'v', '^' or ')'");
                if (op != 0 && op != next) fail("mixed wedge and smash without parentheses");
                op = next;
                items.push_back(parse_expr());
            }
            if (items.size() == 1) return std::move(items.front());
            return op == 'v' ? SpaceExpr::wedge(std::move(items)) : SpaceExpr::smash(std::move(items));
        }
        if (consume("pt")) return SpaceExpr::point();
        if (consume("Susp(")) {
            SpaceExpr inner = parse_expr();
            expect(")");
            return SpaceExpr::susp(std::move(inner));
        }
        if (consume("Plus(")) {
            SpaceExpr inner = parse_expr();
            expect(")");
            return SpaceExpr::plus(std::move(inner));
        }
        if (consume("A(")) {
            // Names may contain balanced parentheses, e.g. A(Th(id),0).
            std::size_t start = pos_;
            int depth = 0;
            while (pos_ < text_.size()) {
                char c = text_[pos_];
                if (c == '(') ++depth;
                else if (c == ')') {
                    if (depth == 0) fail("unterminated atom name");
                    --depth;
                } else if (c == ',' && depth == 0) break;
                ++pos_;
            }
            if (pos_ >= text_.size()) fail("expected ',' in atom");
            std::string name(text_.substr(start, pos_ - start));
            if (name.empty()) fail("empty atom name");
            ++pos_;
            int conn = parse_int();
            if (conn < -1) fail("atom connectivity below -1");
            expect(")");
            return SpaceExpr::atom(std::move(name), conn);
        }
        if (consume("S")) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-') fail("negative sphere dimension");
            return SpaceExpr::sphere(parse_int());
        }
        fail("unexpected token");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline SpaceExpr parse_space(std::string_view text) {
    return detail::SpaceParser(text).parse_all();
}

// ---------------------------------------------------------------------------
// Connectivity

/// +infinity for contractible terms (the point).
inline constexpr int kInfiniteConnectivity = INT_MAX;

/// Structural connectivity: conn(S^n) = n-1, conn(A^B) = conn A + conn B + 1,
/// conn(Susp A) = conn A + 1, conn(A v B) = min, conn(pt) = inf, conn(X+) = -1.
inline int connectivity(const SpaceExpr& e) {
    using K = SpaceExpr::Kind;
    switch (e.kind()) {
    case K::Point: return kInfiniteConnectivity;
    case K::Sphere: return e.dimension() - 1;
    case K::Atom: return e.atom_connectivity();
    case K::Wedge: {
        int c = kInfiniteConnectivity;
        for (const auto& ch : e.children()) c = std::min(c, connectivity(ch));
        return c;
    }
    case K::Smash: {
        long long sum = -1;
        for (const auto& ch : e.children()) {
            int c = connectivity(ch);
            if (c == kInfiniteConnectivity) return kInfiniteConnectivity;
            sum += static_cast<long long>(c) + 1;
        }
        return sum >= kInfiniteConnectivity ? kInfiniteConnectivity - 1 : static_cast<int>(sum);
    }
    case K::Susp: {
        int c = connectivity(e.inner());
        return c == kInfiniteConnectivity ? c : c + 1;
    }
    case K::Plus: return -1;
    }
    return -1;
}

inline bool contains(const SpaceExpr& e, SpaceExpr::Kind k) {
    if (e.is(k)) return true;
    return std::ranges::any_of(e.children(), [k](const SpaceExpr& c) { return contains(c, k); });
}

} // namespace ptc
