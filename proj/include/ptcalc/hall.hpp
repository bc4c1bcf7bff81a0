#pragma once

/**
 * @file hall.hpp
 * @brief Systems of basic Whitehead products on g generators.
 *
 * Weight 1 holds the generators i1 < ... < ig. A product of weight w is a
 * bracket [a,b] with weight(a) + weight(b) = w, a < b, and, when b = [c,d],
 * c <= a. Each weight block is sorted by the ordering policy and then frozen
 * before the next weight is formed; every block compares greater than all
 * lower weights.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ptcalc/errors.hpp"
#include "ptcalc/rewrite.hpp"
#include "ptcalc/space.hpp"

namespace ptc {

struct HallLimits {
    int max_weight = 16;
    std::size_t max_products = 5'000'000;
};

class ProductSystem;
ProductSystem generate_system(int generators, int max_weight, HallLimits limits = {});

class BasicProduct {
public:
    static BasicProduct generator(int index, int generators) {
        if (index < 1 || index > generators) throw std::invalid_argument("generator index out of range");
        auto n = std::make_shared<Node>();
        n->generator = index;
        n->weight = 1;
        n->degree.assign(static_cast<std::size_t>(generators), 0);
        n->degree[static_cast<std::size_t>(index - 1)] = 1;
        n->text = "i" + std::to_string(index);
        return BasicProduct(std::move(n));
    }

    static BasicProduct bracket(const BasicProduct& a, const BasicProduct& b) {
        if (a.node_->degree.size() != b.node_->degree.size())
            throw std::invalid_argument("bracket of products over different generator counts");
        auto n = std::make_shared<Node>();
        n->left = a.node_;
        n->right = b.node_;
        n->weight = a.weight() + b.weight();
        n->degree = a.node_->degree;
        for (std::size_t i = 0; i < n->degree.size(); ++i) n->degree[i] += b.node_->degree[i];
        n->text = "[" + a.node_->text + "," + b.node_->text + "]";
        return BasicProduct(std::move(n));
    }

    bool is_generator() const noexcept { return node_->generator > 0; }
    int generator_index() const noexcept { return node_->generator; }
    BasicProduct left() const { return BasicProduct(node_->left); }
    BasicProduct right() const { return BasicProduct(node_->right); }

    int weight() const noexcept { return node_->weight; }
    const std::vector<int>& multidegree() const noexcept { return node_->degree; }
    int generators() const noexcept { return static_cast<int>(node_->degree.size()); }

    /// Position in the owning system, or -1 for a free-standing product.
    int ordinal() const noexcept { return node_->ordinal; }

    /// `[a,b]` with generators `i1..ig`.
    const std::string& str() const noexcept { return node_->text; }

    bool operator==(const BasicProduct& o) const { return str() == o.str(); }

private:
    friend class ProductSystem;
    friend ProductSystem generate_system(int, int, HallLimits);

    struct Node {
        int generator = 0;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
        int weight = 0;
        std::vector<int> degree;
        std::string text;
        int ordinal = -1;
    };

    explicit BasicProduct(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

class ProductSystem {
public:
    int generators() const noexcept { return generators_; }
    int max_weight() const noexcept { return max_weight_; }
    std::string_view order_policy() const noexcept { return "left-weight-then-string"; }

    /// All products in system order.
    const std::vector<BasicProduct>& products() const noexcept { return products_; }

    /// Products of exactly weight `w` (empty outside 1..max_weight).
    std::vector<BasicProduct> weight_block(int w) const {
        std::vector<BasicProduct> out;
        if (w < 1 || w > max_weight_) return out;
        auto lo = products_.begin() + static_cast<std::ptrdiff_t>(block_start_[static_cast<std::size_t>(w)]);
        auto hi = products_.begin() + static_cast<std::ptrdiff_t>(block_start_[static_cast<std::size_t>(w) + 1]);
        out.assign(lo, hi);
        return out;
    }

private:
    friend ProductSystem generate_system(int, int, HallLimits);

    int generators_ = 0;
    int max_weight_ = 0;
    std::vector<BasicProduct> products_;
    std::vector<std::size_t> block_start_; // block w is [block_start_[w], block_start_[w+1])
};

inline ProductSystem generate_system(int generators, int max_weight, HallLimits limits) {
    if (generators < 1) throw std::invalid_argument("need at least one generator");
    if (max_weight < 1) throw std::invalid_argument("max weight must be positive");
    if (max_weight > limits.max_weight)
        throw resource_error("max weight " + std::to_string(max_weight) + " exceeds cap " +
                             std::to_string(limits.max_weight));

    using Node = BasicProduct::Node;
    ProductSystem sys;
    sys.generators_ = generators;
    sys.max_weight_ = max_weight;
    sys.block_start_.assign(static_cast<std::size_t>(max_weight) + 2, 0);

    // Per-weight blocks of frozen, ordinal-stamped nodes.
    std::vector<std::vector<std::shared_ptr<Node>>> blocks(static_cast<std::size_t>(max_weight) + 1);
    int next_ordinal = 0;
    auto freeze = [&](int w) {
        auto& blk = blocks[static_cast<std::size_t>(w)];
        sys.block_start_[static_cast<std::size_t>(w)] = sys.products_.size();
        for (auto& n : blk) {
            n->ordinal = next_ordinal++;
            sys.products_.push_back(BasicProduct(n));
        }
        sys.block_start_[static_cast<std::size_t>(w) + 1] = sys.products_.size();
    };

    for (int i = 1; i <= generators; ++i) {
        auto g = BasicProduct::generator(i, generators);
        blocks[1].push_back(std::const_pointer_cast<Node>(g.node_));
    }
    freeze(1);

    for (int w = 2; w <= max_weight; ++w) {
        auto& blk = blocks[static_cast<std::size_t>(w)];
        for (int u = 1; u < w; ++u) {
            const auto& as = blocks[static_cast<std::size_t>(u)];
            const auto& bs = blocks[static_cast<std::size_t>(w - u)];
            for (const auto& a : as) {
                for (const auto& b : bs) {
                    if (!(a->ordinal < b->ordinal)) continue;
                    if (b->generator == 0 && !(b->left->ordinal <= a->ordinal)) continue;
                    auto n = std::make_shared<Node>();
                    n->left = a;
                    n->right = b;
                    n->weight = w;
                    n->degree = a->degree;
                    for (std::size_t i = 0; i < n->degree.size(); ++i) n->degree[i] += b->degree[i];
                    n->text = "[" + a->text + "," + b->text + "]";
                    blk.push_back(std::move(n));
                    if (sys.products_.size() + blk.size() > limits.max_products)
                        throw resource_error("basic product enumeration exceeds " +
                                             std::to_string(limits.max_products) + " products");
                }
            }
        }
        std::ranges::sort(blk, [](const std::shared_ptr<Node>& x, const std::shared_ptr<Node>& y) {
            if (x->left->weight != y->left->weight) return x->left->weight < y->left->weight;
            return x->text < y->text;
        });
        freeze(w);
    }
    return sys;
}

namespace detail {

inline int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

} // namespace detail

/// Dimension of the weight-w part of the free Lie algebra on g generators:
/// (1/w) * sum over d | w of mu(d) * g^(w/d).
inline std::int64_t witt_count(int g, int w) {
    if (g < 1 || w < 1) throw std::invalid_argument("witt_count needs g >= 1 and w >= 1");
    __int128 sum = 0;
    for (int d = 1; d <= w; ++d) {
        if (w % d != 0) continue;
        int mu = detail::moebius(d);
        if (mu == 0) continue;
        __int128 power = 1;
        for (int i = 0; i < w / d; ++i) {
            power *= g;
            if (power > (static_cast<__int128>(1) << 100)) throw std::overflow_error("witt_count overflow");
        }
        sum += mu * power;
    }
    return static_cast<std::int64_t>(sum / w);
}

/// Y_lambda: the normalized smash of multidegree(lambda)[i] copies of Y[i].
inline SpaceExpr smash_space(const BasicProduct& lambda, const std::vector<SpaceExpr>& ys) {
    if (static_cast<int>(ys.size()) != lambda.generators())
        throw std::invalid_argument("smash_space: expected one space per generator");
    if (lambda.is_generator()) return normalize(ys[static_cast<std::size_t>(lambda.generator_index() - 1)]);
    std::vector<SpaceExpr> factors;
    const auto& deg = lambda.multidegree();
    for (std::size_t i = 0; i < deg.size(); ++i)
        for (int k = 0; k < deg[i]; ++k) factors.push_back(ys[i]);
    return normalize(detail::make_smash(std::move(factors)));
}

} // namespace ptc
