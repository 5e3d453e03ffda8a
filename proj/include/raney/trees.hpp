#ifndef RANEY_TREES_HPP
#define RANEY_TREES_HPP

// k-ary trees, their w-labelings, and the bijection between
// (k,l)-threshold sequences and ordered (l+1)-tuples of k-ary trees.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "raney/error.hpp"
#include "raney/threshold.hpp"

namespace raney {

// An unlabeled k-ary tree stored as its preorder code: '1' for an internal
// node, '0' for a leaf. The code is self-delimiting, so structural equality
// (child order included) is string equality.
class KaryTree {
public:
    static KaryTree trivial(std::int64_t k) {
        detail::require_arity(k);
        return KaryTree(k, "0");
    }

    static KaryTree node(std::span<const KaryTree> children) {
        if (children.size() < 2)
            throw error(errc::invalid_parameter, "an internal node needs k >= 2 children");
        const std::int64_t k = static_cast<std::int64_t>(children.size());
        std::string code = "1";
        for (const auto& c : children) {
            if (c.k_ != k)
                throw error(errc::invalid_parameter, "child arity differs from parent arity");
            code += c.code_;
        }
        return KaryTree(k, std::move(code));
    }

    static KaryTree from_preorder(std::int64_t k, std::string code) {
        detail::require_arity(k);
        std::int64_t open = 1;
        for (std::size_t i = 0; i < code.size(); ++i) {
            if (open == 0)
                throw error(errc::invalid_parameter, "preorder code has trailing symbols");
            if (code[i] == '1')
                open += k - 1;
            else if (code[i] == '0')
                --open;
            else
                throw error(errc::invalid_parameter, "preorder code must contain only '0' and '1'");
        }
        if (open != 0)
            throw error(errc::invalid_parameter, "preorder code is incomplete");
        return KaryTree(k, std::move(code));
    }

    std::int64_t arity() const noexcept { return k_; }
    const std::string& preorder() const noexcept { return code_; }
    bool is_trivial() const noexcept { return code_.size() == 1; }
    std::int64_t internal_count() const { return std::count(code_.begin(), code_.end(), '1'); }
    std::int64_t node_count() const noexcept { return static_cast<std::int64_t>(code_.size()); }

    std::vector<KaryTree> children() const {
        std::vector<KaryTree> out;
        if (is_trivial())
            return out;
        std::size_t pos = 1;
        for (std::int64_t c = 0; c < k_; ++c) {
            const std::size_t end = subtree_end(pos);
            out.push_back(KaryTree(k_, code_.substr(pos, end - pos)));
            pos = end;
        }
        return out;
    }

    // Preorder positions of the nodes in breadth-first order.
    std::vector<std::size_t> breadth_first_order() const {
        std::vector<std::size_t> order;
        order.reserve(code_.size());
        order.push_back(0);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const std::size_t p = order[head];
            if (code_[p] != '1')
                continue;
            std::size_t child = p + 1;
            for (std::int64_t c = 0; c < k_; ++c) {
                order.push_back(child);
                child = subtree_end(child);
            }
        }
        return order;
    }

    friend bool operator==(const KaryTree&, const KaryTree&) = default;

private:
    KaryTree(std::int64_t k, std::string code) : k_(k), code_(std::move(code)) {}

    std::size_t subtree_end(std::size_t pos) const {
        std::int64_t open = 1;
        while (open > 0)
            open += code_[pos++] == '1' ? k_ - 1 : -1;
        return pos;
    }

    std::int64_t k_;
    std::string code_;
};

struct KaryTreeHash {
    std::size_t operator()(const KaryTree& t) const noexcept {
        return std::hash<std::string>{}(t.preorder()) ^ static_cast<std::size_t>(t.arity());
    }
};

// Labels of every node in preorder position, for the w-labeling: the
// breadth-first traversal reads w, w-1, ..., w-nk.
inline std::vector<std::int64_t> w_labels(const KaryTree& tree, std::int64_t w) {
    const auto order = tree.breadth_first_order();
    std::vector<std::int64_t> labels(order.size());
    for (std::size_t b = 0; b < order.size(); ++b)
        labels[order[b]] = w - static_cast<std::int64_t>(b);
    return labels;
}

// Internal-node labels of the w-labeled tree, in decreasing order.
inline std::vector<std::int64_t> internal_labels(const KaryTree& tree, std::int64_t w) {
    const auto order = tree.breadth_first_order();
    std::vector<std::int64_t> out;
    for (std::size_t b = 0; b < order.size(); ++b)
        if (tree.preorder()[order[b]] == '1')
            out.push_back(w - static_cast<std::int64_t>(b));
    return out;
}

// Builds the k-ary w-tree whose internal nodes carry exactly `labels`
// (strictly decreasing, first element w). The j-th label must satisfy
// labels[j] >= w - j*k (0-based j), otherwise that node does not exist.
inline KaryTree build_from_internal_labels(std::int64_t k, std::int64_t w, std::span<const std::int64_t> labels) {
    detail::require_arity(k);
    if (labels.empty() || labels.front() != w)
        throw error(errc::invalid_parameter, "internal labels must start with the root label w");
    for (std::size_t j = 1; j < labels.size(); ++j)
        if (labels[j] >= labels[j - 1])
            throw error(errc::not_increasing, "internal labels must be strictly decreasing",
                        static_cast<std::int64_t>(j + 1));
    for (std::size_t j = 0; j < labels.size(); ++j) {
        const std::int64_t lowest = w - static_cast<std::int64_t>(j) * k;
        if (labels[j] < lowest)
            throw error(errc::unreachable_label,
                        "label " + std::to_string(labels[j]) + " lies below the lowest node " + std::to_string(lowest),
                        static_cast<std::int64_t>(j + 1));
    }

    // Breadth-first flags: node b carries label w - b.
    const std::size_t total = labels.size() * static_cast<std::size_t>(k) + 1;
    std::vector<char> internal(total, 0);
    for (auto l : labels)
        internal[static_cast<std::size_t>(w - l)] = 1;
    std::vector<std::size_t> rank(total, 0);
    for (std::size_t b = 1; b < total; ++b)
        rank[b] = rank[b - 1] + static_cast<std::size_t>(internal[b - 1]);

    // Children of the r-th internal node (breadth-first rank r) sit at
    // positions 1 + r*k .. r*k + k.
    std::string code;
    code.reserve(total);
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
        const std::size_t b = stack.back();
        stack.pop_back();
        code.push_back(internal[b] ? '1' : '0');
        if (!internal[b])
            continue;
        const std::size_t first = 1 + rank[b] * static_cast<std::size_t>(k);
        for (std::int64_t c = k - 1; c >= 0; --c)
            stack.push_back(first + static_cast<std::size_t>(c));
    }
    return KaryTree::from_preorder(k, std::move(code));
}

// Ordered (l+1)-tuple of k-ary trees; trivial entries allowed.
struct TreeTuple {
    std::int64_t k = 2;
    std::vector<KaryTree> trees;

    std::int64_t l() const noexcept { return static_cast<std::int64_t>(trees.size()) - 1; }
    std::int64_t internal_count() const {
        std::int64_t total = 0;
        for (const auto& t : trees)
            total += t.internal_count();
        return total;
    }

    friend bool operator==(const TreeTuple&, const TreeTuple&) = default;
};

struct TreeTupleHash {
    std::size_t operator()(const TreeTuple& t) const noexcept {
        std::string code;
        for (const auto& tree : t.trees)
            code += tree.preorder();
        return std::hash<std::string>{}(code) ^ (static_cast<std::size_t>(t.k) << 1);
    }
};

namespace detail {

// One step of the recursive split: the top segment s_{i+1}..s_m of the
// current prefix, its root label, and the l_p for which the prefix is proper.
struct ForestPiece {
    std::vector<std::int64_t> labels; // decreasing
    std::int64_t root;
    std::int64_t proper_l;
};

inline std::vector<ForestPiece> split_forest(std::span<const std::int64_t> values, std::int64_t k) {
    std::vector<ForestPiece> pieces;
    auto rest = values;
    while (!rest.empty()) {
        const auto cut = static_cast<std::size_t>(cut_index(rest, k));
        ForestPiece piece;
        piece.root = rest.back();
        piece.proper_l = rest.back() - k * static_cast<std::int64_t>(rest.size());
        piece.labels.assign(rest.rbegin(), rest.rend() - static_cast<std::ptrdiff_t>(cut));
        pieces.push_back(std::move(piece));
        rest = rest.first(cut);
    }
    return pieces;
}

inline void require_unshifted(const ThresholdSequence& seq) {
    if (seq.params().d != 0)
        throw error(errc::invalid_parameter, "the tree bijection needs offset 0; shift the sequence first");
}

} // namespace detail

// Trees A^1, A^2, ..., A^t in order of computation.
inline std::vector<KaryTree> forest_of(const ThresholdSequence& seq) {
    detail::require_unshifted(seq);
    const std::int64_t k = seq.params().k;
    std::vector<KaryTree> out;
    for (const auto& piece : detail::split_forest(seq.values(), k))
        out.push_back(build_from_internal_labels(k, piece.root, piece.labels));
    return out;
}

inline TreeTuple tuple_of(const ThresholdSequence& seq) {
    detail::require_unshifted(seq);
    const auto& p = seq.params();
    TreeTuple tuple{p.k, std::vector<KaryTree>(static_cast<std::size_t>(p.l + 1), KaryTree::trivial(p.k))};
    std::int64_t previous_l = p.l + 1;
    for (const auto& piece : detail::split_forest(seq.values(), p.k)) {
        if (piece.proper_l < 0 || piece.proper_l >= previous_l)
            throw std::logic_error("residual prefixes must be proper for strictly decreasing l");
        previous_l = piece.proper_l;
        tuple.trees[static_cast<std::size_t>(piece.proper_l)] = build_from_internal_labels(p.k, piece.root, piece.labels);
    }
    return tuple;
}

// Inverse of tuple_of. Non-trivial entries are read right to left; the p-th
// one is labeled with root w_p = k(n - r_{p-1}) + y_p - 1 where y_p is its
// 1-based position and r_{p-1} the internal nodes already consumed.
inline ThresholdSequence sequence_of_tuple(const TreeTuple& tuple, std::int64_t n) {
    detail::require_arity(tuple.k);
    if (tuple.trees.empty())
        throw error(errc::invalid_parameter, "a tuple needs at least one entry");
    for (const auto& t : tuple.trees)
        if (t.arity() != tuple.k)
            throw error(errc::invalid_parameter, "tuple entry arity differs from k");
    const std::int64_t total = tuple.internal_count();
    if (total == 0)
        throw error(errc::empty_tuple, "all entries are trivial; no sequence of length 0 exists");
    if (total != n)
        throw error(errc::invalid_parameter,
                    "tuple has " + std::to_string(total) + " internal nodes, expected " + std::to_string(n));

    std::vector<std::vector<std::int64_t>> blocks; // I_1, I_2, ...
    std::int64_t consumed = 0;
    for (std::int64_t y = tuple.l() + 1; y >= 1; --y) {
        const auto& tree = tuple.trees[static_cast<std::size_t>(y - 1)];
        if (tree.is_trivial())
            continue;
        const std::int64_t w = tuple.k * (n - consumed) + y - 1;
        auto labels = internal_labels(tree, w);
        std::reverse(labels.begin(), labels.end());
        consumed += static_cast<std::int64_t>(labels.size());
        blocks.push_back(std::move(labels));
    }
    std::vector<std::int64_t> values;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
        values.insert(values.end(), it->begin(), it->end());
    return validate(std::move(values), ThresholdParams{tuple.k, tuple.l(), n, 0});
}

inline ThresholdSequence sequence_of_tuple(const TreeTuple& tuple) {
    return sequence_of_tuple(tuple, tuple.internal_count());
}

namespace detail {

// Calls fn(parts) for each composition of `total` into `parts.size()`
// non-negative parts, lexicographically.
inline void for_each_composition(std::int64_t total, std::vector<std::int64_t>& parts, std::size_t idx,
                                 const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    if (idx + 1 == parts.size()) {
        parts[idx] = total;
        fn(parts);
        return;
    }
    for (std::int64_t j = 0; j <= total; ++j) {
        parts[idx] = j;
        for_each_composition(total - j, parts, idx + 1, fn);
    }
}

// Appends every k-ary tree with n internal nodes to `code`, calling `done`
// once per tree, and restores `code` afterwards.
inline void generate_tree(std::int64_t k, std::int64_t n, std::string& code, const std::function<void()>& done);

inline void generate_sequence_of_trees(std::int64_t k, const std::vector<std::int64_t>& sizes, std::size_t idx,
                                       std::string& code, const std::function<void()>& done) {
    if (idx == sizes.size()) {
        done();
        return;
    }
    generate_tree(k, sizes[idx], code, [&] { generate_sequence_of_trees(k, sizes, idx + 1, code, done); });
}

inline void generate_tree(std::int64_t k, std::int64_t n, std::string& code, const std::function<void()>& done) {
    if (n == 0) {
        code.push_back('0');
        done();
        code.pop_back();
        return;
    }
    code.push_back('1');
    std::vector<std::int64_t> parts(static_cast<std::size_t>(k));
    for_each_composition(n - 1, parts, 0, [&](const std::vector<std::int64_t>& sizes) {
        generate_sequence_of_trees(k, sizes, 0, code, done);
    });
    code.pop_back();
}

} // namespace detail

// Every k-ary tree with n internal nodes, once each. Child internal-count
// vectors are visited lexicographically at every node.
template <class Visitor>
std::uint64_t enumerate_trees(std::int64_t k, std::int64_t n, Visitor&& visit, std::uint64_t budget = default_budget) {
    detail::require_arity(k);
    detail::require_nonneg(n, "n");
    detail::budget_counter counter(budget);
    std::string code;
    detail::generate_tree(k, n, code, [&] {
        counter.charge();
        const auto tree = KaryTree::from_preorder(k, code);
        visit(tree);
    });
    return counter.used();
}

// Every ordered r-tuple of k-ary trees with n internal nodes in total.
template <class Visitor>
std::uint64_t enumerate_tuples(std::int64_t k, std::int64_t r, std::int64_t n, Visitor&& visit,
                               std::uint64_t budget = default_budget) {
    detail::require_arity(k);
    detail::require_nonneg(n, "n");
    if (r < 1)
        throw error(errc::invalid_parameter, "r must be >= 1, got " + std::to_string(r));
    detail::budget_counter counter(budget);
    std::string code;
    std::vector<std::int64_t> parts(static_cast<std::size_t>(r));
    detail::for_each_composition(n, parts, 0, [&](const std::vector<std::int64_t>& sizes) {
        detail::generate_sequence_of_trees(k, sizes, 0, code, [&] {
            counter.charge();
            TreeTuple tuple{k, {}};
            std::size_t pos = 0;
            for (std::size_t e = 0; e < sizes.size(); ++e) {
                // Each entry with j internal nodes occupies j*k + 1 symbols.
                const std::size_t len = static_cast<std::size_t>(sizes[e] * k + 1);
                tuple.trees.push_back(KaryTree::from_preorder(k, code.substr(pos, len)));
                pos += len;
            }
            visit(static_cast<const TreeTuple&>(tuple));
        });
    });
    return counter.used();
}

} // namespace raney

#endif // RANEY_TREES_HPP
