#ifndef RANEY_IO_HPP
#define RANEY_IO_HPP

// Text encodings: JSON for sequences, trees, tuples and paths; CSV value
// lists; DOT export of trees; ASCII rendering of paths.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "raney/ballot.hpp"
#include "raney/error.hpp"
#include "raney/paths.hpp"
#include "raney/threshold.hpp"
#include "raney/trees.hpp"

namespace raney {

using json = nlohmann::json;

namespace detail {

inline std::int64_t json_int(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
        throw error(errc::invalid_parameter, std::string("expected integer field \"") + key + "\"");
    return j.at(key).get<std::int64_t>();
}

inline std::vector<std::int64_t> json_int_list(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
        throw error(errc::invalid_parameter, std::string("expected array field \"") + key + "\"");
    std::vector<std::int64_t> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number_integer())
            throw error(errc::invalid_parameter, std::string("non-integer entry in \"") + key + "\"");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

} // namespace detail

inline json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw error(errc::invalid_parameter, std::string("malformed JSON: ") + e.what());
    }
}

// {"k":..,"l":..,"n":..,"d":..,"values":[...]}
inline json to_json(const ThresholdSequence& seq) {
    const auto& p = seq.params();
    return json{{"k", p.k}, {"l", p.l}, {"n", p.n}, {"d", p.d},
                {"values", std::vector<std::int64_t>(seq.values().begin(), seq.values().end())}};
}

inline ThresholdSequence sequence_from_json(const json& j) {
    ThresholdParams p{detail::json_int(j, "k"), detail::json_int(j, "l"), detail::json_int(j, "n"), 0};
    if (j.contains("d"))
        p.d = detail::json_int(j, "d");
    return validate(detail::json_int_list(j, "values"), p);
}

// Leaf is null; an internal node is the array of its k children.
inline json to_json(const KaryTree& tree) {
    if (tree.is_trivial())
        return nullptr;
    json arr = json::array();
    for (const auto& c : tree.children())
        arr.push_back(to_json(c));
    return arr;
}

inline KaryTree tree_from_json(const json& j, std::int64_t k) {
    detail::require_arity(k);
    if (j.is_null())
        return KaryTree::trivial(k);
    if (!j.is_array() || static_cast<std::int64_t>(j.size()) != k)
        throw error(errc::invalid_parameter, "internal node must be an array of exactly " + std::to_string(k) +
                                                 " children, got " + j.dump());
    std::vector<KaryTree> children;
    for (const auto& c : j)
        children.push_back(tree_from_json(c, k));
    return KaryTree::node(children);
}

inline json to_json(const TreeTuple& tuple) {
    json arr = json::array();
    for (const auto& t : tuple.trees)
        arr.push_back(to_json(t));
    return arr;
}

inline TreeTuple tuple_from_json(const json& j, std::int64_t k) {
    if (!j.is_array() || j.empty())
        throw error(errc::invalid_parameter, "a tuple is a non-empty array of trees");
    TreeTuple tuple{k, {}};
    for (const auto& t : j)
        tuple.trees.push_back(tree_from_json(t, k));
    return tuple;
}

// {"k":..,"rises":[...]}
inline json to_json(const ExtMotzkinPath& path) {
    return json{{"k", path.arity()},
                {"rises", std::vector<std::int64_t>(path.rises().begin(), path.rises().end())}};
}

inline ExtMotzkinPath path_from_json(const json& j) {
    return ExtMotzkinPath::make(detail::json_int(j, "k"), detail::json_int_list(j, "rises"));
}

inline json to_json(const BallotWord& word) { return json{{"k", word.k}, {"word", word.letters}}; }

inline std::string to_csv(std::span<const std::int64_t> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

inline std::vector<std::int64_t> parse_csv_ints(std::string_view text) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string field(text.substr(pos, comma - pos));
        const auto first = field.find_first_not_of(" \t");
        const auto last = field.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw error(errc::invalid_parameter, "empty field in integer list");
        field = field.substr(first, last - first + 1);
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != field.size())
            throw error(errc::invalid_parameter, "not an integer: \"" + field + "\"");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

// Graphviz digraph. With a root label w, nodes show their w-labeling.
inline std::string to_dot(const KaryTree& tree, std::optional<std::int64_t> w = std::nullopt,
                          std::string_view name = "tree") {
    std::ostringstream out;
    const auto& code = tree.preorder();
    std::vector<std::int64_t> labels;
    if (w)
        labels = w_labels(tree, *w);
    out << "digraph " << name << " {\n";
    for (std::size_t p = 0; p < code.size(); ++p) {
        out << "  n" << p << " [shape=" << (code[p] == '1' ? "circle" : "box");
        if (w)
            out << ", label=\"" << labels[p] << "\"";
        else
            out << ", label=\"\"";
        out << "];\n";
    }
    // Preorder walk with an explicit stack of (node, children still to place).
    std::vector<std::pair<std::size_t, std::int64_t>> open;
    for (std::size_t p = 0; p < code.size(); ++p) {
        if (!open.empty()) {
            out << "  n" << open.back().first << " -> n" << p << ";\n";
            if (--open.back().second == 0)
                open.pop_back();
        }
        if (code[p] == '1')
            open.emplace_back(p, tree.arity());
    }
    out << "}\n";
    return out.str();
}

// One column per lattice point x = 0..n, '*' at (x, y_x), top row first.
inline std::string render_ascii(const ExtMotzkinPath& path) {
    std::vector<std::int64_t> ys{0};
    for (auto y : path.heights())
        ys.push_back(y);
    const std::int64_t top = *std::max_element(ys.begin(), ys.end());
    std::string out;
    for (std::int64_t row = top; row >= 0; --row) {
        std::string line(ys.size(), row == 0 ? '-' : ' ');
        for (std::size_t x = 0; x < ys.size(); ++x)
            if (ys[x] == row)
                line[x] = '*';
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace raney

#endif // RANEY_IO_HPP
