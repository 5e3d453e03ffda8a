#ifndef RANEY_TESTS_ORACLES_HPP
#define RANEY_TESTS_ORACLES_HPP

// Brute-force oracles for the unit tests. None of these call into the
// library's counting or enumeration code.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using big = boost::multiprecision::cpp_int;

// Pascal's rule, row by row.
inline big pascal(std::int64_t n, std::int64_t j) {
    if (j < 0 || j > n)
        return 0;
    std::vector<big> row{1};
    for (std::int64_t r = 1; r <= n; ++r) {
        std::vector<big> next(static_cast<std::size_t>(r) + 1, 1);
        for (std::int64_t c = 1; c < r; ++c)
            next[static_cast<std::size_t>(c)] = row[static_cast<std::size_t>(c - 1)] + row[static_cast<std::size_t>(c)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(j)];
}

// Splits `code` into `parts` consecutive k-ary preorder codes; false if it
// does not parse exactly.
inline bool parses_as_forest(const std::string& code, std::int64_t k, std::int64_t parts) {
    std::size_t pos = 0;
    for (std::int64_t p = 0; p < parts; ++p) {
        std::int64_t open = 1;
        while (open > 0) {
            if (pos == code.size())
                return false;
            open += code[pos++] == '1' ? k - 1 : -1;
        }
    }
    return pos == code.size();
}

// Every 0/1 string of length nk + r with n ones that reads as r trees.
inline std::set<std::string> forest_codes(std::int64_t k, std::int64_t r, std::int64_t n) {
    std::set<std::string> out;
    const std::int64_t len = n * k + r;
    std::string code(static_cast<std::size_t>(len), '0');
    for (std::int64_t i = 0; i < n; ++i)
        code[static_cast<std::size_t>(i)] = '1';
    std::sort(code.begin(), code.end());
    do {
        if (parses_as_forest(code, k, r))
            out.insert(code);
    } while (std::next_permutation(code.begin(), code.end()));
    return out;
}

// Classic Motzkin paths of length n returning to 0, by DFS over {-1,0,1}.
inline std::int64_t classic_motzkin_paths(std::int64_t n, std::int64_t y = 0) {
    if (y < 0 || y > n)
        return 0;
    if (n == 0)
        return y == 0 ? 1 : 0;
    return classic_motzkin_paths(n - 1, y - 1) + classic_motzkin_paths(n - 1, y) + classic_motzkin_paths(n - 1, y + 1);
}

// All (k,l)-threshold sequences with offset d, from nested loops over all
// n-subsets of the value range.
inline void subsets(std::int64_t lo, std::int64_t hi, std::int64_t n, std::vector<std::int64_t>& cur,
                    std::vector<std::vector<std::int64_t>>& out) {
    if (static_cast<std::int64_t>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
        cur.push_back(v);
        subsets(v + 1, hi, n, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::int64_t>> threshold_sequences(std::int64_t k, std::int64_t l, std::int64_t n,
                                                                  std::int64_t d = 0) {
    std::vector<std::vector<std::int64_t>> all, out;
    std::vector<std::int64_t> cur;
    subsets(k + d, k * n + l + d, n, cur, all);
    for (auto& s : all) {
        bool ok = true;
        for (std::int64_t i = 0; i < n; ++i)
            ok = ok && s[static_cast<std::size_t>(i)] >= k * (i + 1) + d;
        if (ok)
            out.push_back(s);
    }
    return out;
}

} // namespace oracle

#endif // RANEY_TESTS_ORACLES_HPP
