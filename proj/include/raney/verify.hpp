#ifndef RANEY_VERIFY_HPP
#define RANEY_VERIFY_HPP

// Independent oracles and identity suites. The oracles here deliberately use
// other algorithms than the modules they check: subset filtering and a
// transfer-matrix count instead of backtracking, convolutions instead of
// closed forms.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "raney/ballot.hpp"
#include "raney/error.hpp"
#include "raney/exact.hpp"
#include "raney/io.hpp"
#include "raney/paths.hpp"
#include "raney/threshold.hpp"
#include "raney/trees.hpp"

namespace raney {

struct VerifyCell {
    std::string params;
    ExactInt expected;
    ExactInt observed;
    bool pass = false;
    std::string detail; // first counterexample, if any
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCell> cells;
    std::chrono::duration<double> elapsed{0};

    bool passed() const {
        for (const auto& c : cells)
            if (!c.pass)
                return false;
        return true;
    }

    std::size_t failures() const {
        std::size_t f = 0;
        for (const auto& c : cells)
            f += c.pass ? 0 : 1;
        return f;
    }

    void add(std::string params, ExactInt expected, ExactInt observed, std::string detail = {}) {
        const bool pass = expected == observed && detail.empty();
        cells.push_back({std::move(params), std::move(expected), std::move(observed), pass, std::move(detail)});
    }

    void merge(const VerifyReport& other) {
        for (const auto& c : other.cells)
            cells.push_back({other.suite + " " + c.params, c.expected, c.observed, c.pass, c.detail});
        elapsed += other.elapsed;
    }
};

// Counts are emitted as decimal strings; they overflow JSON numbers.
inline json to_json(const VerifyReport& report) {
    json cells = json::array();
    for (const auto& c : report.cells) {
        json cell{{"params", c.params}, {"expected", c.expected.str()}, {"observed", c.observed.str()}, {"pass", c.pass}};
        if (!c.detail.empty())
            cell["detail"] = c.detail;
        cells.push_back(std::move(cell));
    }
    return json{{"suite", report.suite},
                {"pass", report.passed()},
                {"failures", report.failures()},
                {"elapsed_seconds", report.elapsed.count()},
                {"cells", std::move(cells)}};
}

namespace detail {

class stopwatch {
public:
    explicit stopwatch(VerifyReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
    ~stopwatch() { report_.elapsed = std::chrono::steady_clock::now() - start_; }

private:
    VerifyReport& report_;
    std::chrono::steady_clock::time_point start_;
};

inline std::string cell_name(std::initializer_list<std::pair<const char*, std::int64_t>> kv) {
    std::string out;
    for (const auto& [key, value] : kv) {
        if (!out.empty())
            out += ' ';
        out += key;
        out += '=';
        out += std::to_string(value);
    }
    return out;
}

} // namespace detail

// Scans every n-subset of [k, kn+l] in increasing order and calls
// visit(values) for those with s_i >= k*i. Returns the number visited.
template <class Visitor>
std::uint64_t oracle_visit(std::int64_t k, std::int64_t l, std::int64_t n, Visitor&& visit,
                           std::uint64_t budget = default_budget) {
    check_params(ThresholdParams{k, l, n, 0});
    const std::int64_t hi = k * n + l;
    detail::budget_counter counter(budget);
    const auto sz = static_cast<std::size_t>(n);
    std::vector<std::int64_t> pick(sz);
    for (std::size_t i = 0; i < sz; ++i)
        pick[i] = k + static_cast<std::int64_t>(i);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < sz && ok; ++i)
            ok = pick[i] >= k * static_cast<std::int64_t>(i + 1);
        if (ok) {
            counter.charge();
            visit(static_cast<const std::vector<std::int64_t>&>(pick));
        }
        // Next combination in lexicographic order.
        std::size_t j = sz;
        while (j > 0 && pick[j - 1] == hi - static_cast<std::int64_t>(sz - j))
            --j;
        if (j == 0)
            break;
        ++pick[j - 1];
        for (std::size_t t = j; t < sz; ++t)
            pick[t] = pick[t - 1] + 1;
    }
    return counter.used();
}

struct OracleSequences {
    ExactInt count;
    std::vector<std::vector<std::int64_t>> sequences; // lexicographic
};

inline OracleSequences oracle_sequences(std::int64_t k, std::int64_t l, std::int64_t n,
                                        std::uint64_t budget = default_budget) {
    OracleSequences out;
    out.count = oracle_visit(k, l, n, [&](const std::vector<std::int64_t>& s) { out.sequences.push_back(s); },
                             budget);
    return out;
}

namespace detail {

// Order-independent fingerprint of a set of value lists.
inline std::uint64_t fingerprint(std::span<const std::int64_t> values) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto v : values) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return h ^ (h >> 33);
}

} // namespace detail

// Transfer count: ways[v] = number of valid prefixes of length i ending at v.
inline ExactInt oracle_count_transfer(std::int64_t k, std::int64_t l, std::int64_t n) {
    check_params(ThresholdParams{k, l, n, 0});
    const std::int64_t hi = k * n + l;
    std::vector<ExactInt> ways(static_cast<std::size_t>(hi + 1), 0);
    for (std::int64_t v = k; v <= hi; ++v)
        ways[static_cast<std::size_t>(v)] = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        std::vector<ExactInt> next(ways.size(), 0);
        ExactInt below = 0; // sum of ways[u] for u < v
        for (std::int64_t v = 0; v <= hi; ++v) {
            if (v >= k * i)
                next[static_cast<std::size_t>(v)] = below;
            below += ways[static_cast<std::size_t>(v)];
        }
        ways = std::move(next);
    }
    ExactInt total = 0;
    for (const auto& w : ways)
        total += w;
    return total;
}

// a_n, b_n for n = 0..n_max from the left-to-right recurrences (seeded with
// a_1 = 1, b_1 = 2; the recurrences hold from n = 2 on).
inline std::pair<std::vector<ExactInt>, std::vector<ExactInt>> ternary_left_to_right(std::int64_t n_max) {
    std::vector<ExactInt> a{1, 1}, b{1, 2};
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const auto un = static_cast<std::size_t>(n);
        ExactInt an = 3 * a[un - 1];
        ExactInt bn = 3 * b[un - 1] + a[un - 1];
        for (std::size_t h = 1; h + 2 <= un; ++h) {
            an += (a[h] + b[h]) * a[un - h - 1];
            bn += (a[h] + b[h]) * b[un - h - 1];
        }
        a.push_back(an);
        b.push_back(bn);
    }
    a.resize(static_cast<std::size_t>(n_max) + 1);
    b.resize(static_cast<std::size_t>(n_max) + 1);
    return {a, b};
}

// a_n = sum_{h<n} a_h b_{n-1-h}, b_n = sum_{h<=n} a_h a_{n-h}.
inline std::pair<std::vector<ExactInt>, std::vector<ExactInt>> ternary_right_to_left(std::int64_t n_max) {
    std::vector<ExactInt> a{1}, b{1};
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const auto un = static_cast<std::size_t>(n);
        ExactInt an = 0;
        for (std::size_t h = 0; h < un; ++h)
            an += a[h] * b[un - 1 - h];
        a.push_back(an);
        ExactInt bn = 0;
        for (std::size_t h = 0; h <= un; ++h)
            bn += a[h] * a[un - h];
        b.push_back(bn);
    }
    return {a, b};
}

// a_n (simple) and b_n (double 3-threshold counts): recurrences, the
// convolution forms with their intermediate expressions, closed forms,
// a transfer count, and subset filtering for n <= oracle_n_max.
inline VerifyReport check_ternary_recurrences(std::int64_t n_max, std::int64_t oracle_n_max = 7) {
    if (n_max < 2)
        throw error(errc::invalid_parameter, "n_max must be >= 2");
    VerifyReport report{"ternary-recurrences", {}, {}};
    detail::stopwatch timer(report);
    const auto [a_lr, b_lr] = ternary_left_to_right(n_max);
    const auto [a_rl, b_rl] = ternary_right_to_left(n_max);
    report.add("a_0 convention", 1, a_lr[0]);
    report.add("b_0 convention", 1, b_lr[0]);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const auto un = static_cast<std::size_t>(n);
        const ExactInt t = fuss_catalan(3, n);
        const ExactInt u = raney_number(3, 2, n);
        const std::string tag = "n=" + std::to_string(n);
        report.add("a recurrence " + tag, t, a_lr[un]);
        report.add("a convolution " + tag, t, a_rl[un]);
        report.add("b recurrence " + tag, u, b_lr[un]);
        report.add("b convolution " + tag, u, b_rl[un]);
        report.add("a transfer-count " + tag, t, oracle_count_transfer(3, 0, n));
        report.add("b transfer-count " + tag, u, oracle_count_transfer(3, 1, n));
        if (n >= 2) {
            ExactInt a_mid = b_lr[un - 1] + a_lr[un - 1];
            for (std::size_t h = 1; h + 2 <= un; ++h)
                a_mid += a_lr[h] * b_lr[un - 1 - h];
            report.add("a intermediate form " + tag, t, a_mid);
            ExactInt b_mid = 2 * a_lr[un];
            for (std::size_t h = 1; h + 1 <= un; ++h)
                b_mid += a_lr[h] * a_lr[un - h];
            report.add("b intermediate form " + tag, u, b_mid);
        }
        if (n <= oracle_n_max) {
            report.add("a subset-filter " + tag, t, oracle_visit(3, 0, n, [](const auto&) {}));
            report.add("b subset-filter " + tag, u, oracle_visit(3, 1, n, [](const auto&) {}));
        }
    }
    return report;
}

// b_n - a_n four ways, plus the 4-tuple count R_{n-1}^{(3,4)}.
inline VerifyReport check_ternary_difference(std::int64_t n_max) {
    if (n_max < 1)
        throw error(errc::invalid_parameter, "n_max must be >= 1");
    VerifyReport report{"proper-double-count", {}, {}};
    detail::stopwatch timer(report);
    const auto [a, b] = ternary_right_to_left(n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const auto un = static_cast<std::size_t>(n);
        const ExactInt diff = b[un] - a[un];
        ExactInt sum_aa = 0, sum_bb = 0;
        for (std::size_t h = 0; h < un; ++h) {
            sum_aa += a[h] * a[un - h];
            sum_bb += b[h] * b[un - h - 1];
        }
        const ExactInt closed = detail::exact_div(2 * binomial(3 * n, n - 1), ExactInt(n + 1), "check_ternary_difference");
        const std::string tag = "n=" + std::to_string(n);
        report.add("sum a_h a_{n-h} " + tag, diff, sum_aa);
        report.add("sum b_h b_{n-h-1} " + tag, diff, sum_bb);
        report.add("U_n - T_n " + tag, diff, raney_number(3, 2, n) - fuss_catalan(3, n));
        report.add("2/(n+1) binom(3n,n-1) " + tag, diff, closed);
        report.add("4-tuples R_{n-1}^(3,4) " + tag, diff, raney_convolution(3, 4, n - 1));
    }
    return report;
}

// C_n against the triple sum with powers of two, and its double-sum form.
inline VerifyReport check_catalan_pow2(std::int64_t n_max) {
    if (n_max < 1)
        throw error(errc::invalid_parameter, "n_max must be >= 1");
    VerifyReport report{"catalan-powers-of-two", {}, {}};
    detail::stopwatch timer(report);
    std::vector<ExactInt> c;
    for (std::int64_t i = 0; i <= n_max; ++i)
        c.push_back(catalan(i));
    const auto pow2 = [](std::int64_t e) { return ExactInt(1) << static_cast<unsigned>(e); };
    for (std::int64_t n = 1; n <= n_max; ++n) {
        ExactInt triple = pow2(n - 1);
        for (std::int64_t r = 1; r <= n - 1; ++r)
            for (std::int64_t s = 1; r + s <= n - 1; ++s)
                triple += c[static_cast<std::size_t>(r)] * c[static_cast<std::size_t>(s)] * pow2(n - 1 - r - s);
        ExactInt twofold = pow2(n - 1);
        for (std::int64_t a = 2; a <= n - 1; ++a)
            for (std::int64_t b = 0; b <= a - 2; ++b)
                twofold += c[static_cast<std::size_t>(b + 1)] * c[static_cast<std::size_t>(a - 1 - b)] * pow2(n - 1 - a);
        const std::string tag = "n=" + std::to_string(n);
        report.add("triple sum " + tag, c[static_cast<std::size_t>(n)], triple);
        report.add("double sum " + tag, c[static_cast<std::size_t>(n)], twofold);
    }
    return report;
}

// Rational identities between T_n and U_n, in exact rationals. A cell
// compares numerators after checking the left side is an integer.
inline VerifyReport check_rational_identities(std::int64_t n_max) {
    if (n_max < 1)
        throw error(errc::invalid_parameter, "n_max must be >= 1");
    VerifyReport report{"ternary-rational-identities", {}, {}};
    detail::stopwatch timer(report);
    std::vector<ExactInt> t, u;
    for (std::int64_t i = 0; i <= n_max; ++i) {
        t.push_back(fuss_catalan(3, i));
        u.push_back(raney_number(3, 2, i));
    }
    const auto as_int = [](const ExactRat& q, std::string& detail) {
        if (boost::multiprecision::denominator(q) != 1)
            detail = "non-integer left side " + q.str();
        return ExactInt(boost::multiprecision::numerator(q));
    };
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const auto un = static_cast<std::size_t>(n);
        ExactRat first = 0, second = 0;
        for (std::size_t h = 0; h < un; ++h) {
            first += ExactRat(t[h] * t[un - h - 1]) / ExactRat(ExactInt(h + 1));
            second += ExactRat(u[h] * u[un - h - 1]) / ExactRat(ExactInt(3 * h + 1));
        }
        first *= 2;
        second *= 2;
        const std::string tag = "n=" + std::to_string(n);
        std::string d1, d2;
        const ExactInt lhs1 = as_int(first, d1);
        const ExactInt lhs2 = as_int(second, d2);
        report.add("2 sum T_h T_{n-h-1}/(h+1) = 3U_{n-1} - T_n " + tag, 3 * u[un - 1] - t[un], lhs1, d1);
        report.add("2 sum U_h U_{n-h-1}/(3h+1) = 4T_n - U_n " + tag, 4 * t[un] - u[un], lhs2, d2);
    }
    return report;
}

// R_n^{(k,l+1)} - R_n^{(k,l)} = R_{n-1}^{(k,k+l)}.
inline VerifyReport check_raney_difference(std::int64_t k, std::int64_t l, std::int64_t n_max) {
    detail::require_arity(k);
    if (l < 1 || l > k - 2)
        throw error(errc::invalid_parameter, "l must lie in [1, k-2]");
    VerifyReport report{"raney-difference", {}, {}};
    detail::stopwatch timer(report);
    for (std::int64_t n = 1; n <= n_max; ++n)
        report.add(detail::cell_name({{"k", k}, {"l", l}, {"n", n}}), raney_number(k, k + l, n - 1),
                   raney_number(k, l + 1, n) - raney_number(k, l, n));
    return report;
}

// Convolution recurrence vs closed form for Fuss-Catalan numbers; both Raney
// closed forms (checked inside raney_number()) vs the Fuss-Catalan convolution.
inline VerifyReport check_closed_forms(std::int64_t k_max, std::int64_t n_max_fuss, std::int64_t n_max_raney) {
    VerifyReport report{"closed-forms", {}, {}};
    detail::stopwatch timer(report);
    for (std::int64_t k = 2; k <= k_max; ++k) {
        FussCatalanTable table(k, n_max_fuss);
        for (std::int64_t n = 0; n <= n_max_fuss; ++n)
            report.add("fuss-catalan " + detail::cell_name({{"k", k}, {"n", n}}), fuss_catalan(k, n), table(n));
        for (std::int64_t r = 1; r <= 2 * k; ++r)
            for (std::int64_t n = 0; n <= n_max_raney; ++n)
                report.add("raney " + detail::cell_name({{"k", k}, {"r", r}, {"n", n}}), raney_number(k, r, n),
                           raney_convolution(k, r, n));
    }
    return report;
}

// First eight terms of A001764 (T_n), A006013 (U_n) and A006629 (U_n - T_n
// for n >= 1, i.e. 4-tuples of ternary trees with n-1 internal nodes),
// recomputed from the Raney closed form.
inline VerifyReport check_oeis_prefixes() {
    static constexpr std::int64_t a001764[] = {1, 1, 3, 12, 55, 273, 1428, 7752};
    static constexpr std::int64_t a006013[] = {1, 2, 7, 30, 143, 728, 3876, 21318};
    static constexpr std::int64_t a006629[] = {1, 4, 18, 88, 455, 2448, 13566, 76912};
    VerifyReport report{"oeis-prefixes", {}, {}};
    detail::stopwatch timer(report);
    for (std::int64_t i = 0; i < 8; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const std::string tag = "term " + std::to_string(i);
        report.add("A001764 " + tag, a001764[ui], raney_number(3, 1, i));
        report.add("A006013 " + tag, a006013[ui], raney_number(3, 2, i));
        report.add("A006629 " + tag, a006629[ui], raney_number(3, 2, i + 1) - raney_number(3, 1, i + 1));
    }
    return report;
}

// Criterion grid: (k, l, n) with n >= 1 and R_n^{(k,l+1)} <= limit.
struct GridCell {
    std::int64_t k, l, n;
};

inline std::vector<GridCell> count_grid(std::int64_t k_min, std::int64_t k_max, const ExactInt& limit) {
    std::vector<GridCell> cells;
    for (std::int64_t k = k_min; k <= k_max; ++k)
        for (std::int64_t l = 0; l <= k - 2; ++l)
            for (std::int64_t n = 1; raney_number(k, l + 1, n) <= limit; ++n)
                cells.push_back({k, l, n});
    return cells;
}

// Backtracking enumeration vs subset filtering vs the Raney number, plus
// proper sequences and paths ending at height l vs R_{n-1}^{(k,k+l)}.
inline VerifyReport check_sequence_counts(std::int64_t k, std::int64_t l, std::int64_t n,
                                          std::uint64_t budget = default_budget) {
    VerifyReport report{"sequence-counts", {}, {}};
    detail::stopwatch timer(report);
    const ThresholdParams p{k, l, n, 0};
    const std::string tag = detail::cell_name({{"k", k}, {"l", l}, {"n", n}});
    const ExactInt expected = count(p);

    ExactInt proper = 0;
    std::uint64_t print_enum = 0, print_oracle = 0;
    const auto enumerated = enumerate(
        p,
        [&](const ThresholdSequence& s) {
            if (is_proper(s))
                ++proper;
            print_enum += detail::fingerprint(s.values());
        },
        budget);
    const auto filtered = oracle_visit(
        k, l, n, [&](const std::vector<std::int64_t>& s) { print_oracle += detail::fingerprint(s); }, budget);
    report.add("enumerate " + tag, expected, enumerated);
    report.add("subset-filter " + tag, expected, filtered);
    report.add("enumerate vs subset-filter fingerprint " + tag, print_oracle, print_enum);
    report.add("proper " + tag, count_proper(p), proper);
    if (l >= 1)
        report.add("proper vs R_{n-1}^(k,k+l) " + tag, raney_number(k, k + l, n - 1), proper);

    ExactInt at_l = 0;
    const auto paths = enumerate_paths(
        k, l, n, [&](const ExtMotzkinPath& path) { at_l += path.end_height() == l ? 1 : 0; }, budget);
    report.add("paths " + tag, expected, paths);
    report.add("paths ending at l " + tag, count_proper(p), at_l);
    return report;
}

// Round-trip and surjectivity of the tree-tuple and path bijections, and the
// ballot encoding round-trip, over one full (k, l, n) cell.
inline VerifyReport check_bijections(std::int64_t k, std::int64_t l, std::int64_t n,
                                     std::uint64_t budget = default_budget) {
    VerifyReport report{"bijections", {}, {}};
    detail::stopwatch timer(report);
    const ThresholdParams p{k, l, n, 0};
    const std::string tag = detail::cell_name({{"k", k}, {"l", l}, {"n", n}});

    std::unordered_set<TreeTuple, TreeTupleHash> tuple_images;
    std::vector<std::vector<std::int64_t>> path_images;
    ExactInt total = 0, tuple_rt = 0, path_rt = 0, ballot_rt = 0, ballot_ok = 0, path_valid = 0;
    std::string tuple_bad, path_bad, ballot_bad, valid_bad, dup_bad;

    enumerate(
        p,
        [&](const ThresholdSequence& s) {
            ++total;
            const auto tuple = tuple_of(s);
            if (sequence_of_tuple(tuple, n) == s)
                ++tuple_rt;
            else if (tuple_bad.empty())
                tuple_bad = to_json(s).dump();
            if (!tuple_images.insert(tuple).second && dup_bad.empty())
                dup_bad = to_json(s).dump() + " -> " + to_json(tuple).dump();

            const auto path = path_of(s);
            if (path.length() == n && path.end_height() <= l && path.end_height() == s.back() - k * n)
                ++path_valid;
            else if (valid_bad.empty())
                valid_bad = to_json(s).dump();
            if (sequence_of_path(path, l) == s)
                ++path_rt;
            else if (path_bad.empty())
                path_bad = to_json(s).dump();
            path_images.emplace_back(path.rises().begin(), path.rises().end());

            const auto word = to_ballot(s);
            if (from_ballot(word, k, l) == s)
                ++ballot_rt;
            else if (ballot_bad.empty())
                ballot_bad = to_json(s).dump();
            if (is_k_ballot_isolated(word, k) && word.count_a() == s.back() + 1 && word.count_b() == n)
                ++ballot_ok;
        },
        budget);

    const ExactInt expected = count(p);
    report.add("sequences " + tag, expected, total);
    report.add("tuple round-trip " + tag, total, tuple_rt, tuple_bad);
    report.add("tuple injective " + tag, total, tuple_images.size(), dup_bad);

    ExactInt tuples = 0, hit = 0;
    std::string miss;
    enumerate_tuples(
        k, l + 1, n,
        [&](const TreeTuple& t) {
            ++tuples;
            if (tuple_images.count(t))
                ++hit;
            else if (miss.empty())
                miss = to_json(t).dump();
        },
        budget);
    report.add("tuple codomain size " + tag, raney_number(k, l + 1, n), tuples);
    report.add("tuple surjective " + tag, tuples, hit, miss);

    std::sort(path_images.begin(), path_images.end());
    const auto distinct = std::unique(path_images.begin(), path_images.end()) - path_images.begin();
    report.add("path valid " + tag, total, path_valid, valid_bad);
    report.add("path round-trip " + tag, total, path_rt, path_bad);
    report.add("path injective " + tag, total, static_cast<std::int64_t>(distinct));
    ExactInt paths = 0, path_hit = 0;
    std::string path_miss;
    enumerate_paths(
        k, l, n,
        [&](const ExtMotzkinPath& path) {
            ++paths;
            std::vector<std::int64_t> r(path.rises().begin(), path.rises().end());
            if (std::binary_search(path_images.begin(), path_images.begin() + distinct, r))
                ++path_hit;
            else if (path_miss.empty())
                path_miss = to_json(path).dump();
        },
        budget);
    report.add("path surjective " + tag, paths, path_hit, path_miss);

    report.add("ballot round-trip " + tag, total, ballot_rt, ballot_bad);
    report.add("ballot isolated k-ballot " + tag, total, ballot_ok);
    return report;
}

// Number of words over {A,B} with `a` A's and `b` B's, isolated B's, every
// prefix ending in B holding more than k times as many A's as B's, and (when
// required) ending in B. Brute force over B positions.
inline ExactInt count_ballot_words(std::int64_t k, std::int64_t a, std::int64_t b, bool last_b) {
    const std::int64_t len = a + b;
    if (b == 0)
        return last_b ? 0 : 1;
    std::vector<std::int64_t> pos(static_cast<std::size_t>(b));
    for (std::int64_t i = 0; i < b; ++i)
        pos[static_cast<std::size_t>(i)] = i;
    ExactInt total = 0;
    const auto sz = static_cast<std::size_t>(b);
    while (true) {
        bool ok = !last_b || pos.back() == len - 1;
        for (std::size_t i = 0; i < sz && ok; ++i) {
            if (i > 0 && pos[i] == pos[i - 1] + 1)
                ok = false;
            const std::int64_t as_before = pos[i] - static_cast<std::int64_t>(i);
            if (as_before < k * static_cast<std::int64_t>(i + 1) + 1)
                ok = false;
        }
        if (ok)
            ++total;
        std::size_t j = sz;
        while (j > 0 && pos[j - 1] == len - static_cast<std::int64_t>(sz - j + 1))
            --j;
        if (j == 0)
            break;
        ++pos[j - 1];
        for (std::size_t t = j; t < sz; ++t)
            pos[t] = pos[t - 1] + 1;
    }
    return total;
}

// One (k, l, n) row of the ballot measurement. With a = kn+l+1 and b = n the
// claimed count is R_b^{(k,a-kb)} = ((a-kb)/a) binomial(a, b).
struct BallotRow {
    std::int64_t k, l, n, a, b;
    ExactInt claimed;
    ExactInt sequences;          // R_n^{(k,l+1)}
    ExactInt proper_sequences;   // proper (k,l)-sequences
    ExactInt fixed_letter_words; // a A's, b B's, isolated B's, last letter B
    ExactInt image_words;        // distinct W(S) over all (k,l)-sequences
    ExactInt padded_words;       // as fixed_letter_words but last letter free
};

struct BallotMeasurement {
    std::vector<BallotRow> rows;
    bool fixed_letter_matches = true;
    bool image_matches = true;
    bool padded_matches = true;
    VerifyReport roundtrip{"ballot-roundtrip", {}, {}};
};

inline BallotMeasurement measure_ballot_claim(std::int64_t k_min, std::int64_t k_max, std::int64_t n_max,
                                              std::uint64_t budget = default_budget) {
    BallotMeasurement m;
    detail::stopwatch timer(m.roundtrip);
    for (std::int64_t k = k_min; k <= k_max; ++k)
        for (std::int64_t l = 0; l <= k - 2; ++l)
            for (std::int64_t n = 1; n <= n_max; ++n) {
                BallotRow row{k, l, n, k * n + l + 1, n, 0, 0, 0, 0, 0, 0};
                row.claimed = detail::exact_div((row.a - k * row.b) * binomial(row.a, row.b), ExactInt(row.a),
                                                "ballot claim");
                const ThresholdParams p{k, l, n, 0};
                row.sequences = count(p);
                std::unordered_set<std::string> images;
                ExactInt rt = 0, seen = 0;
                std::string bad;
                enumerate(
                    p,
                    [&](const ThresholdSequence& s) {
                        ++seen;
                        if (is_proper(s))
                            ++row.proper_sequences;
                        const auto w = to_ballot(s);
                        if (is_k_ballot_isolated(w, k))
                            images.insert(w.letters);
                        if (from_ballot(w, k, l) == s)
                            ++rt;
                        else if (bad.empty())
                            bad = to_json(s).dump();
                    },
                    budget);
                row.image_words = images.size();
                row.fixed_letter_words = count_ballot_words(k, row.a, row.b, true);
                row.padded_words = count_ballot_words(k, row.a, row.b, false);
                m.roundtrip.add(detail::cell_name({{"k", k}, {"l", l}, {"n", n}}), seen, rt, bad);
                m.fixed_letter_matches = m.fixed_letter_matches && row.fixed_letter_words == row.claimed;
                m.image_matches = m.image_matches && row.image_words == row.claimed;
                m.padded_matches = m.padded_matches && row.padded_words == row.claimed;
                m.rows.push_back(std::move(row));
            }
    return m;
}

inline json to_json(const BallotMeasurement& m) {
    json rows = json::array();
    for (const auto& r : m.rows)
        rows.push_back(json{{"k", r.k},
                            {"l", r.l},
                            {"n", r.n},
                            {"a", r.a},
                            {"b", r.b},
                            {"claimed", r.claimed.str()},
                            {"sequences", r.sequences.str()},
                            {"proper_sequences", r.proper_sequences.str()},
                            {"fixed_letter_words", r.fixed_letter_words.str()},
                            {"image_words", r.image_words.str()},
                            {"padded_words", r.padded_words.str()}});
    return json{
        {"claim", "words with a = kn+l+1 letters A, b = n letters B, isolated B's, last letter B, every prefix "
                  "with #A > k*#B, number R_b^(k,a-kb) = ((a-kb)/a) binomial(a,b)"},
        {"readings",
         {{"fixed_letter_words", {{"description", "words with exactly a A's and b B's, last letter B"},
                                  {"matches_claim", m.fixed_letter_matches}}},
          {"image_words", {{"description", "distinct W(S) over all (k,l)-sequences; #A = s_n + 1 varies"},
                           {"matches_claim", m.image_matches}}},
          {"padded_words", {{"description", "exactly a A's and b B's, trailing A's allowed (W(S) padded to a A's)"},
                            {"matches_claim", m.padded_matches}}}}},
        {"roundtrip", to_json(m.roundtrip)},
        {"rows", std::move(rows)}};
}

} // namespace raney

#endif // RANEY_VERIFY_HPP
