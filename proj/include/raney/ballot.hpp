#ifndef RANEY_BALLOT_HPP
#define RANEY_BALLOT_HPP

// Ballot-word encoding W(S) = A W_1 ... W_n, where W_i is s_i - s_{i-1}
// letters A followed by one B (s_0 = 0).

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "raney/error.hpp"
#include "raney/threshold.hpp"

namespace raney {

struct BallotWord {
    std::int64_t k = 2;
    std::string letters;

    std::int64_t count_a() const { return std::count(letters.begin(), letters.end(), 'A'); }
    std::int64_t count_b() const { return std::count(letters.begin(), letters.end(), 'B'); }

    friend bool operator==(const BallotWord&, const BallotWord&) = default;
};

inline BallotWord to_ballot(const ThresholdSequence& seq) {
    if (seq.params().d != 0)
        throw error(errc::invalid_parameter, "to_ballot needs offset 0; shift the sequence first");
    BallotWord word{seq.params().k, "A"};
    word.letters.reserve(static_cast<std::size_t>(seq.back() + seq.size() + 1));
    std::int64_t prev = 0;
    for (auto s : seq.values()) {
        word.letters.append(static_cast<std::size_t>(s - prev), 'A');
        word.letters.push_back('B');
        prev = s;
    }
    return word;
}

// Inverse of to_ballot. The word must read A (A^{m_1} B)...(A^{m_n} B) with
// every m_i >= 1; s_i = m_1 + ... + m_i is then checked against (k, l, n).
inline ThresholdSequence from_ballot(const BallotWord& word, std::int64_t k, std::int64_t l) {
    const auto& w = word.letters;
    if (w.empty() || w.front() != 'A')
        throw error(errc::malformed_word, "word must start with A");
    std::vector<std::int64_t> values;
    std::int64_t run = 0;
    std::int64_t total = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        const auto pos = static_cast<std::int64_t>(i + 1);
        if (w[i] == 'A') {
            ++run;
        } else if (w[i] == 'B') {
            if (run == 0)
                throw error(errc::malformed_word, "B not preceded by a block of A's", pos);
            total += run;
            values.push_back(total);
            run = 0;
        } else {
            throw error(errc::malformed_word, std::string("unexpected letter '") + w[i] + "'", pos);
        }
    }
    if (run != 0)
        throw error(errc::malformed_word, "word ends with A's after the last B");
    if (values.empty())
        throw error(errc::malformed_word, "word has no B");
    const auto n = static_cast<std::int64_t>(values.size());
    try {
        return validate(std::move(values), ThresholdParams{k, l, n, 0});
    } catch (const error& e) {
        if (e.code() == errc::invalid_parameter)
            throw;
        throw error(errc::not_a_threshold_sequence, e.what(), e.index());
    }
}

// Every prefix ending in a B has #A >= k*#B + 1, no two B's are adjacent,
// and the last letter is B.
inline bool is_k_ballot_isolated(const BallotWord& word, std::int64_t k) {
    const auto& w = word.letters;
    if (w.empty() || w.back() != 'B')
        return false;
    std::int64_t a = 0;
    std::int64_t b = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 'A') {
            ++a;
        } else if (w[i] == 'B') {
            if (i > 0 && w[i - 1] == 'B')
                return false;
            ++b;
            if (a < k * b + 1)
                return false;
        } else {
            return false;
        }
    }
    return true;
}

} // namespace raney

#endif // RANEY_BALLOT_HPP
