#include "kdp/free_monoid.hpp"

#include <algorithm>
#include <unordered_set>

#include "kdp/error.hpp"

namespace kdp {

unsigned order_of(const Word& w) { return static_cast<unsigned>(w.letters.size()); }

bool suffix_leq(const Word& a, const Word& b) {
    if (a.letters.size() > b.letters.size()) return false;
    return std::equal(a.letters.rbegin(), a.letters.rend(), b.letters.rbegin());
}

bool lenlex_less(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
}

bool lenlex_leq(const Word& a, const Word& b) { return !lenlex_less(b, a); }

Word concat(const Word& x, const Word& y) {
    Word out = x;
    out.letters.insert(out.letters.end(), y.letters.begin(), y.letters.end());
    return out;
}

std::string word_to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(unsigned{w.letters[i]});
    }
    return out;
}

Word parse_word(std::string_view s, unsigned m) {
    Word w;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == ',')) ++pos;
        if (pos >= s.size()) break;
        unsigned v = 0;
        bool any = false;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            v = v * 10 + (s[pos] - '0');
            if (v > 255) throw schema_error("word letter out of range");
            ++pos;
            any = true;
        }
        if (!any) throw schema_error("malformed word literal");
        if (v < 1 || v > m) throw schema_error("word letter outside the alphabet");
        w.letters.push_back(static_cast<std::uint8_t>(v));
    }
    return w;
}

WordSet WordSet::make(unsigned m, std::vector<Word> words) {
    if (m < 1) throw schema_error("word set needs m >= 1");
    for (const auto& w : words)
        for (auto a : w.letters)
            if (a < 1 || a > m) throw schema_error("word letter outside the alphabet");
    std::sort(words.begin(), words.end(), lenlex_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return WordSet{m, std::move(words)};
}

bool pairwise_incomparable(const WordSet& s) {
    for (std::size_t i = 0; i < s.words.size(); ++i)
        for (std::size_t j = 0; j < s.words.size(); ++j)
            if (i != j && suffix_leq(s.words[i], s.words[j])) return false;
    return true;
}

WordSet downward_close(const WordSet& s) {
    std::vector<Word> out;
    for (const auto& w : s.words)
        for (std::size_t k = 0; k <= w.letters.size(); ++k)
            out.push_back(Word{{w.letters.end() - k, w.letters.end()}});
    out.push_back(Word{});
    return WordSet::make(s.m, std::move(out));
}

namespace {

bool is_suffix_closed(const WordSet& s) {
    for (const auto& w : s.words) {
        if (w.letters.empty()) continue;
        Word parent{{w.letters.begin() + 1, w.letters.end()}};
        if (!std::binary_search(s.words.begin(), s.words.end(), parent,
                                [](const Word& a, const Word& b) { return lenlex_less(a, b); }))
            return false;
    }
    return true;
}

}  // namespace

WordSet max_elements(const WordSet& s) {
    if (!is_suffix_closed(s))
        throw domain_error(errc::not_downward_closed, "word set is not closed under suffixes");
    std::vector<Word> out;
    for (const auto& w : s.words) {
        bool maximal = true;
        for (unsigned a = 1; a <= s.m && maximal; ++a) {
            Word ext;
            ext.letters.reserve(w.letters.size() + 1);
            ext.letters.push_back(static_cast<std::uint8_t>(a));
            ext.letters.insert(ext.letters.end(), w.letters.begin(), w.letters.end());
            if (std::binary_search(s.words.begin(), s.words.end(), ext,
                                   [](const Word& x, const Word& y) { return lenlex_less(x, y); }))
                maximal = false;
        }
        if (maximal) out.push_back(w);
    }
    return WordSet::make(s.m, std::move(out));
}

WordSet strip_max(const WordSet& s) {
    WordSet mx = max_elements(s);
    std::vector<Word> out;
    for (const auto& w : s.words)
        if (!std::binary_search(mx.words.begin(), mx.words.end(), w,
                                [](const Word& x, const Word& y) { return lenlex_less(x, y); }))
            out.push_back(w);
    return WordSet::make(s.m, std::move(out));
}

namespace {

struct RevWordHash {
    std::size_t operator()(const std::vector<std::uint8_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto b : v) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using RevSet = std::unordered_set<std::vector<std::uint8_t>, RevWordHash>;

// Buffers hold letters in reverse, so pushing back prepends a letter to the
// word. A child of a free word is excluded exactly when it is a leader: every
// proper suffix of the child is a suffix of the free parent.
std::uint64_t dfs_count(const RevSet& leaders, unsigned m, unsigned t,
                        std::vector<std::uint8_t>& buf) {
    std::uint64_t total = 1;
    if (buf.size() == t) return total;
    for (std::uint8_t a = 1; a <= m; ++a) {
        buf.push_back(a);
        if (!leaders.contains(buf)) total += dfs_count(leaders, m, t, buf);
        buf.pop_back();
    }
    return total;
}

void collect_frontier(const RevSet& leaders, unsigned m, unsigned depth,
                      std::vector<std::uint8_t>& buf, std::uint64_t& shallow,
                      std::vector<std::vector<std::uint8_t>>& frontier) {
    if (buf.size() == depth) {
        frontier.push_back(buf);
        return;
    }
    for (std::uint8_t a = 1; a <= m; ++a) {
        buf.push_back(a);
        if (!leaders.contains(buf)) {
            ++shallow;
            collect_frontier(leaders, m, depth, buf, shallow, frontier);
        }
        buf.pop_back();
    }
}

RevSet reversed_leaders(const WordSet& leaders) {
    RevSet set;
    for (const auto& w : leaders.words)
        set.emplace(w.letters.rbegin(), w.letters.rend());
    return set;
}

}  // namespace

Integer free_word_count(const WordSet& leaders, unsigned t) {
    RevSet excl = reversed_leaders(leaders);
    if (excl.contains({})) return 0;

    unsigned split = 0;
    if (leaders.m >= 2) {
        std::uint64_t width = 1;
        while (split < t && width < 2048) {
            width *= leaders.m;
            ++split;
        }
    }
    std::vector<std::uint8_t> buf;
    std::uint64_t shallow = 1;  // the empty word
    std::vector<std::vector<std::uint8_t>> frontier;
    collect_frontier(excl, leaders.m, split, buf, shallow, frontier);

    std::uint64_t deep = 0;
    const long long n = static_cast<long long>(frontier.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : deep)
    for (long long i = 0; i < n; ++i) {
        std::vector<std::uint8_t> local = frontier[i];
        deep += dfs_count(excl, leaders.m, t, local);
    }
    // shallow counts the free words of length <= split; each dfs_count counts
    // its root again, so the roots are subtracted once
    return Integer(shallow) + Integer(deep) - Integer(frontier.size());
}

Integer free_word_count_serial(const WordSet& leaders, unsigned t) {
    std::uint64_t total = 0;
    Word w;
    for (unsigned len = 0; len <= t; ++len) {
        w.letters.assign(len, 1);
        while (true) {
            bool excluded = false;
            for (const auto& e : leaders.words)
                if (suffix_leq(e, w)) {
                    excluded = true;
                    break;
                }
            if (!excluded) ++total;
            // odometer over {1..m}^len
            std::size_t i = len;
            while (i > 0 && w.letters[i - 1] == leaders.m) {
                w.letters[i - 1] = 1;
                --i;
            }
            if (i == 0) break;
            ++w.letters[i - 1];
        }
    }
    return Integer(total);
}

GrowthWitness non_polynomial_witness(const WordSet& leaders, unsigned t_max,
                                     unsigned max_degree) {
    if (t_max < max_degree + 4)
        throw schema_error("growth witness needs t_max >= max_degree + 4");
    GrowthWitness wit;
    for (unsigned t = 0; t <= t_max; ++t) wit.counts.push_back(free_word_count(leaders, t));
    wit.fit = fit_from_values(wit.counts, Integer(0), max_degree);
    for (unsigned t = 0; t + 1 <= t_max; ++t)
        if (wit.counts[t] > 0) wit.ratios.emplace_back(wit.counts[t + 1], wit.counts[t]);
    return wit;
}

}  // namespace kdp
