#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kdp/integer.hpp"
#include "kdp/numpoly.hpp"

namespace kdp {

// Word over the alphabet {1, ..., m}, letters written left to right in
// application order: "2,1,1" is the second generator applied after two
// applications of the first. This convention is locked here; everything else
// (orders, closures, counting) derives from it.
struct Word {
    std::vector<std::uint8_t> letters;

    auto operator<=>(const Word&) const = default;
};

unsigned order_of(const Word& w);
// a is a suffix of b, i.e. b = x . a for some word x.
bool suffix_leq(const Word& a, const Word& b);
// Total order: shorter first, then lexicographic. Refines suffix_leq.
bool lenlex_less(const Word& a, const Word& b);
bool lenlex_leq(const Word& a, const Word& b);
// x . y: x's letters followed by y's, so y is a suffix of the result.
Word concat(const Word& x, const Word& y);

std::string word_to_string(const Word& w);
Word parse_word(std::string_view s, unsigned m);

// Finite word set over a fixed alphabet size, kept sorted by lenlex.
struct WordSet {
    unsigned m = 1;
    std::vector<Word> words;

    static WordSet make(unsigned m, std::vector<Word> words);
};

bool pairwise_incomparable(const WordSet& s);
// Adds every suffix of every member (including the empty word).
WordSet downward_close(const WordSet& s);
// Members with no one-letter extension inside the set. Requires the set to be
// suffix-closed; throws not_downward_closed otherwise.
WordSet max_elements(const WordSet& s);
WordSet strip_max(const WordSet& s);

// Number of words of length <= t with no member of `leaders` as a suffix.
// OpenMP kernel: pruned DFS that grows words by prepending letters, so a
// child is excluded exactly when it is itself a leader.
Integer free_word_count(const WordSet& leaders, unsigned t);
// Serial reference: enumerate every word of length <= t and test all leaders.
Integer free_word_count_serial(const WordSet& leaders, unsigned t);

struct GrowthWitness {
    std::vector<Integer> counts;             // counts[t], t = 0..t_max
    std::optional<NumericalPolynomial> fit;  // nullopt when no degree <= max_degree fit
    std::vector<Rational> ratios;            // counts[t+1] / counts[t]
};

// Tabulates counts, attempts a polynomial fit, and reports successive growth
// ratios. Requires t_max >= max_degree + 4 so a failed fit is meaningful.
GrowthWitness non_polynomial_witness(const WordSet& leaders, unsigned t_max, unsigned max_degree);

}  // namespace kdp
