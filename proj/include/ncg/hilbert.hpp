#ifndef NCG_HILBERT_HPP
#define NCG_HILBERT_HPP

#include "ncg/rational.hpp"
#include "ncg/word.hpp"

#include <cstdint>
#include <vector>

namespace ncg {

// Dense series/polynomial coefficients, index = degree.
using Coeffs = std::vector<Rational>;

Coeffs poly_mul(const Coeffs& a, const Coeffs& b);
Coeffs one_minus_tk(std::size_t k); // 1 - t^k

// num/den as a formal power series; den[0] must be nonzero.
struct RationalSeries {
    Coeffs num;
    Coeffs den;
};

// Coefficients 0..maxdeg of the series expansion.
Coeffs expand_series(const RationalSeries& s, std::size_t maxdeg);

struct SeriesComparison {
    bool equal;
    std::size_t index; // first differing degree when !equal
    int sign;          // sign of a[index] - b[index]
};

// Compares over the common prefix of the two coefficient lists.
SeriesComparison compare_series(const Coeffs& a, const Coeffs& b);

// Deterministic automaton whose live paths from `start` are exactly the words
// containing none of the forbidden factors. Built from the proper prefixes of
// the forbidden words; a transition is -1 once a forbidden factor appears.
struct FactorAutomaton {
    std::size_t start = 0;
    std::vector<std::vector<std::int64_t>> next; // [state][letter] -> state or -1

    std::size_t size() const { return next.size(); }
};

// Requires every forbidden word to be nonempty and the set to be an
// antichain under the factor relation (leading words of a reduced basis
// always qualify).
FactorAutomaton build_factor_automaton(const Alphabet& alphabet,
                                       const std::vector<Word>& forbidden);

// Number of factor-avoiding words of each weight 0..maxdeg.
std::vector<BigInt> count_avoiding_words(const Alphabet& alphabet,
                                         const std::vector<Word>& forbidden,
                                         std::int64_t maxdeg);

} // namespace ncg

#endif
