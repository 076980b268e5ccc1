#ifndef NCG_WORD_HPP
#define NCG_WORD_HPP

#include "ncg/errors.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ncg {

// Generator index into an Alphabet. Words are flat index strings; the empty
// word is the unit monomial.
using Gen = std::uint8_t;
using Word = std::vector<Gen>;

// Ordered generator list with positive integer weights.
struct Alphabet {
    std::vector<std::string> names;
    std::vector<std::int64_t> weights;

    std::size_t size() const { return names.size(); }
    int index_of(const std::string& name) const;
    std::int64_t weight(const Word& w) const;
};

Alphabet make_alphabet(std::vector<std::string> names,
                       std::vector<std::int64_t> weights);

// Multidegree assignment splitting each generator's weight across `rank`
// components; extends additively to words.
struct MultiGrading {
    std::size_t rank = 0;
    std::vector<std::vector<std::int64_t>> degrees; // one vector per generator

    std::vector<std::int64_t> degree(const Word& w) const;

    // Compares multidegrees: component sum first, then the first differing
    // component with the larger entry winning. Returns -1, 0 or 1.
    static int cmp(const std::vector<std::int64_t>& a,
                   const std::vector<std::int64_t>& b);
};

MultiGrading make_multi_grading(const Alphabet& alphabet,
                                std::vector<std::vector<std::int64_t>> degrees);

inline Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

inline Word concat(const Word& a, const Word& b, const Word& c) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    r.insert(r.end(), c.begin(), c.end());
    return r;
}

// First position >= from where `factor` occurs in `w`, or npos. The empty
// factor matches everywhere (the unit divides every word).
std::size_t find_factor(const Word& w, const Word& factor, std::size_t from = 0);
constexpr std::size_t word_npos = static_cast<std::size_t>(-1);

bool is_factor(const Word& w, const Word& factor);

std::string word_str(const Alphabet& alphabet, const Word& w);

} // namespace ncg

#endif
