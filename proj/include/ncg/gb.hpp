#ifndef NCG_GB_HPP
#define NCG_GB_HPP

#include "ncg/ncpoly.hpp"
#include "ncg/presentation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ncg {

enum class Membership { Yes, No, UnknownBeyondBound };

std::string membership_name(Membership m);

struct GroebnerOptions {
    // Ambiguities whose superposition word weighs more than this are left
    // pending; completion below the bound is still exhaustive.
    std::int64_t bound = 8;
    std::size_t max_basis = 4096;
};

struct GroebnerResult {
    std::vector<NcPoly> basis; // reduced and monic, sorted by leading word
    bool complete = false;     // every ambiguity resolved, none pending beyond bound
    std::int64_t bound = 0;
    // Canonical forms of non-constant leading coefficients that were inverted;
    // specializations must avoid their zero sets.
    std::vector<std::string> assumed_nonzero;
    std::size_t spolys_reduced = 0;
    std::size_t additions = 0;
};

// Deterministic remainder of f modulo a monic basis: the largest reducible
// word is rewritten first, by the lowest-index basis element, at its leftmost
// occurrence.
NcPoly normal_form(const NcPoly& f, const std::vector<NcPoly>& basis);

// Buchberger-style completion of the two-sided ideal generated by the
// relations: interreduce, then resolve overlap and inclusion ambiguities in
// ascending superposition weight, adding each nonzero remainder, until
// everything at or below the bound resolves.
GroebnerResult groebner(const std::vector<NcPoly>& relations,
                        const Alphabet& alphabet, const GroebnerOptions& opt);

GroebnerResult groebner(const Presentation& p, const GroebnerOptions& opt);

// Ideal membership relative to a (possibly truncated) completed basis.
Membership member(const NcPoly& f, const GroebnerResult& gb,
                  const Alphabet& alphabet);

// Graded dimensions of the quotient: counts words avoiding every leading
// word, by weight from 0 to maxdeg.
std::vector<BigInt> normal_word_counts(const GroebnerResult& gb,
                                       const Alphabet& alphabet,
                                       std::int64_t maxdeg);

} // namespace ncg

#endif
