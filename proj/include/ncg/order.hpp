#ifndef NCG_ORDER_HPP
#define NCG_ORDER_HPP

#include "ncg/word.hpp"

#include <memory>
#include <string>

namespace ncg {

// Total order on words, assumed admissible: 1 is minimal and u < v implies
// aub < avb for all words a, b. Implementations must document why.
class MonomialOrder {
public:
    virtual ~MonomialOrder() = default;

    // -1 when a < b, 0 when equal, 1 when a > b.
    virtual int cmp(const Word& a, const Word& b) const = 0;
    virtual std::string describe() const = 0;

    bool less(const Word& a, const Word& b) const { return cmp(a, b) < 0; }
    bool greater(const Word& a, const Word& b) const { return cmp(a, b) > 0; }
};

using OrderPtr = std::shared_ptr<const MonomialOrder>;

// Weighted degree first; ties broken at the first differing position, where
// the earlier-declared generator (smaller index) makes the larger word.
//
// Admissibility: weights are strictly positive, so equal-weight words are
// never proper prefixes of one another and the tie-break always finds a
// differing position within the common length. Multiplying on either side
// shifts both words by the same weight and preserves the first difference.
class GradedLexOrder : public MonomialOrder {
public:
    explicit GradedLexOrder(std::vector<std::int64_t> weights);

    int cmp(const Word& a, const Word& b) const override;
    std::string describe() const override;

    std::int64_t weight(const Word& w) const;

private:
    std::vector<std::int64_t> weights_;
};

OrderPtr make_graded_lex(const Alphabet& alphabet);

// Refines a base order by comparing multidegrees first (MultiGrading::cmp).
// Admissible whenever the base order is: multidegrees add under
// concatenation, and MultiGrading::cmp is compatible with addition.
class MultiDegreeRefinedOrder : public MonomialOrder {
public:
    MultiDegreeRefinedOrder(MultiGrading grading, OrderPtr base);

    int cmp(const Word& a, const Word& b) const override;
    std::string describe() const override;

    const MultiGrading& grading() const { return grading_; }
    const OrderPtr& base() const { return base_; }

private:
    MultiGrading grading_;
    OrderPtr base_;
};

OrderPtr make_multidegree_refined(MultiGrading grading, OrderPtr base);

} // namespace ncg

#endif
