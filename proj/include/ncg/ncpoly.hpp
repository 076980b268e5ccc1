#ifndef NCG_NCPOLY_HPP
#define NCG_NCPOLY_HPP

#include "ncg/order.hpp"
#include "ncg/scalar.hpp"
#include "ncg/word.hpp"

#include <map>
#include <string>

namespace ncg {

struct WordLess {
    OrderPtr ord;
    bool operator()(const Word& a, const Word& b) const { return ord->cmp(a, b) < 0; }
};

// Polynomial in the free associative algebra: finitely many words with
// nonzero scalar coefficients, stored ascending in the attached monomial
// order so the leading term sits at rbegin(). Two polynomials may be combined
// only when they share the same order object.
class NcPoly {
public:
    NcPoly(OrderPtr ord, ParamSetPtr params);

    static NcPoly zero(OrderPtr ord, ParamSetPtr params) { return NcPoly(ord, params); }
    static NcPoly term(OrderPtr ord, ParamSetPtr params, const Scalar& c, const Word& w);

    const OrderPtr& ord() const { return ord_; }
    const ParamSetPtr& params() const { return params_; }
    const std::map<Word, Scalar, WordLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Word& leading_word() const;
    const Scalar& leading_coeff() const;

    // Largest weighted length over the words; -1 for zero.
    std::int64_t max_weight(const Alphabet& alphabet) const;
    bool is_weight_homogeneous(const Alphabet& alphabet) const;

    void add_term(const Word& w, const Scalar& c);

    NcPoly operator-() const;
    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator*(const NcPoly& o) const;
    NcPoly scaled(const Scalar& c) const;

    // this += c * (l g r), the elementary rewriting step.
    void add_scaled_sandwich(const Scalar& c, const Word& l, const NcPoly& g,
                             const Word& r);

    // Divides by the leading coefficient and returns it.
    Scalar make_monic();

    bool operator==(const NcPoly& o) const;
    bool operator!=(const NcPoly& o) const { return !(*this == o); }

    // Same terms, re-sorted under a different order.
    NcPoly rebuilt_with(OrderPtr ord) const;

    // Applies Scalar::substituted to every coefficient.
    NcPoly coefficients_substituted(const std::map<std::string, Scalar>& assign,
                                    ParamSetPtr target) const;

    std::string str(const Alphabet& alphabet) const;

private:
    OrderPtr ord_;
    ParamSetPtr params_;
    std::map<Word, Scalar, WordLess> terms_;

    void require_same_order(const NcPoly& o) const;
};

} // namespace ncg

#endif
