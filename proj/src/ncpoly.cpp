#include "ncg/ncpoly.hpp"

namespace ncg {

NcPoly::NcPoly(OrderPtr ord, ParamSetPtr params)
    : ord_(std::move(ord)), params_(std::move(params)), terms_(WordLess{ord_}) {
    if (!ord_) throw InvalidInputError("polynomial needs a monomial order");
}

NcPoly NcPoly::term(OrderPtr ord, ParamSetPtr params, const Scalar& c, const Word& w) {
    NcPoly p(std::move(ord), std::move(params));
    p.add_term(w, c);
    return p;
}

const Word& NcPoly::leading_word() const {
    if (terms_.empty()) throw InvalidInputError("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Scalar& NcPoly::leading_coeff() const {
    if (terms_.empty()) throw InvalidInputError("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

std::int64_t NcPoly::max_weight(const Alphabet& alphabet) const {
    std::int64_t m = -1;
    for (const auto& [w, c] : terms_) {
        (void)c;
        m = std::max(m, alphabet.weight(w));
    }
    return m;
}

bool NcPoly::is_weight_homogeneous(const Alphabet& alphabet) const {
    if (terms_.empty()) return true;
    std::int64_t d = alphabet.weight(terms_.begin()->first);
    for (const auto& [w, c] : terms_) {
        (void)c;
        if (alphabet.weight(w) != d) return false;
    }
    return true;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        Scalar s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

void NcPoly::require_same_order(const NcPoly& o) const {
    if (ord_ != o.ord_)
        throw InvalidInputError("polynomials carry different monomial orders");
}

NcPoly NcPoly::operator-() const {
    NcPoly r(ord_, params_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    require_same_order(o);
    NcPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
    require_same_order(o);
    NcPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    require_same_order(o);
    NcPoly r(ord_, params_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) r.add_term(concat(wa, wb), ca * cb);
    return r;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
    NcPoly r(ord_, params_);
    if (c.is_zero()) return r;
    for (const auto& [w, s] : terms_) {
        Scalar v = s * c;
        if (!v.is_zero()) r.terms_.emplace(w, v);
    }
    return r;
}

void NcPoly::add_scaled_sandwich(const Scalar& c, const Word& l, const NcPoly& g,
                                 const Word& r) {
    for (const auto& [w, s] : g.terms_) add_term(concat(l, w, r), c * s);
}

Scalar NcPoly::make_monic() {
    Scalar lc = leading_coeff();
    if (lc.is_one()) return lc;
    Scalar inv = lc.inverse();
    std::map<Word, Scalar, WordLess> out(WordLess{ord_});
    for (const auto& [w, s] : terms_) out.emplace(w, s * inv);
    terms_ = std::move(out);
    return lc;
}

bool NcPoly::operator==(const NcPoly& o) const {
    require_same_order(o);
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (it->second != jt->second) return false;
    }
    return true;
}

NcPoly NcPoly::rebuilt_with(OrderPtr ord) const {
    NcPoly r(std::move(ord), params_);
    for (const auto& [w, c] : terms_) r.add_term(w, c);
    return r;
}

NcPoly NcPoly::coefficients_substituted(const std::map<std::string, Scalar>& assign,
                                        ParamSetPtr target) const {
    NcPoly r(ord_, target);
    for (const auto& [w, c] : terms_) r.add_term(w, c.substituted(assign, target));
    return r;
}

std::string NcPoly::str(const Alphabet& alphabet) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Word& w = it->first;
        const Scalar& c = it->second;
        std::string piece;
        bool negative = false;
        bool rational_const =
            c.is_constant() && c.constant_value().is_rational_value();
        if (rational_const) {
            Rational r = c.constant_value().rational_value();
            negative = r < 0;
            Rational mag = negative ? Rational(-r) : r;
            if (w.empty())
                piece = to_string(mag);
            else if (mag == 1)
                piece = word_str(alphabet, w);
            else
                piece = to_string(mag) + "*" + word_str(alphabet, w);
        } else {
            piece = "(" + c.str() + ")";
            if (!w.empty()) piece += "*" + word_str(alphabet, w);
        }
        if (first) {
            out += negative ? "-" : "";
            out += piece;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += piece;
        }
    }
    return out;
}

} // namespace ncg
