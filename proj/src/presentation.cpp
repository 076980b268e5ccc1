#include "ncg/presentation.hpp"

namespace ncg {

void validate_presentation(const Presentation& p) {
    if (!p.params) throw InvalidInputError("presentation lacks a parameter set");
    if (!p.order) throw InvalidInputError("presentation lacks a monomial order");
    for (const auto& gname : p.alphabet.names) {
        if (p.params->index_of(gname) >= 0)
            throw InvalidInputError("name used for both generator and parameter: " +
                                    gname);
        if (p.params->field == BaseField::QZeta7 && gname == "j")
            throw InvalidInputError("generator name 'j' is reserved over Qzeta7");
    }
    if (p.zr) {
        if (p.zr->degrees.size() != p.alphabet.size())
            throw InvalidInputError("multidegrees must cover every generator");
    }
    for (const auto& rel : p.relations) {
        if (rel.is_zero()) throw InvalidInputError("zero relation");
        if (!rel.is_weight_homogeneous(p.alphabet))
            throw HomogeneityError("relation is not weight-homogeneous: " +
                                   rel.str(p.alphabet));
    }
}

Presentation specialize_presentation(const Presentation& p,
                                     const std::map<std::string, Scalar>& assign,
                                     ParamSetPtr target) {
    Presentation q = p;
    q.params = target;
    q.relations.clear();
    for (const auto& rel : p.relations)
        q.relations.push_back(rel.coefficients_substituted(assign, target));
    validate_presentation(q);
    return q;
}

bool same_presentation(const Presentation& a, const Presentation& b) {
    if (a.alphabet.names != b.alphabet.names) return false;
    if (a.alphabet.weights != b.alphabet.weights) return false;
    if (!same_param_set(a.params, b.params)) return false;
    if (a.zr.has_value() != b.zr.has_value()) return false;
    if (a.zr && (a.zr->rank != b.zr->rank || a.zr->degrees != b.zr->degrees))
        return false;
    if (a.relations.size() != b.relations.size()) return false;
    for (std::size_t i = 0; i < a.relations.size(); ++i) {
        NcPoly lhs = a.relations[i];
        NcPoly rhs = b.relations[i].rebuilt_with(lhs.ord());
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace ncg
