#ifndef NCG_PRESENTATION_HPP
#define NCG_PRESENTATION_HPP

#include "ncg/ncpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncg {

// A finitely presented graded algebra: generators with weights, optional
// named parameters in the coefficient field, optional multidegree splitting,
// and weight-homogeneous defining relations.
struct Presentation {
    std::string name;
    Alphabet alphabet;
    ParamSetPtr params;
    OrderPtr order; // graded lex over the weights unless stated otherwise
    std::optional<MultiGrading> zr;
    std::vector<NcPoly> relations;
};

// Checks name clashes, relation homogeneity and binding consistency.
void validate_presentation(const Presentation& p);

// Substitutes parameter values in every relation.
Presentation specialize_presentation(const Presentation& p,
                                     const std::map<std::string, Scalar>& assign,
                                     ParamSetPtr target);

bool same_presentation(const Presentation& a, const Presentation& b);

} // namespace ncg

#endif
