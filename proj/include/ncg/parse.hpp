#ifndef NCG_PARSE_HPP
#define NCG_PARSE_HPP

#include "ncg/presentation.hpp"

#include <string>

namespace ncg {

// Expression grammar shared by relations, scalar values and option values:
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*      '/' needs a scalar divisor
//   factor := atom ['^' nat]
//   atom   := integer | name | '(' expr ')'
//
// Names resolve to generators or parameters; 'j' is the primitive 7th root
// of unity over Qzeta7. '#' starts a comment running to end of line.
NcPoly parse_poly(const std::string& text, const Alphabet& alphabet,
                  ParamSetPtr params, OrderPtr ord);

Scalar parse_scalar(const std::string& text, ParamSetPtr params);

// Reads the line-oriented algebra format:
//
//   algebra NAME
//   field Q | Qzeta7
//   params u v w
//   gens x1 x2          (or name:weight, e.g. z1:2)
//   zrdeg x1 = (1,0)
//   rel x1*x2^2 - 2*x2*x1*x2 + x2^2*x1
//
// `field` defaults to Q; `zrdeg` lines are optional but all-or-none;
// relations must be weight-homogeneous.
Presentation parse_algebra(const std::string& text);

Presentation load_algebra_file(const std::string& path);

} // namespace ncg

#endif
