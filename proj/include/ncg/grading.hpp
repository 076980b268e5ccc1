#ifndef NCG_GRADING_HPP
#define NCG_GRADING_HPP

#include "ncg/gb.hpp"
#include "ncg/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncg {

// Sum of the terms of f whose multidegree is maximal under MultiGrading::cmp.
// Keeps f's order and parameter set. Throws InvalidInputError on zero input.
NcPoly lh(const NcPoly& f, const MultiGrading& grading);

// Quotient presentation by the leading homogeneous parts of the completed
// basis: completes p.relations under the multidegree-refined order, maps each
// basis element through lh, then drops every part that already lies in the
// ideal generated by the lower-weight survivors. Requires p.zr. The result
// keeps p's name, alphabet, parameters, base order and multidegrees.
Presentation assoc_graded(const Presentation& p, const GroebnerOptions& opt);

enum class CriterionVerdict { MatchesTarget, MismatchWitness, IncompleteBasisWarning };

std::string criterion_verdict_name(CriterionVerdict v);

struct CriterionReport {
    GroebnerResult gb;            // completed basis of p under the refined order
    std::vector<NcPoly> lh_ideal; // monic leading homogeneous parts of gb.basis
    CriterionVerdict verdict = CriterionVerdict::IncompleteBasisWarning;
    std::optional<NcPoly> witness; // set when verdict is MismatchWitness
    std::vector<std::string> assumed_nonzero; // union over all completions run
    std::string note;
};

// Decides whether the leading homogeneous parts of p's completed basis and
// the target relations generate the same two-sided ideal at the bound, by
// mutual normal-form membership. MatchesTarget requires every membership to
// come back yes with all bases complete; a definite non-membership yields
// MismatchWitness; anything truncated demotes the verdict to
// IncompleteBasisWarning. A MatchesTarget verdict transfers graded properties
// (regularity in particular) from the target to p along the multidegree
// filtration; the report never claims to establish them for the target
// itself.
CriterionReport criterion_check(const Presentation& p, const Presentation& target,
                                const GroebnerOptions& opt);

} // namespace ncg

#endif
