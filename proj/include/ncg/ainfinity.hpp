#ifndef NCG_AINFINITY_HPP
#define NCG_AINFINITY_HPP

#include "ncg/presentation.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ncg {

/***** pairing data *****/

// A 2x2 pairing matrix together with the pairing constant t. The matrix must
// be nonsingular and t nonzero over the attached parameter set.
struct FrobeniusData {
    ParamSetPtr params;
    Scalar r[2][2]; // r[s][k], 0-based; printed names are 1-based
    Scalar t;
};

// The nontrivial Jordan-block pairing [[-g, 1], [0, -g]] with constant t.
FrobeniusData make_jordan_frobenius(const Scalar& g, const Scalar& t);

/***** multiplication tables *****/

// Structure constants of the higher products. Indices are 0-based in memory
// and 1-based in printed names, so a[0][1][1] prints as "a122". The layer
// index on b and u names the argument slot (1-based) that carries the
// higher-degree class; all other arguments are degree-one classes.
struct StructureConstants {
    ParamSetPtr params;
    Scalar a[2][2][2];       // ternary products of degree-one classes
    Scalar b[2][3][2][2];    // ternary products with one degree-four class
    Scalar c[3][2];          // pairings of degree-one against degree-four
    Scalar u[2][4][2][2][2]; // quaternary products with one degree-three class
    Scalar v[2][2][2][2];    // quaternary products of degree-one classes
};

StructureConstants make_zero_constants(ParamSetPtr ps);

// Installs the normalized cubic pattern: a122 = 1, a221 = p, a212 = -(1+p),
// a222 = w, every other entry zero.
void set_cubic_pattern(StructureConstants& sc, const Scalar& p, const Scalar& w);

// Fills the b-table from the a-table, layer by layer, using the pairing
// matrix.
void derive_b_table(const FrobeniusData& fd, StructureConstants& sc);

// Solves the five-line degree-five system for the whole u-table, slot by
// slot. An entry already holding a different nonzero value raises
// SystemInconsistentError naming the offending pair.
void solve_u_table(const FrobeniusData& fd, StructureConstants& sc);

// The relation polynomials carried by the tables: sums of a- respectively
// v-entries times the matching generator words.
NcPoly cubic_relation(const StructureConstants& sc, const Alphabet& alphabet,
                      const OrderPtr& ord);
NcPoly quartic_relation(const StructureConstants& sc, const Alphabet& alphabet,
                        const OrderPtr& ord);

/***** identity generators *****/

// One named polynomial condition; the polynomial must vanish.
struct Equation {
    std::string name;
    Scalar lhs;
};

// Degree-four identities: four slot lines ("m4:L1:ijk".."m4:L4:ijk", 32
// equations) followed by the closed cubic conditions ("m4:closure:ijk", 8).
std::vector<Equation> gen_si4(const FrobeniusData& fd,
                              const StructureConstants& sc);

// Degree-five identities, five lines by four indices ("m5:L1:ijkh", 80).
// Evaluate after solve_u_table to re-check the elimination.
std::vector<Equation> gen_si5_lines(const FrobeniusData& fd,
                                    const StructureConstants& sc);

// The sixteen conditions left once the u-table has been eliminated from the
// degree-five lines, named "eq1".."eq16" in index order of the quartic
// constant they bound (1111, 1112, ..., 2222). Requires a solved u-table.
std::vector<Equation> residual_equations(const FrobeniusData& fd,
                                         const StructureConstants& sc);

// Degree-six identities ("m6:s:ijkhmn", 128), bilinear in the tables.
std::vector<Equation> gen_si6(const StructureConstants& sc);

/***** symbolic reports *****/

// Symbolic cubic-layer analysis for the Jordan pairing over {g, t, p, w}:
// the closed conditions form a linear system in the eight cubic constants
// whose determinant is a power of (t - g^3), so away from t = g^3 the cubic
// relation dies; on the branch the solution space is exactly the normalized
// pattern.
struct JordanCubicReport {
    ParamSetPtr params;          // g, t, p, w
    Alphabet alphabet;           // x1, x2 in weight 1
    Scalar det;                  // determinant of the closed 8x8 system
    bool det_is_branch_power;    // det == unit * (t - g^3)^8
    std::size_t rank_on_branch;  // rank after substituting t = g^3
    bool kernel_matches_pattern; // kernel == span of the normalized pattern
    StructureConstants tables;   // a and b filled over {g, t, p, w}
    NcPoly r3;                   // the cubic relation of the pattern
};
JordanCubicReport jordan_reduce_si4();

// Fully symbolic degree-five elimination over {g, t, p, w}, the six pairing
// constants c11..c32 and the sixteen quartic constants v1111..v2222.
struct QuarticElimination {
    ParamSetPtr params;
    FrobeniusData fd;
    StructureConstants tables;       // u solved symbolically
    std::vector<Equation> residuals; // eq1..eq16
    bool elimination_consistent;     // the five-line system collapses to them
};
QuarticElimination gen_si5();

// Branch facts forced by the residual conditions:
//   * while 1 - g^4 t is invertible, eq1/eq2/eq3/eq5/eq9 admit only the zero
//     solution for the five surviving leading quartic constants;
//   * eq4 then pins the combination M = g^4 c11 + c21 + g^3 c31 to zero and
//     eq6 pins v1212 to zero, killing the quartic relation's leading term;
//   * (1 - g^4 t) + g^4 (t - g^3) == 1 - g^7, so on both branches g is a
//     seventh root of unity.
struct QuarticBranchCertificate {
    bool offbranch_only_zero;
    bool offbranch_collapses;
    bool seventh_root_identity;
};
QuarticBranchCertificate certify_quartic_branch();

// Once g^4 t = 1 holds, the six surviving linear conditions on the leading
// quartic constants close in exactly two ways: either the combination
// M = g^4 c11 + c21 + g^3 c31 vanishes and the constants die with it, or
// M != 0 forces g = 1 and p = 1 with the leading constant pinned to M/2.
struct CaseBranch {
    std::string name;
    std::vector<std::string> conditions;
};
struct CaseSplitReport {
    std::vector<CaseBranch> branches; // case1-m-zero, case2-m-nonzero
    ParamSetPtr case_params;          // p, m and the five leading constants
    std::map<std::string, Scalar> case2_pins; // solved constants at g = p = 1
    bool case1_only_zero;    // M = 0 forces the five constants to vanish
    bool case2_consistent;   // g = 1, p = 1 solves for every M
    bool case2_forced;       // M != 0 rules out every other seventh root
};
CaseSplitReport case_split();

/***** solution families *****/

// A solution of the full identity system with free parameters, stored as
// parse texts over its parameter set. The six pairing constants c11..c32 are
// always parameters; family parameters follow. Table entries not listed in
// `v` are zero, and the pairing constant is always t = g^3.
struct SolutionFamily {
    std::string name;
    BaseField field = BaseField::Q;
    std::vector<std::string> extra_params; // parameter names after c11..c32
    std::vector<std::string> frees;        // declared family parameters
    std::string g, p, w;                   // parse texts over param_set()
    std::vector<std::pair<std::string, std::string>> v; // entry name -> text

    ParamSetPtr param_set() const;
};

// The six families, in catalog order S1..S6. S1..S5 close the first case of
// the split, S6 the second.
const std::vector<SolutionFamily>& solution_catalog();
const SolutionFamily& solution(const std::string& name);

// JSON image of a family; the files under data/solutions mirror the built-in
// catalog through these two maps.
std::string solution_to_json(const SolutionFamily& fam);
SolutionFamily solution_from_json(const std::string& text);

/***** verification *****/

// Result of replaying a family against every identity. The pairing constants
// are solved from the residual and degree-six conditions (declared family
// parameters are never used as pivots), the u-table is rebuilt with the
// solved values, and every identity is then evaluated; `failures` lists the
// names of conditions that did not vanish.
struct VerificationReport {
    std::string family;
    bool ok = false;
    std::size_t equations_checked = 0;
    std::vector<std::string> failures;
    std::map<std::string, Scalar> pinned; // solved pairing constants
    std::vector<std::string> free_names;  // parameters left symbolic
};

// Verifies a family, optionally at an assignment of some of its declared
// parameters; the default replay is fully symbolic. Unknown assignment keys
// raise InvalidInputError.
VerificationReport verify_solution(const SolutionFamily& fam,
                                   const std::map<std::string, Scalar>& assign = {});

// Throws VerificationFailedError naming the first failure when not ok.
void require_verified(const VerificationReport& report);

// The presentation generated by a family's cubic and quartic relations, with
// parameters renamed to the letters used by the matching catalog algebra.
Presentation relations_from_solution(const SolutionFamily& fam);

} // namespace ncg

#endif
