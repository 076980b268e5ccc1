#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncg/gb.hpp"
#include "ncg/parse.hpp"

#include <algorithm>
#include <random>

using namespace ncg;

namespace {

const char* J_ALG = R"(
algebra J
params u v w
gens x1 x2
zrdeg x1 = (1,0)
zrdeg x2 = (0,1)
rel x1*x2^2 - 2*x2*x1*x2 + x2^2*x1
rel x1^3*x2 - 3*x1^2*x2*x1 + 3*x1*x2*x1^2 - x2*x1^3 + (1-u)*x1*x2*x1*x2 + u*x2*x1^2*x2 + (u-3)*x2*x1*x2*x1 + (2-u)*x2^2*x1^2 - v*x2^2*x1*x2 + v*x2^3*x1 + w*x2^4
)";

// Reduced third element produced by the weight-5 overlap of the two
// defining relations above.
const char* J_THIRD =
    "x1^2*x2*x1*x2 - 3*x1*x2*x1^2*x2 + 2*x1*x2*x1*x2*x1 + 3*x2*x1^2*x2*x1"
    " - 5*x2*x1*x2*x1^2 + (2*u-2)*x2*x1*x2*x1*x2 + 2*x2^2*x1^3"
    " - 2*u*x2^2*x1^2*x2 + (6-2*u)*x2^2*x1*x2*x1 + (2*u-4)*x2^3*x1^2"
    " + 2*v*x2^3*x1*x2 - 2*v*x2^4*x1 - 2*w*x2^5";

const char* U_ALG = R"(
algebra U
params g h
gens x1 x2
rel x1*x2^2 - 2*x2*x1*x2 + x2^2*x1
rel x1*x2*x1*x2 - x2*x1^2*x2 - x2*x1*x2*x1 + x2^2*x1^2 + g*x2^2*x1*x2 - g*x2^3*x1 + h*x2^4
)";

// The two scalar slots of this family coincide on the actual solution locus;
// V_DIAG is that one-parameter diagonal, V_OFF keeps the slots independent.
const char* V_DIAG = R"(
algebra V
field Qzeta7
params c
gens x1 x2
rel x1*x2^2 - (1+j^2)*x2*x1*x2 + j^2*x2^2*x1 + c*(-j^6+j^5)*x2^3
rel x1*x2*x1*x2 - x2*x1^2*x2 - j^2*x2*x1*x2*x1 + j^2*x2^2*x1^2 + c*(j^4-j^3+j^2)*x2^2*x1*x2 + c*(2*j^5+2*j^3+j+1)*x2^3*x1 + c^2*(j^6-2*j^5-j^3-j^2-2)*x2^4
)";

const char* V_OFF = R"(
algebra Voff
field Qzeta7
params w l
gens x1 x2
rel x1*x2^2 - (1+j^2)*x2*x1*x2 + j^2*x2^2*x1 + w*(-j^6+j^5)*x2^3
rel x1*x2*x1*x2 - x2*x1^2*x2 - j^2*x2*x1*x2*x1 + j^2*x2^2*x1^2 + l*(j^4-j^3+j^2)*x2^2*x1*x2 + l*(2*j^5+2*j^3+j+1)*x2^3*x1 + l^2*(j^6-2*j^5-j^3-j^2-2)*x2^4
)";

const char* O_ALG = R"(
algebra O
params w
gens x1 x2
rel x1*x2^2 - x2^2*x1 + w*x2^3
rel x1*x2*x1*x2 + x2*x1^2*x2 + x2*x1*x2*x1 - 3*x2^2*x1^2 + (1 - w/2)*x2^2*x1*x2 + (7*w/2 - 1)*x2^3*x1 + (-3*w^2/2 + w/2)*x2^4
)";

const char* P_ALG = R"(
algebra P
params a
gens x1 x2
rel x1*x2^2 - x2^2*x1 + (2/7)*x2^3
rel x1*x2*x1*x2 + x2*x1^2*x2 + x2*x1*x2*x1 - 3*x2^2*x1^2 + (6/7)*x2^2*x1*x2 + a*x2^4
)";

const char* Q_ALG = R"(
algebra Q
field Qzeta7
params d
gens x1 x2
rel x1*x2^2 - (1-j^3)*x2*x1*x2 - j^3*x2^2*x1 + d*x2^3
rel x1*x2*x1*x2 + j*x2*x1^2*x2 - (j^6+j^2+2*j+2)*x2*x1*x2*x1 + (j^6+j^2+j+1)*x2^2*x1^2 + ((j^6+1)/2 - d*(j^4/2 + 2*j^3 + 3*j^2 + 2 + 7*j/2))*x2^2*x1*x2 + (d*(j^5 + 3*j^4/2 + 2*j^3 + 3*j^2 + 7*j/2 + 3) - (j^6+1)/2)*x2^3*x1 + (1/2)*(d^2*(-4*j^5 + 10*j^3 + 14*j^2 + 13*j + 6) - d*(j^3 + 2*j^2 + 2*j + 1))*x2^4
)";

NcPoly rel_poly(const Presentation& p, const std::string& text) {
    return parse_poly(text, p.alphabet, p.params, p.order);
}

std::vector<std::string> leading_words(const GroebnerResult& gb,
                                       const Alphabet& alphabet) {
    std::vector<std::string> out;
    for (const auto& g : gb.basis) out.push_back(word_str(alphabet, g.leading_word()));
    return out;
}

std::vector<BigInt> big(const std::vector<long>& v) {
    return std::vector<BigInt>(v.begin(), v.end());
}

// Every non-leading word of every element must avoid every leading word,
// distinct elements must have non-dividing leading words, and every element
// must be monic.
void check_reduced(const GroebnerResult& gb) {
    for (const auto& g : gb.basis) {
        CHECK(g.leading_coeff() == Scalar::one(g.params()));
        for (std::size_t i = 0; i < gb.basis.size(); ++i) {
            const Word& lm = gb.basis[i].leading_word();
            for (const auto& [w, c] : g.terms()) {
                (void)c;
                if (w == g.leading_word()) {
                    if (&g != &gb.basis[i]) CHECK(!is_factor(w, lm));
                } else {
                    CHECK(!is_factor(w, lm));
                }
            }
        }
    }
}

} // namespace

TEST_CASE("no relations presents the free algebra") {
    Alphabet a = make_alphabet({"x", "y"}, {1, 1});
    GroebnerResult gb = groebner({}, a, {.bound = 5, .max_basis = 16});
    CHECK(gb.complete);
    CHECK(gb.basis.empty());
    CHECK(normal_word_counts(gb, a, 5) == big({1, 2, 4, 8, 16, 32}));
    NcPoly f = parse_poly("x*y - y*x", a, trivial_param_set(), make_graded_lex(a));
    CHECK(member(f, gb, a) == Membership::No);
}

TEST_CASE("a single commutator is already a complete basis") {
    Alphabet a = make_alphabet({"x", "y"}, {1, 1});
    auto ord = make_graded_lex(a);
    auto ps = trivial_param_set();
    NcPoly f = parse_poly("x*y - y*x", a, ps, ord);
    GroebnerResult gb = groebner({f.scaled(Scalar::integer(-3))}, a, {.bound = 6, .max_basis = 16});
    CHECK(gb.complete);
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == f);
    CHECK(gb.assumed_nonzero.empty());
    CHECK(normal_word_counts(gb, a, 6) == big({1, 2, 3, 4, 5, 6, 7}));
    CHECK(member(parse_poly("x*y^3 - y^3*x", a, ps, ord), gb, a) == Membership::Yes);
    CHECK(member(parse_poly("x - y", a, ps, ord), gb, a) == Membership::No);
    CHECK(membership_name(Membership::Yes) == "yes");
    CHECK(membership_name(Membership::No) == "no");
    CHECK(membership_name(Membership::UnknownBeyondBound) == "unknown-beyond-bound");
}

TEST_CASE("a nonzero constant collapses the quotient to zero") {
    Alphabet a = make_alphabet({"x"}, {1});
    auto ord = make_graded_lex(a);
    auto ps = trivial_param_set();
    GroebnerResult gb = groebner({parse_poly("2", a, ps, ord)}, a, {.bound = 3, .max_basis = 4});
    CHECK(gb.complete);
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == parse_poly("1", a, ps, ord));
    CHECK(normal_word_counts(gb, a, 4) == big({0, 0, 0, 0, 0}));
    CHECK(member(parse_poly("x", a, ps, ord), gb, a) == Membership::Yes);
}

TEST_CASE("guard rails reject bad options") {
    Presentation p = parse_algebra(J_ALG);
    CHECK_THROWS_AS(groebner(p, {.bound = 0, .max_basis = 4}), InvalidInputError);
    CHECK_THROWS_AS(groebner(p, {.bound = 7, .max_basis = 2}), InvalidInputError);
}

TEST_CASE("two-parameter pencil completes at bound 7 with a third element") {
    Presentation p = parse_algebra(J_ALG);
    GroebnerResult gb = groebner(p, {.bound = 7, .max_basis = 64});
    CHECK(gb.complete);
    CHECK(gb.bound == 7);
    REQUIRE(gb.basis.size() == 3);
    CHECK(gb.assumed_nonzero.empty());
    CHECK(gb.basis[0] == p.relations[0]);
    CHECK(gb.basis[1] == p.relations[1]);
    CHECK(gb.basis[2] == rel_poly(p, J_THIRD));
    CHECK(leading_words(gb, p.alphabet) ==
          std::vector<std::string>{"x1*x2^2", "x1^3*x2", "x1^2*x2*x1*x2"});
    CHECK(gb.spolys_reduced >= 3);
    CHECK(gb.additions == 1);
    check_reduced(gb);
}

TEST_CASE("quotient dimensions match the expected series through degree 10") {
    Presentation p = parse_algebra(J_ALG);
    GroebnerResult gb = groebner(p, {.bound = 7, .max_basis = 64});
    CHECK(normal_word_counts(gb, p.alphabet, 10) ==
          big({1, 2, 4, 7, 11, 16, 23, 31, 41, 53, 67}));
}

TEST_CASE("membership separates ideal elements from normal words") {
    Presentation p = parse_algebra(J_ALG);
    GroebnerResult gb = groebner(p, {.bound = 7, .max_basis = 64});
    REQUIRE(gb.basis.size() == 3);
    NcPoly f3 = rel_poly(p, J_THIRD);
    CHECK(member(f3, gb, p.alphabet) == Membership::Yes);
    CHECK(member(rel_poly(p, "x1*x2*x1*x2"), gb, p.alphabet) == Membership::No);
    CHECK(member(rel_poly(p, "x2^8"), gb, p.alphabet) == Membership::No);

    // sandwich combinations of basis elements always belong to the ideal
    NcPoly combo = rel_poly(p, "0");
    combo.add_scaled_sandwich(Scalar::integer(5), {1, 1}, gb.basis[0], {0});
    combo.add_scaled_sandwich(Scalar::param(p.params, "w"), {}, gb.basis[1], {1, 0});
    combo.add_scaled_sandwich(Scalar::integer(-1), {0}, gb.basis[2], {});
    CHECK(member(combo, gb, p.alphabet) == Membership::Yes);

    // remainders are normal and stable under adding ideal elements
    NcPoly f = rel_poly(p, "x1^2*x2*x1*x2 + u*x1*x2 - 3*x2*x1 + w*x2^5");
    NcPoly r = normal_form(f, gb.basis);
    for (const auto& g : gb.basis)
        for (const auto& [w, c] : r.terms()) {
            (void)c;
            CHECK(!is_factor(w, g.leading_word()));
        }
    CHECK(normal_form(f + combo, gb.basis) == r);
}

TEST_CASE("multidegree-refined order reproduces the same reduced basis") {
    Presentation p = parse_algebra(J_ALG);
    REQUIRE(p.zr.has_value());
    OrderPtr refined = make_multidegree_refined(*p.zr, p.order);
    std::vector<NcPoly> rels;
    for (const auto& r : p.relations) rels.push_back(r.rebuilt_with(refined));
    GroebnerResult gb = groebner(rels, p.alphabet, {.bound = 7, .max_basis = 64});
    CHECK(gb.complete);
    REQUIRE(gb.basis.size() == 3);

    GroebnerResult base = groebner(p, {.bound = 7, .max_basis = 64});
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(gb.basis[i].rebuilt_with(p.order) == base.basis[i]);
}

TEST_CASE("shuffling and rescaling the relations leaves the basis unchanged") {
    Presentation p = parse_algebra(J_ALG);
    GroebnerResult ref = groebner(p, {.bound = 7, .max_basis = 64});
    std::vector<std::string> want;
    for (const auto& g : ref.basis) want.push_back(g.str(p.alphabet));

    std::mt19937 rng(20260101);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<NcPoly> rels = p.relations;
        std::shuffle(rels.begin(), rels.end(), rng);
        for (std::size_t k = 0; k < rels.size(); ++k)
            rels[k] = rels[k].scaled(
                Scalar::rational(Rational(2 * static_cast<int>(k) + 3) / Rational(7)));
        GroebnerResult gb = groebner(rels, p.alphabet, {.bound = 7, .max_basis = 64});
        std::vector<std::string> got;
        for (const auto& g : gb.basis) got.push_back(g.str(p.alphabet));
        CHECK(got == want);
    }
}

TEST_CASE("specialization commutes with completion") {
    Presentation p = parse_algebra(J_ALG);
    GroebnerResult generic = groebner(p, {.bound = 7, .max_basis = 64});
    REQUIRE(generic.assumed_nonzero.empty());

    std::mt19937 rng(777);
    std::uniform_int_distribution<int> num(-6, 6);
    for (int trial = 0; trial < 5; ++trial) {
        std::map<std::string, Scalar> at{
            {"u", Scalar::rational(Rational(num(rng)) / Rational(2))},
            {"v", Scalar::rational(Rational(num(rng)) / Rational(3))},
            {"w", Scalar::integer(num(rng))}};
        Presentation q = specialize_presentation(p, at, trivial_param_set());
        GroebnerResult special = groebner(q, {.bound = 7, .max_basis = 64});
        REQUIRE(special.basis.size() == generic.basis.size());
        for (std::size_t i = 0; i < generic.basis.size(); ++i)
            CHECK(special.basis[i] ==
                  generic.basis[i].coefficients_substituted(at, trivial_param_set()));
    }
}

TEST_CASE("factor-commutation pair stays put below its first ambiguity") {
    Presentation p = parse_algebra(U_ALG);
    GroebnerResult gb = groebner(p, {.bound = 4, .max_basis = 16});
    CHECK(!gb.complete);
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == p.relations[0]);
    CHECK(gb.basis[1] == p.relations[1]);
    CHECK(member(rel_poly(p, "x2^6"), gb, p.alphabet) ==
          Membership::UnknownBeyondBound);
    CHECK(member(p.relations[1], gb, p.alphabet) == Membership::Yes);
    // weight within the bound: exhaustive even though truncated
    CHECK(member(rel_poly(p, "x2^4"), gb, p.alphabet) == Membership::No);
}

TEST_CASE("factor-commutation pair is complete at bound 6") {
    Presentation p = parse_algebra(U_ALG);
    GroebnerResult gb = groebner(p, {.bound = 6, .max_basis = 16});
    CHECK(gb.complete);
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.assumed_nonzero.empty());
    CHECK(leading_words(gb, p.alphabet) ==
          std::vector<std::string>{"x1*x2^2", "x1*x2*x1*x2"});
    CHECK(normal_word_counts(gb, p.alphabet, 5) == big({1, 2, 4, 7, 11, 17}));
    CHECK(member(rel_poly(p, "x2^6"), gb, p.alphabet) == Membership::No);
    check_reduced(gb);
}

TEST_CASE("cyclotomic pair matches the rational pair's dimensions") {
    Presentation p = parse_algebra(V_DIAG);
    GroebnerResult gb = groebner(p, {.bound = 6, .max_basis = 16});
    CHECK(gb.complete);
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.assumed_nonzero.empty());
    CHECK(gb.basis[0] == p.relations[0]);
    CHECK(gb.basis[1] == p.relations[1]);
    CHECK(leading_words(gb, p.alphabet) ==
          std::vector<std::string>{"x1*x2^2", "x1*x2*x1*x2"});
    CHECK(normal_word_counts(gb, p.alphabet, 5) == big({1, 2, 4, 7, 11, 17}));
    check_reduced(gb);
}

TEST_CASE("decoupling the cyclotomic pair's parameters breaks completeness") {
    // With the two scalar slots independent, the first superposition only
    // reduces to zero when their difference vanishes; away from that locus the
    // completion keeps growing and the degree-5 dimension drops to 16.
    Presentation p = parse_algebra(V_OFF);
    GroebnerResult gb = groebner(p, {.bound = 7, .max_basis = 64});
    CHECK(!gb.complete);
    CHECK(gb.assumed_nonzero.size() == 3);
    CHECK(gb.basis.size() == 8);
    std::vector<BigInt> counts = normal_word_counts(gb, p.alphabet, 7);
    REQUIRE(counts.size() == 8);
    CHECK(counts == big({1, 2, 4, 7, 11, 16, 21, 29}));
}

TEST_CASE("one-parameter families truncate to six leading words at bound 7") {
    // Two of the families share one leading-word set; the third lands on a
    // different set whose normal-word growth is nevertheless identical
    // through degree 7, so all three reach dimension 32 where the reference
    // series has 31.
    const std::vector<std::string> shared_lms{
        "x1*x2^2",           "x1*x2*x1*x2",        "x2^2*x1^2*x2",
        "x2^2*x1^3*x2",      "x2^2*x1*x2*x1^2*x2", "x2^2*x1^4*x2"};
    const std::vector<std::string> q_lms{
        "x1*x2^2",           "x1*x2*x1*x2",        "x2^2*x1^2*x2",
        "x2*x1*x2*x1^2*x2",  "x2^3*x1^3*x2",       "x2*x1^2*x2*x1^2*x2"};
    const std::vector<std::pair<const char*, const std::vector<std::string>*>>
        families{{O_ALG, &shared_lms}, {P_ALG, &shared_lms}, {Q_ALG, &q_lms}};
    for (const auto& [text, want_lms] : families) {
        Presentation p = parse_algebra(text);
        GroebnerResult gb = groebner(p, {.bound = 7, .max_basis = 64});
        INFO("algebra ", p.name);
        CHECK(!gb.complete);
        CHECK(gb.assumed_nonzero.empty());
        REQUIRE(gb.basis.size() == 6);
        std::vector<std::string> lms = leading_words(gb, p.alphabet);
        std::sort(lms.begin(), lms.end());
        std::vector<std::string> want = *want_lms;
        std::sort(want.begin(), want.end());
        CHECK(lms == want);
        CHECK(normal_word_counts(gb, p.alphabet, 7) ==
              big({1, 2, 4, 7, 11, 16, 23, 32}));
        check_reduced(gb);
    }
}

TEST_CASE("completion output is deterministic across repeated runs") {
    Presentation p = parse_algebra(O_ALG);
    GroebnerResult a = groebner(p, {.bound = 7, .max_basis = 64});
    GroebnerResult b = groebner(p, {.bound = 7, .max_basis = 64});
    REQUIRE(a.basis.size() == b.basis.size());
    for (std::size_t i = 0; i < a.basis.size(); ++i)
        CHECK(a.basis[i].str(p.alphabet) == b.basis[i].str(p.alphabet));
    CHECK(a.assumed_nonzero == b.assumed_nonzero);
    CHECK(a.spolys_reduced == b.spolys_reduced);
}
