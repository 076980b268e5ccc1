#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncg/parse.hpp"

#include <random>

using namespace ncg;

namespace {

struct Ctx {
    Alphabet alphabet = make_alphabet({"x1", "x2"}, {1, 1});
    ParamSetPtr params = make_param_set(BaseField::Q, {"u", "v", "w"});
    OrderPtr ord = make_graded_lex(alphabet);

    NcPoly poly(const std::string& text) const {
        return parse_poly(text, alphabet, params, ord);
    }
    Word word(const std::string& text) const { return poly(text).leading_word(); }
};

Word random_word(std::mt19937& rng, int gens, int maxlen) {
    std::uniform_int_distribution<int> len(0, maxlen);
    std::uniform_int_distribution<int> pick(0, gens - 1);
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& g : w) g = static_cast<Gen>(pick(rng));
    return w;
}

} // namespace

TEST_CASE("alphabet construction validates input") {
    CHECK_THROWS_AS(make_alphabet({"x", "x"}, {1, 1}), InvalidInputError);
    CHECK_THROWS_AS(make_alphabet({"x"}, {0}), InvalidInputError);
    CHECK_THROWS_AS(make_alphabet({"x"}, {1, 2}), InvalidInputError);
    Alphabet a = make_alphabet({"x2", "z1", "z2"}, {1, 2, 3});
    CHECK(a.weight({0, 1, 2}) == 6);
    CHECK(a.index_of("z2") == 2);
}

TEST_CASE("word factor search finds leftmost occurrences") {
    Word w{0, 1, 1, 0, 1, 1};
    CHECK(find_factor(w, {1, 1}) == 1);
    CHECK(find_factor(w, {1, 1}, 2) == 4);
    CHECK(find_factor(w, {0, 0}) == word_npos);
    CHECK(is_factor(w, {1, 0, 1}));
}

TEST_CASE("graded lex ranks the standard degree-3 words as documented") {
    Ctx c;
    Word a = c.word("x1*x2^2");
    Word b = c.word("x2*x1*x2");
    Word d = c.word("x2^2*x1");
    CHECK(c.ord->greater(a, b));
    CHECK(c.ord->greater(b, d));
    CHECK(c.ord->cmp(a, a) == 0);
    CHECK(c.ord->less(d, a));
    // degree dominates everything
    CHECK(c.ord->less(a, c.word("x2^4")));
}

TEST_CASE("graded lex respects weights before positions") {
    Alphabet a = make_alphabet({"x1", "x2"}, {1, 2});
    auto ord = make_graded_lex(a);
    // weight(x2) = 2 = weight(x1*x1); first position decides the tie
    CHECK(ord->greater({0, 0}, {1}));
    CHECK(ord->less({1}, {0, 0}));
    CHECK(ord->greater({1}, {0}));
}

TEST_CASE("graded lex is admissible on random triples") {
    std::mt19937 rng(4242);
    Alphabet alph = make_alphabet({"a", "b", "c"}, {1, 1, 1});
    auto ord = make_graded_lex(alph);
    int checked = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        Word u = random_word(rng, 3, 5);
        Word v = random_word(rng, 3, 5);
        int c = ord->cmp(u, v);
        CHECK(c == -ord->cmp(v, u));
        if (c == 0) {
            CHECK(u == v);
            continue;
        }
        Word l = random_word(rng, 3, 3);
        Word r = random_word(rng, 3, 3);
        CHECK(ord->cmp(concat(l, u, r), concat(l, v, r)) == c);
        bool padded_grows = ord->greater(concat(l, u, r), u) || (l.empty() && r.empty());
        CHECK(padded_grows);
        ++checked;
    }
    CHECK(checked > 1500);
}

TEST_CASE("multidegree comparison orders by sum then leftmost entry") {
    using V = std::vector<std::int64_t>;
    CHECK(MultiGrading::cmp(V{3, 1}, V{2, 2}) == 1);
    CHECK(MultiGrading::cmp(V{2, 2}, V{1, 3}) == 1);
    CHECK(MultiGrading::cmp(V{1, 2}, V{3, 1}) == -1);
    CHECK(MultiGrading::cmp(V{1, 1}, V{0, 2}) == 1);
    CHECK(MultiGrading::cmp(V{2, 1}, V{2, 1}) == 0);
}

TEST_CASE("multidegree refined order compares splits before the base order") {
    Alphabet alph = make_alphabet({"x1", "x2"}, {1, 1});
    MultiGrading mg = make_multi_grading(alph, {{1, 0}, {0, 1}});
    auto ord = make_multidegree_refined(mg, make_graded_lex(alph));
    // split (1,2) for both, base order decides
    CHECK(ord->greater({0, 1, 1}, {1, 1, 0}));
    // higher first component wins at equal total
    CHECK(ord->greater({0, 0, 1}, {1, 1, 1}));
    CHECK(ord->less({1, 1}, {0, 0, 1})); // totals 2 vs 3
    CHECK(ord->greater({0, 0, 0, 1}, {0, 1, 1, 1}));
    CHECK(mg.degree({0, 1, 1, 0}) == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("multidegrees must partition the generator weights") {
    Alphabet alph = make_alphabet({"x1", "x2"}, {1, 1});
    CHECK_THROWS_AS(make_multi_grading(alph, {{1, 1}, {0, 1}}), HomogeneityError);
    CHECK_THROWS_AS(make_multi_grading(alph, {{1, 0}}), InvalidInputError);
}

TEST_CASE("polynomial arithmetic collects words") {
    Ctx c;
    NcPoly sum = c.poly("(x1 + x2)*(x1 + x2)");
    CHECK(sum.term_count() == 4);
    CHECK(sum == c.poly("x1^2 + x1*x2 + x2*x1 + x2^2"));
    CHECK((sum - sum).is_zero());
    CHECK(sum.leading_word() == c.word("x1^2"));

    NcPoly f = c.poly("x1*x2^2 - 2*x2*x1*x2 + x2^2*x1");
    CHECK(f.leading_word() == c.word("x1*x2^2"));
    CHECK(f.leading_coeff() == Scalar::integer(1));
    CHECK(f.max_weight(c.alphabet) == 3);
    CHECK(f.is_weight_homogeneous(c.alphabet));
    CHECK(!c.poly("x1 + x1*x2").is_weight_homogeneous(c.alphabet));
}

TEST_CASE("monic division records the leading coefficient") {
    Ctx c;
    NcPoly f = c.poly("3*x1*x2 - 6*x2*x1");
    Scalar lc = f.make_monic();
    CHECK(lc == Scalar::integer(3));
    CHECK(f == c.poly("x1*x2 - 2*x2*x1"));

    NcPoly g = c.poly("w*x1*x2 - x2*x1");
    Scalar wlc = g.make_monic();
    CHECK(wlc == Scalar::param(c.params, "w"));
    CHECK(g.leading_coeff().is_one());
}

TEST_CASE("printing descends in the order and round-trips through the parser") {
    Ctx c;
    NcPoly f = c.poly("x2^2*x1 + w*x2^3 - 2*x2*x1*x2 + x1*x2^2");
    CHECK(f.str(c.alphabet) == "x1*x2^2 - 2*x2*x1*x2 + x2^2*x1 + (w)*x2^3");
    CHECK(parse_poly(f.str(c.alphabet), c.alphabet, c.params, c.ord) == f);

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        NcPoly p = NcPoly::zero(c.ord, c.params);
        for (int t = 0; t < 4; ++t)
            p.add_term(random_word(rng, 2, 4), Scalar::integer(coef(rng)));
        CHECK(parse_poly(p.str(c.alphabet), c.alphabet, c.params, c.ord) == p);
    }
}

TEST_CASE("parser handles scalars, powers and division by scalars") {
    Ctx c;
    CHECK(c.poly("x1*x2/2") == c.poly("(1/2)*x1*x2"));
    CHECK(c.poly("(x1 + x2)^2") == c.poly("x1^2 + x1*x2 + x2*x1 + x2^2"));
    CHECK(c.poly("7*w*x1/7") == c.poly("w*x1"));
    CHECK(c.poly("x1^0") == c.poly("1"));
    CHECK_THROWS_AS(c.poly("x1/x2"), ParseError);
    CHECK_THROWS_AS(c.poly("x1/0"), ParseError);
}

TEST_CASE("parse errors carry positions") {
    Ctx c;
    try {
        c.poly("x1 + $");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 6);
    }
    CHECK_THROWS_AS(c.poly("x1 + "), ParseError);
    CHECK_THROWS_AS(c.poly("y1"), ParseError);
    CHECK_THROWS_AS(c.poly("x1 x2"), ParseError);
}

TEST_CASE("scalar parsing supports the cyclotomic root") {
    auto qz = make_param_set(BaseField::QZeta7, {"d"});
    Scalar s = parse_scalar("j^4/2 + 2*j^3 + 3*j^2 + 2 + 7*j/2", qz);
    CHECK(!s.is_zero());
    Scalar j = Scalar::base(qz, BaseValue::cyclo(Cyclo7::root_power(1)));
    Scalar expect = j.pow(4) / Scalar::integer(2) + Scalar::integer(2) * j.pow(3) +
                    Scalar::integer(3) * j.pow(2) + Scalar::integer(2) +
                    Scalar::integer(7) * j / Scalar::integer(2);
    CHECK(s == expect);
    CHECK_THROWS_AS(parse_scalar("x1", qz), ParseError);
    auto q = make_param_set(BaseField::Q, {});
    CHECK_THROWS_AS(parse_scalar("j", q), ParseError);
}

TEST_CASE("algebra files parse into validated presentations") {
    const char* text = R"(
# cubic-quartic test input
algebra J
field Q
params u v w
gens x1 x2
zrdeg x1 = (1,0)
zrdeg x2 = (0,1)
rel x1*x2^2 - 2*x2*x1*x2 + x2^2*x1
rel x1^3*x2 - 3*x1^2*x2*x1 + 3*x1*x2*x1^2 - x2*x1^3 + (1-u)*x1*x2*x1*x2 + u*x2*x1^2*x2 + (u-3)*x2*x1*x2*x1 + (2-u)*x2^2*x1^2 - v*x2^2*x1*x2 + v*x2^3*x1 + w*x2^4
)";
    Presentation p = parse_algebra(text);
    CHECK(p.name == "J");
    CHECK(p.alphabet.names == std::vector<std::string>{"x1", "x2"});
    CHECK(p.params->names == std::vector<std::string>{"u", "v", "w"});
    REQUIRE(p.zr.has_value());
    CHECK(p.zr->rank == 2);
    REQUIRE(p.relations.size() == 2);
    CHECK(p.relations[0].leading_word() == Word{0, 1, 1});
    CHECK(p.relations[1].leading_word() == Word{0, 0, 0, 1});
    CHECK(p.relations[1].term_count() == 11);

    // round-trip through the printer
    Presentation q = p;
    q.relations.clear();
    for (const auto& rel : p.relations)
        q.relations.push_back(
            parse_poly(rel.str(p.alphabet), p.alphabet, p.params, p.order));
    CHECK(same_presentation(p, q));
}

TEST_CASE("presentation validation rejects inhomogeneous relations") {
    const char* text = R"(
algebra bad
gens x y
rel x*y - x
)";
    CHECK_THROWS_AS(parse_algebra(text), HomogeneityError);

    const char* clash = R"(
algebra bad2
params x
gens x y
rel x*y - y*x
)";
    CHECK_THROWS_AS(parse_algebra(clash), InvalidInputError);
}

TEST_CASE("specialization rewrites relation coefficients") {
    Ctx c;
    Presentation p;
    p.name = "demo";
    p.alphabet = c.alphabet;
    p.params = c.params;
    p.order = c.ord;
    p.relations.push_back(c.poly("x1*x2 - u*x2*x1"));
    validate_presentation(p);

    std::map<std::string, Scalar> at{{"u", Scalar::integer(2)},
                                     {"v", Scalar::integer(0)},
                                     {"w", Scalar::integer(0)}};
    Presentation q = specialize_presentation(p, at, trivial_param_set());
    CHECK(q.relations[0] ==
          parse_poly("x1*x2 - 2*x2*x1", c.alphabet, trivial_param_set(), c.ord));
}
