#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncg/hilbert.hpp"

#include <algorithm>
#include <random>

using namespace ncg;

namespace {

Coeffs coeffs(const std::vector<long>& v) { return Coeffs(v.begin(), v.end()); }

Coeffs as_rationals(const std::vector<BigInt>& v) {
    Coeffs out;
    for (const auto& n : v) out.emplace_back(n);
    return out;
}

// Exhaustive enumeration of factor-avoiding words, bucketed by weight.
std::vector<BigInt> brute_counts(const Alphabet& alphabet,
                                 const std::vector<Word>& forbidden,
                                 std::int64_t maxdeg) {
    std::vector<BigInt> out(static_cast<std::size_t>(maxdeg) + 1, BigInt(0));
    std::vector<Word> frontier{Word{}};
    out[0] = 1; // the empty word avoids everything
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (Gen g = 0; g < alphabet.size(); ++g) {
                Word ww = w;
                ww.push_back(g);
                if (alphabet.weight(ww) > maxdeg) continue;
                bool hit = false;
                for (const auto& f : forbidden)
                    if (is_factor(ww, f)) { hit = true; break; }
                if (hit) continue;
                ++out[static_cast<std::size_t>(alphabet.weight(ww))];
                next.push_back(std::move(ww));
            }
        frontier = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("denominator product expands to the expected polynomial") {
    Coeffs den = poly_mul(poly_mul(one_minus_tk(1), one_minus_tk(1)),
                          poly_mul(one_minus_tk(2), one_minus_tk(3)));
    CHECK(den == coeffs({1, -2, 0, 1, 1, 0, -2, 1}));
    CHECK(one_minus_tk(2) == coeffs({1, 0, -1}));
    CHECK_THROWS_AS(one_minus_tk(0), InvalidInputError);
}

TEST_CASE("series expansion reproduces the reference dimension sequence") {
    RationalSeries s;
    s.num = coeffs({1});
    s.den = poly_mul(poly_mul(one_minus_tk(1), one_minus_tk(1)),
                     poly_mul(one_minus_tk(2), one_minus_tk(3)));
    CHECK(expand_series(s, 10) ==
          coeffs({1, 2, 4, 7, 11, 16, 23, 31, 41, 53, 67}));
}

TEST_CASE("series expansion handles shifts, scales and bad input") {
    RationalSeries geo{coeffs({1}), coeffs({1, -2})};
    CHECK(expand_series(geo, 6) == coeffs({1, 2, 4, 8, 16, 32, 64}));

    RationalSeries shifted{coeffs({1, 1}), coeffs({1, -1})};
    CHECK(expand_series(shifted, 4) == coeffs({1, 2, 2, 2, 2}));

    RationalSeries half{coeffs({1}), coeffs({2, -1})};
    CHECK(expand_series(half, 2) ==
          Coeffs{Rational(1) / 2, Rational(1) / 4, Rational(1) / 8});

    RationalSeries bad{coeffs({1}), coeffs({0, 1})};
    CHECK_THROWS_AS(expand_series(bad, 3), InvalidInputError);
    RationalSeries empty_den{coeffs({1}), {}};
    CHECK_THROWS_AS(expand_series(empty_den, 3), InvalidInputError);
}

TEST_CASE("series comparison reports the first difference") {
    SeriesComparison eq = compare_series(coeffs({1, 2, 4, 7}), coeffs({1, 2, 4, 7, 11}));
    CHECK(eq.equal);

    SeriesComparison gt = compare_series(coeffs({1, 2, 4, 7, 11, 17}),
                                         coeffs({1, 2, 4, 7, 11, 16, 23}));
    CHECK(!gt.equal);
    CHECK(gt.index == 5);
    CHECK(gt.sign == 1);

    SeriesComparison lt = compare_series(coeffs({1, 2, 3}), coeffs({1, 2, 4}));
    CHECK(!lt.equal);
    CHECK(lt.index == 2);
    CHECK(lt.sign == -1);
}

TEST_CASE("factor avoidance matches the truncation rejection pattern") {
    Alphabet a = make_alphabet({"x1", "x2"}, {1, 1});
    // x1*x2^2 and x1*x2*x1*x2: the two-element basis truncation
    std::vector<BigInt> pair_counts =
        count_avoiding_words(a, {{0, 1, 1}, {0, 1, 0, 1}}, 5);
    CHECK(as_rationals(pair_counts) == coeffs({1, 2, 4, 7, 11, 17}));

    // six leading words of the bound-7 truncation
    std::vector<Word> six{{0, 1, 1},          {0, 1, 0, 1},    {1, 1, 0, 0, 1},
                          {1, 1, 0, 0, 0, 1}, {1, 1, 0, 1, 0, 0, 1},
                          {1, 1, 0, 0, 0, 0, 1}};
    std::vector<BigInt> six_counts = count_avoiding_words(a, six, 7);
    CHECK(as_rationals(six_counts) == coeffs({1, 2, 4, 7, 11, 16, 23, 32}));

    // both disagree with the reference series where expected
    RationalSeries ref{coeffs({1}),
                       poly_mul(poly_mul(one_minus_tk(1), one_minus_tk(1)),
                                poly_mul(one_minus_tk(2), one_minus_tk(3)))};
    SeriesComparison c5 =
        compare_series(as_rationals(pair_counts), expand_series(ref, 10));
    CHECK(!c5.equal);
    CHECK(c5.index == 5);
    CHECK(c5.sign == 1);
    SeriesComparison c7 =
        compare_series(as_rationals(six_counts), expand_series(ref, 10));
    CHECK(!c7.equal);
    CHECK(c7.index == 7);
    CHECK(c7.sign == 1);
}

TEST_CASE("three forbidden words reproduce the full dimension sequence") {
    Alphabet a = make_alphabet({"x1", "x2"}, {1, 1});
    std::vector<Word> lms{{0, 1, 1}, {0, 0, 0, 1}, {0, 0, 1, 0, 1}};
    std::vector<BigInt> counts = count_avoiding_words(a, lms, 10);
    RationalSeries ref{coeffs({1}),
                       poly_mul(poly_mul(one_minus_tk(1), one_minus_tk(1)),
                                poly_mul(one_minus_tk(2), one_minus_tk(3)))};
    CHECK(as_rationals(counts) == expand_series(ref, 10));
}

TEST_CASE("single-letter saturation dies after the forbidden power") {
    Alphabet a = make_alphabet({"x"}, {1});
    CHECK(count_avoiding_words(a, {{0, 0, 0}}, 5) ==
          std::vector<BigInt>{1, 1, 1, 0, 0, 0});
}

TEST_CASE("weighted generators count weighted compositions") {
    Alphabet a = make_alphabet({"x", "y"}, {1, 2});
    CHECK(count_avoiding_words(a, {}, 6) ==
          std::vector<BigInt>{1, 1, 2, 3, 5, 8, 13});
}

TEST_CASE("automaton construction validates its input") {
    Alphabet a = make_alphabet({"x", "y"}, {1, 1});
    CHECK_THROWS_AS(build_factor_automaton(a, {{}}), InvalidInputError);
    // one forbidden word inside another
    CHECK_THROWS_AS(build_factor_automaton(a, {{0, 1}, {0, 1, 0}}),
                    InvalidInputError);
    CHECK_THROWS_AS(build_factor_automaton(a, {{0, 9}}), InvalidInputError);
    // duplicates collapse instead of tripping the antichain check
    CHECK(count_avoiding_words(a, {{0, 1}, {0, 1}}, 3) ==
          count_avoiding_words(a, {{0, 1}}, 3));
    CHECK_THROWS_AS(count_avoiding_words(a, {}, -1), InvalidInputError);
}

TEST_CASE("automaton counting agrees with exhaustive enumeration") {
    std::mt19937 rng(20260815);
    std::uniform_int_distribution<int> nletters(1, 3);
    std::uniform_int_distribution<int> nwords(1, 4);
    std::uniform_int_distribution<int> wlen(1, 4);
    for (int trial = 0; trial < 10; ++trial) {
        int letters = nletters(rng);
        std::vector<std::string> names;
        std::vector<std::int64_t> weights;
        for (int i = 0; i < letters; ++i) {
            names.push_back("g" + std::to_string(i));
            weights.push_back(trial % 3 == 2 ? 1 + i : 1);
        }
        Alphabet a = make_alphabet(names, weights);

        std::uniform_int_distribution<int> pick(0, letters - 1);
        std::vector<Word> sample;
        for (int i = 0, n = nwords(rng); i < n; ++i) {
            Word w(static_cast<std::size_t>(wlen(rng)));
            for (auto& g : w) g = static_cast<Gen>(pick(rng));
            sample.push_back(std::move(w));
        }
        // keep only an antichain: sort by length, drop anything containing a
        // kept word
        std::sort(sample.begin(), sample.end(),
                  [](const Word& x, const Word& y) { return x.size() < y.size(); });
        std::vector<Word> kept;
        for (const auto& w : sample) {
            bool contains = false;
            for (const auto& k : kept)
                if (is_factor(w, k)) { contains = true; break; }
            if (!contains && std::find(kept.begin(), kept.end(), w) == kept.end())
                kept.push_back(w);
        }

        CHECK(count_avoiding_words(a, kept, 8) == brute_counts(a, kept, 8));
    }
}
