#include "ncg/hilbert.hpp"

#include "ncg/errors.hpp"

#include <algorithm>
#include <map>

namespace ncg {

Coeffs poly_mul(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Coeffs one_minus_tk(std::size_t k) {
    if (k == 0) throw InvalidInputError("exponent must be positive");
    Coeffs r(k + 1, Rational(0));
    r[0] = 1;
    r[k] = -1;
    return r;
}

Coeffs expand_series(const RationalSeries& s, std::size_t maxdeg) {
    if (s.den.empty() || s.den[0] == 0)
        throw InvalidInputError("series denominator must be a unit");
    Coeffs a(maxdeg + 1, Rational(0));
    for (std::size_t k = 0; k <= maxdeg; ++k) {
        Rational acc = k < s.num.size() ? s.num[k] : Rational(0);
        for (std::size_t i = 1; i <= k && i < s.den.size(); ++i)
            acc -= s.den[i] * a[k - i];
        a[k] = acc / s.den[0];
    }
    return a;
}

SeriesComparison compare_series(const Coeffs& a, const Coeffs& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == b[i]) continue;
        return {false, i, a[i] < b[i] ? -1 : 1};
    }
    return {true, n, 0};
}

FactorAutomaton build_factor_automaton(const Alphabet& alphabet,
                                       const std::vector<Word>& forbidden) {
    for (const auto& f : forbidden) {
        if (f.empty())
            throw InvalidInputError("forbidden factor must be a nonempty word");
        for (Gen g : f)
            if (g >= alphabet.size())
                throw InvalidInputError("forbidden factor uses an unknown generator");
    }
    std::vector<Word> words = forbidden;
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t k = 0; k < words.size(); ++k)
            if (i != k && is_factor(words[i], words[k]))
                throw InvalidInputError(
                    "forbidden factors must form an antichain under division");

    // States: the empty word plus every proper prefix of a forbidden word.
    std::map<Word, std::size_t> index;
    std::vector<Word> states;
    auto add_state = [&](const Word& w) {
        if (index.emplace(w, states.size()).second) states.push_back(w);
    };
    add_state({});
    for (const auto& f : words) {
        for (std::size_t len = 1; len < f.size(); ++len)
            add_state(Word(f.begin(), f.begin() + static_cast<long>(len)));
    }

    auto is_forbidden_suffix = [&](const Word& w) {
        for (const auto& f : words) {
            if (f.size() > w.size()) continue;
            if (std::equal(f.begin(), f.end(), w.end() - static_cast<long>(f.size())))
                return true;
        }
        return false;
    };

    FactorAutomaton fa;
    fa.start = 0;
    fa.next.assign(states.size(), std::vector<std::int64_t>(alphabet.size(), -1));
    for (std::size_t s = 0; s < states.size(); ++s) {
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            Word w = states[s];
            w.push_back(static_cast<Gen>(a));
            if (is_forbidden_suffix(w)) continue; // dead
            // longest suffix of w that is a state (the empty word always is)
            for (std::size_t len = w.size() + 1; len-- > 0;) {
                Word suf(w.end() - static_cast<long>(len), w.end());
                auto it = index.find(suf);
                if (it != index.end()) {
                    fa.next[s][a] = static_cast<std::int64_t>(it->second);
                    break;
                }
            }
        }
    }
    return fa;
}

std::vector<BigInt> count_avoiding_words(const Alphabet& alphabet,
                                         const std::vector<Word>& forbidden,
                                         std::int64_t maxdeg) {
    if (maxdeg < 0) throw InvalidInputError("degree bound must be nonnegative");
    FactorAutomaton fa = build_factor_automaton(alphabet, forbidden);
    std::size_t n = fa.size();
    std::vector<std::vector<BigInt>> cnt(
        static_cast<std::size_t>(maxdeg) + 1, std::vector<BigInt>(n, BigInt(0)));
    cnt[0][fa.start] = 1;
    std::vector<BigInt> out(static_cast<std::size_t>(maxdeg) + 1, BigInt(0));
    for (std::int64_t d = 0; d <= maxdeg; ++d) {
        for (std::size_t s = 0; s < n; ++s) {
            const BigInt& c = cnt[static_cast<std::size_t>(d)][s];
            if (c == 0) continue;
            out[static_cast<std::size_t>(d)] += c;
            for (std::size_t a = 0; a < alphabet.size(); ++a) {
                std::int64_t t = fa.next[s][a];
                if (t < 0) continue;
                std::int64_t nd = d + alphabet.weights[a];
                if (nd > maxdeg) continue;
                cnt[static_cast<std::size_t>(nd)][static_cast<std::size_t>(t)] += c;
            }
        }
    }
    return out;
}

} // namespace ncg
