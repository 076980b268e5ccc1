#include "ncg/gb.hpp"

#include "ncg/hilbert.hpp"

#include <algorithm>
#include <set>

namespace ncg {

std::string membership_name(Membership m) {
    switch (m) {
        case Membership::Yes: return "yes";
        case Membership::No: return "no";
        default: return "unknown-beyond-bound";
    }
}

namespace {

struct Ambiguity {
    std::int64_t weight;
    std::size_t i, j;
    // overlap: word = LM(i) + tail = head + LM(j); inclusion: LM(i) = l LM(j) r
    bool inclusion;
    Word head; // overlap: prefix taken from LM(i); inclusion: l
    Word tail; // overlap: suffix taken from LM(j); inclusion: r

    bool operator<(const Ambiguity& o) const {
        if (weight != o.weight) return weight < o.weight;
        if (i != o.i) return i < o.i;
        if (j != o.j) return j < o.j;
        if (inclusion != o.inclusion) return inclusion < o.inclusion;
        if (head != o.head) return head < o.head;
        return tail < o.tail;
    }
};

std::vector<Ambiguity> enumerate_ambiguities(const std::vector<NcPoly>& basis,
                                             const Alphabet& alphabet) {
    std::vector<Ambiguity> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Word& u = basis[i].leading_word();
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const Word& v = basis[j].leading_word();
            if (u.empty() || v.empty()) continue;
            // overlap: proper nonempty suffix of u = proper nonempty prefix of v
            std::size_t kmax = std::min(u.size(), v.size()) - 1;
            for (std::size_t k = 1; k <= kmax; ++k) {
                if (!std::equal(u.end() - static_cast<long>(k), u.end(), v.begin()))
                    continue;
                Ambiguity a;
                a.i = i;
                a.j = j;
                a.inclusion = false;
                a.head.assign(u.begin(), u.end() - static_cast<long>(k));
                a.tail.assign(v.begin() + static_cast<long>(k), v.end());
                a.weight = alphabet.weight(u) + alphabet.weight(a.tail);
                out.push_back(std::move(a));
            }
            // inclusion: v a proper factor of u
            if (i != j && v.size() < u.size()) {
                for (std::size_t pos = 0; pos + v.size() <= u.size(); ++pos) {
                    if (!std::equal(v.begin(), v.end(),
                                    u.begin() + static_cast<long>(pos)))
                        continue;
                    Ambiguity a;
                    a.i = i;
                    a.j = j;
                    a.inclusion = true;
                    a.head.assign(u.begin(), u.begin() + static_cast<long>(pos));
                    a.tail.assign(u.begin() + static_cast<long>(pos + v.size()),
                                  u.end());
                    a.weight = alphabet.weight(u);
                    out.push_back(std::move(a));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

NcPoly spoly(const Ambiguity& a, const std::vector<NcPoly>& basis) {
    const NcPoly& gi = basis[a.i];
    const NcPoly& gj = basis[a.j];
    NcPoly s = NcPoly::zero(gi.ord(), gi.params());
    Scalar one = Scalar::integer(1);
    if (a.inclusion) {
        s.add_scaled_sandwich(one, {}, gi, {});
        s.add_scaled_sandwich(-one, a.head, gj, a.tail);
    } else {
        s.add_scaled_sandwich(one, {}, gi, a.tail);
        s.add_scaled_sandwich(-one, a.head, gj, {});
    }
    return s;
}

void record_assumption(const Scalar& lc, std::vector<std::string>& assumed) {
    if (lc.is_constant()) return;
    std::string s = lc.str();
    if (std::find(assumed.begin(), assumed.end(), s) == assumed.end())
        assumed.push_back(s);
}

// Reduces f by every basis element except `skip` (pass basis.size() to use all).
NcPoly reduce_excluding(const NcPoly& f, const std::vector<NcPoly>& basis,
                        std::size_t skip) {
    NcPoly r = f;
    for (;;) {
        bool reduced = false;
        for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
            const Word& w = it->first;
            for (std::size_t g = 0; g < basis.size() && !reduced; ++g) {
                if (g == skip) continue;
                std::size_t pos = find_factor(w, basis[g].leading_word());
                if (pos == word_npos) continue;
                Scalar c = it->second;
                Word l(w.begin(), w.begin() + static_cast<long>(pos));
                Word rr(w.begin() +
                            static_cast<long>(pos + basis[g].leading_word().size()),
                        w.end());
                r.add_scaled_sandwich(-c, l, basis[g], rr);
                reduced = true;
            }
            if (reduced) break;
        }
        if (!reduced) return r;
    }
}

void interreduce(std::vector<NcPoly>& basis, std::vector<std::string>& assumed) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            NcPoly h = reduce_excluding(basis[i], basis, i);
            if (h == basis[i]) continue;
            changed = true;
            basis.erase(basis.begin() + static_cast<long>(i));
            if (!h.is_zero()) {
                record_assumption(h.make_monic(), assumed);
                basis.push_back(std::move(h));
            }
            break;
        }
    }
}

void sort_basis(std::vector<NcPoly>& basis) {
    std::sort(basis.begin(), basis.end(), [](const NcPoly& a, const NcPoly& b) {
        return a.ord()->less(a.leading_word(), b.leading_word());
    });
}

} // namespace

NcPoly normal_form(const NcPoly& f, const std::vector<NcPoly>& basis) {
    return reduce_excluding(f, basis, basis.size());
}

GroebnerResult groebner(const std::vector<NcPoly>& relations,
                        const Alphabet& alphabet, const GroebnerOptions& opt) {
    if (opt.bound < 1) throw InvalidInputError("completion bound must be positive");
    GroebnerResult res;
    res.bound = opt.bound;

    std::vector<NcPoly> basis;
    for (const auto& rel : relations) {
        if (rel.is_zero()) continue;
        NcPoly g = rel;
        record_assumption(g.make_monic(), res.assumed_nonzero);
        basis.push_back(std::move(g));
    }
    interreduce(basis, res.assumed_nonzero);

    for (;;) {
        auto ambs = enumerate_ambiguities(basis, alphabet);
        bool pending_beyond = false;
        bool added = false;
        for (const auto& a : ambs) {
            if (a.weight > opt.bound) {
                pending_beyond = true;
                continue;
            }
            NcPoly h = normal_form(spoly(a, basis), basis);
            ++res.spolys_reduced;
            if (h.is_zero()) continue;
            record_assumption(h.make_monic(), res.assumed_nonzero);
            basis.push_back(std::move(h));
            ++res.additions;
            if (basis.size() > opt.max_basis)
                throw InvalidInputError("basis exceeded the safety limit");
            interreduce(basis, res.assumed_nonzero);
            added = true;
            break;
        }
        if (!added) {
            res.complete = !pending_beyond;
            break;
        }
    }

    sort_basis(basis);
    res.basis = std::move(basis);
    return res;
}

GroebnerResult groebner(const Presentation& p, const GroebnerOptions& opt) {
    return groebner(p.relations, p.alphabet, opt);
}

Membership member(const NcPoly& f, const GroebnerResult& gb,
                  const Alphabet& alphabet) {
    NcPoly r = normal_form(f, gb.basis);
    if (r.is_zero()) return Membership::Yes;
    if (gb.complete) return Membership::No;
    if (f.max_weight(alphabet) <= gb.bound) return Membership::No;
    return Membership::UnknownBeyondBound;
}

std::vector<BigInt> normal_word_counts(const GroebnerResult& gb,
                                       const Alphabet& alphabet,
                                       std::int64_t maxdeg) {
    std::vector<Word> forbidden;
    forbidden.reserve(gb.basis.size());
    for (const auto& g : gb.basis) {
        if (g.leading_word().empty()) // unit ideal, zero quotient
            return std::vector<BigInt>(static_cast<std::size_t>(maxdeg) + 1,
                                       BigInt(0));
        forbidden.push_back(g.leading_word());
    }
    return count_avoiding_words(alphabet, forbidden, maxdeg);
}

} // namespace ncg
