#include "ncg/ainfinity.hpp"

#include "ncg/errors.hpp"
#include "ncg/order.hpp"
#include "ncg/parse.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>

namespace ncg {

namespace {

/***** index helpers *****/

char digit(int i) { return static_cast<char>('1' + i); }

std::string idx3(int i, int j, int k) {
    return std::string() + digit(i) + digit(j) + digit(k);
}

std::string idx4(int i, int j, int k, int h) {
    return idx3(i, j, k) + digit(h);
}

std::string a_name(int i, int j, int k) { return "a" + idx3(i, j, k); }

std::string v_name(int i, int j, int k, int h) { return "v" + idx4(i, j, k, h); }

std::string c_name(int l, int i) { return std::string("c") + digit(l) + digit(i); }

std::string u_name(int s, int l, int i, int j, int k) {
    return std::string("u") + digit(s) + digit(l) + idx3(i, j, k);
}

const std::vector<std::string>& c_names() {
    static const std::vector<std::string> names = {"c11", "c21", "c31",
                                                   "c12", "c22", "c32"};
    return names;
}

std::vector<std::string> v_names_all() {
    std::vector<std::string> names;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int h = 0; h < 2; ++h) names.push_back(v_name(i, j, k, h));
    return names;
}

std::array<int, 4> v_indices(const std::string& name) {
    bool ok = name.size() == 5 && name[0] == 'v';
    std::array<int, 4> idx{};
    for (std::size_t n = 1; ok && n < 5; ++n) {
        char ch = name[n];
        ok = ch == '1' || ch == '2';
        idx[n - 1] = ch - '1';
    }
    if (!ok) throw InvalidInputError("bad quartic constant name: " + name);
    return idx;
}

Alphabet pair_alphabet() { return make_alphabet({"x1", "x2"}, {1, 1}); }

/***** affine machinery *****/

// Coefficients of an expression that is affine in designated unknowns: the
// parameter index of each unknown maps to its coefficient, `rest` collects
// everything else. The denominator must be free of the unknowns.
struct AffineParts {
    std::map<int, Scalar> coeff;
    Scalar rest;
};

AffineParts affine_split(const Scalar& s, const std::vector<int>& unknowns) {
    const ParamSetPtr& ps = s.params();
    std::vector<char> is_unknown(ps->names.size(), 0);
    for (int u : unknowns) is_unknown[static_cast<std::size_t>(u)] = 1;

    for (const auto& term : s.den().terms())
        for (std::size_t n = 0; n < term.first.size(); ++n)
            if (term.first[n] > 0 && is_unknown[n])
                throw InvalidInputError(
                    "affine split: denominator meets an unknown");

    MultiPoly restp(ps);
    std::map<int, MultiPoly> coeffp;
    for (const auto& [mono, bv] : s.num().terms()) {
        int hit = -1;
        for (std::size_t n = 0; n < mono.size(); ++n) {
            if (mono[n] == 0 || !is_unknown[n]) continue;
            if (mono[n] > 1 || hit >= 0)
                throw InvalidInputError(
                    "affine split: expression is quadratic in the unknowns");
            hit = static_cast<int>(n);
        }
        if (hit < 0) {
            restp.add_term(mono, bv);
        } else {
            Mono m = mono;
            m[static_cast<std::size_t>(hit)] = 0;
            auto it = coeffp.find(hit);
            if (it == coeffp.end()) it = coeffp.emplace(hit, MultiPoly(ps)).first;
            it->second.add_term(m, bv);
        }
    }
    AffineParts parts;
    Scalar dens = Scalar::from_poly(s.den());
    for (auto& [idx, poly] : coeffp)
        parts.coeff.emplace(idx, Scalar::from_poly(poly) / dens);
    parts.rest = Scalar::from_poly(restp) / dens;
    return parts;
}

// Sequential substitution solve for an affine system. Rows are processed in
// order; each is reduced by the pins found so far, then pinned on its
// lowest-index open unknown. Rows with no open unknown either vanish or end
// up as leftover conditions. Pin values are kept fully resolved throughout.
struct AffineSolve {
    std::vector<std::pair<std::string, Scalar>> pins;
    std::vector<Equation> leftovers;
};

AffineSolve solve_affine(const std::vector<Equation>& rows,
                         const std::vector<std::string>& unknown_names,
                         const ParamSetPtr& ps) {
    std::vector<int> open;
    for (const auto& n : unknown_names) {
        int idx = ps->index_of(n);
        if (idx < 0) throw InvalidInputError("unknown is not a parameter: " + n);
        open.push_back(idx);
    }
    AffineSolve out;
    std::map<std::string, Scalar> pinmap;
    std::vector<std::string> pin_order;
    for (const auto& row : rows) {
        Scalar lhs = pinmap.empty() ? row.lhs : row.lhs.substituted(pinmap, ps);
        if (lhs.is_zero()) continue;
        AffineParts parts = affine_split(lhs, open);
        int pivot = -1;
        for (int u : open) {
            auto it = parts.coeff.find(u);
            if (it != parts.coeff.end() && !it->second.is_zero()) {
                pivot = u;
                break;
            }
        }
        if (pivot < 0) {
            out.leftovers.push_back({row.name, lhs});
            continue;
        }
        Scalar value = -parts.rest;
        for (const auto& [idx, co] : parts.coeff) {
            if (idx == pivot || co.is_zero()) continue;
            value -= co * Scalar::param(ps, ps->names[static_cast<std::size_t>(idx)]);
        }
        value = value / parts.coeff.at(pivot);
        const std::string name = ps->names[static_cast<std::size_t>(pivot)];
        std::map<std::string, Scalar> one{{name, value}};
        for (auto& entry : pinmap) entry.second = entry.second.substituted(one, ps);
        pinmap.emplace(name, value);
        pin_order.push_back(name);
        open.erase(std::remove(open.begin(), open.end(), pivot), open.end());
    }
    for (const auto& name : pin_order) out.pins.emplace_back(name, pinmap.at(name));
    return out;
}

// Determinant, rank and kernel of a homogeneous linear system in the given
// unknowns.
struct LinearFacts {
    Scalar det;
    std::size_t rank = 0;
    std::vector<std::map<std::string, Scalar>> kernel;
};

LinearFacts linear_facts(const std::vector<Equation>& rows,
                         const std::vector<std::string>& unknown_names,
                         const ParamSetPtr& ps) {
    const std::size_t n = unknown_names.size();
    std::vector<int> unknowns;
    for (const auto& nm : unknown_names) {
        int idx = ps->index_of(nm);
        if (idx < 0) throw InvalidInputError("unknown is not a parameter: " + nm);
        unknowns.push_back(idx);
    }
    std::vector<std::vector<Scalar>> m;
    for (const auto& row : rows) {
        AffineParts parts = affine_split(row.lhs, unknowns);
        if (!parts.rest.is_zero())
            throw InvalidInputError("linear facts: system is not homogeneous");
        std::vector<Scalar> r(n, Scalar::zero(ps));
        for (std::size_t cidx = 0; cidx < n; ++cidx) {
            auto it = parts.coeff.find(unknowns[cidx]);
            if (it != parts.coeff.end()) r[cidx] = it->second;
        }
        m.push_back(std::move(r));
    }
    const std::size_t nrows = m.size();
    bool swapped_odd = false;
    std::vector<std::size_t> pivot_cols;
    std::vector<char> col_used(n, 0);
    std::size_t prow = 0;
    for (std::size_t col = 0; col < n && prow < nrows; ++col) {
        std::size_t hit = nrows;
        for (std::size_t rr = prow; rr < nrows; ++rr)
            if (!m[rr][col].is_zero()) {
                hit = rr;
                break;
            }
        if (hit == nrows) continue;
        if (hit != prow) {
            std::swap(m[hit], m[prow]);
            swapped_odd = !swapped_odd;
        }
        col_used[col] = 1;
        pivot_cols.push_back(col);
        const Scalar piv = m[prow][col];
        for (std::size_t rr = prow + 1; rr < nrows; ++rr) {
            if (m[rr][col].is_zero()) continue;
            Scalar f = m[rr][col] / piv;
            for (std::size_t cc = col; cc < n; ++cc) m[rr][cc] -= f * m[prow][cc];
        }
        ++prow;
    }
    LinearFacts facts;
    facts.rank = prow;
    if (nrows == n && prow == n) {
        Scalar det = Scalar::one(ps);
        for (std::size_t d = 0; d < n; ++d) det *= m[d][pivot_cols[d]];
        facts.det = swapped_odd ? -det : det;
    } else {
        facts.det = Scalar::zero(ps);
    }
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (col_used[fc]) continue;
        std::vector<Scalar> x(n, Scalar::zero(ps));
        x[fc] = Scalar::one(ps);
        for (std::size_t d = prow; d-- > 0;) {
            const std::size_t pc = pivot_cols[d];
            Scalar s = Scalar::zero(ps);
            for (std::size_t cc = pc + 1; cc < n; ++cc)
                if (!x[cc].is_zero()) s += m[d][cc] * x[cc];
            x[pc] = -(s / m[d][pc]);
        }
        std::map<std::string, Scalar> vec;
        for (std::size_t cidx = 0; cidx < n; ++cidx)
            vec.emplace(unknown_names[cidx], x[cidx]);
        facts.kernel.push_back(std::move(vec));
    }
    return facts;
}

} // namespace

/***** pairing data and tables *****/

FrobeniusData make_jordan_frobenius(const Scalar& g, const Scalar& t) {
    if (!same_param_set(g.params(), t.params()))
        throw FieldMismatchError(
            "jordan pairing: g and t over different parameter sets");
    FrobeniusData fd;
    fd.params = g.params();
    fd.r[0][0] = -g;
    fd.r[0][1] = Scalar::one(fd.params);
    fd.r[1][0] = Scalar::zero(fd.params);
    fd.r[1][1] = -g;
    fd.t = t;
    return fd;
}

StructureConstants make_zero_constants(ParamSetPtr ps) {
    StructureConstants sc;
    sc.params = std::move(ps);
    const Scalar z = Scalar::zero(sc.params);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) sc.a[i][j][k] = z;
    for (int s = 0; s < 2; ++s)
        for (int l = 0; l < 3; ++l)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) sc.b[s][l][i][j] = z;
    for (int l = 0; l < 3; ++l)
        for (int i = 0; i < 2; ++i) sc.c[l][i] = z;
    for (int s = 0; s < 2; ++s)
        for (int l = 0; l < 4; ++l)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k) sc.u[s][l][i][j][k] = z;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int h = 0; h < 2; ++h) sc.v[i][j][k][h] = z;
    return sc;
}

void set_cubic_pattern(StructureConstants& sc, const Scalar& p, const Scalar& w) {
    const Scalar z = Scalar::zero(sc.params);
    const Scalar one = Scalar::one(sc.params);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) sc.a[i][j][k] = z;
    sc.a[0][1][1] = one;
    sc.a[1][1][0] = p;
    sc.a[1][0][1] = -(one + p);
    sc.a[1][1][1] = w;
}

void derive_b_table(const FrobeniusData& fd, StructureConstants& sc) {
    // The top layer copies the cubic table; the lower layers contract with
    // the pairing matrix, the defined entry's own first index moving into
    // argument position.
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) sc.b[i][2][j][k] = sc.a[i][j][k];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                sc.b[i][1][j][k] = fd.r[0][k] * sc.b[0][2][i][j] +
                                   fd.r[1][k] * sc.b[1][2][i][j];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                sc.b[i][0][j][k] = fd.r[0][k] * sc.b[0][1][i][j] +
                                   fd.r[1][k] * sc.b[1][1][i][j];
}

void solve_u_table(const FrobeniusData& fd, StructureConstants& sc) {
    auto assign = [&](int s, int l, int i, int j, int k, const Scalar& val) {
        Scalar& slot = sc.u[s][l][i][j][k];
        if (!slot.is_zero() && slot != val)
            throw SystemInconsistentError(
                "u entry " + u_name(s, l, i, j, k) + " already holds " +
                slot.str() + ", refusing " + val.str());
        slot = val;
    };
    // Ground slot first, then down the layers; the lower-layer values pull
    // the defined entry's own first index into argument position.
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int h = 0; h < 2; ++h)
                    assign(i, 3, j, k, h,
                           sc.a[i][j][k] * sc.c[1][h] - sc.a[j][k][h] * sc.c[0][i] +
                               fd.t * sc.v[i][j][k][h]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int h = 0; h < 2; ++h)
                    assign(i, 2, j, k, h,
                           sc.a[i][j][k] * sc.c[2][h] +
                               fd.r[0][h] * sc.u[0][3][i][j][k] +
                               fd.r[1][h] * sc.u[1][3][i][j][k]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int h = 0; h < 2; ++h)
                    assign(i, 1, j, k, h,
                           fd.r[0][h] * sc.u[0][2][i][j][k] +
                               fd.r[1][h] * sc.u[1][2][i][j][k]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int h = 0; h < 2; ++h)
                    assign(i, 0, j, k, h,
                           -(sc.c[0][i] * sc.a[j][k][h]) +
                               fd.r[0][h] * sc.u[0][1][i][j][k] +
                               fd.r[1][h] * sc.u[1][1][i][j][k]);
}

NcPoly cubic_relation(const StructureConstants& sc, const Alphabet& alphabet,
                      const OrderPtr& ord) {
    if (alphabet.size() != 2)
        throw InvalidInputError("cubic relation needs a two-letter alphabet");
    NcPoly r = NcPoly::zero(ord, sc.params);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                if (sc.a[i][j][k].is_zero()) continue;
                Word wd{static_cast<Gen>(i), static_cast<Gen>(j),
                        static_cast<Gen>(k)};
                r.add_term(wd, sc.a[i][j][k]);
            }
    return r;
}

NcPoly quartic_relation(const StructureConstants& sc, const Alphabet& alphabet,
                        const OrderPtr& ord) {
    if (alphabet.size() != 2)
        throw InvalidInputError("quartic relation needs a two-letter alphabet");
    NcPoly r = NcPoly::zero(ord, sc.params);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int h = 0; h < 2; ++h) {
                    if (sc.v[i][j][k][h].is_zero()) continue;
                    Word wd{static_cast<Gen>(i), static_cast<Gen>(j),
                            static_cast<Gen>(k), static_cast<Gen>(h)};
                    r.add_term(wd, sc.v[i][j][k][h]);
                }
    return r;
}

/***** identity generators *****/

std::vector<Equation> gen_si4(const FrobeniusData& fd,
                              const StructureConstants& sc) {
    std::vector<Equation> eqs;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                eqs.push_back({"m4:L1:" + idx3(i, j, k),
                               sc.b[i][2][j][k] - sc.a[i][j][k]});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                eqs.push_back({"m4:L2:" + idx3(i, j, k),
                               sc.b[i][1][j][k] -
                                   (fd.r[0][k] * sc.b[0][2][i][j] +
                                    fd.r[1][k] * sc.b[1][2][i][j])});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                eqs.push_back({"m4:L3:" + idx3(i, j, k),
                               sc.b[i][0][j][k] -
                                   (fd.r[0][k] * sc.b[0][1][i][j] +
                                    fd.r[1][k] * sc.b[1][1][i][j])});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                eqs.push_back({"m4:L4:" + idx3(i, j, k),
                               fd.r[0][k] * sc.b[0][0][i][j] +
                                   fd.r[1][k] * sc.b[1][0][i][j] +
                                   fd.t * sc.a[i][j][k]});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                Scalar lhs = fd.t * sc.a[i][j][k];
                for (int s = 0; s < 2; ++s)
                    for (int t = 0; t < 2; ++t)
                        for (int u = 0; u < 2; ++u)
                            lhs += fd.r[s][k] * fd.r[t][j] * fd.r[u][i] *
                                   sc.a[u][t][s];
                eqs.push_back({"m4:closure:" + idx3(i, j, k), lhs});
            }
    return eqs;
}

std::vector<Equation> gen_si5_lines(const FrobeniusData& fd,
                                    const StructureConstants& sc) {
    std::vector<Equation> eqs;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int h = 0; h < 2; ++h)
                    eqs.push_back({"m5:L1:" + idx4(i, j, k, h),
                                   sc.a[i][j][k] * sc.c[1][h] -
                                       sc.a[j][k][h] * sc.c[0][i] +
                                       fd.t * sc.v[i][j][k][h] -
                                       sc.u[i][3][j][k][h]});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int h = 0; h < 2; ++h)
                    eqs.push_back({"m5:L2:" + idx4(i, j, k, h),
                                   sc.a[i][j][k] * sc.c[2][h] +
                                       fd.r[0][h] * sc.u[0][3][i][j][k] +
                                       fd.r[1][h] * sc.u[1][3][i][j][k] -
                                       sc.u[i][2][j][k][h]});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int h = 0; h < 2; ++h)
                    eqs.push_back({"m5:L3:" + idx4(i, j, k, h),
                                   fd.r[0][h] * sc.u[0][2][i][j][k] +
                                       fd.r[1][h] * sc.u[1][2][i][j][k] -
                                       sc.u[i][1][j][k][h]});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int h = 0; h < 2; ++h)
                    eqs.push_back({"m5:L4:" + idx4(i, j, k, h),
                                   sc.c[0][i] * sc.a[j][k][h] -
                                       fd.r[0][h] * sc.u[0][1][i][j][k] -
                                       fd.r[1][h] * sc.u[1][1][i][j][k] +
                                       sc.u[i][0][j][k][h]});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int h = 0; h < 2; ++h)
                    eqs.push_back({"m5:L5:" + idx4(i, j, k, h),
                                   sc.a[j][k][h] * sc.c[1][i] -
                                       sc.a[i][j][k] * sc.c[2][h] -
                                       fd.r[0][h] * sc.u[0][0][i][j][k] -
                                       fd.r[1][h] * sc.u[1][0][i][j][k] +
                                       sc.v[i][j][k][h]});
    return eqs;
}

std::vector<Equation> residual_equations(const FrobeniusData& fd,
                                         const StructureConstants& sc) {
    std::vector<Equation> eqs;
    int n = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int h = 0; h < 2; ++h) {
                    ++n;
                    eqs.push_back({"eq" + std::to_string(n),
                                   sc.a[j][k][h] * sc.c[1][i] -
                                       sc.a[i][j][k] * sc.c[2][h] -
                                       fd.r[0][h] * sc.u[0][0][i][j][k] -
                                       fd.r[1][h] * sc.u[1][0][i][j][k] +
                                       sc.v[i][j][k][h]});
                }
    return eqs;
}

std::vector<Equation> gen_si6(const StructureConstants& sc) {
    std::vector<Equation> eqs;
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int h = 0; h < 2; ++h)
                        for (int m = 0; m < 2; ++m)
                            for (int n = 0; n < 2; ++n) {
                                Scalar lhs =
                                    -(sc.a[i][j][k] * sc.u[s][0][h][m][n]) +
                                    sc.a[j][k][h] * sc.u[s][1][i][m][n] -
                                    sc.a[k][h][m] * sc.u[s][2][i][j][n] +
                                    sc.a[h][m][n] * sc.u[s][3][i][j][k] +
                                    sc.b[s][0][m][n] * sc.v[i][j][k][h] -
                                    sc.b[s][1][i][n] * sc.v[j][k][h][m] +
                                    sc.b[s][2][i][j] * sc.v[k][h][m][n];
                                std::string nm = "m6:";
                                nm += digit(s);
                                nm += ':';
                                nm += idx4(i, j, k, h);
                                nm += digit(m);
                                nm += digit(n);
                                eqs.push_back({std::move(nm), lhs});
                            }
    return eqs;
}

/***** symbolic reports *****/

JordanCubicReport jordan_reduce_si4() {
    // Closed cubic conditions as linear forms in symbolic cubic constants.
    std::vector<std::string> anames;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) anames.push_back(a_name(i, j, k));
    std::vector<std::string> names = {"g", "t"};
    names.insert(names.end(), anames.begin(), anames.end());
    ParamSetPtr ps_sym = make_param_set(BaseField::Q, names);
    const Scalar g = Scalar::param(ps_sym, "g");
    const Scalar t = Scalar::param(ps_sym, "t");
    FrobeniusData fd = make_jordan_frobenius(g, t);
    StructureConstants sc = make_zero_constants(ps_sym);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                sc.a[i][j][k] = Scalar::param(ps_sym, a_name(i, j, k));
    std::vector<Equation> closure;
    for (auto& e : gen_si4(fd, sc))
        if (e.name.rfind("m4:closure:", 0) == 0) closure.push_back(std::move(e));

    LinearFacts full = linear_facts(closure, anames, ps_sym);
    const Scalar branch = t - g.pow(3);
    bool det_power = false;
    if (!full.det.is_zero()) {
        const Scalar q = full.det / branch.pow(8);
        det_power = q.is_constant() && !q.is_zero();
    }

    // On the branch t = g^3 the system drops to rank five and its kernel is
    // the normalized pattern.
    const std::map<std::string, Scalar> on_branch{{"t", g.pow(3)}};
    std::vector<Equation> branch_rows;
    for (const auto& e : closure)
        branch_rows.push_back({e.name, e.lhs.substituted(on_branch, ps_sym)});
    LinearFacts facts3 = linear_facts(branch_rows, anames, ps_sym);
    bool kernel_ok = facts3.rank == 5 && facts3.kernel.size() == 3;
    for (const auto& vec : facts3.kernel)
        kernel_ok = kernel_ok && vec.at("a111").is_zero() &&
                    vec.at("a112").is_zero() && vec.at("a121").is_zero() &&
                    vec.at("a211").is_zero() &&
                    (vec.at("a221") + vec.at("a212") + vec.at("a122")).is_zero();

    // Normalized tables over {g, t, p, w}.
    ParamSetPtr ps = make_param_set(BaseField::Q, {"g", "t", "p", "w"});
    FrobeniusData fdn = make_jordan_frobenius(Scalar::param(ps, "g"),
                                              Scalar::param(ps, "t"));
    StructureConstants tables = make_zero_constants(ps);
    set_cubic_pattern(tables, Scalar::param(ps, "p"), Scalar::param(ps, "w"));
    derive_b_table(fdn, tables);
    Alphabet alphabet = pair_alphabet();
    OrderPtr ord = make_graded_lex(alphabet);
    NcPoly r3 = cubic_relation(tables, alphabet, ord);
    return JordanCubicReport{ps,          alphabet,   full.det, det_power,
                             facts3.rank, kernel_ok,  tables,   r3};
}

QuarticElimination gen_si5() {
    std::vector<std::string> names = {"g", "t", "p", "w"};
    names.insert(names.end(), c_names().begin(), c_names().end());
    const std::vector<std::string> vnames = v_names_all();
    names.insert(names.end(), vnames.begin(), vnames.end());
    ParamSetPtr ps = make_param_set(BaseField::Q, names);
    FrobeniusData fd = make_jordan_frobenius(Scalar::param(ps, "g"),
                                             Scalar::param(ps, "t"));
    StructureConstants sc = make_zero_constants(ps);
    set_cubic_pattern(sc, Scalar::param(ps, "p"), Scalar::param(ps, "w"));
    derive_b_table(fd, sc);
    for (int l = 0; l < 3; ++l)
        for (int i = 0; i < 2; ++i)
            sc.c[l][i] = Scalar::param(ps, c_name(l, i));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int h = 0; h < 2; ++h)
                    sc.v[i][j][k][h] = Scalar::param(ps, v_name(i, j, k, h));
    solve_u_table(fd, sc);

    QuarticElimination out{ps, fd, sc, residual_equations(fd, sc), false};

    // Re-check: with the solved u-table the first four lines vanish
    // identically and the fifth reproduces the residual list.
    bool ok = true;
    std::size_t r = 0;
    for (const auto& e : gen_si5_lines(fd, sc)) {
        if (e.name.rfind("m5:L5:", 0) == 0) {
            ok = ok && r < out.residuals.size() && e.lhs == out.residuals[r].lhs;
            ++r;
        } else {
            ok = ok && e.lhs.is_zero();
        }
    }
    out.elimination_consistent = ok && r == out.residuals.size();
    return out;
}

QuarticBranchCertificate certify_quartic_branch() {
    QuarticElimination E = gen_si5();
    const ParamSetPtr& ps = E.params;
    const Scalar zero = Scalar::zero(ps);

    // Quartic normal form: the four reducible constants are zero.
    const std::map<std::string, Scalar> norm{{"v1122", zero},
                                             {"v2122", zero},
                                             {"v1221", zero},
                                             {"v1222", zero}};
    std::map<std::string, Scalar> lhs_by_name;
    for (const auto& e : E.residuals)
        lhs_by_name.emplace(e.name, e.lhs.substituted(norm, ps));

    // The five leading quartic constants admit only the zero solution while
    // 1 - g^4 t is invertible.
    const std::vector<std::string> heads = {"v1111", "v1112", "v1121", "v1211",
                                            "v2111"};
    std::vector<Equation> sys1;
    for (const char* nm : {"eq1", "eq2", "eq3", "eq5", "eq9"})
        sys1.push_back({nm, lhs_by_name.at(nm)});
    AffineSolve s1 = solve_affine(sys1, heads, ps);
    bool only_zero = s1.leftovers.empty() && s1.pins.size() == heads.size();
    for (const auto& pin : s1.pins) only_zero = only_zero && pin.second.is_zero();

    // With those zero, eq4 pins the combination M = g^4 c11 + c21 + g^3 c31
    // to zero (solving for c21) and eq6 then pins v1212 to zero.
    std::map<std::string, Scalar> vzero = norm;
    for (const auto& nm : heads) vzero.emplace(nm, zero);
    std::vector<Equation> sys2;
    for (const char* nm : {"eq4", "eq6"})
        sys2.push_back({nm, lhs_by_name.at(nm).substituted(vzero, ps)});
    AffineSolve s2 = solve_affine(sys2, {"c21", "v1212"}, ps);
    const Scalar g = Scalar::param(ps, "g");
    const Scalar c21_expected = -(g.pow(4) * Scalar::param(ps, "c11")) -
                                g.pow(3) * Scalar::param(ps, "c31");
    bool collapses = s2.leftovers.empty() && s2.pins.size() == 2;
    for (const auto& pin : s2.pins) {
        if (pin.first == "c21") collapses = collapses && pin.second == c21_expected;
        else if (pin.first == "v1212") collapses = collapses && pin.second.is_zero();
        else collapses = false;
    }

    // (1 - g^4 t) + g^4 (t - g^3) == 1 - g^7: meeting both branches makes g
    // a seventh root of unity.
    const Scalar t = Scalar::param(ps, "t");
    const Scalar one = Scalar::one(ps);
    const bool root7 =
        (one - g.pow(4) * t) + g.pow(4) * (t - g.pow(3)) == one - g.pow(7);

    return QuarticBranchCertificate{only_zero, collapses, root7};
}

CaseSplitReport case_split() {
    const std::vector<std::string> heads = {"v1111", "v1112", "v1121", "v1211",
                                            "v2111"};
    std::vector<std::string> names = {"p", "m"};
    names.insert(names.end(), heads.begin(), heads.end());
    ParamSetPtr ps = make_param_set(BaseField::QZeta7, names);
    const Scalar zero = Scalar::zero(ps);
    const Scalar one = Scalar::one(ps);
    const Scalar p = Scalar::param(ps, "p");
    const Scalar j = parse_scalar("j", ps);
    const int m_index = ps->index_of("m");

    // Reduced rows at a concrete seventh root g: the pairing constant is
    // t = g^3, so g^4 t = g^7 = 1 holds identically, and the pairing
    // combination M collapses to the single symbol m via c21 = m,
    // c11 = c31 = 0. Every other quartic constant only enters through the
    // factor 1 - g^4 t = 0, so it can be left at zero.
    auto reduced_rows = [&](const Scalar& g, const Scalar& pval) {
        FrobeniusData fd = make_jordan_frobenius(g, g.pow(3));
        StructureConstants sc = make_zero_constants(ps);
        set_cubic_pattern(sc, pval, zero);
        derive_b_table(fd, sc);
        sc.c[1][0] = Scalar::param(ps, "m");
        for (const auto& nm : heads) {
            const auto idx = v_indices(nm);
            sc.v[idx[0]][idx[1]][idx[2]][idx[3]] = Scalar::param(ps, nm);
        }
        solve_u_table(fd, sc);
        std::map<std::string, Equation> by;
        for (auto& e : residual_equations(fd, sc)) by.emplace(e.name, std::move(e));
        std::vector<Equation> rows;
        for (const char* nm : {"eq2", "eq10", "eq4", "eq11", "eq13", "eq6", "eq7"})
            rows.push_back(by.at(nm));
        return rows;
    };

    // A leftover condition excludes m != 0 exactly when its numerator is a
    // nonzero constant times a power of m.
    auto unit_times_m_power = [&](const Scalar& s) {
        if (s.is_zero()) return false;
        const auto& terms = s.num().terms();
        if (terms.size() != 1) return false;
        const Mono& mono = terms.begin()->first;
        for (std::size_t n = 0; n < mono.size(); ++n)
            if (mono[n] > 0 && static_cast<int>(n) != m_index) return false;
        return true;
    };

    CaseSplitReport rep;
    rep.case_params = ps;
    rep.case1_only_zero = true;
    rep.case2_consistent = false;
    rep.case2_forced = true;

    // Case 2 existence at g = 1, p = 1: the five constants are pinned with no
    // leftover condition, whatever m is.
    {
        AffineSolve s = solve_affine(reduced_rows(one, one), heads, ps);
        rep.case2_consistent = s.leftovers.empty() && s.pins.size() == heads.size();
        for (const auto& pin : s.pins) rep.case2_pins.emplace(pin.first, pin.second);
    }

    for (int root = 0; root < 7; ++root) {
        const Scalar g = root == 0 ? one : j.pow(root);
        AffineSolve s = solve_affine(reduced_rows(g, p), heads, ps);
        const std::map<std::string, Scalar> mzero{{"m", zero}};

        // Case 1: m = 0 forces every pinned constant and every leftover
        // condition to zero.
        bool allzero = s.pins.size() == heads.size();
        for (const auto& pin : s.pins)
            allzero = allzero && pin.second.substituted(mzero, ps).is_zero();
        for (const auto& e : s.leftovers)
            allzero = allzero && e.lhs.substituted(mzero, ps).is_zero();
        rep.case1_only_zero = rep.case1_only_zero && allzero;

        // Case 2 necessity: with m != 0 the leftover conditions pin p = 1 at
        // g = 1 and are contradictory at every other root.
        AffineSolve t2 = solve_affine(s.leftovers, {"p"}, ps);
        if (root == 0) {
            bool pinned_one = t2.leftovers.empty() && t2.pins.size() == 1 &&
                              t2.pins.front().first == "p" &&
                              t2.pins.front().second == one;
            rep.case2_forced = rep.case2_forced && pinned_one;
        } else {
            bool excluded = false;
            for (const auto& e : t2.leftovers)
                excluded = excluded || unit_times_m_power(e.lhs);
            rep.case2_forced = rep.case2_forced && excluded;
        }
    }

    rep.branches.push_back(CaseBranch{
        "case1-m-zero",
        {"g^4*t = 1", "g^7 = 1", "g^4*c11 + c21 + g^3*c31 = 0",
         "v1111 = v1112 = v1121 = v1211 = v2111 = 0"}});
    rep.branches.push_back(CaseBranch{
        "case2-m-nonzero",
        {"g^4*t = 1", "g^7 = 1", "g^4*c11 + c21 + g^3*c31 != 0", "g = 1",
         "p = 1", "v1112 = (g^4*c11 + c21 + g^3*c31)/2, scalable to 1"}});
    return rep;
}

/***** solution families *****/

namespace {

SolutionFamily make_family(std::string name, BaseField field,
                           std::vector<std::string> extras,
                           std::vector<std::string> frees, std::string g,
                           std::string p, std::string w,
                           std::vector<std::pair<std::string, std::string>> v) {
    SolutionFamily f;
    f.name = std::move(name);
    f.field = field;
    f.extra_params = std::move(extras);
    f.frees = std::move(frees);
    f.g = std::move(g);
    f.p = std::move(p);
    f.w = std::move(w);
    f.v = std::move(v);
    return f;
}

} // namespace

ParamSetPtr SolutionFamily::param_set() const {
    std::vector<std::string> names = c_names();
    names.insert(names.end(), extra_params.begin(), extra_params.end());
    return make_param_set(field, names);
}

const std::vector<SolutionFamily>& solution_catalog() {
    static const std::vector<SolutionFamily> cat = [] {
        std::vector<SolutionFamily> fams;
        fams.push_back(make_family(
            "S1", BaseField::Q, {"v2222"}, {"c22", "v2222"}, "1", "1", "0",
            {{"v1212", "1"},
             {"v2112", "-1"},
             {"v2121", "-1"},
             {"v2211", "1"},
             {"v2212", "c22"},
             {"v2221", "-c22"},
             {"v2222", "v2222"}}));
        fams.push_back(make_family(
            "S2", BaseField::Q, {"w"}, {"w"}, "1", "-1", "w",
            {{"v1212", "1"},
             {"v2112", "1"},
             {"v2121", "1"},
             {"v2211", "-3"},
             {"v2212", "1 - w/2"},
             {"v2221", "7*w/2 - 1"},
             {"v2222", "-3*w^2/2 + w/2"}}));
        fams.push_back(make_family(
            "S3", BaseField::Q, {"v2222"}, {"v2222"}, "1", "-1", "2/7",
            {{"v1212", "1"},
             {"v2112", "1"},
             {"v2121", "1"},
             {"v2211", "-3"},
             {"v2212", "6/7"},
             {"v2221", "0"},
             {"v2222", "v2222"}}));
        fams.push_back(make_family(
            "S4", BaseField::QZeta7, {"w"}, {"w"}, "j", "-j^3", "w",
            {{"v1212", "1"},
             {"v2112", "j"},
             {"v2121", "-j^6 - j^2 - 2*j - 2"},
             {"v2211", "j^6 + j^2 + j + 1"},
             {"v2212", "(j^6 + 1)/2 - w*(j^4/2 + 2*j^3 + 3*j^2 + 2 + 7*j/2)"},
             {"v2221",
              "w*(j^5 + 3*j^4/2 + 2*j^3 + 3*j^2 + 7*j/2 + 3) - (j^6 + 1)/2"},
             {"v2222",
              "(w^2*(-4*j^5 + 10*j^3 + 14*j^2 + 13*j + 6) - "
              "w*(j^3 + 2*j^2 + 2*j + 1))/2"}}));
        fams.push_back(make_family(
            "S5", BaseField::QZeta7, {}, {"c22"}, "j", "j^2",
            "c22*(-j^6 + j^5)",
            {{"v1212", "1"},
             {"v2112", "-1"},
             {"v2121", "-j^2"},
             {"v2211", "j^2"},
             {"v2212", "(j^4 - j^3 + j^2)*c22"},
             {"v2221", "c22*(2*j^5 + 2*j^3 + j + 1)"},
             {"v2222", "c22^2*(j^6 - 2*j^5 - j^3 - j^2 - 2)"}}));
        fams.push_back(make_family(
            "S6", BaseField::Q, {"v2221", "v2222"}, {"c21", "v2221", "v2222"},
            "1", "1", "0",
            {{"v1111", "0"},
             {"v1112", "1"},
             {"v1121", "-3"},
             {"v1211", "3"},
             {"v1212", "1 - c21"},
             {"v2111", "-1"},
             {"v2112", "c21"},
             {"v2121", "c21 - 3"},
             {"v2211", "2 - c21"},
             {"v2212", "-v2221"},
             {"v2221", "v2221"},
             {"v2222", "v2222"}}));
        return fams;
    }();
    return cat;
}

const SolutionFamily& solution(const std::string& name) {
    for (const auto& fam : solution_catalog())
        if (fam.name == name) return fam;
    throw InvalidInputError("no solution family named " + name);
}

std::string solution_to_json(const SolutionFamily& fam) {
    nlohmann::ordered_json out;
    out["name"] = fam.name;
    out["field"] = field_name(fam.field);
    out["extra-params"] = fam.extra_params;
    out["frees"] = fam.frees;
    out["g"] = fam.g;
    out["p"] = fam.p;
    out["w"] = fam.w;
    nlohmann::ordered_json vt = nlohmann::ordered_json::object();
    for (const auto& entry : fam.v) vt[entry.first] = entry.second;
    out["v"] = vt;
    return out.dump(2) + "\n";
}

SolutionFamily solution_from_json(const std::string& text) {
    nlohmann::ordered_json in;
    try {
        in = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("bad solution file: ") + e.what());
    }
    SolutionFamily fam;
    try {
        fam.name = in.at("name").get<std::string>();
        const std::string field = in.at("field").get<std::string>();
        if (field == field_name(BaseField::Q)) fam.field = BaseField::Q;
        else if (field == field_name(BaseField::QZeta7)) fam.field = BaseField::QZeta7;
        else throw InvalidInputError("bad solution field: " + field);
        fam.extra_params = in.at("extra-params").get<std::vector<std::string>>();
        fam.frees = in.at("frees").get<std::vector<std::string>>();
        fam.g = in.at("g").get<std::string>();
        fam.p = in.at("p").get<std::string>();
        fam.w = in.at("w").get<std::string>();
        for (const auto& [key, val] : in.at("v").items()) {
            v_indices(key);
            fam.v.emplace_back(key, val.get<std::string>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("bad solution file: ") + e.what());
    }
    return fam;
}

/***** verification *****/

namespace {

struct FamilyInstance {
    ParamSetPtr ps;
    FrobeniusData fd;
    StructureConstants sc; // a, b, c, v filled; u left to solve
};

FamilyInstance instantiate(const SolutionFamily& fam,
                           const std::map<std::string, Scalar>& assign) {
    FamilyInstance inst;
    inst.ps = fam.param_set();
    for (const auto& entry : assign)
        if (std::find(fam.frees.begin(), fam.frees.end(), entry.first) ==
            fam.frees.end())
            throw InvalidInputError(
                "assignment to a name that is not a family parameter: " +
                entry.first);
    auto ev = [&](const std::string& text) {
        Scalar s = parse_scalar(text, inst.ps);
        return assign.empty() ? s : s.substituted(assign, inst.ps);
    };
    const Scalar g = ev(fam.g);
    inst.fd = make_jordan_frobenius(g, g.pow(3));
    inst.sc = make_zero_constants(inst.ps);
    set_cubic_pattern(inst.sc, ev(fam.p), ev(fam.w));
    derive_b_table(inst.fd, inst.sc);
    for (int l = 0; l < 3; ++l)
        for (int i = 0; i < 2; ++i) {
            Scalar ci = Scalar::param(inst.ps, c_name(l, i));
            inst.sc.c[l][i] = assign.empty() ? ci : ci.substituted(assign, inst.ps);
        }
    for (const auto& entry : fam.v) {
        const auto idx = v_indices(entry.first);
        inst.sc.v[idx[0]][idx[1]][idx[2]][idx[3]] = ev(entry.second);
    }
    return inst;
}

} // namespace

VerificationReport verify_solution(const SolutionFamily& fam,
                                   const std::map<std::string, Scalar>& assign) {
    FamilyInstance inst = instantiate(fam, assign);
    const ParamSetPtr& ps = inst.ps;
    VerificationReport rep;
    rep.family = fam.name;

    // Solve the pairing constants from the conditions that bound them: the
    // sixteen leftover conditions first, then the degree-six identities.
    // Declared family parameters are never used as pivots.
    solve_u_table(inst.fd, inst.sc);
    std::vector<Equation> rows = residual_equations(inst.fd, inst.sc);
    {
        std::vector<Equation> six = gen_si6(inst.sc);
        rows.insert(rows.end(), std::make_move_iterator(six.begin()),
                    std::make_move_iterator(six.end()));
    }
    std::vector<std::string> unknowns;
    for (const auto& nm : c_names())
        if (std::find(fam.frees.begin(), fam.frees.end(), nm) == fam.frees.end())
            unknowns.push_back(nm);
    AffineSolve sol = solve_affine(rows, unknowns, ps);
    for (const auto& e : sol.leftovers) rep.failures.push_back("pin:" + e.name);
    for (const auto& pin : sol.pins) rep.pinned.emplace(pin.first, pin.second);

    // Rebuild every table with the solved constants and evaluate the whole
    // identity stack.
    auto subst = [&](const Scalar& s) {
        return rep.pinned.empty() ? s : s.substituted(rep.pinned, ps);
    };
    StructureConstants sc2 = make_zero_constants(ps);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) sc2.a[i][j][k] = subst(inst.sc.a[i][j][k]);
    for (int l = 0; l < 3; ++l)
        for (int i = 0; i < 2; ++i) sc2.c[l][i] = subst(inst.sc.c[l][i]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int h = 0; h < 2; ++h)
                    sc2.v[i][j][k][h] = subst(inst.sc.v[i][j][k][h]);
    derive_b_table(inst.fd, sc2);
    solve_u_table(inst.fd, sc2);

    std::vector<Equation> all = gen_si4(inst.fd, sc2);
    for (auto&& chunk :
         {gen_si5_lines(inst.fd, sc2), residual_equations(inst.fd, sc2),
          gen_si6(sc2)})
        all.insert(all.end(), std::make_move_iterator(chunk.begin()),
                   std::make_move_iterator(chunk.end()));
    rep.equations_checked = all.size();
    for (const auto& e : all)
        if (!e.lhs.is_zero()) rep.failures.push_back(e.name);
    rep.ok = rep.failures.empty();

    for (const auto& nm : ps->names)
        if (rep.pinned.find(nm) == rep.pinned.end() &&
            assign.find(nm) == assign.end())
            rep.free_names.push_back(nm);
    return rep;
}

void require_verified(const VerificationReport& report) {
    if (report.ok) return;
    const std::string head = report.failures.empty()
                                 ? std::string("(none recorded)")
                                 : report.failures.front();
    throw VerificationFailedError("family " + report.family + ": condition " +
                                  head + " does not vanish");
}

Presentation relations_from_solution(const SolutionFamily& fam) {
    FamilyInstance inst = instantiate(fam, {});
    Alphabet alphabet = pair_alphabet();
    OrderPtr ord = make_graded_lex(alphabet);
    NcPoly r3 = cubic_relation(inst.sc, alphabet, ord);
    NcPoly r4 = quartic_relation(inst.sc, alphabet, ord);

    struct Rename {
        const char* family;
        BaseField field;
        const char* algebra;
        std::vector<std::pair<std::string, std::string>> map;
    };
    static const std::vector<Rename> renames = {
        {"S1", BaseField::Q, "U", {{"c22", "g"}, {"v2222", "h"}}},
        {"S2", BaseField::Q, "O", {{"w", "w"}}},
        {"S3", BaseField::Q, "P", {{"v2222", "a"}}},
        {"S4", BaseField::QZeta7, "Q", {{"w", "d"}}},
        {"S5", BaseField::QZeta7, "V", {{"c22", "c"}}},
        {"S6", BaseField::Q, "J", {{"c21", "u"}, {"v2221", "v"}, {"v2222", "w"}}},
    };
    const Rename* rn = nullptr;
    for (const auto& cand : renames)
        if (fam.name == cand.family) rn = &cand;
    if (rn == nullptr)
        throw InvalidInputError("no catalog letters for family " + fam.name);
    if (rn->field != fam.field)
        throw InvalidInputError("family " + fam.name +
                                " does not match its catalog field");

    // Every parameter that survives into the relations must have a letter.
    auto occurs = [&](const NcPoly& f, std::size_t idx) {
        auto in_mono = [idx](const Mono& m) { return idx < m.size() && m[idx] > 0; };
        for (const auto& term : f.terms()) {
            for (const auto& mono : term.second.num().terms())
                if (in_mono(mono.first)) return true;
            for (const auto& mono : term.second.den().terms())
                if (in_mono(mono.first)) return true;
        }
        return false;
    };
    std::vector<std::string> letters;
    for (const auto& entry : rn->map) letters.push_back(entry.second);
    ParamSetPtr tps = make_param_set(rn->field, letters);
    std::map<std::string, Scalar> assign;
    for (const auto& nm : inst.ps->names) assign.emplace(nm, Scalar::zero(tps));
    for (const auto& entry : rn->map)
        assign[entry.first] = Scalar::param(tps, entry.second);
    for (std::size_t n = 0; n < inst.ps->names.size(); ++n) {
        const std::string& nm = inst.ps->names[n];
        bool renamed = false;
        for (const auto& entry : rn->map) renamed = renamed || entry.first == nm;
        if (!renamed && (occurs(r3, n) || occurs(r4, n)))
            throw InvalidInputError("family parameter " + nm +
                                    " has no catalog letter");
    }
    Presentation out{rn->algebra,
                     alphabet,
                     tps,
                     ord,
                     std::nullopt,
                     {r3.coefficients_substituted(assign, tps),
                      r4.coefficients_substituted(assign, tps)}};
    validate_presentation(out);
    return out;
}

} // namespace ncg
