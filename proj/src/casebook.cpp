#include "ncg/casebook.hpp"

#include "ncg/parse.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <sstream>

namespace ncg {

namespace {

using nlohmann::ordered_json;

/***** Catalog texts *****/

// Mirrored byte-for-byte by the files under data/algebras.

const char* CAT_J = R"(algebra J
params u v w
gens x1 x2
zrdeg x1 = (1,0)
zrdeg x2 = (0,1)
rel x1*x2^2 - 2*x2*x1*x2 + x2^2*x1
rel x1^3*x2 - 3*x1^2*x2*x1 + 3*x1*x2*x1^2 - x2*x1^3 + (1-u)*x1*x2*x1*x2 + u*x2*x1^2*x2 + (u-3)*x2*x1*x2*x1 + (2-u)*x2^2*x1^2 - v*x2^2*x1*x2 + v*x2^3*x1 + w*x2^4
)";

const char* CAT_D = R"(algebra D(-2,-1)
gens x1 x2
zrdeg x1 = (1,0)
zrdeg x2 = (0,1)
rel x1*x2^2 - 2*x2*x1*x2 + x2^2*x1
rel x1^3*x2 - 3*x1^2*x2*x1 + 3*x1*x2*x1^2 - x2*x1^3
)";

const char* CAT_U = R"(algebra U
params g h
gens x1 x2
rel x1*x2^2 - 2*x2*x1*x2 + x2^2*x1
rel x1*x2*x1*x2 - x2*x1^2*x2 - x2*x1*x2*x1 + x2^2*x1^2 + g*x2^2*x1*x2 - g*x2^3*x1 + h*x2^4
)";

const char* CAT_V = R"(algebra V
field Qzeta7
params w l
gens x1 x2
rel x1*x2^2 - (1+j^2)*x2*x1*x2 + j^2*x2^2*x1 + w*(-j^6+j^5)*x2^3
rel x1*x2*x1*x2 - x2*x1^2*x2 - j^2*x2*x1*x2*x1 + j^2*x2^2*x1^2 + l*(j^4-j^3+j^2)*x2^2*x1*x2 + l*(2*j^5+2*j^3+j+1)*x2^3*x1 + l^2*(j^6-2*j^5-j^3-j^2-2)*x2^4
)";

const char* CAT_O = R"(algebra O
params w
gens x1 x2
rel x1*x2^2 - x2^2*x1 + w*x2^3
rel x1*x2*x1*x2 + x2*x1^2*x2 + x2*x1*x2*x1 - 3*x2^2*x1^2 + (1 - w/2)*x2^2*x1*x2 + (7*w/2 - 1)*x2^3*x1 + (-3*w^2/2 + w/2)*x2^4
)";

const char* CAT_P = R"(algebra P
params a
gens x1 x2
rel x1*x2^2 - x2^2*x1 + (2/7)*x2^3
rel x1*x2*x1*x2 + x2*x1^2*x2 + x2*x1*x2*x1 - 3*x2^2*x1^2 + (6/7)*x2^2*x1*x2 + a*x2^4
)";

const char* CAT_Q = R"(algebra Q
field Qzeta7
params d
gens x1 x2
rel x1*x2^2 - (1-j^3)*x2*x1*x2 - j^3*x2^2*x1 + d*x2^3
rel x1*x2*x1*x2 + j*x2*x1^2*x2 - (j^6+j^2+2*j+2)*x2*x1*x2*x1 + (j^6+j^2+j+1)*x2^2*x1^2 + ((j^6+1)/2 - d*(j^4/2 + 2*j^3 + 3*j^2 + 2 + 7*j/2))*x2^2*x1*x2 + (d*(j^5 + 3*j^4/2 + 2*j^3 + 3*j^2 + 7*j/2 + 3) - (j^6+1)/2)*x2^3*x1 + (1/2)*(d^2*(-4*j^5 + 10*j^3 + 14*j^2 + 13*j + 6) - d*(j^3 + 2*j^2 + 2*j + 1))*x2^4
)";

const char* CAT_AQ = R"(algebra A(q)
params q
gens y x
zrdeg y = (1,0)
zrdeg x = (0,1)
rel x*y - q*y*x
)";

const char* CAT_APRIME = R"(algebra A'
gens y x
zrdeg y = (1,0)
zrdeg x = (0,1)
rel y*x - x*y - x^2
)";

// Third element of J's completed basis; produced by the weight-5 overlap of
// the two defining relations.
const char* J_THIRD =
    "x1^2*x2*x1*x2 - 3*x1*x2*x1^2*x2 + 2*x1*x2*x1*x2*x1 + 3*x2*x1^2*x2*x1"
    " - 5*x2*x1*x2*x1^2 + (2*u-2)*x2*x1*x2*x1*x2 + 2*x2^2*x1^3"
    " - 2*u*x2^2*x1^2*x2 + (6-2*u)*x2^2*x1*x2*x1 + (2*u-4)*x2^3*x1^2"
    " + 2*v*x2^3*x1*x2 - 2*v*x2^4*x1 - 2*w*x2^5";

// The x1-commutators that eliminate the cover generators z1 and z2.
const char* SKEW_COVER = R"(algebra C
params u v w
gens x1 x2 z1:2 z2:3
rel x1*x2 - x2*x1 - z1
rel x1*z1 - z1*x1 - z2
rel x2*z1 - z1*x2
rel x1*z2 - z2*x1 + (1-u)*z1^2 + x2*z2 - v*x2^2*z1 + w*x2^4
rel x2*z2 - z2*x2
rel z1*z2 - z2*z1
)";

struct EntryDef {
    const char* name;
    const char* file;
    const char* text;
    const char* note;
};

const EntryDef CATALOG_DEFS[] = {
    {"J", "j.alg", CAT_J,
     "three-parameter pencil with one cubic and one quartic relation; the "
     "casebook's central algebra"},
    {"D(-2,-1)", "d-2-1.alg", CAT_D,
     "bidegree-homogeneous quotient; comparison target for J's associated "
     "bigraded algebra"},
    {"U", "u.alg", CAT_U,
     "candidate family over Q; rejected by its degree-5 dimension"},
    {"V", "v.alg", CAT_V,
     "cyclotomic candidate family; the two scalar slots coincide on the "
     "solution locus and the rejection runs on that diagonal"},
    {"O", "o.alg", CAT_O,
     "candidate family over Q; rejected by its degree-7 dimension"},
    {"P", "p.alg", CAT_P,
     "candidate family over Q; rejected by its degree-7 dimension"},
    {"Q", "q.alg", CAT_Q,
     "cyclotomic candidate family; rejected by its degree-7 dimension, with "
     "leading words differing from the set shared by O and P"},
    {"A(q)", "a-q.alg", CAT_AQ,
     "skew polynomial plane, a domain for q != 0; bigraded comparison point "
     "for the transfer criterion"},
    {"A'", "a-prime.alg", CAT_APRIME,
     "filtered deformation of the skew plane: its associated bigraded "
     "algebra is A(q) at q = 1"},
};

/***** Shared helpers *****/

// Pins a subset of p's parameters to parsed values, keeping the rest.
Presentation pinned(const Presentation& p,
                    const std::map<std::string, std::string>& assign) {
    if (assign.empty()) return p;
    for (const auto& [name, text] : assign) {
        (void)text;
        if (p.params->index_of(name) < 0)
            throw InvalidInputError("unknown parameter '" + name + "' for " + p.name);
    }
    std::vector<std::string> keep;
    for (const auto& name : p.params->names)
        if (!assign.count(name)) keep.push_back(name);
    ParamSetPtr target = make_param_set(p.params->field, keep);
    std::map<std::string, Scalar> values;
    for (const auto& [name, text] : assign)
        values.emplace(name, parse_scalar(text, target));
    return specialize_presentation(p, values, target);
}

// Deterministic small rational, printable form.
std::string random_rational(std::mt19937_64& rng) {
    static const int dens[5] = {1, 2, 3, 5, 7};
    std::int64_t num = static_cast<std::int64_t>(rng() % 19) - 9;
    int den = dens[rng() % 5];
    std::string out = std::to_string(num);
    if (den != 1) out += "/" + std::to_string(den);
    return out;
}

std::uint64_t mixed_seed(std::uint64_t seed, const std::string& tag) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return seed * 0x9E3779B97F4A7C15ULL + h;
}

std::vector<BigInt> series_dims(std::size_t maxdeg) {
    Coeffs c = expand_series(reference_series(), maxdeg);
    std::vector<BigInt> out;
    for (const Rational& r : c) out.push_back(rat_num(r));
    return out;
}

Coeffs to_coeffs(const std::vector<BigInt>& v) {
    Coeffs out;
    for (const BigInt& b : v) out.push_back(Rational(b));
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

NcPoly monic_copy(const NcPoly& f) {
    NcPoly g = f;
    g.make_monic();
    return g;
}

// f rebuilt onto `like`'s order and parameter set (content-compatible).
NcPoly aligned(const NcPoly& f, const Presentation& like) {
    return f.coefficients_substituted({}, like.params).rebuilt_with(like.order);
}

/***** Rejection plans *****/

const std::vector<std::string> UV_WORDS = {"x1*x2^2", "x1*x2*x1*x2"};
const std::vector<std::string> OPQ_WORDS = {
    "x1*x2^2",          "x1*x2*x1*x2",        "x2^2*x1^2*x2",
    "x2^2*x1^3*x2",     "x2^2*x1*x2*x1^2*x2", "x2^2*x1^4*x2"};

struct RejectPlan {
    std::vector<std::string> params; // names pinned each run
    bool tied;                       // one common value for every name
    std::vector<std::vector<std::string>> leads;
    const std::vector<std::string>* reference;
};

const RejectPlan* reject_plan(const std::string& family) {
    static const std::map<std::string, RejectPlan> plans = {
        {"U",
         {{"g", "h"},
          false,
          {{"1", "2"}, {"0", "0"}, {"3", "-1"}, {"-2", "5"}, {"1/2", "7"}},
          &UV_WORDS}},
        {"V",
         {{"w", "l"},
          true,
          {{"0"}, {"1"}, {"j-3"}, {"-5/2"}, {"4/7"}},
          &UV_WORDS}},
        {"O",
         {{"w"}, false, {{"1"}, {"0"}, {"-2"}, {"7/3"}, {"1/5"}}, &OPQ_WORDS}},
        {"P",
         {{"a"}, false, {{"5"}, {"0"}, {"-1"}, {"2/7"}, {"9/4"}}, &OPQ_WORDS}},
        {"Q",
         {{"d"}, false, {{"0"}, {"1"}, {"j+1"}, {"-3/5"}, {"2"}}, &OPQ_WORDS}},
    };
    auto it = plans.find(family);
    return it == plans.end() ? nullptr : &it->second;
}

RejectionReport reject_impl(const std::string& family, std::int64_t bound,
                            std::uint64_t seed, std::size_t runs, bool strict_lm) {
    const RejectPlan* plan = reject_plan(family);
    if (!plan) throw InvalidInputError("no rejection plan for family '" + family + "'");
    if (runs == 0) throw InvalidInputError("rejection needs at least one run");

    Presentation base = catalog_presentation(family);
    RejectionReport rep;
    rep.family = family;
    rep.bound = bound;
    rep.reference_words = *plan->reference;

    std::mt19937_64 rng(mixed_seed(seed, family));
    std::vector<std::string> first_sorted;
    for (std::size_t run = 0; run < runs; ++run) {
        std::vector<std::string> vals;
        if (run < plan->leads.size()) {
            vals = plan->leads[run];
        } else {
            std::size_t n = plan->tied ? 1 : plan->params.size();
            for (std::size_t i = 0; i < n; ++i) vals.push_back(random_rational(rng));
        }
        std::map<std::string, std::string> assign;
        std::string label;
        if (plan->tied) {
            for (const auto& name : plan->params) assign[name] = vals[0];
            label = join(plan->params, " = ") + " = " + vals[0];
        } else {
            std::vector<std::string> parts;
            for (std::size_t i = 0; i < plan->params.size(); ++i) {
                assign[plan->params[i]] = vals[i];
                parts.push_back(plan->params[i] + " = " + vals[i]);
            }
            label = join(parts, ", ");
        }
        rep.specializations.push_back(label);

        Presentation spec = pinned(base, assign);
        GroebnerResult gb = groebner(spec, {.bound = bound, .max_basis = 256});
        std::vector<std::string> words;
        for (const NcPoly& g : gb.basis)
            words.push_back(word_str(spec.alphabet, g.leading_word()));
        std::vector<std::string> sorted = words;
        std::sort(sorted.begin(), sorted.end());
        if (run == 0) {
            rep.leading_words = words;
            rep.dims = normal_word_counts(gb, spec.alphabet, bound);
            rep.lm_stable = true;
            first_sorted = sorted;
        } else if (sorted != first_sorted) {
            rep.lm_stable = false;
        }
    }

    std::vector<std::string> ref_sorted = rep.reference_words;
    std::sort(ref_sorted.begin(), ref_sorted.end());
    rep.lm_reference_match = (first_sorted == ref_sorted);

    rep.reference_dims = series_dims(static_cast<std::size_t>(bound));
    SeriesComparison cmp = compare_series(to_coeffs(rep.dims), to_coeffs(rep.reference_dims));
    rep.first_difference = cmp.equal ? 0 : cmp.index;
    rep.sign = cmp.equal ? 0 : cmp.sign;
    rep.rejected = !cmp.equal && cmp.sign > 0;

    if (!rep.lm_stable)
        throw ReproductionFailureError("leading-word stage for family " + family +
                                       ": the set depends on the specialization");
    if (strict_lm && !rep.lm_reference_match)
        throw ReproductionFailureError("leading-word stage for family " + family +
                                       ": computed {" + join(rep.leading_words, ", ") +
                                       "} differs from the recorded set");
    if (!rep.rejected)
        throw ReproductionFailureError(
            "dimension stage for family " + family +
            ": no surplus against the reference series at the bound");

    std::ostringstream note;
    note << "dimension " << rep.dims[rep.first_difference] << " at degree "
         << rep.first_difference << " against " << rep.reference_dims[rep.first_difference]
         << " required by the reference series";
    if (plan->tied) note << "; both scalar slots pinned to a common value";
    if (!rep.lm_reference_match)
        note << "; leading words differ from the set shared by the other weight-7 "
                "families while generating the same dimensions degree by degree";
    rep.note = note.str();
    return rep;
}

} // namespace

/***** Catalog *****/

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        for (const EntryDef& def : CATALOG_DEFS)
            out.push_back({def.name, def.file, def.text, def.note});
        return out;
    }();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return e;
    throw InvalidInputError("no catalog entry named '" + name + "'");
}

Presentation catalog_presentation(const std::string& name) {
    return parse_algebra(catalog_entry(name).text);
}

RationalSeries reference_series() {
    RationalSeries s;
    s.num = {Rational(1)};
    s.den = poly_mul(poly_mul(one_minus_tk(1), one_minus_tk(1)),
                     poly_mul(one_minus_tk(2), one_minus_tk(3)));
    return s;
}

/***** Rejection by graded dimensions *****/

RejectionReport reject_by_hilbert(const std::string& family, std::uint64_t seed,
                                  std::size_t runs) {
    if (family != "U" && family != "V")
        throw InvalidInputError("reject_by_hilbert covers U and V, not '" + family + "'");
    return reject_impl(family, 5, seed, runs, /*strict_lm=*/true);
}

RejectionReport reject_by_hilbert7(const std::string& family, std::uint64_t seed,
                                   std::size_t runs) {
    if (family != "O" && family != "P" && family != "Q")
        throw InvalidInputError("reject_by_hilbert7 covers O, P and Q, not '" +
                                family + "'");
    return reject_impl(family, 7, seed, runs, /*strict_lm=*/false);
}

/***** The regular pencil end to end *****/

JordanPipelineReport jordan_pipeline(const std::map<std::string, std::string>& assign) {
    JordanPipelineReport rep;
    Presentation sym = catalog_presentation("J");
    rep.pres = pinned(sym, assign);
    const Presentation& p = rep.pres;

    rep.gb = groebner(p, {.bound = 8, .max_basis = 64});
    if (!rep.gb.complete || rep.gb.basis.size() != 3)
        throw ReproductionFailureError("completion stage for J: expected a complete "
                                       "three-element basis");

    // The recorded third element, carried through the same specialization.
    NcPoly third = parse_poly(J_THIRD, sym.alphabet, sym.params, sym.order);
    std::map<std::string, Scalar> values;
    for (const auto& [name, text] : assign)
        values.emplace(name, parse_scalar(text, p.params));
    rep.basis_matches_reference =
        (rep.gb.basis[2] == monic_copy(third.coefficients_substituted(values, p.params))
                                .rebuilt_with(p.order));
    if (!rep.basis_matches_reference)
        throw ReproductionFailureError("third-element stage for J: the completed "
                                       "basis deviates from the recorded element");

    rep.dims = normal_word_counts(rep.gb, p.alphabet, 10);
    rep.dims_match_reference = (rep.dims == series_dims(10));
    if (!rep.dims_match_reference)
        throw ReproductionFailureError("dimension stage for J: graded dimensions "
                                       "deviate from the reference series");

    GroebnerOptions opt{.bound = 7, .max_basis = 64};
    rep.graded = assoc_graded(p, opt);
    Presentation target = catalog_presentation("D(-2,-1)");
    std::vector<NcPoly> graded_rels, target_rels;
    for (const NcPoly& f : rep.graded.relations) graded_rels.push_back(aligned(f, p));
    for (const NcPoly& f : target.relations) target_rels.push_back(aligned(f, p));
    GroebnerResult gb_graded = groebner(graded_rels, p.alphabet, opt);
    GroebnerResult gb_target = groebner(target_rels, p.alphabet, opt);
    rep.graded_matches_target = gb_graded.complete && gb_target.complete;
    for (const NcPoly& f : graded_rels)
        rep.graded_matches_target =
            rep.graded_matches_target && member(f, gb_target, p.alphabet) == Membership::Yes;
    for (const NcPoly& f : target_rels)
        rep.graded_matches_target =
            rep.graded_matches_target && member(f, gb_graded, p.alphabet) == Membership::Yes;
    if (!rep.graded_matches_target)
        throw ReproductionFailureError("bigraded-quotient stage for J: the leading "
                                       "parts do not generate the target ideal");

    rep.criterion = criterion_check(p, target, opt);
    if (rep.criterion.verdict != CriterionVerdict::MatchesTarget)
        throw ReproductionFailureError("criterion stage for J: verdict " +
                                       criterion_verdict_name(rep.criterion.verdict));

    const MultiGrading& g = *p.zr;
    NcPoly l1 = monic_copy(lh(p.relations[0], g));
    NcPoly l2 = monic_copy(lh(p.relations[1], g));
    NcPoly l3 = monic_copy(lh(rep.gb.basis[2], g));
    NcPoly X1 = NcPoly::term(p.order, p.params, Scalar::one(p.params), Word{0});
    NcPoly X2 = NcPoly::term(p.order, p.params, Scalar::one(p.params), Word{1});
    NcPoly combo = -(l2 * X2) - X2 * l2 + l1 * X1 * X1 + X1 * X1 * l1 - X1 * l1 * X1;
    rep.lh_blocks_recombine = (combo == l3);
    NcPoly variant = l2 * X2 - X2 * l2 + l1 * X1 * X1 - X1 * X1 * l1 - X1 * l1 * X1;
    rep.lh_variant_residual = variant - l3;
    if (!rep.lh_blocks_recombine || rep.lh_variant_residual->is_zero())
        throw ReproductionFailureError("block-identity stage for J: the sign "
                                       "pattern facts moved");
    rep.note = "the (+,-,+,-,-) sign variant misses the degree-five leading part "
               "by the recorded four-term residual";
    return rep;
}

/***** Point sequences *****/

namespace {

struct PPoint {
    Scalar p, q;
};

// The window equations: the cubic relation read on three consecutive points
// and the quartic relation read on four.
Scalar window_cubic(const PPoint& a1, const PPoint& a2, const PPoint& a3,
                    const Scalar& two) {
    return a3.p * a2.q * a1.q - two * a3.q * a2.p * a1.q + a3.q * a2.q * a1.p;
}

Scalar window_quartic(const PPoint& a1, const PPoint& a2, const PPoint& a3,
                      const PPoint& a4, const Scalar& u, const Scalar& v,
                      const Scalar& w, ParamSetPtr ps) {
    auto k = [&](std::int64_t n) { return parse_scalar(std::to_string(n), ps); };
    Scalar one = Scalar::one(ps);
    return a4.p * a3.p * a2.p * a1.q - k(3) * a4.p * a3.p * a2.q * a1.p +
           k(3) * a4.p * a3.q * a2.p * a1.p + (one - u) * a4.p * a3.q * a2.p * a1.q -
           a4.q * a3.p * a2.p * a1.p + u * a4.q * a3.p * a2.p * a1.q +
           (u - k(3)) * a4.q * a3.p * a2.q * a1.p +
           (k(2) - u) * a4.q * a3.q * a2.p * a1.p - v * a4.q * a3.q * a2.p * a1.q +
           v * a4.q * a3.q * a2.q * a1.p + w * a4.q * a3.q * a2.q * a1.q;
}

std::string point_str(const PPoint& a) {
    return "[" + a.p.str() + " : " + a.q.str() + "]";
}

// Coefficients of r as a linear form in (p5, q5); r must be homogeneous
// linear, which the caller's window shapes guarantee and this checks.
std::pair<Scalar, Scalar> linear_in_next(const Scalar& r, ParamSetPtr ps) {
    Scalar zero = Scalar::zero(ps), one = Scalar::one(ps);
    Scalar a = r.substituted({{"p5", one}, {"q5", zero}}, ps);
    Scalar b = r.substituted({{"p5", zero}, {"q5", one}}, ps);
    Scalar p5 = Scalar::param(ps, "p5"), q5 = Scalar::param(ps, "q5");
    if (r != a * p5 + b * q5)
        throw InvalidInputError("window equation is not linear in the next point");
    return {a, b};
}

} // namespace

PointModuleReport point_module_solve(const std::map<std::string, std::string>& assign) {
    for (const auto& [name, text] : assign) {
        (void)text;
        if (name != "u" && name != "v" && name != "w")
            throw InvalidInputError("unknown parameter '" + name + "' for J");
    }
    std::vector<std::string> names;
    for (const char* n : {"u", "v", "w"})
        if (!assign.count(n)) names.push_back(n);
    names.insert(names.end(), {"p1", "d", "p5", "q5"});
    ParamSetPtr ps = make_param_set(BaseField::Q, names);

    auto coeff = [&](const char* name) {
        auto it = assign.find(name);
        return it == assign.end() ? Scalar::param(ps, name)
                                  : parse_scalar(it->second, ps);
    };
    Scalar u = coeff("u"), v = coeff("v"), w = coeff("w");
    Scalar zero = Scalar::zero(ps), one = Scalar::one(ps);
    Scalar two = parse_scalar("2", ps), three = parse_scalar("3", ps);
    Scalar six = parse_scalar("6", ps);
    Scalar p1 = Scalar::param(ps, "p1"), d = Scalar::param(ps, "d");

    // 6 d^3 + (3 - u) d^2 - v d + w, the residual the stretched pattern needs.
    Scalar cubic = six * d.pow(3) + (three - u) * d.pow(2) - v * d + w;

    struct Pattern {
        std::string name;
        std::array<PPoint, 4> pts;
        Scalar constraint;
    };
    std::vector<Pattern> patterns;
    patterns.push_back({"P1",
                        {PPoint{one, zero}, PPoint{one, zero}, PPoint{one, zero},
                         PPoint{one, zero}},
                        zero});
    patterns.push_back({"P2",
                        {PPoint{p1, one}, PPoint{one, zero}, PPoint{one, zero},
                         PPoint{p1 - u, one}},
                        zero});
    patterns.push_back({"P3",
                        {PPoint{p1, one}, PPoint{p1 + d, one}, PPoint{p1 + two * d, one},
                         PPoint{p1 + three * d, one}},
                        cubic});

    PointModuleReport rep;
    for (const Scalar& c : {w, -v, three - u, six}) rep.cubic.push_back(c.str());

    for (const Pattern& pat : patterns) {
        PointFamily fam;
        fam.name = pat.name;
        for (const PPoint& a : pat.pts) fam.window.push_back(point_str(a));
        fam.constraint = pat.constraint.is_zero() ? "" : pat.constraint.str();

        Scalar r1 = window_cubic(pat.pts[0], pat.pts[1], pat.pts[2], two);
        Scalar r2 = window_cubic(pat.pts[1], pat.pts[2], pat.pts[3], two);
        Scalar r3 = window_quartic(pat.pts[0], pat.pts[1], pat.pts[2], pat.pts[3],
                                   u, v, w, ps);
        fam.satisfies_window = r1.is_zero() && r2.is_zero() && (r3 == pat.constraint);

        // Shift the window: the two equations that see the next point are
        // homogeneous linear in it, so continuations are a kernel.
        PPoint next{Scalar::param(ps, "p5"), Scalar::param(ps, "q5")};
        Scalar s1 = window_cubic(pat.pts[1], pat.pts[2], pat.pts[3], two);
        Scalar s2 = window_cubic(pat.pts[2], pat.pts[3], next, two);
        Scalar s3 = window_quartic(pat.pts[1], pat.pts[2], pat.pts[3], next, u, v, w, ps);
        auto [a2, b2] = linear_in_next(s2, ps);
        auto [a3, b3] = linear_in_next(s3, ps);
        Scalar det = a2 * b3 - b2 * a3;

        if (!s1.is_zero() && s1 != pat.constraint) {
            fam.extends = false;
            fam.note = "the shifted window already fails its three-point equation";
        } else if (det.is_constant() && !det.is_zero()) {
            fam.extends = false;
            fam.note = "the two continuation conditions have constant determinant " +
                       det.str() + ", so only the zero vector would continue; no "
                       "point of the line does";
        } else {
            PPoint cont = (a2.is_zero() && b2.is_zero()) ? PPoint{-b3, a3}
                                                         : PPoint{-b2, a2};
            if (!cont.q.is_zero()) {
                cont.p = cont.p / cont.q; // the convention: q = 1 when it is nonzero
                cont.q = one;
            } else {
                cont.p = one;
            }
            Scalar e2 = a2 * cont.p + b2 * cont.q;
            Scalar e3 = a3 * cont.p + b3 * cont.q;
            fam.extends = e2.is_zero() && (e3.is_zero() || e3 == pat.constraint);
            if (fam.extends) {
                fam.continuation = point_str(cont);
                fam.note = "the continuation repeats the pattern one step along";
            }
        }
        rep.families.push_back(fam);
        if (fam.satisfies_window && fam.extends) rep.classes.push_back(pat.name + "^inf");
    }

    // Root search for the continuation cubic, exact over the rationals.
    bool symbolic = false;
    for (const char* n : {"u", "v", "w"})
        if (!assign.count(n)) symbolic = true;
    if (symbolic) {
        rep.roots_complete = false;
        rep.note = "cubic coefficients stay symbolic; roots not searched";
        return rep;
    }

    std::vector<Rational> poly; // coefficients 0..3
    for (const Scalar& c : {w, -v, three - u, six}) {
        if (!c.is_constant() || !c.constant_value().is_rational_value())
            throw InvalidInputError("cubic coefficients must be rational constants");
        poly.push_back(c.constant_value().rational_value());
    }

    auto divisors = [](BigInt n) {
        std::vector<BigInt> out;
        if (n < 0) n = -n;
        for (BigInt i = 1; i * i <= n; ++i)
            if (n % i == 0) {
                out.push_back(i);
                out.push_back(n / i);
            }
        return out;
    };
    std::map<Rational, std::size_t> found;
    while (poly.size() > 1) {
        // Strip an exact root; stop when none is left in the field.
        Rational root;
        bool have = false;
        if (poly[0] == 0) {
            root = 0;
            have = true;
        } else {
            BigInt lcm = 1;
            for (const Rational& c : poly)
                lcm = boost::multiprecision::lcm(lcm, rat_den(c));
            std::vector<BigInt> zpoly;
            for (const Rational& c : poly) zpoly.push_back(rat_num(c * Rational(lcm)));
            std::vector<Rational> candidates;
            for (const BigInt& p : divisors(zpoly.front()))
                for (const BigInt& q : divisors(zpoly.back())) {
                    candidates.push_back(Rational(p, q));
                    candidates.push_back(Rational(-p, q));
                }
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()),
                             candidates.end());
            for (const Rational& r : candidates) {
                Rational val = 0;
                for (std::size_t i = poly.size(); i-- > 0;) val = val * r + poly[i];
                if (val == 0) {
                    root = r;
                    have = true;
                    break;
                }
            }
        }
        if (!have) break;
        ++found[root];
        // Synthetic division by (x - root).
        std::vector<Rational> quo(poly.size() - 1);
        Rational carry = 0;
        for (std::size_t i = poly.size(); i-- > 1;) {
            carry = poly[i] + carry * root;
            quo[i - 1] = carry;
        }
        poly = quo;
    }
    std::size_t total = 0;
    for (const auto& [r, m] : found) {
        rep.roots.push_back(to_string(r));
        rep.multiplicities.push_back(m);
        total += m;
    }
    rep.roots_complete = (total == 3);
    rep.note = rep.roots_complete
                   ? "every root of the continuation cubic lies in the base field"
                   : "a factor of degree " + std::to_string(3 - total) +
                         " has no roots in the base field; those solutions exist "
                         "over an extension and are not computed";
    return rep;
}

/***** Automorphism candidates *****/

JordanContext jordan_context(const std::map<std::string, std::string>& assign,
                             const std::vector<std::string>& extra_params) {
    Presentation base = catalog_presentation("J");
    for (const auto& [name, text] : assign) {
        (void)text;
        if (base.params->index_of(name) < 0)
            throw InvalidInputError("unknown parameter '" + name + "' for J");
    }
    std::vector<std::string> names;
    for (const auto& name : base.params->names)
        if (!assign.count(name)) names.push_back(name);
    names.insert(names.end(), extra_params.begin(), extra_params.end());
    ParamSetPtr target = make_param_set(BaseField::Q, names);
    std::map<std::string, Scalar> values;
    for (const auto& [name, text] : assign)
        values.emplace(name, parse_scalar(text, target));
    JordanContext ctx;
    ctx.pres = specialize_presentation(base, values, target);
    ctx.gb = groebner(ctx.pres, {.bound = 8, .max_basis = 64});
    if (!ctx.gb.complete || ctx.gb.basis.size() != 3)
        throw ReproductionFailureError("completion stage for J: expected a complete "
                                       "three-element basis");
    return ctx;
}

NcPoly substituted_relation(const JordanContext& ctx, const AutoCandidate& cand,
                            const NcPoly& f) {
    const Presentation& p = ctx.pres;
    NcPoly x1 = NcPoly::term(p.order, p.params, Scalar::one(p.params), Word{0});
    NcPoly x2 = NcPoly::term(p.order, p.params, Scalar::one(p.params), Word{1});
    NcPoly img1 = x1.scaled(cand.a1) + x2.scaled(cand.a2);
    NcPoly img2 = x1.scaled(cand.b1) + x2.scaled(cand.b2);
    NcPoly out = NcPoly::zero(p.order, p.params);
    for (const auto& [word, coeff] : f.terms()) {
        NcPoly prod = NcPoly::term(p.order, p.params, Scalar::one(p.params), {});
        for (Gen g : word) prod = prod * (g == 0 ? img1 : img2);
        out = out + prod.scaled(coeff);
    }
    return out;
}

AutoReport automorphism_check(const JordanContext& ctx, const AutoCandidate& cand) {
    for (const Scalar* s : {&cand.a1, &cand.a2, &cand.b1, &cand.b2})
        if (!same_param_set(s->params(), ctx.pres.params))
            throw InvalidInputError("candidate entries must live over the context's "
                                    "parameter set");
    if ((cand.a1 * cand.b2 - cand.a2 * cand.b1).is_zero())
        throw InvalidCandidateError("the substitution matrix is singular");
    AutoReport rep;
    rep.residual_cubic =
        normal_form(substituted_relation(ctx, cand, ctx.pres.relations[0]), ctx.gb.basis);
    rep.residual_quartic =
        normal_form(substituted_relation(ctx, cand, ctx.pres.relations[1]), ctx.gb.basis);
    rep.accept = rep.residual_cubic->is_zero() && rep.residual_quartic->is_zero();
    return rep;
}

/***** Skew extension *****/

Presentation skew_cover(const std::map<std::string, std::string>& assign) {
    return pinned(parse_algebra(SKEW_COVER), assign);
}

OreReport ore_check(const std::map<std::string, std::string>& assign, std::int64_t bound) {
    OreReport rep;
    rep.cover = skew_cover(assign);
    Presentation jordan = pinned(catalog_presentation("J"), assign);
    const Presentation& p = jordan;

    NcPoly x1 = NcPoly::term(p.order, p.params, Scalar::one(p.params), Word{0});
    NcPoly x2 = NcPoly::term(p.order, p.params, Scalar::one(p.params), Word{1});
    NcPoly z1 = x1 * x2 - x2 * x1;
    NcPoly z2 = x1 * z1 - z1 * x1;
    const std::array<const NcPoly*, 4> letter_image = {&x1, &x2, &z1, &z2};

    auto image = [&](const NcPoly& f) {
        NcPoly out = NcPoly::zero(p.order, p.params);
        for (const auto& [word, coeff] : f.terms()) {
            NcPoly prod = NcPoly::term(p.order, p.params, Scalar::one(p.params), {});
            for (Gen g : word) prod = prod * (*letter_image[g]);
            out = out + prod.scaled(coeff.substituted({}, p.params));
        }
        return out;
    };

    rep.rewrites_vanish = image(rep.cover.relations[0]).is_zero() &&
                          image(rep.cover.relations[1]).is_zero();
    for (std::size_t i = 2; i < rep.cover.relations.size(); ++i)
        rep.images.push_back(image(rep.cover.relations[i]));

    GroebnerResult gb = groebner(p, {.bound = 8, .max_basis = 64});
    const NcPoly& f1 = p.relations[0];
    const NcPoly& f2 = p.relations[1];
    rep.first_is_cubic = (rep.images[0] == -f1);
    rep.second_reduces_to_quartic = (normal_form(rep.images[1], {f1}) == f2);
    rep.third_in_ideal = member(rep.images[2], gb, p.alphabet) == Membership::Yes;
    rep.fourth_in_ideal = member(rep.images[3], gb, p.alphabet) == Membership::Yes;

    GroebnerResult gb_images =
        groebner(rep.images, p.alphabet, {.bound = bound, .max_basis = 128});
    rep.cubic_in_image_ideal = member(f1, gb_images, p.alphabet) == Membership::Yes;
    rep.quartic_in_image_ideal = member(f2, gb_images, p.alphabet) == Membership::Yes;

    rep.ok = rep.rewrites_vanish && rep.first_is_cubic && rep.second_reduces_to_quartic &&
             rep.third_in_ideal && rep.fourth_in_ideal && rep.cubic_in_image_ideal &&
             rep.quartic_in_image_ideal;
    if (!rep.rewrites_vanish)
        throw ReproductionFailureError("elimination stage: a defining rewrite "
                                       "survives the substitution");
    if (!rep.first_is_cubic || !rep.second_reduces_to_quartic || !rep.third_in_ideal ||
        !rep.fourth_in_ideal)
        throw ReproductionFailureError("cover-to-quotient stage: an eliminated "
                                       "relation misses the ideal");
    if (!rep.cubic_in_image_ideal || !rep.quartic_in_image_ideal)
        throw ReproductionFailureError("quotient-to-cover stage: a defining "
                                       "relation misses the image ideal");
    return rep;
}

/***** Dossier *****/

namespace {

std::string wrap_details(const ordered_json& j) { return j.dump(); }

std::vector<std::string> scalar_strings(const std::vector<BigInt>& v) {
    std::vector<std::string> out;
    for (const BigInt& b : v) out.push_back(b.str());
    return out;
}

CaseResult rejection_case(const std::string& key, const RejectionReport& r) {
    ordered_json j;
    j["family"] = r.family;
    j["bound"] = r.bound;
    j["specializations"] = r.specializations;
    j["leading-words"] = r.leading_words;
    j["reference-words"] = r.reference_words;
    j["lm-stable"] = r.lm_stable;
    j["lm-reference-match"] = r.lm_reference_match;
    j["dims"] = scalar_strings(r.dims);
    j["reference-dims"] = scalar_strings(r.reference_dims);
    j["first-difference"] = r.first_difference;
    j["sign"] = r.sign;
    j["rejected"] = r.rejected;
    return {key, r.rejected && r.lm_stable, r.note, wrap_details(j)};
}

CaseResult guarded(const std::string& key, const std::function<CaseResult()>& body) {
    try {
        return body();
    } catch (const NcgError& e) {
        ordered_json j;
        j["error"] = e.what();
        return {key, false, e.what(), wrap_details(j)};
    }
}

} // namespace

std::vector<CaseResult> run_all(std::uint64_t seed) {
    std::vector<CaseResult> out;

    JordanPipelineReport jp;
    bool have_jp = false;
    out.push_back(guarded("hilbert-series", [&] {
        jp = jordan_pipeline();
        have_jp = true;
        ordered_json j;
        j["dims"] = scalar_strings(jp.dims);
        j["reference"] = scalar_strings(series_dims(10));
        return CaseResult{"hilbert-series", jp.dims_match_reference,
                          "graded dimensions to degree 10 match the reference series",
                          wrap_details(j)};
    }));

    out.push_back(guarded("groebner-J", [&] {
        if (!have_jp) throw ReproductionFailureError("pipeline unavailable");
        ordered_json j;
        std::vector<std::string> words;
        for (const NcPoly& g : jp.gb.basis)
            words.push_back(word_str(jp.pres.alphabet, g.leading_word()));
        j["complete"] = jp.gb.complete;
        j["elements"] = jp.gb.basis.size();
        j["leading-words"] = words;
        j["third-element-matches"] = jp.basis_matches_reference;
        return CaseResult{"groebner-J",
                          jp.gb.complete && jp.gb.basis.size() == 3 &&
                              jp.basis_matches_reference,
                          "complete three-element basis with the recorded overlap "
                          "element",
                          wrap_details(j)};
    }));

    out.push_back(guarded("assoc-graded-J", [&] {
        if (!have_jp) throw ReproductionFailureError("pipeline unavailable");
        ordered_json j;
        j["matches-target"] = jp.graded_matches_target;
        j["verdict"] = criterion_verdict_name(jp.criterion.verdict);
        j["block-identity"] = jp.lh_blocks_recombine;
        j["sign-variant-residual"] = jp.lh_variant_residual->str(jp.pres.alphabet);
        return CaseResult{"assoc-graded-J",
                          jp.graded_matches_target && jp.lh_blocks_recombine &&
                              jp.criterion.verdict == CriterionVerdict::MatchesTarget,
                          jp.note, wrap_details(j)};
    }));

    for (const char* fam : {"U", "V"})
        out.push_back(guarded(std::string("hilbert-reject-") + fam, [&] {
            return rejection_case(std::string("hilbert-reject-") + fam,
                                  reject_by_hilbert(fam, seed));
        }));
    for (const char* fam : {"O", "P", "Q"})
        out.push_back(guarded(std::string("hilbert-reject-") + fam, [&] {
            return rejection_case(std::string("hilbert-reject-") + fam,
                                  reject_by_hilbert7(fam, seed));
        }));

    for (const SolutionFamily& fam : solution_catalog())
        out.push_back(guarded("stasheff-" + fam.name, [&] {
            VerificationReport vr = verify_solution(fam);
            ordered_json j;
            j["family"] = vr.family;
            j["equations-checked"] = vr.equations_checked;
            j["free-parameters"] = vr.free_names;
            ordered_json pins = ordered_json::object();
            for (const auto& [name, value] : vr.pinned) pins[name] = value.str();
            j["pinned"] = pins;
            j["failures"] = vr.failures;
            return CaseResult{"stasheff-" + fam.name,
                              vr.ok && vr.equations_checked == 264,
                              "all structure equations vanish with the recorded "
                              "free parameters",
                              wrap_details(j)};
        }));

    out.push_back(guarded("jordan-necessary", [&] {
        JordanCubicReport cubic = jordan_reduce_si4();
        QuarticBranchCertificate branch = certify_quartic_branch();
        CaseSplitReport split = case_split();
        ordered_json j;
        j["closure-determinant"] = cubic.det.str();
        j["det-is-branch-power"] = cubic.det_is_branch_power;
        j["rank-on-branch"] = cubic.rank_on_branch;
        j["kernel-matches-pattern"] = cubic.kernel_matches_pattern;
        j["offbranch-only-zero"] = branch.offbranch_only_zero;
        j["offbranch-collapses"] = branch.offbranch_collapses;
        j["seventh-root-identity"] = branch.seventh_root_identity;
        std::vector<std::string> branches;
        for (const CaseBranch& b : split.branches) branches.push_back(b.name);
        j["branches"] = branches;
        j["case1-only-zero"] = split.case1_only_zero;
        j["case2-consistent"] = split.case2_consistent;
        j["case2-forced"] = split.case2_forced;
        bool pass = cubic.det_is_branch_power && cubic.rank_on_branch == 5 &&
                    cubic.kernel_matches_pattern && branch.offbranch_only_zero &&
                    branch.offbranch_collapses && branch.seventh_root_identity &&
                    split.branches.size() == 2 && split.case1_only_zero &&
                    split.case2_consistent && split.case2_forced;
        return CaseResult{"jordan-necessary", pass,
                          "the degree-four and degree-five systems force the "
                          "recorded pairing and the two-way case split",
                          wrap_details(j)};
    }));

    out.push_back(guarded("ore-extension", [&] {
        OreReport ore = ore_check();
        ordered_json j;
        j["rewrites-vanish"] = ore.rewrites_vanish;
        j["first-is-cubic"] = ore.first_is_cubic;
        j["second-reduces-to-quartic"] = ore.second_reduces_to_quartic;
        j["third-in-ideal"] = ore.third_in_ideal;
        j["fourth-in-ideal"] = ore.fourth_in_ideal;
        j["cubic-in-image-ideal"] = ore.cubic_in_image_ideal;
        j["quartic-in-image-ideal"] = ore.quartic_in_image_ideal;
        return CaseResult{"ore-extension", ore.ok,
                          "the four-generator cover and the pencil generate each "
                          "other's relations",
                          wrap_details(j)};
    }));

    out.push_back(guarded("automorphisms", [&] {
        JordanContext ctx = jordan_context();
        std::mt19937_64 rng(mixed_seed(seed, "automorphisms"));
        auto scalar = [&](const std::string& text) {
            return parse_scalar(text, ctx.pres.params);
        };
        auto nonzero = [&] {
            std::string t = random_rational(rng);
            return (t == "0") ? std::string("1") : t;
        };
        std::size_t accepts = 0, rejects = 0, closure = 0;
        std::vector<AutoCandidate> accepted;
        for (int i = 0; i < 6; ++i) {
            AutoCandidate c{scalar(nonzero()), scalar(random_rational(rng)),
                            Scalar::zero(ctx.pres.params), Scalar::zero(ctx.pres.params)};
            c.b2 = c.a1;
            if (automorphism_check(ctx, c).accept) {
                ++accepts;
                accepted.push_back(c);
            }
        }
        for (int i = 0; i < 3; ++i) { // b1 != 0 spoils the cubic relation
            AutoCandidate c{scalar(nonzero()), scalar(random_rational(rng)),
                            scalar(nonzero()), Scalar::zero(ctx.pres.params)};
            if (!automorphism_check(ctx, c).accept) ++rejects;
        }
        for (int i = 0; i < 3; ++i) { // a1 != b2 spoils the quartic relation
            AutoCandidate c{scalar(nonzero()), scalar(random_rational(rng)),
                            Scalar::zero(ctx.pres.params), Scalar::zero(ctx.pres.params)};
            c.b2 = c.a1 + Scalar::one(ctx.pres.params);
            if (!automorphism_check(ctx, c).accept) ++rejects;
        }
        for (std::size_t i = 0; i + 1 < accepted.size() && closure < 4; i += 2) {
            const AutoCandidate& s = accepted[i];
            const AutoCandidate& t = accepted[i + 1];
            AutoCandidate comp{s.a1 * t.a1 + s.a2 * t.b1, s.a1 * t.a2 + s.a2 * t.b2,
                               s.b1 * t.a1 + s.b2 * t.b1, s.b1 * t.a2 + s.b2 * t.b2};
            if (automorphism_check(ctx, comp).accept) ++closure;
            Scalar det = s.a1 * s.b2 - s.a2 * s.b1;
            AutoCandidate inv{s.b2 / det, -(s.a2 / det), -(s.b1 / det), s.a1 / det};
            if (automorphism_check(ctx, inv).accept) ++closure;
        }
        bool pass = accepts == 6 && rejects == 6 && closure >= 2;
        ordered_json j;
        j["accepted"] = accepts;
        j["rejected"] = rejects;
        j["closure-checks"] = closure;
        return CaseResult{"automorphisms", pass,
                          "exactly the unipotent-shaped substitutions pass, and "
                          "they compose and invert",
                          wrap_details(j)};
    }));

    out.push_back(guarded("point-modules", [&] {
        PointModuleReport pm = point_module_solve();
        PointModuleReport special = point_module_solve({{"u", "3"}, {"v", "0"}, {"w", "0"}});
        ordered_json j;
        ordered_json fams = ordered_json::array();
        for (const PointFamily& f : pm.families) {
            ordered_json fj;
            fj["name"] = f.name;
            fj["window"] = f.window;
            fj["constraint"] = f.constraint;
            fj["satisfies-window"] = f.satisfies_window;
            fj["extends"] = f.extends;
            fj["continuation"] = f.continuation;
            fams.push_back(fj);
        }
        j["families"] = fams;
        j["classes"] = pm.classes;
        j["cubic"] = pm.cubic;
        j["forced-root-at-(3,0,0)"] = special.roots;
        j["forced-root-multiplicities"] = special.multiplicities;
        bool pass = pm.classes == std::vector<std::string>{"P1^inf", "P3^inf"} &&
                    special.roots == std::vector<std::string>{"0"} &&
                    special.multiplicities == std::vector<std::size_t>{3} &&
                    special.roots_complete;
        return CaseResult{"point-modules", pass,
                          "two patterns assemble; the middle one has no continuation",
                          wrap_details(j)};
    }));

    return out;
}

std::string dossier_json(const std::vector<CaseResult>& results, bool pretty) {
    ordered_json doc;
    doc["schema"] = "ncg/1";
    doc["verb"] = "casebook";
    ordered_json cases = ordered_json::array();
    bool all = true;
    for (const CaseResult& r : results) {
        ordered_json c;
        c["key"] = r.key;
        c["pass"] = r.pass;
        c["note"] = r.note;
        c["details"] = ordered_json::parse(r.details);
        cases.push_back(c);
        all = all && r.pass;
    }
    doc["cases"] = cases;
    doc["all-pass"] = all;
    return pretty ? doc.dump(2) + "\n" : doc.dump() + "\n";
}

} // namespace ncg
