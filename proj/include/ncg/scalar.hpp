#ifndef NCG_SCALAR_HPP
#define NCG_SCALAR_HPP

#include "ncg/cyclo.hpp"
#include "ncg/errors.hpp"
#include "ncg/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ncg {

// Ground fields the toolkit computes over.
enum class BaseField { Q, QZeta7 };

std::string field_name(BaseField f);

// A single value in the ground field. Rationals embed into the cyclotomic
// field, so mixed arithmetic silently widens Q values to QZeta7.
class BaseValue {
public:
    BaseValue() : field_(BaseField::Q) {}

    static BaseValue rational(const Rational& r, BaseField f = BaseField::Q);
    static BaseValue cyclo(const Cyclo7& c);
    static BaseValue zero(BaseField f) { return rational(Rational(0), f); }
    static BaseValue one(BaseField f) { return rational(Rational(1), f); }

    BaseField field() const { return field_; }
    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == Cyclo7::one(); }
    bool is_rational_value() const { return v_.is_rational(); }
    const Cyclo7& cyclo_value() const { return v_; }
    Rational rational_value() const;

    // Embeds into a wider field; narrowing a genuinely cyclotomic value
    // throws FieldMismatchError.
    BaseValue widen_to(BaseField f) const;

    BaseValue operator-() const;
    BaseValue operator+(const BaseValue& o) const;
    BaseValue operator-(const BaseValue& o) const;
    BaseValue operator*(const BaseValue& o) const;
    BaseValue operator/(const BaseValue& o) const;
    BaseValue inverse() const;
    BaseValue pow(std::int64_t e) const;

    bool operator==(const BaseValue& o) const;
    bool operator!=(const BaseValue& o) const { return !(*this == o); }
    int cmp(const BaseValue& o) const;

    std::string str() const;

private:
    BaseField field_;
    Cyclo7 v_;
};

// A named, ordered list of commuting parameters over a ground field. Scalars
// bound to different parameter sets never mix (FieldMismatchError), except
// that constants over the trivial rational set embed anywhere.
struct ParamSet {
    BaseField field;
    std::vector<std::string> names;

    int index_of(const std::string& name) const;
    bool operator==(const ParamSet& o) const {
        return field == o.field && names == o.names;
    }
};

using ParamSetPtr = std::shared_ptr<const ParamSet>;

// Validates that names are distinct identifiers; "j" is reserved over QZeta7.
ParamSetPtr make_param_set(BaseField field, std::vector<std::string> names);
ParamSetPtr trivial_param_set();
bool same_param_set(const ParamSetPtr& a, const ParamSetPtr& b);

// Exponent vector, one entry per parameter.
using Mono = std::vector<std::uint32_t>;

// Graded lexicographic comparison: total degree first, then the first
// differing exponent with the earlier parameter more significant.
struct MonoCmp {
    bool operator()(const Mono& a, const Mono& b) const;
};

// Sparse multivariate polynomial in the parameters with ground-field
// coefficients. Zero coefficients are never stored.
class MultiPoly {
public:
    MultiPoly() : MultiPoly(trivial_param_set()) {}
    explicit MultiPoly(ParamSetPtr ps) : params_(std::move(ps)) {}

    static MultiPoly constant(ParamSetPtr ps, const BaseValue& v);
    static MultiPoly variable(ParamSetPtr ps, int index);

    const ParamSetPtr& params() const { return params_; }
    const std::map<Mono, BaseValue, MonoCmp>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    BaseValue constant_value() const; // requires is_constant()
    std::int64_t total_degree() const; // -1 for the zero polynomial

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const BaseValue& v) const;

    const Mono& leading_mono() const;
    const BaseValue& leading_coeff() const;

    // Exact division; returns nothing when the divisor does not divide
    // exactly. Never fails spuriously for true divisors.
    std::optional<MultiPoly> try_divide(const MultiPoly& divisor) const;

    // Componentwise minimum exponent over all terms (the monomial content).
    Mono content_mono() const;
    MultiPoly divided_by_mono(const Mono& m) const;

    MultiPoly widened_to(ParamSetPtr target) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    void add_term(const Mono& m, const BaseValue& v);

    std::string str() const;

private:
    ParamSetPtr params_;
    std::map<Mono, BaseValue, MonoCmp> terms_;
};

// Element of the fraction field of MultiPoly: the working scalar type for
// every coefficient in the toolkit. Kept in a canonical form: the denominator
// is monic under graded lex, the shared monomial content is cancelled, and a
// full cancellation is applied whenever one side exactly divides the other.
// Fractions whose cancellation needs a proper polynomial gcd may stay
// unreduced; equality and zero tests stay exact via cross-multiplication.
class Scalar {
public:
    Scalar(); // zero over the trivial rational parameter set

    static Scalar integer(std::int64_t n);
    static Scalar rational(const Rational& r);
    static Scalar base(ParamSetPtr ps, const BaseValue& v);
    static Scalar zero(ParamSetPtr ps);
    static Scalar one(ParamSetPtr ps);
    static Scalar param(ParamSetPtr ps, const std::string& name);
    static Scalar from_poly(MultiPoly num);
    static Scalar fraction(MultiPoly num, MultiPoly den);

    const ParamSetPtr& params() const { return params_; }
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_polynomial() const { return den_.is_constant(); }
    BaseValue constant_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar inverse() const;
    Scalar pow(std::int64_t e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Re-binds the scalar to a wider parameter set; every parameter name must
    // survive and the field must embed.
    Scalar lifted_to(ParamSetPtr target) const;

    // Substitutes parameters. Every name either appears in `assign` (with a
    // value over `target`, or liftable to it) or must be a parameter of
    // `target`. Throws SpecializationSingularError when a denominator becomes
    // zero under the assignment.
    Scalar substituted(const std::map<std::string, Scalar>& assign,
                       ParamSetPtr target) const;

    std::string str() const;

private:
    ParamSetPtr params_;
    MultiPoly num_;
    MultiPoly den_;

    void canonicalize();
    static void unify(Scalar& a, Scalar& b);
};

} // namespace ncg

#endif
