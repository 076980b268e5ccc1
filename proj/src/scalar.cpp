#include "ncg/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ncg {

std::string field_name(BaseField f) {
    return f == BaseField::Q ? "Q" : "Qzeta7";
}

/***** BaseValue *****/

BaseValue BaseValue::rational(const Rational& r, BaseField f) {
    BaseValue v;
    v.field_ = f;
    v.v_ = Cyclo7(r);
    return v;
}

BaseValue BaseValue::cyclo(const Cyclo7& c) {
    BaseValue v;
    v.field_ = BaseField::QZeta7;
    v.v_ = c;
    return v;
}

Rational BaseValue::rational_value() const {
    if (!v_.is_rational())
        throw FieldMismatchError("value is not rational: " + v_.str());
    return v_.rational_part();
}

BaseValue BaseValue::widen_to(BaseField f) const {
    if (f == field_) return *this;
    if (f == BaseField::QZeta7) {
        BaseValue v = *this;
        v.field_ = BaseField::QZeta7;
        return v;
    }
    if (!is_rational_value())
        throw FieldMismatchError("cannot narrow " + v_.str() + " to " + field_name(f));
    return rational(v_.rational_part(), f);
}

namespace {
BaseField join_fields(BaseField a, BaseField b) {
    return (a == BaseField::QZeta7 || b == BaseField::QZeta7) ? BaseField::QZeta7
                                                              : BaseField::Q;
}
} // namespace

BaseValue BaseValue::operator-() const {
    BaseValue v = *this;
    v.v_ = -v.v_;
    return v;
}

BaseValue BaseValue::operator+(const BaseValue& o) const {
    BaseValue v;
    v.field_ = join_fields(field_, o.field_);
    v.v_ = v_ + o.v_;
    return v;
}

BaseValue BaseValue::operator-(const BaseValue& o) const {
    BaseValue v;
    v.field_ = join_fields(field_, o.field_);
    v.v_ = v_ - o.v_;
    return v;
}

BaseValue BaseValue::operator*(const BaseValue& o) const {
    BaseValue v;
    v.field_ = join_fields(field_, o.field_);
    v.v_ = v_ * o.v_;
    return v;
}

BaseValue BaseValue::operator/(const BaseValue& o) const {
    if (o.is_zero()) throw DivisionByZeroError("scalar division by zero");
    BaseValue v;
    v.field_ = join_fields(field_, o.field_);
    v.v_ = v_ * o.v_.inverse();
    return v;
}

BaseValue BaseValue::inverse() const {
    BaseValue v = *this;
    v.v_ = v.v_.inverse();
    return v;
}

BaseValue BaseValue::pow(std::int64_t e) const {
    BaseValue v = *this;
    v.v_ = v.v_.pow(e);
    return v;
}

bool BaseValue::operator==(const BaseValue& o) const { return v_ == o.v_; }

int BaseValue::cmp(const BaseValue& o) const { return v_.cmp(o.v_); }

std::string BaseValue::str() const { return v_.str(); }

/***** ParamSet *****/

int ParamSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {
bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}
} // namespace

ParamSetPtr make_param_set(BaseField field, std::vector<std::string> names) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!valid_identifier(n))
            throw InvalidInputError("invalid parameter name: '" + n + "'");
        if (field == BaseField::QZeta7 && n == "j")
            throw InvalidInputError("parameter name 'j' is reserved over Qzeta7");
        if (!seen.insert(n).second)
            throw InvalidInputError("duplicate parameter name: '" + n + "'");
    }
    auto ps = std::make_shared<ParamSet>();
    ps->field = field;
    ps->names = std::move(names);
    return ps;
}

ParamSetPtr trivial_param_set() {
    static ParamSetPtr t = make_param_set(BaseField::Q, {});
    return t;
}

bool same_param_set(const ParamSetPtr& a, const ParamSetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

/***** MultiPoly *****/

bool MonoCmp::operator()(const Mono& a, const Mono& b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t ea = i < a.size() ? a[i] : 0;
        std::uint32_t eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

MultiPoly MultiPoly::constant(ParamSetPtr ps, const BaseValue& v) {
    MultiPoly p(std::move(ps));
    p.add_term(Mono(p.params_->names.size(), 0), v);
    return p;
}

MultiPoly MultiPoly::variable(ParamSetPtr ps, int index) {
    MultiPoly p(std::move(ps));
    if (index < 0 || index >= static_cast<int>(p.params_->names.size()))
        throw InvalidInputError("parameter index out of range");
    Mono m(p.params_->names.size(), 0);
    m[static_cast<std::size_t>(index)] = 1;
    p.add_term(m, BaseValue::one(p.params_->field));
    return p;
}

void MultiPoly::add_term(const Mono& m, const BaseValue& v) {
    if (v.is_zero()) return;
    BaseValue w = v.widen_to(params_->field);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, w);
    } else {
        BaseValue s = it->second + w;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Mono& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

BaseValue MultiPoly::constant_value() const {
    if (terms_.empty()) return BaseValue::zero(params_->field);
    if (!is_constant())
        throw InvalidInputError("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

std::int64_t MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Mono& m = terms_.rbegin()->first;
    std::int64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(params_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(params_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Mono m(std::max(ma.size(), mb.size()), 0);
            for (std::size_t i = 0; i < m.size(); ++i) {
                std::uint32_t ea = i < ma.size() ? ma[i] : 0;
                std::uint32_t eb = i < mb.size() ? mb[i] : 0;
                m[i] = ea + eb;
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const BaseValue& v) const {
    MultiPoly r(params_);
    if (v.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * v);
    return r;
}

const Mono& MultiPoly::leading_mono() const {
    if (terms_.empty()) throw InvalidInputError("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const BaseValue& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw InvalidInputError("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

namespace {
bool mono_divides(const Mono& d, const Mono& m) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        std::uint32_t e = i < m.size() ? m[i] : 0;
        if (d[i] > e) return false;
    }
    return true;
}

Mono mono_quotient(const Mono& m, const Mono& d) {
    Mono q(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::uint32_t e = i < d.size() ? d[i] : 0;
        q[i] = m[i] - e;
    }
    return q;
}
} // namespace

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    MultiPoly rem = *this;
    MultiPoly q(params_);
    const Mono& dm = divisor.leading_mono();
    const BaseValue& dc = divisor.leading_coeff();
    while (!rem.is_zero()) {
        const Mono& lm = rem.leading_mono();
        if (!mono_divides(dm, lm)) return std::nullopt;
        Mono qm = mono_quotient(lm, dm);
        BaseValue qc = rem.leading_coeff() / dc;
        q.add_term(qm, qc);
        // rem -= (qc * x^qm) * divisor
        for (const auto& [m, c] : divisor.terms_) {
            Mono shifted(qm.size(), 0);
            for (std::size_t i = 0; i < shifted.size(); ++i) {
                std::uint32_t e = i < m.size() ? m[i] : 0;
                shifted[i] = qm[i] + e;
            }
            rem.add_term(shifted, -(qc * c));
        }
    }
    return q;
}

Mono MultiPoly::content_mono() const {
    Mono g(params_->names.size(), 0);
    bool first = true;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (first) {
            g = m;
            first = false;
        } else {
            for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], m[i]);
        }
    }
    return g;
}

MultiPoly MultiPoly::divided_by_mono(const Mono& m) const {
    MultiPoly r(params_);
    for (const auto& [t, c] : terms_) {
        if (!mono_divides(m, t))
            throw InvalidInputError("monomial does not divide every term");
        r.terms_.emplace(mono_quotient(t, m), c);
    }
    return r;
}

MultiPoly MultiPoly::widened_to(ParamSetPtr target) const {
    if (same_param_set(params_, target)) return *this;
    if (params_->field == BaseField::QZeta7 && target->field == BaseField::Q)
        throw FieldMismatchError("cannot move a Qzeta7 polynomial to Q");
    std::vector<int> where(params_->names.size());
    for (std::size_t i = 0; i < params_->names.size(); ++i) {
        int idx = target->index_of(params_->names[i]);
        if (idx < 0)
            throw FieldMismatchError("parameter '" + params_->names[i] +
                                     "' is missing from the target set");
        where[i] = idx;
    }
    MultiPoly r(target);
    for (const auto& [m, c] : terms_) {
        Mono t(target->names.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) t[static_cast<std::size_t>(where[i])] = m[i];
        r.add_term(t, c);
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first.size() == jt->first.size()) {
            if (it->first != jt->first) return false;
        } else {
            MonoCmp lt;
            if (lt(it->first, jt->first) || lt(jt->first, it->first)) return false;
        }
        if (it->second != jt->second) return false;
    }
    return true;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Mono& m = it->first;
        const BaseValue& c = it->second;
        std::string vars;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += params_->names[i];
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        std::string piece;
        bool negative = false;
        if (c.is_rational_value()) {
            Rational r = c.rational_value();
            negative = r < 0;
            Rational mag = negative ? Rational(-r) : r;
            if (vars.empty())
                piece = to_string(mag);
            else if (mag == 1)
                piece = vars;
            else
                piece = to_string(mag) + "*" + vars;
        } else {
            piece = "(" + c.str() + ")";
            if (!vars.empty()) piece += "*" + vars;
        }
        if (first) {
            out += negative ? "-" : "";
            out += piece;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += piece;
        }
    }
    return out;
}

/***** Scalar *****/

Scalar::Scalar() : params_(trivial_param_set()), num_(params_), den_(params_) {
    den_ = MultiPoly::constant(params_, BaseValue::one(params_->field));
}

Scalar Scalar::integer(std::int64_t n) { return rational(Rational(n)); }

Scalar Scalar::rational(const Rational& r) {
    Scalar s;
    s.num_ = MultiPoly::constant(s.params_, BaseValue::rational(r));
    return s;
}

Scalar Scalar::base(ParamSetPtr ps, const BaseValue& v) {
    Scalar s = zero(ps);
    s.num_ = MultiPoly::constant(s.params_, v);
    return s;
}

Scalar Scalar::zero(ParamSetPtr ps) {
    Scalar s;
    s.params_ = std::move(ps);
    s.num_ = MultiPoly(s.params_);
    s.den_ = MultiPoly::constant(s.params_, BaseValue::one(s.params_->field));
    return s;
}

Scalar Scalar::one(ParamSetPtr ps) {
    Scalar s = zero(ps);
    s.num_ = s.den_;
    return s;
}

Scalar Scalar::param(ParamSetPtr ps, const std::string& name) {
    int idx = ps->index_of(name);
    if (idx < 0) throw InvalidInputError("unknown parameter: '" + name + "'");
    Scalar s = zero(ps);
    s.num_ = MultiPoly::variable(s.params_, idx);
    return s;
}

Scalar Scalar::from_poly(MultiPoly num) {
    Scalar s = zero(num.params());
    s.num_ = std::move(num);
    s.canonicalize();
    return s;
}

Scalar Scalar::fraction(MultiPoly num, MultiPoly den) {
    if (den.is_zero()) throw DivisionByZeroError("fraction with zero denominator");
    if (!same_param_set(num.params(), den.params()))
        throw FieldMismatchError("fraction parts over different parameter sets");
    Scalar s = zero(num.params());
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.canonicalize();
    return s;
}

bool Scalar::is_one() const { return num_ == den_; }

bool Scalar::is_constant() const { return num_.is_constant() && den_.is_constant(); }

BaseValue Scalar::constant_value() const {
    return num_.constant_value() / den_.constant_value();
}

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(params_, BaseValue::one(params_->field));
        return;
    }
    Mono cn = num_.content_mono();
    Mono cd = den_.content_mono();
    Mono g(cn.size(), 0);
    bool nontrivial = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        g[i] = std::min(cn[i], i < cd.size() ? cd[i] : 0);
        nontrivial = nontrivial || g[i] != 0;
    }
    if (nontrivial) {
        num_ = num_.divided_by_mono(g);
        den_ = den_.divided_by_mono(g);
    }
    if (den_.is_constant()) {
        num_ = num_.scaled(den_.constant_value().inverse());
        den_ = MultiPoly::constant(params_, BaseValue::one(params_->field));
        return;
    }
    if (auto q = num_.try_divide(den_)) {
        num_ = std::move(*q);
        den_ = MultiPoly::constant(params_, BaseValue::one(params_->field));
        return;
    }
    if (!num_.is_constant()) {
        if (auto q = den_.try_divide(num_)) {
            num_ = MultiPoly::constant(params_, BaseValue::one(params_->field));
            den_ = std::move(*q);
        }
    }
    BaseValue lc = den_.leading_coeff();
    if (!lc.is_one()) {
        BaseValue inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

void Scalar::unify(Scalar& a, Scalar& b) {
    if (same_param_set(a.params_, b.params_)) {
        if (a.params_ != b.params_) b = b.lifted_to(a.params_);
        return;
    }
    auto embeddable = [](const Scalar& s, const Scalar& t) {
        return s.params_->names.empty() &&
               (s.params_->field == BaseField::Q ||
                s.params_->field == t.params_->field);
    };
    if (embeddable(a, b)) {
        a = a.lifted_to(b.params_);
        return;
    }
    if (embeddable(b, a)) {
        b = b.lifted_to(a.params_);
        return;
    }
    throw FieldMismatchError("scalars over incompatible parameter sets: " +
                             field_name(a.params_->field) + "[" +
                             std::to_string(a.params_->names.size()) +
                             " params] vs " + field_name(b.params_->field) + "[" +
                             std::to_string(b.params_->names.size()) + " params]");
}

Scalar Scalar::lifted_to(ParamSetPtr target) const {
    Scalar s = zero(target);
    s.num_ = num_.widened_to(target);
    s.den_ = den_.widened_to(target);
    s.canonicalize();
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar a = *this, b = o;
    unify(a, b);
    Scalar r = zero(a.params_);
    if (a.den_ == b.den_) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
    } else {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
    }
    r.canonicalize();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar a = *this, b = o;
    unify(a, b);
    Scalar r = zero(a.params_);
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of the zero scalar");
    Scalar r = zero(params_);
    r.num_ = den_;
    r.den_ = num_;
    r.canonicalize();
    return r;
}

Scalar Scalar::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = one(params_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    Scalar a = *this, b = o;
    unify(a, b);
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

Scalar Scalar::substituted(const std::map<std::string, Scalar>& assign,
                           ParamSetPtr target) const {
    if (params_->field == BaseField::QZeta7 && target->field == BaseField::Q)
        throw FieldMismatchError("cannot specialize a Qzeta7 scalar into Q");
    std::vector<Scalar> values;
    values.reserve(params_->names.size());
    for (const auto& name : params_->names) {
        auto it = assign.find(name);
        if (it != assign.end()) {
            values.push_back(same_param_set(it->second.params(), target)
                                 ? it->second
                                 : it->second.lifted_to(target));
        } else if (target->index_of(name) >= 0) {
            values.push_back(Scalar::param(target, name));
        } else {
            throw InvalidInputError("parameter '" + name +
                                    "' has no assignment and no target slot");
        }
    }
    auto eval = [&](const MultiPoly& p) {
        Scalar acc = Scalar::zero(target);
        for (const auto& [m, c] : p.terms()) {
            Scalar t = Scalar::base(target, c.widen_to(target->field));
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] != 0) t = t * values[i].pow(m[i]);
            acc = acc + t;
        }
        return acc;
    };
    Scalar nv = eval(num_);
    Scalar dv = eval(den_);
    if (dv.is_zero())
        throw SpecializationSingularError(
            "denominator vanishes under the assignment: " + den_.str());
    return nv / dv;
}

std::string Scalar::str() const {
    if (den_.is_constant()) return num_.str();
    std::string n = num_.terms().size() > 1 ? "(" + num_.str() + ")" : num_.str();
    return n + "/(" + den_.str() + ")";
}

} // namespace ncg
