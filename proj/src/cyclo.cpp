#include "ncg/cyclo.hpp"

#include "ncg/errors.hpp"

#include <vector>

namespace ncg {

namespace {

// Dense polynomial helpers over the rationals, used only for the inverse.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_sub_scaled(const Poly& a, const Poly& b, const Rational& s, std::size_t shift) {
    Poly r = a;
    if (r.size() < b.size() + shift) r.resize(b.size() + shift);
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= s * b[i];
    trim(r);
    return r;
}

// Division with remainder: a = q*b + r.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    q.assign(a.size(), Rational(0));
    r = a;
    trim(r);
    while (r.size() >= b.size() && !r.empty()) {
        Rational coef = r.back() / b.back();
        std::size_t shift = r.size() - b.size();
        q[shift] = coef;
        r = poly_sub_scaled(r, b, coef, shift);
    }
    trim(q);
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

} // namespace

Cyclo7 Cyclo7::root_power(std::int64_t k) {
    std::int64_t m = k % 7;
    if (m < 0) m += 7;
    Cyclo7 r;
    if (m < 6) {
        r.c_[static_cast<std::size_t>(m)] = 1;
    } else {
        // j^6 = -(1 + j + ... + j^5)
        for (auto& x : r.c_) x = -1;
    }
    return r;
}

bool Cyclo7::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo7::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Cyclo7 Cyclo7::operator-() const {
    Cyclo7 r;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

Cyclo7 Cyclo7::operator+(const Cyclo7& o) const {
    Cyclo7 r;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

Cyclo7 Cyclo7::operator-(const Cyclo7& o) const {
    Cyclo7 r;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

Cyclo7 Cyclo7::operator*(const Cyclo7& o) const {
    std::array<Rational, 11> prod{};
    for (std::size_t i = 0; i < 6; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t k = 0; k < 6; ++k) {
            if (o.c_[k] == 0) continue;
            prod[i + k] += c_[i] * o.c_[k];
        }
    }
    // Reduce degrees 10..6 with j^m = -j^(m-6)*(1 + j + ... + j^5).
    for (std::size_t d = 10; d >= 6; --d) {
        if (prod[d] == 0) continue;
        for (std::size_t i = 0; i < 6; ++i) prod[d - 6 + i] -= prod[d];
        prod[d] = 0;
    }
    Cyclo7 r;
    for (std::size_t i = 0; i < 6; ++i) r.c_[i] = prod[i];
    return r;
}

Cyclo7 Cyclo7::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero in the cyclotomic field");
    if (is_rational()) {
        Cyclo7 r;
        r.c_[0] = Rational(1) / c_[0];
        return r;
    }
    // Extended Euclid: u*a + v*phi = gcd, with phi = 1 + x + ... + x^6.
    Poly a(c_.begin(), c_.end());
    trim(a);
    Poly phi(7, Rational(1));
    Poly r0 = phi, r1 = a;
    Poly u0 = {}, u1 = {Rational(1)}; // coefficients of a in the combination
    while (!r1.empty()) {
        Poly q, rem;
        poly_divmod(r0, r1, q, rem);
        Poly u2 = poly_sub(u0, poly_mul(q, u1));
        r0 = r1; r1 = rem;
        u0 = u1; u1 = u2;
    }
    // r0 is a nonzero constant gcd (phi is irreducible over the rationals).
    Rational g = r0[0];
    Cyclo7 inv;
    for (std::size_t i = 0; i < u0.size() && i < 6; ++i) inv.c_[i] = u0[i] / g;
    return inv;
}

Cyclo7 Cyclo7::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo7 base = *this, acc = one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int Cyclo7::cmp(const Cyclo7& o) const {
    for (std::size_t i = 6; i-- > 0;) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i] ? -1 : 1;
    }
    return 0;
}

std::string Cyclo7::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 6; i-- > 0;) {
        const Rational& x = c_[i];
        if (x == 0) continue;
        Rational mag = x < 0 ? Rational(-x) : x;
        if (first) {
            out += (x < 0) ? "-" : "";
            first = false;
        } else {
            out += (x < 0) ? " - " : " + ";
        }
        bool unit = (mag == 1) && i > 0;
        if (!unit) out += to_string(mag);
        if (i > 0) {
            if (!unit) out += "*";
            out += "j";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace ncg
