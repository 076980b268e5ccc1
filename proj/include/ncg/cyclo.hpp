#ifndef NCG_CYCLO_HPP
#define NCG_CYCLO_HPP

#include "ncg/rational.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace ncg {

// Element of the degree-6 extension of the rationals generated by a primitive
// 7th root of unity j. Stored on the power basis 1, j, ..., j^5 with the
// minimal polynomial 1 + j + j^2 + j^3 + j^4 + j^5 + j^6 = 0 used to reduce.
class Cyclo7 {
public:
    Cyclo7() = default;
    explicit Cyclo7(const Rational& r) { c_[0] = r; }

    static Cyclo7 zero() { return Cyclo7(); }
    static Cyclo7 one() { return Cyclo7(Rational(1)); }
    // j^k for any integer k (k is taken mod 7).
    static Cyclo7 root_power(std::int64_t k);

    bool is_zero() const;
    bool is_rational() const;
    // Valid only when is_rational() holds.
    const Rational& rational_part() const { return c_[0]; }

    const Rational& coeff(int i) const { return c_[i]; }

    Cyclo7 operator-() const;
    Cyclo7 operator+(const Cyclo7& o) const;
    Cyclo7 operator-(const Cyclo7& o) const;
    Cyclo7 operator*(const Cyclo7& o) const;

    // Multiplicative inverse via the extended Euclidean algorithm against the
    // minimal polynomial. Throws DivisionByZeroError on zero.
    Cyclo7 inverse() const;

    Cyclo7 pow(std::int64_t e) const;

    bool operator==(const Cyclo7& o) const { return c_ == o.c_; }
    bool operator!=(const Cyclo7& o) const { return !(*this == o); }

    // Total order used only for canonical sorting, no algebraic meaning.
    int cmp(const Cyclo7& o) const;

    // Canonical display, e.g. "j^2 + 2*j - 1/2". The root prints as "j".
    std::string str() const;

private:
    std::array<Rational, 6> c_{};
};

} // namespace ncg

#endif
