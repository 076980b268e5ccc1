#ifndef NCG_RATIONAL_HPP
#define NCG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ncg {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational. The backing type keeps values normalized:
// gcd(num, den) = 1 and den >= 1 at all times.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline std::string to_string(const BigInt& n) { return n.str(); }

} // namespace ncg

#endif
