#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace salemlab {

// Counting results and expectations stay exact; floating point enters only
// through bound right-hand sides (fractional powers).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    return Rational(num, den);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

// Canonical "num/den" form used by the JSON schema; denominator always shown.
std::string rational_to_string(const Rational& r);

// Parse "num/den" or a plain integer string.
Rational rational_from_string(const std::string& text);

// Exact value of a decimal or fraction literal: "0.3" -> 3/10, "1/2" -> 1/2.
Rational parse_exact_real(const std::string& text);

// Decimal rendering with 12 significant digits (CSV convention).
std::string format_sig12(double value);
std::string format_sig12(const Rational& r);

BigInt bigint_pow(const BigInt& base, std::uint64_t exponent);

// Sign of a^ea - b^eb without rounding.
int compare_pow(const BigInt& a, std::uint64_t ea, const BigInt& b, std::uint64_t eb);

// Largest n >= 0 with n^e <= bound (e >= 1).
std::uint64_t integer_root_floor(const BigInt& bound, std::uint64_t e);

}  // namespace salemlab
