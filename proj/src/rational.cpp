#include "salemlab/rational.hpp"

#include "salemlab/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace salemlab {

std::string rational_to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) raise(ErrorCode::ParseError, "zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::exception&) {
        raise(ErrorCode::ParseError, "bad rational literal '" + text + "'");
    }
}

Rational parse_exact_real(const std::string& text) {
    if (text.empty()) raise(ErrorCode::ParseError, "empty numeric literal");
    if (text.find('/') != std::string::npos) return rational_from_string(text);

    bool negative = false;
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    BigInt num = 0;
    BigInt den = 1;
    bool seen_digit = false;
    bool seen_dot = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_dot) raise(ErrorCode::ParseError, "bad numeric literal '" + text + "'");
            seen_dot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            raise(ErrorCode::ParseError, "bad numeric literal '" + text + "'");
        num = num * 10 + (c - '0');
        if (seen_dot) den *= 10;
        seen_digit = true;
    }
    if (!seen_digit) raise(ErrorCode::ParseError, "bad numeric literal '" + text + "'");
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

std::string format_sig12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string format_sig12(const Rational& r) { return format_sig12(to_double(r)); }

BigInt bigint_pow(const BigInt& base, std::uint64_t exponent) {
    BigInt result = 1;
    BigInt b = base;
    std::uint64_t e = exponent;
    while (e != 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

int compare_pow(const BigInt& a, std::uint64_t ea, const BigInt& b, std::uint64_t eb) {
    BigInt lhs = bigint_pow(a, ea);
    BigInt rhs = bigint_pow(b, eb);
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

std::uint64_t integer_root_floor(const BigInt& bound, std::uint64_t e) {
    if (bound < 1) return 0;
    if (e == 0) raise(ErrorCode::DivisionByZero, "zero exponent in integer root");
    double guess = std::pow(to_double(bound), 1.0 / static_cast<double>(e));
    std::uint64_t n = guess > 1.0 ? static_cast<std::uint64_t>(guess) : 1;
    while (bigint_pow(BigInt(n + 1), e) <= bound) ++n;
    while (n > 0 && bigint_pow(BigInt(n), e) > bound) --n;
    return n;
}

}  // namespace salemlab

namespace salemlab {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPrime: return "NonPrime";
        case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::GridTooLarge: return "GridTooLarge";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::UnsupportedRegime: return "UnsupportedRegime";
        case ErrorCode::ExhaustedAttempts: return "ExhaustedAttempts";
        case ErrorCode::OddProduct: return "OddProduct";
        case ErrorCode::ZeroNormal: return "ZeroNormal";
        case ErrorCode::ZeroRadius: return "ZeroRadius";
        case ErrorCode::MissingWeight: return "MissingWeight";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ReductionMismatch: return "ReductionMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::InternalCheckFailed: return "InternalCheckFailed";
    }
    return "UnknownError";
}

}  // namespace salemlab
