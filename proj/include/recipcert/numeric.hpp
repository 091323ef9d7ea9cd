#pragma once

// Arbitrary-precision integer/rational aliases and small number-theory
// helpers shared by the whole library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace recipcert {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ComputationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Raised when the deterministic precision ladder is exhausted before a
// decision could be certified.  Never a silent guess.
struct PrecisionExhausted : ComputationError {
    using ComputationError::ComputationError;
};
struct DegreeCapExceeded : ComputationError {
    using ComputationError::ComputationError;
};
struct InvalidInput : ComputationError {
    using ComputationError::ComputationError;
};

// Caps for the deterministic precision ladder and exact-degree work.
struct Limits {
    unsigned degree_cap = 24;          // factorization / minimal polynomial cap
    unsigned start_precision = 64;     // bits; doubles until certification succeeds
    unsigned max_precision = 1u << 14; // ladder ceiling
};

inline int sign_of(const BigInt& x) { return x.sign(); }

inline BigInt abs_val(const BigInt& x) { return boost::multiprecision::abs(x); }

// Number of bits in |x|; bit_length(0) == 0.
inline std::int64_t bit_length(const BigInt& x) {
    if (x.is_zero()) return 0;
    return static_cast<std::int64_t>(boost::multiprecision::msb(abs_val(x))) + 1;
}

inline BigInt pow_bigint(const BigInt& base, std::uint64_t e) {
    BigInt acc = 1, b = base;
    while (e) {
        if (e & 1) acc *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return acc;
}

// floor(x / 2^s) and ceil(x / 2^s) for signed x, s >= 0.
inline BigInt floor_div_pow2(const BigInt& x, std::int64_t s) {
    if (s <= 0) return x << static_cast<unsigned>(-s);
    BigInt q = abs_val(x) >> static_cast<unsigned>(s);
    if (x.sign() >= 0) return q;
    BigInt r = abs_val(x) - (q << static_cast<unsigned>(s));
    if (!r.is_zero()) ++q;
    return -q;
}

inline BigInt ceil_div_pow2(const BigInt& x, std::int64_t s) {
    return -floor_div_pow2(-x, s);
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0))) --q;
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    return -floor_div(-a, b);
}

// Floor square root of a nonnegative integer.
inline BigInt isqrt(const BigInt& x) {
    if (x.sign() < 0) throw InvalidInput("isqrt of negative integer");
    return boost::multiprecision::sqrt(x);
}

inline bool is_prime_small(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::int64_t next_prime_after(std::int64_t n) {
    std::int64_t c = n + 1;
    while (!is_prime_small(c)) ++c;
    return c;
}

// ---------------------------------------------------------------------------
// Parsing helpers.  Accepted magnitude syntaxes: "123", "-4", "3/7", "1.25",
// "2.5e-3", "2^64".  Exact; no floating point involved.
// ---------------------------------------------------------------------------

inline BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw InvalidInput("empty integer literal");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw InvalidInput("bare sign in integer literal");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw InvalidInput("invalid integer literal: " + s);
    return BigInt(s);
}

inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InvalidInput("empty numeric literal");
    const auto caret = text.find('^');
    if (caret != std::string::npos) {
        BigInt base = parse_bigint(text.substr(0, caret));
        BigInt e = parse_bigint(text.substr(caret + 1));
        if (e.sign() < 0 || e > 1000000)
            throw InvalidInput("exponent out of range in: " + text);
        return Rational(pow_bigint(base, e.convert_to<std::uint64_t>()));
    }
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_bigint(text.substr(0, slash));
        BigInt den = parse_bigint(text.substr(slash + 1));
        if (den.is_zero()) throw InvalidInput("zero denominator in: " + text);
        return Rational(num, den);
    }
    // Decimal with optional fraction and exponent.
    std::string s = text;
    std::int64_t exp10 = 0;
    const auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = parse_bigint(s.substr(epos + 1)).convert_to<std::int64_t>();
        s = s.substr(0, epos);
    }
    const auto dot = s.find('.');
    std::string digits = s;
    if (dot != std::string::npos) {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        exp10 -= static_cast<std::int64_t>(s.size() - dot - 1);
    }
    BigInt mant = parse_bigint(digits);
    Rational r(mant);
    if (exp10 > 0) r *= Rational(pow_bigint(10, static_cast<std::uint64_t>(exp10)));
    if (exp10 < 0) r /= Rational(pow_bigint(10, static_cast<std::uint64_t>(-exp10)));
    return r;
}

inline std::string rational_to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline BigInt rational_floor(const Rational& r) {
    return floor_div(boost::multiprecision::numerator(r),
                     boost::multiprecision::denominator(r));
}

inline BigInt rational_ceil(const Rational& r) {
    return ceil_div(boost::multiprecision::numerator(r),
                    boost::multiprecision::denominator(r));
}

}  // namespace recipcert
