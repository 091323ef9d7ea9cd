#pragma once

// Dyadic floating point: value = mantissa * 2^exponent with an
// arbitrary-precision mantissa.  All magnitude arithmetic in the library
// runs on this type with explicit rounding directions, so every enclosure
// stays sound by construction.

#include "recipcert/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace recipcert {

enum class Round { Down, Up };  // toward -infinity / toward +infinity

inline Round flip(Round r) { return r == Round::Down ? Round::Up : Round::Down; }

class Dyadic {
  public:
    Dyadic() = default;
    Dyadic(const BigInt& mantissa, std::int64_t exponent = 0)
        : man_(mantissa), exp_(exponent) {
        normalize();
    }
    Dyadic(long v) : man_(v), exp_(0) { normalize(); }
    Dyadic(int v) : man_(v), exp_(0) { normalize(); }

    static Dyadic pow2(std::int64_t e) { return Dyadic(BigInt(1), e); }

    const BigInt& mantissa() const { return man_; }
    std::int64_t exponent() const { return exp_; }
    bool is_zero() const { return man_.is_zero(); }
    int sign() const { return man_.sign(); }
    // True when the value is an exact power of two times +-1.
    bool is_unit_mantissa() const { return abs_val(man_) == 1; }

    Dyadic operator-() const {
        Dyadic r = *this;
        r.man_ = -r.man_;
        return r;
    }

    friend Dyadic add_exact(const Dyadic& a, const Dyadic& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        std::int64_t e = std::min(a.exp_, b.exp_);
        check_shift(a.exp_ - e);
        check_shift(b.exp_ - e);
        BigInt m = (a.man_ << static_cast<unsigned>(a.exp_ - e)) +
                   (b.man_ << static_cast<unsigned>(b.exp_ - e));
        return Dyadic(m, e);
    }
    friend Dyadic sub_exact(const Dyadic& a, const Dyadic& b) { return add_exact(a, -b); }
    friend Dyadic mul_exact(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.man_ * b.man_, a.exp_ + b.exp_);
    }

    // Drop the mantissa to at most `prec` bits, rounding in the given
    // direction.  prec >= 1.
    Dyadic rounded(unsigned prec, Round dir) const {
        std::int64_t bits = bit_length(man_);
        if (bits <= static_cast<std::int64_t>(prec)) return *this;
        std::int64_t s = bits - static_cast<std::int64_t>(prec);
        BigInt m = dir == Round::Down ? floor_div_pow2(man_, s) : ceil_div_pow2(man_, s);
        return Dyadic(m, exp_ + s);
    }
    // Magnitude-truncating round (toward zero); for heuristic phases only.
    Dyadic truncated(unsigned prec) const {
        std::int64_t bits = bit_length(man_);
        if (bits <= static_cast<std::int64_t>(prec)) return *this;
        std::int64_t s = bits - static_cast<std::int64_t>(prec);
        BigInt m = abs_val(man_) >> static_cast<unsigned>(s);
        if (man_.sign() < 0) m = -m;
        return Dyadic(m, exp_ + s);
    }

    friend Dyadic add(const Dyadic& a, const Dyadic& b, unsigned prec, Round dir) {
        return add_exact(a, b).rounded(prec, dir);
    }
    friend Dyadic sub(const Dyadic& a, const Dyadic& b, unsigned prec, Round dir) {
        return add_exact(a, -b).rounded(prec, dir);
    }
    friend Dyadic mul(const Dyadic& a, const Dyadic& b, unsigned prec, Round dir) {
        return mul_exact(a, b).rounded(prec, dir);
    }

    friend Dyadic div(const Dyadic& a, const Dyadic& b, unsigned prec, Round dir) {
        if (b.is_zero()) throw InvalidInput("dyadic division by zero");
        if (a.is_zero()) return Dyadic();
        std::int64_t s = static_cast<std::int64_t>(prec) + 2 + bit_length(b.man_) -
                         bit_length(a.man_);
        if (s < 0) s = 0;
        check_shift(s);
        BigInt num = a.man_ << static_cast<unsigned>(s);
        bool down = (dir == Round::Down);
        BigInt q = down ? floor_div(num, b.man_) : ceil_div(num, b.man_);
        return Dyadic(q, a.exp_ - b.exp_ - s).rounded(prec, dir);
    }

    // Square root of a nonnegative dyadic with directed rounding.
    friend Dyadic sqrt(const Dyadic& a, unsigned prec, Round dir) {
        if (a.sign() < 0) throw InvalidInput("dyadic sqrt of negative value");
        if (a.is_zero()) return Dyadic();
        std::int64_t s = 2 * static_cast<std::int64_t>(prec) + 2 - bit_length(a.man_);
        if (s < 0) s = 0;
        if ((s + a.exp_) % 2 != 0) ++s;
        check_shift(s);
        BigInt m = a.man_ << static_cast<unsigned>(s);
        BigInt r = isqrt(m);
        if (dir == Round::Up && r * r < m) ++r;
        return Dyadic(r, (a.exp_ - s) / 2).rounded(prec, dir);
    }

    friend int cmp(const Dyadic& a, const Dyadic& b) {
        if (a.sign() != b.sign()) return a.sign() < b.sign() ? -1 : 1;
        Dyadic d = sub_exact(a, b);
        return d.sign();
    }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) != 0; }

    // floor(log2(|x|)) for nonzero x, exact.
    std::int64_t floor_log2_abs() const {
        if (is_zero()) throw InvalidInput("floor_log2 of zero");
        return exp_ + bit_length(man_) - 1;
    }

    Rational to_rational() const {
        Rational r(man_);
        if (exp_ >= 0) {
            check_shift(exp_);
            return r * Rational(BigInt(1) << static_cast<unsigned>(exp_));
        }
        check_shift(-exp_);
        return r / Rational(BigInt(1) << static_cast<unsigned>(-exp_));
    }

    static Dyadic from_rational(const Rational& r, unsigned prec, Round dir) {
        const BigInt num = boost::multiprecision::numerator(r);
        const BigInt den = boost::multiprecision::denominator(r);
        if (num.is_zero()) return Dyadic();
        std::int64_t s = static_cast<std::int64_t>(prec) + 2 + bit_length(den) -
                         bit_length(num);
        if (s < 0) s = 0;
        check_shift(s);
        BigInt scaled = num << static_cast<unsigned>(s);
        BigInt q = dir == Round::Down ? floor_div(scaled, den) : ceil_div(scaled, den);
        return Dyadic(q, -s).rounded(prec, dir);
    }

    double to_double() const {
        // Display use only.
        std::int64_t bits = bit_length(man_);
        if (bits == 0) return 0.0;
        std::int64_t drop = bits > 62 ? bits - 62 : 0;
        BigInt m = floor_div_pow2(man_, drop);
        double d = static_cast<double>(m.convert_to<long long>());
        return std::ldexp(d, static_cast<int>(exp_ + drop));
    }

    // Decimal rendering with directed rounding so printed bounds remain
    // bounds.  `digits` = significant digits.
    std::string to_decimal(unsigned digits, Round dir) const;

  private:
    BigInt man_ = 0;
    std::int64_t exp_ = 0;

    static void check_shift(std::int64_t s) {
        if (s < 0 || s > (std::int64_t(1) << 31))
            throw PrecisionExhausted("dyadic exponent range exceeded");
    }

    void normalize() {
        if (man_.is_zero()) {
            exp_ = 0;
            return;
        }
        std::uint64_t tz = boost::multiprecision::lsb(abs_val(man_));
        if (tz > 0) {
            man_ >>= static_cast<unsigned>(tz);
            exp_ += static_cast<std::int64_t>(tz);
        }
    }
};

inline std::string Dyadic::to_decimal(unsigned digits, Round dir) const {
    if (is_zero()) return "0";
    if (digits == 0) digits = 1;
    // Integer-valued and reasonably small: print exactly.
    if (exp_ >= 0 && exp_ + bit_length(man_) <= 256) {
        BigInt v = man_ << static_cast<unsigned>(exp_);
        if (v.str().size() <= digits + 6) return v.str();
    }
    const bool neg = sign() < 0;
    // Rounding direction for the magnitude.
    const bool mag_up = (dir == Round::Up) != neg;
    // decimal exponent estimate: log10(|x|) ~ floor_log2 * log10(2)
    const std::int64_t fl2 = floor_log2_abs();
    std::int64_t e10 = static_cast<std::int64_t>(
        static_cast<double>(fl2) * 0.30102999566398119);
    // We want |x| = D * 10^(e10 - digits + 1) with D having ~`digits` digits.
    auto scaled_digits = [&](std::int64_t e) {
        // D = |x| * 10^(digits - 1 - e), rounded per mag_up.
        std::int64_t k = static_cast<std::int64_t>(digits) - 1 - e;
        BigInt num = abs_val(man_);
        BigInt den = 1;
        if (k >= 0)
            num *= pow_bigint(10, static_cast<std::uint64_t>(k));
        else
            den *= pow_bigint(10, static_cast<std::uint64_t>(-k));
        if (exp_ >= 0)
            num <<= static_cast<unsigned>(exp_);
        else
            den <<= static_cast<unsigned>(-exp_);
        return mag_up ? ceil_div(num, den) : floor_div(num, den);
    };
    BigInt D = scaled_digits(e10);
    std::string ds = D.str();
    for (int tries = 0; ds.size() != digits && tries < 6; ++tries) {
        e10 += static_cast<std::int64_t>(ds.size()) - static_cast<std::int64_t>(digits);
        D = scaled_digits(e10);
        ds = D.str();
    }
    std::string out = neg ? "-" : "";
    out += ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    out += "e" + std::to_string(e10);
    return out;
}

}  // namespace recipcert
