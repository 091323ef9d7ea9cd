#pragma once

// Outward-rounded interval arithmetic on dyadic numbers, a rigorous log2
// enclosure, and MagnitudeBound: the log2-space representation of positive
// magnitudes.  Quantities like house products raised to D*d^N overflow any
// fixed-width format, so everything downstream of root enclosures lives in
// log2 space.

#include "recipcert/dyadic.hpp"

#include <optional>
#include <string>
#include <utility>

namespace recipcert {

// Closed interval [lo, hi]; all operations round outward.
struct DInterval {
    Dyadic lo, hi;

    DInterval() = default;
    DInterval(const Dyadic& l, const Dyadic& h) : lo(l), hi(h) {
        if (lo > hi) throw ComputationError("inverted interval");
    }
    static DInterval point(const Dyadic& v) { return DInterval(v, v); }
    static DInterval of_rational(const Rational& r, unsigned prec) {
        return DInterval(Dyadic::from_rational(r, prec, Round::Down),
                         Dyadic::from_rational(r, prec, Round::Up));
    }

    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    Dyadic width(unsigned prec = 64) const { return sub(hi, lo, prec, Round::Up); }
};

inline DInterval iadd(const DInterval& a, const DInterval& b, unsigned prec) {
    return DInterval(add(a.lo, b.lo, prec, Round::Down), add(a.hi, b.hi, prec, Round::Up));
}
inline DInterval isub(const DInterval& a, const DInterval& b, unsigned prec) {
    return DInterval(sub(a.lo, b.hi, prec, Round::Down), sub(a.hi, b.lo, prec, Round::Up));
}
inline DInterval ineg(const DInterval& a) { return DInterval(-a.hi, -a.lo); }

inline DInterval imul(const DInterval& a, const DInterval& b, unsigned prec) {
    const Dyadic* as[2] = {&a.lo, &a.hi};
    const Dyadic* bs[2] = {&b.lo, &b.hi};
    Dyadic lo, hi;
    bool first = true;
    for (auto pa : as)
        for (auto pb : bs) {
            Dyadic p = mul_exact(*pa, *pb);
            if (first || p < lo) lo = p;
            if (first || p > hi) hi = p;
            first = false;
        }
    return DInterval(lo.rounded(prec, Round::Down), hi.rounded(prec, Round::Up));
}

// Multiply an interval by an exact scalar.
inline DInterval iscale(const DInterval& a, const BigInt& c, unsigned prec) {
    Dyadic cd{c, 0};
    Dyadic x = mul_exact(a.lo, cd), y = mul_exact(a.hi, cd);
    if (c.sign() < 0) std::swap(x, y);
    return DInterval(x.rounded(prec, Round::Down), y.rounded(prec, Round::Up));
}

inline DInterval iscale(const DInterval& a, const Rational& c, unsigned prec) {
    const BigInt num = boost::multiprecision::numerator(c);
    const BigInt den = boost::multiprecision::denominator(c);
    DInterval t = iscale(a, num, prec + 8);
    Dyadic dd{den, 0};
    return DInterval(div(t.lo, dd, prec, Round::Down), div(t.hi, dd, prec, Round::Up));
}

// Reciprocal of an interval that provably excludes zero.
inline DInterval irecip(const DInterval& a, unsigned prec) {
    if (a.contains_zero()) throw ComputationError("interval reciprocal across zero");
    Dyadic one{1, 0};
    return DInterval(div(one, a.hi, prec, Round::Down), div(one, a.lo, prec, Round::Up));
}

inline DInterval idiv(const DInterval& a, const DInterval& b, unsigned prec) {
    return imul(a, irecip(b, prec + 8), prec);
}

inline bool overlap(const DInterval& a, const DInterval& b) {
    return !(a.hi < b.lo) && !(b.hi < a.lo);
}

// ---------------------------------------------------------------------------
// log2 enclosure.
//
// For x = m * 2^E with m in [1,2), the fractional part of log2 is produced by
// the classical squaring recurrence: square m, shift down when it reaches
// [2,4), collect the shift bits.  Rounding every square toward the bound's
// direction keeps the invariant  y_k * 2^acc <= m^(2^k)  (lower run) resp.
// >= (upper run), so acc/2^k is a true one-sided bound.
// ---------------------------------------------------------------------------

inline Dyadic log2_directed(const Dyadic& x, unsigned frac_bits, Round dir) {
    if (x.sign() <= 0) throw InvalidInput("log2 of nonpositive value");
    if (x.is_unit_mantissa()) return Dyadic(BigInt(x.exponent()), 0);  // exact power of two
    const std::int64_t e = x.floor_log2_abs();
    // m = x / 2^e in [1, 2)
    Dyadic m(x.mantissa(), x.exponent() - e);
    const unsigned prec = frac_bits + 64;
    m = m.rounded(prec, dir);
    BigInt acc = 0;
    for (unsigned i = 0; i < frac_bits; ++i) {
        m = mul(m, m, prec, dir);
        std::int64_t s = m.floor_log2_abs();  // 0..2 (upward rounding may hit 4.0)
        acc = (acc << 1) + s;
        if (s > 0) m = mul_exact(m, Dyadic::pow2(-s));
    }
    if (dir == Round::Up) acc += 1;
    Dyadic frac(acc, -static_cast<std::int64_t>(frac_bits));
    return add_exact(Dyadic(BigInt(e), 0), frac);
}

inline DInterval log2_enclosure(const Dyadic& x, unsigned frac_bits) {
    return DInterval(log2_directed(x, frac_bits, Round::Down),
                     log2_directed(x, frac_bits, Round::Up));
}

inline DInterval log2_enclosure(const DInterval& x, unsigned frac_bits) {
    return DInterval(log2_directed(x.lo, frac_bits, Round::Down),
                     log2_directed(x.hi, frac_bits, Round::Up));
}

inline DInterval log2_of_rational(const Rational& r, unsigned frac_bits) {
    if (r <= 0) throw InvalidInput("log2 of nonpositive rational");
    DInterval x = DInterval::of_rational(r, frac_bits + 64);
    return log2_enclosure(x, frac_bits);
}

// Enclosure of 1/ln(2) = log2(e) from the atanh series
// ln 2 = 2 * sum_{j>=0} (1/3)^(2j+1) / (2j+1), with the tail bounded by
// (9/8) times the first omitted term.
inline DInterval log2_e_enclosure(unsigned frac_bits) {
    Rational sum = 0;
    Rational pow(1, 3);  // (1/3)^(2j+1)
    const Rational ninth(1, 9);
    unsigned terms = frac_bits / 3 + 8;
    for (unsigned j = 0; j < terms; ++j) {
        sum += pow / Rational(2 * j + 1);
        pow *= ninth;
    }
    Rational tail = pow / Rational(2 * terms + 1) * Rational(9, 8);
    Rational ln2_lo = 2 * sum;
    Rational ln2_hi = 2 * (sum + tail);
    unsigned prec = frac_bits + 32;
    DInterval ln2(Dyadic::from_rational(ln2_lo, prec, Round::Down),
                  Dyadic::from_rational(ln2_hi, prec, Round::Up));
    return irecip(ln2, prec);
}

// ---------------------------------------------------------------------------
// MagnitudeBound: enclosure of a nonnegative real, held as log2 bounds.
// exact_zero marks the value 0; lo_is_zero marks a lower bound of 0 (the
// log2 lower bound is then meaningless and ignored).
// ---------------------------------------------------------------------------

struct MagnitudeBound {
    bool exact_zero = false;
    bool lo_is_zero = false;
    Dyadic log2_lo, log2_hi;

    static MagnitudeBound zero() {
        MagnitudeBound b;
        b.exact_zero = true;
        b.lo_is_zero = true;
        return b;
    }
    static MagnitudeBound one() { return from_log2(DInterval::point(Dyadic(0))); }
    static MagnitudeBound from_log2(const DInterval& l) {
        MagnitudeBound b;
        b.log2_lo = l.lo;
        b.log2_hi = l.hi;
        return b;
    }
    static MagnitudeBound from_rational(const Rational& r, unsigned frac_bits) {
        if (r < 0) throw InvalidInput("magnitude from negative rational");
        if (r == 0) return zero();
        return from_log2(log2_of_rational(r, frac_bits));
    }
    static MagnitudeBound pow2_exact(const BigInt& e) {
        return from_log2(DInterval::point(Dyadic(e, 0)));
    }

    DInterval log2() const {
        if (exact_zero || lo_is_zero)
            throw ComputationError("log2 bounds requested for magnitude touching zero");
        return DInterval(log2_lo, log2_hi);
    }
    Dyadic log2_width(unsigned prec = 64) const {
        return sub(log2_hi, log2_lo, prec, Round::Up);
    }
};

inline MagnitudeBound mag_mul(const MagnitudeBound& a, const MagnitudeBound& b,
                              unsigned prec) {
    if (a.exact_zero || b.exact_zero) return MagnitudeBound::zero();
    MagnitudeBound r;
    r.lo_is_zero = a.lo_is_zero || b.lo_is_zero;
    if (!r.lo_is_zero) r.log2_lo = add(a.log2_lo, b.log2_lo, prec, Round::Down);
    r.log2_hi = add(a.log2_hi, b.log2_hi, prec, Round::Up);
    return r;
}

inline MagnitudeBound mag_div(const MagnitudeBound& a, const MagnitudeBound& b,
                              unsigned prec) {
    if (b.exact_zero) throw InvalidInput("magnitude division by zero");
    if (a.exact_zero) return MagnitudeBound::zero();
    if (b.lo_is_zero) throw ComputationError("magnitude division by bound touching zero");
    MagnitudeBound r;
    r.lo_is_zero = a.lo_is_zero;
    if (!r.lo_is_zero) r.log2_lo = sub(a.log2_lo, b.log2_hi, prec, Round::Down);
    r.log2_hi = sub(a.log2_hi, b.log2_lo, prec, Round::Up);
    return r;
}

// a^c for exact rational c > 0 (log2 scaling).
inline MagnitudeBound mag_pow(const MagnitudeBound& a, const Rational& c, unsigned prec) {
    if (c <= 0) throw InvalidInput("mag_pow needs a positive exponent");
    if (a.exact_zero) return MagnitudeBound::zero();
    MagnitudeBound r;
    r.lo_is_zero = a.lo_is_zero;
    r.log2_hi = iscale(DInterval::point(a.log2_hi), c, prec).hi;
    if (!r.lo_is_zero)
        r.log2_lo = iscale(DInterval::point(a.log2_lo), c, prec).lo;
    return r;
}

// max(1, a): the interval clamp used inside Mahler measure products.  When
// the modulus interval straddles 1 the lower bound clamps to 1, which keeps
// outward rounding sound without deciding whether a root lies on the unit
// circle.
inline MagnitudeBound mag_max1(const MagnitudeBound& a) {
    if (a.exact_zero) return MagnitudeBound::one();
    MagnitudeBound r;
    r.log2_lo = (a.lo_is_zero || a.log2_lo.sign() < 0) ? Dyadic(0) : a.log2_lo;
    r.log2_hi = a.log2_hi.sign() < 0 ? Dyadic(0) : a.log2_hi;
    return r;
}

// Interval-strict comparisons: true only when provable from the bounds.
inline bool mag_provably_less(const MagnitudeBound& a, const MagnitudeBound& b) {
    if (a.exact_zero) return !b.exact_zero && !b.lo_is_zero;
    if (b.exact_zero || b.lo_is_zero) return false;
    return a.log2_hi < b.log2_lo;
}
inline bool mag_provably_leq(const MagnitudeBound& a, const MagnitudeBound& b) {
    if (a.exact_zero) return true;
    if (b.exact_zero || b.lo_is_zero) return false;
    return a.log2_hi <= b.log2_lo;
}

inline bool mag_overlap(const MagnitudeBound& a, const MagnitudeBound& b) {
    if (a.exact_zero && b.exact_zero) return true;
    if (a.exact_zero) return b.exact_zero || b.lo_is_zero;
    if (b.exact_zero) return a.lo_is_zero;
    bool a_below_b = !b.lo_is_zero && a.log2_hi < b.log2_lo;
    bool b_below_a = !a.lo_is_zero && b.log2_hi < a.log2_lo;
    return !a_below_b && !b_below_a;
}

// Upper bound on the linear-space width 2^hi - 2^lo, valid when the log2
// width w is at most 1: then 2^hi - 2^lo <= 2^hi (2^w - 1) <= 2^ceil(hi) * w.
inline Dyadic mag_linear_width_upper(const MagnitudeBound& a, unsigned prec = 96) {
    if (a.exact_zero) return Dyadic(0);
    if (a.lo_is_zero) throw ComputationError("linear width of bound touching zero");
    Dyadic w = a.log2_width(prec);
    if (w > Dyadic(1)) throw ComputationError("linear width bound requires log2 width <= 1");
    BigInt c = rational_ceil(a.log2_hi.to_rational());
    if (abs_val(c) > (BigInt(1) << 32))
        throw ComputationError("magnitude too extreme for linear width bound");
    Dyadic scale = Dyadic::pow2(c.convert_to<std::int64_t>());
    return mul(scale, w, prec, Round::Up);
}

}  // namespace recipcert
