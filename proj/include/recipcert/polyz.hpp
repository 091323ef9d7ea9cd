#pragma once

// Exact arithmetic on integer-coefficient polynomials: the substrate for
// minimal polynomials, resultants and factorization.

#include "recipcert/numeric.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace recipcert {

class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPolynomial(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }
    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(const BigInt& v) {
        return IntPolynomial(std::vector<BigInt>{v});
    }
    // x^d - a
    static IntPolynomial power_minus(const unsigned d, const BigInt& a) {
        std::vector<BigInt> c(d + 1);
        c[0] = -a;
        c[d] = 1;
        return IntPolynomial(std::move(c));
    }
    // x - a
    static IntPolynomial linear_root(const BigInt& a) {
        return IntPolynomial(std::vector<BigInt>{-a, BigInt(1)});
    }
    // den*x - num, the minimal polynomial of num/den (normalized on return)
    static IntPolynomial linear_root(const Rational& r) {
        return IntPolynomial(std::vector<BigInt>{
                                 -boost::multiprecision::numerator(r),
                                 boost::multiprecision::denominator(r)})
            .primitive_normalized();
    }

    bool is_zero() const { return c_.empty(); }
    // Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& leading() const {
        if (is_zero()) throw InvalidInput("leading coefficient of zero polynomial");
        return c_.back();
    }
    const BigInt& operator[](std::size_t i) const {
        static const BigInt kZero = 0;
        return i < c_.size() ? c_[i] : kZero;
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
        return !(a == b);
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
        return IntPolynomial(std::move(c));
    }
    IntPolynomial operator-() const {
        std::vector<BigInt> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return IntPolynomial();
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& a) {
        if (s.is_zero()) return IntPolynomial();
        std::vector<BigInt> c(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = s * a.c_[i];
        return IntPolynomial(std::move(c));
    }

    // Multiply by x^k.
    IntPolynomial shifted_up(unsigned k) const {
        if (is_zero()) return *this;
        std::vector<BigInt> c(c_.size() + k);
        std::copy(c_.begin(), c_.end(), c.begin() + k);
        return IntPolynomial(std::move(c));
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return IntPolynomial();
        std::vector<BigInt> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = BigInt(i) * c_[i];
        return IntPolynomial(std::move(c));
    }

    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rational(c_[i]);
        return acc;
    }

    // gcd of |coefficients|; positive, 0 for the zero polynomial.
    BigInt content_abs() const {
        BigInt g = 0;
        for (const auto& c : c_) {
            g = boost::multiprecision::gcd(g, abs_val(c));
            if (g == 1) break;
        }
        return g;
    }

    // p = c * q with q primitive and lc(q) > 0; the content carries the sign.
    std::pair<BigInt, IntPolynomial> content_primitive() const {
        if (is_zero()) throw InvalidInput("content of zero polynomial");
        BigInt c = content_abs();
        if (leading().sign() < 0) c = -c;
        std::vector<BigInt> q(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) q[i] = c_[i] / c;
        return {c, IntPolynomial(std::move(q))};
    }

    IntPolynomial primitive_normalized() const { return content_primitive().second; }

    bool is_primitive_normalized() const {
        return !is_zero() && leading().sign() > 0 && content_abs() == 1;
    }
    bool is_monic() const { return !is_zero() && leading() == 1; }

    std::string to_string() const;

  private:
    std::vector<BigInt> c_;  // index = power, highest index nonzero

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

inline std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = (*this)[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += c.sign() > 0 ? " + " : " - ";
        else if (c.sign() < 0) out += "-";
        BigInt a = abs_val(c);
        if (i == 0 || a != 1) out += a.str();
        if (i > 0) {
            if (a != 1) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// Quotient and remainder over the rationals, exact; divisor nonzero.
inline std::pair<std::vector<Rational>, std::vector<Rational>> divrem_rational(
    const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    std::vector<Rational> rem(static_cast<std::size_t>(a.degree() + 1));
    for (int i = 0; i <= a.degree(); ++i)
        rem[static_cast<std::size_t>(i)] = Rational(a[static_cast<std::size_t>(i)]);
    int db = b.degree();
    Rational blc(b.leading());
    std::vector<Rational> quot;
    if (a.degree() >= db) quot.resize(static_cast<std::size_t>(a.degree() - db + 1));
    for (int i = a.degree(); i >= db; --i) {
        Rational q = rem[static_cast<std::size_t>(i)] / blc;
        quot[static_cast<std::size_t>(i - db)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * Rational(b[static_cast<std::size_t>(j)]);
    }
    rem.resize(static_cast<std::size_t>(db > 0 ? db : 0));
    return {std::move(quot), std::move(rem)};
}

// Exact division; throws if b does not divide a over the integers.
inline IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return IntPolynomial();
    auto [q, r] = divrem_rational(a, b);
    for (const auto& c : r)
        if (c != 0) throw ComputationError("inexact polynomial division");
    std::vector<BigInt> qi(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (boost::multiprecision::denominator(q[i]) != 1)
            throw ComputationError("inexact polynomial division");
        qi[i] = boost::multiprecision::numerator(q[i]);
    }
    return IntPolynomial(std::move(qi));
}

inline bool divides(const IntPolynomial& b, const IntPolynomial& a) {
    if (a.is_zero()) return true;
    if (b.is_zero() || b.degree() > a.degree()) return false;
    auto [q, r] = divrem_rational(a, b);
    for (const auto& c : r)
        if (c != 0) return false;
    (void)q;
    return true;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
inline IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw InvalidInput("pseudo_rem by zero");
    IntPolynomial r = a;
    const int db = b.degree();
    const BigInt& blc = b.leading();
    int steps = a.degree() - db + 1;
    if (steps <= 0) return r;
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        BigInt rl = r.leading();
        r = blc * r - rl * b.shifted_up(static_cast<unsigned>(k));
        --steps;
    }
    // Keep the classical normalization lc(b)^(delta+1) even on early exit.
    while (steps-- > 0) r = blc * r;
    return r;
}

// Signed resultant with the convention
//   Res(p, q) = lc(p)^deg(q) * prod q(alpha_i) over the roots of p.
// Primitive PRS with exact tracking of the removed factors:
//   Res(A,B) = (-1)^(degA*degB) lc(B)^(degA - degR - (delta+1) degB) Res(B,R),
//   Res(B, c*R) = c^degB * Res(B, R).
inline BigInt resultant(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) throw InvalidInput("resultant of zero polynomial");
    Rational factor = 1;
    IntPolynomial a = p, b = q;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) factor = -factor;
        std::swap(a, b);
    }
    while (true) {
        if (b.degree() == 0) {
            Rational res = factor * Rational(pow_bigint(b.leading(),
                                                        static_cast<std::uint64_t>(a.degree())));
            if (boost::multiprecision::denominator(res) != 1)
                throw ComputationError("resultant accumulator not integral");
            return boost::multiprecision::numerator(res);
        }
        IntPolynomial r = pseudo_rem(a, b);
        if (r.is_zero()) return BigInt(0);
        const int da = a.degree(), db = b.degree(), dr = r.degree();
        const int delta = da - db;
        if ((da & 1) && (db & 1)) factor = -factor;
        // lc(b)^(da - dr - (delta+1)*db)
        std::int64_t e = static_cast<std::int64_t>(da) - dr -
                         static_cast<std::int64_t>(delta + 1) * db;
        BigInt lb = b.leading();
        if (e >= 0)
            factor *= Rational(pow_bigint(lb, static_cast<std::uint64_t>(e)));
        else
            factor /= Rational(pow_bigint(lb, static_cast<std::uint64_t>(-e)));
        auto [rc, rp] = r.content_primitive();
        factor *= Rational(pow_bigint(rc, static_cast<std::uint64_t>(db)));
        a = std::move(b);
        b = std::move(rp);
    }
}

// gcd over Z[x]: content gcd times the primitive gcd, leading coefficient
// positive.
inline IntPolynomial gcd_poly(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero()) return q.is_zero() ? q : q.primitive_normalized();
    if (q.is_zero()) return p.primitive_normalized();
    BigInt cg = boost::multiprecision::gcd(p.content_abs(), q.content_abs());
    IntPolynomial a = p.primitive_normalized();
    IntPolynomial b = q.primitive_normalized();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? IntPolynomial() : r.primitive_normalized();
    }
    return cg == 1 ? a : cg * a;
}

// Same root set, all multiplicities one: p / gcd(p, p').
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) throw InvalidInput("squarefree part of zero polynomial");
    IntPolynomial pp = p.primitive_normalized();
    if (pp.degree() == 0) return pp;
    IntPolynomial g = gcd_poly(pp, pp.derivative());
    if (g.degree() == 0) return pp;
    return divide_exact(pp, g).primitive_normalized();
}

// Coefficient reversal: roots map to reciprocals.  Requires p(0) != 0.
inline IntPolynomial recip_poly(const IntPolynomial& p) {
    if (p.is_zero() || p[0].is_zero())
        throw InvalidInput("reciprocal polynomial requires nonzero constant term");
    std::vector<BigInt> c(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPolynomial(std::move(c)).primitive_normalized();
}

// p(-x), primitive normalized; roots map to negatives.
inline IntPolynomial negate_roots(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    std::vector<BigInt> c = p.coeffs();
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPolynomial(std::move(c)).primitive_normalized();
}

// Minimal-polynomial shift: the returned primitive polynomial vanishes at
// root + offset for every root of p (it is p(x - offset) with denominators
// cleared).  Irreducibility is preserved.
inline IntPolynomial shift_roots(const IntPolynomial& p, const Rational& offset) {
    if (p.is_zero()) return p;
    const int d = p.degree();
    std::vector<Rational> c(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i)
        c[static_cast<std::size_t>(i)] = Rational(p[static_cast<std::size_t>(i)]);
    // Taylor shift by t: c becomes the coefficient list of p(x + t).
    const Rational t = -offset;
    for (int k = 0; k < d; ++k)
        for (int i = d - 1; i >= k; --i)
            c[static_cast<std::size_t>(i)] += t * c[static_cast<std::size_t>(i + 1)];
    BigInt l = 1;
    for (auto& r : c) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(r));
    std::vector<BigInt> ic(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        ic[i] = boost::multiprecision::numerator(c[i] * Rational(l));
    return IntPolynomial(std::move(ic)).primitive_normalized();
}

// A polynomial of degree <= deg(p)*deg(q) vanishing at every alpha+beta with
// p(alpha) = 0, q(beta) = 0: Res_y(p(y), q(x - y)), computed by evaluation at
// deg(p)*deg(q)+1 integer points and exact interpolation.  The leading
// coefficient of the resultant in x is +-lc(p)^deg(q) lc(q)^deg(p), so the
// degree never collapses and pointwise specialization is valid.
inline IntPolynomial sum_poly(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero() || p.degree() < 1 || q.degree() < 1)
        throw InvalidInput("sum_poly requires two nonconstant polynomials");
    const int m = p.degree(), n = q.degree();
    const int pts = m * n + 1;
    std::vector<Rational> xs(static_cast<std::size_t>(pts));
    std::vector<Rational> ys(static_cast<std::size_t>(pts));
    for (int k = 0; k < pts; ++k) {
        // 0, 1, -1, 2, -2, ...
        BigInt x0 = (k % 2 == 1) ? BigInt(k / 2 + 1) : BigInt(-(k / 2));
        // q(x0 - y) as a polynomial in y, by Horner in (x0 - y).
        IntPolynomial acc = IntPolynomial::constant(q.leading());
        IntPolynomial x0_minus_y(std::vector<BigInt>{x0, BigInt(-1)});
        for (int j = n - 1; j >= 0; --j)
            acc = acc * x0_minus_y + IntPolynomial::constant(q[static_cast<std::size_t>(j)]);
        xs[static_cast<std::size_t>(k)] = Rational(x0);
        ys[static_cast<std::size_t>(k)] = Rational(resultant(p, acc));
    }
    // Newton divided differences.
    std::vector<Rational> dd = ys;
    for (int j = 1; j < pts; ++j)
        for (int i = pts - 1; i >= j; --i)
            dd[static_cast<std::size_t>(i)] =
                (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) /
                (xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(i - j)]);
    // Expand the Newton form.
    std::vector<Rational> poly{dd[static_cast<std::size_t>(pts - 1)]};
    for (int i = pts - 2; i >= 0; --i) {
        // poly = poly*(x - xs[i]) + dd[i]
        std::vector<Rational> np(poly.size() + 1);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            np[j + 1] += poly[j];
            np[j] -= poly[j] * xs[static_cast<std::size_t>(i)];
        }
        np[0] += dd[static_cast<std::size_t>(i)];
        poly = std::move(np);
    }
    BigInt l = 1;
    for (auto& r : poly) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(r));
    std::vector<BigInt> ic(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i)
        ic[i] = boost::multiprecision::numerator(poly[i] * Rational(l));
    IntPolynomial r(std::move(ic));
    if (r.is_zero()) throw ComputationError("sum_poly produced zero polynomial");
    return r.primitive_normalized();
}

}  // namespace recipcert
