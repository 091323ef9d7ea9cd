#pragma once

// The algebraic-number value type: an irreducible minimal polynomial plus a
// certified isolating disk designating one root.  Sums go through the exact
// resultant construction; factor selection refines disks until exactly one
// irreducible factor is compatible, and errors out rather than guessing.

#include "recipcert/factor.hpp"
#include "recipcert/roots.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace recipcert {

struct AmbiguousSelection : ComputationError {
    using ComputationError::ComputationError;
};
struct NoRootInRegion : ComputationError {
    using ComputationError::ComputationError;
};

class AlgebraicNumber {
  public:
    AlgebraicNumber() : minpoly_({0, 1}), iso_(ComplexDisk::point(Rational(0))) {}

    // Trusted constructor: p irreducible primitive with positive leading
    // coefficient, disk certified for p.
    AlgebraicNumber(IntPolynomial p, ComplexDisk disk)
        : minpoly_(std::move(p)), iso_(std::move(disk)) {}

    static AlgebraicNumber from_rational(const Rational& r) {
        return AlgebraicNumber(IntPolynomial::linear_root(r), ComplexDisk::point(r));
    }
    static AlgebraicNumber from_integer(const BigInt& a) {
        return from_rational(Rational(a));
    }

    const IntPolynomial& minpoly() const { return minpoly_; }
    const ComplexDisk& isolating_disk() const { return iso_; }
    int degree() const { return minpoly_.degree(); }
    bool is_algebraic_integer() const { return minpoly_.is_monic(); }
    bool is_rational() const { return degree() == 1; }
    bool is_zero() const { return degree() == 1 && minpoly_[0].is_zero(); }
    Rational rational_value() const {
        if (!is_rational()) throw InvalidInput("not a rational value");
        return Rational(-minpoly_[0], minpoly_[1]);
    }

    ComplexDisk enclosure(const Rational& tol, const Limits& limits = {}) const {
        return refine(minpoly_, iso_, tol, limits);
    }

    // Certified disks for all conjugates (all roots of the minimal polynomial).
    std::vector<ComplexDisk> conjugates(const Rational& tol, const Limits& limits = {}) const {
        if (is_rational()) return {ComplexDisk::point(rational_value())};
        return isolate_roots(minpoly_, tol, limits);
    }

  private:
    IntPolynomial minpoly_;
    ComplexDisk iso_;
};

namespace detail_algnum {

struct Candidate {
    IntPolynomial factor;
    ComplexDisk disk;
};

inline Rational ladder_tolerance(int round) {
    return Rational(1, BigInt(1) << static_cast<unsigned>(48 + 64 * round));
}

// All roots of the irreducible factors of p isolated at the given tolerance.
inline std::vector<Candidate> all_candidates(const std::vector<FactorMultiplicity>& factors,
                                             const Rational& tol, const Limits& limits) {
    std::vector<Candidate> out;
    for (const auto& [f, mult] : factors) {
        for (auto& d : isolate_roots(f, tol, limits)) out.push_back({f, d});
    }
    return out;
}

}  // namespace detail_algnum

// Construct the algebraic number designated by the unique root of p inside
// `region`.  p is reduced to primitive squarefree form and factored; disks
// are refined until exactly one irreducible factor has its root inside the
// region.
inline AlgebraicNumber make_algebraic(const IntPolynomial& p, const ComplexDisk& region,
                                      const Limits& limits = {}) {
    using namespace detail_algnum;
    if (p.is_zero() || p.degree() < 1)
        throw InvalidInput("make_algebraic requires a nonconstant polynomial");
    auto factors = factor(p, limits.degree_cap);
    for (int round = 0; round < 6; ++round) {
        Rational tol = ladder_tolerance(round);
        if (region.rad > 0 && round == 0) tol = std::min(tol, Rational(region.rad / 16));
        auto cands = all_candidates(factors, tol, limits);
        std::vector<Candidate> hits;
        for (auto& c : cands)
            if (disks_intersect(c.disk, region)) hits.push_back(c);
        if (hits.empty()) throw NoRootInRegion("region contains no root of the polynomial");
        if (hits.size() == 1) {
            // accept only when the root is provably inside the region
            const ComplexDisk& cd = hits[0].disk;
            Rational dre = cd.re - region.re, dim = cd.im - region.im;
            Rational margin = region.rad - cd.rad;
            if (margin >= 0 && dre * dre + dim * dim <= margin * margin)
                return AlgebraicNumber(hits[0].factor, cd);
        }
    }
    throw AmbiguousSelection(
        "region does not isolate a single root at the precision ladder limit");
}

// Selector used by sequence ingestion: the conjugate of maximal modulus,
// preferring a positive real root, then positive imaginary part, then the
// lexicographically largest center.
inline AlgebraicNumber make_max_modulus(const IntPolynomial& p, const Limits& limits = {}) {
    using namespace detail_algnum;
    if (p.is_zero() || p.degree() < 1)
        throw InvalidInput("make_max_modulus requires a nonconstant polynomial");
    auto factors = factor(p, limits.degree_cap);
    std::vector<Candidate> cands;
    for (int round = 0; round < 4; ++round) {
        Rational tol = ladder_tolerance(round);
        cands = all_candidates(factors, tol, limits);
        // Keep candidates whose modulus may still be maximal.
        std::vector<MagnitudeBound> mods;
        mods.reserve(cands.size());
        for (auto& c : cands) mods.push_back(modulus(c.disk, 96));
        int best_lo = -1;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (mods[i].exact_zero || mods[i].lo_is_zero) continue;
            if (best_lo < 0 ||
                mods[i].log2_lo > mods[static_cast<std::size_t>(best_lo)].log2_lo)
                best_lo = static_cast<int>(i);
        }
        if (best_lo < 0) throw ComputationError("no candidate with positive modulus bound");
        std::vector<Candidate> still;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (mods[i].exact_zero) continue;
            if (!(mods[i].log2_hi < mods[static_cast<std::size_t>(best_lo)].log2_lo))
                still.push_back(cands[i]);
        }
        cands = std::move(still);
        if (cands.size() == 1) return AlgebraicNumber(cands[0].factor, cands[0].disk);
    }
    // Tie set of (numerically) equal-modulus conjugates: deterministic pick.
    auto is_pos_real = [](const ComplexDisk& d) { return d.im == 0 && d.re - d.rad > 0; };
    std::sort(cands.begin(), cands.end(), [&](const Candidate& a, const Candidate& b) {
        bool pa = is_pos_real(a.disk), pb = is_pos_real(b.disk);
        if (pa != pb) return pa;
        bool ia = a.disk.im > 0, ib = b.disk.im > 0;
        if (ia != ib) return ia;
        if (a.disk.re != b.disk.re) return a.disk.re > b.disk.re;
        return a.disk.im > b.disk.im;
    });
    return AlgebraicNumber(cands.front().factor, cands.front().disk);
}

inline AlgebraicNumber negate(const AlgebraicNumber& a) {
    ComplexDisk d(-a.isolating_disk().re, -a.isolating_disk().im, a.isolating_disk().rad);
    return AlgebraicNumber(negate_roots(a.minpoly()), d);
}

// Exact reciprocal: reversed minimal polynomial; the isolating disk maps
// through the exact rational inversion of a zero-free disk.
inline AlgebraicNumber reciprocal(const AlgebraicNumber& a, const Limits& limits = {}) {
    if (a.is_zero()) throw InvalidInput("reciprocal of zero");
    if (a.is_rational()) return AlgebraicNumber::from_rational(1 / a.rational_value());
    ComplexDisk d = a.isolating_disk();
    // ensure 0 is strictly outside the disk
    for (int round = 0; d.re * d.re + d.im * d.im <= d.rad * d.rad; ++round) {
        if (round >= 40) throw PrecisionExhausted("could not separate the disk from zero");
        d = refine(a.minpoly(), d, Rational(d.rad) / 4096, limits);
    }
    Rational denom = d.re * d.re + d.im * d.im - d.rad * d.rad;
    ComplexDisk inv(d.re / denom, -d.im / denom, d.rad / denom);
    return AlgebraicNumber(recip_poly(a.minpoly()), inv);
}

// Exact sum via the resultant construction.  Degree of the result is at
// most deg(a) * deg(b); equality need not hold.
inline AlgebraicNumber add(const AlgebraicNumber& a, const AlgebraicNumber& b,
                           const Limits& limits = {}) {
    using namespace detail_algnum;
    if (a.is_rational() && b.is_rational())
        return AlgebraicNumber::from_rational(a.rational_value() + b.rational_value());
    // Rational shifts keep the minimal polynomial irreducible and the disk
    // certification intact.
    if (a.is_rational() || b.is_rational()) {
        const AlgebraicNumber& alg = a.is_rational() ? b : a;
        const Rational off = (a.is_rational() ? a : b).rational_value();
        const ComplexDisk& d0 = alg.isolating_disk();
        return AlgebraicNumber(shift_roots(alg.minpoly(), off),
                               ComplexDisk(d0.re + off, d0.im, d0.rad));
    }
    IntPolynomial s = sum_poly(a.minpoly(), b.minpoly());
    auto factors = factor(s, limits.degree_cap);
    for (int round = 0; round < 6; ++round) {
        Rational tol = ladder_tolerance(round);
        ComplexDisk da = a.enclosure(tol, limits);
        ComplexDisk db = b.enclosure(tol, limits);
        ComplexDisk sum_region(da.re + db.re, da.im + db.im, da.rad + db.rad);
        auto cands = all_candidates(factors, tol, limits);
        std::vector<Candidate> hits;
        for (auto& c : cands)
            if (disks_intersect(c.disk, sum_region)) hits.push_back(c);
        if (hits.empty())
            throw ComputationError("sum enclosure missed every candidate root");
        if (hits.size() == 1) return AlgebraicNumber(hits[0].factor, hits[0].disk);
    }
    throw AmbiguousSelection(
        "sum could not be attributed to a unique irreducible factor at the ladder limit");
}

// Equality decision: identical minimal polynomials and provably coincident
// designated roots.  The refinement threshold comes from the classical root
// separation bound sqrt(3 |disc|) / (d^((d+2)/2) ||p||_2^(d-1)).
inline bool equals(const AlgebraicNumber& a, const AlgebraicNumber& b,
                   const Limits& limits = {}) {
    if (a.minpoly() != b.minpoly()) return false;
    if (a.is_rational()) return true;  // same degree-1 minimal polynomial
    const IntPolynomial& p = a.minpoly();
    const int d = p.degree();
    BigInt disc_num = resultant(p, p.derivative());
    if (disc_num.is_zero()) throw ComputationError("separation bound: zero discriminant");
    BigInt norm2_sq = 0;
    for (int i = 0; i <= d; ++i)
        norm2_sq += p[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(i)];
    const unsigned fb = 48;
    DInterval l3 = log2_of_rational(Rational(3), fb);
    DInterval ldisc = log2_of_rational(Rational(abs_val(disc_num), abs_val(p.leading())), fb);
    DInterval ld = log2_of_rational(Rational(d), fb);
    DInterval ln2sq = log2_of_rational(Rational(norm2_sq), fb);
    // log2 sep > (log2 3 + log2|disc|)/2 - (d+2)/2 log2 d - (d-1)/2 log2(norm2^2)
    Dyadic lo = iadd(l3, ldisc, 128).lo;
    lo = div(lo, Dyadic(2), 128, Round::Down);
    lo = sub(lo, mul(ld.hi, Dyadic(BigInt(d + 2), -1), 128, Round::Up), 128, Round::Down);
    lo = sub(lo, mul(ln2sq.hi, Dyadic(BigInt(d - 1), -1), 128, Round::Up), 128, Round::Down);
    std::int64_t sep_exp = rational_floor(lo.to_rational()).convert_to<std::int64_t>() - 3;
    Rational tol = sep_exp >= 0 ? Rational(BigInt(1) << static_cast<unsigned>(sep_exp))
                                : Rational(1, BigInt(1) << static_cast<unsigned>(-sep_exp));
    ComplexDisk da = a.enclosure(tol, limits);
    ComplexDisk db = b.enclosure(tol, limits);
    return disks_intersect(da, db);
}

}  // namespace recipcert
