#pragma once

// Certified complex root isolation for integer polynomials.  Approximation
// first (Weierstrass simultaneous iteration), certification second: a
// Krawczyk-style disk test in outward-rounded complex disk arithmetic proves
// that a disk contains exactly one root.  The working precision doubles from
// 64 bits until certification succeeds, so outputs are reproducible across
// runs and platforms.

#include "recipcert/magnitude.hpp"
#include "recipcert/polyz.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace recipcert {

// Certified enclosure of one root: exact rational center and radius.
struct ComplexDisk {
    Rational re, im, rad;

    ComplexDisk() = default;
    ComplexDisk(Rational re_, Rational im_, Rational rad_)
        : re(std::move(re_)), im(std::move(im_)), rad(std::move(rad_)) {
        if (rad < 0) throw InvalidInput("negative disk radius");
    }
    static ComplexDisk point(const Rational& re_, const Rational& im_ = Rational(0)) {
        return ComplexDisk(re_, im_, Rational(0));
    }
    bool is_point() const { return rad == 0; }
    bool is_real_line() const { return im == 0 && rad == 0 ? true : im == 0; }
};

namespace cx {

// Complex numbers over Dyadic.  Exact ops by default; truncation is applied
// explicitly in the heuristic iteration.
struct CDyadic {
    Dyadic re, im;
};

inline CDyadic cadd(const CDyadic& a, const CDyadic& b) {
    return {add_exact(a.re, b.re), add_exact(a.im, b.im)};
}
inline CDyadic csub(const CDyadic& a, const CDyadic& b) {
    return {sub_exact(a.re, b.re), sub_exact(a.im, b.im)};
}
inline CDyadic cmul(const CDyadic& a, const CDyadic& b) {
    return {sub_exact(mul_exact(a.re, b.re), mul_exact(a.im, b.im)),
            add_exact(mul_exact(a.re, b.im), mul_exact(a.im, b.re))};
}
inline CDyadic cneg(const CDyadic& a) { return {-a.re, -a.im}; }
inline CDyadic ctrunc(const CDyadic& a, unsigned prec) {
    return {a.re.truncated(prec), a.im.truncated(prec)};
}
inline Dyadic norm_sq(const CDyadic& a) {
    return add_exact(mul_exact(a.re, a.re), mul_exact(a.im, a.im));
}
inline bool is_zero(const CDyadic& a) { return a.re.is_zero() && a.im.is_zero(); }

// Approximate reciprocal at the given precision (not rigorous).
inline CDyadic crecip_approx(const CDyadic& a, unsigned prec) {
    Dyadic n = norm_sq(a).truncated(prec + 8);
    return {div(a.re, n, prec, Round::Down), div(-a.im, n, prec, Round::Down)};
}
inline CDyadic cdiv_approx(const CDyadic& a, const CDyadic& b, unsigned prec) {
    return ctrunc(cmul(a, crecip_approx(b, prec)), prec);
}

inline Dyadic abs_upper(const CDyadic& a, unsigned prec) {
    return sqrt(norm_sq(a), prec, Round::Up);
}
inline Dyadic abs_lower(const CDyadic& a, unsigned prec) {
    return sqrt(norm_sq(a), prec, Round::Down);
}

// Exact Horner evaluation of an integer polynomial at a complex dyadic point.
inline CDyadic eval_exact(const IntPolynomial& p, const CDyadic& z) {
    CDyadic acc{Dyadic(0), Dyadic(0)};
    for (int i = p.degree(); i >= 0; --i) {
        acc = cmul(acc, z);
        acc.re = add_exact(acc.re, Dyadic(p[static_cast<std::size_t>(i)], 0));
    }
    return acc;
}

// Truncating Horner evaluation for the heuristic phase.
inline CDyadic eval_trunc(const IntPolynomial& p, const CDyadic& z, unsigned prec) {
    CDyadic acc{Dyadic(0), Dyadic(0)};
    for (int i = p.degree(); i >= 0; --i) {
        acc = ctrunc(cmul(acc, z), prec);
        acc.re = add_exact(acc.re, Dyadic(p[static_cast<std::size_t>(i)], 0).truncated(prec));
    }
    return acc;
}

// Disk with dyadic center and radius; radius arithmetic always rounds up.
struct DiskD {
    CDyadic c;
    Dyadic r;
};

inline DiskD dadd(const DiskD& a, const DiskD& b) {
    return {cadd(a.c, b.c), add_exact(a.r, b.r)};
}
inline DiskD dmul(const DiskD& a, const DiskD& b, unsigned rprec = 64) {
    Dyadic ma = abs_upper(a.c, rprec), mb = abs_upper(b.c, rprec);
    Dyadic r = add(add(mul(ma, b.r, rprec, Round::Up), mul(mb, a.r, rprec, Round::Up),
                       rprec, Round::Up),
                   mul(a.r, b.r, rprec, Round::Up), rprec, Round::Up);
    return {cmul(a.c, b.c), r};
}

// Enclosure of p over the disk D by Horner in disk arithmetic.
inline DiskD eval_disk(const IntPolynomial& p, const DiskD& d, unsigned rprec = 64) {
    DiskD acc{{Dyadic(0), Dyadic(0)}, Dyadic(0)};
    for (int i = p.degree(); i >= 0; --i) {
        acc = dmul(acc, d, rprec);
        acc.c.re = add_exact(acc.c.re, Dyadic(p[static_cast<std::size_t>(i)], 0));
    }
    return acc;
}

}  // namespace cx

// ---------------------------------------------------------------------------
// Krawczyk disk test.
//
// For the disk D = D(c, r), with R an approximate inverse of p'(c):
//   K = c - R p(c) + (1 - R P'(D)) D(0, r)
// computed in outward-rounded disk arithmetic, where P'(D) encloses
// { p'(z) : z in D }.  If K lies in the interior of D, then p has exactly
// one root in D, and that root lies in K.  (Existence by Brouwer applied to
// z - R p(z); uniqueness because K interior to D forces |1 - R w| < 1 for
// every w in P'(D), which includes all mean-value derivatives over D.)
// ---------------------------------------------------------------------------

inline std::optional<cx::DiskD> krawczyk_test(const IntPolynomial& p,
                                              const IntPolynomial& dp,
                                              const cx::CDyadic& c, const Dyadic& r,
                                              unsigned prec) {
    using namespace cx;
    CDyadic fc = eval_exact(p, c);
    CDyadic fpc = eval_exact(dp, c);
    if (is_zero(fpc)) return std::nullopt;
    CDyadic R = crecip_approx(ctrunc(fpc, prec), prec);
    if (is_zero(R)) return std::nullopt;
    // center of K: c - R p(c), exact
    CDyadic t1 = csub(c, cmul(R, fc));
    // W = p'(D), U = 1 - R W
    DiskD D{c, r};
    DiskD W = eval_disk(dp, D);
    DiskD RW{cmul(R, W.c), mul(abs_upper(R, 64), W.r, 64, Round::Up)};
    DiskD U{csub({Dyadic(1), Dyadic(0)}, RW.c), RW.r};
    // T = U * D(0, r): centered at 0 with radius (|U.c| + U.r) * r
    Dyadic contraction = add(abs_upper(U.c, 64), U.r, 64, Round::Up);
    Dyadic tr = mul(contraction, r, 64, Round::Up);
    // containment test: |t1 - c| + tr < r
    Dyadic dist = abs_upper(csub(t1, c), 96);
    if (add(dist, tr, 96, Round::Up) >= r) return std::nullopt;
    // Tight result disk around t1; center truncation goes into the radius.
    DiskD K{ctrunc(t1, 2 * prec + 64), tr};
    Dyadic werr = abs_upper(csub(t1, K.c), 64);
    K.r = add(K.r, werr, 96, Round::Up);
    return K;
}

namespace detail_roots {

using cx::CDyadic;

inline Dyadic dyadic_from_double(double v) {
    if (v == 0.0) return Dyadic(0);
    int e = 0;
    double m = std::frexp(v, &e);  // v = m * 2^e, |m| in [0.5, 1)
    long long mi = static_cast<long long>(std::ldexp(m, 53));
    return Dyadic(BigInt(mi), e - 53);
}

// Upper bound 1 + max |c_i| / |c_d| on all root moduli.
inline Dyadic cauchy_root_bound(const IntPolynomial& p, unsigned prec = 64) {
    BigInt maxc = 0;
    for (int i = 0; i < p.degree(); ++i)
        maxc = std::max(maxc, abs_val(p[static_cast<std::size_t>(i)]));
    if (maxc.is_zero()) return Dyadic(1);
    Dyadic q = div(Dyadic(maxc, 0), Dyadic(abs_val(p.leading()), 0), prec, Round::Up);
    return add(q, Dyadic(1), prec, Round::Up);
}

struct ApproxState {
    std::vector<CDyadic> z;
    bool converged = false;
};

// Weierstrass (Durand-Kerner) simultaneous iteration at a fixed precision.
// Heuristic phase only; certification follows separately.
inline ApproxState weierstrass(const IntPolynomial& p, unsigned prec,
                               const std::vector<CDyadic>* warm_start) {
    const int d = p.degree();
    ApproxState st;
    if (warm_start && static_cast<int>(warm_start->size()) == d) {
        st.z = *warm_start;
    } else {
        // Initial points on a circle whose radius matches the geometric mean
        // of the root moduli, |c0/cd|^(1/d), with an angular offset to break
        // real-axis symmetry.
        int lowest = 0;
        while (lowest <= d && p[static_cast<std::size_t>(lowest)].is_zero()) ++lowest;
        const BigInt& c0 = p[static_cast<std::size_t>(lowest)];
        std::int64_t e0 = (bit_length(c0) - bit_length(p.leading())) /
                          std::max(1, d - lowest);
        Dyadic rho = Dyadic::pow2(e0);
        Dyadic cap = cauchy_root_bound(p);
        if (rho > cap) rho = cap;
        for (int k = 0; k < d; ++k) {
            double theta = 6.283185307179586 * (static_cast<double>(k) + 0.25) /
                               static_cast<double>(d) +
                           0.42;
            CDyadic pt{mul(rho, dyadic_from_double(std::cos(theta)), prec, Round::Down),
                       mul(rho, dyadic_from_double(std::sin(theta)), prec, Round::Down)};
            st.z.push_back(pt);
        }
    }
    const unsigned maxiter = 96 + 8 * static_cast<unsigned>(d) + prec / 2;
    const BigInt& lc = p.leading();
    for (unsigned it = 0; it < maxiter; ++it) {
        bool all_small = true;
        for (int i = 0; i < d; ++i) {
            CDyadic num = cx::eval_trunc(p, st.z[static_cast<std::size_t>(i)], prec);
            CDyadic den{Dyadic(lc, 0).truncated(prec), Dyadic(0)};
            for (int j = 0; j < d; ++j) {
              if (j == i) continue;
              den = cx::ctrunc(cx::cmul(den, cx::csub(st.z[static_cast<std::size_t>(i)],
                                                      st.z[static_cast<std::size_t>(j)])),
                               prec);
            }
            if (cx::is_zero(den)) {
                // collided points: nudge deterministically
                st.z[static_cast<std::size_t>(i)].re =
                    add_exact(st.z[static_cast<std::size_t>(i)].re,
                              Dyadic::pow2(-static_cast<std::int64_t>(prec / 2) +
                                           (st.z[static_cast<std::size_t>(i)].re.is_zero()
                                                ? 0
                                                : st.z[static_cast<std::size_t>(i)].re.floor_log2_abs())));
                all_small = false;
                continue;
            }
            CDyadic w = cx::cdiv_approx(num, den, prec);
            st.z[static_cast<std::size_t>(i)] =
                cx::ctrunc(cx::csub(st.z[static_cast<std::size_t>(i)], w), prec);
            // correction small relative to the point?
            Dyadic wmag = cx::abs_upper(w, 32);
            Dyadic zmag = add(cx::abs_upper(st.z[static_cast<std::size_t>(i)], 32), Dyadic(1),
                              32, Round::Up);
            if (!wmag.is_zero() &&
                wmag > mul(zmag, Dyadic::pow2(-(static_cast<std::int64_t>(prec) - 8)), 32,
                           Round::Up))
                all_small = false;
        }
        if (all_small) {
            st.converged = true;
            break;
        }
    }
    return st;
}

inline ComplexDisk to_complex_disk(const cx::DiskD& d) {
    return ComplexDisk(d.c.re.to_rational(), d.c.im.to_rational(), d.r.to_rational());
}

inline cx::DiskD from_complex_disk(const ComplexDisk& d, unsigned prec) {
    Dyadic re_lo = Dyadic::from_rational(d.re, prec, Round::Down);
    Dyadic re_hi = Dyadic::from_rational(d.re, prec, Round::Up);
    Dyadic im_lo = Dyadic::from_rational(d.im, prec, Round::Down);
    Dyadic im_hi = Dyadic::from_rational(d.im, prec, Round::Up);
    Dyadic r = Dyadic::from_rational(d.rad, prec, Round::Up);
    // center rounding absorbed into the radius
    Dyadic slack = add(sub(re_hi, re_lo, 64, Round::Up), sub(im_hi, im_lo, 64, Round::Up),
                       64, Round::Up);
    return {{re_lo, im_lo}, add(r, slack, 64, Round::Up)};
}

}  // namespace detail_roots

// ---------------------------------------------------------------------------
// Public operations.
// ---------------------------------------------------------------------------

// Exact disjointness: squared center distance strictly above squared radius sum.
inline bool disks_disjoint(const cx::DiskD& a, const cx::DiskD& b) {
    Dyadic d2 = cx::norm_sq(cx::csub(a.c, b.c));
    Dyadic rs = add_exact(a.r, b.r);
    return d2 > mul_exact(rs, rs);
}

inline bool disks_intersect(const ComplexDisk& a, const ComplexDisk& b) {
    Rational dre = a.re - b.re, dim = a.im - b.im;
    Rational d2 = dre * dre + dim * dim;
    Rational rs = a.rad + b.rad;
    return d2 <= rs * rs;
}

// Certified isolation of all roots of a squarefree polynomial: exactly
// deg(p) pairwise disjoint disks, each of radius <= tol, each containing
// exactly one root; the disk set is exactly closed under conjugation.
std::vector<ComplexDisk> isolate_roots(const IntPolynomial& p, const Rational& tol,
                                       const Limits& limits = {});

// Certified shrink of a certified disk: the returned disk is contained in d
// and has radius <= tol.
ComplexDisk refine(const IntPolynomial& p, const ComplexDisk& d, const Rational& tol,
                   const Limits& limits = {});

// Outward-rounded bounds on |z| over the disk.
MagnitudeBound modulus(const ComplexDisk& d, unsigned frac_bits = 96);

// --------------------------- implementation -------------------------------

namespace detail_roots {

struct CertifiedSet {
    std::vector<cx::DiskD> disks;  // closed under conjugation by construction
};

// Attempt to certify every approximation at the given precision; returns
// nullopt when anything fails (caller escalates the ladder).
inline std::optional<CertifiedSet> certify_all(const IntPolynomial& p,
                                               const IntPolynomial& dp,
                                               std::vector<CDyadic> z, unsigned prec,
                                               const Dyadic& target_radius) {
    using namespace cx;
    const int d = p.degree();
    // Snap near-real points to the axis; pair the rest into conjugates.
    std::vector<CDyadic> reals, upper;
    std::vector<int> used(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i) {
        Dyadic zmag = add(abs_upper(z[static_cast<std::size_t>(i)], 32), Dyadic(1), 32,
                          Round::Up);
        Dyadic thr = mul(zmag, Dyadic::pow2(-(static_cast<std::int64_t>(prec) / 2)), 32,
                         Round::Up);
        Dyadic imag = z[static_cast<std::size_t>(i)].im;
        if (imag.sign() < 0) imag = -imag;
        if (imag <= thr) {
            reals.push_back({z[static_cast<std::size_t>(i)].re, Dyadic(0)});
            used[static_cast<std::size_t>(i)] = 1;
        }
    }
    // conjugate pairing of the remaining points
    for (int i = 0; i < d; ++i) {
        if (used[static_cast<std::size_t>(i)] || z[static_cast<std::size_t>(i)].im.sign() <= 0)
            continue;
        int best = -1;
        Dyadic bestd;
        for (int j = 0; j < d; ++j) {
            if (used[static_cast<std::size_t>(j)] || j == i ||
                z[static_cast<std::size_t>(j)].im.sign() >= 0)
                continue;
            CDyadic mirrored{z[static_cast<std::size_t>(j)].re,
                             -z[static_cast<std::size_t>(j)].im};
            Dyadic dist = norm_sq(csub(z[static_cast<std::size_t>(i)], mirrored));
            if (best < 0 || dist < bestd) {
                best = j;
                bestd = dist;
            }
        }
        if (best < 0) return std::nullopt;
        used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(best)] = 1;
        CDyadic mid{
            div(add_exact(z[static_cast<std::size_t>(i)].re, z[static_cast<std::size_t>(best)].re),
                Dyadic(2), prec, Round::Down),
            div(sub_exact(z[static_cast<std::size_t>(i)].im, z[static_cast<std::size_t>(best)].im),
                Dyadic(2), prec, Round::Down)};
        upper.push_back(mid);
    }
    for (int i = 0; i < d; ++i)
        if (!used[static_cast<std::size_t>(i)] && z[static_cast<std::size_t>(i)].im.sign() != 0)
            return std::nullopt;  // unpaired complex point
    if (static_cast<int>(reals.size() + 2 * upper.size()) != d) return std::nullopt;

    CertifiedSet out;
    auto certify_one = [&](const CDyadic& center, bool must_be_complex)
        -> std::optional<DiskD> {
        Dyadic r0 = target_radius;
        for (int attempt = 0; attempt < 3; ++attempt) {
            auto K = krawczyk_test(p, dp, center, r0, prec);
            if (K) {
                if (K->r > target_radius) return std::nullopt;
                if (must_be_complex) {
                    // strictly above the real axis so the mirror is disjoint
                    if (!(sub_exact(K->c.im, K->r).sign() > 0)) return std::nullopt;
                }
                return K;
            }
            r0 = mul(r0, Dyadic::pow2(6), 32, Round::Up);
        }
        return std::nullopt;
    };
    for (const auto& c : reals) {
        auto K = certify_one(c, false);
        if (!K) return std::nullopt;
        K->c.im = Dyadic(0);  // keep the real axis exact
        out.disks.push_back(*K);
    }
    for (const auto& c : upper) {
        auto K = certify_one(c, true);
        if (!K) return std::nullopt;
        out.disks.push_back(*K);
        out.disks.push_back({{K->c.re, -K->c.im}, K->r});
    }
    // pairwise disjointness, exact
    for (std::size_t i = 0; i < out.disks.size(); ++i)
        for (std::size_t j = i + 1; j < out.disks.size(); ++j)
            if (!disks_disjoint(out.disks[i], out.disks[j])) return std::nullopt;
    return out;
}

}  // namespace detail_roots

inline std::vector<ComplexDisk> isolate_roots(const IntPolynomial& p, const Rational& tol,
                                              const Limits& limits) {
    using namespace detail_roots;
    if (p.is_zero() || p.degree() < 1)
        throw InvalidInput("isolate_roots requires degree >= 1");
    if (tol <= 0) throw InvalidInput("isolate_roots requires positive tolerance");
    if (gcd_poly(p, p.derivative()).degree() != 0)
        throw InvalidInput("isolate_roots requires a squarefree polynomial");
    IntPolynomial q = p.primitive_normalized();

    std::vector<ComplexDisk> out;
    // Exact zero root.
    if (q[0].is_zero()) {
        out.push_back(ComplexDisk::point(Rational(0)));
        std::vector<BigInt> c(q.coeffs().begin() + 1, q.coeffs().end());
        q = IntPolynomial(std::move(c));
        if (q.degree() == 0) return out;
    }
    if (q.degree() == 1) {
        out.push_back(ComplexDisk::point(Rational(-q[0], q[1])));
        return out;
    }

    const IntPolynomial dq = q.derivative();
    Dyadic target = Dyadic::from_rational(tol, 64, Round::Down);
    if (target.is_zero()) throw InvalidInput("tolerance underflow");
    // Jump the ladder straight to a precision commensurate with the target.
    unsigned p0 = limits.start_precision;
    if (target < Dyadic(1)) {
        std::int64_t need = -target.floor_log2_abs() + 48;
        while (static_cast<std::int64_t>(p0) < need && p0 < limits.max_precision) p0 *= 2;
    }
    std::vector<cx::CDyadic> warm;
    for (unsigned prec = p0;; prec *= 2) {
        if (prec > limits.max_precision)
            throw PrecisionExhausted("root isolation ladder exhausted");
        ApproxState st = weierstrass(q, prec, warm.empty() ? nullptr : &warm);
        warm = st.z;
        if (!st.converged && prec < 512) continue;
        auto cert = certify_all(q, dq, st.z, prec, target);
        if (!cert) continue;
        // The zero disk (if any) must stay disjoint from the rest.
        if (!out.empty()) {
            bool zero_ok = true;
            for (const auto& dd : cert->disks) {
                Dyadic d2 = cx::norm_sq(dd.c);
                if (!(d2 > mul_exact(dd.r, dd.r))) zero_ok = false;
            }
            if (!zero_ok) continue;
        }
        for (const auto& dd : cert->disks) out.push_back(to_complex_disk(dd));
        return out;
    }
}

inline ComplexDisk refine(const IntPolynomial& p, const ComplexDisk& d, const Rational& tol,
                          const Limits& limits) {
    using namespace detail_roots;
    if (tol <= 0) throw InvalidInput("refine requires positive tolerance");
    if (d.rad <= tol) return d;
    IntPolynomial q = p.primitive_normalized();
    // Rational point disks are already exact.
    if (d.is_point()) return d;
    if (q.degree() == 1) return ComplexDisk::point(Rational(-q[0], q[1]));
    const IntPolynomial dq = q.derivative();
    Dyadic target = Dyadic::from_rational(tol, 96, Round::Down);
    Dyadic half = div(target, Dyadic(2), 96, Round::Down);
    if (half.is_zero()) throw InvalidInput("tolerance underflow");

    // Newton from the disk center, then certify a small disk and verify
    // containment in d.
    std::int64_t need = -half.floor_log2_abs() + 16;
    if (need < 64) need = 64;
    for (unsigned prec = static_cast<unsigned>(std::min<std::int64_t>(
             std::max<std::int64_t>(need, limits.start_precision), limits.max_precision));
         prec <= limits.max_precision; prec *= 2) {
        cx::DiskD dd = from_complex_disk(d, prec);
        cx::CDyadic z = dd.c;
        const int steps = 8 + static_cast<int>(std::max<std::int64_t>(
                                  0, dd.r.is_zero() ? 0 : dd.r.floor_log2_abs() -
                                                              half.floor_log2_abs())) / 4;
        for (int i = 0; i < steps; ++i) {
            cx::CDyadic fz = cx::eval_trunc(q, z, prec);
            cx::CDyadic fpz = cx::eval_trunc(dq, z, prec);
            if (cx::is_zero(fpz)) break;
            z = cx::ctrunc(cx::csub(z, cx::cdiv_approx(fz, fpz, prec)), prec);
        }
        auto K = krawczyk_test(q, dq, z, half, prec);
        if (K && !(K->r > target)) {
            // containment in the original disk
            cx::DiskD orig = from_complex_disk(d, prec);
            Dyadic dist = cx::abs_upper(cx::csub(K->c, orig.c), 96);
            if (add(dist, K->r, 96, Round::Up) <= orig.r) {
                if (d.im == 0) K->c.im = Dyadic(0);
                return to_complex_disk(*K);
            }
        }
        if (prec == limits.max_precision) break;
    }
    // Fall back to full isolation and match the unique compatible disk.
    Rational t = tol;
    for (int round = 0; round < 8; ++round) {
        std::vector<ComplexDisk> all = isolate_roots(q, t, limits);
        std::vector<ComplexDisk> hits;
        for (auto& cd : all)
            if (disks_intersect(cd, d)) hits.push_back(cd);
        if (hits.size() == 1) {
            const ComplexDisk& cd = hits[0];
            // must be geometrically inside d to satisfy the contract
            Rational dre = cd.re - d.re, dim = cd.im - d.im;
            Rational need2 = d.rad - cd.rad;
            if (need2 >= 0 && dre * dre + dim * dim <= need2 * need2) return cd;
        }
        t /= 64;
    }
    throw PrecisionExhausted("refine could not re-locate the designated root");
}

inline MagnitudeBound modulus(const ComplexDisk& d, unsigned frac_bits) {
    if (d.re == 0 && d.im == 0 && d.rad == 0) return MagnitudeBound::zero();
    const unsigned prec = frac_bits + 64;
    Rational n2 = d.re * d.re + d.im * d.im;
    Dyadic clo = sqrt(Dyadic::from_rational(n2, prec, Round::Down), prec, Round::Down);
    Dyadic chi = sqrt(Dyadic::from_rational(n2, prec, Round::Up), prec, Round::Up);
    Dyadic r = Dyadic::from_rational(d.rad, prec, Round::Up);
    Dyadic lo = sub(clo, r, prec, Round::Down);
    Dyadic hi = add(chi, r, prec, Round::Up);
    MagnitudeBound b;
    if (lo.sign() <= 0) {
        b.lo_is_zero = true;
    } else {
        b.log2_lo = log2_directed(lo, frac_bits, Round::Down);
    }
    b.log2_hi = log2_directed(hi, frac_bits, Round::Up);
    return b;
}

}  // namespace recipcert
