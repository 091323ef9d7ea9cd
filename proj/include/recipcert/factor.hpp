#pragma once

// Factorization of integer polynomials into irreducibles: squarefree
// decomposition (Yun), factorization modulo a small prime (deterministic
// Berlekamp), quadratic Hensel lifting along a factor tree, and subset
// recombination with the Mignotte coefficient bound.  Degrees at play are
// desk scale (cap 24 by default), which keeps lattice reduction unnecessary.

#include "recipcert/polyz.hpp"

#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace recipcert {

inline constexpr unsigned kDefaultDegreeCap = 24;

namespace fp {

// Dense polynomials over F_p for small odd p; coefficients in [0, p).
using Poly = std::vector<std::int64_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw ComputationError("fp inverse of noninvertible element");
    return t < 0 ? t + p : t;
}

inline Poly from_int_poly(const IntPolynomial& f, std::int64_t p) {
    Poly a(static_cast<std::size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) {
        BigInt r = f[static_cast<std::size_t>(i)] % p;
        if (r.sign() < 0) r += p;
        a[static_cast<std::size_t>(i)] = r.convert_to<std::int64_t>();
    }
    trim(a);
    return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
}

inline Poly sub(const Poly& a, const Poly& b, std::int64_t p) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::int64_t x = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        c[i] = x < 0 ? x + p : x;
    }
    trim(c);
    return c;
}

inline Poly scale(const Poly& a, std::int64_t s, std::int64_t p) {
    Poly c = a;
    s %= p;
    if (s < 0) s += p;
    for (auto& x : c) x = (x * s) % p;
    trim(c);
    return c;
}

inline Poly make_monic(const Poly& a, std::int64_t p) {
    if (a.empty()) return a;
    return scale(a, inv_mod(a.back(), p), p);
}

inline std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::int64_t p) {
    if (b.empty()) throw InvalidInput("fp division by zero polynomial");
    Poly r = a, q;
    const int db = degree(b);
    const std::int64_t binv = inv_mod(b.back(), p);
    if (degree(a) >= db) q.assign(static_cast<std::size_t>(degree(a) - db + 1), 0);
    while (degree(r) >= db) {
        const int k = degree(r) - db;
        const std::int64_t c = (r.back() * binv) % p;
        q[static_cast<std::size_t>(k)] = c;
        for (int i = 0; i <= db; ++i) {
            std::int64_t x = (r[static_cast<std::size_t>(i + k)] -
                              c * b[static_cast<std::size_t>(i)]) % p;
            r[static_cast<std::size_t>(i + k)] = x < 0 ? x + p : x;
        }
        trim(r);
    }
    trim(q);
    return {q, r};
}

inline Poly gcd(Poly a, Poly b, std::int64_t p) {
    while (!b.empty()) {
        auto [q, r] = divrem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

// Monic g = gcd(a,b) plus s, t with s*a + t*b = g.
inline std::array<Poly, 3> xgcd(const Poly& a, const Poly& b, std::int64_t p) {
    Poly r0 = a, r1 = b;
    Poly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1, p);
        Poly ns = sub(s0, mul(q, s1, p), p);
        Poly nt = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(ns);
        t0 = std::move(t1); t1 = std::move(nt);
    }
    if (r0.empty()) throw ComputationError("fp xgcd of zero polynomials");
    std::int64_t inv = inv_mod(r0.back(), p);
    return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

inline Poly derivative(const Poly& a, std::int64_t p) {
    if (a.size() <= 1) return {};
    Poly c(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        c[i - 1] = (a[i] * static_cast<std::int64_t>(i % static_cast<std::size_t>(p))) % p;
    trim(c);
    return c;
}

// x^e mod f by square and multiply.
inline Poly pow_x_mod(std::uint64_t e, const Poly& f, std::int64_t p) {
    Poly base{0, 1};
    Poly acc{1};
    while (e) {
        if (e & 1) acc = divrem(mul(acc, base, p), f, p).second;
        e >>= 1;
        if (e) base = divrem(mul(base, base, p), f, p).second;
    }
    return acc;
}

// Deterministic Berlekamp factorization of a monic squarefree f over F_p.
inline std::vector<Poly> berlekamp(const Poly& f, std::int64_t p) {
    const int m = degree(f);
    if (m <= 1) return {f};
    // Frobenius matrix: column i holds x^(p*i) mod f.
    std::vector<Poly> cols(static_cast<std::size_t>(m));
    Poly xp = pow_x_mod(static_cast<std::uint64_t>(p), f, p);
    cols[0] = Poly{1};
    for (int i = 1; i < m; ++i)
        cols[static_cast<std::size_t>(i)] =
            divrem(mul(cols[static_cast<std::size_t>(i - 1)], xp, p), f, p).second;
    // B = Q - I, row-major.
    std::vector<std::vector<std::int64_t>> B(
        static_cast<std::size_t>(m), std::vector<std::int64_t>(static_cast<std::size_t>(m), 0));
    for (int j = 0; j < m; ++j) {
        const Poly& cj = cols[static_cast<std::size_t>(j)];
        for (int i = 0; i < m; ++i) {
            std::int64_t v = i <= degree(cj) ? cj[static_cast<std::size_t>(i)] : 0;
            if (i == j) v = (v - 1) % p;
            if (v < 0) v += p;
            B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        }
    }
    // Nullspace basis of B by Gaussian elimination.
    std::vector<int> pivot_col_of_row(static_cast<std::size_t>(m), -1);
    std::vector<bool> col_is_pivot(static_cast<std::size_t>(m), false);
    int rank = 0;
    for (int col = 0; col < m && rank < m; ++col) {
        int sel = -1;
        for (int row = rank; row < m; ++row)
            if (B[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                sel = row;
                break;
            }
        if (sel < 0) continue;
        std::swap(B[static_cast<std::size_t>(sel)], B[static_cast<std::size_t>(rank)]);
        const std::int64_t inv = inv_mod(B[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p);
        for (int j = 0; j < m; ++j)
            B[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] =
                (B[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] * inv) % p;
        for (int row = 0; row < m; ++row) {
            if (row == rank) continue;
            const std::int64_t c = B[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (c == 0) continue;
            for (int j = 0; j < m; ++j) {
                std::int64_t x = (B[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -
                                  c * B[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)]) % p;
                B[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] = x < 0 ? x + p : x;
            }
        }
        pivot_col_of_row[static_cast<std::size_t>(rank)] = col;
        col_is_pivot[static_cast<std::size_t>(col)] = true;
        ++rank;
    }
    std::vector<Poly> basis;
    for (int col = 0; col < m; ++col) {
        if (col_is_pivot[static_cast<std::size_t>(col)]) continue;
        Poly v(static_cast<std::size_t>(m), 0);
        v[static_cast<std::size_t>(col)] = 1;
        for (int row = 0; row < rank; ++row) {
            const int pc = pivot_col_of_row[static_cast<std::size_t>(row)];
            std::int64_t x = (p - B[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]) % p;
            v[static_cast<std::size_t>(pc)] = x;
        }
        trim(v);
        basis.push_back(std::move(v));
    }
    const std::size_t r = basis.size();  // number of irreducible factors
    std::vector<Poly> factors{f};
    if (r <= 1) return factors;
    for (const Poly& v : basis) {
        if (factors.size() >= r) break;
        if (degree(v) < 1) continue;  // the constant vector splits nothing
        std::vector<Poly> next;
        for (const Poly& u : factors) {
            if (degree(u) <= 1) {
                next.push_back(u);
                continue;
            }
            Poly rest = u;
            for (std::int64_t s = 0; s < p && degree(rest) > 0; ++s) {
                Poly vs = v;
                if (vs.empty()) vs.push_back(0);
                vs[0] = (vs[0] + p - s) % p;
                trim(vs);
                Poly g = gcd(rest, vs, p);
                if (degree(g) > 0 && degree(g) < degree(rest)) {
                    next.push_back(g);
                    rest = divrem(rest, g, p).first;
                }
            }
            if (degree(rest) > 0) next.push_back(make_monic(rest, p));
        }
        factors = std::move(next);
    }
    return factors;
}

}  // namespace fp

// ---------------------------------------------------------------------------
// Arithmetic on integer polynomials modulo m (coefficients in [0, m)).
// ---------------------------------------------------------------------------
namespace modm {

inline IntPolynomial reduce(const IntPolynomial& a, const BigInt& m) {
    std::vector<BigInt> c(static_cast<std::size_t>(a.degree() + 1));
    for (int i = 0; i <= a.degree(); ++i) {
        BigInt r = a[static_cast<std::size_t>(i)] % m;
        if (r.sign() < 0) r += m;
        c[static_cast<std::size_t>(i)] = r;
    }
    return IntPolynomial(std::move(c));
}

inline IntPolynomial symmetric(const IntPolynomial& a, const BigInt& m) {
    std::vector<BigInt> c(static_cast<std::size_t>(a.degree() + 1));
    const BigInt half = m / 2;
    for (int i = 0; i <= a.degree(); ++i) {
        BigInt r = a[static_cast<std::size_t>(i)] % m;
        if (r.sign() < 0) r += m;
        if (r > half) r -= m;
        c[static_cast<std::size_t>(i)] = r;
    }
    return IntPolynomial(std::move(c));
}

inline IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b, const BigInt& m) {
    return reduce(a * b, m);
}
inline IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b, const BigInt& m) {
    return reduce(a + b, m);
}
inline IntPolynomial sub(const IntPolynomial& a, const IntPolynomial& b, const BigInt& m) {
    return reduce(a - b, m);
}

inline BigInt inv_mod(const BigInt& a, const BigInt& m) {
    BigInt t = 0, nt = 1, r = m, nr = a % m;
    if (nr.sign() < 0) nr += m;
    while (!nr.is_zero()) {
        BigInt q = r / nr;
        BigInt tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw ComputationError("modular inverse does not exist");
    if (t.sign() < 0) t += m;
    return t;
}

// Division by a monic polynomial, coefficients mod m.
inline std::pair<IntPolynomial, IntPolynomial> divrem_monic(const IntPolynomial& a,
                                                            const IntPolynomial& b,
                                                            const BigInt& m) {
    if (b.is_zero() || b.leading() != 1)
        throw InvalidInput("divrem_monic requires a monic divisor");
    std::vector<BigInt> r(static_cast<std::size_t>(a.degree() + 1));
    for (int i = 0; i <= a.degree(); ++i) r[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)];
    const int db = b.degree();
    std::vector<BigInt> q;
    if (a.degree() >= db) q.assign(static_cast<std::size_t>(a.degree() - db + 1), BigInt(0));
    for (int i = a.degree(); i >= db; --i) {
        BigInt c = r[static_cast<std::size_t>(i)] % m;
        if (c.sign() < 0) c += m;
        q[static_cast<std::size_t>(i - db)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j) {
            BigInt x = (r[static_cast<std::size_t>(i - db + j)] - c * b[static_cast<std::size_t>(j)]) % m;
            if (x.sign() < 0) x += m;
            r[static_cast<std::size_t>(i - db + j)] = x;
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

}  // namespace modm

// ---------------------------------------------------------------------------
// Hensel lifting.
// ---------------------------------------------------------------------------

struct HenselPair {
    IntPolynomial g, h, s, t;
};

// One quadratic step: from a factorization and Bezout pair mod m to mod m^2.
// Preconditions: f = g*h (mod m), s*g + t*h = 1 (mod m), h monic,
// deg f = deg g + deg h, deg s < deg h, deg t < deg g.
inline HenselPair hensel_step(const IntPolynomial& f, const HenselPair& in, const BigInt& m) {
    const BigInt m2 = m * m;
    using namespace modm;
    IntPolynomial e = sub(reduce(f, m2), mul(in.g, in.h, m2), m2);
    auto [q, r] = divrem_monic(mul(in.s, e, m2), in.h, m2);
    IntPolynomial g1 = add(in.g, add(mul(in.t, e, m2), mul(q, in.g, m2), m2), m2);
    IntPolynomial h1 = add(in.h, r, m2);
    IntPolynomial b = sub(add(mul(in.s, g1, m2), mul(in.t, h1, m2), m2),
                          IntPolynomial::constant(1), m2);
    auto [c, d] = divrem_monic(mul(in.s, b, m2), h1, m2);
    IntPolynomial s1 = sub(in.s, d, m2);
    IntPolynomial t1 = sub(in.t, add(mul(in.t, b, m2), mul(c, g1, m2), m2), m2);
    return {g1, h1, s1, t1};
}

namespace detail {

inline IntPolynomial fp_to_int(const fp::Poly& a) {
    std::vector<BigInt> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    return IntPolynomial(std::move(c));
}

// Lift the monic modular factors of f (f = lc(f) * prod facs mod p, facs
// monic, pairwise coprime) to monic factors mod P, P = p^(2^t) >= target.
inline void lift_tree(const IntPolynomial& f, std::span<const fp::Poly> facs,
                      std::int64_t p, const BigInt& P,
                      std::vector<IntPolynomial>& out) {
    if (facs.size() == 1) {
        // monic lift: f * lc(f)^{-1} mod P
        BigInt inv = modm::inv_mod(f.leading() % P, P);
        out.push_back(modm::reduce(inv * f, P));
        return;
    }
    const std::size_t half = facs.size() / 2;
    auto left = facs.subspan(0, half);
    auto right = facs.subspan(half);
    fp::Poly gl{1}, hr{1};
    for (const auto& fac : left) gl = fp::mul(gl, fac, p);
    for (const auto& fac : right) hr = fp::mul(hr, fac, p);
    BigInt lcf = f.leading() % p;
    if (lcf.sign() < 0) lcf += p;
    gl = fp::scale(gl, lcf.convert_to<std::int64_t>(), p);
    auto [one, s, t] = fp::xgcd(gl, hr, p);
    if (fp::degree(one) != 0)
        throw ComputationError("hensel tree: modular factors not coprime");
    HenselPair pair{fp_to_int(gl), fp_to_int(hr), fp_to_int(s), fp_to_int(t)};
    BigInt m = p;
    while (m < P) {
        pair = hensel_step(f, pair, m);
        m *= m;
    }
    // m == P by construction (P is p^(2^t)).
    lift_tree(pair.g, left, p, P, out);
    lift_tree(pair.h, right, p, P, out);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Zassenhaus factorization of a primitive squarefree polynomial with
// positive leading coefficient and nonzero constant term.
// ---------------------------------------------------------------------------

inline std::vector<IntPolynomial> zassenhaus_squarefree(const IntPolynomial& q) {
    if (q.degree() <= 1) return {q};
    // Prime selection: p coprime to lc and with q squarefree mod p.
    std::int64_t p = 0;
    fp::Poly fbar;
    for (std::int64_t cand = 3; cand < 20000; cand = next_prime_after(cand)) {
        if (BigInt(q.leading() % cand).is_zero()) continue;
        fp::Poly fb = fp::from_int_poly(q, cand);
        fp::Poly g = fp::gcd(fb, fp::derivative(fb, cand), cand);
        if (fp::degree(g) == 0) {
            p = cand;
            fbar = fp::make_monic(fb, cand);
            break;
        }
    }
    if (p == 0) throw ComputationError("no good prime found for factorization");

    std::vector<fp::Poly> mod_factors = fp::berlekamp(fbar, p);
    if (mod_factors.size() == 1) return {q};  // irreducible mod p implies irreducible
    // Deterministic order for the lifting tree and recombination.
    std::sort(mod_factors.begin(), mod_factors.end(),
              [](const fp::Poly& a, const fp::Poly& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });

    // Mignotte bound: coefficients of lc(q) * (any monic rational factor)
    // are below sqrt(d+1) * 2^d * maxcoeff * |lc|.
    const int d = q.degree();
    BigInt maxc = 0;
    for (int i = 0; i <= d; ++i) maxc = std::max(maxc, abs_val(q[static_cast<std::size_t>(i)]));
    BigInt bound = (isqrt(BigInt(d + 1)) + 1) * (BigInt(1) << static_cast<unsigned>(d)) *
                   maxc * abs_val(q.leading());
    BigInt target = 2 * bound + 1;
    BigInt P = p;
    while (P < target) P *= P;

    std::vector<IntPolynomial> lifted;
    detail::lift_tree(modm::reduce(q, P), mod_factors, p, P, lifted);

    // Subset recombination.
    std::vector<IntPolynomial> result;
    IntPolynomial current = q;
    std::vector<IntPolynomial> mods = std::move(lifted);
    std::size_t s = 1;
    while (2 * s <= mods.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            IntPolynomial cand = IntPolynomial::constant(current.leading() % P);
            for (std::size_t i : idx) cand = modm::mul(cand, mods[i], P);
            cand = modm::symmetric(cand, P);
            IntPolynomial g = cand.primitive_normalized();
            if (divides(g, current)) {
                result.push_back(g);
                current = divide_exact(current, g).primitive_normalized();
                std::vector<IntPolynomial> rest;
                for (std::size_t i = 0; i < mods.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        rest.push_back(mods[i]);
                mods = std::move(rest);
                found = true;
                break;
            }
            // next combination
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == mods.size() - s + (k - 1)) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (current.degree() > 0) result.push_back(current.primitive_normalized());
    return result;
}

// Yun's squarefree decomposition of a primitive polynomial with positive
// leading coefficient: p = prod part_i ^ mult_i with parts squarefree and
// pairwise coprime.
inline std::vector<std::pair<IntPolynomial, unsigned>> yun_decomposition(
    const IntPolynomial& p) {
    std::vector<std::pair<IntPolynomial, unsigned>> out;
    IntPolynomial u = gcd_poly(p, p.derivative());
    if (u.degree() == 0) {
        out.emplace_back(p, 1);
        return out;
    }
    IntPolynomial v = divide_exact(p, u);
    IntPolynomial w = divide_exact(p.derivative(), u);
    unsigned i = 1;
    while (v.degree() > 0) {
        IntPolynomial z = w - v.derivative();
        IntPolynomial h = gcd_poly(v, z);
        if (h.degree() > 0) out.emplace_back(h, i);
        if (h.degree() == 0 && z.is_zero()) {
            // v consists of higher multiplicities only; terminate via gcd chain
        }
        v = divide_exact(v, h);
        w = divide_exact(z, h);
        ++i;
    }
    return out;
}

struct FactorMultiplicity {
    IntPolynomial factor;
    unsigned multiplicity;
};

// Complete factorization into irreducible primitive factors, each with its
// multiplicity; the product over factors^multiplicity equals p up to content.
inline std::vector<FactorMultiplicity> factor(const IntPolynomial& p,
                                              unsigned degree_cap = kDefaultDegreeCap) {
    if (p.is_zero()) throw InvalidInput("factor of zero polynomial");
    if (p.degree() > static_cast<int>(degree_cap))
        throw DegreeCapExceeded("degree " + std::to_string(p.degree()) +
                                " exceeds factorization cap " + std::to_string(degree_cap));
    std::vector<FactorMultiplicity> out;
    IntPolynomial pp = p.primitive_normalized();
    if (pp.degree() == 0) return out;
    for (auto& [sf, mult] : yun_decomposition(pp)) {
        IntPolynomial part = sf;
        if (part[0].is_zero()) {  // pull out the factor x
            out.push_back({IntPolynomial({0, 1}), mult});
            std::vector<BigInt> c(part.coeffs().begin() + 1, part.coeffs().end());
            part = IntPolynomial(std::move(c));
        }
        if (part.degree() < 1) continue;
        for (auto& irr : zassenhaus_squarefree(part)) out.push_back({irr, mult});
    }
    std::sort(out.begin(), out.end(), [](const FactorMultiplicity& a, const FactorMultiplicity& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        if (a.factor.coeffs() != b.factor.coeffs()) return a.factor.coeffs() < b.factor.coeffs();
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

inline bool is_irreducible(const IntPolynomial& p,
                           unsigned degree_cap = kDefaultDegreeCap) {
    if (p.is_zero() || p.degree() < 1) return false;
    auto f = factor(p, degree_cap);
    return f.size() == 1 && f[0].multiplicity == 1;
}

}  // namespace recipcert
