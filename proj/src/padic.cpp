#include "lpadic/padic.hpp"

namespace lpadic {

Padic teichmuller(long p, const Int& a, long prec) {
    if (prec < 1) prec = 1;
    Int m = pow_int(p, (unsigned long)prec);
    Int x = mod_pos(a, m);
    if (x % p == 0) throw std::invalid_argument("teichmuller: not a unit");
    for (long i = 0; i < 2 * prec + 4; i++) {
        Int xn = powmod(x, Int(p), m);
        if (xn == x) break;
        x = xn;
    }
    return Padic(p, Rat(x), prec);
}

namespace {

long floor_log(long p, long i) {
    long fl = 0;
    while (i >= p) i /= p, fl++;
    return fl;
}

// Truncation index for log(1+t) with v_p(t) >= vt: smallest I such that
// i*vt - floor(log_p i) >= prec for all i > I.
long log_trunc(long p, long vt, long prec) {
    long I = 1;
    for (long i = 1; i <= 4 * prec + 16; i++)
        if (i * vt - floor_log(p, i) < prec) I = i;
    return I + 1;
}

long legendre_vp_fact(long p, long n) {
    long v = 0;
    while (n) v += (n /= p);
    return v;
}

}  // namespace

Padic iwasawa_log(const Padic& x, long prec) {
    long p = x.prime();
    if (p == 2) throw std::invalid_argument("iwasawa_log: p must be odd");
    if (x.valuation() != HalfInt::of_int(0)) throw std::invalid_argument("iwasawa_log: not a unit");
    long I0 = log_trunc(p, 1, prec);
    long guard = prec + floor_log(p, I0) + 2;
    Int m = pow_int(p, (unsigned long)guard);
    Rat v = x.value();
    Int xi = mod_pos(Int(v.get_num()) * invmod(Int(v.get_den()), m), m);
    Padic w = teichmuller(p, xi, guard);
    Padic xg(p, v, std::min(x.precision(), guard));
    Padic unit_one = xg * w.inverse();
    Rat t = unit_one.value() - 1;
    if (t == 0) return Padic(p, Rat(0), unit_one.precision()).with_precision(prec);
    long vt = vp_rat(t, p);
    if (vt < 1) throw std::logic_error("iwasawa_log: <x> not congruent to 1 mod p");
    long I = log_trunc(p, vt, prec);
    Padic tp(p, t, unit_one.precision());
    Padic pw = tp;
    Padic acc(p, Rat(0));
    for (long i = 1; i <= I; i++) {
        Rat c = (i % 2 == 1 ? Rat(1) : Rat(-1)) / Rat(i);
        acc = acc + Padic(p, c) * pw;
        pw = pw * tp;
    }
    return acc.with_precision(prec);
}

Padic padic_exp(const Padic& x, long prec) {
    long p = x.prime();
    if (p == 2) throw std::invalid_argument("padic_exp: p must be odd");
    long vx = x.value() == 0 ? std::max(prec, 1L) : vp_rat(x.value(), p);
    if (vx < 1) throw std::invalid_argument("padic_exp: requires v_p(x) >= 1");
    long I = 1;
    for (long i = 1; i <= 4 * prec + 16; i++)
        if (i * vx - legendre_vp_fact(p, i) < prec) I = i;
    I++;
    long guard = prec + legendre_vp_fact(p, I) + 2;
    Padic xt = x.with_precision(guard);
    Padic acc(p, Rat(1), guard);
    Padic pw(p, Rat(1));
    Rat fact(1);
    for (long i = 1; i <= I; i++) {
        pw = pw * xt;
        fact *= i;
        acc = acc + pw * Padic(p, Rat(1) / fact);
    }
    return acc.with_precision(prec);
}

Padic unit_power(const Padic& a, const Rat& s, long prec) {
    long p = a.prime();
    if (s == 0) return Padic(p, Rat(1), prec);
    long vs = vp_rat(s, p);
    // Convergence of exp(s log<a>) needs v_p(s) + 1 > 1/(p-1); over Q this
    // means v_p(s) >= 0 for odd p.
    if ((vs + 1) * (p - 1) <= 1)
        throw std::invalid_argument("unit_power: v_p(s) too small for convergence");
    long lgprec = prec + std::max(0L, -vs) + 2;
    Padic lg = iwasawa_log(a, lgprec);
    Padic arg = Padic(p, s) * lg;
    return padic_exp(arg, prec);
}

Int hensel_sqrt(long p, const Int& u, long prec) {
    if (p == 2) throw std::invalid_argument("hensel_sqrt: p must be odd");
    long upl = mpz_fdiv_ui(u.get_mpz_t(), (unsigned long)p);
    if (upl == 0) throw std::invalid_argument("hensel_sqrt: not a unit");
    long s0 = -1;
    for (long r = 1; r < p; r++) {
        if ((r * r) % p == upl) {
            s0 = r;
            break;
        }
    }
    if (s0 < 0) throw std::invalid_argument("hensel_sqrt: not a residue");
    long k = 1;
    Int x(s0);
    while (k < prec) {
        k = std::min(prec, 2 * k);
        Int m = pow_int(p, (unsigned long)k);
        x = mod_pos((x + mod_pos(u, m) * invmod(x, m)) * invmod(Int(2), m), m);
    }
    return mod_pos(x, pow_int(p, (unsigned long)prec));
}

bool quad_splits(long p, const Rat& D) {
    if (D == 0) return true;
    long e = vp_rat(D, p);
    if (e % 2 != 0) return false;
    Rat u = D / pow_rat(p, e);
    Int P(p);
    Int r = mod_pos(Int(u.get_num()) * invmod(Int(u.get_den()), P), P);
    return mpz_legendre(r.get_mpz_t(), P.get_mpz_t()) == 1;
}

Padic quad_embed(long p, const QuadExt& x, long prec) {
    if (x.b == 0) return Padic(p, x.a, prec);
    if (!quad_splits(p, x.D)) throw std::invalid_argument("quad_embed: D not split at p");
    long e = vp_rat(x.D, p);
    Rat u = x.D / pow_rat(p, e);
    long work = prec + std::max(0L, -e / 2) + std::max(0L, -vp_rat(x.b, p)) + 4;
    Int m = pow_int(p, (unsigned long)work);
    Int uu = mod_pos(Int(u.get_num()) * invmod(Int(u.get_den()), m), m);
    Int s = hensel_sqrt(p, uu, work);
    Padic sqrtD = Padic(p, Rat(s), work) * Padic(p, pow_rat(p, e / 2));
    return (Padic(p, x.a) + Padic(p, x.b) * sqrtD).with_precision(prec);
}

HalfInt quad_valuation(long p, const QuadExt& x) {
    if (x.is_zero()) return HalfInt::inf();
    if (x.b == 0) return HalfInt::of_int(vp_rat(x.a, p));
    long vD = vp_rat(x.D, p);
    long tb = 2 * vp_rat(x.b, p) + vD;  // twice v(b sqrt D)
    if (x.a == 0) return HalfInt::halves(tb);
    long ta = 2 * vp_rat(x.a, p);
    if (vD % 2 != 0) return HalfInt::halves(std::min(ta, tb));
    if (!quad_splits(p, x.D)) {
        Rat n = x.norm();
        if (n == 0) throw std::domain_error("quad_valuation: zero divisor in inert case");
        return HalfInt::halves(vp_rat(n, p));
    }
    // Split: use the fixed embedding. v(x) <= v(norm) - min coordinate
    // valuation of the conjugate, which bounds the precision needed.
    Rat n = x.norm();
    if (n == 0) throw std::domain_error("quad_valuation: zero divisor");
    long vn = vp_rat(n, p);
    long m0 = std::min(ta, tb) / 2 - 1;
    long prec = vn - m0 + 3;
    Padic em = quad_embed(p, x, prec);
    if (em.is_zero_to_precision()) throw std::logic_error("quad_valuation: precision exhausted");
    return em.valuation();
}

}  // namespace lpadic
