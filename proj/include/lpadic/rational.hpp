#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpadic {

using Int = mpz_class;
using Rat = mpq_class;

// Valuations take values in (1/2)Z plus +infinity, stored as twice the value.
struct HalfInt {
    long tw = 0;  // twice the valuation

    static constexpr long INF_TW = 1L << 50;

    static HalfInt inf() { return HalfInt{INF_TW}; }
    static HalfInt of_int(long v) { return HalfInt{2 * v}; }
    static HalfInt halves(long tw) { return HalfInt{tw}; }

    bool is_inf() const { return tw >= INF_TW; }
    bool is_integer() const { return !is_inf() && tw % 2 == 0; }
    long floor() const { return tw >= 0 ? tw / 2 : (tw - 1) / 2; }

    friend HalfInt operator+(HalfInt a, HalfInt b) {
        if (a.is_inf() || b.is_inf()) return inf();
        return HalfInt{a.tw + b.tw};
    }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.tw - b.tw}; }
    friend HalfInt operator*(long n, HalfInt a) {
        if (a.is_inf()) return inf();
        return HalfInt{n * a.tw};
    }
    friend bool operator<(HalfInt a, HalfInt b) { return a.tw < b.tw; }
    friend bool operator<=(HalfInt a, HalfInt b) { return a.tw <= b.tw; }
    friend bool operator>=(HalfInt a, HalfInt b) { return a.tw >= b.tw; }
    friend bool operator>(HalfInt a, HalfInt b) { return a.tw > b.tw; }
    friend bool operator==(HalfInt a, HalfInt b) {
        return (a.is_inf() && b.is_inf()) || a.tw == b.tw;
    }
    friend bool operator!=(HalfInt a, HalfInt b) { return !(a == b); }

    std::string str() const {
        if (is_inf()) return "inf";
        if (tw % 2 == 0) return std::to_string(tw / 2);
        return std::to_string(tw) + "/2";
    }
};

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow_int(long base, unsigned long e) { return pow_int(Int(base), e); }

// p^e for e possibly negative, as a rational.
inline Rat pow_rat(long p, long e) {
    if (e >= 0) return Rat(pow_int(p, (unsigned long)e));
    return Rat(1) / Rat(pow_int(p, (unsigned long)(-e)));
}

inline Rat pow_rat(const Rat& base, long e) {
    if (base == 0 && e < 0) throw std::invalid_argument("pow_rat: 0^negative");
    Rat r(1), b = base;
    long n = e >= 0 ? e : -e;
    for (long i = 0; i < n; i++) r *= b;
    if (e < 0) r = Rat(1) / r;
    return r;
}

inline long vp_int(const Int& n, long p) {
    if (n == 0) throw std::invalid_argument("vp_int(0)");
    Int m = n, q, r;
    long v = 0;
    Int P(p);
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), P.get_mpz_t());
        if (r != 0) break;
        m = q;
        v++;
    }
    return v;
}

// Exact p-adic valuation of a nonzero rational.
inline long vp_rat(const Rat& x, long p) {
    if (x == 0) throw std::invalid_argument("vp_rat(0)");
    return vp_int(Int(x.get_num()), p) - vp_int(Int(x.get_den()), p);
}

inline Int binom_int(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial_int(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int powmod(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int invmod(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::invalid_argument("invmod: not invertible");
    return r;
}

inline long gcd_long(long a, long b) {
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline Rat rat_from_str(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace lpadic
