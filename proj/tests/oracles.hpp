#pragma once

// Test-only oracles: independent routes to expected values, kept deliberately
// naive. Acceptance and unit tests freeze outputs of these as literals.

#include "lpadic/rational.hpp"

namespace lpadic::oracles {

// Canonical residue of a p-integral rational mod p^prec.
inline Int residue_mod(const Rat& r, long p, long prec) {
    Int m = pow_int(p, (unsigned long)prec);
    Int den(r.get_den());
    return mod_pos(Int(r.get_num()) * invmod(den, m), m);
}

// Partial sum of log(1+t) = sum (-1)^(i+1) t^i / i in exact rationals.
inline Rat log_series(const Rat& t, long terms) {
    Rat acc(0), pw(1);
    for (long i = 1; i <= terms; i++) {
        pw *= t;
        acc += (i % 2 == 1 ? pw : -pw) / Rat(i);
    }
    return acc;
}

// Partial sum of exp(x) = sum x^i / i! in exact rationals.
inline Rat exp_series(const Rat& x, long terms) {
    Rat acc(1), pw(1), fact(1);
    for (long i = 1; i <= terms; i++) {
        pw *= x;
        fact *= i;
        acc += pw / fact;
    }
    return acc;
}

// Teichmuller lift via the one-shot closed form a^(p^prec) mod p^prec.
inline Int teich_closed(long p, long a, long prec) {
    Int m = pow_int(p, (unsigned long)prec);
    Int e = pow_int(p, (unsigned long)prec);
    return powmod(Int(a), e, m);
}

// Points on y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_q (q prime),
// projective count, by full enumeration.
inline long curve_count(long q, long a1, long a2, long a3, long a4, long a6) {
    auto md = [&](long v) { return ((v % q) + q) % q; };
    long n = 1;  // point at infinity
    for (long x = 0; x < q; x++)
        for (long y = 0; y < q; y++) {
            long lhs = md(y * y + a1 * x * y + a3 * y);
            long rhs = md(x * x % q * x + a2 * x * x + a4 * x + a6);
            if (lhs == md(rhs)) n++;
        }
    return n;
}

// q-expansion of Delta = q prod (1-q^n)^24 to n_max coefficients; returns
// tau(n) for 1 <= n <= n_max.
inline std::vector<Int> delta_coeffs(long n_max) {
    std::vector<Int> f(n_max + 1, 0);
    f[0] = 1;  // prod expansion before the leading q shift
    for (long n = 1; n <= n_max; n++) {
        // multiply by (1 - q^n)^24
        for (long rep = 0; rep < 24; rep++) {
            for (long i = n_max; i >= n; i--) f[i] -= f[i - n];
        }
    }
    std::vector<Int> tau(n_max + 1, 0);
    for (long n = 1; n <= n_max; n++) tau[n] = f[n - 1];
    return tau;
}

}  // namespace lpadic::oracles
