#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lpadic/padic.hpp"
#include "oracles.hpp"

#include <random>

using namespace lpadic;

TEST_CASE("precision interval rules") {
    Padic a(5, Rat(7, 3), 8);
    Padic b(5, Rat(50), 6);
    CHECK((a + b).precision() == 6);
    CHECK((a - b).precision() == 6);
    // product: min(Na + v(b), Nb + v(a)) = min(8+2, 6+0) = 6
    CHECK((a * b).precision() == 6);
    CHECK((a * b).valuation() == HalfInt::of_int(2));
    // inverse of v=2 element known mod 5^6: result known mod 5^2
    CHECK(b.inverse().precision() == 2);
    Padic exact(5, Rat(3, 4));
    CHECK(exact.exact());
    CHECK((exact * a).precision() == 8);
}

TEST_CASE("normalization preserves the residue class") {
    Padic a(7, Rat(123456789, 11), 5);
    Rat diff = a.value() - Rat(123456789, 11);
    if (diff != 0) CHECK(vp_rat(diff, 7) >= 5);
    CHECK(equal_mod_prec(a, Padic(7, Rat(123456789, 11), 5)));
}

TEST_CASE("inexact zero reports precision as valuation bound") {
    Padic z = Padic(5, Rat(625), 4) - Padic(5, Rat(625), 4);
    CHECK(z.is_zero_to_precision());
    CHECK(z.valuation() == HalfInt::of_int(4));
}

TEST_CASE("teichmuller lift") {
    // frozen from the closed-form oracle a^(p^N) mod p^N
    Int frozen("146507973");
    CHECK(oracles::teich_closed(7, 3, 10) == frozen);
    Padic w = teichmuller(7, Int(3), 10);
    CHECK(w.value() == Rat(frozen));
    for (long a = 1; a <= 6; a++) {
        Padic t = teichmuller(7, Int(a), 12);
        Padic pw(7, Rat(1));
        for (int i = 0; i < 6; i++) pw = pw * t;
        CHECK(equal_mod_prec(pw, Padic(7, Rat(1), 12)));
        CHECK(mod_pos(Int(t.value()), Int(7)) == a);
    }
}

TEST_CASE("iwasawa log frozen values") {
    // oracle: exact-rational series partial sums reduced mod p^N
    Int f5("114392430");
    CHECK(oracles::residue_mod(oracles::log_series(Rat(5), 30), 5, 12) == f5);
    Padic l5 = iwasawa_log(Padic(5, Rat(6)), 12);
    CHECK(equal_mod_prec(l5, Padic(5, Rat(f5), 12)));

    Int f3("8553");
    CHECK(oracles::residue_mod(oracles::log_series(Rat(3), 40), 3, 10) == f3);
    Padic l3 = iwasawa_log(Padic(3, Rat(4)), 10);
    CHECK(equal_mod_prec(l3, Padic(3, Rat(f3), 10)));
}

TEST_CASE("iwasawa log kills teichmuller part") {
    // log<x> for x = omega(a) * (1+p)^0 is 0; and log<a> = log<a omega-free part>
    for (long a : {2L, 3L, 4L}) {
        Padic w = teichmuller(5, Int(a), 14);
        Padic lg = iwasawa_log(w, 10);
        CHECK(lg.is_zero_to_precision());
    }
}

TEST_CASE("log is additive on products") {
    std::mt19937_64 rng(271828);
    for (int it = 0; it < 6; it++) {
        long p = (it % 2 == 0) ? 5 : 7;
        Rat x(1 + (long)(rng() % 400), 1 + (long)(rng() % 97));
        Rat y(1 + (long)(rng() % 400), 1 + (long)(rng() % 97));
        if (vp_rat(x, p) != 0) x += 1;
        if (vp_rat(y, p) != 0) y += 1;
        if (vp_rat(x, p) != 0 || vp_rat(y, p) != 0) continue;
        Padic lx = iwasawa_log(Padic(p, x), 11);
        Padic ly = iwasawa_log(Padic(p, y), 11);
        Padic lxy = iwasawa_log(Padic(p, x * y), 11);
        CHECK(equal_mod_prec(lxy, lx + ly));
    }
}

TEST_CASE("exp frozen value and log round trip") {
    Int fe("101131081");
    CHECK(oracles::residue_mod(oracles::exp_series(Rat(5), 40), 5, 12) == fe);
    Padic e = padic_exp(Padic(5, Rat(5)), 12);
    CHECK(equal_mod_prec(e, Padic(5, Rat(fe), 12)));

    // exp(log(1+pt)) = 1+pt on 1+pZ_p
    for (long t : {1L, 2L, 7L, 12L}) {
        Padic x(7, Rat(1 + 7 * t));
        Padic rt = padic_exp(iwasawa_log(x, 14), 10);
        CHECK(equal_mod_prec(rt, x.with_precision(10)));
    }
    // log(exp(x)) = x on pZ_p
    for (long t : {3L, 10L}) {
        Padic x(5, Rat(5 * t));
        Padic rt = iwasawa_log(padic_exp(x, 14), 10);
        CHECK(equal_mod_prec(rt, x.with_precision(10)));
    }
}

TEST_CASE("unit_power basics") {
    // <a>^1 = a / omega(a); integer exponents match repeated squaring
    Padic a(5, Rat(7));
    Padic u1 = unit_power(a, Rat(1), 10);
    Padic w = teichmuller(5, Int(7), 14);
    CHECK(equal_mod_prec(u1, a * w.inverse()));
    Padic u3 = unit_power(a, Rat(3), 10);
    CHECK(equal_mod_prec(u3, u1 * u1 * u1));
    CHECK(unit_power(a, Rat(0), 10).value() == 1);
    CHECK_THROWS(unit_power(a, Rat(1, 5), 10));
}

TEST_CASE("quadratic extension arithmetic") {
    Rat D(5);
    QuadExt x(Rat(1, 2), Rat(3), D), y(Rat(-2), Rat(1, 4), D);
    CHECK((x * y).a == Rat(1, 2) * Rat(-2) + D * Rat(3) * Rat(1, 4));
    CHECK((x * x.inverse()) == QuadExt(Rat(1), Rat(0), D));
    CHECK(x.norm() == Rat(1, 4) - Rat(45));
    CHECK((x + x.conj()).b == 0);
    CHECK((x * x.conj()).a == x.norm());
}

TEST_CASE("quad valuation: ramified half-integer case") {
    // alpha^2 = 5 at p = 5: v(alpha) = 1/2
    QuadExt alpha(Rat(0), Rat(1), Rat(5));
    CHECK(quad_valuation(5, alpha) == HalfInt::halves(1));
    QuadExt two_alpha(Rat(0), Rat(2), Rat(5));
    CHECK(quad_valuation(5, two_alpha) == HalfInt::halves(1));
    QuadExt mix(Rat(25), Rat(1), Rat(5));  // v = min(2, 1/2)
    CHECK(quad_valuation(5, mix) == HalfInt::halves(1));
    CHECK(quad_valuation(5, QuadExt(Rat(1, 5), Rat(1), Rat(5))) == HalfInt::of_int(-1));
}

TEST_CASE("quad valuation: inert case") {
    // D = 2 is a non-residue mod 5
    CHECK(!quad_splits(5, Rat(2)));
    QuadExt x(Rat(5), Rat(10), Rat(2));
    CHECK(quad_valuation(5, x) == HalfInt::of_int(1));
    QuadExt u(Rat(1), Rat(1), Rat(2));
    CHECK(quad_valuation(5, u) == HalfInt::of_int(0));
}

TEST_CASE("quad valuation: split case uses the fixed embedding") {
    // D = -11 is a square in Q_3 (both roots of X^2+X+3 lie in Q_3).
    CHECK(quad_splits(3, Rat(-11)));
    QuadExt alpha(Rat(-1, 2), Rat(1, 2), Rat(-11));
    QuadExt beta(Rat(-1, 2), Rat(-1, 2), Rat(-11));
    // norm 3, trace -1: one root is a unit, the other has valuation 1.
    HalfInt va = quad_valuation(3, alpha), vb = quad_valuation(3, beta);
    CHECK(((va == HalfInt::of_int(0) && vb == HalfInt::of_int(1)) ||
           (va == HalfInt::of_int(1) && vb == HalfInt::of_int(0))));
    // sum of the two valuations is v(norm)
    CHECK(va + vb == HalfInt::of_int(1));
    // embedding is a ring map
    Padic ea = quad_embed(3, alpha, 9), eb = quad_embed(3, beta, 9);
    CHECK(equal_mod_prec(ea + eb, Padic(3, Rat(-1), 9)));
    CHECK(equal_mod_prec(ea * eb, Padic(3, Rat(3), 9)));
}

TEST_CASE("hensel sqrt deterministic branch") {
    Int s = hensel_sqrt(7, Int(2), 8);
    Int m = pow_int(7, 8);
    CHECK(mod_pos(s * s - 2, m) == 0);
    CHECK(mod_pos(s, Int(7)) == 3);  // 3^2 = 2 mod 7, and 3 < 4
    CHECK_THROWS(hensel_sqrt(5, Int(2), 6));
}
