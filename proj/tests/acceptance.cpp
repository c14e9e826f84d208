// Acceptance gate: one line per criterion, each timed against its budget and
// decided by exact checks only. Exits with the number of failed criteria.

#include "lpadic/report.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace lpadic;

namespace {

Rat frac(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

struct Outcome {
    bool pass = true;
    std::string witness;
};

void fold(Outcome& o, const std::vector<Verdict>& vs) {
    for (const Verdict& v : vs)
        if (!v.pass && o.pass) {
            o.pass = false;
            o.witness = v.name + (v.witness.empty() ? "" : ": " + v.witness);
        }
}

void expect(Outcome& o, bool cond, const std::string& what) {
    if (!cond && o.pass) {
        o.pass = false;
        o.witness = what;
    }
}

// Gauss sum as a literal character sum over residues, independent of the
// integration routines: sum_x chi(x) zeta_{p^r}^{-x}.
Cyclo gauss_lit(const DirichletChar& chi) {
    long p = chi.prime(), r = chi.conductor_exponent();
    DirichletChar prim = chi.primitive();
    long pr = 1;
    for (long i = 0; i < r; ++i) pr *= p;
    Cyclo acc = Cyclo::zero();
    for (long x = 1; x < pr; ++x) {
        if (x % p == 0) continue;
        acc = acc + prim.value(x) * Cyclo::zeta(pr, pr - x);
    }
    return acc;
}

int failures = 0;

void criterion(const std::string& name, double budget_s, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.witness = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && secs > budget_s) {
        o.pass = false;
        o.witness = "exceeded time budget of " + std::to_string(budget_s) + "s";
    }
    std::printf("%s: %s (%.2fs)\n", name.c_str(), o.pass ? "pass" : "FAIL", secs);
    if (!o.pass) {
        std::printf("    witness: %s\n", o.witness.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

Fixture fixture_from_curve_oracle(Outcome& o) {
    // a_q = q + 1 - #E(F_q) for y^2 + y = x^3 - x^2 - 10x - 20, recomputed by
    // full point enumeration and cross-checked against the frozen values
    const long qs[] = {2, 3, 5, 7, 13};
    const long frozen[] = {-2, -1, 1, -2, 4};
    Fixture fx;
    fx.level = 11;
    fx.weight_k = 0;
    for (int i = 0; i < 5; ++i) {
        long count = oracles::curve_count(qs[i], 0, -1, 1, -10, -20);
        long aq = qs[i] + 1 - count;
        expect(o, aq == frozen[i],
               "a_" + std::to_string(qs[i]) + " from point count = " + std::to_string(aq));
        fx.hecke_targets.push_back({qs[i], Rat(aq)});
    }
    return fx;
}

Fixture fixture_from_delta_oracle(Outcome& o) {
    std::vector<Int> tau = oracles::delta_coeffs(5);
    expect(o, tau[2] == -24 && tau[3] == 252 && tau[5] == 4830, "tau(q) product expansion");
    Fixture fx;
    fx.level = 1;
    fx.weight_k = 10;
    for (long q : {2L, 3L, 5L}) fx.hecke_targets.push_back({q, Rat(tau[(size_t)q])});
    return fx;
}

Fixture fixture_11a_frozen() {
    Fixture fx;
    fx.level = 11;
    fx.weight_k = 0;
    fx.hecke_targets = {{2, Rat(-2)}, {3, Rat(-1)}, {5, Rat(1)}, {7, Rat(-2)}, {13, Rat(4)}};
    return fx;
}

}  // namespace

int main() {
    criterion("AC1 local-integral closed forms", 10.0, [] {
        Outcome o;
        fold(o, suite_local_integrals({3, 5, 7}, 3, -4, 2, 2));
        return o;
    });

    criterion("AC2 gauss-sum identity", 10.0, [] {
        Outcome o;
        fold(o, suite_gauss({{3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}}));
        return o;
    });

    criterion("AC3 key decomposition", 30.0, [] {
        Outcome o;
        fold(o, suite_keyprop({3, 5}, 3));
        return o;
    });

    criterion("AC4 euler closed forms", 120.0, [] {
        Outcome o;
        fold(o, suite_euler({3, 5}, {0L, 2L}, 2));

        // pin the double-root factors to their displayed closed forms, built
        // here from scratch: unramified
        //   (1-1/p)^{-1} (p^{k-m} alpha^{-1} + p^{m-k-1} alpha - 2/p),
        // ramified conductor p^r
        //   -r (1-1/p)^{-1} p^{r(m-k-1)} alpha^r tau(chi0),
        // with alpha = p^{(k+1)/2} the double root
        for (long p : {3L, 5L}) {
            for (long k : {0L, 2L}) {
                HalfPowerScalar alpha = HalfPowerScalar::half_power(p, k + 1);
                for (long m = 0; m <= k; ++m) {
                    EulerParams prm;
                    prm.kind = LocalCaseKind::EXTREMAL;
                    prm.p = p;
                    prm.k = k;
                    prm.m = m;
                    prm.chi_i = LocalCharacter::unramified(p, HalfPowerScalar::half_power(p, -k),
                                                           HalfInt::halves(-k));
                    prm.chi0 = DirichletChar(p, 0, 0);
                    HalfPowerScalar unram =
                        frac(p, p - 1) *
                        (pow_rat(p, k - m) * alpha.inverse() + pow_rat(p, m - k - 1) * alpha -
                         HalfPowerScalar::from_rat(p, frac(2, p)));
                    expect(o, euler_factor_closed(prm) == unram,
                           "unramified display p=" + std::to_string(p) + " k=" + std::to_string(k) +
                               " m=" + std::to_string(m));
                    for (long r = 1; r <= 2; ++r) {
                        DirichletChar chi0(p, r, 1);  // faithful index: conductor exactly p^r
                        prm.chi0 = chi0;
                        HalfPowerScalar ram =
                            Rat(-r) * (frac(p, p - 1) *
                                       (pow_rat(p, r * (m - k - 1)) *
                                        (alpha.pow(r) *
                                         HalfPowerScalar::from_cyclo(p, gauss_lit(chi0)))));
                        expect(o, euler_factor_closed(prm) == ram,
                               "ramified display p=" + std::to_string(p) + " k=" +
                                   std::to_string(k) + " m=" + std::to_string(m) +
                                   " r=" + std::to_string(r));
                    }
                }
            }
        }

        // the worked value at p = 5, k = m = 0: (sqrt(5) - 1)/2
        EulerParams prm;
        prm.kind = LocalCaseKind::EXTREMAL;
        prm.p = 5;
        prm.k = 0;
        prm.m = 0;
        prm.chi_i = LocalCharacter::unramified(5, HalfPowerScalar::one(5), HalfInt::of_int(0));
        prm.chi0 = DirichletChar(5, 0, 0);
        HalfPowerScalar golden =
            frac(1, 2) * (HalfPowerScalar::theta(5) - HalfPowerScalar::one(5));
        expect(o, euler_factor_closed(prm) == golden, "(sqrt(5)-1)/2 value");
        EulerResult oracle = euler_factor_oracle(prm);
        expect(o, oracle.value == golden && oracle.formal_tail, "(sqrt(5)-1)/2 oracle route");
        return o;
    });

    criterion("AC5 model Hecke relations", 5.0, [] {
        Outcome o;
        fold(o, suite_kirillov({3, 5}));
        return o;
    });

    criterion("AC6 eigensymbols vs point-count and product oracles", 60.0, [] {
        Outcome o;
        Fixture f11 = fixture_from_curve_oracle(o);
        Fixture fd = fixture_from_delta_oracle(o);
        if (!o.pass) return o;
        fold(o, suite_symbols(f11, +1));
        fold(o, suite_symbols(f11, -1));
        fold(o, suite_symbols(fd, +1));
        fold(o, suite_symbols(fd, -1));
        return o;
    });

    criterion("AC7 p-stabilization eigenrelation", 60.0, [] {
        Outcome o;
        Fixture f11 = fixture_11a_frozen();
        fold(o, suite_stabilize(f11, {3, 7}));
        // the p = 3 roots of X^2 + X + 3 generate a genuine quadratic extension
        auto rts = quadratic_roots(Rat(-1), Rat(3));
        expect(o, !rts.first.is_rational(), "p=3 roots are irrational");
        return o;
    });

    criterion("AC8 classical measure: additivity, admissibility, ratio", 120.0, [] {
        Outcome o;
        fold(o, suite_measure(fixture_11a_frozen(), 3, 4));
        return o;
    });

    criterion("AC9 extremal seeds: relations, admissibility, sharpness", 120.0, [] {
        Outcome o;
        std::vector<ExtremalJob> jobs = {{3, 0, 4, 1}, {3, 0, 4, 2}, {3, 2, 4, 7},
                                         {5, 0, 3, 11}, {5, 2, 3, 13}};
        fold(o, suite_extremal(jobs, true));
        return o;
    });

    criterion("AC10 overconvergent extension and L-values", 180.0, [] {
        Outcome o;
        fold(o, suite_av(fixture_11a_frozen(), 3, 4));

        // depth stability of the extremal L-function, over Q so the series
        // evaluation applies: k = 1, alpha = 3, depths 3 and 4 of one draw
        QuadExt alpha = QuadExt::rational(Rat(3), Rat(3));
        MomentTable T4 = extremal_measure(synthetic_extremal_seed(3, 1, alpha, 4, 5));
        MomentTable T3 = extremal_measure(synthetic_extremal_seed(3, 1, alpha, 3, 5));
        LpValue v0 = lp_eval(T4, Padic(3, Rat(0)), 6);
        QuadExt mass = integrate_character(T4, DirichletChar(3, 0, 0), 0).c[0];
        expect(o, v0.ok && equal_mod_prec(v0.value, quad_embed(3, mass, 6)),
               "extremal total mass at s = 0");
        LpValue a4 = lp_eval(T4, Padic(3, Rat(2)), 1);
        LpValue a3 = lp_eval(T3, Padic(3, Rat(2)), 1);
        expect(o, a4.ok && a3.ok, "extremal L-value certificates at s = 2");
        expect(o, equal_mod_prec(a3.value.with_precision(1), a4.value.with_precision(1)),
               "extremal L-value depth stability");
        expect(o, !(a4.certified < a3.certified), "deeper table certifies at least as much");
        return o;
    });

    if (failures == 0)
        std::printf("acceptance: all 10 criteria pass\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures;
}
