#include "lpadic/kirillov.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lpadic {

namespace {

Rat vol_inv(long p) { return Rat(p, p - 1); }  // (1 - 1/p)^{-1}

void check_same_p(long a, long b, const char* where) {
    if (a != b) throw std::invalid_argument(std::string(where) + ": mismatched primes");
}

long pow_long(long p, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r *= p;
    return r;
}

// eta(u) for any integer u that is a unit mod p
Cyclo eta_at(const DirichletChar& eta, long u) {
    if (eta.r() == 0) return Cyclo::one();
    long pr = pow_long(eta.prime(), eta.r());
    long uu = ((u % pr) + pr) % pr;
    return eta.value(uu);
}

// acc += scale * x * y over the field F (moduli of x and y divide F's)
void add_product(const CycloField& F, std::vector<Rat>& acc, const Cyclo& x, const Cyclo& y,
                 const Rat& scale) {
    if (scale == 0) return;
    long L = F.modulus();
    long sx = L / x.modulus(), sy = L / y.modulus();
    const std::vector<Rat>& xc = x.coeffs();
    const std::vector<Rat>& yc = y.coeffs();
    for (long i = 0; i < (long)xc.size(); ++i) {
        if (xc[(size_t)i] == 0) continue;
        Rat xs = scale * xc[(size_t)i];
        for (long j = 0; j < (long)yc.size(); ++j)
            if (yc[(size_t)j] != 0) F.add_monomial(acc, i * sx + j * sy, xs * yc[(size_t)j]);
    }
}

std::vector<TailTemplate> merge_tails(std::vector<TailTemplate> v) {
    std::vector<TailTemplate> out;
    for (auto& t : v) {
        if (t.coeff.is_zero()) continue;
        t.eta = t.eta.primitive();
        bool merged = false;
        for (auto& o : out) {
            if (o.d == t.d && o.eta.same_character(t.eta) && o.cp == t.cp) {
                o.coeff = o.coeff + t.coeff;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(std::move(t));
    }
    std::vector<TailTemplate> nz;
    for (auto& o : out)
        if (!o.coeff.is_zero()) nz.push_back(std::move(o));
    return nz;
}

}  // namespace

// ---------------------------------------------------------------------------
// HalfPowerScalar
// ---------------------------------------------------------------------------

HalfPowerScalar HalfPowerScalar::half_power(long p, long t) {
    long s = ((t % 2) + 2) % 2;
    long q = (t - s) / 2;
    Rat pq = pow_rat(p, q);
    if (s == 0) return from_rat(p, pq);
    return {p, Cyclo::zero(), Cyclo::rational(pq)};
}

HalfPowerScalar HalfPowerScalar::inverse() const {
    // (a + b theta)^{-1} = (a - b theta) / (a^2 - p b^2)
    Cyclo den = a * a - Rat(p) * (b * b);
    Cyclo dinv = den.inverse();
    return {p, a * dinv, Rat(-1) * (b * dinv)};
}

HalfPowerScalar HalfPowerScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    HalfPowerScalar r = one(p);
    HalfPowerScalar base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

HalfPowerScalar operator+(const HalfPowerScalar& x, const HalfPowerScalar& y) {
    check_same_p(x.p, y.p, "HalfPowerScalar::+");
    return {x.p, x.a + y.a, x.b + y.b};
}

HalfPowerScalar operator-(const HalfPowerScalar& x, const HalfPowerScalar& y) {
    check_same_p(x.p, y.p, "HalfPowerScalar::-");
    return {x.p, x.a - y.a, x.b - y.b};
}

HalfPowerScalar operator-(const HalfPowerScalar& x) { return {x.p, -x.a, -x.b}; }

HalfPowerScalar operator*(const HalfPowerScalar& x, const HalfPowerScalar& y) {
    check_same_p(x.p, y.p, "HalfPowerScalar::*");
    return {x.p, x.a * y.a + Rat(x.p) * (x.b * y.b), x.a * y.b + x.b * y.a};
}

HalfPowerScalar operator*(const Cyclo& c, const HalfPowerScalar& y) { return {y.p, c * y.a, c * y.b}; }

HalfPowerScalar operator*(const Rat& r, const HalfPowerScalar& y) { return {y.p, r * y.a, r * y.b}; }

bool operator==(const HalfPowerScalar& x, const HalfPowerScalar& y) {
    return x.p == y.p && x.a == y.a && x.b == y.b;
}

std::string HalfPowerScalar::str() const {
    std::ostringstream os;
    os << a.str();
    if (!b.is_zero()) os << " + (" << b.str() << ")*p^(1/2)";
    return os.str();
}

// ---------------------------------------------------------------------------
// PsiTemplate
// ---------------------------------------------------------------------------

PsiTemplate PsiTemplate::extremal(long p, const DirichletChar& eta,
                                  const HalfPowerScalar& chi_at_p) {
    PsiTemplate t;
    t.kind = PsiKind::VP_TIMES_CHARACTER;
    t.eta = eta;
    t.cp = Rat(1, p) * (HalfPowerScalar::theta(p) * chi_at_p);
    t.eps_p = chi_at_p * chi_at_p;
    return t;
}

// ---------------------------------------------------------------------------
// KirillovFunction
// ---------------------------------------------------------------------------

KirillovFunction KirillovFunction::zero_function(long p) {
    KirillovFunction F;
    F.p = p;
    F.m = 0;
    F.n_lo = 0;
    F.n_hi = -1;
    return F;
}

long KirillovFunction::needed_level() const {
    long lev = m;
    for (const auto& t : tails) lev = std::max(lev, t.eta.conductor_exponent());
    return lev;
}

HalfPowerScalar KirillovFunction::eval(long n, long u) const {
    if (n < n_lo) return HalfPowerScalar::zero(p);
    if (n <= n_hi) {
        long idx = LocallyConstantFn::unit_index(p, m, u);
        return shells[(size_t)(n - n_lo)][(size_t)idx];
    }
    HalfPowerScalar v = HalfPowerScalar::zero(p);
    for (const auto& t : tails) {
        HalfPowerScalar term = eta_at(t.eta, u) * (t.coeff * t.cp.pow(n));
        if (t.d == 1) term = Rat(n) * term;
        v = v + term;
    }
    return v;
}

bool KirillovFunction::is_zero() const {
    for (const auto& row : shells)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return merge_tails(tails).empty();
}

KirillovFunction KirillovFunction::with_level(long m2) const {
    if (m2 == m) return *this;
    if (m2 < m) throw std::invalid_argument("KirillovFunction::with_level: cannot coarsen");
    KirillovFunction G = *this;
    G.m = m2;
    std::vector<long> units2 = LocallyConstantFn::enumerate_units(p, m2);
    G.shells.assign(shells.size(), {});
    for (size_t i = 0; i < shells.size(); ++i) {
        G.shells[i].reserve(units2.size());
        for (long u : units2)
            G.shells[i].push_back(shells[i][(size_t)LocallyConstantFn::unit_index(p, m, u)]);
    }
    return G;
}

void KirillovFunction::canonicalize_tails() { tails = merge_tails(std::move(tails)); }

KirillovFunction operator+(const KirillovFunction& A, const KirillovFunction& B) {
    check_same_p(A.p, B.p, "KirillovFunction::+");
    KirillovFunction R;
    R.p = A.p;
    R.m = std::max(A.needed_level(), B.needed_level());
    R.n_lo = std::min(A.n_lo, B.n_lo);
    R.n_hi = std::max(A.n_hi, B.n_hi);
    if (R.n_hi < R.n_lo) {  // both windows empty, same start
        R.n_hi = R.n_lo - 1;
    } else {
        std::vector<long> units = LocallyConstantFn::enumerate_units(R.p, R.m);
        R.shells.assign((size_t)(R.n_hi - R.n_lo + 1), {});
        for (long n = R.n_lo; n <= R.n_hi; ++n) {
            auto& row = R.shells[(size_t)(n - R.n_lo)];
            row.reserve(units.size());
            for (long u : units) row.push_back(A.eval(n, u) + B.eval(n, u));
        }
    }
    R.tails = A.tails;
    R.tails.insert(R.tails.end(), B.tails.begin(), B.tails.end());
    R.canonicalize_tails();
    return R;
}

KirillovFunction operator*(const HalfPowerScalar& s, const KirillovFunction& A) {
    KirillovFunction R = A;
    for (auto& row : R.shells)
        for (auto& v : row) v = s * v;
    for (auto& t : R.tails) t.coeff = s * t.coeff;
    R.canonicalize_tails();
    return R;
}

bool operator==(const KirillovFunction& A, const KirillovFunction& B) {
    KirillovFunction D = A + (HalfPowerScalar::from_rat(B.p, Rat(-1)) * B);
    return D.is_zero();
}

// ---------------------------------------------------------------------------
// model vectors and delta
// ---------------------------------------------------------------------------

static KirillovFunction model_vector(const PsiTemplate& psi, long d) {
    long p = psi.cp.p;
    KirillovFunction F = KirillovFunction::zero_function(p);
    TailTemplate t;
    t.d = d;
    t.eta = psi.eta.primitive();
    t.cp = psi.cp;
    t.coeff = HalfPowerScalar::from_rat(p, vol_inv(p));
    F.tails.push_back(std::move(t));
    return F;
}

KirillovFunction kirillov_v0(const PsiTemplate& psi) { return model_vector(psi, 0); }
KirillovFunction kirillov_v1(const PsiTemplate& psi) { return model_vector(psi, 1); }

KirillovFunction delta(const LocallyConstantFn& h, const PsiTemplate& psi) {
    long p = h.p;
    check_same_p(p, psi.cp.p, "delta");
    const DirichletChar& eta = psi.eta;
    bool vp = (psi.kind == PsiKind::VP_TIMES_CHARACTER);
    long mF = std::max({h.m, eta.conductor_exponent(), 1L});
    long n0 = mF;  // coset level of the unit-group decomposition
    Rat coset_vol = pow_rat(p, -n0);

    std::vector<long> units = LocallyConstantFn::enumerate_units(p, mF);

    // integrand weights w[s] = eta(s) h(s) on cosets s + p^{n0} Z_p
    std::vector<Cyclo> w;
    w.reserve(units.size());
    long Mw = 1;
    for (long s : units) {
        w.push_back(eta_at(eta, s) * h.eval(s));
        Mw = lcm_long(Mw, w.back().modulus());
    }

    KirillovFunction F;
    F.p = p;
    F.m = mF;
    F.n_lo = -mF;
    F.n_hi = -1;
    F.shells.assign((size_t)mF, std::vector<HalfPowerScalar>(units.size()));

    // window shells: the level-n0 Riemann sum is exact because z -> psi(-y z)
    // is constant on each coset when v_p(y) >= -n0
    for (long n = -mF; n <= -1; ++n) {
        long L = -n;  // psi(-p^n u s) lives in Q(zeta_{p^L})
        long Mout = lcm_long(Mw, pow_long(p, L));
        const CycloField& Fld = CycloField::get(Mout);
        HalfPowerScalar cpn = psi.cp.pow(n);
        Rat scale = vol_inv(p) * coset_vol;
        if (vp) scale *= Rat(n);
        for (size_t ui = 0; ui < units.size(); ++ui) {
            long u = units[ui];
            std::vector<Rat> acc((size_t)Fld.degree(), Rat(0));
            for (size_t si = 0; si < units.size(); ++si) {
                if (w[si].is_zero()) continue;
                Cyclo ps = psi_value(p, Rat(-units[si]) * Rat(u) * pow_rat(p, n));
                add_product(Fld, acc, w[si], ps, Rat(1));
            }
            Cyclo I(Mout, std::move(acc));
            if (I.is_zero()) {
                F.shells[(size_t)(n + mF)][ui] = HalfPowerScalar::zero(p);
                continue;
            }
            Cyclo val = I * eta_at(eta, u);
            F.shells[(size_t)(n + mF)][ui] = scale * (val * cpn);
        }
    }

    // shells n >= 0: psi(-p^n u z) = 1, so the integral is the constant
    // c_h = \int eta h d^x z, giving a pure template
    Cyclo ch = Cyclo::zero(Mw);
    for (const Cyclo& ws : w) ch = ch + ws;
    ch = (vol_inv(p) * coset_vol) * ch;
    if (!ch.is_zero()) {
        TailTemplate t;
        t.d = vp ? 1 : 0;
        t.eta = eta.primitive();
        t.cp = psi.cp;
        t.coeff = HalfPowerScalar::from_cyclo(p, ch);
        F.tails.push_back(std::move(t));
    }
    return F;
}

// ---------------------------------------------------------------------------
// Borel action and Hecke operators
// ---------------------------------------------------------------------------

KirillovFunction act_borel(const KirillovFunction& F, const Rat& a, const Rat& b, const Rat& d,
                           const HalfPowerScalar& eps_p) {
    long p = F.p;
    if (a == 0 || d == 0) throw std::invalid_argument("act_borel: singular matrix");
    long e = vp_rat(d, p);
    if (d != pow_rat(p, e)) throw std::invalid_argument("act_borel: d must be an exact power of p");

    // step 1: G(y) = F((a/d) y), with a/d = p^{et} w, w a unit rational
    Rat t = a / d;
    long et = vp_rat(t, p);
    Rat w = t / pow_rat(p, et);

    KirillovFunction G;
    G.p = p;
    G.m = F.m;
    G.n_lo = F.n_lo - et;
    G.n_hi = F.n_hi - et;
    if (G.n_hi >= G.n_lo) {
        std::vector<long> units = LocallyConstantFn::enumerate_units(p, F.m);
        long lev = std::max(F.m, 1L);
        long wres = (long)rat_residue(w, p, lev).get_si();
        G.shells.assign((size_t)(G.n_hi - G.n_lo + 1), {});
        for (long n = G.n_lo; n <= G.n_hi; ++n) {
            auto& row = G.shells[(size_t)(n - G.n_lo)];
            row.reserve(units.size());
            for (long u : units)
                row.push_back(F.shells[(size_t)(n + et - F.n_lo)]
                                      [(size_t)LocallyConstantFn::unit_index(p, F.m, wres * u)]);
        }
    }
    for (const TailTemplate& tt : F.tails) {
        // coeff (n+et)^d eta(w u) cp^{n+et}
        HalfPowerScalar scale = tt.eta.value_rat(w) * (tt.cp.pow(et) * tt.coeff);
        TailTemplate main{tt.d, tt.eta, tt.cp, scale};
        G.tails.push_back(std::move(main));
        if (tt.d == 1 && et != 0) G.tails.push_back(TailTemplate{0, tt.eta, tt.cp, Rat(et) * scale});
    }

    // step 2: multiply by psi((b/d) y)
    KirillovFunction H;
    Rat x = b / d;
    if (x == 0) {
        H = std::move(G);
    } else {
        long vx = vp_rat(x, p);
        long hi2 = std::max(G.n_hi, -vx - 1);
        if (hi2 < G.n_lo) {
            H = std::move(G);  // every affected shell lies below the support
        } else {
            long m2 = std::max(G.needed_level(), -(vx + G.n_lo));
            m2 = std::max(m2, 0L);
            H.p = p;
            H.m = m2;
            H.n_lo = G.n_lo;
            H.n_hi = hi2;
            std::vector<long> units = LocallyConstantFn::enumerate_units(p, m2);
            H.shells.assign((size_t)(hi2 - G.n_lo + 1), {});
            for (long n = G.n_lo; n <= hi2; ++n) {
                auto& row = H.shells[(size_t)(n - G.n_lo)];
                row.reserve(units.size());
                for (long u : units) {
                    HalfPowerScalar v = G.eval(n, u);
                    if (!v.is_zero()) v = psi_value(p, x * pow_rat(p, n) * Rat(u)) * v;
                    row.push_back(std::move(v));
                }
            }
            H.tails = G.tails;  // psi factor is 1 on shells n > hi2 >= -vx - 1
        }
    }

    H.canonicalize_tails();
    if (e == 0) return H;
    return eps_p.pow(e) * H;
}

KirillovFunction hecke_up(const KirillovFunction& F, const HalfPowerScalar& eps_p) {
    long p = F.p;
    KirillovFunction acc = act_borel(F, Rat(1), Rat(0), Rat(1, p), eps_p);
    for (long c = 1; c < p; ++c) acc = acc + act_borel(F, Rat(1), Rat(c, p), Rat(1, p), eps_p);
    return acc;
}

KirillovFunction hecke_tp(const KirillovFunction& F, const HalfPowerScalar& eps_p) {
    return act_borel(F, Rat(1, F.p), Rat(0), Rat(1), eps_p) + hecke_up(F, eps_p);
}

// ---------------------------------------------------------------------------
// key decomposition check
// ---------------------------------------------------------------------------

KeypropReport verify_keyprop(long a, long n, const PsiTemplate& psi) {
    long p = psi.cp.p;
    if (n < 1) throw std::invalid_argument("verify_keyprop: need n >= 1");
    if (n < psi.eta.conductor_exponent())
        throw std::invalid_argument("verify_keyprop: need n >= cond(eta)");
    if (((a % p) + p) % p == 0) throw std::invalid_argument("verify_keyprop: a must be a unit");

    LocallyConstantFn h = LocallyConstantFn::indicator_coset(p, a, n);
    KirillovFunction F = delta(h, psi);
    KirillovFunction lhs = act_borel(F, Rat(1), Rat(a), pow_rat(p, n), psi.eps_p);

    KeypropReport rep;
    rep.gamma = (Rat(p) * psi.cp) * psi.eps_p.inverse();
    HalfPowerScalar gn = rep.gamma.pow(-n);
    HalfPowerScalar etaa = HalfPowerScalar::from_cyclo(p, eta_at(psi.eta, a));
    if (psi.kind == PsiKind::CHARACTER) {
        rep.c0 = etaa;
        rep.c1 = HalfPowerScalar::zero(p);
        rep.ok = (lhs == (gn * rep.c0) * kirillov_v0(psi));
    } else {
        rep.c0 = Rat(-n) * etaa;
        rep.c1 = etaa;
        KirillovFunction rhs =
            (gn * rep.c0) * kirillov_v0(psi) + (gn * rep.c1) * kirillov_v1(psi);
        rep.ok = (lhs == rhs);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// local Euler factors
// ---------------------------------------------------------------------------

LocalCharacter LocalCharacter::unramified(long p, const HalfPowerScalar& at_p, HalfInt v) {
    return LocalCharacter{DirichletChar(p, 0, 0), at_p, v};
}

namespace {

// the ratio x = p^{k-m-1/2} chi(p) of the shell series
HalfPowerScalar shell_ratio(long p, long k, long m, const HalfPowerScalar& at_p) {
    return HalfPowerScalar::half_power(p, 2 * (k - m) - 1) * at_p;
}

// surviving L-denominator factors (1 - x_t), one per slot whose twisted unit
// part is unramified; the slot list depends on the case
std::vector<HalfPowerScalar> l_denominator_factors(const EulerParams& prm) {
    std::vector<HalfPowerScalar> out;
    auto add_slot = [&](const LocalCharacter& chi) {
        if (prm.chi0.times(chi.eta).conductor_exponent() == 0)
            out.push_back(HalfPowerScalar::one(prm.p) -
                          shell_ratio(prm.p, prm.k, prm.m, chi.at_p));
    };
    switch (prm.kind) {
        case LocalCaseKind::PRINCIPAL:
            if (!prm.chi_j) throw std::invalid_argument("euler: principal case needs chi_j");
            add_slot(prm.chi_i);
            add_slot(*prm.chi_j);
            break;
        case LocalCaseKind::SPECIAL:
            add_slot(prm.chi_i);
            break;
        case LocalCaseKind::EXTREMAL:
            add_slot(prm.chi_i);
            add_slot(prm.chi_i);
            break;
    }
    return out;
}

}  // namespace

HalfPowerScalar euler_factor_closed(const EulerParams& prm) {
    long p = prm.p, k = prm.k, m = prm.m;
    const HalfPowerScalar one = HalfPowerScalar::one(p);
    const HalfPowerScalar& X = prm.chi_i.at_p;
    DirichletChar chiprod = prm.chi0.times(prm.chi_i.eta);
    long r = chiprod.conductor_exponent();
    Rat vi = vol_inv(p);

    if (prm.kind == LocalCaseKind::EXTREMAL) {
        if (r == 0) {
            HalfPowerScalar x = shell_ratio(p, k, m, X);
            HalfPowerScalar xb = HalfPowerScalar::half_power(p, 2 * (m - k) - 1) * X.inverse();
            return vi * (x + xb - HalfPowerScalar::from_rat(p, Rat(2, p)));
        }
        HalfPowerScalar tau = HalfPowerScalar::from_cyclo(p, gauss_sum(chiprod));
        return Rat(-r) * (vi * (HalfPowerScalar::half_power(p, r * (2 * (m - k) - 1)) *
                                (X.pow(-r) * tau)));
    }

    // principal / special: the shell series with slot-i denominator cancelled
    HalfPowerScalar base;
    if (r == 0) {
        HalfPowerScalar xb = HalfPowerScalar::half_power(p, 2 * (m - k) - 1) * X.inverse();
        base = vi * (one - xb);
    } else {
        HalfPowerScalar tau = HalfPowerScalar::from_cyclo(p, gauss_sum(chiprod));
        base = vi * (HalfPowerScalar::half_power(p, r * (2 * (m - k) - 1)) * (X.pow(-r) * tau));
    }

    if (prm.kind == LocalCaseKind::PRINCIPAL) {
        if (!prm.chi_j) throw std::invalid_argument("euler: principal case needs chi_j");
        if (prm.chi0.times(prm.chi_j->eta).conductor_exponent() == 0)
            base = base * (one - shell_ratio(p, k, m, prm.chi_j->at_p));
    }
    return base;
}

EulerResult euler_factor_oracle(const EulerParams& prm) {
    long p = prm.p, k = prm.k, m = prm.m;
    DirichletChar chiprod = prm.chi0.times(prm.chi_i.eta);
    long r = chiprod.conductor_exponent();
    long d = (prm.kind == LocalCaseKind::EXTREMAL) ? 1 : 0;
    HalfPowerScalar x = shell_ratio(p, k, m, prm.chi_i.at_p);

    EulerResult res;
    HalfPowerScalar I = HalfPowerScalar::zero(p);
    for (long n = -(r + 2); n <= -1; ++n) {
        Cyclo Jn = integral_mult_char(chiprod, 0, -pow_rat(p, n));
        if (Jn.is_zero()) continue;
        HalfPowerScalar term = Jn * x.pow(n);
        if (d == 1) term = Rat(n) * term;
        I = I + term;
    }
    Cyclo J0 = integral_mult_char(chiprod, 0, Rat(0));  // J_n for every n >= 0
    if (!J0.is_zero()) {
        HalfPowerScalar om = HalfPowerScalar::one(p) - x;
        HalfPowerScalar geo;
        try {
            geo = om.inverse();
        } catch (const std::exception&) {
            throw std::domain_error("euler_factor_oracle: shell ratio denominator not invertible");
        }
        HalfPowerScalar tail = (d == 0) ? geo : x * (geo * geo);
        I = I + J0 * tail;
        HalfInt vx = HalfInt::halves(2 * (k - m) - 1) + prm.chi_i.v_at_p;
        if (!(HalfInt::of_int(0) < vx)) {
            res.formal_tail = true;
            res.note = "geometric tail evaluated as a formal rational function";
        }
    }
    for (const HalfPowerScalar& f : l_denominator_factors(prm)) I = I * f;
    res.value = I;
    return res;
}

}  // namespace lpadic
