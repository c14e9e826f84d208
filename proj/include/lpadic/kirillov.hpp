#pragma once

#include "lpadic/cyclotomic.hpp"
#include "lpadic/rational.hpp"

#include <optional>

namespace lpadic {

// Element of K[theta]/(theta^2 - p), K cyclotomic: carries the half-integer
// powers of p that appear in local integrals (p^{1/2} = theta).
struct HalfPowerScalar {
    long p = 0;
    Cyclo a, b;  // value a + b*theta

    HalfPowerScalar() = default;
    HalfPowerScalar(long p_, Cyclo a_, Cyclo b_) : p(p_), a(std::move(a_)), b(std::move(b_)) {}

    static HalfPowerScalar zero(long p) { return {p, Cyclo::zero(), Cyclo::zero()}; }
    static HalfPowerScalar one(long p) { return {p, Cyclo::one(), Cyclo::zero()}; }
    static HalfPowerScalar theta(long p) { return {p, Cyclo::zero(), Cyclo::one()}; }
    static HalfPowerScalar from_cyclo(long p, const Cyclo& c) { return {p, c, Cyclo::zero()}; }
    static HalfPowerScalar from_rat(long p, const Rat& r) { return {p, Cyclo::rational(r), Cyclo::zero()}; }
    static HalfPowerScalar half_power(long p, long t);  // p^{t/2}, t any integer

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    HalfPowerScalar inverse() const;
    HalfPowerScalar pow(long e) const;

    friend HalfPowerScalar operator+(const HalfPowerScalar& x, const HalfPowerScalar& y);
    friend HalfPowerScalar operator-(const HalfPowerScalar& x, const HalfPowerScalar& y);
    friend HalfPowerScalar operator-(const HalfPowerScalar& x);
    friend HalfPowerScalar operator*(const HalfPowerScalar& x, const HalfPowerScalar& y);
    friend HalfPowerScalar operator*(const Cyclo& c, const HalfPowerScalar& y);
    friend HalfPowerScalar operator*(const Rat& r, const HalfPowerScalar& y);
    friend bool operator==(const HalfPowerScalar& x, const HalfPowerScalar& y);
    friend bool operator!=(const HalfPowerScalar& x, const HalfPowerScalar& y) { return !(x == y); }

    std::string str() const;
};

// The function Psi on Q_p^x that seeds the Kirillov-model construction:
// either a character y = p^n u -> cp^n eta(u), or v_p(y) times one.
enum class PsiKind { CHARACTER, VP_TIMES_CHARACTER };

struct PsiTemplate {
    PsiKind kind = PsiKind::CHARACTER;
    DirichletChar eta;      // unit part
    HalfPowerScalar cp;     // value of the character part at p
    HalfPowerScalar eps_p;  // central character evaluated at p

    // Psi for pi(chi, chi) extremal setups: cp = theta X / p, eps_p = X^2
    static PsiTemplate extremal(long p, const DirichletChar& eta, const HalfPowerScalar& chi_at_p);
};

// One symbolic tail term t(p^n u) = coeff * n^d * eta(u) * cp^n.
struct TailTemplate {
    long d = 0;  // 0 or 1
    DirichletChar eta;
    HalfPowerScalar cp;
    HalfPowerScalar coeff;
};

// Function on Q_p^x: zero below the window, tabulated on window shells
// (v_p(y) = n, unit part locally constant at level m), symbolic templates
// above it.
class KirillovFunction {
  public:
    long p = 0;
    long m = 0;          // unit level of the window tables
    long n_lo = 0;       // zero on shells n < n_lo
    long n_hi = -1;      // window covers [n_lo, n_hi]; may be empty (n_lo = n_hi+1)
    std::vector<std::vector<HalfPowerScalar>> shells;  // [n - n_lo][unit index]
    std::vector<TailTemplate> tails;                   // valid for n > n_hi

    static KirillovFunction zero_function(long p);

    // value at y = p^n u, u a unit residue known mod p^lev with lev >= needed_level()
    HalfPowerScalar eval(long n, long u) const;
    long needed_level() const;

    bool is_zero() const;
    KirillovFunction with_level(long m2) const;  // refine unit level (m2 >= m)
    void canonicalize_tails();

    friend KirillovFunction operator+(const KirillovFunction& A, const KirillovFunction& B);
    friend KirillovFunction operator*(const HalfPowerScalar& s, const KirillovFunction& A);
    friend bool operator==(const KirillovFunction& A, const KirillovFunction& B);
    friend bool operator!=(const KirillovFunction& A, const KirillovFunction& B) { return !(A == B); }
};

// V_0 = (1-p^{-1})^{-1} * (character part of Psi)(y) * 1_{Z_p}(y)
// V_1 = same with an extra factor v_p(y)
KirillovFunction kirillov_v0(const PsiTemplate& psi);
KirillovFunction kirillov_v1(const PsiTemplate& psi);

// delta(h)(y) = \int_{Z_p^x} Psi(z y) h(z) psi(-z y) d^x z, exact
KirillovFunction delta(const LocallyConstantFn& h, const PsiTemplate& psi);

// action of (a b; 0 d) with d = p^e: F -> eps_p(d) psi((b/d) y) F((a/d) y)
KirillovFunction act_borel(const KirillovFunction& F, const Rat& a, const Rat& b, const Rat& d,
                           const HalfPowerScalar& eps_p);

KirillovFunction hecke_up(const KirillovFunction& F, const HalfPowerScalar& eps_p);  // sum_c (1 c/p; 0 1/p)
KirillovFunction hecke_tp(const KirillovFunction& F, const HalfPowerScalar& eps_p);  // diag(1/p,1) + U_p

// Exact decomposition of (1 a; 0 p^n) delta(1_{U(a,n)}) as gamma^{-n} (c_0 V_0 [+ c_1 V_1]).
struct KeypropReport {
    bool ok = false;
    HalfPowerScalar gamma;
    HalfPowerScalar c0, c1;  // c1 unused for CHARACTER kind
};
KeypropReport verify_keyprop(long a, long n, const PsiTemplate& psi);

// Local character of Q_p^x: unit part eta, value at p with declared valuation.
struct LocalCharacter {
    DirichletChar eta;
    HalfPowerScalar at_p;
    HalfInt v_at_p;  // exact valuation of at_p, declared by the caller

    static LocalCharacter unramified(long p, const HalfPowerScalar& at_p, HalfInt v);
};

enum class LocalCaseKind { PRINCIPAL, SPECIAL, EXTREMAL };

struct EulerParams {
    LocalCaseKind kind = LocalCaseKind::PRINCIPAL;
    long p = 0;
    long k = 0;  // weight index (motivic normalization k+2)
    long m = 0;  // twist exponent, 0 <= m <= k
    LocalCharacter chi_i;                // the slot carried by Psi
    std::optional<LocalCharacter> chi_j; // second principal-series slot
    DirichletChar chi0;                  // finite-order twist on units
};

struct EulerResult {
    HalfPowerScalar value;
    bool formal_tail = false;  // geometric ratio had valuation <= 0 (formal evaluation)
    std::string note;
};

HalfPowerScalar euler_factor_closed(const EulerParams& prm);
EulerResult euler_factor_oracle(const EulerParams& prm);

}  // namespace lpadic
