#pragma once

#include "lpadic/rational.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace lpadic {

// Shared per-modulus data for Q(zeta_M): the cyclotomic polynomial (sparse)
// and lazily built reduction rows for general M. Prime powers reduce through
// the closed relation Phi_{p^k}(x) = sum_i x^{i p^(k-1)} and need no rows.
class CycloField {
  public:
    static const CycloField& get(long M);

    long modulus() const { return M_; }
    long degree() const { return phi_; }
    const std::vector<std::pair<long, Int>>& phi_sparse() const { return phi_sparse_; }

    // x^e as a reduced coefficient vector, 0 <= e < M.
    void add_monomial(std::vector<Rat>& acc, long e, const Rat& c) const;

    // reduce a dense polynomial of arbitrary degree into the power basis
    std::vector<Rat> reduce(std::vector<Rat> poly) const;

  private:
    explicit CycloField(long M);
    const std::vector<Rat>& row(long e) const;

    long M_, phi_;
    long prime_ = 0, prime_pow_ = 0;  // set when M is a prime power p^k
    std::vector<std::pair<long, Int>> phi_sparse_;
    mutable std::vector<std::vector<Rat>> rows_;  // x^e for e in [phi, M)
    mutable std::once_flag rows_once_;
};

// Element of Q(zeta_M) in the power basis mod Phi_M. Binary operations lift
// both sides to the lcm of the moduli.
class Cyclo {
  public:
    Cyclo() : M_(1), c_(1, Rat(0)) {}
    Cyclo(long M, std::vector<Rat> c) : M_(M), c_(std::move(c)) {}

    static Cyclo zero(long M = 1) { return Cyclo(M, std::vector<Rat>(CycloField::get(M).degree(), Rat(0))); }
    static Cyclo one(long M = 1) { return rational(Rat(1), M); }
    static Cyclo rational(const Rat& r, long M = 1);
    static Cyclo zeta(long M, long t);  // zeta_M^t

    long modulus() const { return M_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // requires is_rational()

    Cyclo lifted(long M2) const;  // requires M | M2
    Cyclo galois(long t) const;   // zeta -> zeta^t, gcd(t, M) = 1

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Rat& s, const Cyclo& a);
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo inverse() const;  // via linear algebra; throws if not invertible

    std::string str() const;

  private:
    long M_;
    std::vector<Rat> c_;
};

long lcm_long(long a, long b);
long euler_phi(long n);

// The additive character psi of Q_p with kernel Z_p: psi(x) = zeta_{p^L}^u
// for x = u/p^L mod Z_p. Fixed choice zeta_{p^L} = e^(2 pi i / p^L).
Cyclo psi_value(long p, const Rat& x);

// residue of a p-integral rational mod p^L, in [0, p^L)
Int rat_residue(const Rat& x, long p, long L);

// Dirichlet character of (Z/p^r)^x given by the image index e at a fixed
// generator g: chi(g) = zeta_{phi(p^r)}^e. r = 0 is the trivial character.
class DirichletChar {
  public:
    DirichletChar() = default;
    DirichletChar(long p, long r, long e);

    long prime() const { return p_; }
    long r() const { return r_; }          // modulus exponent
    long index() const { return e_; }
    long generator() const { return g_; }
    long group_order() const { return ord_grp_; }
    long order() const;                     // order of chi
    long conductor_exponent() const { return cond_; }
    bool is_trivial() const { return cond_ == 0; }

    // chi(x) for x an integer unit mod p^r, as an element of Q(zeta_{phi(p^r)})
    Cyclo value(long x) const;
    long exponent_at(long x) const;  // chi(x) = zeta_{value_field}^exponent; x must be a unit
    Cyclo value_rat(const Rat& x) const;   // unit rationals via num * den^-1
    long value_field() const { return r_ == 0 ? 1 : ord_grp_; }

    DirichletChar conjugate() const { return DirichletChar(p_, r_, e_ == 0 ? 0 : ord_grp_ - e_); }
    DirichletChar times(const DirichletChar& other) const;  // same p, lifts to max r
    DirichletChar primitive() const;  // the same character defined modulo its conductor
    long sign_at_minus_one() const;  // +1 or -1
    // true when both define the same character of Z_p^* (after reduction to conductors)
    bool same_character(const DirichletChar& other) const;

    friend bool operator==(const DirichletChar& a, const DirichletChar& b) {
        return a.p_ == b.p_ && a.r_ == b.r_ && a.e_ == b.e_;
    }

  private:
    long p_ = 0, r_ = 0, e_ = 0;
    long g_ = 0, ord_grp_ = 1, cond_ = 0;
    std::vector<long> dlog_;  // dlog_[x] for units x mod p^r
};

long primitive_root_mod_p_power(long p);

// Function on Z_p^x constant on cosets of 1 + p^m Z_p, cyclotomic values.
struct LocallyConstantFn {
    long p = 0;
    long m = 0;                  // level; m = 0 means constant
    std::vector<Cyclo> vals;     // indexed by enumerate_units(p, m) order

    static std::vector<long> enumerate_units(long p, long m);
    static long unit_index(long p, long m, long residue);

    const Cyclo& eval(long x) const;  // x a unit residue mod p^max(m,1)
    static LocallyConstantFn indicator_coset(long p, long a, long n);  // 1_{U(a,n)}
    static LocallyConstantFn constant_one(long p);
    static LocallyConstantFn from_character(const DirichletChar& chi);
};

// Region of integration for the additive Haar integral.
struct AdditiveRegion {
    bool units = false;  // true: Z_p^x; false: coset s + p^n Z_p
    Rat s;
    long n = 0;
    static AdditiveRegion coset(Rat s_, long n_) { return AdditiveRegion{false, std::move(s_), n_}; }
    static AdditiveRegion unit_group() { return AdditiveRegion{true, Rat(0), 0}; }
};

// Exact value of the additive Haar integral of psi(a x) over the region,
// with vol(Z_p, dx) = 1, computed as a finite Riemann sum.
Cyclo integral_additive(long p, const Rat& a, const AdditiveRegion& region, long level_slack = 0);

// Exact value of the multiplicative Haar integral of chi(x) psi(a x) over the
// subgroup U = 1 + p^t Z_p (t >= 1) or U = Z_p^x (t = 0), with
// vol(Z_p^x, d^x) = 1.
Cyclo integral_mult_char(const DirichletChar& chi, long t, const Rat& a);

// Gauss sum tau(chi, psi) = p^n \int_{Z_p^x} chi(x) psi(-x/p^n) dx for chi of
// conductor p^n; equals 1 - 1/p for the trivial character.
Cyclo gauss_sum(const DirichletChar& chi);

}  // namespace lpadic
