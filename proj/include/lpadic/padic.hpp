#pragma once

#include "lpadic/rational.hpp"

#include <optional>
#include <string>

namespace lpadic {

// Element of Q_p carried as an exact rational together with an absolute
// precision cap: the object stands for its value modulo p^prec. Arithmetic
// follows interval rules and never silently increases precision.
class Padic {
  public:
    static constexpr long PREC_INF = 1L << 40;

    Padic() : p_(0), val_(0), prec_(PREC_INF) {}
    Padic(long p, Rat value, long prec = PREC_INF) : p_(p), val_(std::move(value)), prec_(prec) {
        if (p_ < 2) throw std::invalid_argument("Padic: bad prime");
        normalize();
    }

    long prime() const { return p_; }
    const Rat& value() const { return val_; }
    long precision() const { return prec_; }
    bool exact() const { return prec_ >= PREC_INF; }

    // Valuation of the represented value; for a (possibly inexact) zero this
    // is the best available lower bound, namely the precision cap.
    HalfInt valuation() const {
        if (val_ == 0) return exact() ? HalfInt::inf() : HalfInt::of_int(prec_);
        return HalfInt::of_int(vp_rat(val_, p_));
    }

    bool is_zero_to_precision() const { return val_ == 0; }

    friend Padic operator+(const Padic& a, const Padic& b) {
        a.check_same(b);
        return Padic(a.p_, a.val_ + b.val_, std::min(a.prec_, b.prec_));
    }
    friend Padic operator-(const Padic& a, const Padic& b) {
        a.check_same(b);
        return Padic(a.p_, a.val_ - b.val_, std::min(a.prec_, b.prec_));
    }
    friend Padic operator*(const Padic& a, const Padic& b) {
        a.check_same(b);
        long prec = PREC_INF;
        if (!a.exact() || !b.exact()) {
            long va = a.val_ == 0 ? a.prec_ : vp_rat(a.val_, a.p_);
            long vb = b.val_ == 0 ? b.prec_ : vp_rat(b.val_, b.p_);
            long pa = a.exact() ? PREC_INF : a.prec_ + vb;
            long pb = b.exact() ? PREC_INF : b.prec_ + va;
            prec = std::min(pa, pb);
        }
        return Padic(a.p_, a.val_ * b.val_, prec);
    }

    Padic inverse() const {
        if (val_ == 0) throw std::domain_error("Padic: inverse of zero");
        long prec = PREC_INF;
        if (!exact()) prec = prec_ - 2 * vp_rat(val_, p_);
        return Padic(p_, Rat(1) / val_, prec);
    }
    friend Padic operator/(const Padic& a, const Padic& b) { return a * b.inverse(); }

    Padic with_precision(long prec) const { return Padic(p_, val_, std::min(prec, prec_)); }

    // Congruence modulo the shared precision.
    friend bool equal_mod_prec(const Padic& a, const Padic& b) {
        a.check_same(b);
        Rat d = a.val_ - b.val_;
        if (d == 0) return true;
        long n = std::min(a.prec_, b.prec_);
        if (n >= PREC_INF) return false;
        return vp_rat(d, a.p_) >= n;
    }

    std::string str() const {
        std::string s = val_.get_str();
        if (!exact()) s += " + O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
        return s;
    }

  private:
    void check_same(const Padic& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Padic: mixed primes");
    }

    // Reduce the carrier modulo p^prec to keep numbers small. The class of
    // value mod p^prec is preserved exactly.
    void normalize() {
        if (exact() || val_ == 0) return;
        long v = vp_rat(val_, p_);
        if (v >= prec_) {
            val_ = 0;
            return;
        }
        // val = p^v * u with u a p-unit; reduce u mod p^(prec-v).
        Rat u = val_ / pow_rat(p_, v);
        Int m = pow_int(p_, (unsigned long)(prec_ - v));
        Int num(u.get_num()), den(u.get_den());
        Int red = mod_pos(num * invmod(den, m), m);
        val_ = Rat(red) * pow_rat(p_, v);
    }

    long p_;
    Rat val_;
    long prec_;
};

// Teichmuller lift of a p-unit a: the unique (p-1)st root of unity congruent
// to a mod p, computed mod p^prec by Frobenius iteration.
Padic teichmuller(long p, const Int& a, long prec);

// Iwasawa logarithm log<x> of a p-unit x, with <x> = x/omega(x), computed to
// absolute precision prec via the log(1+t) series. Requires p odd.
Padic iwasawa_log(const Padic& x, long prec);

// exp(x) for v_p(x) >= 1 (p odd), to absolute precision prec.
Padic padic_exp(const Padic& x, long prec);

// <a>^s = exp(s * log<a>) for a p-unit a and s with v_p(s) > 1/(p-1) - 1.
Padic unit_power(const Padic& a, const Rat& s, long prec);

// Square root of u mod p^prec (u a quadratic residue unit mod odd p), with the
// deterministic branch whose reduction mod p is the smaller of the two roots.
Int hensel_sqrt(long p, const Int& u, long prec);

// Element a + b*sqrt(D) of a quadratic etale algebra over Q. D is any
// non-square rational; the same type with b = 0 carries plain rationals.
struct QuadExt {
    Rat a, b, D;

    QuadExt() : a(0), b(0), D(0) {}
    QuadExt(Rat a_, Rat b_, Rat D_) : a(std::move(a_)), b(std::move(b_)), D(std::move(D_)) {}
    static QuadExt rational(Rat r, Rat D_ = Rat(0)) { return QuadExt(std::move(r), Rat(0), std::move(D_)); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    QuadExt conj() const { return QuadExt(a, -b, D); }
    Rat norm() const { return a * a - D * b * b; }
    Rat trace() const { return 2 * a; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        x.check(y);
        return QuadExt(x.a + y.a, x.b + y.b, x.common(y));
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        x.check(y);
        return QuadExt(x.a - y.a, x.b - y.b, x.common(y));
    }
    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a, -x.b, x.D); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        x.check(y);
        Rat D = x.common(y);
        return QuadExt(x.a * y.a + D * x.b * y.b, x.a * y.b + x.b * y.a, D);
    }
    friend QuadExt operator*(const Rat& c, const QuadExt& y) { return QuadExt(c * y.a, c * y.b, y.D); }

    QuadExt inverse() const {
        Rat n = norm();
        if (n == 0) throw std::domain_error("QuadExt: not invertible");
        return QuadExt(a / n, -b / n, D);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

    QuadExt pow(long e) const {
        QuadExt r = QuadExt(Rat(1), Rat(0), D), b_ = *this;
        long n = e >= 0 ? e : -e;
        for (long i = 0; i < n; i++) r = r * b_;
        if (e < 0) r = r.inverse();
        return r;
    }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a == y.a && x.b == y.b && (x.b == 0 || y.b == 0 || x.D == y.D);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string str() const {
        if (b == 0) return a.get_str();
        return a.get_str() + " + (" + b.get_str() + ")*sqrt(" + D.get_str() + ")";
    }

  private:
    void check(const QuadExt& o) const {
        if (b != 0 && o.b != 0 && D != o.D)
            throw std::invalid_argument("QuadExt: mixed discriminants");
    }
    Rat common(const QuadExt& o) const { return b != 0 ? D : (o.b != 0 ? o.D : D); }
};

// p-adic valuation of a nonzero quadratic element, through a fixed embedding
// into C_p. Inert and ramified D give (1/2) v_p(Norm); when D is a square in
// Q_p the value is computed through the deterministic Hensel branch of
// sqrt(D), matching hensel_sqrt.
HalfInt quad_valuation(long p, const QuadExt& x);

// Embedding Q(sqrt(D)) -> Q_p through the deterministic Hensel branch.
// Defined only when D is a square in Q_p; callers must check quad_splits.
bool quad_splits(long p, const Rat& D);
Padic quad_embed(long p, const QuadExt& x, long prec);

}  // namespace lpadic
