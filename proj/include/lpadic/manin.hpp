#pragma once
// Weight-k modular symbols for Gamma_0(M) in the Manin presentation: the
// space of V(k)-valued functions on degree-zero cusp divisors, invariant
// under the level-M action, encoded by their values on unimodular paths
// indexed by P^1(Z/M).
//
// Conventions. V(k) is the dual of the degree-k forms P(x, y); coordinates
// are values on the monomials y^j x^(k-j), j = 0..k. Any integer matrix B
// acts on the right by (v|B)(P) := v(P((x,y)B)); for B invertible this is
// the inverse-matrix action on V(k). A symbol phi transforms by
// (phi|B)(D) := phi(BD)|B, so Gamma-invariance reads phi|gamma = phi and
// the Hecke sums below need no determinant factors.

#include <lpadic/padic.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lpadic {

// 2x2 integer matrix (a b; c d).
struct Mat2 {
    Int a, b, c, d;
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    Int det() const { return a * d - b * c; }
    Mat2 adj() const { return {d, -b, -c, a}; }  // adjugate = inverse when det 1
    static Mat2 identity() { return {Int(1), Int(0), Int(0), Int(1)}; }
};

// Row j expands P((x,y)B) for P = y^j x^(k-j) back in the monomial basis,
// so dual coordinates transform as (v|B)_j = sum_i W[j][i] v_i.
std::vector<std::vector<Rat>> weight_matrix(long k, const Mat2& B);

template <class F>
std::vector<F> apply_weight(const std::vector<std::vector<Rat>>& W, const std::vector<F>& v) {
    std::vector<F> r(W.size());
    for (size_t j = 0; j < W.size(); j++) {
        F acc{};
        for (size_t i = 0; i < v.size(); i++)
            if (!(W[j][i] == 0)) acc = acc + W[j][i] * v[i];
        r[j] = acc;
    }
    return r;
}

// A point of P^1(Q): num/den, with den = 0 for the infinite cusp.
struct CuspPt {
    Int num, den;
    static CuspPt infinity() { return {Int(1), Int(0)}; }
    static CuspPt of_rat(const Rat& r) { return {r.get_num(), r.get_den()}; }
    bool is_infinity() const { return den == 0; }
};

CuspPt apply_mobius(const Mat2& g, const CuspPt& s);

// Unimodular chain for {oo -> r}: matrices g with det 1 whose paths
// g{0 -> oo} step through the continued-fraction convergents of r.
std::vector<Mat2> convergent_chain(const Rat& r);

struct ManinSymbolSpace {
    long level = 1;
    long weight = 0;
    std::vector<std::pair<long, long>> pts;    // canonical reps of P^1(Z/M)
    std::vector<Mat2> lifts;                   // SL2(Z) lift, bottom row = rep mod M
    std::vector<std::vector<Rat>> relations;   // relation rows, reduced echelon
    std::vector<std::vector<Rat>> basis;       // reduced echelon basis of the space
    std::vector<long> free_cols;               // free coordinate of each basis vector

    long npts() const { return (long)pts.size(); }
    long coords() const { return npts() * (weight + 1); }
    long dim() const { return (long)basis.size(); }

    // index of the class of (c : d); -1 if gcd(c, d, M) > 1
    long p1_index(const Int& c, const Int& d) const;

    static ManinSymbolSpace build(long M, long k);

    std::vector<long> norm_table;  // (c*M + d) -> point index, or -1
};

// --- exact linear algebra over Q ----------------------------------------

// in-place reduced row echelon form; returns pivot columns in order
std::vector<long> rref(std::vector<std::vector<Rat>>& rows);
long matrix_rank(std::vector<std::vector<Rat>> rows);
// reduced echelon basis of { x : rows * x = 0 }, rows of length ncols
std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> rows, long ncols);

// coordinates of m in the echelon basis of S; throws when m is not a symbol
std::vector<Rat> coords_in_basis(const ManinSymbolSpace& S, const std::vector<Rat>& m);

// --- evaluation ----------------------------------------------------------

namespace detail {
template <class F>
void add_block(std::vector<F>& acc, const std::vector<F>& v) {
    for (size_t i = 0; i < acc.size(); i++) acc[i] = acc[i] + v[i];
}
template <class F>
std::vector<F> block_of(const std::vector<F>& m, long x, long kk) {
    return std::vector<F>(m.begin() + x * kk, m.begin() + (x + 1) * kk);
}
}  // namespace detail

// phi({oo -> r}) as a V(k) coordinate vector
template <class F>
std::vector<F> eval_to(const ManinSymbolSpace& S, const std::vector<F>& m, const CuspPt& r) {
    long kk = S.weight + 1;
    std::vector<F> out((size_t)kk, F{});
    if (r.is_infinity()) return out;
    if (r.den < 0) return eval_to(S, m, CuspPt{-r.num, -r.den});
    for (const Mat2& g : convergent_chain(Rat(r.num) / Rat(r.den))) {
        long x = S.p1_index(g.c, g.d);
        std::vector<F> val = apply_weight<F>(weight_matrix(S.weight, g.adj()),
                                             detail::block_of(m, x, kk));
        detail::add_block(out, val);
    }
    return out;
}

// phi({r -> s})
template <class F>
std::vector<F> eval_path(const ManinSymbolSpace& S, const std::vector<F>& m, const CuspPt& r,
                         const CuspPt& s) {
    std::vector<F> a = eval_to(S, m, s), b = eval_to(S, m, r);
    for (size_t i = 0; i < a.size(); i++) a[i] = a[i] - b[i];
    return a;
}

// --- Hecke operators and the involution ----------------------------------

// coset representatives: (1 c; 0 q) for 0 <= c < q, plus (q 0; 0 1) when
// q does not divide the level (T_q); without it this is U_q
std::vector<Mat2> hecke_cosets(long level, long q);

template <class F>
std::vector<F> hecke(const ManinSymbolSpace& S, const std::vector<F>& m, long q) {
    long kk = S.weight + 1;
    std::vector<Mat2> cosets = hecke_cosets(S.level, q);
    std::vector<F> out((size_t)S.coords(), F{});
    for (long x = 0; x < S.npts(); x++) {
        std::vector<F> acc((size_t)kk, F{});
        for (const Mat2& A : cosets) {
            Mat2 B = A * S.lifts[(size_t)x];
            std::vector<F> val = eval_path(S, m, CuspPt{B.b, B.d}, CuspPt{B.a, B.c});
            detail::add_block(acc, apply_weight<F>(weight_matrix(S.weight, B), val));
        }
        for (long j = 0; j < kk; j++) out[(size_t)(x * kk + j)] = acc[(size_t)j];
    }
    return out;
}

// m'(c:d) = m(-c:d)|diag(1,-1); coordinates pick up (-1)^j
template <class F>
std::vector<F> act_involution(const ManinSymbolSpace& S, const std::vector<F>& m) {
    long kk = S.weight + 1;
    std::vector<F> out((size_t)S.coords(), F{});
    for (long x = 0; x < S.npts(); x++) {
        long y = S.p1_index(Int(-S.pts[(size_t)x].first), Int(S.pts[(size_t)x].second));
        for (long j = 0; j < kk; j++) {
            F v = m[(size_t)(y * kk + j)];
            out[(size_t)(x * kk + j)] = (j % 2 == 0) ? v : F{} - v;
        }
    }
    return out;
}

// matrix of an operator on the echelon basis (columns = images)
std::vector<std::vector<Rat>> hecke_matrix(const ManinSymbolSpace& S, long q);
std::vector<std::vector<Rat>> involution_matrix(const ManinSymbolSpace& S);

// --- structure of the space ----------------------------------------------

// dimensions of the kernel of the boundary map on the +1 and -1 eigenspaces
// of the involution (the cuspidal subspace, split by sign)
std::pair<long, long> cuspidal_dims(const ManinSymbolSpace& S);

struct HeckeTarget {
    long q;
    Rat aq;
};

// the sign-eigenline cut out by all targets, as a primitive integral data
// vector with positive leading coordinate; throws unless exactly one line
std::vector<Rat> eigensymbol(const ManinSymbolSpace& S, int sign,
                             const std::vector<HeckeTarget>& targets);

// --- p-stabilization ------------------------------------------------------

// roots of X^2 - t X + n as conjugate elements of Q(sqrt(t^2 - 4n))
std::pair<QuadExt, QuadExt> quadratic_roots(const Rat& t, const Rat& n);

struct StabilizedSymbol {
    long p = 0;
    QuadExt alpha, beta;            // chosen U_p eigenvalue, and the other root
    QuadExt c;                      // coefficient of the degeneracy translate
    std::vector<Rat> pullback;      // level-Np data of phi
    std::vector<Rat> translate;     // level-Np data of the diag(p,1) translate
    std::vector<QuadExt> data;      // pullback - c * translate
};

// phi_alpha = pullback - c * translate with c solved from, and verified
// against, U_p phi_alpha = alpha phi_alpha; throws when no scalar works
StabilizedSymbol p_stabilize(const ManinSymbolSpace& SN, const std::vector<Rat>& m,
                             const ManinSymbolSpace& SNp, long p, const QuadExt& alpha,
                             const QuadExt& beta);

}  // namespace lpadic
