#pragma once

#include "lpadic/cyclotomic.hpp"
#include "lpadic/manin.hpp"
#include "lpadic/padic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lpadic {

// --- moment tables ---------------------------------------------------------

enum class Provenance { FROM_SYMBOL, SYNTHETIC_EXTREMAL, EXTENDED };

std::string provenance_name(Provenance pr);
Provenance provenance_from_name(const std::string& s);

// Finite-depth description of a distribution on Z_p^x with values in the
// quadratic coefficient field of alpha: the entry at (a, n, j) is
//
//     m(a, n, j) = integral over a + p^n Z_p of ((x - a)/p^n)^j
//
// for unit residues a mod p^n, 1 <= n <= depth, 0 <= j <= k. Tables are
// immutable after construction; every operation below reads them only.
struct MomentTable {
    long p = 0;
    long k = 0;
    long depth = 0;
    QuadExt alpha;   // U_p eigenvalue the table was built from (scaling datum)
    Provenance provenance = Provenance::FROM_SYMBOL;

    // levels[n-1][u*(k+1)+j], u the index of a in enumerate_units(p, n)
    std::vector<std::vector<QuadExt>> levels;

    const QuadExt& at(long n, long a, long j) const;
    QuadExt& at(long n, long a, long j);

    static MomentTable zeros(long p, long k, long depth, const QuadExt& alpha, Provenance pr);

    friend bool operator==(const MomentTable& x, const MomentTable& y) {
        return x.p == y.p && x.k == y.k && x.depth == y.depth && x.alpha == y.alpha &&
               x.provenance == y.provenance && x.levels == y.levels;
    }
};

// cell address, used by the report structs below
struct CellRef {
    long n = 0, a = 0, j = 0;
    std::string str() const;
};

// Moments of the measure attached to a U_p-eigensymbol of eigenvalue alpha on
// the space S (level divisible by p):
//
//     m(a, n, j) = alpha^{-n} * phi({a/p^n} - {oo})  paired with ((Y-aX)/p^n)^j X^{k-j}.
//
// The eigen relation U_p phi = alpha phi is re-verified before any cell is
// computed. The parallel kernel fills cells concurrently (they are disjoint);
// the serial twin is the reference implementation used to cross-check it.
MomentTable measure_from_symbol(const ManinSymbolSpace& S, const StabilizedSymbol& sym,
                                long depth);
MomentTable measure_from_symbol_serial(const ManinSymbolSpace& S, const StabilizedSymbol& sym,
                                       long depth);

// --- distribution invariants ------------------------------------------------

// Exact refinement identity between consecutive levels:
//   m(a,n,j) = sum over children b = a + t p^n of
//              sum_{i<=j} C(j,i) p^i t^{j-i} m(b, n+1, i).
// Reports the first failing cell (level-n side).
struct AdditivityReport {
    bool pass = true;
    CellRef witness;
};
AdditivityReport additivity_check(const MomentTable& T);

// Growth bound v_p(m(a,n,j)) >= v_p(A) - n h. The constant is calibrated on
// the shallow half of the table (n <= ceil(depth/2)) as
//   A = min over shallow cells of (v_p(m) + n h),
// and the verdict says whether every remaining cell respects it. The witness
// is the cell minimizing v_p(m) + n h; worst_slack = that minimum minus A
// (negative iff fail). Requires depth >= 2.
struct AdmissibilityReport {
    bool pass = false;
    HalfInt bound;       // calibrated v_p(A)
    CellRef witness;
    HalfInt worst_slack;
};
AdmissibilityReport admissibility_check(const MomentTable& T, HalfInt h);

// --- overconvergent extension (truncated Cauchy sums) ------------------------

// Integral of ((x-a)/p^N)^m over a + p^N Z_p computed from depth-n data by the
// truncated binomial sum
//   a_n = p^{-Nm} sum_{b = a mod p^N, b unit mod p^n} sum_{j<=J}
//             C(m,j) (b-a)^{m-j} p^{nj} m(b,n,j),
// J = m for m <= k (no truncation: the value is exact and equals the stored
// refinement), J = floor(h) for m > k. For m > k the result carries the
// certified lower bound
//   v_p(limit - a_n) >= A + (J+1)(n-N) - (n+1) h
// with A the calibrated admissibility constant; the table must pass the
// h-admissibility check with h < k+1.
struct ExtendedMoment {
    QuadExt value;
    HalfInt precision;   // certified v_p of the error; inf when exact
    bool exact = false;
};
ExtendedMoment amice_velu_extend(const MomentTable& T, HalfInt h, long a, long N, long m, long n);

// --- synthetic double-root seeds ---------------------------------------------

// Model of a rank-two U_p generalized eigenspace over Q(sqrt(p)): an eigen
// table e and a companion f with
//     refine(e at level n+1) = alpha * (e at level n)
//     refine(f at level n+1) = alpha * (f + e at level n)
// drawn pseudo-randomly over Z[sqrt(p)] subject to those exact constraints,
// plus the diagonal s_n = f_n - (n+1) e_n the extremal measure is read from.
// Level 0 is the single cell covering all of Z_p^x.
struct ExtremalSeed {
    long p = 0;
    long k = 0;
    long depth = 0;
    QuadExt alpha;                    // v_p(alpha) = (k+1)/2, coefficients in Q(sqrt(p))
    std::uint64_t rng_seed = 0;

    std::vector<QuadExt> e0, f0, s0;           // level-0 row, j = 0..k
    std::vector<std::vector<QuadExt>> e, f, s; // levels 1..depth, unit-major x j
};

// Deterministic in (p, k, alpha, depth, rng_seed); all values integral over
// Z[sqrt(p)]. zero_choices replaces every free draw by 0 (the zero seed).
// Requires v_p(alpha) = (k+1)/2 with alpha in Q(sqrt(p)), and k < p. A
// rational alpha (possible for odd k only) keeps every drawn value rational,
// so the resulting table embeds into Q_p.
ExtremalSeed synthetic_extremal_seed(long p, long k, const QuadExt& alpha, long depth,
                                     std::uint64_t rng_seed, bool zero_choices = false);

// m(a, n, j) = alpha^{-n} s(a, n, j), provenance SYNTHETIC_EXTREMAL.
MomentTable extremal_measure(const ExtremalSeed& seed);

// Verifies the rank-two structure carried by a seed:
//   eigen_ok:  refine(e_{n+1}) = alpha e_n at every level including 0,
//   jordan_ok: refine(f_{n+1}) = alpha (f_n + e_n) (the rank-two defect is
//              exactly the eigen table),
//   diagonal_ok: s_n = f_n - (n+1) e_n and s0 = f0 - e0 (weight-k
//              specialization row),
//   integral_ok: every stored value has trivial denominator,
//   nontrivial: the eigen table is not identically zero.
struct JordanReport {
    bool eigen_ok = false;
    bool jordan_ok = false;
    bool diagonal_ok = false;
    bool integral_ok = false;
    bool nontrivial = false;
    std::string detail;  // first failing relation, empty when all pass
    bool pass() const { return eigen_ok && jordan_ok && diagonal_ok && integral_ok; }
};
JordanReport jordan_pair_check(const ExtremalSeed& seed);

// --- character integrals ------------------------------------------------------

// Element of Q(zeta_M) tensor the quadratic coefficient field, stored on the
// power basis of the cyclotomic factor.
struct CycQuad {
    long M = 1;
    std::vector<QuadExt> c;  // length = degree of the reduced power basis

    bool is_zero() const;
    friend bool operator==(const CycQuad& x, const CycQuad& y) { return x.M == y.M && x.c == y.c; }
    friend bool operator!=(const CycQuad& x, const CycQuad& y) { return !(x == y); }
    std::string str() const;
};
CycQuad scale(const QuadExt& c, const CycQuad& v);

// Exact twisted moment  integral over Z_p^x of chi0(x) x^m dmu  for a
// Dirichlet character chi0 of conductor p^r (r <= depth) and 0 <= m <= k:
//   sum over units a mod p^L of chi0(a) sum_{j<=m} C(m,j) a^{m-j} p^{Lj} m(a,L,j)
// at the integration level L = level (default: max(r,1)). Any level with
// max(r,1) <= L <= depth gives the same exact value on an additive table.
CycQuad integrate_character(const MomentTable& T, const DirichletChar& chi0, long m,
                            long level = -1);

// --- the one-variable p-adic L-function ---------------------------------------

// L(s) = integral over Z_p^x of exp(s log<x>) dmu, computed per unit disc by
// the binomial series (1+u)^s about the Teichmueller center and term-by-term
// integration; moments beyond degree k come from amice_velu_extend at full
// depth. Values land in Q_p through the fixed embedding of the coefficient
// field (its discriminant must be a square in Q_p, or rational).
// certified is a lower bound for v_p(returned - true); ok says whether the
// request certified >= want_prec was met. s = 0 returns the exact total mass.
struct LpValue {
    Padic value;
    HalfInt certified;
    bool ok = false;
};
LpValue lp_eval(const MomentTable& T, const Padic& s, long want_prec);

// --- serialization -------------------------------------------------------------

// Deterministic JSON with exact rational strings; parse . serialize is the
// identity on the emitted text.
std::string moment_table_to_json(const MomentTable& T);
MomentTable moment_table_from_json(const std::string& text);

}  // namespace lpadic
