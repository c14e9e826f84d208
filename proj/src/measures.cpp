#include "lpadic/measures.hpp"

#include "json.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lpadic {

namespace {

using Units = LocallyConstantFn;

long pow_long(long p, long n) {
    long r = 1;
    for (long i = 0; i < n; i++) r *= p;
    return r;
}

long unit_count(long p, long n) { return n == 0 ? 1 : (p - 1) * pow_long(p, n - 1); }

// v_p with zero mapped to +inf
HalfInt qval(long p, const QuadExt& x) {
    return x.is_zero() ? HalfInt::inf() : quad_valuation(p, x);
}

// The value forced at cell (a, n, j) by the level-(n+1) data, through
//   ((x-a)/p^n)^j = sum_{i<=j} C(j,i) p^i ((x-b)/p^{n+1})^i ((b-a)/p^n)^{j-i}
// on the child disc of b. At n = 0 the parent is all of Z_p^x, the children
// are the unit residues b mod p, and the weight (b-a)/p^n degenerates to b.
template <class Get>
QuadExt refine_cell(long p, long n, long a, long j, const Rat& D, Get child) {
    QuadExt acc = QuadExt::rational(Rat(0), D);
    std::vector<long> kids;
    if (n == 0) {
        for (long b = 1; b < p; b++) kids.push_back(b);
    } else {
        long pn = pow_long(p, n);
        for (long t = 0; t < p; t++) kids.push_back(a + t * pn);
    }
    for (long b : kids) {
        long w = (n == 0) ? b : (b - a) / pow_long(p, n);
        for (long i = 0; i <= j; i++) {
            Rat coef = Rat(binom_int((unsigned long)j, (unsigned long)i)) *
                       Rat(pow_int(p, (unsigned long)i)) *
                       Rat(pow_int(Int(w), (unsigned long)(j - i)));
            acc = acc + coef * child(b, i);
        }
    }
    return acc;
}

}  // namespace

// --- MomentTable -------------------------------------------------------------

std::string provenance_name(Provenance pr) {
    switch (pr) {
        case Provenance::FROM_SYMBOL: return "FROM_SYMBOL";
        case Provenance::SYNTHETIC_EXTREMAL: return "SYNTHETIC_EXTREMAL";
        case Provenance::EXTENDED: return "EXTENDED";
    }
    throw std::logic_error("provenance_name: bad tag");
}

Provenance provenance_from_name(const std::string& s) {
    if (s == "FROM_SYMBOL") return Provenance::FROM_SYMBOL;
    if (s == "SYNTHETIC_EXTREMAL") return Provenance::SYNTHETIC_EXTREMAL;
    if (s == "EXTENDED") return Provenance::EXTENDED;
    throw std::invalid_argument("unknown provenance: " + s);
}

std::string CellRef::str() const {
    return "(a=" + std::to_string(a) + ", n=" + std::to_string(n) + ", j=" + std::to_string(j) +
           ")";
}

const QuadExt& MomentTable::at(long n, long a, long j) const {
    if (n < 1 || n > depth || j < 0 || j > k)
        throw std::out_of_range("MomentTable::at: bad cell");
    long u = Units::unit_index(p, n, a);
    return levels[(size_t)(n - 1)][(size_t)(u * (k + 1) + j)];
}

QuadExt& MomentTable::at(long n, long a, long j) {
    return const_cast<QuadExt&>(static_cast<const MomentTable&>(*this).at(n, a, j));
}

MomentTable MomentTable::zeros(long p, long k, long depth, const QuadExt& alpha, Provenance pr) {
    if (p < 2 || k < 0 || depth < 1) throw std::invalid_argument("MomentTable: bad shape");
    MomentTable T;
    T.p = p;
    T.k = k;
    T.depth = depth;
    T.alpha = alpha;
    T.provenance = pr;
    T.levels.resize((size_t)depth);
    for (long n = 1; n <= depth; n++)
        T.levels[(size_t)(n - 1)].assign((size_t)(unit_count(p, n) * (k + 1)),
                                         QuadExt::rational(Rat(0), alpha.D));
    return T;
}

// --- measure from a stabilized eigensymbol -----------------------------------

namespace {

MomentTable measure_impl(const ManinSymbolSpace& S, const StabilizedSymbol& sym, long depth,
                         bool parallel) {
    long p = sym.p, k = S.weight;
    if (depth < 1) throw std::invalid_argument("measure_from_symbol: depth must be >= 1");
    if (S.level % p != 0)
        throw std::invalid_argument("measure_from_symbol: space level is prime to p");
    if ((long)sym.data.size() != S.coords())
        throw std::invalid_argument("measure_from_symbol: data does not match the space");

    // the whole construction rests on the eigen relation; re-verify it
    std::vector<QuadExt> up = hecke(S, sym.data, p);
    for (size_t i = 0; i < up.size(); i++)
        if (up[i] != sym.alpha * sym.data[i])
            throw std::domain_error("measure_from_symbol: data is not a U_p eigenvector "
                                    "for the stated alpha");

    MomentTable T = MomentTable::zeros(p, k, depth, sym.alpha, Provenance::FROM_SYMBOL);

    struct Job {
        long n, a;
    };
    std::vector<Job> jobs;
    for (long n = 1; n <= depth; n++)
        for (long a : Units::enumerate_units(p, n)) jobs.push_back({n, a});

    long njobs = (long)jobs.size();
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long idx = 0; idx < njobs; idx++) {
        long n = jobs[(size_t)idx].n, a = jobs[(size_t)idx].a;
        QuadExt an = sym.alpha.pow(-n);
        std::vector<QuadExt> v =
            eval_to(S, sym.data, CuspPt{Int(a), pow_int(p, (unsigned long)n)});
        for (long j = 0; j <= k; j++) {
            QuadExt acc = QuadExt::rational(Rat(0), sym.alpha.D);
            for (long i = 0; i <= j; i++) {
                Rat c = Rat(binom_int((unsigned long)j, (unsigned long)i)) *
                        Rat(pow_int(Int(-a), (unsigned long)(j - i)));
                acc = acc + c * v[(size_t)i];
            }
            T.at(n, a, j) = pow_rat(p, -n * j) * (an * acc);
        }
    }
    return T;
}

}  // namespace

MomentTable measure_from_symbol(const ManinSymbolSpace& S, const StabilizedSymbol& sym,
                                long depth) {
    return measure_impl(S, sym, depth, true);
}

MomentTable measure_from_symbol_serial(const ManinSymbolSpace& S, const StabilizedSymbol& sym,
                                       long depth) {
    return measure_impl(S, sym, depth, false);
}

// --- invariants ---------------------------------------------------------------

AdditivityReport additivity_check(const MomentTable& T) {
    AdditivityReport rep;
    for (long n = 1; n < T.depth; n++) {
        for (long a : Units::enumerate_units(T.p, n)) {
            for (long j = 0; j <= T.k; j++) {
                QuadExt expect = refine_cell(
                    T.p, n, a, j, T.alpha.D,
                    [&](long b, long i) -> const QuadExt& { return T.at(n + 1, b, i); });
                if (!(expect == T.at(n, a, j))) {
                    rep.pass = false;
                    rep.witness = {n, a, j};
                    return rep;
                }
            }
        }
    }
    return rep;
}

AdmissibilityReport admissibility_check(const MomentTable& T, HalfInt h) {
    if (T.depth < 2)
        throw std::invalid_argument("admissibility_check: depth >= 2 required to calibrate");
    long shallow = (T.depth + 1) / 2;
    AdmissibilityReport rep;
    HalfInt A = HalfInt::inf(), worst = HalfInt::inf();
    CellRef wit;
    for (long n = 1; n <= T.depth; n++) {
        for (long a : Units::enumerate_units(T.p, n)) {
            for (long j = 0; j <= T.k; j++) {
                HalfInt s = qval(T.p, T.at(n, a, j)) + n * h;
                if (n <= shallow && s < A) A = s;
                if (s < worst) {
                    worst = s;
                    wit = {n, a, j};
                }
            }
        }
    }
    rep.bound = A;
    rep.witness = wit;
    rep.worst_slack = worst - A;
    rep.pass = worst >= A;
    return rep;
}

// --- truncated Cauchy extension -------------------------------------------------

ExtendedMoment amice_velu_extend(const MomentTable& T, HalfInt h, long a, long N, long m,
                                 long n) {
    if (m < 0 || N < 1) throw std::invalid_argument("amice_velu_extend: bad target");
    if (n < N) throw std::invalid_argument("amice_velu_extend: working level below target level");
    if (n > T.depth)
        throw std::domain_error("amice_velu_extend: insufficient depth (have " +
                                std::to_string(T.depth) + ", need " + std::to_string(n) + ")");
    if (a % T.p == 0) throw std::invalid_argument("amice_velu_extend: center is not a unit");
    if (m > T.k && !(h < HalfInt::of_int(T.k + 1)))
        throw std::domain_error("amice_velu_extend: extension requires h < k+1");

    AdmissibilityReport adm = admissibility_check(T, h);
    if (!adm.pass)
        throw std::domain_error("amice_velu_extend: table is not h-admissible, witness " +
                                adm.witness.str());

    long J = (m <= T.k) ? m : h.floor();
    long pN = pow_long(T.p, N), amod = ((a % pN) + pN) % pN;
    QuadExt acc = QuadExt::rational(Rat(0), T.alpha.D);
    for (long b : Units::enumerate_units(T.p, n)) {
        if ((b - amod) % pN != 0) continue;
        Int w(b - amod);
        for (long j = 0; j <= J; j++) {
            Rat coef = Rat(binom_int((unsigned long)m, (unsigned long)j)) *
                       Rat(pow_int(w, (unsigned long)(m - j))) * pow_rat(T.p, n * j);
            acc = acc + coef * T.at(n, b, j);
        }
    }
    ExtendedMoment out;
    out.value = pow_rat(T.p, -N * m) * acc;
    if (m <= T.k) {
        out.exact = true;
        out.precision = HalfInt::inf();
    } else {
        out.exact = false;
        out.precision = adm.bound + HalfInt::of_int((J + 1) * (n - N)) - (n + 1) * h;
    }
    return out;
}

// --- synthetic double-root seeds -------------------------------------------------

namespace {

struct SeedRng {
    std::mt19937_64 gen;
    bool zero;
    bool rational_only;  // keep every draw inside Q (seeds with rational alpha)
    SeedRng(std::uint64_t seed, bool zero_, bool rational_)
        : gen(seed), zero(zero_), rational_only(rational_) {}
    // platform-independent small draw in [-9, 9]
    QuadExt draw(long p) {
        if (zero) return QuadExt(Rat(0), Rat(0), Rat(p));
        long x = (long)(gen() % 19) - 9;
        long y = (long)(gen() % 19) - 9;
        if (rational_only) y = 0;
        return QuadExt(Rat(x), Rat(y), Rat(p));
    }
};

bool integral(const QuadExt& x) { return x.a.get_den() == 1 && x.b.get_den() == 1; }

// digit ell of an integral Z[sqrt(p)] element known to be divisible by p^ell,
// as a pair of residues in [0, p)
std::pair<long, long> theta_digit(const QuadExt& x, long p, long ell) {
    Int q = pow_int(p, (unsigned long)ell);
    Int na = x.a.get_num(), nb = x.b.get_num();
    if (x.a.get_den() != 1 || x.b.get_den() != 1 || na % q != 0 || nb % q != 0)
        throw std::logic_error("theta_digit: element not divisible by p^ell");
    long da = mpz_class((na / q) % p).get_si(), db = mpz_class((nb / q) % p).get_si();
    if (da < 0) da += p;
    if (db < 0) db += p;
    return {da, db};
}

// Children slices sigma[i][t] (t = 0..p-1, children b = a + t p^n) solving
//   sum_t sum_{i<=j} C(j,i) p^i t^{j-i} sigma[i][t] = w[j],   j = 0..k,
// over Z[sqrt(p)], with all remaining freedom drawn from rng. Processes j
// upward; the p-digit ell of the j-th constraint defect is cleared by a
// finite-difference correction on slice ell (supported on t = 0..j-ell),
// which leaves the sums and all lower weighted moments of that slice intact.
std::vector<std::vector<QuadExt>> solve_children(long p, long k, const std::vector<QuadExt>& w,
                                                 SeedRng& rng) {
    Rat D = Rat(p);
    std::vector<std::vector<QuadExt>> sigma((size_t)(k + 1));
    auto Wmom = [&](long i, long d) {  // sum_t t^d sigma[i][t]
        QuadExt s = QuadExt::rational(Rat(0), D);
        for (long t = 0; t < p; t++)
            s = s + Rat(pow_int(Int(t), (unsigned long)d)) * sigma[(size_t)i][(size_t)t];
        return s;
    };
    auto defect = [&](long j) {  // w_j minus the contribution of slices < j
        QuadExt r = w[(size_t)j];
        for (long i = 0; i < j; i++) {
            Rat c = Rat(binom_int((unsigned long)j, (unsigned long)i)) *
                    Rat(pow_int(p, (unsigned long)i));
            r = r - c * Wmom(i, j - i);
        }
        return r;
    };
    for (long j = 0; j <= k; j++) {
        sigma[(size_t)j].clear();
        for (long t = 0; t < p; t++) sigma[(size_t)j].push_back(rng.draw(p));
        for (long ell = 0; ell < j; ell++) {
            auto [da, db] = theta_digit(defect(j), p, ell);
            if (da == 0 && db == 0) continue;
            long d = j - ell;  // order of the finite-difference correction
            long inv = (long)mpz_class(invmod(binom_int((unsigned long)j, (unsigned long)ell) *
                                                  factorial_int((unsigned long)d),
                                              Int(p)))
                           .get_si();
            QuadExt c(Rat(mod_pos(Int(da * inv), Int(p))), Rat(mod_pos(Int(db * inv), Int(p))),
                      D);
            for (long u = 0; u <= d; u++) {
                Rat fd = Rat(((d - u) % 2 == 0 ? 1 : -1) *
                             binom_int((unsigned long)d, (unsigned long)u));
                sigma[(size_t)ell][(size_t)u] = sigma[(size_t)ell][(size_t)u] + fd * c;
            }
        }
        QuadExt R = defect(j);
        Rat pj = pow_rat(p, j);
        QuadExt target(R.a / pj, R.b / pj, D);
        if (!integral(target)) throw std::logic_error("solve_children: digit clearing failed");
        sigma[(size_t)j][0] = sigma[(size_t)j][0] + (target - Wmom(j, 0));
    }
    for (long j = 0; j <= k; j++) {  // exact post-verification of every constraint
        QuadExt lhs = QuadExt::rational(Rat(0), D);
        for (long i = 0; i <= j; i++)
            lhs = lhs + Rat(binom_int((unsigned long)j, (unsigned long)i)) *
                            Rat(pow_int(p, (unsigned long)i)) * Wmom(i, j - i);
        if (!(lhs == w[(size_t)j])) throw std::logic_error("solve_children: constraint violated");
    }
    return sigma;
}

}  // namespace

ExtremalSeed synthetic_extremal_seed(long p, long k, const QuadExt& alpha, long depth,
                                     std::uint64_t rng_seed, bool zero_choices) {
    if (p < 3 || k < 0 || depth < 2)
        throw std::invalid_argument("synthetic_extremal_seed: need p >= 3, k >= 0, depth >= 2");
    if (k >= p)
        throw std::invalid_argument("synthetic_extremal_seed: digit clearing requires k < p");
    if (!(alpha.D == Rat(p)) && !alpha.is_rational())
        throw std::invalid_argument("synthetic_extremal_seed: alpha must lie in Q(sqrt(p)) or Q");
    if (!(quad_valuation(p, alpha) == HalfInt::halves(k + 1)))
        throw std::invalid_argument("synthetic_extremal_seed: v_p(alpha) must equal (k+1)/2");

    // rational alpha (odd k only): keep the whole seed inside Q so the table
    // embeds into Q_p and lp_eval applies
    SeedRng rng(rng_seed, zero_choices, alpha.is_rational());
    Rat D(p);
    long kk = k + 1;

    // raw tables Et, Ft: level 1 free, deeper levels solved so that
    //   refine(Et_{n+1}) = alpha Et_n,  refine(Ft_{n+1}) = alpha (Ft_n + Et_n)
    std::vector<std::vector<QuadExt>> Et((size_t)depth), Ft((size_t)depth);
    Et[0].resize((size_t)(unit_count(p, 1) * kk));
    Ft[0].resize((size_t)(unit_count(p, 1) * kk));
    for (auto& x : Et[0]) x = rng.draw(p);
    for (auto& x : Ft[0]) x = rng.draw(p);

    for (long n = 1; n < depth; n++) {
        Et[(size_t)n].assign((size_t)(unit_count(p, n + 1) * kk), QuadExt::rational(Rat(0), D));
        Ft[(size_t)n].assign((size_t)(unit_count(p, n + 1) * kk), QuadExt::rational(Rat(0), D));
        long pn = pow_long(p, n);
        for (long a : Units::enumerate_units(p, n)) {
            long u = Units::unit_index(p, n, a);
            std::vector<QuadExt> wE, wF;
            for (long j = 0; j <= k; j++) {
                const QuadExt& ev = Et[(size_t)(n - 1)][(size_t)(u * kk + j)];
                const QuadExt& fv = Ft[(size_t)(n - 1)][(size_t)(u * kk + j)];
                wE.push_back(alpha * ev);
                wF.push_back(alpha * (fv + ev));
            }
            auto sE = solve_children(p, k, wE, rng);
            auto sF = solve_children(p, k, wF, rng);
            for (long t = 0; t < p; t++) {
                long uc = Units::unit_index(p, n + 1, a + t * pn);
                for (long j = 0; j <= k; j++) {
                    Et[(size_t)n][(size_t)(uc * kk + j)] = sE[(size_t)j][(size_t)t];
                    Ft[(size_t)n][(size_t)(uc * kk + j)] = sF[(size_t)j][(size_t)t];
                }
            }
        }
    }

    // final tables: e_n = alpha Et_n, f_n = alpha Ft_n for n >= 1; the level-0
    // row is then forced by the same relations and stays integral.
    ExtremalSeed seed;
    seed.p = p;
    seed.k = k;
    seed.depth = depth;
    seed.alpha = alpha;
    seed.rng_seed = rng_seed;
    seed.e.resize((size_t)depth);
    seed.f.resize((size_t)depth);
    seed.s.resize((size_t)depth);
    for (long n = 1; n <= depth; n++) {
        size_t sz = Et[(size_t)(n - 1)].size();
        seed.e[(size_t)(n - 1)].resize(sz);
        seed.f[(size_t)(n - 1)].resize(sz);
        seed.s[(size_t)(n - 1)].resize(sz);
        for (size_t i = 0; i < sz; i++) {
            seed.e[(size_t)(n - 1)][i] = alpha * Et[(size_t)(n - 1)][i];
            seed.f[(size_t)(n - 1)][i] = alpha * Ft[(size_t)(n - 1)][i];
            seed.s[(size_t)(n - 1)][i] =
                seed.f[(size_t)(n - 1)][i] - Rat(n + 1) * seed.e[(size_t)(n - 1)][i];
        }
    }
    for (long j = 0; j <= k; j++) {
        long kk1 = kk;
        auto childE = [&](long b, long i) -> const QuadExt& {
            return Et[0][(size_t)(Units::unit_index(p, 1, b) * kk1 + i)];
        };
        auto childF = [&](long b, long i) -> const QuadExt& {
            return Ft[0][(size_t)(Units::unit_index(p, 1, b) * kk1 + i)];
        };
        QuadExt e0 = refine_cell(p, 0, 0, j, D, childE);
        QuadExt f0 = refine_cell(p, 0, 0, j, D, childF) - e0;
        seed.e0.push_back(e0);
        seed.f0.push_back(f0);
        seed.s0.push_back(f0 - e0);
    }
    return seed;
}

MomentTable extremal_measure(const ExtremalSeed& seed) {
    MomentTable T = MomentTable::zeros(seed.p, seed.k, seed.depth, seed.alpha,
                                       Provenance::SYNTHETIC_EXTREMAL);
    for (long n = 1; n <= seed.depth; n++) {
        QuadExt an = seed.alpha.pow(-n);
        auto& lvl = T.levels[(size_t)(n - 1)];
        const auto& sv = seed.s[(size_t)(n - 1)];
        for (size_t i = 0; i < lvl.size(); i++) lvl[i] = an * sv[i];
    }
    return T;
}

JordanReport jordan_pair_check(const ExtremalSeed& seed) {
    JordanReport rep;
    long p = seed.p, k = seed.k, kk = k + 1;
    Rat D = seed.alpha.D;
    auto fail = [&](const std::string& what, const CellRef& c) {
        if (rep.detail.empty()) rep.detail = what + " at " + c.str();
    };

    rep.eigen_ok = rep.jordan_ok = rep.diagonal_ok = rep.integral_ok = true;

    auto eAt = [&](long n, long b, long i) -> const QuadExt& {
        return seed.e[(size_t)(n - 1)][(size_t)(Units::unit_index(p, n, b) * kk + i)];
    };
    auto fAt = [&](long n, long b, long i) -> const QuadExt& {
        return seed.f[(size_t)(n - 1)][(size_t)(Units::unit_index(p, n, b) * kk + i)];
    };
    auto sAt = [&](long n, long b, long i) -> const QuadExt& {
        return seed.s[(size_t)(n - 1)][(size_t)(Units::unit_index(p, n, b) * kk + i)];
    };

    for (long n = 0; n < seed.depth; n++) {
        std::vector<long> parents = (n == 0) ? std::vector<long>{0} : Units::enumerate_units(p, n);
        for (long a : parents) {
            for (long j = 0; j <= k; j++) {
                QuadExt re = refine_cell(p, n, a, j, D,
                                         [&](long b, long i) { return eAt(n + 1, b, i); });
                QuadExt rf = refine_cell(p, n, a, j, D,
                                         [&](long b, long i) { return fAt(n + 1, b, i); });
                const QuadExt& en = (n == 0) ? seed.e0[(size_t)j] : eAt(n, a, j);
                const QuadExt& fn = (n == 0) ? seed.f0[(size_t)j] : fAt(n, a, j);
                if (!(re == seed.alpha * en)) {
                    rep.eigen_ok = false;
                    fail("eigen refinement", {n, a, j});
                }
                if (!(rf == seed.alpha * (fn + en))) {
                    rep.jordan_ok = false;
                    fail("rank-two refinement", {n, a, j});
                }
            }
        }
    }
    for (long n = 1; n <= seed.depth; n++) {
        for (long a : Units::enumerate_units(p, n)) {
            for (long j = 0; j <= k; j++) {
                if (!(sAt(n, a, j) == fAt(n, a, j) - Rat(n + 1) * eAt(n, a, j))) {
                    rep.diagonal_ok = false;
                    fail("diagonal s = f - (n+1)e", {n, a, j});
                }
            }
        }
    }
    for (long j = 0; j <= k; j++) {
        if (!(seed.s0[(size_t)j] == seed.f0[(size_t)j] - seed.e0[(size_t)j])) {
            rep.diagonal_ok = false;
            fail("weight-k specialization row", {0, 0, j});
        }
    }
    for (long n = 1; n <= seed.depth; n++)
        for (const auto& table : {&seed.e, &seed.f, &seed.s})
            for (const QuadExt& x : (*table)[(size_t)(n - 1)])
                if (!integral(x)) {
                    rep.integral_ok = false;
                    fail("integrality", {n, -1, -1});
                }
    for (const auto& row : {&seed.e0, &seed.f0, &seed.s0})
        for (const QuadExt& x : *row)
            if (!integral(x)) {
                rep.integral_ok = false;
                fail("integrality", {0, 0, -1});
            }

    for (long n = 1; n <= seed.depth && !rep.nontrivial; n++)
        for (const QuadExt& x : seed.e[(size_t)(n - 1)])
            if (!x.is_zero()) {
                rep.nontrivial = true;
                break;
            }
    return rep;
}

// --- character integrals ---------------------------------------------------------

bool CycQuad::is_zero() const {
    for (const QuadExt& x : c)
        if (!x.is_zero()) return false;
    return true;
}

std::string CycQuad::str() const {
    std::string s = "[";
    for (size_t i = 0; i < c.size(); i++) s += (i ? ", " : "") + c[i].str();
    return s + "] over Q(zeta_" + std::to_string(M) + ")";
}

CycQuad scale(const QuadExt& c, const CycQuad& v) {
    CycQuad out = v;
    for (QuadExt& x : out.c) x = c * x;
    return out;
}

CycQuad integrate_character(const MomentTable& T, const DirichletChar& chi0, long m, long level) {
    if (m < 0 || m > T.k)
        throw std::invalid_argument("integrate_character: moment degree must satisfy 0 <= m <= k");
    if (chi0.prime() != 0 && chi0.prime() != T.p)
        throw std::invalid_argument("integrate_character: character prime mismatch");
    DirichletChar chi = chi0.primitive();
    long r = chi.conductor_exponent();
    long lvl = (level < 0) ? std::max(r, 1L) : level;
    if (lvl < std::max(r, 1L))
        throw std::invalid_argument("integrate_character: level below the conductor");
    if (lvl > T.depth)
        throw std::domain_error("integrate_character: insufficient depth (need level " +
                                std::to_string(lvl) + ", have " + std::to_string(T.depth) + ")");

    CycQuad out;
    out.M = chi.value_field();
    bool sized = false;
    for (long a : Units::enumerate_units(T.p, lvl)) {
        Cyclo cv = chi.value(a);
        if (!sized) {
            out.c.assign(cv.coeffs().size(), QuadExt::rational(Rat(0), T.alpha.D));
            sized = true;
        }
        QuadExt inner = QuadExt::rational(Rat(0), T.alpha.D);
        for (long j = 0; j <= m; j++) {
            Rat coef = Rat(binom_int((unsigned long)m, (unsigned long)j)) *
                       Rat(pow_int(Int(a), (unsigned long)(m - j))) * pow_rat(T.p, lvl * j);
            inner = inner + coef * T.at(lvl, a, j);
        }
        const std::vector<Rat>& cc = cv.coeffs();
        for (size_t i = 0; i < cc.size(); i++)
            if (cc[i] != 0) out.c[i] = out.c[i] + cc[i] * inner;
    }
    return out;
}

// --- p-adic L-function ------------------------------------------------------------

namespace {

long vp_factorial(long m, long p) {
    long v = 0;
    for (long q = p; q <= m; q *= p) v += m / q;
    return v;
}

// embed a table value into Q_p at precision prec
Padic embed_value(long p, const QuadExt& x, long prec) {
    if (x.is_rational()) return Padic(p, x.a, prec);
    return quad_embed(p, x, prec).with_precision(prec);
}

}  // namespace

LpValue lp_eval(const MomentTable& T, const Padic& s, long want_prec) {
    long p = T.p, k = T.k;
    if (p < 3) throw std::invalid_argument("lp_eval: odd p required");
    if (s.prime() != p) throw std::invalid_argument("lp_eval: s lives at the wrong prime");
    if (!(T.alpha.is_rational() || quad_splits(p, T.alpha.D)))
        throw std::domain_error("lp_eval: coefficient field does not embed into Q_p");

    // radius of the binomial series (1+u)^s with v_p(u) >= 1: the honest
    // requirement is v_p(s) > 1/(p-1) - 1, slightly stronger than > -1
    HalfInt v0 = s.valuation();
    if (v0 > HalfInt::of_int(0)) v0 = HalfInt::of_int(0);
    if (!((p - 1) * (HalfInt::of_int(1) + v0) > HalfInt{2}))
        throw std::domain_error("lp_eval: v_p(s) too small for the unit-power series");

    // exact special case: s = 0 integrates the constant 1
    if (s.exact() && s.is_zero_to_precision()) {
        QuadExt mass = QuadExt::rational(Rat(0), T.alpha.D);
        for (long a : Units::enumerate_units(p, 1)) mass = mass + T.at(1, a, 0);
        LpValue out;
        if (mass.is_rational()) {
            out.value = Padic(p, mass.a);
            out.certified = HalfInt::inf();
        } else {
            long W = want_prec + 8;
            out.value = embed_value(p, mass, W);
            out.certified = HalfInt::of_int(W);
        }
        out.ok = out.certified >= HalfInt::of_int(want_prec);
        return out;
    }

    HalfInt h = qval(p, T.alpha);
    AdmissibilityReport adm = admissibility_check(T, h);
    if (!adm.pass)
        throw std::domain_error("lp_eval: table fails v_p(alpha)-admissibility, witness " +
                                adm.witness.str());
    if (adm.bound.is_inf()) {  // the zero distribution integrates everything to 0
        return LpValue{Padic(p, Rat(0)), HalfInt::inf(), true};
    }

    long W = want_prec + 2 * k + 24;

    // A-priori lower bound for v_p of p^i * (integral of ((x-a)/p)^i over the
    // disc of a), valid for stored moments and truncated Cauchy extensions
    // alike: every term of the extension sum has valuation >= A - depth*h.
    HalfInt vI_lb = adm.bound - T.depth * h;

    // term m of the binomial series then has valuation at least
    //   c(m) = m + m*v0 - v_p(m!) + vI_lb.
    auto cbound = [&](long m) {
        return HalfInt{2 * m} + m * v0 - HalfInt::of_int(vp_factorial(m, p)) + vI_lb;
    };

    // Envelope with v_p(m!) <= (m-1)/(p-1); its slope 1 + v0 - 1/(p-1) is
    // positive on the admitted domain of s, so beyond m_env every term bound
    // clears want_prec + 1.
    Rat rv0 = Rat(v0.tw) / 2, rvI = Rat(vI_lb.tw) / 2;
    Rat slope = Rat(1) + rv0 - Rat(1, p - 1);
    Rat need = Rat(want_prec + 1) - rvI - Rat(1, p - 1);
    long m_env = k + 1;
    if (need > 0) {
        Rat q = need / slope;
        m_env = std::max(m_env, mpz_class(q.get_num() / q.get_den()).get_si() + 2);
    }
    const long m_cap = 64 + 8 * (want_prec + 16);
    bool capped = m_env > m_cap;
    if (capped) m_env = m_cap;

    // terms 0..m_stop are summed; everything beyond is certified small
    long m_stop = k;
    for (long m = 0; m <= m_env; m++)
        if (cbound(m) < HalfInt::of_int(want_prec + 1)) m_stop = std::max(m_stop, m);

    std::vector<long> units = Units::enumerate_units(p, 1);
    std::vector<std::vector<Padic>> I(units.size());
    auto moment = [&](size_t ui, long i) -> const Padic& {
        auto& vec = I[ui];
        while ((long)vec.size() <= i) {
            long ii = (long)vec.size();
            Padic mi;
            if (ii <= k) {
                mi = Padic(p, pow_rat(p, ii), Padic::PREC_INF) *
                     embed_value(p, T.at(1, units[ui], ii), W);
            } else {
                ExtendedMoment em = amice_velu_extend(T, h, units[ui], 1, ii, T.depth);
                long cap = std::min(W, em.precision.floor());
                mi = Padic(p, pow_rat(p, ii), Padic::PREC_INF) * embed_value(p, em.value, cap);
            }
            vec.push_back(mi);
        }
        return vec[(size_t)i];
    };

    std::vector<Padic> acen, ainv;
    for (long a : units) {
        Padic teich = teichmuller(p, Int(a), W);
        acen.push_back(Padic(p, Rat(a)) - teich);  // a minus its Teichmueller lift
        ainv.push_back(teich.inverse());
    }

    Padic total(p, Rat(0));
    Padic bin(p, Rat(1));  // binom(s, m), updated multiplicatively
    bool terminated = false;  // the series is a polynomial (s a small natural number)
    for (long m = 0; m <= m_stop; m++) {
        if (m > 0) bin = bin * (s - Padic(p, Rat(m - 1))) * Padic(p, Rat(1) / Rat(m));
        if (bin.exact() && bin.is_zero_to_precision()) {
            terminated = true;
            break;
        }
        for (size_t ui = 0; ui < units.size(); ui++) {
            Padic inner(p, Rat(0));
            for (long i = 0; i <= m; i++) {
                Padic coef(p, Rat(binom_int((unsigned long)m, (unsigned long)i)));
                Padic pw(p, Rat(1));
                for (long t = 0; t < m - i; t++) pw = pw * acen[ui];
                inner = inner + coef * pw * moment(ui, i);
            }
            Padic scale = bin;
            for (long t = 0; t < m; t++) scale = scale * ainv[ui];
            total = total + scale * inner;
        }
    }

    HalfInt tail = HalfInt::inf();
    if (!terminated) {
        tail = capped ? cbound(m_env) : HalfInt::of_int(want_prec + 1);
        for (long m = m_stop + 1; m <= m_env; m++) tail = std::min(tail, cbound(m));
    }
    LpValue out;
    HalfInt arith = total.exact() ? HalfInt::inf() : HalfInt::of_int(total.precision());
    out.certified = std::min(arith, tail);
    out.value = out.certified.is_inf() ? total : total.with_precision(out.certified.floor());
    out.ok = out.certified >= HalfInt::of_int(want_prec);
    return out;
}

// --- serialization ------------------------------------------------------------------

std::string moment_table_to_json(const MomentTable& T) {
    nlohmann::json j;
    j["p"] = T.p;
    j["k"] = T.k;
    j["depth"] = T.depth;
    j["provenance"] = provenance_name(T.provenance);
    j["alpha"] = {{"a", rat_str(T.alpha.a)}, {"b", rat_str(T.alpha.b)}, {"D", rat_str(T.alpha.D)}};
    nlohmann::json arr = nlohmann::json::array();
    for (long n = 1; n <= T.depth; n++) {
        for (long a : Units::enumerate_units(T.p, n)) {
            for (long jj = 0; jj <= T.k; jj++) {
                const QuadExt& v = T.at(n, a, jj);
                arr.push_back({{"a", a},
                               {"n", n},
                               {"j", jj},
                               {"value", {{"a", rat_str(v.a)}, {"b", rat_str(v.b)}}}});
            }
        }
    }
    j["moments"] = std::move(arr);
    return j.dump(1);
}

MomentTable moment_table_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("moment table: malformed JSON: ") + e.what());
    }
    try {
        long p = j.at("p").get<long>(), k = j.at("k").get<long>(),
             depth = j.at("depth").get<long>();
        QuadExt alpha(rat_from_str(j.at("alpha").at("a").get<std::string>()),
                      rat_from_str(j.at("alpha").at("b").get<std::string>()),
                      rat_from_str(j.at("alpha").at("D").get<std::string>()));
        MomentTable T = MomentTable::zeros(
            p, k, depth, alpha, provenance_from_name(j.at("provenance").get<std::string>()));
        std::vector<std::vector<bool>> seen((size_t)depth);
        for (long n = 1; n <= depth; n++)
            seen[(size_t)(n - 1)].assign((size_t)(unit_count(p, n) * (k + 1)), false);
        for (const auto& e : j.at("moments")) {
            long a = e.at("a").get<long>(), n = e.at("n").get<long>(), jj = e.at("j").get<long>();
            if (n < 1 || n > depth || jj < 0 || jj > k || a <= 0 || a % p == 0 ||
                a >= pow_long(p, n))
                throw std::invalid_argument("moment table: cell out of range");
            long slot = Units::unit_index(p, n, a) * (k + 1) + jj;
            if (seen[(size_t)(n - 1)][(size_t)slot])
                throw std::invalid_argument("moment table: duplicate cell");
            seen[(size_t)(n - 1)][(size_t)slot] = true;
            T.levels[(size_t)(n - 1)][(size_t)slot] =
                QuadExt(rat_from_str(e.at("value").at("a").get<std::string>()),
                        rat_from_str(e.at("value").at("b").get<std::string>()), alpha.D);
        }
        for (const auto& lvl : seen)
            for (bool b : lvl)
                if (!b) throw std::invalid_argument("moment table: missing cell");
        return T;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("moment table: bad schema: ") + e.what());
    }
}

}  // namespace lpadic
