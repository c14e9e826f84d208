#include <lpadic/manin.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace lpadic {

namespace {

// coefficients of (u x + v y)^e in the basis y^s x^(e-s)
std::vector<Rat> binom_pow(const Int& u, const Int& v, long e) {
    std::vector<Rat> c((size_t)e + 1, Rat(0));
    Int binom = 1;
    for (long s = 0; s <= e; s++) {
        c[(size_t)s] = Rat(binom * pow_int(u, (unsigned long)(e - s)) * pow_int(v, (unsigned long)s));
        binom = binom * (e - s) / (s + 1);
    }
    return c;
}

const Mat2 kS{Int(0), Int(-1), Int(1), Int(0)};
const Mat2 kTau{Int(0), Int(-1), Int(1), Int(-1)};

Mat2 upper_t(long j) { return {Int(1), Int(j), Int(0), Int(1)}; }

bool is_prime(long q) {
    if (q < 2) return false;
    for (long d = 2; d * d <= q; d++)
        if (q % d == 0) return false;
    return true;
}

// SL2(Z) matrix with prescribed bottom row (c, d) mod M
Mat2 lift_bottom_row(long c, long d, long M) {
    if (M == 1) return Mat2::identity();
    for (long j = 0;; j++) {
        if (j > M + 1) throw std::logic_error("lift_bottom_row: no coprime lift found");
        Int cc(c), dd(d + j * M);
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), dd.get_mpz_t(), cc.get_mpz_t());
        if (g != 1) continue;
        // s*d' + t*c = 1, so (s  -t; c  d') has determinant 1
        return {s, -t, cc, dd};
    }
}

std::vector<Rat> scale_primitive(std::vector<Rat> v) {
    Int l(1), g(0);
    for (const Rat& x : v) l = lcm(l, x.get_den());
    for (Rat& x : v) x *= Rat(l);
    for (const Rat& x : v) g = gcd(g, x.get_num());
    if (g == 0) return v;
    for (Rat& x : v) x /= Rat(g);
    for (const Rat& x : v)
        if (x != 0) {
            if (x < 0)
                for (Rat& y : v) y = -y;
            break;
        }
    return v;
}

}  // namespace

std::vector<std::vector<Rat>> weight_matrix(long k, const Mat2& B) {
    std::vector<std::vector<Rat>> W((size_t)k + 1, std::vector<Rat>((size_t)k + 1, Rat(0)));
    for (long j = 0; j <= k; j++) {
        std::vector<Rat> p1 = binom_pow(B.b, B.d, j);
        std::vector<Rat> p2 = binom_pow(B.a, B.c, k - j);
        for (long s = 0; s <= j; s++)
            for (long t = 0; t <= k - j; t++) W[(size_t)j][(size_t)(s + t)] += p1[(size_t)s] * p2[(size_t)t];
    }
    return W;
}

CuspPt apply_mobius(const Mat2& g, const CuspPt& s) {
    return {g.a * s.num + g.b * s.den, g.c * s.num + g.d * s.den};
}

std::vector<Mat2> convergent_chain(const Rat& r) {
    Int num = r.get_num(), den = r.get_den();
    std::vector<Int> as;
    while (den != 0) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        as.push_back(q);
        Int rem = num - q * den;
        num = den;
        den = rem;
    }
    std::vector<Mat2> out;
    Int pm1(1), qm1(0);
    Int pc = as[0], qc(1);
    long sign = -1;  // (-1)^(i-1) at i = 0
    out.push_back({Int(sign) * pc, pm1, Int(sign) * qc, qm1});
    for (size_t i = 1; i < as.size(); i++) {
        Int pn = as[i] * pc + pm1, qn = as[i] * qc + qm1;
        pm1 = pc;
        qm1 = qc;
        pc = pn;
        qc = qn;
        sign = -sign;
        out.push_back({Int(sign) * pc, pm1, Int(sign) * qc, qm1});
    }
    return out;
}

long ManinSymbolSpace::p1_index(const Int& c, const Int& d) const {
    long M = level;
    Int cm = c % M, dm = d % M;
    if (cm < 0) cm += M;
    if (dm < 0) dm += M;
    long idx = norm_table[(size_t)(cm.get_si() * M + dm.get_si())];
    if (idx < 0) throw std::invalid_argument("p1_index: not a point of P^1(Z/M)");
    return idx;
}

ManinSymbolSpace ManinSymbolSpace::build(long M, long k) {
    if (M < 1 || k < 0) throw std::invalid_argument("build: need level >= 1 and weight >= 0");
    if (M * (k + 1) > 2000) throw std::invalid_argument("build: level*(weight+1) exceeds the supported size");
    ManinSymbolSpace S;
    S.level = M;
    S.weight = k;
    S.norm_table.assign((size_t)(M * M), -1);

    std::vector<long> units;
    for (long u = 0; u < M; u++)
        if (std::gcd(u, M) == 1) units.push_back(u);

    for (long c = 0; c < M; c++)
        for (long d = 0; d < M; d++) {
            if (std::gcd(std::gcd(c, d), M) != 1) continue;
            std::pair<long, long> best(M, M);
            for (long u : units) best = std::min(best, std::make_pair(u * c % M, u * d % M));
            long idx;
            if (best == std::make_pair(c, d)) {
                idx = (long)S.pts.size();
                S.pts.push_back(best);
                S.lifts.push_back(lift_bottom_row(c, d, M));
            } else {
                idx = S.norm_table[(size_t)(best.first * M + best.second)];
            }
            S.norm_table[(size_t)(c * M + d)] = idx;
        }

    // relation rows: for every point x and monomial j,
    //   two-term:   m(x) + m(xS)|S^{-1} = 0
    //   three-term: m(x) + m(xT)|T^2 + m(xT^2)|T = 0   (T the order-3 rotation)
    //   sign:       m(x) - m(x)|(-1) = 0
    long kk = k + 1, n = S.npts();
    auto WSi = weight_matrix(k, kS.adj());
    auto Wt = weight_matrix(k, kTau);
    auto Wtt = weight_matrix(k, kTau * kTau);
    std::vector<std::vector<Rat>> rows;
    for (long x = 0; x < n; x++) {
        long c = S.pts[(size_t)x].first, d = S.pts[(size_t)x].second;
        long xS = S.p1_index(Int(d), Int(-c));
        long xt = S.p1_index(Int(d), Int(-c - d));
        long xtt = S.p1_index(Int(-c - d), Int(c));
        for (long j = 0; j < kk; j++) {
            std::vector<Rat> r2((size_t)(n * kk), Rat(0));
            r2[(size_t)(x * kk + j)] += 1;
            for (long i = 0; i < kk; i++) r2[(size_t)(xS * kk + i)] += WSi[(size_t)j][(size_t)i];
            rows.push_back(std::move(r2));
            std::vector<Rat> r3((size_t)(n * kk), Rat(0));
            r3[(size_t)(x * kk + j)] += 1;
            for (long i = 0; i < kk; i++) {
                r3[(size_t)(xt * kk + i)] += Wtt[(size_t)j][(size_t)i];
                r3[(size_t)(xtt * kk + i)] += Wt[(size_t)j][(size_t)i];
            }
            rows.push_back(std::move(r3));
            if (k % 2 == 1) {
                std::vector<Rat> rs((size_t)(n * kk), Rat(0));
                rs[(size_t)(x * kk + j)] = 2;
                rows.push_back(std::move(rs));
            }
        }
    }
    std::vector<long> pivots = rref(rows);
    std::vector<bool> ispivot((size_t)(n * kk), false);
    for (long piv : pivots) ispivot[(size_t)piv] = true;
    for (long f = 0; f < n * kk; f++) {
        if (ispivot[(size_t)f]) continue;
        std::vector<Rat> v((size_t)(n * kk), Rat(0));
        v[(size_t)f] = 1;
        for (size_t t = 0; t < pivots.size(); t++) v[(size_t)pivots[t]] = -rows[t][(size_t)f];
        S.basis.push_back(std::move(v));
        S.free_cols.push_back(f);
    }
    S.relations = std::move(rows);
    return S;
}

std::vector<long> rref(std::vector<std::vector<Rat>>& rows) {
    std::vector<long> pivots;
    if (rows.empty()) return pivots;
    size_t ncols = rows[0].size(), r = 0;
    for (size_t col = 0; col < ncols && r < rows.size(); col++) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == 0) sel++;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Rat piv = rows[r][col];
        for (size_t t = col; t < ncols; t++) rows[r][t] /= piv;
        for (size_t i = 0; i < rows.size(); i++) {
            if (i == r || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (size_t t = col; t < ncols; t++) rows[i][t] -= f * rows[r][t];
        }
        pivots.push_back((long)col);
        r++;
    }
    rows.resize(r);
    return pivots;
}

long matrix_rank(std::vector<std::vector<Rat>> rows) {
    rref(rows);
    return (long)rows.size();
}

std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> rows, long ncols) {
    std::vector<long> pivots = rref(rows);
    std::vector<bool> ispivot((size_t)ncols, false);
    for (long p : pivots) ispivot[(size_t)p] = true;
    std::vector<std::vector<Rat>> out;
    for (long f = 0; f < ncols; f++) {
        if (ispivot[(size_t)f]) continue;
        std::vector<Rat> v((size_t)ncols, Rat(0));
        v[(size_t)f] = 1;
        for (size_t t = 0; t < pivots.size(); t++) v[(size_t)pivots[t]] = -rows[t][(size_t)f];
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Rat> coords_in_basis(const ManinSymbolSpace& S, const std::vector<Rat>& m) {
    std::vector<Rat> co((size_t)S.dim());
    for (long t = 0; t < S.dim(); t++) co[(size_t)t] = m[(size_t)S.free_cols[(size_t)t]];
    std::vector<Rat> rec((size_t)S.coords(), Rat(0));
    for (long t = 0; t < S.dim(); t++)
        for (long i = 0; i < S.coords(); i++) rec[(size_t)i] += co[(size_t)t] * S.basis[(size_t)t][(size_t)i];
    if (rec != m) throw std::invalid_argument("coords_in_basis: vector is not in the symbol space");
    return co;
}

std::vector<Mat2> hecke_cosets(long level, long q) {
    if (!is_prime(q)) throw std::invalid_argument("hecke: index must be prime");
    std::vector<Mat2> out;
    for (long c = 0; c < q; c++) out.push_back({Int(1), Int(c), Int(0), Int(q)});
    if (level % q != 0) out.push_back({Int(q), Int(0), Int(0), Int(1)});
    return out;
}

std::vector<std::vector<Rat>> hecke_matrix(const ManinSymbolSpace& S, long q) {
    long n = S.dim();
    std::vector<std::vector<Rat>> H((size_t)n, std::vector<Rat>((size_t)n, Rat(0)));
    for (long c = 0; c < n; c++) {
        std::vector<Rat> co = coords_in_basis(S, hecke(S, S.basis[(size_t)c], q));
        for (long r = 0; r < n; r++) H[(size_t)r][(size_t)c] = co[(size_t)r];
    }
    return H;
}

std::vector<std::vector<Rat>> involution_matrix(const ManinSymbolSpace& S) {
    long n = S.dim();
    std::vector<std::vector<Rat>> H((size_t)n, std::vector<Rat>((size_t)n, Rat(0)));
    for (long c = 0; c < n; c++) {
        std::vector<Rat> co = coords_in_basis(S, act_involution(S, S.basis[(size_t)c]));
        for (long r = 0; r < n; r++) H[(size_t)r][(size_t)c] = co[(size_t)r];
    }
    return H;
}

std::pair<long, long> cuspidal_dims(const ManinSymbolSpace& S) {
    long k = S.weight, kk = k + 1, n = S.npts(), M = S.level;

    // cusp points appearing as ends of the unimodular paths, as normalized
    // primitive column pairs (a : c)
    std::map<std::pair<long, long>, long> ids;
    std::vector<std::pair<long, long>> cpts;
    auto norm_pt = [](Int a, Int c) {
        Int g = gcd(a, c);
        if (g != 0) {
            a /= g;
            c /= g;
        }
        if (c < 0 || (c == 0 && a < 0)) {
            a = -a;
            c = -c;
        }
        return std::make_pair(a.get_si(), c.get_si());
    };
    auto id_of = [&](std::pair<long, long> pt) {
        auto it = ids.find(pt);
        if (it != ids.end()) return it->second;
        long id = (long)cpts.size();
        ids[pt] = id;
        cpts.push_back(pt);
        return id;
    };
    std::vector<long> id_inf(n), id_zero(n);
    for (long x = 0; x < n; x++) {
        const Mat2& g = S.lifts[(size_t)x];
        id_inf[(size_t)x] = id_of(norm_pt(g.a, g.c));
        id_zero[(size_t)x] = id_of(norm_pt(g.b, g.d));
    }
    long nc = (long)cpts.size();

    // relations making the boundary coordinates independent of the choice of
    // path lift: one per stabilizer generator, one per equivalent pair
    std::vector<std::vector<Rat>> brel;
    auto push_identification = [&](long sid, long tid, const Mat2& gamma) {
        auto Wg = weight_matrix(k, gamma);
        for (long i = 0; i < kk; i++) {
            std::vector<Rat> row((size_t)(nc * kk), Rat(0));
            for (long j = 0; j < kk; j++) row[(size_t)(tid * kk + j)] += Wg[(size_t)i][(size_t)j];
            row[(size_t)(sid * kk + i)] -= 1;
            brel.push_back(std::move(row));
        }
    };
    std::vector<Mat2> comp((size_t)nc, Mat2::identity());
    for (long s = 0; s < nc; s++) {
        Int a(cpts[(size_t)s].first), c(cpts[(size_t)s].second);
        Int g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
        // u*a + v*c = 1, so (a -v; c u) has determinant 1 and sends oo to a/c
        comp[(size_t)s] = Mat2{a, -v, c, u};
        long h = M / std::gcd(cpts[(size_t)s].second * cpts[(size_t)s].second, M);
        push_identification(s, s, comp[(size_t)s] * upper_t(h) * comp[(size_t)s].adj());
    }
    for (long s = 0; s < nc; s++)
        for (long t = s + 1; t < nc; t++)
            for (long j = 0; j < M; j++) {
                Mat2 gamma = comp[(size_t)t] * upper_t(j) * comp[(size_t)s].adj();
                if (gamma.c % M == 0) {
                    push_identification(s, t, gamma);
                    break;
                }
            }
    long brel_rank = matrix_rank(brel);

    // boundary of a generator (x, i): (e_{g oo} - e_{g 0}) twisted by g
    std::vector<std::vector<std::vector<Rat>>> bgen((size_t)n);
    for (long x = 0; x < n; x++) {
        auto Wg = weight_matrix(k, S.lifts[(size_t)x]);
        bgen[(size_t)x].assign((size_t)kk, std::vector<Rat>((size_t)(nc * kk), Rat(0)));
        for (long i = 0; i < kk; i++)
            for (long j = 0; j < kk; j++) {
                bgen[(size_t)x][(size_t)i][(size_t)(id_inf[(size_t)x] * kk + j)] += Wg[(size_t)i][(size_t)j];
                bgen[(size_t)x][(size_t)i][(size_t)(id_zero[(size_t)x] * kk + j)] -= Wg[(size_t)i][(size_t)j];
            }
    }

    long rel_rank = (long)S.relations.size();
    std::pair<long, long> out;
    for (int sign = +1; sign >= -1; sign -= 2) {
        std::vector<std::vector<Rat>> rows1 = S.relations;
        std::vector<std::vector<Rat>> rows2 = brel;
        for (long x = 0; x < n; x++) {
            long y = S.p1_index(Int(-S.pts[(size_t)x].first), Int(S.pts[(size_t)x].second));
            for (long i = 0; i < kk; i++) {
                // (1 + sign*iota) applied to the generator (x, i)
                std::vector<Rat> v((size_t)(n * kk), Rat(0));
                long si = (i % 2 == 0) ? sign : -sign;
                v[(size_t)(x * kk + i)] += 1;
                v[(size_t)(y * kk + i)] += si;
                rows1.push_back(std::move(v));
                std::vector<Rat> b = bgen[(size_t)x][(size_t)i];
                for (size_t t = 0; t < b.size(); t++)
                    b[t] += Rat(si) * bgen[(size_t)y][(size_t)i][t];
                rows2.push_back(std::move(b));
            }
        }
        long dimM = matrix_rank(rows1) - rel_rank;
        long bnd = matrix_rank(rows2) - brel_rank;
        if (sign > 0)
            out.first = dimM - bnd;
        else
            out.second = dimM - bnd;
    }
    return out;
}

std::vector<Rat> eigensymbol(const ManinSymbolSpace& S, int sign,
                             const std::vector<HeckeTarget>& targets) {
    long n = S.dim();
    // subspace columns, in echelon-basis coordinates
    std::vector<std::vector<Rat>> sub;
    {
        auto Mi = involution_matrix(S);
        std::vector<std::vector<Rat>> rows((size_t)n, std::vector<Rat>((size_t)n, Rat(0)));
        for (long r = 0; r < n; r++)
            for (long c = 0; c < n; c++) rows[(size_t)r][(size_t)c] = Mi[(size_t)r][(size_t)c] - (r == c ? Rat(sign) : Rat(0));
        sub = kernel_basis(rows, n);
    }
    for (const HeckeTarget& tg : targets) {
        if (sub.empty()) break;
        auto H = hecke_matrix(S, tg.q);
        long m = (long)sub.size();
        std::vector<std::vector<Rat>> rows((size_t)n, std::vector<Rat>((size_t)m, Rat(0)));
        for (long r = 0; r < n; r++)
            for (long t = 0; t < m; t++) {
                Rat acc(0);
                for (long c = 0; c < n; c++) acc += H[(size_t)r][(size_t)c] * sub[(size_t)t][(size_t)c];
                acc -= tg.aq * sub[(size_t)t][(size_t)r];
                rows[(size_t)r][(size_t)t] = acc;
            }
        std::vector<std::vector<Rat>> ker = kernel_basis(rows, m);
        std::vector<std::vector<Rat>> next;
        for (const auto& co : ker) {
            std::vector<Rat> v((size_t)n, Rat(0));
            for (long t = 0; t < m; t++)
                for (long c = 0; c < n; c++) v[(size_t)c] += co[(size_t)t] * sub[(size_t)t][(size_t)c];
            next.push_back(std::move(v));
        }
        sub = std::move(next);
    }
    if (sub.size() != 1)
        throw std::runtime_error("eigensymbol: expected a unique line, found dimension " +
                                 std::to_string(sub.size()));
    std::vector<Rat> data((size_t)S.coords(), Rat(0));
    for (long t = 0; t < n; t++)
        for (long i = 0; i < S.coords(); i++) data[(size_t)i] += sub[0][(size_t)t] * S.basis[(size_t)t][(size_t)i];
    data = scale_primitive(std::move(data));
    for (const HeckeTarget& tg : targets) {
        std::vector<Rat> im = hecke(S, data, tg.q);
        for (long i = 0; i < S.coords(); i++)
            if (im[(size_t)i] != tg.aq * data[(size_t)i])
                throw std::runtime_error("eigensymbol: eigen relation failed for q = " + std::to_string(tg.q));
    }
    return data;
}

std::pair<QuadExt, QuadExt> quadratic_roots(const Rat& t, const Rat& n) {
    Rat disc = t * t - 4 * n;
    if (disc >= 0 && mpz_perfect_square_p(disc.get_num().get_mpz_t()) &&
        mpz_perfect_square_p(disc.get_den().get_mpz_t())) {
        Int sn, sd;
        mpz_sqrt(sn.get_mpz_t(), disc.get_num().get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), disc.get_den().get_mpz_t());
        Rat s = Rat(sn) / Rat(sd);
        return {QuadExt::rational((t + s) / 2), QuadExt::rational((t - s) / 2)};
    }
    QuadExt alpha(t / 2, Rat(1, 2), disc);
    return {alpha, alpha.conj()};
}

StabilizedSymbol p_stabilize(const ManinSymbolSpace& SN, const std::vector<Rat>& m,
                             const ManinSymbolSpace& SNp, long p, const QuadExt& alpha,
                             const QuadExt& beta) {
    if (SNp.level != SN.level * p || SNp.weight != SN.weight)
        throw std::invalid_argument("p_stabilize: target space must have level N*p and equal weight");
    long k = SN.weight, kk = k + 1, N = SNp.coords();
    StabilizedSymbol out;
    out.p = p;
    out.alpha = alpha;
    out.beta = beta;
    out.pullback.assign((size_t)N, Rat(0));
    out.translate.assign((size_t)N, Rat(0));
    Mat2 A{Int(p), Int(0), Int(0), Int(1)};
    for (long x = 0; x < SNp.npts(); x++) {
        const Mat2& g = SNp.lifts[(size_t)x];
        long xn = SN.p1_index(g.c, g.d);
        for (long j = 0; j < kk; j++) out.pullback[(size_t)(x * kk + j)] = m[(size_t)(xn * kk + j)];
        Mat2 B = A * g;
        std::vector<Rat> val = eval_path(SN, m, CuspPt{B.b, B.d}, CuspPt{B.a, B.c});
        std::vector<Rat> tv = apply_weight(weight_matrix(k, B), val);
        for (long j = 0; j < kk; j++) out.translate[(size_t)(x * kk + j)] = tv[(size_t)j];
    }
    std::vector<Rat> U1 = hecke(SNp, out.pullback, p), U2 = hecke(SNp, out.translate, p);
    std::vector<QuadExt> u1((size_t)N), u2((size_t)N);
    for (long i = 0; i < N; i++) {
        u1[(size_t)i] = QuadExt::rational(U1[(size_t)i], alpha.D) - alpha * QuadExt::rational(out.pullback[(size_t)i], alpha.D);
        u2[(size_t)i] = QuadExt::rational(U2[(size_t)i], alpha.D) - alpha * QuadExt::rational(out.translate[(size_t)i], alpha.D);
    }
    QuadExt c = QuadExt::rational(Rat(0), alpha.D);
    for (long i = 0; i < N; i++)
        if (!u2[(size_t)i].is_zero()) {
            c = u1[(size_t)i] * u2[(size_t)i].inverse();
            break;
        }
    for (long i = 0; i < N; i++)
        if (u1[(size_t)i] != c * u2[(size_t)i])
            throw std::runtime_error("p_stabilize: no scalar satisfies the U_p eigen relation");
    out.c = c;
    out.data.assign((size_t)N, QuadExt::rational(Rat(0), alpha.D));
    for (long i = 0; i < N; i++)
        out.data[(size_t)i] = QuadExt::rational(out.pullback[(size_t)i], alpha.D) - c * QuadExt::rational(out.translate[(size_t)i], alpha.D);
    std::vector<QuadExt> chk = hecke(SNp, out.data, p);
    for (long i = 0; i < N; i++)
        if (chk[(size_t)i] != alpha * out.data[(size_t)i])
            throw std::runtime_error("p_stabilize: U_p eigen relation failed on the stabilized symbol");
    return out;
}

}  // namespace lpadic
