#include "lpadic/cyclotomic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lpadic {

namespace {

std::vector<long> divisors_of(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// exact division of monic integer polynomials (dense, constant-first)
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    long dn = (long)num.size() - 1, dd = (long)den.size() - 1;
    if (dn < dd) throw std::logic_error("poly_div_exact: degree");
    std::vector<Int> q((size_t)(dn - dd + 1), Int(0));
    for (long i = dn; i >= dd; --i) {
        Int c = num[(size_t)i];
        if (c == 0) continue;
        q[(size_t)(i - dd)] = c;
        for (long j = 0; j <= dd; ++j) num[(size_t)(i - dd + j)] -= c * den[(size_t)j];
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: not divisible");
    return q;
}

std::mutex g_phi_mutex;
std::map<long, std::vector<Int>>& phi_cache() {
    static std::map<long, std::vector<Int>> cache;
    return cache;
}

// dense coefficients of the M-th cyclotomic polynomial, constant term first
std::vector<Int> cyclotomic_poly(long M) {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto& cache = phi_cache();
    for (long d : divisors_of(M)) {
        if (cache.count(d)) continue;
        std::vector<Int> num((size_t)d + 1, Int(0));
        num[0] = -1;
        num[(size_t)d] = 1;  // x^d - 1
        std::vector<Int> q = std::move(num);
        for (long e : divisors_of(d))
            if (e < d) q = poly_div_exact(std::move(q), cache.at(e));
        cache[d] = std::move(q);
    }
    return cache.at(M);
}

std::mutex g_field_mutex;

}  // namespace

Int rat_residue(const Rat& x, long p, long L) {
    if (L <= 0) return Int(0);
    Int mod = pow_int(Int(p), (unsigned long)L);
    Int num = mod_pos(x.get_num(), mod);
    Int den = mod_pos(x.get_den(), mod);
    return mod_pos(num * invmod(den, mod), mod);
}

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            result -= result / q;
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

CycloField::CycloField(long M) : M_(M), phi_(euler_phi(M)) {
    long m = M;
    for (long q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            long k = 0;
            while (m % q == 0) {
                m /= q;
                ++k;
            }
            if (m == 1) {
                prime_ = q;
                prime_pow_ = k;
            }
            break;
        }
    }
    if (m == M && M > 1) {  // M prime
        prime_ = M;
        prime_pow_ = 1;
    }
    std::vector<Int> dense = cyclotomic_poly(M);
    for (long i = 0; i < (long)dense.size(); ++i)
        if (dense[(size_t)i] != 0) phi_sparse_.emplace_back(i, dense[(size_t)i]);
}

const CycloField& CycloField::get(long M) {
    if (M <= 0) throw std::invalid_argument("CycloField: modulus must be positive");
    std::lock_guard<std::mutex> lock(g_field_mutex);
    static std::map<long, std::unique_ptr<CycloField>> cache;
    auto it = cache.find(M);
    if (it == cache.end()) it = cache.emplace(M, std::unique_ptr<CycloField>(new CycloField(M))).first;
    return *it->second;
}

const std::vector<Rat>& CycloField::row(long e) const {
    std::call_once(rows_once_, [this]() {
        rows_.resize((size_t)(M_ - phi_));
        // x^phi reduced: Phi is monic, so x^phi = -(lower part of Phi)
        std::vector<Rat> cur((size_t)phi_, Rat(0));
        for (const auto& [exp, c] : phi_sparse_)
            if (exp < phi_) cur[(size_t)exp] = Rat(-c);
        rows_[0] = cur;
        for (long t = phi_ + 1; t < M_; ++t) {
            // multiply by x, fold the overflow through row 0
            Rat top = cur[(size_t)(phi_ - 1)];
            for (long i = phi_ - 1; i >= 1; --i) cur[(size_t)i] = cur[(size_t)(i - 1)];
            cur[0] = Rat(0);
            if (top != 0)
                for (long i = 0; i < phi_; ++i) cur[(size_t)i] += top * rows_[0][(size_t)i];
            rows_[(size_t)(t - phi_)] = cur;
        }
    });
    return rows_[(size_t)(e - phi_)];
}

void CycloField::add_monomial(std::vector<Rat>& acc, long e, const Rat& c) const {
    if (c == 0) return;
    e %= M_;
    if (e < 0) e += M_;
    if (e < phi_) {
        acc[(size_t)e] += c;
        return;
    }
    if (prime_ > 0) {
        // x^(phi+s) = -sum_{i<p-1} x^(i p^(k-1) + s); all targets are < phi
        long step = M_ / prime_;  // p^(k-1)
        long s = e - phi_;
        for (long i = 0; i + 1 < prime_; ++i) acc[(size_t)(i * step + s)] -= c;
        return;
    }
    const std::vector<Rat>& r = row(e);
    for (long i = 0; i < phi_; ++i)
        if (r[(size_t)i] != 0) acc[(size_t)i] += c * r[(size_t)i];
}

std::vector<Rat> CycloField::reduce(std::vector<Rat> poly) const {
    std::vector<Rat> acc((size_t)phi_, Rat(0));
    for (long e = 0; e < (long)poly.size(); ++e) add_monomial(acc, e, poly[(size_t)e]);
    return acc;
}

Cyclo Cyclo::rational(const Rat& r, long M) {
    Cyclo z = zero(M);
    z.c_[0] = r;
    return z;
}

Cyclo Cyclo::zeta(long M, long t) {
    const CycloField& F = CycloField::get(M);
    std::vector<Rat> c((size_t)F.degree(), Rat(0));
    F.add_monomial(c, t, Rat(1));
    return Cyclo(M, std::move(c));
}

bool Cyclo::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational()) throw std::logic_error("Cyclo: not rational: " + str());
    return c_[0];
}

Cyclo Cyclo::lifted(long M2) const {
    if (M2 == M_) return *this;
    if (M2 % M_ != 0) throw std::invalid_argument("Cyclo::lifted: modulus must be a multiple");
    const CycloField& F = CycloField::get(M2);
    long ratio = M2 / M_;
    std::vector<Rat> c((size_t)F.degree(), Rat(0));
    for (long j = 0; j < (long)c_.size(); ++j)
        if (c_[(size_t)j] != 0) F.add_monomial(c, j * ratio, c_[(size_t)j]);
    return Cyclo(M2, std::move(c));
}

Cyclo Cyclo::galois(long t) const {
    t %= M_;
    if (t < 0) t += M_;
    if (gcd_long(t, M_) != 1) throw std::invalid_argument("Cyclo::galois: t not coprime to modulus");
    const CycloField& F = CycloField::get(M_);
    std::vector<Rat> c((size_t)F.degree(), Rat(0));
    for (long j = 0; j < (long)c_.size(); ++j)
        if (c_[(size_t)j] != 0) F.add_monomial(c, j * t, c_[(size_t)j]);
    return Cyclo(M_, std::move(c));
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    long L = lcm_long(a.M_, b.M_);
    Cyclo x = a.lifted(L), y = b.lifted(L);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    long L = lcm_long(a.M_, b.M_);
    Cyclo x = a.lifted(L), y = b.lifted(L);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

Cyclo operator-(const Cyclo& a) {
    Cyclo x = a;
    for (Rat& v : x.c_) v = -v;
    return x;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    long L = lcm_long(a.M_, b.M_);
    Cyclo x = a.lifted(L), y = b.lifted(L);
    const CycloField& F = CycloField::get(L);
    long phi = F.degree();
    long nx = 0, ny = 0;
    for (const Rat& v : x.c_)
        if (v != 0) ++nx;
    for (const Rat& v : y.c_)
        if (v != 0) ++ny;
    // sparse path: reduce each cross term individually when that is cheaper
    // than a dense convolution (reduction of one monomial is cheap for
    // prime-power moduli)
    long red_cost = (L > 1 && F.phi_sparse().size() <= 16) ? (long)F.phi_sparse().size() : phi;
    if (nx * ny * red_cost <= phi * phi || nx * ny <= 16) {
        std::vector<Rat> acc((size_t)phi, Rat(0));
        for (long i = 0; i < phi; ++i) {
            if (x.c_[(size_t)i] == 0) continue;
            for (long j = 0; j < phi; ++j)
                if (y.c_[(size_t)j] != 0) F.add_monomial(acc, i + j, x.c_[(size_t)i] * y.c_[(size_t)j]);
        }
        return Cyclo(L, std::move(acc));
    }
    std::vector<Rat> conv((size_t)(2 * phi - 1), Rat(0));
    for (long i = 0; i < phi; ++i) {
        if (x.c_[(size_t)i] == 0) continue;
        for (long j = 0; j < phi; ++j)
            if (y.c_[(size_t)j] != 0) conv[(size_t)(i + j)] += x.c_[(size_t)i] * y.c_[(size_t)j];
    }
    return Cyclo(L, F.reduce(std::move(conv)));
}

Cyclo operator*(const Rat& s, const Cyclo& a) {
    Cyclo x = a;
    for (Rat& v : x.c_) v *= s;
    return x;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    long L = lcm_long(a.M_, b.M_);
    return a.lifted(L).c_ == b.lifted(L).c_;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo::inverse: zero");
    if (is_rational()) return rational(Rat(1) / c_[0], M_);
    const CycloField& F = CycloField::get(M_);
    long phi = F.degree();
    // columns of the multiplication-by-this matrix, built by repeated shift
    std::vector<std::vector<Rat>> A((size_t)phi, std::vector<Rat>((size_t)phi, Rat(0)));
    std::vector<Rat> col = c_;
    for (long j = 0; j < phi; ++j) {
        for (long i = 0; i < phi; ++i) A[(size_t)i][(size_t)j] = col[(size_t)i];
        if (j + 1 < phi) {
            std::vector<Rat> next((size_t)phi, Rat(0));
            for (long i = 0; i < phi; ++i)
                if (col[(size_t)i] != 0) F.add_monomial(next, i + 1, col[(size_t)i]);
            col = std::move(next);
        }
    }
    // solve A v = e_0 by Gaussian elimination over Q
    std::vector<Rat> rhs((size_t)phi, Rat(0));
    rhs[0] = 1;
    for (long cpos = 0; cpos < phi; ++cpos) {
        long piv = -1;
        for (long i = cpos; i < phi; ++i)
            if (A[(size_t)i][(size_t)cpos] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("Cyclo::inverse: singular (zero divisor?)");
        std::swap(A[(size_t)cpos], A[(size_t)piv]);
        std::swap(rhs[(size_t)cpos], rhs[(size_t)piv]);
        Rat inv = Rat(1) / A[(size_t)cpos][(size_t)cpos];
        for (long j = cpos; j < phi; ++j) A[(size_t)cpos][(size_t)j] *= inv;
        rhs[(size_t)cpos] *= inv;
        for (long i = 0; i < phi; ++i) {
            if (i == cpos) continue;
            Rat f = A[(size_t)i][(size_t)cpos];
            if (f == 0) continue;
            for (long j = cpos; j < phi; ++j) A[(size_t)i][(size_t)j] -= f * A[(size_t)cpos][(size_t)j];
            rhs[(size_t)i] -= f * rhs[(size_t)cpos];
        }
    }
    return Cyclo(M_, std::move(rhs));
}

std::string Cyclo::str() const {
    std::ostringstream os;
    os << "[zeta_" << M_ << "]";
    bool any = false;
    for (long j = 0; j < (long)c_.size(); ++j) {
        if (c_[(size_t)j] == 0) continue;
        os << (any ? " + " : " ") << rat_str(c_[(size_t)j]);
        if (j > 0) os << "*z^" << j;
        any = true;
    }
    if (!any) os << " 0";
    return os.str();
}

Cyclo psi_value(long p, const Rat& x) {
    if (x == 0) return Cyclo::one();
    long L = std::max(0L, -vp_rat(x, p));
    if (L == 0) return Cyclo::one();
    long pL = 1;
    for (long i = 0; i < L; ++i) pL *= p;
    Int u = rat_residue(x * Rat(pL), p, L);
    return Cyclo::zeta(pL, u.get_si());
}

long primitive_root_mod_p_power(long p) {
    if (p == 2) throw std::invalid_argument("primitive_root: p must be odd");
    std::vector<long> qs;
    long m = p - 1;
    for (long q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            qs.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) qs.push_back(m);
    long g = 2;
    for (;; ++g) {
        bool ok = true;
        for (long q : qs)
            if (powmod(Int(g), Int((p - 1) / q), Int(p)) == 1) {
                ok = false;
                break;
            }
        if (ok) break;
    }
    if (powmod(Int(g), Int(p - 1), Int(p) * Int(p)) == 1) g += p;
    return g;
}

DirichletChar::DirichletChar(long p, long r, long e) : p_(p), r_(r) {
    if (p < 3) throw std::invalid_argument("DirichletChar: p must be an odd prime");
    if (r < 0) throw std::invalid_argument("DirichletChar: negative modulus exponent");
    if (r == 0) {
        ord_grp_ = 1;
        e_ = 0;
        cond_ = 0;
        return;
    }
    long pr = 1;
    for (long i = 0; i < r; ++i) pr *= p;
    ord_grp_ = euler_phi(pr);
    e_ = ((e % ord_grp_) + ord_grp_) % ord_grp_;
    g_ = primitive_root_mod_p_power(p);
    dlog_.assign((size_t)pr, -1);
    long x = 1;
    for (long k = 0; k < ord_grp_; ++k) {
        dlog_[(size_t)x] = k;
        x = (x * g_) % pr;
    }
    // conductor: least p^c with chi trivial on units congruent to 1 mod p^c
    cond_ = r;
    for (long c = 0; c <= r; ++c) {
        long pc = 1;
        for (long i = 0; i < c; ++i) pc *= p;
        bool trivial = true;
        for (long y = 1; y < pr && trivial; y += pc)
            if (y % p != 0 && (e_ * dlog_[(size_t)y]) % ord_grp_ != 0) trivial = false;
        if (trivial) {
            cond_ = c;
            break;
        }
    }
}

long DirichletChar::order() const {
    if (e_ == 0) return 1;
    return ord_grp_ / gcd_long(e_, ord_grp_);
}

Cyclo DirichletChar::value(long x) const {
    if (r_ == 0) return Cyclo::one();
    long pr = (long)dlog_.size();
    x %= pr;
    if (x < 0) x += pr;
    if (x % p_ == 0) return Cyclo::zero();
    return Cyclo::zeta(ord_grp_, e_ * dlog_[(size_t)x]);
}

long DirichletChar::exponent_at(long x) const {
    if (r_ == 0) return 0;
    long pr = (long)dlog_.size();
    x %= pr;
    if (x < 0) x += pr;
    if (x % p_ == 0) throw std::invalid_argument("DirichletChar::exponent_at: not a unit");
    return (e_ * dlog_[(size_t)x]) % ord_grp_;
}

Cyclo DirichletChar::value_rat(const Rat& x) const {
    if (r_ == 0) return x == 0 ? Cyclo::zero() : Cyclo::one();
    if (x == 0) return Cyclo::zero();
    if (vp_rat(x, p_) != 0) return Cyclo::zero();
    long pr = (long)dlog_.size();
    Int res = rat_residue(x, p_, r_);
    return value(mod_pos(res, Int(pr)).get_si());
}

DirichletChar DirichletChar::times(const DirichletChar& other) const {
    if (p_ == 0 && r_ == 0) return other;
    if (other.p_ == 0 && other.r_ == 0) return *this;
    if (p_ != other.p_) throw std::invalid_argument("DirichletChar::times: different primes");
    long rr = std::max(r_, other.r_);
    long ordrr = euler_phi((long)pow_int(Int(p_), (unsigned long)rr).get_si());
    auto lift_index = [&](const DirichletChar& c) -> long {
        if (c.r_ == 0) return 0;
        return c.e_ * (ordrr / c.ord_grp_);
    };
    return DirichletChar(p_, rr, (lift_index(*this) + lift_index(other)) % ordrr);
}

DirichletChar DirichletChar::primitive() const {
    long c = cond_;
    if (c == r_) return *this;
    if (c == 0) return DirichletChar(p_, 0, 0);  // r_ > 0 here, so p_ is a real prime
    long ordc = euler_phi((long)pow_int(Int(p_), (unsigned long)c).get_si());
    // the character factors through (Z/p^c)^*, so e_ is a multiple of ord_grp_/ordc
    return DirichletChar(p_, c, e_ / (ord_grp_ / ordc));
}

bool DirichletChar::same_character(const DirichletChar& other) const {
    DirichletChar a = primitive(), b = other.primitive();
    return a.p_ == b.p_ && a.r_ == b.r_ && a.e_ == b.e_;
}

long DirichletChar::sign_at_minus_one() const {
    if (r_ == 0) return 1;
    return (e_ % 2 == 0) ? 1 : -1;
}

std::vector<long> LocallyConstantFn::enumerate_units(long p, long m) {
    if (m == 0) return {1};
    long pm = 1;
    for (long i = 0; i < m; ++i) pm *= p;
    std::vector<long> u;
    u.reserve((size_t)euler_phi(pm));
    for (long x = 1; x < pm; ++x)
        if (x % p != 0) u.push_back(x);
    return u;
}

long LocallyConstantFn::unit_index(long p, long m, long residue) {
    if (m == 0) return 0;
    long pm = 1;
    for (long i = 0; i < m; ++i) pm *= p;
    residue %= pm;
    if (residue < 0) residue += pm;
    if (residue % p == 0) throw std::invalid_argument("unit_index: not a unit");
    // units below `residue` in ascending order: residue-1 integers minus multiples of p
    return (residue - 1) - (residue - 1) / p;
}

const Cyclo& LocallyConstantFn::eval(long x) const { return vals[(size_t)unit_index(p, m, x)]; }

LocallyConstantFn LocallyConstantFn::constant_one(long p) {
    return LocallyConstantFn{p, 0, {Cyclo::one()}};
}

LocallyConstantFn LocallyConstantFn::indicator_coset(long p, long a, long n) {
    if (n <= 0) return constant_one(p);
    LocallyConstantFn f;
    f.p = p;
    f.m = n;
    long pn = 1;
    for (long i = 0; i < n; ++i) pn *= p;
    a %= pn;
    if (a < 0) a += pn;
    for (long x : enumerate_units(p, n)) f.vals.push_back(x == a ? Cyclo::one() : Cyclo::zero());
    return f;
}

LocallyConstantFn LocallyConstantFn::from_character(const DirichletChar& chi) {
    LocallyConstantFn f;
    f.p = chi.prime();
    f.m = chi.r();
    for (long x : enumerate_units(chi.prime(), chi.r())) f.vals.push_back(chi.value(x));
    return f;
}

Cyclo integral_additive(long p, const Rat& a, const AdditiveRegion& region, long level_slack) {
    if (region.units) {
        if (a == 0) return Cyclo::rational(Rat(p - 1, p));
        long va = vp_rat(a, p);
        long L = std::max(1L, -va) + level_slack;
        long L0 = std::max(0L, -va);
        long M = 1;
        for (long i = 0; i < L0; ++i) M *= p;
        long pL = 1;
        for (long i = 0; i < L; ++i) pL *= p;
        const CycloField& F = CycloField::get(M);
        std::vector<Rat> acc((size_t)F.degree(), Rat(0));
        Rat w = pow_rat(p, -L);
        for (long t = 1; t < pL; ++t) {
            if (t % p == 0) continue;
            // psi(a t) = zeta_M^u with u = (a t) * M mod M
            Int u = rat_residue(a * Rat(t) * Rat(M), p, L0);
            F.add_monomial(acc, u.get_si(), w);
        }
        return Cyclo(M, std::move(acc));
    }
    long n = region.n;
    if (a == 0) return Cyclo::rational(pow_rat(p, -n));
    long va = vp_rat(a, p);
    long L = std::max(n, -va) + level_slack;
    long vs = (region.s == 0) ? n : std::min(vp_rat(region.s, p), n);
    long L0 = std::max(0L, -(va + std::min(vs, n)));
    long M = 1;
    for (long i = 0; i < L0; ++i) M *= p;
    const CycloField& F = CycloField::get(M);
    std::vector<Rat> acc((size_t)F.degree(), Rat(0));
    Rat w = pow_rat(p, -L);
    long count = 1;
    for (long i = 0; i < L - n; ++i) count *= p;
    Rat step = pow_rat(p, n);
    for (long j = 0; j < count; ++j) {
        Rat t = region.s + step * Rat(j);
        Int u = rat_residue(a * t * Rat(M), p, L0);
        F.add_monomial(acc, u.get_si(), w);
    }
    return Cyclo(M, std::move(acc));
}

Cyclo integral_mult_char(const DirichletChar& chi, long t, const Rat& a) {
    long p = chi.prime();
    if (t < 0) throw std::invalid_argument("integral_mult_char: negative level");
    // Split U into additive cosets s + p^n Z_p fine enough that chi is
    // constant on each; the coset integrals of psi(a x) are computed exactly
    // and accumulated with chi(s) as a monomial exponent shift. Keeping the
    // psi-part per coset avoids ever forming a large mixed cyclotomic field:
    // deep a makes every coset integral exactly zero.
    long n = std::max({chi.conductor_exponent(), t, 1L});
    long pn = 1;
    for (long i = 0; i < n; ++i) pn *= p;
    long pt = 1;
    for (long i = 0; i < t; ++i) pt *= p;
    Rat w(p, p - 1);  // 1 / vol(Z_p^x, dx)
    long Mchi = chi.value_field();
    long Mout = Mchi;
    std::vector<Rat> acc((size_t)CycloField::get(Mout).degree(), Rat(0));
    for (long s = 1; s < pn; ++s) {
        if (s % p == 0) continue;
        if (t >= 1 && (s - 1) % pt != 0) continue;
        Cyclo Is = integral_additive(p, a, AdditiveRegion::coset(Rat(s), n));
        if (Is.is_zero()) continue;
        long Mnew = lcm_long(Mout, Is.modulus());
        if (Mnew != Mout) {
            acc = Cyclo(Mout, std::move(acc)).lifted(Mnew).coeffs();
            Mout = Mnew;
        }
        const CycloField& F = CycloField::get(Mout);
        long chi_exp = chi.exponent_at(s) * (Mout / Mchi);
        long psi_scale = Mout / Is.modulus();
        const std::vector<Rat>& cc = Is.coeffs();
        for (long i = 0; i < (long)cc.size(); ++i)
            if (cc[(size_t)i] != 0) F.add_monomial(acc, i * psi_scale + chi_exp, w * cc[(size_t)i]);
    }
    return Cyclo(Mout, std::move(acc));
}

Cyclo gauss_sum(const DirichletChar& chi) {
    long p = chi.prime();
    long n = chi.conductor_exponent();
    Rat pn = pow_rat(p, n);
    Cyclo integral = integral_mult_char(chi, 0, -Rat(1) / pn);
    return (Rat(p - 1, p) * pn) * integral;
}

}  // namespace lpadic
