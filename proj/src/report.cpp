#include "lpadic/report.hpp"

#include "lpadic/manin.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lpadic {

using nlohmann::json;

namespace {

Rat frac(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

long ipow_l(long p, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r *= p;
    return r;
}

std::string num(long v) { return std::to_string(v); }

json rat_vec_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_str(x));
    return a;
}

// --- shared stabilization pipeline ------------------------------------------

struct StabContext {
    ManinSymbolSpace SN, SNp;
    std::vector<Rat> phi;
    Rat ap;
    bool ap_from_fixture = false;
    StabilizedSymbol sym;
};

void validate_stab_params(const Fixture& fx, long p) {
    if (p < 3 || !is_prime_long(p))
        throw std::invalid_argument("p must be an odd prime, got " + num(p));
    if (fx.level % p == 0)
        throw std::invalid_argument("p = " + num(p) + " divides the level " + num(fx.level) +
                                    "; stabilization needs p coprime to the level");
}

// a_p on the eigenline: from the fixture when present, else by applying T_p
Rat eigen_ap(const ManinSymbolSpace& SN, const std::vector<Rat>& phi, const Fixture& fx, long p,
             bool* from_fixture) {
    for (const HeckeTarget& t : fx.hecke_targets)
        if (t.q == p) {
            if (from_fixture) *from_fixture = true;
            return t.aq;
        }
    if (from_fixture) *from_fixture = false;
    std::vector<Rat> w = hecke(SN, phi, p);
    size_t i = 0;
    while (i < phi.size() && phi[i] == 0) ++i;
    if (i == phi.size()) throw std::runtime_error("eigen_ap: zero eigenvector");
    Rat ap = w[i] / phi[i];
    for (size_t j = 0; j < phi.size(); ++j)
        if (w[j] != ap * phi[j]) throw std::runtime_error("eigen_ap: T_p is not scalar on the line");
    return ap;
}

std::pair<QuadExt, QuadExt> select_root(long p, const std::pair<QuadExt, QuadExt>& roots,
                                        const std::string& root) {
    const QuadExt &r0 = roots.first, &r1 = roots.second;
    if (root == "0") return {r0, r1};
    if (root == "1") return {r1, r0};
    if (root == "ordinary" || root == "critical") {
        HalfInt v0 = quad_valuation(p, r0), v1 = quad_valuation(p, r1);
        if (v0 == v1)
            throw std::invalid_argument("both roots have slope " + v0.str() +
                                        "; select --root 0 or --root 1 instead");
        bool first = (root == "ordinary") ? (v0 < v1) : (v1 < v0);
        return first ? std::make_pair(r0, r1) : std::make_pair(r1, r0);
    }
    throw std::invalid_argument("unknown root selector '" + root +
                                "' (use ordinary, critical, 0 or 1)");
}

StabContext make_stab(const Fixture& fx, int sign, long p, const std::string& root) {
    validate_stab_params(fx, p);
    StabContext c;
    c.SN = ManinSymbolSpace::build(fx.level, fx.weight_k);
    c.phi = eigensymbol(c.SN, sign, fx.hecke_targets);
    c.ap = eigen_ap(c.SN, c.phi, fx, p, &c.ap_from_fixture);
    auto roots = quadratic_roots(c.ap, pow_rat(p, fx.weight_k + 1));
    auto [alpha, beta] = select_root(p, roots, root);
    c.SNp = ManinSymbolSpace::build(fx.level * p, fx.weight_k);
    c.sym = p_stabilize(c.SN, c.phi, c.SNp, p, alpha, beta);
    return c;
}

// extremal scaling with slope exactly (k+1)/2: p^{k/2} sqrt(p) for even k,
// the rational p^{(k+1)/2} for odd k
QuadExt extremal_alpha(long p, long k) {
    if (k % 2 == 0) return QuadExt(Rat(0), pow_rat(p, k / 2), Rat(p));
    return QuadExt::rational(pow_rat(p, (k + 1) / 2), Rat(p));
}

// literal Gauss sum over residues: sum over units x mod p^r of chi(x) zeta^{-x};
// independent of the integration routines
Cyclo gauss_literal(const DirichletChar& chi) {
    long p = chi.prime(), r = chi.r();
    long pr = ipow_l(p, r);
    Cyclo acc = Cyclo::zero();
    for (long x = 1; x < pr; ++x) {
        if (x % p == 0) continue;
        acc = acc + chi.value(x) * Cyclo::zeta(pr, pr - (x % pr));
    }
    return acc;
}

void fail(Verdict& v, const std::string& witness) {
    if (!v.pass) return;  // keep the first witness
    v.pass = false;
    v.witness = witness;
}

json inputs_json(std::initializer_list<std::pair<const char*, json>> kv) {
    json j = json::object();
    for (const auto& [k, val] : kv) j[k] = val;
    return j;
}

json make_report(const std::string& command, json inputs, json results,
                 const std::vector<Verdict>& verdicts) {
    json doc;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["results"] = std::move(results);
    doc["verdicts"] = verdicts_to_json(verdicts);
    return doc;
}

}  // namespace

// --- fixtures -----------------------------------------------------------------

Fixture fixture_from_json(const std::string& text) {
    Fixture fx;
    try {
        json j = json::parse(text);
        fx.level = j.at("level").get<long>();
        fx.weight_k = j.at("weight_k").get<long>();
        fx.description = j.value("description", std::string());
        for (const auto& t : j.at("hecke_targets")) {
            HeckeTarget ht;
            ht.q = t.at("q").get<long>();
            const auto& av = t.at("a_q");
            ht.aq = av.is_string() ? rat_from_str(av.get<std::string>()) : Rat(av.get<long>());
            fx.hecke_targets.push_back(ht);
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("fixture JSON: ") + e.what());
    }
    if (fx.level < 1) throw std::invalid_argument("fixture: level must be >= 1");
    if (fx.weight_k < 0 || fx.weight_k % 2 != 0)
        throw std::invalid_argument("fixture: weight_k must be even and >= 0");
    if (fx.hecke_targets.empty())
        throw std::invalid_argument("fixture: hecke_targets must pin at least one eigenvalue");
    for (const HeckeTarget& t : fx.hecke_targets)
        if (t.q < 2 || !is_prime_long(t.q))
            throw std::invalid_argument("fixture: hecke_targets q = " + num(t.q) +
                                        " is not prime");
    return fx;
}

std::string fixture_to_json(const Fixture& fx) {
    json j;
    j["level"] = fx.level;
    j["weight_k"] = fx.weight_k;
    j["description"] = fx.description;
    json targets = json::array();
    for (const HeckeTarget& t : fx.hecke_targets)
        targets.push_back(json{{"q", t.q}, {"a_q", rat_str(t.aq)}});
    j["hecke_targets"] = targets;
    return j.dump(1) + "\n";
}

Fixture fixture_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fixture file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return fixture_from_json(ss.str());
}

// --- report plumbing ------------------------------------------------------------

json verdicts_to_json(const std::vector<Verdict>& vs) {
    json a = json::array();
    for (const Verdict& v : vs)
        a.push_back(json{{"name", v.name}, {"pass", v.pass}, {"witness", v.witness}});
    return a;
}

bool report_all_pass(const json& report) {
    if (!report.contains("verdicts")) return false;
    for (const auto& v : report.at("verdicts"))
        if (!v.at("pass").get<bool>()) return false;
    return true;
}

std::string report_dump(const json& report) { return report.dump(1) + "\n"; }

json tagged(const json& value, const std::string& provenance) {
    return json{{"value", value}, {"provenance", provenance}};
}

// --- build-space ------------------------------------------------------------------

json report_build_space(long level, long weight_k) {
    if (level < 1) throw std::invalid_argument("build-space: level must be >= 1");
    if (weight_k < 0 || weight_k % 2 != 0)
        throw std::invalid_argument("build-space: weight_k must be even and >= 0");
    ManinSymbolSpace S = ManinSymbolSpace::build(level, weight_k);
    auto [dplus, dminus] = cuspidal_dims(S);

    std::vector<Verdict> vs;
    {
        Verdict v{"rank-nullity", true, ""};
        long rank = (long)S.relations.size();
        if (S.dim() != S.coords() - rank)
            fail(v, "dim " + num(S.dim()) + " != coords " + num(S.coords()) + " - rank " +
                        num(rank));
        vs.push_back(v);
    }
    {
        Verdict v{"involution-squares-to-identity", true, ""};
        auto J = involution_matrix(S);
        long d = S.dim();
        for (long i = 0; i < d && v.pass; ++i)
            for (long j = 0; j < d && v.pass; ++j) {
                Rat acc(0);
                for (long t = 0; t < d; ++t) acc += J[(size_t)i][(size_t)t] * J[(size_t)t][(size_t)j];
                if (acc != Rat(i == j ? 1 : 0)) fail(v, "entry (" + num(i) + "," + num(j) + ")");
            }
        vs.push_back(v);
    }
    {
        Verdict v{"hecke-commutes-with-involution", true, ""};
        long q = 2;
        while (level % q == 0) q = (q == 2) ? 3 : q + 2;
        auto T = hecke_matrix(S, q), J = involution_matrix(S);
        long d = S.dim();
        for (long i = 0; i < d && v.pass; ++i)
            for (long j = 0; j < d && v.pass; ++j) {
                Rat tj(0), jt(0);
                for (long t = 0; t < d; ++t) {
                    tj += T[(size_t)i][(size_t)t] * J[(size_t)t][(size_t)j];
                    jt += J[(size_t)i][(size_t)t] * T[(size_t)t][(size_t)j];
                }
                if (tj != jt) fail(v, "T_" + num(q) + " entry (" + num(i) + "," + num(j) + ")");
            }
        vs.push_back(v);
    }

    json results;
    results["projective_points"] = tagged(S.npts(), "computed");
    results["coordinates"] = tagged(S.coords(), "computed");
    results["dimension"] = tagged(S.dim(), "computed");
    results["cuspidal_plus"] = tagged(dplus, "computed");
    results["cuspidal_minus"] = tagged(dminus, "computed");
    return make_report("build-space",
                       inputs_json({{"level", level}, {"weight_k", weight_k}}), results, vs);
}

// --- eigensymbol --------------------------------------------------------------------

json report_eigensymbol(const Fixture& fx, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("eigensymbol: sign must be +1 or -1");
    ManinSymbolSpace S = ManinSymbolSpace::build(fx.level, fx.weight_k);
    std::vector<Rat> phi = eigensymbol(S, sign, fx.hecke_targets);

    std::vector<Verdict> vs;
    for (const HeckeTarget& t : fx.hecke_targets) {
        Verdict v{"hecke-eigenvalue T_" + num(t.q), true, ""};
        std::vector<Rat> w = hecke(S, phi, t.q);
        for (size_t i = 0; i < phi.size(); ++i)
            if (w[i] != t.aq * phi[i]) {
                fail(v, "coordinate " + num((long)i));
                break;
            }
        vs.push_back(v);
    }
    {
        Verdict v{"sign-eigenvector", true, ""};
        std::vector<Rat> w = act_involution(S, phi);
        for (size_t i = 0; i < phi.size(); ++i)
            if (w[i] != Rat(sign) * phi[i]) {
                fail(v, "coordinate " + num((long)i));
                break;
            }
        vs.push_back(v);
    }

    json targets = json::array();
    for (const HeckeTarget& t : fx.hecke_targets)
        targets.push_back(json{{"q", t.q}, {"a_q", rat_str(t.aq)}});
    json results;
    results["eigenvector"] = tagged(rat_vec_json(phi), "computed:unique-line");
    results["targets"] = tagged(targets, "fixture");
    results["space_dimension"] = tagged(S.dim(), "computed");
    return make_report("eigensymbol",
                       inputs_json({{"level", fx.level},
                                    {"weight_k", fx.weight_k},
                                    {"sign", sign},
                                    {"description", fx.description}}),
                       results, vs);
}

// --- stabilize ----------------------------------------------------------------------

json report_stabilize(const Fixture& fx, int sign, long p, const std::string& root) {
    StabContext c = make_stab(fx, sign, p, root);

    std::vector<Verdict> vs;
    {
        Verdict v{"up-eigenrelation", true, ""};
        std::vector<QuadExt> w = hecke(c.SNp, c.sym.data, p);
        for (size_t i = 0; i < w.size(); ++i)
            if (!(w[i] == c.sym.alpha * c.sym.data[i])) {
                fail(v, "coordinate " + num((long)i));
                break;
            }
        vs.push_back(v);
    }
    {
        Verdict v{"roots-multiply-to-p^(k+1)", true, ""};
        if (!(c.sym.alpha * c.sym.beta == QuadExt::rational(pow_rat(p, fx.weight_k + 1))))
            fail(v, "alpha*beta = " + (c.sym.alpha * c.sym.beta).str());
        vs.push_back(v);
    }

    json results;
    results["a_p"] = tagged(rat_str(c.ap), c.ap_from_fixture ? "fixture" : "computed:hecke-action");
    results["alpha"] = tagged(c.sym.alpha.str(), "computed:quadratic-root");
    results["beta"] = tagged(c.sym.beta.str(), "computed:quadratic-root");
    results["slope"] = tagged(quad_valuation(p, c.sym.alpha).str(), "computed");
    results["translate_coefficient"] = tagged(c.sym.c.str(), "computed");
    results["discriminant"] = tagged(rat_str(c.sym.alpha.D), "computed");
    return make_report("stabilize",
                       inputs_json({{"level", fx.level},
                                    {"weight_k", fx.weight_k},
                                    {"sign", sign},
                                    {"p", p},
                                    {"root", root}}),
                       results, vs);
}

// --- measure ------------------------------------------------------------------------

json report_measure(const Fixture& fx, int sign, long p, const std::string& root, long depth,
                    std::string* table_json_out) {
    StabContext c = make_stab(fx, sign, p, root);
    MomentTable T = measure_from_symbol(c.SNp, c.sym, depth);
    HalfInt h = quad_valuation(p, c.sym.alpha);

    std::vector<Verdict> vs;
    {
        AdditivityReport rep = additivity_check(T);
        Verdict v{"additivity", rep.pass, rep.pass ? "" : rep.witness.str()};
        vs.push_back(v);
    }
    {
        AdmissibilityReport rep = admissibility_check(T, h);
        Verdict v{"admissibility-at-slope", rep.pass, rep.pass ? "" : rep.witness.str()};
        vs.push_back(v);
    }

    CycQuad mass = integrate_character(T, DirichletChar(p, 0, 0), 0);
    long cells = 0;
    for (const auto& lvl : T.levels) cells += (long)lvl.size();
    json results;
    results["alpha"] = tagged(c.sym.alpha.str(), "computed:quadratic-root");
    results["slope"] = tagged(h.str(), "computed");
    results["total_mass"] = tagged(mass.c[0].str(), "computed:level-1-row");
    results["stored_moments"] = tagged(cells, "computed");
    if (table_json_out) *table_json_out = moment_table_to_json(T);
    return make_report("measure",
                       inputs_json({{"level", fx.level},
                                    {"weight_k", fx.weight_k},
                                    {"sign", sign},
                                    {"p", p},
                                    {"root", root},
                                    {"depth", depth}}),
                       results, vs);
}

// --- extremal -----------------------------------------------------------------------

json report_extremal(long p, long k, long depth, unsigned long long rng_seed,
                     std::string* table_json_out) {
    QuadExt alpha = extremal_alpha(p, k);
    ExtremalSeed seed = synthetic_extremal_seed(p, k, alpha, depth, rng_seed);
    JordanReport jr = jordan_pair_check(seed);
    MomentTable T = extremal_measure(seed);

    std::vector<Verdict> vs;
    vs.push_back({"up-compatibility", jr.eigen_ok && jr.jordan_ok,
                  (jr.eigen_ok && jr.jordan_ok) ? "" : jr.detail});
    vs.push_back({"diagonal-specialization", jr.diagonal_ok, jr.diagonal_ok ? "" : jr.detail});
    vs.push_back({"integrality", jr.integral_ok, jr.integral_ok ? "" : jr.detail});
    vs.push_back({"nontrivial", jr.nontrivial, jr.nontrivial ? "" : "eigen table is zero"});
    {
        AdditivityReport rep = additivity_check(T);
        vs.push_back({"additivity", rep.pass, rep.pass ? "" : rep.witness.str()});
    }
    {
        AdmissibilityReport rep = admissibility_check(T, HalfInt::halves(k + 1));
        vs.push_back({"admissibility-at-(k+1)/2", rep.pass, rep.pass ? "" : rep.witness.str()});
    }

    AdmissibilityReport below = admissibility_check(T, HalfInt::halves(k));
    json results;
    results["alpha"] = tagged(alpha.str(), "computed:slope-(k+1)/2");
    results["slope"] = tagged(HalfInt::halves(k + 1).str(), "computed");
    results["sharp_below"] =
        tagged(!below.pass, "computed:admissibility-at-(k+1)/2-minus-1/2-fails");
    if (table_json_out) *table_json_out = moment_table_to_json(T);
    return make_report("extremal",
                       inputs_json({{"p", p},
                                    {"k", k},
                                    {"depth", depth},
                                    {"rng_seed", (std::uint64_t)rng_seed}}),
                       results, vs);
}

// --- euler --------------------------------------------------------------------------

json report_euler(const std::string& kase, long p, long k, long m, long cond, long char_index,
                  long slot_eta_cond) {
    if (p < 3 || !is_prime_long(p)) throw std::invalid_argument("euler: p must be an odd prime");
    if (k < 0 || m < 0 || m > k)
        throw std::invalid_argument("euler: need 0 <= m <= k, got m = " + num(m) +
                                    ", k = " + num(k));
    if (cond < 0 || slot_eta_cond < 0) throw std::invalid_argument("euler: conductors must be >= 0");

    EulerParams prm;
    prm.p = p;
    prm.k = k;
    prm.m = m;
    prm.chi0 = DirichletChar(p, cond, cond == 0 ? 0 : char_index);
    DirichletChar eta(p, slot_eta_cond, slot_eta_cond == 0 ? 0 : 1);
    if (kase == "principal") {
        prm.kind = LocalCaseKind::PRINCIPAL;
        prm.chi_i = LocalCharacter{eta, HalfPowerScalar::from_rat(p, Rat(2)), HalfInt::of_int(0)};
        prm.chi_j = LocalCharacter::unramified(p, HalfPowerScalar::from_rat(p, Rat(3)),
                                               HalfInt::of_int(k + 1));
    } else if (kase == "special") {
        prm.kind = LocalCaseKind::SPECIAL;
        prm.chi_i = LocalCharacter{eta, HalfPowerScalar::from_rat(p, Rat(2)), HalfInt::of_int(0)};
    } else if (kase == "extremal") {
        prm.kind = LocalCaseKind::EXTREMAL;
        // ramified unit part goes with a unit value at p; the pure double-root
        // slot carries p^{-k/2}
        prm.chi_i = eta.is_trivial()
                        ? LocalCharacter::unramified(p, HalfPowerScalar::half_power(p, -k),
                                                     HalfInt::halves(-k))
                        : LocalCharacter{eta, HalfPowerScalar::from_rat(p, Rat(1)),
                                         HalfInt::of_int(0)};
    } else {
        throw std::invalid_argument("euler: unknown case '" + kase +
                                    "' (use principal, special or extremal)");
    }

    HalfPowerScalar closed = euler_factor_closed(prm);
    EulerResult oracle = euler_factor_oracle(prm);

    std::vector<Verdict> vs;
    vs.push_back({"closed-equals-oracle", closed == oracle.value,
                  closed == oracle.value ? "" : "closed " + closed.str() + " vs oracle " +
                                                    oracle.value.str()});

    json results;
    results["value"] = tagged(closed.str(), "closed-form");
    results["oracle_value"] = tagged(oracle.value.str(), "oracle:shell-sum");
    results["formal_tail"] = tagged(oracle.formal_tail, "oracle");
    if (!oracle.note.empty()) results["note"] = tagged(oracle.note, "oracle");
    return make_report("euler",
                       inputs_json({{"case", kase},
                                    {"p", p},
                                    {"k", k},
                                    {"m", m},
                                    {"cond", cond},
                                    {"char_index", cond == 0 ? 0 : char_index},
                                    {"slot_eta_cond", slot_eta_cond}}),
                       results, vs);
}

// --- gauss --------------------------------------------------------------------------

json report_gauss(long p, long r, long char_index) {
    if (p < 3 || !is_prime_long(p)) throw std::invalid_argument("gauss: p must be an odd prime");
    if (r < 1) throw std::invalid_argument("gauss: need r >= 1 (modulus p^r)");
    long ord = euler_phi(ipow_l(p, r));
    long e = char_index;
    if (e < 0) e = ord / 2;  // the quadratic character
    if (e <= 0 || e >= ord)
        throw std::invalid_argument("gauss: char index must lie in [1, " + num(ord - 1) +
                                    "] for modulus p^" + num(r));
    DirichletChar chi(p, r, e);
    long cond = chi.conductor_exponent();

    Cyclo tau = gauss_sum(chi);
    Cyclo taubar = gauss_sum(chi.conjugate());
    Cyclo prod = tau * taubar;
    Rat want = Rat(chi.sign_at_minus_one()) * pow_rat(p, cond);

    std::vector<Verdict> vs;
    {
        bool ok = (prod == Cyclo::rational(want));
        vs.push_back({"tau-conjugate-product", ok, ok ? "" : "got " + prod.str()});
    }
    {
        // cross-check the integral-based sum against the literal character sum
        Cyclo lit = gauss_literal(chi.primitive());
        bool ok = (tau == lit);
        vs.push_back({"matches-literal-character-sum", ok, ok ? "" : "literal " + lit.str()});
    }

    json results;
    results["tau"] = tagged(tau.str(), "computed:character-sum");
    results["tau_times_conjugate"] = tagged(prod.str(), "computed");
    results["chi_at_minus_one"] = tagged(chi.sign_at_minus_one(), "computed");
    results["conductor_exponent"] = tagged(cond, "computed");
    results["order"] = tagged(chi.order(), "computed");
    if (chi.order() == 2) results["tau_squared"] = tagged((tau * tau).str(), "computed");
    return make_report("gauss", inputs_json({{"p", p}, {"r", r}, {"char_index", e}}), results,
                       vs);
}

// --- lp ------------------------------------------------------------------------------

json report_lp(const MomentTable& T, const Rat& s, long want_prec, long require_certified) {
    LpValue lv = lp_eval(T, Padic(T.p, s), want_prec);

    std::vector<Verdict> vs;
    vs.push_back({"requested-precision-certified", lv.ok,
                  lv.ok ? "" : "certified only " + lv.certified.str()});
    if (require_certified >= 0) {
        bool ok = !(lv.certified < HalfInt::of_int(require_certified));
        vs.push_back({"certified-at-least-" + num(require_certified), ok,
                      ok ? "" : "certified " + lv.certified.str()});
    }

    json results;
    results["value"] = tagged(lv.value.str(), "computed:binomial-series");
    results["certified"] = tagged(lv.certified.str(), "computed:truncation-bound");
    results["table_provenance"] = tagged(provenance_name(T.provenance), "fixture");
    return make_report("lp",
                       inputs_json({{"p", T.p},
                                    {"k", T.k},
                                    {"depth", T.depth},
                                    {"s", rat_str(s)},
                                    {"want_prec", want_prec}}),
                       results, vs);
}

// --- verification suites ---------------------------------------------------------------

std::vector<Verdict> suite_local_integrals(const std::vector<long>& primes, long n_max,
                                           long va_lo, long va_hi, long cond_max_exp) {
    std::vector<Verdict> out;
    for (long p : primes) {
        {
            Verdict v{"local-integral unit-group p=" + num(p), true, ""};
            for (long va = va_lo; va <= va_hi && v.pass; ++va)
                for (long u : {1L, 2L, p + 1}) {
                    Rat a = Rat(u) * pow_rat(p, va);
                    Cyclo got = integral_additive(p, a, AdditiveRegion::unit_group());
                    Cyclo want = Cyclo::zero();
                    if (va >= 0) {
                        want = Cyclo::rational(frac(p - 1, p));
                    } else if (va == -1) {
                        for (long t = 1; t < p; ++t)
                            want = want + frac(1, p) * psi_value(p, a * Rat(t));
                    }
                    if (got != want) {
                        fail(v, "va=" + num(va) + " u=" + num(u));
                        break;
                    }
                }
            out.push_back(v);
        }
        {
            Verdict v{"local-integral coset p=" + num(p), true, ""};
            for (long n = 0; n <= n_max && v.pass; ++n)
                for (long va = va_lo; va <= va_hi && v.pass; ++va)
                    for (long snum : {0L, 1L, 2L, 7L}) {
                        Rat a = Rat(2) * pow_rat(p, va);
                        Cyclo got = integral_additive(p, a, AdditiveRegion::coset(Rat(snum), n));
                        Cyclo want = (va >= -n) ? pow_rat(p, -n) * psi_value(p, a * Rat(snum))
                                                : Cyclo::zero();
                        if (got != want) {
                            fail(v, "n=" + num(n) + " va=" + num(va) + " s=" + num(snum));
                            break;
                        }
                    }
            out.push_back(v);
        }
        {
            Verdict v{"local-integral mult-volumes p=" + num(p), true, ""};
            DirichletChar triv(p, 0, 0);
            for (long va = va_lo; va <= va_hi && v.pass; ++va) {
                Rat a = Rat(2) * pow_rat(p, va);
                Cyclo got = integral_mult_char(triv, 0, a);
                Cyclo want = Cyclo::zero();
                if (va >= 0)
                    want = Cyclo::one();
                else if (va == -1)
                    want = Cyclo::rational(frac(-1, p - 1));
                if (got != want) fail(v, "trivial va=" + num(va));
            }
            for (long t = 1; t <= 2 && v.pass; ++t) {
                // vol(1 + p^t Z_p, multiplicative) = p^(1-t)/(p-1)
                Cyclo got = integral_mult_char(triv, t, Rat(0));
                if (got != Cyclo::rational(frac(1, (p - 1) * ipow_l(p, t - 1))))
                    fail(v, "volume t=" + num(t));
            }
            out.push_back(v);
        }
        {
            Verdict v{"local-integral primitive-character p=" + num(p), true, ""};
            for (long r = 1; r <= cond_max_exp && v.pass; ++r) {
                long pr = ipow_l(p, r);
                long ord = euler_phi(pr);
                for (long e = 1; e < ord && v.pass; ++e) {
                    DirichletChar chi(p, r, e);
                    if (chi.conductor_exponent() != r) continue;  // primitive only
                    Cyclo tau = gauss_literal(chi);
                    DirichletChar chibar = chi.conjugate();
                    for (long va = va_lo; va <= va_hi && v.pass; ++va)
                        for (long u : {1L, 2L}) {
                            Rat a = Rat(u) * pow_rat(p, va);
                            Cyclo got = integral_mult_char(chi, 0, a);
                            Cyclo want = Cyclo::zero();
                            if (va == -r) {
                                long mu = ((-u) % pr + pr) % pr;
                                want = frac(1, ord) * (chibar.value(mu) * tau);
                            }
                            if (got != want) {
                                fail(v, "r=" + num(r) + " e=" + num(e) + " va=" + num(va) +
                                            " u=" + num(u));
                                break;
                            }
                        }
                }
            }
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Verdict> suite_gauss(const std::vector<std::pair<long, long>>& prime_powers) {
    std::vector<Verdict> out;
    for (auto [p, r] : prime_powers) {
        Verdict v{"gauss-identity p^r=" + num(ipow_l(p, r)), true, ""};
        long ord = euler_phi(ipow_l(p, r));
        for (long e = 1; e < ord && v.pass; ++e) {
            DirichletChar chi(p, r, e);
            if (chi.conductor_exponent() != r) continue;  // primitive characters only
            Cyclo prod = gauss_sum(chi) * gauss_sum(chi.conjugate());
            Rat want = Rat(chi.sign_at_minus_one()) * pow_rat(p, r);
            if (prod != Cyclo::rational(want)) fail(v, "e=" + num(e) + " identity");
            if (gauss_sum(chi) != gauss_literal(chi)) fail(v, "e=" + num(e) + " literal-sum");
        }
        out.push_back(v);
    }
    return out;
}

std::vector<Verdict> suite_keyprop(const std::vector<long>& primes, long n_max) {
    std::vector<Verdict> out;
    for (long p : primes) {
        for (int kind = 0; kind < 2; ++kind) {
            Verdict v{std::string("keyprop ") +
                          (kind == 0 ? "character-template" : "vp-template") + " p=" + num(p),
                      true, ""};
            for (const DirichletChar& eta : {DirichletChar(p, 0, 0), DirichletChar(p, 1, 1)}) {
                for (int cpi = 0; cpi < 2 && v.pass; ++cpi) {
                    PsiTemplate psi;
                    psi.kind = kind == 0 ? PsiKind::CHARACTER : PsiKind::VP_TIMES_CHARACTER;
                    psi.eta = eta;
                    psi.cp = cpi == 0 ? HalfPowerScalar::from_rat(p, Rat(2))
                                      : frac(1, p) * (HalfPowerScalar::theta(p) *
                                                      HalfPowerScalar::from_rat(p, Rat(3)));
                    psi.eps_p = cpi == 0 ? HalfPowerScalar::from_rat(p, Rat(3))
                                         : HalfPowerScalar::from_rat(p, Rat(9)) * psi.cp * psi.cp;
                    for (long n = 1; n <= n_max && v.pass; ++n)
                        for (long a : {1L, p + 2}) {
                            KeypropReport rep = verify_keyprop(a, n, psi);
                            if (!rep.ok) {
                                fail(v, "a=" + num(a) + " n=" + num(n) + " eta-cond=" +
                                            num(eta.conductor_exponent()) + " cp-variant=" +
                                            num(cpi));
                                break;
                            }
                        }
                }
            }
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Verdict> suite_euler(const std::vector<long>& primes, const std::vector<long>& ks,
                                 long cond_max_exp) {
    struct Job {
        std::string kase;
        EulerParams prm;
        std::string locator;
    };
    std::vector<Job> jobs;
    for (long p : primes) {
        std::vector<DirichletChar> chi0s = {DirichletChar(p, 0, 0)};
        for (long r = 1; r <= cond_max_exp; ++r) chi0s.push_back(DirichletChar(p, r, 1));
        for (long k : ks)
            for (long m = 0; m <= k; ++m)
                for (const DirichletChar& chi0 : chi0s) {
                    std::string loc = "p=" + num(p) + " k=" + num(k) + " m=" + num(m) +
                                      " cond=" + num(chi0.r());
                    {
                        Job j{"principal", {}, loc};
                        j.prm.kind = LocalCaseKind::PRINCIPAL;
                        j.prm.p = p;
                        j.prm.k = k;
                        j.prm.m = m;
                        j.prm.chi_i = LocalCharacter::unramified(
                            p, HalfPowerScalar::from_rat(p, Rat(2)), HalfInt::of_int(0));
                        j.prm.chi_j = LocalCharacter::unramified(
                            p, HalfPowerScalar::from_rat(p, Rat(3)), HalfInt::of_int(k + 1));
                        j.prm.chi0 = chi0;
                        jobs.push_back(j);
                    }
                    {
                        Job j{"principal-ramified-slot", {}, loc};
                        j.prm.kind = LocalCaseKind::PRINCIPAL;
                        j.prm.p = p;
                        j.prm.k = k;
                        j.prm.m = m;
                        j.prm.chi_i = LocalCharacter{DirichletChar(p, 1, 1),
                                                     HalfPowerScalar::from_rat(p, Rat(2)),
                                                     HalfInt::of_int(0)};
                        j.prm.chi_j = LocalCharacter::unramified(
                            p, HalfPowerScalar::from_rat(p, Rat(7)), HalfInt::of_int(k + 1));
                        j.prm.chi0 = chi0;
                        jobs.push_back(j);
                    }
                    {
                        Job j{"special", {}, loc};
                        j.prm.kind = LocalCaseKind::SPECIAL;
                        j.prm.p = p;
                        j.prm.k = k;
                        j.prm.m = m;
                        j.prm.chi_i = LocalCharacter::unramified(
                            p, HalfPowerScalar::from_rat(p, Rat(2)), HalfInt::of_int(0));
                        j.prm.chi0 = chi0;
                        jobs.push_back(j);
                    }
                    {
                        Job j{"extremal", {}, loc};
                        j.prm.kind = LocalCaseKind::EXTREMAL;
                        j.prm.p = p;
                        j.prm.k = k;
                        j.prm.m = m;
                        j.prm.chi_i = LocalCharacter::unramified(
                            p, HalfPowerScalar::half_power(p, -k), HalfInt::halves(-k));
                        j.prm.chi0 = chi0;
                        jobs.push_back(j);
                    }
                    {
                        Job j{"extremal-ramified-slot", {}, loc};
                        j.prm.kind = LocalCaseKind::EXTREMAL;
                        j.prm.p = p;
                        j.prm.k = k;
                        j.prm.m = m;
                        j.prm.chi_i = LocalCharacter{DirichletChar(p, 1, 1),
                                                     HalfPowerScalar::from_rat(p, Rat(1)),
                                                     HalfInt::of_int(0)};
                        j.prm.chi0 = chi0;
                        jobs.push_back(j);
                    }
                }
    }

    // independent jobs run in parallel; assembly below is serialized and
    // deterministic in the job order
    std::vector<char> ok(jobs.size(), 0);
    std::vector<std::string> wit(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < (long)jobs.size(); ++i) {
        try {
            HalfPowerScalar closed = euler_factor_closed(jobs[(size_t)i].prm);
            EulerResult oracle = euler_factor_oracle(jobs[(size_t)i].prm);
            ok[(size_t)i] = (closed == oracle.value) ? 1 : 0;
            if (!ok[(size_t)i]) wit[(size_t)i] = jobs[(size_t)i].locator;
        } catch (const std::exception& e) {
            ok[(size_t)i] = 0;
            wit[(size_t)i] = jobs[(size_t)i].locator + " threw: " + e.what();
        }
    }

    // one verdict per (prime, case template)
    std::vector<Verdict> out;
    for (long p : primes)
        for (const char* kase : {"principal", "principal-ramified-slot", "special", "extremal",
                                 "extremal-ramified-slot"}) {
            Verdict v{std::string("euler ") + kase + " p=" + num(p), true, ""};
            for (size_t i = 0; i < jobs.size(); ++i)
                if (jobs[i].prm.p == p && jobs[i].kase == kase && !ok[i]) {
                    fail(v, wit[i]);
                    break;
                }
            out.push_back(v);
        }
    return out;
}

std::vector<Verdict> suite_kirillov(const std::vector<long>& primes) {
    std::vector<Verdict> out;
    for (long p : primes) {
        Verdict up{"kirillov up-eigenline p=" + num(p), true, ""};
        Verdict tp{"kirillov tp-jordan-sum p=" + num(p), true, ""};
        for (int xi = 0; xi < 2; ++xi) {
            HalfPowerScalar X =
                xi == 0 ? HalfPowerScalar::one(p) : HalfPowerScalar::from_rat(p, Rat(3));
            PsiTemplate psi = PsiTemplate::extremal(p, DirichletChar(p, 0, 0), X);
            HalfPowerScalar alpha = psi.eps_p.inverse() * (Rat(p) * psi.cp);
            KirillovFunction v0 = kirillov_v0(psi), v1 = kirillov_v1(psi);
            KirillovFunction sum = v0 + v1;
            if (!(hecke_up(v0, psi.eps_p) == alpha * v0)) fail(up, "U_p V0 variant " + num(xi));
            if (!(hecke_up(sum, psi.eps_p) == alpha * sum + alpha * v0))
                fail(up, "U_p Jordan line variant " + num(xi));
            if (!(hecke_tp(sum, psi.eps_p) == (Rat(2) * alpha) * sum))
                fail(tp, "T_p sum variant " + num(xi));
        }
        out.push_back(up);
        out.push_back(tp);
    }
    return out;
}

std::vector<Verdict> suite_symbols(const Fixture& fx, int sign) {
    std::string tagln = " level=" + num(fx.level) + " sign=" + (sign > 0 ? "+1" : "-1");
    std::vector<Verdict> out;
    try {
        ManinSymbolSpace S = ManinSymbolSpace::build(fx.level, fx.weight_k);
        std::vector<Rat> phi = eigensymbol(S, sign, fx.hecke_targets);
        for (const HeckeTarget& t : fx.hecke_targets) {
            Verdict v{"symbols T_" + num(t.q) + tagln, true, ""};
            std::vector<Rat> w = hecke(S, phi, t.q);
            for (size_t i = 0; i < phi.size(); ++i)
                if (w[i] != t.aq * phi[i]) {
                    fail(v, "coordinate " + num((long)i));
                    break;
                }
            out.push_back(v);
        }
        Verdict v{"symbols eigenline" + tagln, true, ""};
        std::vector<Rat> w = act_involution(S, phi);
        for (size_t i = 0; i < phi.size(); ++i)
            if (w[i] != Rat(sign) * phi[i]) {
                fail(v, "involution coordinate " + num((long)i));
                break;
            }
        out.push_back(v);
    } catch (const std::exception& e) {
        out.push_back({"symbols eigenline" + tagln, false, e.what()});
    }
    return out;
}

std::vector<Verdict> suite_stabilize(const Fixture& fx, const std::vector<long>& primes) {
    std::vector<Verdict> out;
    for (long p : primes)
        for (const char* root : {"0", "1"}) {
            Verdict v{"stabilize p=" + num(p) + " root=" + root, true, ""};
            try {
                StabContext c = make_stab(fx, +1, p, root);
                std::vector<QuadExt> w = hecke(c.SNp, c.sym.data, p);
                for (size_t i = 0; i < w.size(); ++i)
                    if (!(w[i] == c.sym.alpha * c.sym.data[i])) {
                        fail(v, "coordinate " + num((long)i));
                        break;
                    }
            } catch (const std::exception& e) {
                fail(v, e.what());
            }
            out.push_back(v);
        }
    return out;
}

std::vector<Verdict> suite_measure(const Fixture& fx, long p, long depth) {
    std::vector<Verdict> out;
    try {
        validate_stab_params(fx, p);
        ManinSymbolSpace SN = ManinSymbolSpace::build(fx.level, fx.weight_k);
        ManinSymbolSpace SNp = ManinSymbolSpace::build(fx.level * p, fx.weight_k);

        // all four tables: both symbol signs, both Hecke roots
        std::vector<MomentTable> tables(4);
        for (int si = 0; si < 2; ++si) {
            int sign = si == 0 ? +1 : -1;
            std::vector<Rat> phi = eigensymbol(SN, sign, fx.hecke_targets);
            Rat ap = eigen_ap(SN, phi, fx, p, nullptr);
            auto roots = quadratic_roots(ap, pow_rat(p, fx.weight_k + 1));
            for (int ri = 0; ri < 2; ++ri) {
                auto [alpha, beta] = select_root(p, roots, ri == 0 ? "0" : "1");
                StabilizedSymbol sym = p_stabilize(SN, phi, SNp, p, alpha, beta);
                MomentTable T = measure_from_symbol(SNp, sym, depth);
                std::string tagln =
                    std::string(" sign=") + (sign > 0 ? "+1" : "-1") + " root=" + num(ri);
                {
                    AdditivityReport rep = additivity_check(T);
                    out.push_back({"measure additivity" + tagln, rep.pass,
                                   rep.pass ? "" : rep.witness.str()});
                }
                {
                    AdmissibilityReport rep =
                        admissibility_check(T, quad_valuation(p, sym.alpha));
                    out.push_back({"measure admissibility" + tagln, rep.pass,
                                   rep.pass ? "" : rep.witness.str()});
                }
                tables[(size_t)(si * 2 + ri)] = std::move(T);
            }
        }

        // two-stabilization ratio on conductor-p characters:
        // alpha * integral(chi, dmu_alpha) = beta * integral(chi, dmu_beta),
        // with the character routed to the symbol sign matching its parity
        Verdict ratio{"stabilization-ratio conductor-p", true, ""};
        bool any_nonzero = false;
        for (long e = 1; e < p - 1; ++e) {
            DirichletChar chi(p, 1, e);
            int si = chi.sign_at_minus_one() < 0 ? 1 : 0;
            const MomentTable& Ta = tables[(size_t)(si * 2)];
            const MomentTable& Tb = tables[(size_t)(si * 2 + 1)];
            CycQuad ia = integrate_character(Ta, chi, 0);
            CycQuad ib = integrate_character(Tb, chi, 0);
            if (!ia.is_zero() || !ib.is_zero()) any_nonzero = true;
            if (!(scale(Ta.alpha, ia) == scale(Tb.alpha, ib)))
                fail(ratio, "e=" + num(e) + " parity=" + num(chi.sign_at_minus_one()));
        }
        out.push_back(ratio);
        out.push_back({"stabilization-ratio nondegenerate", any_nonzero,
                       any_nonzero ? "" : "all conductor-p integrals vanished"});
    } catch (const std::exception& e) {
        out.push_back({"measure suite p=" + num(p), false, e.what()});
    }
    return out;
}

std::vector<Verdict> suite_extremal(const std::vector<ExtremalJob>& jobs, bool require_sharp) {
    std::vector<Verdict> out;
    bool any_sharp = false;
    std::string sharp_list;
    for (const ExtremalJob& jb : jobs) {
        std::string tagln = " p=" + num(jb.p) + " k=" + num(jb.k) + " seed=" +
                            std::to_string(jb.rng_seed);
        try {
            QuadExt alpha = extremal_alpha(jb.p, jb.k);
            ExtremalSeed seed = synthetic_extremal_seed(jb.p, jb.k, alpha, jb.depth, jb.rng_seed);
            JordanReport jr = jordan_pair_check(seed);
            out.push_back({"extremal jordan" + tagln, jr.pass() && jr.nontrivial,
                           jr.pass() ? (jr.nontrivial ? "" : "trivial seed") : jr.detail});
            MomentTable T = extremal_measure(seed);
            {
                AdditivityReport rep = additivity_check(T);
                out.push_back({"extremal additivity" + tagln, rep.pass,
                               rep.pass ? "" : rep.witness.str()});
            }
            {
                AdmissibilityReport rep = admissibility_check(T, HalfInt::halves(jb.k + 1));
                out.push_back({"extremal admissibility" + tagln, rep.pass,
                               rep.pass ? "" : rep.witness.str()});
            }
            if (!admissibility_check(T, HalfInt::halves(jb.k)).pass) {
                any_sharp = true;
                sharp_list += (sharp_list.empty() ? "" : ", ") + tagln.substr(1);
            }
        } catch (const std::exception& e) {
            out.push_back({"extremal jordan" + tagln, false, e.what()});
        }
    }
    if (require_sharp)
        out.push_back({"extremal sharpness-witness", any_sharp,
                       any_sharp ? "sharp at: " + sharp_list
                                 : "no seed failed admissibility at (k+1)/2 - 1/2"});
    return out;
}

std::vector<Verdict> suite_av(const Fixture& fx, long p, long depth) {
    std::vector<Verdict> out;
    try {
        validate_stab_params(fx, p);
        std::string root = "ordinary";
        StabContext c;
        try {
            c = make_stab(fx, +1, p, root);
        } catch (const std::invalid_argument&) {
            c = make_stab(fx, +1, p, "0");
        }
        MomentTable T = measure_from_symbol(c.SNp, c.sym, depth);
        HalfInt h = quad_valuation(p, c.sym.alpha);
        long k = fx.weight_k;

        {
            // polynomial range: the truncated sum telescopes exactly to the
            // stored moment, at every data depth
            Verdict v{"av polynomial-range exactness", true, ""};
            for (long m = 0; m <= k && v.pass; ++m)
                for (long a : {1L, p - 1}) {
                    for (long n = 1; n <= depth; ++n) {
                        ExtendedMoment em = amice_velu_extend(T, h, a, 1, m, n);
                        if (!em.exact || !(em.value == T.at(1, a, m))) {
                            fail(v, "m=" + num(m) + " a=" + num(a) + " n=" + num(n));
                            break;
                        }
                    }
                    if (!v.pass) break;
                }
            out.push_back(v);
        }
        if (h < HalfInt::of_int(k + 1)) {
            // beyond the weight: successive depths agree within the certified bound
            Verdict v{"av certified convergence", true, ""};
            for (long m = k + 1; m <= k + 3 && v.pass; ++m) {
                ExtendedMoment prev = amice_velu_extend(T, h, 1, 1, m, 1);
                for (long n = 2; n <= depth; ++n) {
                    ExtendedMoment now = amice_velu_extend(T, h, 1, 1, m, n);
                    QuadExt jump = now.value - prev.value;
                    if (!jump.is_zero() && quad_valuation(p, jump) < prev.precision) {
                        fail(v, "m=" + num(m) + " n=" + num(n) + " jump");
                        break;
                    }
                    if (now.precision < prev.precision) {
                        fail(v, "m=" + num(m) + " n=" + num(n) + " bound decreased");
                        break;
                    }
                    prev = now;
                }
            }
            out.push_back(v);
        }
        {
            Verdict v{"lp total-mass at s=0", true, ""};
            LpValue lv = lp_eval(T, Padic(p, Rat(0)), 6);
            QuadExt mass = integrate_character(T, DirichletChar(p, 0, 0), 0).c[0];
            if (!lv.ok)
                fail(v, "not certified: " + lv.certified.str());
            else if (!equal_mod_prec(lv.value, quad_embed(p, mass, 6)))
                fail(v, "value " + lv.value.str() + " vs mass " + mass.str());
            out.push_back(v);
        }
        if (depth >= 3) {
            Verdict v{"lp depth-stability", true, ""};
            MomentTable T2 = measure_from_symbol(c.SNp, c.sym, depth - 1);
            LpValue deep = lp_eval(T, Padic(p, Rat(2)), 2);
            LpValue shallow = lp_eval(T2, Padic(p, Rat(2)), 2);
            if (!deep.ok || !shallow.ok)
                fail(v, "not certified at precision 2");
            else if (deep.certified < shallow.certified)
                fail(v, "certificate weakened with depth");
            else if (!equal_mod_prec(shallow.value.with_precision(2),
                                     deep.value.with_precision(2)))
                fail(v, "values differ mod p^2");
            out.push_back(v);
        }
    } catch (const std::exception& e) {
        out.push_back({"av suite p=" + num(p), false, e.what()});
    }
    return out;
}

json report_verify(const std::string& suite, long p, long depth, const std::string& fixture_dir) {
    static const std::vector<std::string> known = {
        "local-integrals", "gauss",   "keyprop", "euler",    "kirillov",
        "symbols",         "stabilize", "measure", "extremal", "av",
        "all"};
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
        std::string names;
        for (const auto& s : known) names += (names.empty() ? "" : ", ") + s;
        throw std::invalid_argument("verify: unknown suite '" + suite + "' (choose from " +
                                    names + ")");
    }
    if (depth < 2) throw std::invalid_argument("verify: depth must be >= 2");

    bool all = (suite == "all");
    auto want = [&](const char* name) { return all || suite == name; };
    auto fixture = [&](const char* stem) {
        return fixture_load(fixture_dir + "/" + stem + ".json");
    };

    std::vector<Verdict> vs;
    auto append = [&](std::vector<Verdict> more) {
        for (auto& v : more) vs.push_back(std::move(v));
    };

    if (want("local-integrals")) append(suite_local_integrals({p}, 2, -3, 1, 2));
    if (want("gauss")) append(suite_gauss({{p, 1}, {p, 2}}));
    if (want("keyprop")) append(suite_keyprop({p}, 2));
    if (want("euler")) append(suite_euler({p}, {0L, 2L}, 1));
    if (want("kirillov")) append(suite_kirillov({p}));
    if (want("symbols")) {
        Fixture f11 = fixture("11a");
        append(suite_symbols(f11, +1));
        append(suite_symbols(f11, -1));
        append(suite_symbols(fixture("delta"), +1));
    }
    if (want("stabilize")) append(suite_stabilize(fixture("11a"), {p}));
    if (want("measure")) append(suite_measure(fixture("11a"), p, depth));
    if (want("extremal"))
        append(suite_extremal({ExtremalJob{3, 0, 3, 1}, ExtremalJob{3, 2, 3, 7},
                               ExtremalJob{5, 0, 3, 11}},
                              true));
    if (want("av")) append(suite_av(fixture("11a"), p, depth));

    long passed = 0;
    for (const Verdict& v : vs) passed += v.pass ? 1 : 0;
    json results;
    results["checks"] = tagged((long)vs.size(), "computed");
    results["passed"] = tagged(passed, "computed");
    return make_report("verify",
                       inputs_json({{"suite", suite},
                                    {"p", p},
                                    {"depth", depth},
                                    {"fixture_dir", fixture_dir}}),
                       results, vs);
}

}  // namespace lpadic
