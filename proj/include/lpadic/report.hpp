#pragma once
// Report layer: every CLI command is realized as a pure function from typed
// parameters to a JSON report document. A report carries the echoed inputs,
// exact result values (rational / quadratic / cyclotomic strings, each with a
// provenance tag), and a list of named pass/fail verdicts with witnesses.
// Identical parameters produce byte-identical documents; wall-clock timing is
// never part of a document.

#include "lpadic/kirillov.hpp"
#include "lpadic/measures.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace lpadic {

// --- fixtures --------------------------------------------------------------

// A cuspidal eigenform pinned down by frozen Hecke eigenvalues.
// JSON shape: {level, weight_k, hecke_targets: [{q, a_q}], description}.
struct Fixture {
    long level = 0;
    long weight_k = 0;  // polynomial degree k (classical weight k + 2)
    std::vector<HeckeTarget> hecke_targets;
    std::string description;
};

Fixture fixture_from_json(const std::string& text);
std::string fixture_to_json(const Fixture& fx);
Fixture fixture_load(const std::string& path);  // reads and parses a file

// --- report documents -------------------------------------------------------

struct Verdict {
    std::string name;
    bool pass = false;
    std::string witness;  // empty when passing, or a short locator
};

nlohmann::json verdicts_to_json(const std::vector<Verdict>& vs);
bool report_all_pass(const nlohmann::json& report);
std::string report_dump(const nlohmann::json& report);  // canonical text form

// one tagged value inside "results"
nlohmann::json tagged(const nlohmann::json& value, const std::string& provenance);

// --- per-command reports -----------------------------------------------------

nlohmann::json report_build_space(long level, long weight_k);

nlohmann::json report_eigensymbol(const Fixture& fx, int sign);

// root: "ordinary" | "critical" | "0" | "1"
nlohmann::json report_stabilize(const Fixture& fx, int sign, long p, const std::string& root);

// builds the moment table; when table_json_out != nullptr the table's JSON
// text is stored there (for the caller to write wherever it wants)
nlohmann::json report_measure(const Fixture& fx, int sign, long p, const std::string& root,
                              long depth, std::string* table_json_out);

nlohmann::json report_extremal(long p, long k, long depth, unsigned long long rng_seed,
                               std::string* table_json_out);

// kase: "principal" | "special" | "extremal"; chi0 = character mod p^cond with
// generator-image index char_index; slot_eta_cond >= 1 puts a ramified unit
// part on the slot character carried by the local model
nlohmann::json report_euler(const std::string& kase, long p, long k, long m, long cond,
                            long char_index, long slot_eta_cond);

// char_index < 0 selects the quadratic character mod p^r
nlohmann::json report_gauss(long p, long r, long char_index);

nlohmann::json report_lp(const MomentTable& T, const Rat& s, long want_prec,
                         long require_certified);

// --- verification suites ------------------------------------------------------
// Parameterized so the CLI can run quick grids and the acceptance harness can
// run full ones. Each returns one verdict per checked identity.

std::vector<Verdict> suite_local_integrals(const std::vector<long>& primes, long n_max,
                                           long va_lo, long va_hi, long cond_max_exp);
std::vector<Verdict> suite_gauss(const std::vector<std::pair<long, long>>& prime_powers);
std::vector<Verdict> suite_keyprop(const std::vector<long>& primes, long n_max);
std::vector<Verdict> suite_euler(const std::vector<long>& primes, const std::vector<long>& ks,
                                 long cond_max_exp);
std::vector<Verdict> suite_kirillov(const std::vector<long>& primes);
std::vector<Verdict> suite_symbols(const Fixture& fx, int sign);
std::vector<Verdict> suite_stabilize(const Fixture& fx, const std::vector<long>& primes);
std::vector<Verdict> suite_measure(const Fixture& fx, long p, long depth);
struct ExtremalJob {
    long p = 3, k = 0, depth = 3;
    unsigned long long rng_seed = 1;
};
// require_sharp: additionally demand that at least one job's table fails
// admissibility at exponent (k+1)/2 - 1/2
std::vector<Verdict> suite_extremal(const std::vector<ExtremalJob>& jobs, bool require_sharp);
std::vector<Verdict> suite_av(const Fixture& fx, long p, long depth);

// named aggregation used by `verify`; suite: one of the names above or "all"
nlohmann::json report_verify(const std::string& suite, long p, long depth,
                             const std::string& fixture_dir);

}  // namespace lpadic
