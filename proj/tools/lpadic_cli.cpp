// Command-line front end: every subcommand builds one JSON report on stdout
// (or --out FILE) and exits 0 exactly when all verdicts in the report pass.
// Exit 2 flags bad input or an I/O failure. Timing goes to stderr only, so
// identical invocations produce byte-identical reports.

#include "lpadic/report.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using lpadic::Fixture;
using lpadic::Rat;

long env_long(const char* name, long fallback) {
    const char* s = std::getenv(name);
    if (!s || !*s) return fallback;
    try {
        return std::stol(s);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(name) + " must be an integer, got '" + s + "'");
    }
}

void apply_thread_env() {
#ifdef _OPENMP
    long t = env_long("LPADIC_THREADS", 0);
    if (t > 0) omp_set_num_threads((int)t);
#endif
}

void check_depth_cap(long depth) {
    long cap = env_long("LPADIC_MAX_DEPTH", 0);
    if (cap > 0 && depth > cap)
        throw std::invalid_argument("depth " + std::to_string(depth) +
                                    " exceeds the LPADIC_MAX_DEPTH cap of " + std::to_string(cap));
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

int emit(const nlohmann::json& report, const std::string& out_path) {
    std::string text = lpadic::report_dump(report);
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
    return lpadic::report_all_pass(report) ? 0 : 1;
}

lpadic::MomentTable load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open table file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return lpadic::moment_table_from_json(ss.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructions and checks for cyclotomic p-adic L-functions"};
    app.require_subcommand(1);
    app.fallthrough();  // parent options (--out) may follow the subcommand name

    std::string out_path;
    app.add_option("--out", out_path, "write the JSON report to this file instead of stdout");

    // shared option storage; each subcommand binds the ones it uses
    std::string fixture_path, root = "ordinary", kase, char_sel = "1", suite = "all";
    std::string table_path, out_table, s_str = "0", fixture_dir = "data/fixtures";
    long level = 11, weight_k = 0, p = 3, k = 0, m = 0, depth = 4, r = 1, cond = 0;
    long slot_eta_cond = 0, want_prec = 4, require_certified = -1;
    int sign = 1;
    unsigned long long rng_seed = 1;

    CLI::App* c_build = app.add_subcommand("build-space", "build a symbol space, check its structure");
    c_build->add_option("--level", level, "level of the space")->required();
    c_build->add_option("--weight", weight_k, "polynomial weight k (form weight minus 2)");

    auto add_fixture = [&](CLI::App* c) {
        c->add_option("--fixture", fixture_path, "eigenform fixture JSON file")->required();
    };
    auto add_sign = [&](CLI::App* c) {
        c->add_option("--sign", sign, "involution eigenvalue, +1 or -1")->check(CLI::IsMember({1, -1}));
    };

    CLI::App* c_eig = app.add_subcommand("eigensymbol", "cut out the eigensymbol pinned by a fixture");
    add_fixture(c_eig);
    add_sign(c_eig);

    CLI::App* c_stab = app.add_subcommand("stabilize", "p-stabilize the eigensymbol to level Np");
    add_fixture(c_stab);
    add_sign(c_stab);
    c_stab->add_option("--p", p, "odd prime not dividing the level")->required();
    c_stab->add_option("--root", root, "ordinary | critical | 0 | 1");

    CLI::App* c_meas = app.add_subcommand("measure", "moment table of the stabilized symbol");
    add_fixture(c_meas);
    add_sign(c_meas);
    c_meas->add_option("--p", p, "odd prime not dividing the level")->required();
    c_meas->add_option("--root", root, "ordinary | critical | 0 | 1");
    c_meas->add_option("--depth", depth, "number of table levels");
    c_meas->add_option("--out-table", out_table, "write the moment table JSON to this file");

    CLI::App* c_ext = app.add_subcommand("extremal", "synthetic double-root measure from a seeded draw");
    c_ext->add_option("--p", p, "odd prime")->required();
    c_ext->add_option("--k", k, "polynomial weight, k < p");
    c_ext->add_option("--depth", depth, "number of table levels");
    c_ext->add_option("--rng-seed", rng_seed, "seed of the deterministic draw");
    c_ext->add_option("--out-table", out_table, "write the moment table JSON to this file");

    CLI::App* c_eul = app.add_subcommand("euler", "local Euler-type factor, closed form vs oracle");
    c_eul->add_option("--case", kase, "principal | special | extremal")->required();
    c_eul->add_option("--p", p, "odd prime")->required();
    c_eul->add_option("--k", k, "polynomial weight");
    c_eul->add_option("--m", m, "twist exponent, 0 <= m <= k");
    c_eul->add_option("--cond", cond, "conductor exponent of the unit twist");
    c_eul->add_option("--char-index", char_sel, "generator image index of the unit twist");
    c_eul->add_option("--slot-eta-cond", slot_eta_cond,
                      "conductor exponent of a ramified unit part on the model slot");

    CLI::App* c_gau = app.add_subcommand("gauss", "Gauss sum of a unit character mod p^r");
    c_gau->add_option("--p", p, "odd prime")->required();
    c_gau->add_option("--r", r, "modulus exponent, >= 1");
    c_gau->add_option("--char", char_sel, "generator image index, or 'quadratic'");

    CLI::App* c_lp = app.add_subcommand("lp", "evaluate the p-adic L-function of a stored table");
    c_lp->add_option("--table", table_path, "moment table JSON file")->required();
    c_lp->add_option("--s", s_str, "evaluation point, a rational");
    c_lp->add_option("--prec", want_prec, "requested certified absolute precision");
    c_lp->add_option("--require-certified", require_certified,
                     "fail unless the certificate reaches this exponent");

    CLI::App* c_ver = app.add_subcommand("verify", "run a verification suite");
    c_ver->add_option("--suite", suite,
                      "local-integrals | gauss | keyprop | euler | kirillov | symbols | "
                      "stabilize | measure | extremal | av | all");
    c_ver->add_option("--p", p, "odd prime the suites are run at");
    c_ver->add_option("--depth", depth, "table depth for the measure suites");
    c_ver->add_option("--fixtures", fixture_dir, "directory holding the fixture JSON files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int prc = app.exit(e);
        return prc == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    int rc = 2;
    try {
        apply_thread_env();
        check_depth_cap(depth);

        long char_index = -1;
        if (char_sel != "quadratic") {
            try {
                std::size_t used = 0;
                char_index = std::stol(char_sel, &used);
                if (used != char_sel.size()) throw std::invalid_argument(char_sel);
            } catch (const std::exception&) {
                throw std::invalid_argument("--char must be an integer index or 'quadratic', got '" +
                                            char_sel + "'");
            }
        }
        nlohmann::json report;
        std::string table_json;

        if (c_build->parsed()) {
            report = lpadic::report_build_space(level, weight_k);
        } else if (c_eig->parsed()) {
            report = lpadic::report_eigensymbol(lpadic::fixture_load(fixture_path), sign);
        } else if (c_stab->parsed()) {
            report = lpadic::report_stabilize(lpadic::fixture_load(fixture_path), sign, p, root);
        } else if (c_meas->parsed()) {
            report = lpadic::report_measure(lpadic::fixture_load(fixture_path), sign, p, root,
                                            depth, out_table.empty() ? nullptr : &table_json);
        } else if (c_ext->parsed()) {
            report = lpadic::report_extremal(p, k, depth, rng_seed,
                                             out_table.empty() ? nullptr : &table_json);
        } else if (c_eul->parsed()) {
            report = lpadic::report_euler(kase, p, k, m, cond, char_index, slot_eta_cond);
        } else if (c_gau->parsed()) {
            report = lpadic::report_gauss(p, r, char_index);
        } else if (c_lp->parsed()) {
            report = lpadic::report_lp(load_table(table_path), lpadic::rat_from_str(s_str),
                                       want_prec, require_certified);
        } else if (c_ver->parsed()) {
            report = lpadic::report_verify(suite, p, depth, fixture_dir);
        }

        if (!out_table.empty()) write_text(out_table, table_json);
        rc = emit(report, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 2;
    }
    auto t1 = std::chrono::steady_clock::now();
    std::cerr << "elapsed: " << std::chrono::duration<double>(t1 - t0).count() << "s\n";
    return rc;
}
