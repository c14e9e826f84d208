// Benchmark of the parallel moment-table kernel against its serial reference:
// same symbol, same depth, timed separately, tables compared cell by cell.

#include "lpadic/manin.hpp"
#include "lpadic/measures.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace lpadic;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    long p = 3, depth = 5, reps = 3;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        auto next = [&] {
            if (i + 1 >= argc) {
                std::fprintf(stderr, "missing value after %s\n", a.c_str());
                std::exit(2);
            }
            return std::atol(argv[++i]);
        };
        if (a == "--p")
            p = next();
        else if (a == "--depth")
            depth = next();
        else if (a == "--reps")
            reps = next();
        else {
            std::fprintf(stderr, "usage: %s [--p P] [--depth D] [--reps R]\n", argv[0]);
            return 2;
        }
    }

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
    std::printf("level 11 symbol, p = %ld, depth = %ld (%ld reps, best shown)\n", p, depth, reps);

    ManinSymbolSpace SN = ManinSymbolSpace::build(11, 0);
    std::vector<HeckeTarget> targets = {{2, Rat(-2)}, {3, Rat(-1)}, {5, Rat(1)},
                                        {7, Rat(-2)}, {13, Rat(4)}};
    std::vector<Rat> phi = eigensymbol(SN, +1, targets);
    Rat ap;
    bool pinned = false;
    for (const HeckeTarget& t : targets)
        if (t.q == p) {
            ap = t.aq;
            pinned = true;
        }
    if (!pinned) {
        std::vector<Rat> w = hecke(SN, phi, p);
        size_t i = 0;
        while (i < phi.size() && phi[i] == 0) ++i;
        ap = w[i] / phi[i];
    }
    auto roots = quadratic_roots(ap, pow_rat(p, 1));
    ManinSymbolSpace SNp = ManinSymbolSpace::build(11 * p, 0);
    StabilizedSymbol sym = p_stabilize(SN, phi, SNp, p, roots.first, roots.second);

    double best_par = 1e9, best_ser = 1e9;
    MomentTable Tp, Ts;
    for (long r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        Tp = measure_from_symbol(SNp, sym, depth);
        best_par = std::min(best_par, seconds_since(t0));

        t0 = std::chrono::steady_clock::now();
        Ts = measure_from_symbol_serial(SNp, sym, depth);
        best_ser = std::min(best_ser, seconds_since(t0));
    }

    bool same = (Tp == Ts);
    std::printf("parallel kernel: %.3fs\n", best_par);
    std::printf("serial kernel:   %.3fs\n", best_ser);
    std::printf("speedup: %.2fx\n", best_ser / best_par);
    std::printf("tables identical: %s\n", same ? "yes" : "NO");
    return same ? 0 : 1;
}
