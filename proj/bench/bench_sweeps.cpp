// Serial vs OpenMP timings for the three property sweeps.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "cfs/enumerate.hpp"
#include "cfs/sweep.hpp"
#include "cfs/syntax.hpp"

using namespace cfs;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const char* name, std::size_t items, double serial, double parallel, bool same) {
    std::printf("%-10s %9zu %10.3f %10.3f %7.2fx  %s\n", name, items, serial, parallel, serial / parallel,
                same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads %d, best of %d\n", omp_get_max_threads(), reps);
    std::printf("%-10s %9s %10s %10s %8s\n", "sweep", "items", "serial s", "omp s", "speedup");

    const auto pool = enumerate_proofs({parse_formula("bot"), parse_formula("p"), parse_formula("box p"),
                                        parse_formula("p -> bot"), parse_formula("box bot")});
    const auto cuts = all_cut_pairs(pool);
    CutSweepStats cs, cp;
    const double c1 = best_of(reps, [&] { cs = cut_sweep_serial(cuts); });
    const double c2 = best_of(reps, [&] { cp = cut_sweep_parallel(cuts); });
    row("cut", cuts.size(), c1, c2, cs == cp);

    const std::vector<Formula> vocab{goedel_fp("x"), henkin_fp("x"), parse_formula("p"), parse_formula("box p")};
    const auto wpool = enumerate_proofs(vocab);
    const auto jobs = weakening_jobs(wpool, formula_closure(vocab, 2), 3, 1);
    WeakeningSweepStats ws, wp;
    const double w1 = best_of(reps, [&] { ws = weakening_sweep_serial(jobs); });
    const double w2 = best_of(reps, [&] { wp = weakening_sweep_parallel(jobs); });
    row("weaken", jobs.size(), w1, w2, ws == wp);

    ApsSweepStats as, ap;
    const double a1 = best_of(reps, [&] { as = aps_sweep_serial(); });
    const double a2 = best_of(reps, [&] { ap = aps_sweep_parallel(); });
    row("aps", as.instances, a1, a2, as == ap);
    return cs == cp && ws == wp && as == ap ? 0 : 1;
}
