// Compares the serial reference path (threads = 1) against the OpenMP kernels
// on representative solver workloads and checks that both produce identical
// values. Build target only; not part of the test suite.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <fmt/format.h>

#include "entconv/optimizer.hpp"
#include "entconv/oracles.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace entconv;

namespace {

double time_solve(const DensityMatrix& rho, const MonotoneSpec& spec, SolverConfig cfg,
                  int threads, double* value) {
    cfg.threads = threads;
    const auto t0 = std::chrono::steady_clock::now();
    *value = minimize_ef(rho, spec, cfg).value;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void run_case(const char* name, const DensityMatrix& rho, const MonotoneSpec& spec,
              const SolverConfig& cfg, int threads) {
    double serial_value = 0.0;
    double parallel_value = 0.0;
    const double serial_t = time_solve(rho, spec, cfg, 1, &serial_value);
    const double parallel_t = time_solve(rho, spec, cfg, threads, &parallel_value);
    fmt::print("{:<32} serial {:8.3f}s   omp({} threads) {:8.3f}s   speedup {:5.2f}x   {}\n",
               name, serial_t, threads, parallel_t, serial_t / parallel_t,
               serial_value == parallel_value ? "values identical" : "VALUE MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    int threads = 0;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    if (argc > 1)
        threads = std::atoi(argv[1]);
    if (threads < 2) {
        fmt::print("need OpenMP and at least 2 threads to compare; pass a thread count "
                   "as the first argument\n");
        return 0;
    }

    {
        const DensityMatrix sigma = theorem4_state(Theorem4Params::from_c1_squared(0.5, 0.5));
        SolverConfig cfg;
        cfg.restarts = 64;
        cfg.cardinality = 4;
        cfg.seed = 1;
        run_case("family state, entropy, m=4", sigma, entropy_monotone(), cfg, threads);
    }
    {
        const DensityMatrix rho = random_density({2, 2}, 4, 2);
        SolverConfig cfg;
        cfg.restarts = 32;
        cfg.cardinality = 4;
        cfg.max_iters = 4000;
        cfg.stall_iters = 400;
        cfg.seed = 3;
        run_case("two-qubit full rank, concurrence", rho, concurrence_monotone(), cfg, threads);
    }
    {
        const DensityMatrix rho = random_density({3, 3}, 3, 4);
        SolverConfig cfg;
        cfg.restarts = 16;
        cfg.seed = 5;
        run_case("3x3 rank 3, entropy, m=9", rho, entropy_monotone(), cfg, threads);
    }
    {
        const DensityMatrix sigma = theorem4_state(Theorem4Params::from_c1_squared(0.3, 0.75));
        const auto t0 = std::chrono::steady_clock::now();
        const double serial = brute_force_ef(sigma, entropy_monotone(), 200000, 6, 0, 1);
        const auto t1 = std::chrono::steady_clock::now();
        const double parallel = brute_force_ef(sigma, entropy_monotone(), 200000, 6, 0, threads);
        const auto t2 = std::chrono::steady_clock::now();
        const double st = std::chrono::duration<double>(t1 - t0).count();
        const double pt = std::chrono::duration<double>(t2 - t1).count();
        fmt::print("{:<32} serial {:8.3f}s   omp({} threads) {:8.3f}s   speedup {:5.2f}x   {}\n",
                   "sampling bound, 2e5 isometries", st, threads, pt, st / pt,
                   serial == parallel ? "values identical" : "VALUE MISMATCH");
    }
    return 0;
}
