#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>

#include "mimcool/covariance.hpp"
#include "mimcool/harness.hpp"

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
}

mim::SystemParams bench_params() {
    mim::SystemParams p;
    p.kappa1 = 1.0;
    p.kappa2 = 1.5;
    p.gm = 1e-5;
    p.omega_m = 100.0;
    p.gamma_m = 1e-3;
    p.delta1 = 100.0;
    p.delta2 = 100.0;
    p.E1 = 1e7;  // J_E1 = 1
    p.E2 = 1e7;
    p.J = 0.0;
    p.n_th = 100.0;
    return p;
}

}  // namespace

int main() {
    const mim::SystemParams p = bench_params();
    const int threads = omp_get_max_threads();
    std::printf("%s benchmark, %d threads available\n", mim::kVersion,
                threads);

    // Double-integral phonon oracle: one backward sweep vs chunked sweeps.
    {
        const double t = 20.0, tol = 1e-6;
        auto t0 = std::chrono::steady_clock::now();
        const double serial = mim::phonon_oracle(p, t, tol);
        const double ts = seconds(t0);
        t0 = std::chrono::steady_clock::now();
        const double parallel = mim::phonon_oracle_parallel(p, t, tol);
        const double tp = seconds(t0);
        std::printf("phonon_oracle          t=%.1f  serial %.3fs  value %.10g\n",
                    t, ts, serial);
        std::printf("phonon_oracle_parallel t=%.1f  chunked %.3fs  value %.10g\n",
                    t, tp, parallel);
        std::printf("  speedup %.2fx  |diff| %.3g\n", ts / tp,
                    std::fabs(serial - parallel));
    }

    // Dynamic sweep: same rows expected bit for bit at any thread count.
    {
        mim::SweepSpec spec;
        spec.base = p;
        spec.axes.push_back({"kappa2", 1.0, 10.0, 16, false});
        spec.mode = mim::SweepMode::dynamic;
        spec.settings.t_max = 20.0;
        spec.settings.dt_out = 0.01;

        spec.settings.threads = 1;
        auto t0 = std::chrono::steady_clock::now();
        const auto rows1 = mim::run_sweep(spec);
        const double t1 = seconds(t0);

        spec.settings.threads = threads;
        t0 = std::chrono::steady_clock::now();
        const auto rowsN = mim::run_sweep(spec);
        const double tN = seconds(t0);

        bool identical = rows1.size() == rowsN.size();
        for (std::size_t i = 0; identical && i < rows1.size(); ++i)
            identical = rows1[i].cooling_ratio == rowsN[i].cooling_ratio &&
                        rows1[i].n_m_final == rowsN[i].n_m_final;
        std::printf("dynamic sweep 16 pts   1 thread %.3fs  %d threads %.3fs\n",
                    t1, threads, tN);
        std::printf("  speedup %.2fx  rows identical: %s\n", t1 / tN,
                    identical ? "yes" : "NO");
        if (!identical) return 1;
    }
    return 0;
}
