#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "mimcool/adiabatic.hpp"
#include "mimcool/params.hpp"

namespace testsup {

// Red-detuned cooling setup in kappa1 units: Delta = omega_m, g_m = 1e-5,
// drive amplitudes chosen so (g_m/omega_m) E_j = J_Ej.
inline mim::SystemParams cooling_params(double omega_m, double J_E1,
                                        double J_E2, double kappa2,
                                        double J = 0.0, double n_th = 100.0,
                                        double gamma_m = 1e-3) {
    mim::SystemParams p;
    p.kappa1 = 1.0;
    p.kappa2 = kappa2;
    p.gm = 1e-5;
    p.omega_m = omega_m;
    p.gamma_m = gamma_m;
    p.delta1 = omega_m;
    p.delta2 = omega_m;
    p.E1 = J_E1 * omega_m / p.gm;
    p.E2 = J_E2 * omega_m / p.gm;
    p.J = J;
    p.n_th = n_th;
    return p;
}

// Two-cavity quadrature-comparison setup: kappa2 = 5, omega_m = 50,
// Delta1 = 45, Delta2 = 55, J = 1, J_E1 = 0.9, J_E2 = 1.1.
inline mim::SystemParams fig2_params() {
    mim::SystemParams p;
    p.kappa1 = 1.0;
    p.kappa2 = 5.0;
    p.gm = 1e-5;
    p.omega_m = 50.0;
    p.gamma_m = 1e-3;
    p.delta1 = 45.0;
    p.delta2 = 55.0;
    p.E1 = 4.5e6;
    p.E2 = 5.5e6;
    p.J = 1.0;
    p.n_th = 0.0;
    return p;
}

inline double golden_min(const std::function<double(double)>& f, double a,
                         double b, double rel) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    while ((b - a) > rel * std::max(1.0, std::abs(b))) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// Brute-force optimal kappa2 of the adiabatic steady state: 200-point log
// grid over [1, k2_hi], golden-section refinement to 1e-4 relative.
inline double argmin_kappa2(const mim::SystemParams& base, double k2_hi,
                            double* min_value = nullptr) {
    auto ratio = [&base](double k2) {
        mim::SystemParams p = base;
        p.kappa2 = k2;
        return mim::adiabatic_phonon(p) * p.kappa1 / (p.gamma_m * p.n_th);
    };
    const int n = 200;
    const double l0 = std::log(1.0), l1 = std::log(k2_hi);
    int best = 0;
    double best_val = ratio(1.0);
    for (int i = 1; i < n; ++i) {
        const double k2 = std::exp(l0 + (l1 - l0) * i / (n - 1));
        const double v = ratio(k2);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    const double lo =
        std::exp(l0 + (l1 - l0) * std::max(0, best - 1) / (n - 1));
    const double hi =
        std::exp(l0 + (l1 - l0) * std::min(n - 1, best + 1) / (n - 1));
    const double k2_min = golden_min(ratio, lo, hi, 1e-4);
    if (min_value) *min_value = ratio(k2_min);
    return k2_min;
}

}  // namespace testsup
