#pragma once

#include <Eigen/Core>
#include <cmath>
#include <limits>
#include <vector>

#include "mimcool/errors.hpp"

namespace mim {

struct OdeOptions {
    double rel_tol = 1e-8;
    double abs_tol = 1e-10;
    // Hard cap on the step size; callers set this to (2*pi/omega_max)/20 so
    // oscillatory coefficients are always resolved.
    double max_step = std::numeric_limits<double>::infinity();
};

// Adaptive embedded Dormand-Prince 5(4) with FSAL. State is any Eigen-like
// vector/matrix of std::complex<double> (fixed or dynamic size). The
// integrator steps from t0 to t1 and invokes obs(t, y) exactly at the times
// listed in `samples` (ascending, inside [t0, t1]); steps are clamped so
// sample times are hit exactly. Throws StepSizeUnderflow when the error
// control cannot advance.
template <class State, class Rhs, class Obs>
void integrate_dopri5(Rhs&& f, State y, double t0, double t1,
                      const OdeOptions& opt, const std::vector<double>& samples,
                      Obs&& obs) {
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113,
                            b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                            b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                            e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;

    double t = t0;
    std::size_t si = 0;
    auto flush_samples = [&](double tcur) {
        const double eps = 1e-12 * std::max(1.0, std::abs(tcur));
        while (si < samples.size() && samples[si] <= tcur + eps) {
            obs(samples[si], y);
            ++si;
        }
    };
    flush_samples(t);
    if (t1 <= t0) return;

    State k1 = f(t, y);
    State k2 = k1, k3 = k1, k4 = k1, k5 = k1, k6 = k1, k7 = k1;
    State ytmp = y, ynew = y, yerr = y;

    double h = std::min(opt.max_step, t1 - t0);
    bool rejected = false;
    while (t < t1 - 1e-12 * std::max(1.0, std::abs(t1))) {
        // Distance to the next mandatory landing point (sample or t1).
        double hland = t1 - t;
        if (si < samples.size()) hland = std::min(hland, samples[si] - t);
        if (hland <= 0) hland = t1 - t;

        const double hnat = std::min(h, opt.max_step);
        const double hs = std::min(hnat, hland);
        if (hs < 16.0 * std::numeric_limits<double>::epsilon() *
                     std::max(1.0, std::abs(t)))
            throw StepSizeUnderflow("step size underflow at t=" +
                                    std::to_string(t));

        ytmp = y + hs * (a21 * k1);
        k2 = f(t + hs / 5, ytmp);
        ytmp = y + hs * (a31 * k1 + a32 * k2);
        k3 = f(t + 3 * hs / 10, ytmp);
        ytmp = y + hs * (a41 * k1 + a42 * k2 + a43 * k3);
        k4 = f(t + 4 * hs / 5, ytmp);
        ytmp = y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        k5 = f(t + 8 * hs / 9, ytmp);
        ytmp = y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        k6 = f(t + hs, ytmp);
        ynew = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        k7 = f(t + hs, ynew);
        yerr =
            hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        // Hairer-style scaled RMS error norm.
        double err2 = 0.0;
        const auto n = y.size();
        for (Eigen::Index i = 0; i < n; ++i) {
            const double sc =
                opt.abs_tol + opt.rel_tol * std::max(std::abs(y(i)),
                                                     std::abs(ynew(i)));
            const double q = std::abs(yerr(i)) / sc;
            err2 += q * q;
        }
        const double err = std::sqrt(err2 / static_cast<double>(n));

        if (err <= 1.0) {
            t += hs;
            // Land exactly on a requested sample if this step reached it.
            if (si < samples.size() &&
                std::abs(samples[si] - t) <=
                    1e-12 * std::max(1.0, std::abs(t)))
                t = samples[si];
            y.swap(ynew);
            k1.swap(k7);  // FSAL
            flush_samples(t);
            double fac = err == 0.0 ? 5.0 : 0.9 * std::pow(err, -0.2);
            fac = std::min(rejected ? 1.0 : 5.0, std::max(0.2, fac));
            h = hs * fac;
            // A step truncated to land on a sample must not shrink the
            // controller's natural proposal.
            if (hs < hnat) h = std::max(h, hnat);
            rejected = false;
        } else {
            h = hs * std::max(0.2, 0.9 * std::pow(err, -0.2));
            rejected = true;
        }
    }
    flush_samples(t1);
}

// Convenience wrapper: integrate without intermediate samples, return y(t1).
template <class State, class Rhs>
State integrate_to(Rhs&& f, State y0, double t0, double t1,
                   const OdeOptions& opt) {
    State out = y0;
    bool have = false;
    integrate_dopri5(std::forward<Rhs>(f), std::move(y0), t0, t1, opt,
                     {t1}, [&](double, const State& y) {
                         out = y;
                         have = true;
                     });
    if (!have) throw NumericalError("integration produced no endpoint sample");
    return out;
}

}  // namespace mim
