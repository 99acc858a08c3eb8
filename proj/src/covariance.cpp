#include "mimcool/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "mimcool/ode.hpp"

namespace mim {

namespace {

void check_commutators(const Mat6& s, double limit, double t) {
    using namespace mode;
    const double c1 = std::abs(s(a1, a1d) - s(a1d, a1) - 1.0);
    const double c2 = std::abs(s(b, bd) - s(bd, b) - 1.0);
    const double c3 = std::abs(s(a2, a2d) - s(a2d, a2) - 1.0);
    if (c1 > limit || c2 > limit || c3 > limit)
        throw CommutatorDrift("commutator invariant drift " +
                              std::to_string(std::max({c1, c2, c3})) +
                              " at t=" + std::to_string(t));
}

// Four-term noise correlator combination entering the tau integral, using
// psi = Phi(t, tau).
Complex noise_integrand(const Mat6& psi, const SystemParams& p) {
    using namespace mode;
    return 2.0 * p.kappa1 * psi(b, a1d) * psi(bd, a1) +
           2.0 * p.gamma_m * p.n_th * psi(b, b) * psi(bd, bd) +
           2.0 * p.gamma_m * (p.n_th + 1.0) * psi(b, bd) * psi(bd, b) +
           2.0 * p.kappa2 * psi(b, a2d) * psi(bd, a2);
}

// Initial-state contribution from Phi(t, 0).
Complex initial_part(const Mat6& phi, const SystemParams& p) {
    using namespace mode;
    return phi(b, a1d) * phi(bd, a1) + p.n_th * phi(b, b) * phi(bd, bd) +
           (p.n_th + 1.0) * phi(b, bd) * phi(bd, b) +
           phi(b, a2d) * phi(bd, a2);
}

// Backward sweep in tau done as a forward integration in s = t - tau:
// psi~(s) = Phi(t, t - s) solves d psi~/ds = psi~ M(t - s), psi~(0) = I.
// Fills values[j] = noise_integrand(Phi(t, tau_j)) for every tau_j = j*htau
// with j in [jlo, jhi], and returns psi~ at s = t - jlo*htau.
Mat6 backward_sweep(const SystemParams& p, double t, double htau, long jlo,
                    long jhi, const Mat6& psi_start, double s_start,
                    const OdeOptions& opt, std::vector<Complex>& values) {
    auto rhs = [&p, t](double s, const Mat6& y) -> Mat6 {
        return y * drift_matrix(p, t - s);
    };
    std::vector<double> samples;
    samples.reserve(jhi - jlo + 2);
    for (long j = jhi; j >= jlo; --j) samples.push_back(t - j * htau);
    const double s_end = t - jlo * htau;
    if (samples.empty() || samples.back() < s_end) samples.push_back(s_end);

    Mat6 last = psi_start;
    integrate_dopri5(rhs, psi_start, s_start, s_end, opt, samples,
                     [&](double s, const Mat6& y) {
                         const double tau = t - s;
                         const long j = std::lround(tau / htau);
                         if (j >= jlo && j <= jhi)
                             values[static_cast<std::size_t>(j)] =
                                 noise_integrand(y, p);
                         last = y;
                     });
    return last;
}

double simpson_total(const std::vector<Complex>& f, double h,
                     const Mat6& phi_t0, const SystemParams& p) {
    // composite Simpson, fixed summation order
    Complex acc = f.front() + f.back();
    for (std::size_t j = 1; j + 1 < f.size(); ++j)
        acc += (j % 2 == 1 ? 4.0 : 2.0) * f[j];
    const Complex noise = acc * (h / 3.0);
    return std::real(initial_part(phi_t0, p) + noise);
}

long even_interval_count(const SystemParams& p, double t) {
    const double h_target = M_PI / (16.0 * omega_max(p));
    long n = std::lround(std::ceil(t / h_target));
    if (n < 8) n = 8;
    if (n % 2) ++n;
    return n;
}

OdeOptions oracle_ode_options(const SystemParams& p, double tol) {
    OdeOptions opt;
    opt.rel_tol = std::max(1e-12, tol * 1e-4);
    opt.abs_tol = opt.rel_tol * 1e-2;
    opt.max_step = default_max_step(p);
    return opt;
}

double oracle_once_serial(const SystemParams& p, double t, long n,
                          const OdeOptions& opt) {
    const double h = t / static_cast<double>(n);
    std::vector<Complex> f(n + 1);
    Mat6 start = Mat6::Identity();
    const Mat6 phi_t0 = backward_sweep(p, t, h, 0, n, start, 0.0, opt, f);
    return simpson_total(f, h, phi_t0, p);
}

}  // namespace

namespace {

// Shared driver for the second-moment ODE; obs(t, Sigma) runs per sample
// after the commutator check.
template <class Obs>
void propagate_covariance(const SystemParams& p, double t_max, double dt_out,
                          double tol, Obs&& obs) {
    OdeOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol * 1e-2;
    opt.max_step = default_max_step(p);

    const Mat6 D = diffusion_matrix(p);
    auto rhs = [&p, &D](double s, const Mat6& y) -> Mat6 {
        const Mat6 M = drift_matrix(p, s);
        return M * y + y * M.transpose() + D;
    };

    const double drift_limit = 1e3 * tol;
    integrate_dopri5(rhs, initial_moments(p), 0.0, t_max, opt,
                     sample_grid(t_max, dt_out), [&](double s, const Mat6& y) {
                         check_commutators(y, drift_limit, s);
                         obs(s, y);
                     });
}

}  // namespace

CovarianceSeries integrate_covariance(const SystemParams& p, double t_max,
                                      double dt_out, double tol) {
    CovarianceSeries out;
    propagate_covariance(p, t_max, dt_out, tol, [&](double s, const Mat6& y) {
        out.t.push_back(s);
        out.sigma.push_back(y);
    });
    return out;
}

double thermal_phonon_number(const Mat6& sigma, double tol) {
    using namespace mode;
    const Complex v = sigma(bd, b);
    const double re = std::real(v);
    if (re < -tol)
        throw NegativePhonon("n_m = " + std::to_string(re) + " below -tol");
    return re < 0.0 ? 0.0 : re;
}

double phonon_oracle(const SystemParams& p, double t, double tol) {
    if (t <= 0.0) return p.n_th;
    const OdeOptions opt = oracle_ode_options(p, tol);
    const long n = even_interval_count(p, t);
    const double coarse = oracle_once_serial(p, t, n, opt);
    const double fine = oracle_once_serial(p, t, 2 * n, opt);
    if (std::abs(fine - coarse) > tol * std::max(1.0, std::abs(fine)))
        throw QuadratureNotConverged(
            "quadrature gap " + std::to_string(std::abs(fine - coarse)) +
            " exceeds tol at t=" + std::to_string(t));
    return fine;
}

namespace {

double oracle_chunked(const SystemParams& p, double t, long n,
                      const OdeOptions& opt, int chunks) {
    const double h = t / static_cast<double>(n);
    if (chunks < 1) chunks = 1;
    if (chunks > n / 2) chunks = static_cast<int>(n / 2);
    std::vector<long> cut(chunks + 1);
    for (int c = 0; c <= chunks; ++c) cut[c] = n - (n * c) / chunks;

    // Per chunk: matrices Theta(s) with Theta(s_start)=I at every grid point
    // inside the chunk, plus the end-of-chunk transfer matrix.
    std::vector<std::vector<Mat6>> thetas(chunks);
    std::vector<Mat6> transfer(chunks);
    std::exception_ptr worker_error;

    #pragma omp parallel for schedule(static)
    for (int c = 0; c < chunks; ++c) {
        try {
            const long jhi = cut[c];
            const long jlo = cut[c + 1];
            auto rhs = [&p, t](double s, const Mat6& y) -> Mat6 {
                return y * drift_matrix(p, t - s);
            };
            std::vector<double> samples;
            samples.reserve(jhi - jlo + 1);
            for (long j = jhi - 1; j >= jlo; --j) samples.push_back(t - j * h);
            const double s_start = t - jhi * h;
            const double s_end = t - jlo * h;
            std::vector<Mat6> vals;
            vals.reserve(jhi - jlo);
            Mat6 ident = Mat6::Identity();
            integrate_dopri5(rhs, ident, s_start, s_end, opt, samples,
                             [&](double, const Mat6& y) { vals.push_back(y); });
            transfer[c] = vals.empty() ? Mat6::Identity() : vals.back();
            thetas[c] = std::move(vals);
        } catch (...) {
            #pragma omp critical
            if (!worker_error) worker_error = std::current_exception();
        }
    }
    if (worker_error) std::rethrow_exception(worker_error);

    // Serial, fixed-order prefix products and integrand evaluation.
    std::vector<Complex> f(n + 1);
    f[static_cast<std::size_t>(n)] =
        noise_integrand(Mat6::Identity(), p);  // tau = t
    Mat6 prefix = Mat6::Identity();
    Mat6 phi_t0 = Mat6::Identity();
    for (int c = 0; c < chunks; ++c) {
        const long jhi = cut[c];
        const long jlo = cut[c + 1];
        const auto& vals = thetas[c];
        long idx = 0;
        for (long j = jhi - 1; j >= jlo; --j, ++idx) {
            const Mat6 psi = prefix * vals[static_cast<std::size_t>(idx)];
            f[static_cast<std::size_t>(j)] = noise_integrand(psi, p);
            if (j == 0) phi_t0 = psi;
        }
        prefix = prefix * transfer[c];
    }
    return simpson_total(f, h, phi_t0, p);
}

}  // namespace

double phonon_oracle_parallel(const SystemParams& p, double t, double tol,
                              int chunks) {
    if (t <= 0.0) return p.n_th;
    const OdeOptions opt = oracle_ode_options(p, tol);
    const long n = even_interval_count(p, t);
    const double coarse = oracle_chunked(p, t, n, opt, chunks);
    const double fine = oracle_chunked(p, t, 2 * n, opt, chunks);
    if (std::abs(fine - coarse) > tol * std::max(1.0, std::abs(fine)))
        throw QuadratureNotConverged(
            "quadrature gap " + std::to_string(std::abs(fine - coarse)) +
            " exceeds tol at t=" + std::to_string(t));
    return fine;
}

CoolingResult cooling_dynamics(const SystemParams& p, double t_max,
                               double dt_out, double tol) {
    CoolingResult r;
    const double clamp_tol = std::max(1e-8, 1e-10 * std::max(1.0, p.n_th));
    propagate_covariance(p, t_max, dt_out, tol, [&](double s, const Mat6& y) {
        r.t.push_back(s);
        r.n_m.push_back(thermal_phonon_number(y, clamp_tol));
    });
    auto [nf, conv] = extract_final(r.t, r.n_m, p.omega_m);
    r.n_m_final = nf;
    r.converged = conv;
    r.cooling_ratio = p.n_th > 0.0
                          ? nf * p.kappa1 / (p.gamma_m * p.n_th)
                          : std::numeric_limits<double>::quiet_NaN();
    return r;
}

std::pair<double, bool> extract_final(const std::vector<double>& t,
                                      const std::vector<double>& n_m,
                                      double omega_m, double window_frac,
                                      double rel_tol) {
    if (t.empty() || t.size() != n_m.size())
        throw NumericalError("extract_final: empty or mismatched series");
    const double t_end = t.back();
    const double period = 2.0 * M_PI / omega_m;
    const double window = window_frac * t_end;
    const long periods = static_cast<long>(std::floor(window / period));

    auto window_mean = [&](double lo, double hi) -> std::pair<double, long> {
        double acc = 0.0;
        long cnt = 0;
        const double eps = 1e-12 * std::max(1.0, t_end);
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (t[k] > lo + eps && t[k] <= hi + eps) {
                acc += n_m[k];
                ++cnt;
            }
        }
        return {cnt ? acc / static_cast<double>(cnt) : 0.0, cnt};
    };

    if (periods < 1) {
        auto [m, c] = window_mean(t_end - window, t_end);
        return {c ? m : n_m.back(), false};
    }
    const double L = static_cast<double>(periods) * period;
    auto [m1, c1] = window_mean(t_end - L, t_end);
    auto [m0, c0] = window_mean(t_end - 2.0 * L, t_end - L);
    if (!c1) return {n_m.back(), false};
    if (!c0) return {m1, false};
    const bool conv =
        std::abs(m1 - m0) <= rel_tol * std::max(std::abs(m1), 1e-300);
    return {m1, conv};
}

}  // namespace mim
