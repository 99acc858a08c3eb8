#include "mimcool/propagator.hpp"

#include <cmath>

namespace mim {

Mat6 integrate_propagator(const SystemParams& p, double tau, double t,
                          double tol) {
    OdeOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol * 1e-2;
    opt.max_step = default_max_step(p);
    Mat6 phi0 = Mat6::Identity();
    if (t <= tau) return phi0;
    auto rhs = [&p](double s, const Mat6& y) -> Mat6 {
        return drift_matrix(p, s) * y;
    };
    return integrate_to(rhs, phi0, tau, t, opt);
}

MeanSeries integrate_means(const SystemParams& p, double t_max, double dt_out,
                           double tol) {
    OdeOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol * 1e-2;
    opt.max_step = default_max_step(p);

    MeanSeries out;
    auto grid = sample_grid(t_max, dt_out);
    out.t.reserve(grid.size());
    out.mu.reserve(grid.size());
    auto rhs = [&p](double s, const Vec6& y) -> Vec6 {
        return drift_matrix(p, s) * y + drive_vector(p, s);
    };
    Vec6 mu0 = Vec6::Zero();
    integrate_dopri5(rhs, mu0, 0.0, t_max, opt, grid,
                     [&](double s, const Vec6& y) {
                         out.t.push_back(s);
                         out.mu.push_back(y);
                     });
    return out;
}

QuadratureSeries quadratures(const MeanSeries& m, const SystemParams& p) {
    using namespace mode;
    QuadratureSeries q;
    q.t = m.t;
    const double r2 = std::sqrt(2.0);
    q.X_c1.reserve(m.t.size());
    q.X_c2.reserve(m.t.size());
    q.X_m.reserve(m.t.size());
    for (std::size_t k = 0; k < m.t.size(); ++k) {
        const double t = m.t[k];
        q.X_c1.push_back(r2 * std::real(m.mu[k](a1) + drive_envelope(p, 1, t)));
        q.X_c2.push_back(r2 * std::real(m.mu[k](a2) + drive_envelope(p, 2, t)));
        q.X_m.push_back(r2 * std::real(m.mu[k](b)));
    }
    return q;
}

}  // namespace mim
