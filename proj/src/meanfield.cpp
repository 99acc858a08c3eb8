#include "mimcool/meanfield.hpp"

#include <cmath>
#include <limits>

#include "mimcool/errors.hpp"
#include "mimcool/ode.hpp"

namespace mim {

using Vec3c = Eigen::Matrix<Complex, 3, 1>;

MeanFieldSeries integrate_meanfield(const SystemParams& p, double t_max,
                                    double dt_out, double tol) {
    OdeOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol * 1e-2;
    opt.max_step = default_max_step(p);

    auto rhs = [&p](double t, const Vec3c& y) -> Vec3c {
        const Complex a1 = y(0), be = y(1), a2 = y(2);
        const Complex phm = std::exp(Complex(0.0, p.omega_m * t));
        const Complex disp = kI * p.gm * (std::conj(phm) * be + phm * std::conj(be));
        const double dgap = p.delta2 - p.delta1;
        const Complex hop = kI * p.J;
        Vec3c dy;
        dy(0) = -p.kappa1 * a1 + disp * a1 -
                hop * std::exp(Complex(0.0, -dgap * t)) * a2 +
                p.E1 * std::exp(Complex(0.0, p.delta1 * t));
        dy(1) = -p.gamma_m * be +
                kI * p.gm * phm * (std::norm(a1) - std::norm(a2));
        dy(2) = -p.kappa2 * a2 - disp * a2 -
                hop * std::exp(Complex(0.0, dgap * t)) * a1 +
                p.E2 * std::exp(Complex(0.0, p.delta2 * t));
        return dy;
    };

    MeanFieldSeries out;
    auto grid = sample_grid(t_max, dt_out);
    out.t.reserve(grid.size());
    out.alpha1.reserve(grid.size());
    out.beta.reserve(grid.size());
    out.alpha2.reserve(grid.size());
    Vec3c y0 = Vec3c::Zero();
    integrate_dopri5(rhs, y0, 0.0, t_max, opt, grid,
                     [&](double s, const Vec3c& y) {
                         out.t.push_back(s);
                         out.alpha1.push_back(y(0));
                         out.beta.push_back(y(1));
                         out.alpha2.push_back(y(2));
                     });
    return out;
}

QuadratureSeries meanfield_quadratures(const MeanFieldSeries& s) {
    const double r2 = std::sqrt(2.0);
    QuadratureSeries q;
    q.t = s.t;
    q.X_c1.reserve(s.t.size());
    q.X_c2.reserve(s.t.size());
    q.X_m.reserve(s.t.size());
    for (std::size_t k = 0; k < s.t.size(); ++k) {
        q.X_c1.push_back(r2 * std::real(s.alpha1[k]));
        q.X_c2.push_back(r2 * std::real(s.alpha2[k]));
        q.X_m.push_back(r2 * std::real(s.beta[k]));
    }
    return q;
}

double relative_rms(const std::vector<double>& ref,
                    const std::vector<double>& test) {
    if (ref.size() != test.size() || ref.empty())
        throw NumericalError("relative_rms: mismatched or empty series");
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < ref.size(); ++k) {
        const double d = test[k] - ref[k];
        num += d * d;
        den += ref[k] * ref[k];
    }
    if (den == 0.0)
        return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::sqrt(num / den);
}

}  // namespace mim
