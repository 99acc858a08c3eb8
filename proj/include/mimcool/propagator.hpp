#pragma once

#include <vector>

#include "mimcool/model.hpp"
#include "mimcool/ode.hpp"

namespace mim {

// Fundamental matrix Phi(t, tau) of d c / dt = M(t) c, i.e. the time-ordered
// exponential of M over [tau, t].
Mat6 integrate_propagator(const SystemParams& p, double tau, double t,
                          double tol = 1e-8);

struct MeanSeries {
    std::vector<double> t;
    std::vector<Vec6> mu;
};

// Means of the fluctuation vector: d mu/dt = M(t) mu + lambda(t), mu(0) = 0,
// sampled every dt_out.
MeanSeries integrate_means(const SystemParams& p, double t_max, double dt_out,
                           double tol = 1e-8);

struct QuadratureSeries {
    std::vector<double> t;
    std::vector<double> X_c1, X_c2, X_m;
};

// Interaction-frame quadratures with the cavity frame displacement E_j(t)
// restored: X_c1 = sqrt(2) Re[mu_a1 + E_1(t)], X_c2 likewise with E_2,
// X_m = sqrt(2) Re[mu_b].
QuadratureSeries quadratures(const MeanSeries& m, const SystemParams& p);

}  // namespace mim
