#pragma once

#include <utility>
#include <vector>

#include "mimcool/model.hpp"

namespace mim {

struct CovarianceSeries {
    std::vector<double> t;
    std::vector<Mat6> sigma;
};

// Propagates dSigma/dt = M(t) Sigma + Sigma M(t)^T + D (plain transpose; the
// operator vector already interleaves daggered entries) from the vacuum/
// thermal initial state, sampling every dt_out. Verifies the canonical
// commutators at every sample and throws CommutatorDrift when they deviate
// by more than 1e3 * tol.
CovarianceSeries integrate_covariance(const SystemParams& p, double t_max,
                                      double dt_out, double tol = 1e-8);

// n_m = Re Sigma[b^dag, b]. Throws NegativePhonon below -tol.
double thermal_phonon_number(const Mat6& sigma, double tol = 1e-8);

// Independent evaluation of n_m(t) by the propagator double integral: the
// initial-state part uses Phi(t,0); the noise part integrates the four-term
// correlator combination over tau on a Simpson grid, with Phi(t,tau) obtained
// by one backward sweep in tau. `tol` controls the grid-refinement
// convergence check (QuadratureNotConverged on failure).
double phonon_oracle(const SystemParams& p, double t, double tol = 1e-6);

// Same quantity, tau-axis split into a fixed number of chunks processed in
// parallel with OpenMP. The chunk count is independent of the thread count,
// so results do not depend on scheduling.
double phonon_oracle_parallel(const SystemParams& p, double t,
                              double tol = 1e-6, int chunks = 16);

// Trailing-window estimate of the settled phonon number: mean over an
// integer number of mechanical periods inside the trailing window_frac of
// the series; converged when two adjacent windows agree to rel_tol.
std::pair<double, bool> extract_final(const std::vector<double>& t,
                                      const std::vector<double>& n_m,
                                      double omega_m, double window_frac = 0.1,
                                      double rel_tol = 1e-3);

// One cooling run: n_m(t) series plus the extracted settled value and the
// cooling ratio n_m_final / (Gamma_m n_th) with Gamma_m = gamma_m / kappa1
// (NaN when n_th = 0).
struct CoolingResult {
    std::vector<double> t;
    std::vector<double> n_m;
    double n_m_final = 0.0;
    double cooling_ratio = 0.0;
    bool converged = false;
};

// Same ODE as integrate_covariance but streaming: only n_m is kept per
// sample, so long horizons stay cheap in memory.
CoolingResult cooling_dynamics(const SystemParams& p, double t_max,
                               double dt_out, double tol = 1e-8);

}  // namespace mim
