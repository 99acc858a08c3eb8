#pragma once

#include <vector>

#include "mimcool/model.hpp"
#include "mimcool/propagator.hpp"

namespace mim {

// Factorized nonlinear mean-field amplitudes in the same interaction frame
// as the linear solver: alpha_j(t) = <a_j>, beta(t) = <b>, all starting
// from zero.
struct MeanFieldSeries {
    std::vector<double> t;
    std::vector<Complex> alpha1;
    std::vector<Complex> beta;
    std::vector<Complex> alpha2;
};

// Integrates the noise-free factorized equations
//   d alpha1/dt = -kappa1 alpha1
//                 + i g_m (e^{-i w t} beta + e^{+i w t} conj(beta)) alpha1
//                 - i J e^{-i (d2-d1) t} alpha2 + E1 e^{i d1 t}
//   d beta/dt   = -gamma_m beta + i g_m e^{+i w t} (|alpha1|^2 - |alpha2|^2)
//   d alpha2/dt = -kappa2 alpha2
//                 - i g_m (e^{-i w t} beta + e^{+i w t} conj(beta)) alpha2
//                 - i J e^{+i (d2-d1) t} alpha1 + E2 e^{i d2 t}
MeanFieldSeries integrate_meanfield(const SystemParams& p, double t_max,
                                    double dt_out, double tol = 1e-8);

// X = sqrt(2) Re(amplitude) per mode; the cavity drive is already part of
// alpha_j here, so no envelope is added (unlike the linear solver's mu).
QuadratureSeries meanfield_quadratures(const MeanFieldSeries& s);

// RMS(test - ref) / RMS(ref); series must share a grid.
double relative_rms(const std::vector<double>& ref,
                    const std::vector<double>& test);

}  // namespace mim
