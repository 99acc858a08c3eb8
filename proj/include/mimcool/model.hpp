#pragma once

#include <vector>

#include "mimcool/params.hpp"
#include "mimcool/types.hpp"

namespace mim {

// Interaction-frame drive envelope E_j(t) = (i E_j / Delta_j)(1 - e^{i Delta_j t}).
Complex drive_envelope(const SystemParams& p, int j, double t);

// Time-dependent drift matrix M(t) of the linearized fluctuation dynamics
// d c / dt = M(t) c + lambda(t) + noise, in the fixed mode ordering
// (a1, a1^dag, b, b^dag, a2, a2^dag). Entries are built from
// P_j(t) = i g_m E_j(t), the tunneling phase -i J e^{-i (delta2-delta1) t},
// and the mechanical phases e^{+-i omega_m t}.
Mat6 drift_matrix(const SystemParams& p, double t);

// Coherent drive vector lambda(t) acting on the fluctuation means.
Vec6 drive_vector(const SystemParams& p, double t);

// Constant diffusion matrix D of the second-moment equation
// dSigma/dt = M Sigma + Sigma M^T + D.
Mat6 diffusion_matrix(const SystemParams& p);

// Sigma(0) for vacuum cavities and a thermal mechanical state.
Mat6 initial_moments(const SystemParams& p);

// Fastest coefficient frequency; integrator steps are capped at
// (2*pi/omega_max)/20.
double omega_max(const SystemParams& p);
double default_max_step(const SystemParams& p);

// Output grid {0, dt_out, 2 dt_out, ..., t_max}; t_max is always the last
// point even when it is not a multiple of dt_out.
std::vector<double> sample_grid(double t_max, double dt_out);

}  // namespace mim
