#pragma once

#include "mimcool/model.hpp"

namespace mim {

// Constant drift matrix of the omega_m -> infinity reduction at J = 0: only
// the beam-splitter couplings G_j = g_m E_j / omega_m survive, squeezing
// entries vanish. Throws TunnelingNotZero when J != 0.
Mat6 adiabatic_matrix(const SystemParams& p);

// Solves M Sigma + Sigma M^T + D = 0 exactly via the 36-dimensional
// vectorized system and returns the steady-state phonon number
// Re Sigma(b^dag, b). Throws SingularLyapunov when M has a non-negative
// eigenvalue or the residual check fails.
double steady_state_phonon(const Mat6& M, const Mat6& D, double tol = 1e-10);

// steady_state_phonon for the adiabatic reduction of p.
double adiabatic_phonon(const SystemParams& p, double tol = 1e-10);

// Closed-form cooling ratio n_mf / (Gamma_m n_th) at kappa2 = kappa1.
double cooling_ratio_caseA(double Gamma_m, double J_E1, double J_E2);

// Optimal kappa2/kappa1 for equal drive intensities (case B) and the
// corresponding asymptotic cooling limit. Throws DomainError when the
// radicand 24 J_E^2 - 3 + 2 Gamma_m - Gamma_m^2 is negative.
double optimal_kappa2_caseB(double Gamma_m, double J_E);
double limit_caseB(double J_E);

// Unequal-intensity generalization (case C). optimal_kappa2_caseC throws
// DomainError on a negative radicand; limit_caseC throws DegenerateDrive
// when J_E2 = 0.
double optimal_kappa2_caseC(double Gamma_m, double J_E1, double J_E2);
double limit_caseC(double J_E1, double J_E2);

// Closed-form vs Lyapunov-solver comparison for one parameter point. The
// Lyapunov ratio is evaluated at the params' own kappa2; for cases B and C
// the closed form is the asymptotic limit, reached only near the optimal
// kappa2.
struct CoolingLimitReport {
    char case_label = 'A';
    double Gamma_m = 0.0;
    double J_E1 = 0.0;
    double J_E2 = 0.0;
    double kappa2_over_kappa1 = 1.0;
    double ratio_closed_form = 0.0;
    double ratio_lyapunov = 0.0;
    double rel_gap = 0.0;
};

CoolingLimitReport cooling_limit_report(const SystemParams& p,
                                        char case_label);

}  // namespace mim
