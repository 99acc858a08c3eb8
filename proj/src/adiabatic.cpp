#include "mimcool/adiabatic.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <cmath>
#include <limits>
#include <string>

#include "mimcool/errors.hpp"

namespace mim {

Mat6 adiabatic_matrix(const SystemParams& p) {
    validate(p);
    if (p.J != 0.0)
        throw TunnelingNotZero("adiabatic reduction requires J = 0, got J = " +
                               std::to_string(p.J));
    using namespace mode;
    const double G1 = p.gm * p.E1 / p.omega_m;
    const double G2 = p.gm * p.E2 / p.omega_m;
    Mat6 M = Mat6::Zero();
    M(a1, a1) = -p.kappa1;
    M(a1d, a1d) = -p.kappa1;
    M(b, b) = -p.gamma_m;
    M(bd, bd) = -p.gamma_m;
    M(a2, a2) = -p.kappa2;
    M(a2d, a2d) = -p.kappa2;
    M(a1, b) = G1;
    M(b, a1) = -G1;
    M(b, a2) = G2;
    M(a2, b) = -G2;
    M(a1d, bd) = G1;
    M(bd, a1d) = -G1;
    M(bd, a2d) = G2;
    M(a2d, bd) = -G2;
    return M;
}

double steady_state_phonon(const Mat6& M, const Mat6& D, double tol) {
    Eigen::ComplexEigenSolver<Mat6> es(M, false);
    if (es.info() != Eigen::Success)
        throw SingularLyapunov("eigenvalue computation failed");
    double max_re = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 6; ++i)
        max_re = std::max(max_re, es.eigenvalues()(i).real());
    if (max_re >= 0.0)
        throw SingularLyapunov("drift matrix is not stable, max Re(eig) = " +
                               std::to_string(max_re));

    // vec is column-major; M Sigma + Sigma M^T = -D becomes
    // (I (x) M + M (x) I) vec(Sigma) = -vec(D).
    Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(36, 36);
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i)
            for (int k = 0; k < 6; ++k) {
                K(j * 6 + i, j * 6 + k) += M(i, k);
                K(j * 6 + i, k * 6 + i) += M(j, k);
            }
    Eigen::VectorXcd d(36);
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i) d(j * 6 + i) = -D(i, j);
    Eigen::VectorXcd s = K.partialPivLu().solve(d);
    Mat6 Sigma;
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i) Sigma(i, j) = s(j * 6 + i);

    const double resid = (M * Sigma + Sigma * M.transpose() + D).norm();
    if (resid > tol * std::max(D.norm(), 1e-300))
        throw SingularLyapunov("Lyapunov residual " + std::to_string(resid) +
                               " exceeds tolerance");
    return std::real(Sigma(mode::bd, mode::b));
}

double adiabatic_phonon(const SystemParams& p, double tol) {
    return steady_state_phonon(adiabatic_matrix(p), diffusion_matrix(p), tol);
}

double cooling_ratio_caseA(double Gamma_m, double J_E1, double J_E2) {
    const double I = J_E1 * J_E1 + J_E2 * J_E2;
    return (1.0 + Gamma_m + I) / ((1.0 + Gamma_m) * (Gamma_m + I));
}

double optimal_kappa2_caseB(double Gamma_m, double J_E) {
    const double r = 24.0 * J_E * J_E - 3.0 + 2.0 * Gamma_m - Gamma_m * Gamma_m;
    if (r < 0.0)
        throw DomainError("negative radicand " + std::to_string(r) +
                          " in optimal kappa2 (case B)");
    return (1.0 + Gamma_m + std::sqrt(r)) / 2.0;
}

double limit_caseB(double J_E) { return 4.0 * std::sqrt(6.0) / (3.0 * J_E); }

double optimal_kappa2_caseC(double Gamma_m, double J_E1, double J_E2) {
    const double r = 12.0 * (J_E1 * J_E1 + J_E2 * J_E2) - 3.0 +
                     2.0 * Gamma_m - Gamma_m * Gamma_m;
    if (r < 0.0)
        throw DomainError("negative radicand " + std::to_string(r) +
                          " in optimal kappa2 (case C)");
    return (1.0 + Gamma_m + std::sqrt(r)) / 2.0;
}

double limit_caseC(double J_E1, double J_E2) {
    if (J_E2 == 0.0)
        throw DegenerateDrive("cooling limit (case C) requires J_E2 > 0");
    return 4.0 * std::sqrt(3.0) * std::hypot(J_E1, J_E2) /
           (3.0 * J_E2 * J_E2);
}

CoolingLimitReport cooling_limit_report(const SystemParams& p,
                                        char case_label) {
    const DerivedQuantities q = validate(p);
    if (p.n_th <= 0.0)
        throw ConfigError("cooling ratio needs n_th > 0");

    CoolingLimitReport r;
    r.case_label = case_label;
    r.Gamma_m = q.Gamma_m;
    r.J_E1 = q.J_E1;
    r.J_E2 = q.J_E2;
    r.kappa2_over_kappa1 = p.kappa2 / p.kappa1;

    switch (case_label) {
        case 'A':
            r.ratio_closed_form = cooling_ratio_caseA(q.Gamma_m, q.J_E1, q.J_E2);
            break;
        case 'B':
            r.ratio_closed_form = limit_caseB(q.J_E1);
            break;
        case 'C':
            r.ratio_closed_form = limit_caseC(q.J_E1, q.J_E2);
            break;
        default:
            throw ConfigError(std::string("unknown case label '") +
                              case_label + "'");
    }

    const double n_mf = adiabatic_phonon(p);
    r.ratio_lyapunov = n_mf * p.kappa1 / (p.gamma_m * p.n_th);
    r.rel_gap = std::abs(r.ratio_lyapunov - r.ratio_closed_form) /
                std::max(std::abs(r.ratio_closed_form), 1e-300);
    return r;
}

}  // namespace mim
