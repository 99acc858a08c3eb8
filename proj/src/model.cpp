#include "mimcool/model.hpp"

#include <cmath>

namespace mim {

Complex drive_envelope(const SystemParams& p, int j, double t) {
    const double E = j == 1 ? p.E1 : p.E2;
    const double d = j == 1 ? p.delta1 : p.delta2;
    return (kI * E / d) * (1.0 - std::exp(kI * d * t));
}

Mat6 drift_matrix(const SystemParams& p, double t) {
    using namespace mode;
    const Complex ph = std::exp(kI * p.omega_m * t);   // e^{+i omega_m t}
    const Complex phc = std::conj(ph);
    const Complex P1 = kI * p.gm * drive_envelope(p, 1, t);
    const Complex P2 = kI * p.gm * drive_envelope(p, 2, t);
    const Complex Jf = -kI * p.J * std::exp(-kI * (p.delta2 - p.delta1) * t);

    Mat6 M = Mat6::Zero();
    M(a1, a1) = -p.kappa1;
    M(a1, b) = P1 * phc;
    M(a1, bd) = P1 * ph;
    M(a1, a2) = Jf;

    M(a1d, a1d) = -p.kappa1;
    M(a1d, b) = std::conj(P1) * phc;
    M(a1d, bd) = std::conj(P1) * ph;
    M(a1d, a2d) = std::conj(Jf);

    M(b, a1) = -std::conj(P1) * ph;
    M(b, a1d) = P1 * ph;
    M(b, b) = -p.gamma_m;
    M(b, a2) = std::conj(P2) * ph;
    M(b, a2d) = -P2 * ph;

    M(bd, a1) = std::conj(P1) * phc;
    M(bd, a1d) = -P1 * phc;
    M(bd, bd) = -p.gamma_m;
    M(bd, a2) = -std::conj(P2) * phc;
    M(bd, a2d) = P2 * phc;

    M(a2, a1) = -std::conj(Jf);
    M(a2, b) = -P2 * phc;
    M(a2, bd) = -P2 * ph;
    M(a2, a2) = -p.kappa2;

    M(a2d, a1d) = -Jf;
    M(a2d, b) = -std::conj(P2) * phc;
    M(a2d, bd) = -std::conj(P2) * ph;
    M(a2d, a2d) = -p.kappa2;
    return M;
}

Vec6 drive_vector(const SystemParams& p, double t) {
    using namespace mode;
    const Complex e1 = drive_envelope(p, 1, t);
    const Complex e2 = drive_envelope(p, 2, t);
    const Complex Jf = -kI * p.J * std::exp(-kI * (p.delta2 - p.delta1) * t);
    const Complex ph = std::exp(kI * p.omega_m * t);

    const Complex l1 = Jf * e2 - p.kappa1 * e1;
    const Complex lm = kI * p.gm * ph * (std::norm(e1) - std::norm(e2));
    const Complex l3 = -std::conj(Jf) * e1 - p.kappa2 * e2;

    Vec6 v;
    v(a1) = l1;
    v(a1d) = std::conj(l1);
    v(b) = lm;
    v(bd) = std::conj(lm);
    v(a2) = l3;
    v(a2d) = std::conj(l3);
    return v;
}

Mat6 diffusion_matrix(const SystemParams& p) {
    using namespace mode;
    Mat6 D = Mat6::Zero();
    D(a1, a1d) = 2.0 * p.kappa1;
    D(b, bd) = 2.0 * p.gamma_m * (p.n_th + 1.0);
    D(bd, b) = 2.0 * p.gamma_m * p.n_th;
    D(a2, a2d) = 2.0 * p.kappa2;
    return D;
}

Mat6 initial_moments(const SystemParams& p) {
    using namespace mode;
    Mat6 S = Mat6::Zero();
    S(a1, a1d) = 1.0;
    S(b, bd) = p.n_th + 1.0;
    S(bd, b) = p.n_th;
    S(a2, a2d) = 1.0;
    return S;
}

double omega_max(const SystemParams& p) {
    return std::max({p.omega_m, std::abs(p.delta1), std::abs(p.delta2),
                     std::abs(p.delta2 - p.delta1)});
}

double default_max_step(const SystemParams& p) {
    return (2.0 * M_PI / omega_max(p)) / 20.0;
}

std::vector<double> sample_grid(double t_max, double dt_out) {
    std::vector<double> g;
    const long n = std::lround(std::floor(t_max / dt_out + 1e-9));
    g.reserve(n + 1);
    for (long k = 0; k <= n; ++k) g.push_back(k * dt_out);
    if (g.back() < t_max - 1e-9 * std::max(1.0, t_max)) g.push_back(t_max);
    else g.back() = t_max;
    return g;
}

}  // namespace mim
