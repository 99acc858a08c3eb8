#pragma once

#include <iosfwd>
#include <string>

namespace mim {

// System parameters in units of kappa1 (kappa1 itself is kept explicit so
// absolute-unit inputs work; canonical runs use kappa1 = 1).
struct SystemParams {
    double kappa1 = 1.0;   // cavity-1 damping rate (reference unit)
    double kappa2 = 1.0;   // cavity-2 damping rate
    double gm = 0.0;       // single-photon optomechanical coupling
    double omega_m = 1.0;  // mechanical frequency
    double gamma_m = 1.0;  // mechanical damping rate
    double delta1 = 1.0;   // drive-1 detuning (omega_c1 - omega_L1)
    double delta2 = 1.0;   // drive-2 detuning (omega_c2 - omega_L2)
    double E1 = 0.0;       // drive-1 amplitude
    double E2 = 0.0;       // drive-2 amplitude
    double J = 0.0;        // inter-cavity tunneling strength
    double n_th = 0.0;     // environmental thermal phonon number
};

// Quantities derived from a validated SystemParams.
struct DerivedQuantities {
    double Gamma_m = 0.0;          // gamma_m / kappa1
    double J_E1 = 0.0;             // (gm/omega_m) * (E1/kappa1)
    double J_E2 = 0.0;             // (gm/omega_m) * (E2/kappa1)
    double cavity_freq_gap = 0.0;  // omega_c2 - omega_c1 == delta2 - delta1
    bool weak_coupling_warning = false;  // set when gm/omega_m > 1e-2
};

// Checks invariants and populates derived quantities.
// Throws NonPositiveRate, ZeroDetuning or NegativeAmplitude on bad input.
DerivedQuantities validate(const SystemParams& p);

// Exchanges the two cavities: kappa1<->kappa2, E1<->E2, delta1<->delta2.
// Involution: swap12(swap12(p)) == p.
SystemParams swap12(const SystemParams& p);

// Plain-text key=value config. Exactly the 11 SystemParams keys are
// required; unknown keys are errors. '#' starts a comment.
SystemParams parse_config(std::istream& in);
SystemParams load_config(const std::string& path);

}  // namespace mim
