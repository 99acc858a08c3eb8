#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mimcool/adiabatic.hpp"
#include "mimcool/covariance.hpp"
#include "mimcool/meanfield.hpp"
#include "mimcool/propagator.hpp"

namespace mim {

inline constexpr const char* kVersion = "mimcool 0.1.0";

// Shared run knobs; non-positive t_max / dt_out select the defaults below.
struct RunSettings {
    double t_max = 0.0;
    double dt_out = 0.0;
    double tol = 1e-8;
    int threads = 0;  // 0: OpenMP default
};

// Settle-time heuristic 20 / max(Gamma_eff, gamma_m) with
// Gamma_eff = 4 (J_E1^2 + J_E2^2) kappa1 / (1 + kappa2/kappa1); the
// extract_final convergence flag guards against it being too short.
double default_t_max(const SystemParams& p);

// min(t_max / 2000, mechanical period / 8) so the trailing-window mean can
// resolve the residual omega_m ripple.
double default_dt_out(const SystemParams& p, double t_max);

// Cavity 2 fully decoupled: E2 = 0 and J = 0.
SystemParams single_cavity_baseline(SystemParams p);

struct SweepAxis {
    std::string name;  // kappa2 | J | E | E1 | E2 | omega_m
    double from = 0.0;
    double to = 0.0;
    int points = 0;
    bool log_scale = false;
};

// Grid values for one axis; log spacing needs positive endpoints.
std::vector<double> axis_values(const SweepAxis& a);

// Returns p with the named parameter set to value ("E" sets E1 and E2).
SystemParams apply_axis(SystemParams p, const std::string& name, double value);

enum class SweepMode { dynamic, adiabatic };

struct SweepSpec {
    SystemParams base;
    std::vector<SweepAxis> axes;  // one or two
    SweepMode mode = SweepMode::adiabatic;
    RunSettings settings;
};

struct SweepRow {
    std::vector<double> values;  // swept value(s), axis order
    double cooling_ratio = 0.0;
    double n_m_final = 0.0;
    bool converged = false;
    std::string error;  // empty on success; row values are NaN otherwise
};

struct AdiabaticRow {
    double swept = 0.0;  // NaN when no axis was given
    CoolingLimitReport report;
    std::string error;
};

// Echoed at the top of every CSV as '#' comment lines.
struct RunManifest {
    std::string command;
    SystemParams params;
    double t_max = 0.0;
    double dt_out = 0.0;
    double tol = 0.0;
    int threads = 0;
};

CoolingResult run_simulate(const SystemParams& p, RunSettings s);

// One covariance run (mode dynamic) or Lyapunov solve (mode adiabatic) per
// grid point; points execute in parallel, rows keep sweep order, per-point
// failures become NaN rows carrying the error text.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

struct CompareResult {
    QuadratureSeries lin;
    QuadratureSeries nl;
    double rms_X_c1 = 0.0;
    double rms_X_c2 = 0.0;
    double rms_X_m = 0.0;
};

// Linear vs factorized nonlinear quadratures on one shared grid; the RMS
// figures are RMS(nl - lin) / RMS(lin) per trace.
CompareResult run_compare(const SystemParams& p, RunSettings s);

// Closed form vs Lyapunov report rows; with an axis, one row per value and
// DomainError/DegenerateDrive are recorded per row instead of thrown.
std::vector<AdiabaticRow> run_adiabatic(const SystemParams& base,
                                        char case_label,
                                        const std::vector<SweepAxis>& axes);

void write_simulate_csv(std::ostream& os, const RunManifest& m,
                        const CoolingResult& r);
void write_sweep_csv(std::ostream& os, const RunManifest& m,
                     const SweepSpec& spec, const std::vector<SweepRow>& rows);
void write_compare_csv(std::ostream& os, const RunManifest& m,
                       const CompareResult& r);
void write_adiabatic_csv(std::ostream& os, const RunManifest& m,
                         char case_label, const std::string& axis_name,
                         const std::vector<AdiabaticRow>& rows);

}  // namespace mim
