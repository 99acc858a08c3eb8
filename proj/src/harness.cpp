#include "mimcool/harness.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "mimcool/errors.hpp"

namespace mim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

// Error text lands in a CSV cell; keep it one unquoted token.
std::string sanitize(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out.push_back((c == ',' || c == '\n') ? ';' : c);
    return out;
}

RunSettings resolve(const SystemParams& p, RunSettings s) {
    if (s.t_max <= 0.0) s.t_max = default_t_max(p);
    if (s.dt_out <= 0.0) s.dt_out = default_dt_out(p, s.t_max);
    return s;
}

void manifest_header(std::ostream& os, const RunManifest& m) {
    const SystemParams& p = m.params;
    os << "# " << kVersion << "\n";
    os << "# command = " << m.command << "\n";
    os << "# kappa1 = " << fmt(p.kappa1) << "\n";
    os << "# kappa2 = " << fmt(p.kappa2) << "\n";
    os << "# gm = " << fmt(p.gm) << "\n";
    os << "# omega_m = " << fmt(p.omega_m) << "\n";
    os << "# gamma_m = " << fmt(p.gamma_m) << "\n";
    os << "# delta1 = " << fmt(p.delta1) << "\n";
    os << "# delta2 = " << fmt(p.delta2) << "\n";
    os << "# E1 = " << fmt(p.E1) << "\n";
    os << "# E2 = " << fmt(p.E2) << "\n";
    os << "# J = " << fmt(p.J) << "\n";
    os << "# n_th = " << fmt(p.n_th) << "\n";
    os << "# t_max = " << fmt(m.t_max) << "\n";
    os << "# dt_out = " << fmt(m.dt_out) << "\n";
    os << "# tol = " << fmt(m.tol) << "\n";
    os << "# threads = " << m.threads << "\n";
}

}  // namespace

double default_t_max(const SystemParams& p) {
    const DerivedQuantities q = validate(p);
    const double inten = q.J_E1 * q.J_E1 + q.J_E2 * q.J_E2;
    const double gamma_eff =
        4.0 * inten * p.kappa1 / (1.0 + p.kappa2 / p.kappa1);
    return 20.0 / std::max(gamma_eff, p.gamma_m);
}

double default_dt_out(const SystemParams& p, double t_max) {
    return std::min(t_max / 2000.0, (2.0 * M_PI / p.omega_m) / 8.0);
}

SystemParams single_cavity_baseline(SystemParams p) {
    p.E2 = 0.0;
    p.J = 0.0;
    return p;
}

std::vector<double> axis_values(const SweepAxis& a) {
    if (a.points < 1) throw ConfigError("sweep needs at least one point");
    if (a.points >= 2 && a.from == a.to)
        throw ConfigError("degenerate sweep range for " + a.name);
    std::vector<double> v;
    v.reserve(a.points);
    if (a.points == 1) {
        v.push_back(a.from);
        return v;
    }
    if (a.log_scale) {
        if (a.from <= 0.0 || a.to <= 0.0)
            throw ConfigError("log scale needs positive endpoints for " +
                              a.name);
        const double l0 = std::log(a.from), l1 = std::log(a.to);
        for (int i = 0; i < a.points; ++i)
            v.push_back(std::exp(l0 + (l1 - l0) * i / (a.points - 1)));
    } else {
        for (int i = 0; i < a.points; ++i)
            v.push_back(a.from + (a.to - a.from) * i / (a.points - 1));
    }
    return v;
}

SystemParams apply_axis(SystemParams p, const std::string& name,
                        double value) {
    if (name == "kappa2") p.kappa2 = value;
    else if (name == "J") p.J = value;
    else if (name == "E") { p.E1 = value; p.E2 = value; }
    else if (name == "E1") p.E1 = value;
    else if (name == "E2") p.E2 = value;
    else if (name == "omega_m") p.omega_m = value;
    else throw ConfigError("unknown sweep parameter '" + name + "'");
    return p;
}

CoolingResult run_simulate(const SystemParams& p, RunSettings s) {
    validate(p);
    s = resolve(p, s);
    return cooling_dynamics(p, s.t_max, s.dt_out, s.tol);
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    validate(spec.base);
    if (spec.axes.empty() || spec.axes.size() > 2)
        throw ConfigError("sweep takes one or two axes");

    std::vector<std::vector<double>> grids;
    for (const auto& a : spec.axes) grids.push_back(axis_values(a));
    const std::size_t n0 = grids[0].size();
    const std::size_t n1 = grids.size() == 2 ? grids[1].size() : 1;
    const std::size_t total = n0 * n1;

    std::vector<SweepRow> rows(total);
    const int threads = spec.settings.threads > 0 ? spec.settings.threads
                                                  : omp_get_max_threads();

    #pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::size_t idx = 0; idx < total; ++idx) {
        SweepRow& row = rows[idx];
        const std::size_t i0 = idx / n1;
        const std::size_t i1 = idx % n1;
        row.values.push_back(grids[0][i0]);
        if (grids.size() == 2) row.values.push_back(grids[1][i1]);
        try {
            SystemParams pt = apply_axis(spec.base, spec.axes[0].name,
                                         grids[0][i0]);
            if (spec.axes.size() == 2)
                pt = apply_axis(pt, spec.axes[1].name, grids[1][i1]);
            validate(pt);
            if (spec.mode == SweepMode::adiabatic) {
                const double n_mf = adiabatic_phonon(pt);
                row.n_m_final = n_mf;
                row.cooling_ratio =
                    pt.n_th > 0.0
                        ? n_mf * pt.kappa1 / (pt.gamma_m * pt.n_th)
                        : kNaN;
                row.converged = true;
            } else {
                RunSettings s = resolve(pt, spec.settings);
                const CoolingResult r =
                    cooling_dynamics(pt, s.t_max, s.dt_out, s.tol);
                row.n_m_final = r.n_m_final;
                row.cooling_ratio = r.cooling_ratio;
                row.converged = r.converged;
            }
        } catch (const std::exception& e) {
            row.error = e.what();
            row.n_m_final = kNaN;
            row.cooling_ratio = kNaN;
            row.converged = false;
        }
    }
    return rows;
}

CompareResult run_compare(const SystemParams& p, RunSettings s) {
    validate(p);
    s = resolve(p, s);
    CompareResult r;
    r.lin = quadratures(integrate_means(p, s.t_max, s.dt_out, s.tol), p);
    r.nl = meanfield_quadratures(
        integrate_meanfield(p, s.t_max, s.dt_out, s.tol));
    r.rms_X_c1 = relative_rms(r.lin.X_c1, r.nl.X_c1);
    r.rms_X_c2 = relative_rms(r.lin.X_c2, r.nl.X_c2);
    r.rms_X_m = relative_rms(r.lin.X_m, r.nl.X_m);
    return r;
}

std::vector<AdiabaticRow> run_adiabatic(const SystemParams& base,
                                        char case_label,
                                        const std::vector<SweepAxis>& axes) {
    validate(base);
    if (axes.size() > 1)
        throw ConfigError("adiabatic report takes at most one axis");

    std::vector<AdiabaticRow> rows;
    auto one = [&](const SystemParams& pt, double swept) {
        AdiabaticRow row;
        row.swept = swept;
        try {
            row.report = cooling_limit_report(pt, case_label);
        } catch (const std::exception& e) {
            row.error = e.what();
            const DerivedQuantities q = validate(pt);
            row.report.case_label = case_label;
            row.report.Gamma_m = q.Gamma_m;
            row.report.J_E1 = q.J_E1;
            row.report.J_E2 = q.J_E2;
            row.report.kappa2_over_kappa1 = pt.kappa2 / pt.kappa1;
            row.report.ratio_closed_form = kNaN;
            row.report.ratio_lyapunov = kNaN;
            row.report.rel_gap = kNaN;
        }
        rows.push_back(row);
    };

    if (axes.empty()) {
        one(base, kNaN);
    } else {
        for (double v : axis_values(axes[0]))
            one(apply_axis(base, axes[0].name, v), v);
    }
    return rows;
}

void write_simulate_csv(std::ostream& os, const RunManifest& m,
                        const CoolingResult& r) {
    manifest_header(os, m);
    os << "# n_m_final = " << fmt(r.n_m_final) << "\n";
    os << "# cooling_ratio = " << fmt(r.cooling_ratio) << "\n";
    os << "# converged = " << (r.converged ? 1 : 0) << "\n";
    os << "t,n_m,converged_hint\n";
    for (std::size_t k = 0; k < r.t.size(); ++k)
        os << fmt(r.t[k]) << ',' << fmt(r.n_m[k]) << ','
           << (r.converged ? 1 : 0) << "\n";
}

void write_sweep_csv(std::ostream& os, const RunManifest& m,
                     const SweepSpec& spec,
                     const std::vector<SweepRow>& rows) {
    manifest_header(os, m);
    os << "# mode = "
       << (spec.mode == SweepMode::adiabatic ? "adiabatic" : "dynamic")
       << "\n";
    for (const auto& a : spec.axes)
        os << "# axis = " << a.name << " from " << fmt(a.from) << " to "
           << fmt(a.to) << " points " << a.points
           << (a.log_scale ? " log" : " lin") << "\n";
    for (const auto& a : spec.axes) os << a.name << ',';
    os << "cooling_ratio,n_m_final,converged,error\n";
    for (const auto& row : rows) {
        for (double v : row.values) os << fmt(v) << ',';
        os << fmt(row.cooling_ratio) << ',' << fmt(row.n_m_final) << ','
           << (row.converged ? 1 : 0) << ',' << sanitize(row.error) << "\n";
    }
}

void write_compare_csv(std::ostream& os, const RunManifest& m,
                       const CompareResult& r) {
    manifest_header(os, m);
    os << "# rms_X_c1 = " << fmt(r.rms_X_c1) << "\n";
    os << "# rms_X_c2 = " << fmt(r.rms_X_c2) << "\n";
    os << "# rms_X_m = " << fmt(r.rms_X_m) << "\n";
    os << "t,X_c1_lin,X_c1_nl,X_c2_lin,X_c2_nl,X_m_lin,X_m_nl\n";
    for (std::size_t k = 0; k < r.lin.t.size(); ++k)
        os << fmt(r.lin.t[k]) << ',' << fmt(r.lin.X_c1[k]) << ','
           << fmt(r.nl.X_c1[k]) << ',' << fmt(r.lin.X_c2[k]) << ','
           << fmt(r.nl.X_c2[k]) << ',' << fmt(r.lin.X_m[k]) << ','
           << fmt(r.nl.X_m[k]) << "\n";
}

void write_adiabatic_csv(std::ostream& os, const RunManifest& m,
                         char case_label, const std::string& axis_name,
                         const std::vector<AdiabaticRow>& rows) {
    manifest_header(os, m);
    os << "# case = " << case_label << "\n";
    if (!axis_name.empty()) os << axis_name << ',';
    os << "J_E1,J_E2,kappa2_over_kappa1,ratio_closed_form,ratio_lyapunov,"
          "rel_gap,error\n";
    for (const auto& row : rows) {
        if (!axis_name.empty()) os << fmt(row.swept) << ',';
        const CoolingLimitReport& r = row.report;
        os << fmt(r.J_E1) << ',' << fmt(r.J_E2) << ','
           << fmt(r.kappa2_over_kappa1) << ',' << fmt(r.ratio_closed_form)
           << ',' << fmt(r.ratio_lyapunov) << ',' << fmt(r.rel_gap) << ','
           << sanitize(row.error) << "\n";
    }
}

}  // namespace mim
