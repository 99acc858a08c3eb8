#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mimcool/errors.hpp"
#include "mimcool/harness.hpp"

namespace {

// exit codes: 0 success, 2 config error, 3 numerical failure,
// 4 sweep finished with some failed rows

struct CommonArgs {
    std::string config;
    std::string output;
    double t_max = 0.0;
    double dt_out = 0.0;
    double tol = 1e-8;
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_grid) {
    cmd->add_option("--config", a.config, "parameter file (key = value)")
        ->required();
    cmd->add_option("--output", a.output, "CSV path (default: stdout)");
    cmd->add_option("--tol", a.tol, "integrator tolerance");
    if (with_grid) {
        cmd->add_option("--t-max", a.t_max, "integration horizon");
        cmd->add_option("--dt-out", a.dt_out, "output sample spacing");
    }
    cmd->add_option("--threads", a.threads, "worker threads (0 = default)");
}

struct AxisArgs {
    std::vector<std::string> names;
    std::vector<double> from, to;
    std::vector<int> points;
    std::vector<std::string> scales;
};

void add_axes(CLI::App* cmd, AxisArgs& a) {
    cmd->add_option("--param", a.names,
                    "swept parameter (kappa2|J|E|E1|E2|omega_m); repeatable");
    cmd->add_option("--from", a.from, "axis start; one per --param");
    cmd->add_option("--to", a.to, "axis end; one per --param");
    cmd->add_option("--points", a.points, "axis size; one per --param");
    cmd->add_option("--scale", a.scales, "lin|log per axis (default lin)");
}

std::vector<mim::SweepAxis> build_axes(const AxisArgs& a) {
    const std::size_t n = a.names.size();
    if (a.from.size() != n || a.to.size() != n || a.points.size() != n)
        throw mim::ConfigError(
            "--param, --from, --to and --points must repeat together");
    if (a.scales.size() > n)
        throw mim::ConfigError("more --scale values than axes");
    std::vector<mim::SweepAxis> axes;
    for (std::size_t i = 0; i < n; ++i) {
        mim::SweepAxis ax;
        ax.name = a.names[i];
        ax.from = a.from[i];
        ax.to = a.to[i];
        ax.points = a.points[i];
        const std::string sc = i < a.scales.size() ? a.scales[i] : "lin";
        if (sc == "log") ax.log_scale = true;
        else if (sc == "lin") ax.log_scale = false;
        else throw mim::ConfigError("--scale must be lin or log, got " + sc);
        axes.push_back(ax);
    }
    return axes;
}

// Writes via a file when requested, else stdout.
int with_output(const std::string& path,
                const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(std::cout);
        return 0;
    }
    std::ofstream out(path);
    if (!out) throw mim::ConfigError("cannot open output file " + path);
    body(out);
    return 0;
}

mim::RunManifest make_manifest(const std::string& command,
                               const mim::SystemParams& p,
                               const CommonArgs& a) {
    mim::RunManifest m;
    m.command = command;
    m.params = p;
    m.t_max = a.t_max;
    m.dt_out = a.dt_out;
    m.tol = a.tol;
    m.threads = a.threads;
    return m;
}

mim::RunSettings make_settings(const CommonArgs& a) {
    mim::RunSettings s;
    s.t_max = a.t_max;
    s.dt_out = a.dt_out;
    s.tol = a.tol;
    s.threads = a.threads;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"membrane-in-the-middle cooling simulator"};
    app.require_subcommand(1);

    CommonArgs sim_args, sweep_args, cmp_args, adia_args;
    AxisArgs sweep_axes, adia_axes;
    std::string mode = "dynamic";
    std::string case_label = "A";

    CLI::App* sim = app.add_subcommand("simulate", "one cooling run");
    add_common(sim, sim_args, true);

    CLI::App* sweep = app.add_subcommand("sweep", "cooling ratio over a grid");
    add_common(sweep, sweep_args, true);
    add_axes(sweep, sweep_axes);
    sweep->add_option("--mode", mode, "dynamic|adiabatic");

    CLI::App* cmp =
        app.add_subcommand("compare", "linear vs nonlinear quadratures");
    add_common(cmp, cmp_args, true);

    CLI::App* adia =
        app.add_subcommand("adiabatic", "closed-form vs Lyapunov report");
    add_common(adia, adia_args, false);
    add_axes(adia, adia_axes);
    adia->add_option("--case", case_label, "A|B|C");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sim->parsed()) {
            const mim::SystemParams p = mim::load_config(sim_args.config);
            const mim::RunSettings s = make_settings(sim_args);
            const mim::CoolingResult r = mim::run_simulate(p, s);
            mim::RunManifest m = make_manifest("simulate", p, sim_args);
            m.t_max = s.t_max > 0 ? s.t_max : mim::default_t_max(p);
            m.dt_out = s.dt_out > 0 ? s.dt_out
                                    : mim::default_dt_out(p, m.t_max);
            with_output(sim_args.output, [&](std::ostream& os) {
                mim::write_simulate_csv(os, m, r);
            });
            std::cerr << "n_m_final = " << r.n_m_final
                      << "  cooling_ratio = " << r.cooling_ratio
                      << "  converged = " << (r.converged ? 1 : 0) << "\n";
            return 0;
        }
        if (sweep->parsed()) {
            mim::SweepSpec spec;
            spec.base = mim::load_config(sweep_args.config);
            spec.axes = build_axes(sweep_axes);
            spec.settings = make_settings(sweep_args);
            if (mode == "dynamic") spec.mode = mim::SweepMode::dynamic;
            else if (mode == "adiabatic") spec.mode = mim::SweepMode::adiabatic;
            else throw mim::ConfigError("--mode must be dynamic or adiabatic");
            const std::vector<mim::SweepRow> rows = mim::run_sweep(spec);
            const mim::RunManifest m =
                make_manifest("sweep", spec.base, sweep_args);
            with_output(sweep_args.output, [&](std::ostream& os) {
                mim::write_sweep_csv(os, m, spec, rows);
            });
            for (const auto& row : rows)
                if (!row.error.empty()) return 4;
            return 0;
        }
        if (cmp->parsed()) {
            const mim::SystemParams p = mim::load_config(cmp_args.config);
            const mim::RunSettings s = make_settings(cmp_args);
            const mim::CompareResult r = mim::run_compare(p, s);
            mim::RunManifest m = make_manifest("compare", p, cmp_args);
            m.t_max = s.t_max > 0 ? s.t_max : mim::default_t_max(p);
            m.dt_out = s.dt_out > 0 ? s.dt_out
                                    : mim::default_dt_out(p, m.t_max);
            with_output(cmp_args.output, [&](std::ostream& os) {
                mim::write_compare_csv(os, m, r);
            });
            std::cerr << "rms_X_c1 = " << r.rms_X_c1
                      << "  rms_X_c2 = " << r.rms_X_c2
                      << "  rms_X_m = " << r.rms_X_m << "\n";
            return 0;
        }
        if (adia->parsed()) {
            const mim::SystemParams p = mim::load_config(adia_args.config);
            if (case_label.size() != 1 ||
                (case_label != "A" && case_label != "B" && case_label != "C"))
                throw mim::ConfigError("--case must be A, B or C");
            const auto axes = build_axes(adia_axes);
            const auto rows = mim::run_adiabatic(p, case_label[0], axes);
            const mim::RunManifest m =
                make_manifest("adiabatic", p, adia_args);
            with_output(adia_args.output, [&](std::ostream& os) {
                mim::write_adiabatic_csv(os, m, case_label[0],
                                         axes.empty() ? "" : axes[0].name,
                                         rows);
            });
            for (const auto& row : rows)
                if (!row.error.empty()) return 4;
            return 0;
        }
    } catch (const mim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const mim::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
