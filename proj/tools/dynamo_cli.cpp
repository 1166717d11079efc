// Command-line front end: spectrum sweeps, closed-form verification, and
// CSV/SVG artifact emission for the sech-profile dynamo operator.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dynamo/dirac.hpp"
#include "dynamo/errors.hpp"
#include "dynamo/perturbation.hpp"
#include "dynamo/profile.hpp"
#include "dynamo/report.hpp"
#include "dynamo/susy.hpp"
#include "dynamo/sweep.hpp"
#include "dynamo/transform.hpp"

namespace {

using namespace dynamo;

struct CommonConfig {
    double L = 100.0;
    int n = 8000;
    std::string out_dir = ".";
    bool emit_svg = false;
    int jobs = 0;
};

std::vector<double> parse_range(const std::string& spec) {
    double lo = 0.0, hi = 0.0, step = 0.0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3)
        throw CLI::ValidationError("--x0", "expected min:max:step, got '" + spec + "'");
    if (step <= 0.0) throw CLI::ValidationError("--x0", "step must be positive");
    return linear_range(lo, hi, step);
}

std::vector<int> parse_int_list(const std::string& spec) {
    std::vector<int> out;
    std::string tok;
    std::istringstream is(spec);
    while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw CLI::ValidationError("--l", "empty list");
    return out;
}

std::vector<double> parse_double_list(const std::string& spec) {
    std::vector<double> out;
    std::string tok;
    std::istringstream is(spec);
    while (std::getline(is, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

void write_file(const CommonConfig& cfg, const std::string& name,
                const std::string& content) {
    std::filesystem::create_directories(cfg.out_dir);
    const auto path = std::filesystem::path(cfg.out_dir) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << content;
    std::cout << "wrote " << path.string() << "\n";
}

Grid make_grid(const CommonConfig& cfg) { return Grid(cfg.L, cfg.n); }

int cmd_sweep(const CommonConfig& cfg, const std::string& lspec,
              const std::string& x0spec) {
    const Grid grid = make_grid(cfg);
    const auto cells = sweep(parse_int_list(lspec), parse_range(x0spec), grid, {},
                             cfg.jobs);
    write_file(cfg, "sweep.csv", sweep_csv(cells));
    if (cfg.emit_svg) {
        write_file(cfg, "spectrum_lambda.svg",
                   svg_plot("Bound-state growth rate", "x0", "lambda",
                            lambda_series(cells)));
        write_file(cfg, "spectrum_epsilon.svg",
                   svg_plot("Bound-state spectrum, auxiliary parameter", "x0",
                            "epsilon", epsilon_series(cells)));
    }
    int found = 0;
    for (const auto& c : cells) found += c.solution ? 1 : 0;
    std::cout << "cells: " << cells.size() << ", bound states: " << found << "\n";
    return 0;
}

int cmd_reduced(const CommonConfig& cfg, const std::string& lspec,
                const std::string& x0spec) {
    const Grid grid = make_grid(cfg);
    std::vector<ReducedRow> rows;
    for (int l : parse_int_list(lspec))
        for (double x0 : parse_range(x0spec)) {
            ReducedRow row{l, x0, std::nullopt};
            const double lam = reduced_spectrum(x0, l, grid, 1)[0];
            if (lam > 0.0) row.lambda = lam;
            rows.push_back(row);
        }
    write_file(cfg, "reduced.csv", reduced_csv(rows));
    if (cfg.emit_svg)
        write_file(cfg, "reduced_lambda.svg",
                   svg_plot("Reduced-system bound states", "x0", "lambda",
                            reduced_series(rows)));
    return 0;
}

int cmd_solve(const CommonConfig& cfg, int l, double x0) {
    const Grid grid = make_grid(cfg);
    const PencilResult r = solve_pencil(x0, l, grid);
    std::vector<SweepCell> cells(1);
    cells[0].l = l;
    cells[0].x0 = x0;
    cells[0].solution = r.solution;
    cells[0].n_roots = static_cast<int>(r.roots_b.size());
    write_file(cfg, "solution.csv", sweep_csv(cells));
    if (!r.solution) {
        std::cout << "no bound state (roots found: " << r.roots_b.size()
                  << (r.imaginary_straddle ? ", constraint entered lambda > 1/2" : "")
                  << ")\n";
        return 0;
    }
    const PencilSolution& s = *r.solution;
    std::cout << "l = " << l << ", x0 = " << fmt_sci(x0) << "\n"
              << "lambda  = " << fmt_sci(s.lambda) << "\n"
              << "epsilon = " << fmt_sci(s.epsilon) << "\n"
              << "branch  = " << to_string(s.branch) << "\n"
              << "pencil residual = " << fmt_sci(s.residual) << "\n";
    if (std::abs(s.epsilon) > 1e-6) {
        const MatrixPipeline pipe = build_pipeline(x0, l, s.epsilon, grid);
        auto [phi1, phi2] = reconstruct_phi(s, pipe);
        std::cout << "coupled-system residual = "
                  << fmt_sci(full_system_residual(phi1, phi2, pipe)) << "\n"
                  << "field-link residual     = "
                  << fmt_sci(field_link_residual(phi1, phi2, pipe)) << "\n";
    }
    return 0;
}

int cmd_perturb(const CommonConfig& cfg, const std::string& dspec) {
    const Grid grid = make_grid(cfg);
    const std::vector<double> deltas = parse_double_list(dspec);
    const auto rows = local_slope_check(deltas, grid);
    write_file(cfg, "perturb.csv", perturb_csv(rows));
    double c_fit = 0.0;
    for (const auto& r : rows)
        if (r.deviation && r.delta != 0.0)
            c_fit = std::max(c_fit, *r.deviation / (r.delta * r.delta));
    std::cout << "epsilon(x_J + delta) vs -delta/2; fitted quadratic-remainder "
              << "bound c = " << fmt_sci(c_fit) << "\n";
    return 0;
}

int cmd_dirac_check(const CommonConfig& cfg, int l, const std::string& x0spec) {
    const Grid grid = make_grid(cfg);
    const auto rows = regularity_report(parse_range(x0spec), l, grid);
    write_file(cfg, "dirac_report.csv", dirac_csv(l, rows));
    for (const auto& r : rows) {
        std::cout << "x0 = " << fmt_sci(r.x0) << "  nodes = " << r.nodes
                  << "  regular = " << (r.regular ? "yes" : "no ");
        if (r.dirac_residual) std::cout << "  residual = " << fmt_sci(*r.dirac_residual);
        std::cout << "\n";
    }
    return 0;
}

struct Check {
    const char* name;
    bool ok;
    std::string detail;
};

int cmd_verify(const CommonConfig& cfg) {
    std::vector<Check> checks;
    const Grid grid = make_grid(cfg);
    const double xJ = jordan_x0();

    {  // profile ODE residual at deterministic pseudo-random points
        double worst = 0.0;
        unsigned state = 12345;
        auto rnd = [&state]() {
            state = state * 1664525u + 1013904223u;
            return state / 4294967296.0;
        };
        for (int k = 0; k < 200; ++k) {
            const AlphaProfile p(0.1 + 4.9 * rnd(), -3.0 + 6.0 * rnd());
            worst = std::max(worst, std::abs(p.ode_residual(-3.0 + 9.0 * rnd())));
        }
        checks.push_back({"profile ODE residual < 1e-12", worst < 1e-12, fmt_sci(worst)});
    }
    {  // kernel convergence order on the soliton well
        auto level = [](int n) {
            const Grid g(100.0, n);
            const auto T = discretize_schrodinger(g, [](double x) {
                const double c = std::cosh(x - 10.0);
                return -2.0 / (c * c);
            });
            return smallest_eigenvalue(T);
        };
        const double e1 = level(1000), e2 = level(2000), e3 = level(4000);
        const double ratio = std::abs(e1 - e2) / std::abs(e2 - e3);
        checks.push_back({"eigensolver order-2 ratio in [3.5, 4.5]",
                          ratio > 3.5 && ratio < 4.5, fmt_sci(ratio)});
    }
    {  // Wronskian constancy
        const double kappa = 1.0 / std::sqrt(2.0);
        const PhiExact pp(xJ, kappa, +1), pm(xJ, kappa, -1);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k)
            worst = std::max(worst,
                             std::abs(wronskian(pp, pm, k * 1.0) + kappa));
        checks.push_back({"Wronskian == -2^{-1/2}, 100 points, 1e-10", worst < 1e-10,
                          fmt_sci(worst)});
    }
    {  // reduced level vs tanh^2 (Richardson pair)
        double worst = 0.0;
        for (double x0 : {0.5, 1.0, 1.5, 2.0, 2.5}) {
            const Grid g1(cfg.L, cfg.n / 2), g2(cfg.L, cfg.n);
            const double l1 = reduced_spectrum(x0, 0, g1, 1)[0];
            const double l2 = reduced_spectrum(x0, 0, g2, 1)[0];
            const double rho = g1.h() / g2.h();
            const double lam = (rho * rho * l2 - l1) / (rho * rho - 1.0);
            worst = std::max(worst, std::abs(lam - std::pow(std::tanh(x0), 2)));
        }
        checks.push_back({"reduced lambda == tanh^2(x0), 1e-6", worst < 1e-6,
                          fmt_sci(worst)});
    }
    {  // solvability quadrature
        const Solvability s = solvability_e1(grid);
        checks.push_back({"solvability ratio == -1/2, 1e-6",
                          std::abs(s.ratio + 0.5) < 1e-6, fmt_sci(s.ratio)});
    }
    {  // Jordan triangular form
        const double dev = jordan_form_check(xJ, 0, grid);
        checks.push_back({"Jordan-form deviation < 1e-10", dev < 1e-10, fmt_sci(dev)});
    }
    {  // local pencil behavior around the Jordan point
        const PencilResult r = solve_pencil(xJ - 0.2, 0, grid);
        const bool ok = r.solution && std::abs(r.solution->epsilon - 0.1) < 0.01;
        checks.push_back({"epsilon(x_J - 0.2) == 0.1 +- 0.01", ok,
                          r.solution ? fmt_sci(r.solution->epsilon) : "none"});
    }
    {  // reconstruction identities at one bound state
        const PencilResult r = solve_pencil(0.5, 0, grid);
        bool ok = false;
        std::string detail = "no bound state";
        if (r.solution) {
            const MatrixPipeline pipe = build_pipeline(0.5, 0, r.solution->epsilon, grid);
            auto [phi1, phi2] = reconstruct_phi(*r.solution, pipe);
            const double link = field_link_residual(phi1, phi2, pipe);
            auto [fp, fm] = phi_to_f(phi1, phi2, pipe);
            double dev = 0.0;
            for (int i = 0; i < grid.n; ++i) {
                dev = std::max(dev, std::abs(fp[i] - r.solution->F[i]));
                dev = std::max(dev, std::abs(fm[i]));
            }
            ok = link < 1e-6 && dev < 1e-10;
            detail = "link " + fmt_sci(link) + ", roundtrip " + fmt_sci(dev);
        }
        checks.push_back({"field link < 1e-6 and round trip < 1e-10", ok, detail});
    }
    {  // Dirac regularity flags
        const DiracSystem reg = build_dirac_system(0.5, 0, grid);
        const DiracSystem irr = build_dirac_system(1.2, 0, grid);
        checks.push_back({"superpotential regular at 0.5, pole at 1.2",
                          reg.regular && !irr.regular,
                          "nodes: " + std::to_string(reg.seed.nodes) + ", " +
                              std::to_string(irr.seed.nodes)});
    }

    bool all_ok = true;
    for (const Check& c : checks) {
        std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << c.name << "  (" << c.detail
                  << ")\n";
        all_ok = all_ok && c.ok;
    }
    std::cout << (all_ok ? "verification passed\n" : "verification FAILED\n");
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral toolkit for the sech-profile spherically symmetric "
                 "alpha^2-dynamo operator"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_config("--config", "", "key=value config file; flags take precedence");

    CommonConfig cfg;
    app.add_option("--L", cfg.L, "truncation radius")->check(CLI::PositiveNumber);
    app.add_option("--n", cfg.n, "interior grid points")->check(CLI::Range(100, 100000000));
    app.add_option("--out", cfg.out_dir, "output directory");
    app.add_flag("--svg", cfg.emit_svg, "also emit SVG plots");
    app.add_option("--jobs", cfg.jobs, "worker threads (0 = runtime default)");

    std::string lspec = "0,1,2,3", x0spec = "0:4:0.05";
    auto* sweep_cmd = app.add_subcommand("sweep", "bound-state sweep over (l, x0)");
    sweep_cmd->add_option("--l", lspec, "comma-separated l list");
    sweep_cmd->add_option("--x0", x0spec, "x0 range min:max:step");

    std::string rlspec = "0", rx0spec = "0:3:0.05";
    auto* reduced_cmd = app.add_subcommand("reduced", "reduced-system spectrum");
    reduced_cmd->add_option("--l", rlspec, "comma-separated l list");
    reduced_cmd->add_option("--x0", rx0spec, "x0 range min:max:step");

    int sl = 0;
    double sx0 = 1.0;
    auto* solve_cmd = app.add_subcommand("solve", "single bound-state solve");
    solve_cmd->add_option("--l", sl, "angular mode number");
    solve_cmd->add_option("--x0", sx0, "profile center");

    std::string dspec = "-0.1,-0.05,-0.025,0.025,0.05,0.1";
    auto* perturb_cmd =
        app.add_subcommand("perturb", "epsilon(x_J + delta) against -delta/2");
    perturb_cmd->add_option("--delta", dspec, "comma-separated delta list");

    int dl = 0;
    std::string dx0spec = "0.1:1.5:0.1";
    auto* dirac_cmd =
        app.add_subcommand("dirac-check", "superpotential regularity report");
    dirac_cmd->add_option("--l", dl, "angular mode number");
    dirac_cmd->add_option("--x0", dx0spec, "x0 range min:max:step");

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (cfg.n < 100 || cfg.L <= 10.0) {
        std::cerr << "usage error: need n >= 100 and L > 10\n";
        return 1;
    }

    try {
        if (sweep_cmd->parsed()) return cmd_sweep(cfg, lspec, x0spec);
        if (reduced_cmd->parsed()) return cmd_reduced(cfg, rlspec, rx0spec);
        if (solve_cmd->parsed()) return cmd_solve(cfg, sl, sx0);
        if (perturb_cmd->parsed()) return cmd_perturb(cfg, dspec);
        if (dirac_cmd->parsed()) return cmd_dirac_check(cfg, dl, dx0spec);
        if (verify_cmd->parsed()) return cmd_verify(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const invalid_parameter& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
