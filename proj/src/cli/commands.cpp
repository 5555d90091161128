#include "plap/cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "plap/asymptotics.hpp"
#include "plap/bounds.hpp"
#include "plap/cli/svg.hpp"
#include "plap/equilibria.hpp"
#include "plap/io.hpp"
#include "plap/parallel.hpp"

namespace plap::cli {

namespace fs = std::filesystem;

namespace {

struct Setup {
    Mesh1D mesh;
    SpectralBasis basis;
    double lambda;
    GridFunction g;
    GridFunction u0;
};

Setup make_setup(const ExperimentConfig& c) {
    try {
        Mesh1D mesh(c.length, c.n);
        SpectralBasis basis(mesh);
        const double lambda = resolve_lambda(c.lambda_spec, basis);
        GridFunction g = resolve_field(c.g_spec, c.g_scale, basis, c.base_dir);
        GridFunction u0 = resolve_field(c.u0_spec, c.u0_scale, basis, c.base_dir);
        return {mesh, std::move(basis), lambda, std::move(g), std::move(u0)};
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

ProblemParams make_params(double p, const Setup& s) {
    try {
        return ProblemParams(p, s.lambda, s.g);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

void check_solver(const SolverConfig& cfg, const ProblemParams& params) {
    try {
        validate(cfg, params);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

void require_p_list(const ExperimentConfig& c, const char* command) {
    if (c.p_list.empty()) throw ConfigError(std::string(command) + " needs p_list");
}

fs::path prepare_out(const ExperimentConfig& c) {
    std::error_code ec;
    fs::create_directories(c.out, ec);
    if (ec) throw ConfigError("cannot create output directory " + c.out.string() + ": " + ec.message());
    return c.out;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot write " + path.string());
    return os;
}

std::vector<std::string> header_comments(const std::string& command, const ExperimentConfig& c) {
    std::vector<std::string> lines{"command=" + command};
    for (const auto& kv : c.resolved()) lines.push_back(kv);
    return lines;
}

void write_comments(std::ostream& os, const std::vector<std::string>& lines) {
    for (const auto& l : lines) os << "# " << l << '\n';
}

void write_svg(const fs::path& path, const PlotSpec& spec) {
    auto os = open_out(path);
    os << render_svg(spec);
}

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IoError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const fs::filesystem_error& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const SolverError& e) {
        err << "numerical failure: " << e.what() << " (last residual " << e.last_residual() << ")\n";
        return kExitNumerical;
    } catch (const ResonanceError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const DomainError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const MeshMismatch& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}

void plot_trajectory(const fs::path& dir, const Trajectory& traj, const SpectralBasis& basis) {
    Series norm{"|u(t)|", {}, {}};
    std::vector<Series> modes;
    const std::size_t shown = std::min<std::size_t>(4, basis.size());
    for (std::size_t j = 1; j <= shown; ++j) modes.push_back({"|u_" + std::to_string(j) + "(t)|", {}, {}});
    for (const auto& s : traj.samples()) {
        norm.x.push_back(s.t);
        norm.y.push_back(norm_l2(s.state));
        for (std::size_t j = 1; j <= shown; ++j) {
            modes[j - 1].x.push_back(s.t);
            modes[j - 1].y.push_back(std::abs(inner_l2(s.state, basis.eigenvector(j))));
        }
    }
    write_svg(dir / "norm_vs_time.svg", {"L2 norm of the state", "t", "norm", false, true, {norm}});
    write_svg(dir / "modes_vs_time.svg", {"Leading Fourier modes", "t", "|coefficient|", false, true, modes});
}

}  // namespace

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = std::min(x.size(), y.size());
    if (n < 2) return std::numeric_limits<double>::quiet_NaN();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

SemigroupContinuity semigroup_continuity(const GridFunction& u0, const ProblemParams& params_base,
                                         const std::vector<double>& p_list, const SolverConfig& cfg,
                                         double u2_offset, unsigned workers) {
    const SpectralBasis basis(params_base.mesh());
    const GridFunction u2_start = u0 + u2_offset * basis.eigenvector(1);
    const Trajectory linear = evolve(u2_start, params_base.with_p(2.0), cfg);
    auto gaps = parallel_map(p_list.size(), workers, [&](std::size_t k) {
        const Trajectory traj = evolve(u0, params_base.with_p(p_list[k]), cfg);
        double sup = 0.0;
        for (std::size_t i = 0; i < traj.size(); ++i) sup = std::max(sup, norm_l2(traj[i].state - linear[i].state));
        return SemigroupGap{p_list[k], sup};
    });
    std::vector<double> lx, ly;
    for (const auto& g : gaps) {
        if (g.sup_gap > 0.0) {
            lx.push_back(std::log(g.p - 2.0));
            ly.push_back(std::log(g.sup_gap));
        }
    }
    return {std::move(gaps), least_squares_slope(lx, ly)};
}

int cmd_evolve(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Setup s = make_setup(config);
        const ProblemParams params = make_params(config.p, s);
        check_solver(config.solver, params);
        const bool linear = params.p() == 2.0;
        std::string method = config.method;
        if (method == "auto") method = linear ? "exact" : "backward-euler";
        if (!linear && (method == "exact" || method == "both")) {
            throw ConfigError("method '" + method + "' needs p = 2");
        }
        const fs::path dir = prepare_out(config);
        const auto comments = header_comments("evolve", config);

        std::optional<Trajectory> primary;
        if (method == "exact" || method == "both") {
            const Trajectory exact = solve_p2_exact(s.u0, params, recording_times(config.solver), s.basis);
            auto os = open_out(dir / "trajectory.csv");
            write_trajectory_csv(os, exact, {comments, "exact"});
            primary = exact;
        }
        if (method == "backward-euler" || method == "both") {
            const Trajectory be = evolve(s.u0, params, config.solver);
            auto os = open_out(dir / (method == "both" ? "trajectory_be.csv" : "trajectory.csv"));
            write_trajectory_csv(os, be, {comments, format_number(config.solver.tau)});
            if (!primary) primary = be;
        }
        if (config.svg) plot_trajectory(dir, *primary, s.basis);
        out << "evolve: " << primary->size() << " samples, final norm " << format_number(norm_l2(primary->back().state))
            << " -> " << (dir / "trajectory.csv").string() << '\n';
        return kExitOk;
    });
}

int cmd_semigroup_continuity(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_p_list(config, "semigroup-continuity");
        const Setup s = make_setup(config);
        const ProblemParams base = make_params(2.0, s);
        check_solver(config.solver, base);
        if (config.solver.t_final > 5.0) err << "warning: t_final > 5; the continuity constants grow with T\n";
        const fs::path dir = prepare_out(config);
        const auto result =
            semigroup_continuity(s.u0, base, config.p_list, config.solver, config.u2_offset, config.workers);

        auto os = open_out(dir / "semigroup_continuity.csv");
        write_comments(os, header_comments("semigroup-continuity", config));
        os << "p,sup_gap,fitted_slope\n";
        for (const auto& g : result.gaps) {
            os << format_number(g.p) << ',' << format_number(g.sup_gap) << ',' << format_number(result.slope) << '\n';
        }
        if (config.svg) {
            Series series{"sup gap", {}, {}};
            for (const auto& g : result.gaps) {
                series.x.push_back(g.p - 2.0);
                series.y.push_back(g.sup_gap);
            }
            write_svg(dir / "semigroup_continuity.svg",
                      {"Flow gap against p - 2", "p - 2", "sup_t |u_p - u_2|", true, true, {series}});
        }
        out << "semigroup-continuity: fitted slope " << format_number(result.slope) << '\n';
        return kExitOk;
    });
}

int cmd_equilibrium_sweep(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_p_list(config, "equilibrium-sweep");
        const Setup s = make_setup(config);
        const ProblemParams base = make_params(2.0, s);
        const fs::path dir = prepare_out(config);
        EquilibriumOptions options;
        options.restarts = config.restarts;
        options.seed = config.seed;
        const auto sweep = sweep_equilibrium_continuity(config.p_list, base, config.eq_tol, options);

        auto os = open_out(dir / "equilibrium_sweep.csv");
        write_comments(os, header_comments("equilibrium-sweep", config));
        os << "p,gap_V2,gap_Vp,residual,iterations\n";
        for (const auto& e : sweep) {
            os << format_number(e.p) << ',' << format_number(e.gap_v2) << ',' << format_number(e.gap_vp) << ','
               << format_number(e.residual) << ',' << e.iterations << '\n';
        }
        out << "equilibrium-sweep: " << sweep.size() << " entries -> " << (dir / "equilibrium_sweep.csv").string()
            << '\n';
        return kExitOk;
    });
}

int cmd_attractor(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_p_list(config, "attractor");
        const Setup s = make_setup(config);
        const ProblemParams base = make_params(2.0, s);
        SolverConfig solver = config.solver;
        solver.t_final = config.transient_time;
        check_solver(solver, base);
        const fs::path dir = prepare_out(config);
        const auto net = default_ic_net(s.basis, config.seed, config.ic_random);
        const auto entries =
            upper_semicontinuity_experiment(config.p_list, base, net, config.transient_time, solver, config.workers);

        auto os = open_out(dir / "distances.csv");
        write_comments(os, header_comments("attractor", config));
        os << "# N_lambda=" << count_N_lambda(s.lambda, s.basis) << '\n';
        os << "p,distance,max_v_norm,states\n";
        for (std::size_t k = 0; k < entries.size(); ++k) {
            const auto& e = entries[k];
            os << format_number(e.p) << ',' << format_number(e.distance) << ',' << format_number(e.sample.max_v_norm)
               << ',' << e.sample.states.size() << '\n';
            save_attractor_sample(dir / ("sample_" + std::to_string(k)), e.sample);
        }
        nlohmann::ordered_json manifest;
        manifest["command"] = "attractor";
        manifest["lambda"] = s.lambda;
        manifest["transient_time"] = config.transient_time;
        manifest["seed"] = config.seed;
        auto list = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < entries.size(); ++k) {
            list.push_back({{"p", entries[k].p},
                            {"distance", entries[k].distance},
                            {"directory", "sample_" + std::to_string(k)}});
        }
        manifest["samples"] = std::move(list);
        auto ms = open_out(dir / "manifest.json");
        ms << manifest.dump(2) << '\n';
        out << "attractor: " << entries.size() << " samples -> " << (dir / "distances.csv").string() << '\n';
        return kExitOk;
    });
}

int cmd_verify_bounds(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (config.count < 1) throw ConfigError("verify-bounds needs count >= 1");
        const auto tartar = tartar_fuzz(config.seed, config.count);
        const auto ghid = ghidaglia_fuzz(config.seed, config.ghidaglia_count);
        out << "tartar: samples=" << tartar.count << " violations=" << tartar.violations
            << " min_gap=" << format_number(tartar.min_gap) << '\n';
        out << "ghidaglia: triples=" << ghid.count << " violations=" << ghid.violations
            << " max_rel_excess=" << format_number(ghid.max_rel_excess) << '\n';
        int code = kExitOk;
        if (tartar.violations > 0) {
            const auto& v = *tartar.first_violation;
            err << "tartar violation: p=" << format_number(v.p) << " xi=(";
            for (std::size_t i = 0; i < v.xi.size(); ++i) err << (i ? "," : "") << format_number(v.xi[i]);
            err << ") eta=(";
            for (std::size_t i = 0; i < v.eta.size(); ++i) err << (i ? "," : "") << format_number(v.eta[i]);
            err << ") lhs=" << format_number(tartar.first_violation_gap->lhs)
                << " rhs=" << format_number(tartar.first_violation_gap->rhs) << '\n';
            code = kExitViolation;
        }
        if (ghid.violations > 0) {
            const auto& g = *ghid.first_violation;
            err << "ghidaglia violation: gamma=" << format_number(g.gamma) << " delta=" << format_number(g.delta)
                << " p=" << format_number(g.p) << " t=" << format_number(ghid.first_violation_t) << '\n';
            code = kExitViolation;
        }
        out << (code == kExitOk ? "PASS" : "FAIL") << '\n';
        return code;
    });
}

int run_command(const std::string& name, const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
    if (name == "evolve") return cmd_evolve(config, out, err);
    if (name == "semigroup-continuity") return cmd_semigroup_continuity(config, out, err);
    if (name == "equilibrium-sweep") return cmd_equilibrium_sweep(config, out, err);
    if (name == "attractor") return cmd_attractor(config, out, err);
    if (name == "verify-bounds") return cmd_verify_bounds(config, out, err);
    err << "config error: unknown command '" << name << "'\n";
    return kExitConfig;
}

}  // namespace plap::cli
