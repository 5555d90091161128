#include "plap/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "plap/tridiag.hpp"

namespace plap {

namespace {

// Scratch-owning implicit stepper; one per evolve call.
class ImplicitStepper {
public:
    ImplicitStepper(const ProblemParams& params, const SolverConfig& cfg)
        : params_(params),
          cfg_(cfg),
          n_(params.mesh().size()),
          h_(params.mesh().spacing()),
          linear_(params.p() - 2.0 < kLinearSwitch),
          faces_(n_ + 1),
          diag_(n_),
          off_(n_ - 1),
          rhs_(n_),
          res_(n_),
          dir_(n_),
          trial_(n_),
          ap_(n_),
          scratch_(n_) {}

    // Overwrites v with the step from u.
    void step(std::span<const double> u, std::vector<double>& v, double tau) {
        if (linear_) {
            linear_step(u, v, tau);
        } else {
            newton_step(u, v, tau);
        }
    }

private:
    void linear_step(std::span<const double> u, std::vector<double>& v, double tau) {
        const double lam = params_.lambda();
        const double inv_h2 = 1.0 / (h_ * h_);
        const auto g = params_.g().values();
        std::fill(diag_.begin(), diag_.end(), 1.0 - tau * lam + 2.0 * tau * inv_h2);
        std::fill(off_.begin(), off_.end(), -tau * inv_h2);
        for (std::size_t i = 0; i < n_; ++i) rhs_[i] = u[i] + tau * g[i];
        v.resize(n_);
        if (!tridiag::solve_spd(diag_, off_, rhs_, v)) {
            throw SolverError("implicit step: linear system not positive definite", NAN);
        }
    }

    // F(v) = v - u + tau (A_p v - lambda v - g); returns norm_l2(F).
    double residual(std::span<const double> u, std::span<const double> v, double tau, std::vector<double>& out) {
        const double lam = params_.lambda();
        const auto g = params_.g().values();
        kernel::apply_ap(v, h_, params_.p(), faces_, ap_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = v[i] - u[i] + tau * (ap_[i] - lam * v[i] - g[i]);
        return std::sqrt(h_ * kernel::dot(out, out));
    }

    double objective(std::span<const double> u, std::span<const double> v, double tau) {
        const auto g = params_.g().values();
        double dist2 = 0.0, v2 = 0.0, gv = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            const double d = v[i] - u[i];
            dist2 += d * d;
            v2 += v[i] * v[i];
            gv += g[i] * v[i];
        }
        const double jp = kernel::energy_jp(v, h_, params_.p(), faces_);
        return 0.5 * h_ * dist2 + tau * (jp - 0.5 * params_.lambda() * h_ * v2 - h_ * gv);
    }

    void newton_step(std::span<const double> u, std::vector<double>& v, double tau) {
        const double tol = cfg_.newton_tol * (1.0 + std::sqrt(h_ * kernel::dot(u, u)));
        const double shift = 1.0 - tau * params_.lambda();
        double r = residual(u, v, tau, res_);
        for (int it = 0; it < cfg_.max_newton_iters; ++it) {
            if (!std::isfinite(r)) throw SolverError("implicit step: non-finite residual", r);
            if (r <= tol) return;
            kernel::jacobian_ap(v, h_, params_.p(), faces_, diag_, off_);
            for (std::size_t i = 0; i < n_; ++i) {
                diag_[i] = shift + tau * diag_[i];
                rhs_[i] = -res_[i];
            }
            for (double& o : off_) o *= tau;
            if (!tridiag::solve_spd(diag_, off_, rhs_, dir_)) {
                throw SolverError("implicit step: Jacobian not positive definite", r);
            }
            // Damped update: sufficient decrease of the proximal objective,
            // or of the residual once the objective is flat to round-off.
            const double phi0 = objective(u, v, tau);
            const double slope = h_ * kernel::dot(res_, dir_);
            double alpha = 1.0;
            bool accepted = false;
            for (int ls = 0; ls < 60; ++ls, alpha *= 0.5) {
                for (std::size_t i = 0; i < n_; ++i) trial_[i] = v[i] + alpha * dir_[i];
                const double phi = objective(u, trial_, tau);
                const double r_trial = residual(u, trial_, tau, scratch_);
                if (!std::isfinite(phi) || !std::isfinite(r_trial)) continue;
                if (phi <= phi0 + 1e-4 * alpha * slope || r_trial < (1.0 - 1e-4 * alpha) * r) {
                    accepted = true;
                    r = r_trial;
                    break;
                }
            }
            if (!accepted) throw SolverError("implicit step: line search failed", r);
            v.swap(trial_);
            res_.swap(scratch_);
        }
        if (r <= tol) return;
        std::ostringstream msg;
        msg << "implicit step: Newton did not converge in " << cfg_.max_newton_iters << " iterations (residual " << r
            << ", tolerance " << tol << ")";
        throw SolverError(msg.str(), r);
    }

    const ProblemParams& params_;
    const SolverConfig& cfg_;
    std::size_t n_;
    double h_;
    bool linear_;
    std::vector<double> faces_, diag_, off_, rhs_, res_, dir_, trial_, ap_, scratch_;
};

long long step_count(const SolverConfig& cfg) {
    if (cfg.t_final == 0.0) return 0;
    auto steps = static_cast<long long>(std::ceil(cfg.t_final / cfg.tau));
    if (steps > 1 && static_cast<double>(steps - 1) * cfg.tau >= cfg.t_final * (1.0 - 1e-12)) --steps;
    return steps;
}

double step_time(const SolverConfig& cfg, long long k, long long steps) {
    return k == steps ? cfg.t_final : static_cast<double>(k) * cfg.tau;
}

}  // namespace

std::vector<double> recording_times(const SolverConfig& cfg) {
    std::vector<double> times{0.0};
    const long long steps = step_count(cfg);
    for (long long k = 1; k <= steps; ++k) {
        if (k == steps || k % cfg.record_every == 0) times.push_back(step_time(cfg, k, steps));
    }
    return times;
}

void validate(const SolverConfig& cfg, const ProblemParams& params) {
    if (!(cfg.tau > 0.0) || !std::isfinite(cfg.tau)) throw DomainError("SolverConfig: tau must be positive");
    if (!(cfg.t_final >= 0.0) || !std::isfinite(cfg.t_final)) throw DomainError("SolverConfig: t_final must be >= 0");
    if (!(cfg.newton_tol > 0.0)) throw DomainError("SolverConfig: newton_tol must be positive");
    if (cfg.max_newton_iters < 1 || cfg.record_every < 1) {
        throw DomainError("SolverConfig: max_newton_iters and record_every must be positive");
    }
    if (!(cfg.tau * std::max(params.lambda(), 0.0) < 1.0)) {
        throw DomainError("SolverConfig: tau * max(lambda, 0) must be < 1 for a convex implicit step");
    }
}

GridFunction step_backward_euler(const GridFunction& u, const ProblemParams& params, const SolverConfig& cfg) {
    validate(cfg, params);
    require_same_mesh(u.mesh(), params.mesh(), "step_backward_euler");
    ImplicitStepper stepper(params, cfg);
    std::vector<double> v(u.values().begin(), u.values().end());
    stepper.step(u.values(), v, cfg.tau);
    return GridFunction(u.mesh(), std::move(v));
}

Trajectory evolve(const GridFunction& u0, const ProblemParams& params, const SolverConfig& cfg) {
    validate(cfg, params);
    require_same_mesh(u0.mesh(), params.mesh(), "evolve");
    Trajectory traj(params);
    traj.append(0.0, u0);
    if (cfg.t_final == 0.0) return traj;

    const long long steps = step_count(cfg);

    ImplicitStepper stepper(params, cfg);
    std::vector<double> u(u0.values().begin(), u0.values().end());
    std::vector<double> v = u;
    for (long long k = 1; k <= steps; ++k) {
        const double t = step_time(cfg, k, steps);
        double dt = cfg.tau;
        if (k == steps) {
            const double rest = cfg.t_final - static_cast<double>(k - 1) * cfg.tau;
            if (std::abs(rest - cfg.tau) > 1e-9 * cfg.tau) dt = rest;
        }
        try {
            stepper.step(u, v, dt);
        } catch (const SolverError& e) {
            std::ostringstream msg;
            msg << e.what() << " at t = " << t;
            throw SolverError(msg.str(), e.last_residual());
        }
        u = v;
        if (k == steps || k % cfg.record_every == 0) traj.append(t, GridFunction(params.mesh(), u));
    }
    return traj;
}

std::vector<std::pair<double, double>> v_norm_diagnostic(const Trajectory& traj) {
    std::vector<std::pair<double, double>> out;
    out.reserve(traj.size());
    for (const auto& s : traj.samples()) out.emplace_back(s.t, norm_V_p(s.state, traj.params().p()));
    return out;
}

}  // namespace plap
