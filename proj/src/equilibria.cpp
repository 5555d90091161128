#include "plap/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "plap/evolution.hpp"
#include "plap/random.hpp"
#include "plap/spectral.hpp"
#include "plap/tridiag.hpp"

namespace plap {

namespace {

class EnergyMinimizer {
public:
    explicit EnergyMinimizer(const ProblemParams& params)
        : params_(params),
          n_(params.mesh().size()),
          h_(params.mesh().spacing()),
          faces_(n_ + 1),
          grad_(n_),
          trial_grad_(n_),
          diag_(n_),
          off_(n_ - 1),
          shifted_(n_),
          rhs_(n_),
          dir_(n_),
          trial_(n_) {}

    double energy(std::span<const double> v) {
        const auto g = params_.g().values();
        double v2 = 0.0, gv = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            v2 += v[i] * v[i];
            gv += g[i] * v[i];
        }
        return kernel::energy_jp(v, h_, params_.p(), faces_) - 0.5 * params_.lambda() * h_ * v2 - h_ * gv;
    }

    double gradient(std::span<const double> v, std::vector<double>& out) {
        const auto g = params_.g().values();
        kernel::apply_ap(v, h_, params_.p(), faces_, out);
        for (std::size_t i = 0; i < n_; ++i) out[i] -= params_.lambda() * v[i] + g[i];
        return std::sqrt(h_ * kernel::dot(out, out));
    }

    // Returns iteration count; v holds the critical point.
    int run(std::vector<double>& v, double tol, int max_iters) {
        double e = energy(v);
        double r = gradient(v, grad_);
        double mu = 0.0;
        for (int it = 0; it < max_iters; ++it) {
            if (!std::isfinite(e) || !std::isfinite(r)) throw SolverError("equilibrium: non-finite energy", r);
            if (r <= tol) return it;
            newton_direction(v, mu);
            if (!line_search(v, e, r)) {
                // Steepest descent fallback.
                for (std::size_t i = 0; i < n_; ++i) dir_[i] = -grad_[i];
                if (!line_search(v, e, r)) throw SolverError("equilibrium: line search failed", r);
                mu = std::max(mu, 1.0) * 10.0;
            } else {
                mu *= 0.1;
            }
        }
        if (r <= tol) return max_iters;
        std::ostringstream msg;
        msg << "equilibrium: no convergence in " << max_iters << " iterations (residual " << r << ", tolerance " << tol
            << ")";
        throw SolverError(msg.str(), r);
    }

private:
    // Solves (H + mu I) d = -grad with mu raised until the shifted Hessian is
    // positive definite.
    void newton_direction(std::span<const double> v, double& mu) {
        kernel::jacobian_ap(v, h_, params_.p(), faces_, diag_, off_);
        double scale = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            diag_[i] -= params_.lambda();
            scale = std::max(scale, std::abs(diag_[i]));
            rhs_[i] = -grad_[i];
        }
        for (int attempt = 0; attempt < 80; ++attempt) {
            for (std::size_t i = 0; i < n_; ++i) shifted_[i] = diag_[i] + mu;
            if (tridiag::solve_spd(shifted_, off_, rhs_, dir_)) return;
            mu = mu == 0.0 ? 1e-8 * std::max(scale, 1.0) : 4.0 * mu;
        }
        for (std::size_t i = 0; i < n_; ++i) dir_[i] = -grad_[i];
    }

    bool line_search(std::vector<double>& v, double& e, double& r) {
        const double slope = h_ * kernel::dot(grad_, dir_);
        if (!(slope < 0.0)) return false;
        double alpha = 1.0;
        for (int ls = 0; ls < 60; ++ls, alpha *= 0.5) {
            for (std::size_t i = 0; i < n_; ++i) trial_[i] = v[i] + alpha * dir_[i];
            const double e_trial = energy(trial_);
            if (!std::isfinite(e_trial)) continue;
            const double r_trial = gradient(trial_, trial_grad_);
            const bool armijo = e_trial <= e + 1e-4 * alpha * slope;
            // Near a minimiser E~ is flat to round-off; accept residual
            // decrease there.
            const bool flat = std::abs(e_trial - e) <= 1e-13 * std::max(1.0, std::abs(e)) && r_trial < r;
            if (armijo || flat) {
                v.swap(trial_);
                grad_.swap(trial_grad_);
                e = e_trial;
                r = r_trial;
                return true;
            }
        }
        return false;
    }

    const ProblemParams& params_;
    std::size_t n_;
    double h_;
    std::vector<double> faces_, grad_, trial_grad_, diag_, off_, shifted_, rhs_, dir_, trial_;
};

EquilibriumResult finish(const ProblemParams& params, GridFunction state, int iterations) {
    const double residual = norm_l2(grad_tilde_Ep(state, params));
    const double energy = energy_tilde_Ep(state, params);
    return {std::move(state), residual, iterations, energy};
}

}  // namespace

EquilibriumResult solve_equilibrium_2(const ProblemParams& params) {
    if (params.p() != 2.0) throw DomainError("solve_equilibrium_2: requires p = 2");
    const Mesh1D& mesh = params.mesh();
    const double lam = params.lambda();
    const SpectralBasis basis(mesh);
    for (std::size_t j = 1; j <= basis.size(); ++j) {
        if (std::abs(lam - basis.eigenvalue(j)) <= 1e-10 * std::max(1.0, std::abs(lam))) {
            std::ostringstream msg;
            msg << "solve_equilibrium_2: lambda = " << lam << " is resonant with lambda_" << j << " = "
                << basis.eigenvalue(j) << "; no equilibrium (A_2 - lambda singular)";
            throw ResonanceError(msg.str());
        }
    }
    const std::size_t n = mesh.size();
    const double inv_h2 = 1.0 / (mesh.spacing() * mesh.spacing());
    std::vector<double> diag(n, 2.0 * inv_h2 - lam), off(n - 1, -inv_h2), x(n);
    if (!tridiag::solve_general(off, diag, off, params.g().values(), x)) {
        throw ResonanceError("solve_equilibrium_2: A_2 - lambda numerically singular");
    }
    return finish(params, GridFunction(mesh, std::move(x)), 1);
}

EquilibriumResult solve_equilibrium_p(const ProblemParams& params, const GridFunction& initial_guess, double tol,
                                      const EquilibriumOptions& options) {
    if (!(params.p() > 2.0)) throw DomainError("solve_equilibrium_p: requires p > 2");
    if (!(tol > 0.0)) throw DomainError("solve_equilibrium_p: tolerance must be positive");
    require_same_mesh(initial_guess.mesh(), params.mesh(), "solve_equilibrium_p");

    std::vector<GridFunction> starts{initial_guess};
    if (params.lambda() > 0.0) {
        const double amp = std::max(1.0, norm_l2(initial_guess));
        Rng seeds(options.seed);
        for (int k = 1; k < options.restarts; ++k) starts.push_back(random_grid_function(params.mesh(), seeds.next(), amp));
    }

    EnergyMinimizer minimizer(params);
    std::optional<EquilibriumResult> best;
    std::optional<SolverError> last_error;
    for (const auto& start : starts) {
        std::vector<double> v(start.values().begin(), start.values().end());
        try {
            const int iters = minimizer.run(v, tol, options.max_iters);
            auto res = finish(params, GridFunction(params.mesh(), std::move(v)), iters);
            if (!best || res.energy < best->energy) best = std::move(res);
        } catch (const SolverError& e) {
            last_error = e;
        }
    }
    if (!best) throw *last_error;
    return std::move(*best);
}

std::vector<SweepEntry> sweep_equilibrium_continuity(const std::vector<double>& p_list,
                                                     const ProblemParams& params_base, double tol,
                                                     const EquilibriumOptions& options) {
    const SpectralBasis basis(params_base.mesh());
    if (!(params_base.lambda() < basis.eigenvalue(1))) {
        throw DomainError("sweep_equilibrium_continuity: requires lambda < lambda_1");
    }
    for (std::size_t k = 0; k < p_list.size(); ++k) {
        if (!(p_list[k] > 2.0) || (k > 0 && !(p_list[k] < p_list[k - 1]))) {
            throw DomainError("sweep_equilibrium_continuity: p_list must be strictly decreasing and > 2");
        }
    }
    const auto u2 = solve_equilibrium_2(params_base.with_p(2.0));
    std::vector<SweepEntry> out;
    GridFunction warm = u2.state;
    for (double p : p_list) {
        auto res = solve_equilibrium_p(params_base.with_p(p), warm, tol, options);
        const GridFunction diff = res.state - u2.state;
        out.push_back({p, norm_V_p(diff, 2.0), norm_V_p(diff, p), res.residual, res.iterations, res.state});
        warm = res.state;
    }
    return out;
}

}  // namespace plap
