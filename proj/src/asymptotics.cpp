#include "plap/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "plap/equilibria.hpp"
#include "plap/parallel.hpp"
#include "plap/random.hpp"

namespace plap {

GridFunction normalized_state(const GridFunction& u) {
    const double nrm = norm_l2(u);
    if (!(nrm > 0.0)) throw DomainError("normalized_state: zero state has no direction");
    return u / nrm;
}

PoincarePoint poincare_project(const GridFunction& u) {
    const double scale = std::hypot(norm_l2(u), 1.0);
    return {u / scale, 1.0 / scale};
}

std::optional<EquatorLimit> detect_equator_limit(const Trajectory& traj, const SpectralBasis& basis,
                                                 const EquatorLimitOptions& options) {
    if (traj.empty()) throw DomainError("detect_equator_limit: empty trajectory");
    require_same_mesh(traj.params().mesh(), basis.mesh(), "detect_equator_limit");
    const double threshold = options.growth_factor * std::max(norm_l2(traj[0].state), 1.0);

    std::size_t first_past = traj.size();
    for (std::size_t i = 0; i < traj.size(); ++i) {
        if (norm_l2(traj[i].state) > threshold) {
            first_past = i;
            break;
        }
    }
    if (first_past == traj.size() || !(norm_l2(traj.back().state) > threshold)) return std::nullopt;
    const std::size_t past = traj.size() - first_past;
    if (past < options.min_samples_past_threshold) {
        std::ostringstream msg;
        msg << "detect_equator_limit: only " << past << " samples past the divergence threshold (need "
            << options.min_samples_past_threshold << ")";
        throw DomainError(msg.str());
    }

    const GridFunction dir = normalized_state(traj.back().state);
    const auto c = basis.coefficients(dir);
    std::size_t k = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (std::abs(c[j]) > options.dominance_fraction) {
            k = j + 1;
            break;
        }
    }
    if (k == 0) {
        const auto it = std::max_element(c.begin(), c.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
        k = static_cast<std::size_t>(it - c.begin()) + 1;
    }
    const GridFunction& phi = basis.eigenvector(k);
    const double residual = std::min(norm_l2(dir - phi), norm_l2(dir + phi));
    return EquatorLimit{k, residual};
}

double hausdorff_semidist(const std::vector<GridFunction>& a, const std::vector<GridFunction>& b) {
    if (a.empty() || b.empty()) throw DomainError("hausdorff_semidist: sets must be nonempty");
    double sup = 0.0;
    for (const auto& x : a) {
        double inf = std::numeric_limits<double>::infinity();
        for (const auto& y : b) inf = std::min(inf, norm_l2(x - y));
        sup = std::max(sup, inf);
    }
    return sup;
}

double dist_to_A2(const GridFunction& u, const SpectralBasis& basis, double lambda,
                  const std::optional<GridFunction>& u2_star) {
    const std::size_t modes = count_N_lambda(lambda, basis);
    if (modes == 0 && !u2_star) throw DomainError("dist_to_A2: empty attractor description");
    double dist = std::numeric_limits<double>::infinity();
    if (modes > 0) {
        std::vector<double> c = basis.coefficients(u);
        std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(modes), 0.0);
        dist = norm_l2(basis.synthesize(c));
    }
    if (u2_star) dist = std::min(dist, norm_l2(u - *u2_star));
    return dist;
}

std::vector<GridFunction> default_ic_net(const SpectralBasis& basis, std::uint64_t seed, std::size_t random_count) {
    std::vector<GridFunction> net;
    const std::size_t modes = std::min<std::size_t>(4, basis.size());
    for (std::size_t j = 1; j <= modes; ++j) {
        for (double c : {0.5, 1.0, 2.0}) {
            net.push_back(c * basis.eigenvector(j));
            net.push_back(-c * basis.eigenvector(j));
        }
    }
    Rng seeds(seed);
    for (std::size_t k = 0; k < random_count; ++k) net.push_back(random_grid_function(basis.mesh(), seeds.next()));
    return net;
}

AttractorSample sample_attractor_p(const ProblemParams& params, const std::vector<GridFunction>& ic_net,
                                   double transient_time, const SolverConfig& cfg, unsigned workers) {
    if (!(params.p() > 2.0)) throw DomainError("sample_attractor_p: requires p > 2");
    if (ic_net.empty()) throw DomainError("sample_attractor_p: empty initial-condition net");
    SolverConfig run = cfg;
    run.t_final = transient_time;
    run.record_every = std::numeric_limits<int>::max();
    auto states = parallel_map(ic_net.size(), workers,
                               [&](std::size_t i) { return evolve(ic_net[i], params, run).back().state; });
    double max_v = 0.0;
    for (const auto& s : states) max_v = std::max(max_v, norm_V_p(s, params.p()));
    return {params, std::move(states), transient_time, max_v};
}

std::vector<SemicontinuityEntry> upper_semicontinuity_experiment(const std::vector<double>& p_list,
                                                                 const ProblemParams& params_base,
                                                                 const std::vector<GridFunction>& ic_net,
                                                                 double transient_time, const SolverConfig& cfg,
                                                                 unsigned workers) {
    const SpectralBasis basis(params_base.mesh());
    const double lambda = params_base.lambda();
    std::optional<GridFunction> u2_star;
    try {
        u2_star = solve_equilibrium_2(params_base.with_p(2.0)).state;
    } catch (const ResonanceError&) {
        u2_star.reset();
    }
    const bool compact = lambda < basis.eigenvalue(1);

    std::vector<SemicontinuityEntry> out;
    for (double p : p_list) {
        auto sample = sample_attractor_p(params_base.with_p(p), ic_net, transient_time, cfg, workers);
        double dist = 0.0;
        if (compact) {
            dist = hausdorff_semidist(sample.states, {*u2_star});
        } else {
            for (const auto& s : sample.states) dist = std::max(dist, dist_to_A2(s, basis, lambda, u2_star));
        }
        out.push_back({p, dist, std::move(sample)});
    }
    return out;
}

}  // namespace plap
