#include "plap/random.hpp"

#include <vector>

namespace plap {

GridFunction random_grid_function(const Mesh1D& mesh, std::uint64_t seed, double amplitude) {
    Rng rng(seed);
    std::vector<double> v(mesh.size());
    for (double& x : v) x = rng.uniform(-amplitude, amplitude);
    return GridFunction(mesh, std::move(v));
}

}  // namespace plap
