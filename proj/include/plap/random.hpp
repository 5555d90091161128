// Seeded, platform-independent random draws (std::mt19937_64 is fully
// specified; the standard distributions are not, so the mapping to [a, b)
// is done here).
#pragma once

#include <cstdint>
#include <random>

#include "plap/grid.hpp"

namespace plap {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) from the top 53 bits.
    double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) noexcept { return a + (b - a) * uniform(); }
    std::uint64_t next() noexcept { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Nodal values uniform in [-amplitude, amplitude).
GridFunction random_grid_function(const Mesh1D& mesh, std::uint64_t seed, double amplitude = 1.0);

}  // namespace plap
