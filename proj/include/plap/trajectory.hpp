#pragma once

#include <vector>

#include "plap/operators.hpp"

namespace plap {

struct TrajectorySample {
    double t;
    GridFunction state;
};

/// Time-stamped states of one problem; times strictly increasing.
class Trajectory {
public:
    explicit Trajectory(ProblemParams params) : params_(std::move(params)) {}

    /// Throws DomainError on non-increasing time, MeshMismatch on a foreign
    /// state.
    void append(double t, GridFunction state);

    const ProblemParams& params() const noexcept { return params_; }
    const std::vector<TrajectorySample>& samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    bool empty() const noexcept { return samples_.empty(); }
    const TrajectorySample& back() const { return samples_.back(); }
    const TrajectorySample& operator[](std::size_t i) const { return samples_[i]; }

private:
    ProblemParams params_;
    std::vector<TrajectorySample> samples_;
};

}  // namespace plap
