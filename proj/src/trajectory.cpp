#include "plap/trajectory.hpp"

#include <cmath>
#include <sstream>

namespace plap {

void Trajectory::append(double t, GridFunction state) {
    require_same_mesh(state.mesh(), params_.mesh(), "Trajectory::append");
    if (!std::isfinite(t) || (!samples_.empty() && !(t > samples_.back().t))) {
        std::ostringstream msg;
        msg << "Trajectory: sample time " << t << " does not increase";
        throw DomainError(msg.str());
    }
    samples_.push_back({t, std::move(state)});
}

}  // namespace plap
