#ifndef MORL_TRAJECTORY_HPP
#define MORL_TRAJECTORY_HPP

#include <vector>

#include "morl/objective.hpp"

namespace morl {

/// One sampled episode: per-step (state, action, reward vector). Step t
/// stores the reward received after taking the action, i.e. r_{t+1}.
struct Trajectory {
    struct Step {
        int state = 0;
        int action = 0;
        ObjectiveVector reward;
    };
    int context = 0;
    std::vector<Step> steps;

    int length() const { return static_cast<int>(steps.size()); }
};

/// G trajectories sampled for one context, the unit over which group-based
/// advantage estimators (leave-one-out, group normalization) operate.
struct RolloutGroup {
    int context = 0;
    std::vector<Trajectory> trajectories;
};

}  // namespace morl

#endif  // MORL_TRAJECTORY_HPP
