#ifndef MORL_ENVS_HPP
#define MORL_ENVS_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "morl/environment.hpp"

namespace morl {

/// Gridworld with treasures of increasing value at increasing depth. Two
/// objectives: value of the treasure collected, and time saved, an affine
/// map of the negated step count (time_bonus_per_step * (horizon - steps))
/// so rewards stay non-negative. The default grid's front is non-convex,
/// which the enumeration certificate in the test suite checks rather than
/// assumes. Episodes start from one of `starts` (the batch contexts).
struct DeepSeaTreasureConfig {
    std::vector<int> depths = {1, 2, 3, 3};          // per-column treasure depth, non-decreasing
    std::vector<double> values = {2.0, 3.0, 4.0, 8.0};
    int horizon = 8;
    double time_bonus_per_step = 0.5;
    std::vector<std::pair<int, int>> starts = {{0, 0}, {0, 1}, {0, 2}};  // (row, col)
};

std::unique_ptr<MOEnvironment> make_deep_sea_treasure(const DeepSeaTreasureConfig& config);

/// Horizon-1 environment with one state; each action is an arm paying a
/// deterministic reward vector or independent Bernoulli components. The
/// smallest testbed with closed-form J and gradients.
struct MoBanditConfig {
    enum class Kind { deterministic, bernoulli };
    Kind kind = Kind::deterministic;
    std::vector<ObjectiveVector> arms;  // reward vectors, or success probabilities
};

std::unique_ptr<MOEnvironment> make_mo_bandit(const MoBanditConfig& config);

/// One-step analog of a verifiable-reward text task. Each action is a
/// solution template with a length, a step-marker flag, and a per-context
/// correctness bit. Training rewards are 0/1 per objective: exact-match
/// accuracy, length at or below the running average of previously sampled
/// responses, and step-marker presence. Evaluation reports accuracy,
/// negated raw length, and clarity.
struct SyntheticReasoningConfig {
    struct Template {
        int length = 0;
        bool has_steps = false;
        std::vector<int> correct_contexts;  // context ids where this template is correct
    };
    int num_contexts = 2;
    std::vector<Template> templates;
    double initial_avg_length = -1.0;  // < 0 selects the mean template length
};

SyntheticReasoningConfig default_synthetic_reasoning_config();

std::unique_ptr<MOEnvironment> make_synthetic_reasoning(const SyntheticReasoningConfig& config);

/// Ground-truth Pareto front of an environment by exhaustive enumeration of
/// deterministic stationary policies, up to `cap` enumerated policies.
std::vector<ObjectiveVector> true_pareto_front(const MOEnvironment& env, long cap = 2'000'000);

/// Default hypervolume reference for an environment: the componentwise
/// minimum achievable objective minus a small margin.
ObjectiveVector default_reference(const MOEnvironment& env, double margin = 1e-6);

}  // namespace morl

#endif  // MORL_ENVS_HPP
