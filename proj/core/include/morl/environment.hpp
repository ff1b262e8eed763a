#ifndef MORL_ENVIRONMENT_HPP
#define MORL_ENVIRONMENT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "morl/objective.hpp"
#include "morl/policy.hpp"
#include "morl/rng.hpp"
#include "morl/trajectory.hpp"

namespace morl {

/// How one objective component relates to the raw metric behind it:
/// objective = offset + (negated ? -scale * raw : scale * raw).
/// Reporting inverts the map so minimization metrics (steps, lengths) come
/// back out in their natural units.
struct ObjectiveChannel {
    std::string name;
    bool negated = false;
    double offset = 0.0;
    double scale = 1.0;

    double to_raw(double objective_value) const {
        return negated ? (offset - objective_value) / scale : (objective_value - offset) / scale;
    }
};

using OrientationMap = std::vector<ObjectiveChannel>;

/// A small multi-objective environment. Rewards are vectors of K components,
/// each bounded in [0, r_max] after orientation. Contexts are the initial
/// conditions a training batch samples from (start states, query ids).
///
/// Environments are value types: clone() gives an independent instance, and
/// any internal statistics (e.g. running averages) mutate only through
/// step() on the owning instance.
class MOEnvironment {
public:
    virtual ~MOEnvironment() = default;

    virtual int num_objectives() const = 0;
    virtual int num_states() const = 0;
    virtual int num_actions() const = 0;
    virtual int horizon() const = 0;
    virtual int num_contexts() const = 0;
    virtual const OrientationMap& orientation() const = 0;

    virtual int reset(int context) = 0;

    struct StepResult {
        int next_state = 0;
        ObjectiveVector reward;
        bool done = false;
    };
    /// Advances one step. `rng` feeds any reward/transition stochasticity;
    /// deterministic environments ignore it.
    virtual StepResult step(int state, int action, Rng& rng) = 0;

    /// Componentwise minimum achievable episode objective, used to place the
    /// default hypervolume reference point just below it.
    virtual ObjectiveVector min_achievable() const = 0;

    /// Episode-level objective vector for evaluation. Defaults to the
    /// undiscounted per-objective return.
    virtual ObjectiveVector episode_objectives(const Trajectory& traj) const;

    virtual std::unique_ptr<MOEnvironment> clone() const = 0;

    // --- optional capabilities ---

    /// Explicit transition model for exact-gradient oracles.
    struct Transition {
        double prob = 1.0;
        int next_state = 0;
        ObjectiveVector mean_reward;
        bool done = false;
    };
    virtual bool has_model() const { return false; }
    virtual std::vector<Transition> transitions(int state, int action) const;

    /// Ground-truth non-dominated set of expected episode objectives over
    /// deterministic stationary policies (averaged over contexts). Throws
    /// std::invalid_argument when enumeration would exceed `cap` policies.
    virtual std::vector<ObjectiveVector> enumerate_front(long cap) const;

    /// All episode objective vectors achievable from one context (the
    /// per-episode oracle for dominance-consistency checks).
    virtual std::vector<ObjectiveVector> enumerate_context_outcomes(int context, long cap) const;
};

/// Samples one on-policy episode. Fully determined by (policy, env state,
/// rng state); greedy mode takes argmax actions instead of sampling.
Trajectory sample_trajectory(const SoftmaxPolicy& policy, MOEnvironment& env, int context,
                             Rng& rng, bool greedy = false);

/// Fixed list of seeded evaluation episodes: contexts cycle round-robin and
/// each episode owns a fixed action-sampling seed, so evaluation is a
/// deterministic function of the policy.
struct EvaluationSet {
    struct Episode {
        int context = 0;
        std::uint64_t seed = 0;
    };
    std::vector<Episode> episodes;
    bool greedy = false;
};

EvaluationSet make_evaluation_set(const MOEnvironment& env, int episode_count, std::uint64_t seed,
                                  bool greedy = false);

/// Mean episode objective vector over the evaluation set. Runs on a clone of
/// `env`, so evaluation never disturbs training-side environment state.
ObjectiveVector evaluate(const SoftmaxPolicy& policy, const MOEnvironment& env,
                         const EvaluationSet& eval_set);

}  // namespace morl

#endif  // MORL_ENVIRONMENT_HPP
