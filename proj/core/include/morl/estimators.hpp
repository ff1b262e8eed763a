#ifndef MORL_ESTIMATORS_HPP
#define MORL_ESTIMATORS_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "morl/environment.hpp"
#include "morl/policy.hpp"
#include "morl/trajectory.hpp"
#include "morl/weighting.hpp"

namespace morl {

/// PPO-style clipping parameters. The defaults (epsilon = c = 100) make the
/// clipped surrogate numerically identical to the unclipped objective for
/// on-policy single-epoch updates, where the importance ratio is exactly 1.
struct ClipConfig {
    double epsilon = 100.0;
    double dual_clip_c = 100.0;
    bool enabled = true;
};

/// Optional contiguous index range [lo, hi) of policy parameters whose
/// gradients participate in influence computation; all other coordinates are
/// zeroed. An unset mask keeps every parameter.
struct ParameterMask {
    std::optional<std::pair<long, long>> range;

    void apply(std::span<double> grad) const;
};

/// Per-objective discounted reward-to-go G^i_t = sum_l gamma^l r^i_{t+l+1},
/// as a K x L matrix. Scalarizing rewards first and weighting returns after
/// commute exactly.
std::vector<std::vector<double>> returns_per_objective(const Trajectory& traj, double gamma);

/// Scalar discounted return of the whole trajectory under weights w.
double scalar_return(const Trajectory& traj, const WeightVector& w, double gamma);

/// Empirical policy gradient: mean over trajectories of
/// sum_t grad log pi(a_t|s_t) * G^w_t, with returns computed from rewards
/// scalarized per step. Linear in w: equals sum_i w_i * per-objective
/// gradient on the same rollouts.
std::vector<double> reinforce_gradient(const SoftmaxPolicy& policy,
                                       std::span<const RolloutGroup> groups,
                                       const WeightVector& w, double gamma);

/// K per-objective gradients from the same trajectories, with the optional
/// parameter mask applied to each.
std::vector<std::vector<double>> per_objective_gradients(const SoftmaxPolicy& policy,
                                                         std::span<const RolloutGroup> groups,
                                                         double gamma,
                                                         const ParameterMask& mask = {});

/// Leave-one-out advantages: a_i = r_i - mean of the other G-1 rewards.
/// Requires G >= 2.
std::vector<double> rloo_advantages(const std::vector<double>& scalar_rewards);

/// Group-normalized advantages: (r_i - mean) / population std. A constant
/// group returns all zeros.
std::vector<double> grpo_advantages(const std::vector<double>& scalar_rewards);

/// Gradient coefficient of the (dual-)clipped surrogate at importance ratio
/// `ratio`. At ratio 1 this is exactly the advantage for any epsilon > 0,
/// c > 1, clipped or not.
double surrogate_coefficient(double advantage, double ratio, const ClipConfig& clip);

/// Policy gradient from per-trajectory advantages (constant coefficient per
/// step), as used by the group-based estimators; ratio is 1 on-policy.
std::vector<double> advantage_gradient(const SoftmaxPolicy& policy,
                                       std::span<const RolloutGroup> groups,
                                       std::span<const std::vector<double>> group_advantages,
                                       const ClipConfig& clip);

/// Ascent step theta' = theta + lr * g with a global L2 norm cap applied to
/// the gradient first. Rejects non-finite gradients.
SoftmaxPolicy policy_update(const SoftmaxPolicy& policy, std::span<const double> gradient,
                            double lr, double max_grad_norm = 1.0);

/// Exact policy gradient of the scalarized objective by enumerating the
/// environment's transition model (requires env.has_model()); the state x
/// action x horizon product must not exceed `cap`.
std::vector<double> exact_gradient_oracle(const SoftmaxPolicy& policy, const MOEnvironment& env,
                                          const WeightVector& w, double gamma,
                                          long cap = 1'000'000);

/// Exact scalarized objective J(theta) over the same enumeration, for
/// finite-difference checks.
double exact_objective(const SoftmaxPolicy& policy, const MOEnvironment& env,
                       const WeightVector& w, double gamma, long cap = 1'000'000);

}  // namespace morl

#endif  // MORL_ESTIMATORS_HPP
