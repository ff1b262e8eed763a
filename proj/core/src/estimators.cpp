#include "morl/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "morl/vec.hpp"

namespace morl {

void ParameterMask::apply(std::span<double> grad) const {
    if (!range) return;
    const auto [lo, hi] = *range;
    if (lo < 0 || hi < lo || hi > static_cast<long>(grad.size()))
        throw std::invalid_argument("ParameterMask: range out of bounds");
    for (long i = 0; i < lo; ++i) grad[static_cast<std::size_t>(i)] = 0.0;
    for (long i = hi; i < static_cast<long>(grad.size()); ++i) grad[static_cast<std::size_t>(i)] = 0.0;
}

std::vector<std::vector<double>> returns_per_objective(const Trajectory& traj, double gamma) {
    if (!(gamma > 0.0) || gamma > 1.0)
        throw std::invalid_argument("returns_per_objective: gamma must lie in (0, 1]");
    if (traj.steps.empty()) throw std::invalid_argument("returns_per_objective: empty trajectory");
    const std::size_t k = traj.steps.front().reward.size();
    const std::size_t len = traj.steps.size();
    std::vector<std::vector<double>> g(k, std::vector<double>(len, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        double acc = 0.0;
        for (std::size_t t = len; t-- > 0;) {
            if (traj.steps[t].reward.size() != k)
                throw std::invalid_argument("returns_per_objective: ragged reward vectors");
            acc = traj.steps[t].reward[i] + gamma * acc;
            g[i][t] = acc;
        }
    }
    return g;
}

double scalar_return(const Trajectory& traj, const WeightVector& w, double gamma) {
    double acc = 0.0;
    for (std::size_t t = traj.steps.size(); t-- > 0;)
        acc = scalarize(w, traj.steps[t].reward) + gamma * acc;
    return acc;
}

namespace {

long total_trajectories(std::span<const RolloutGroup> groups) {
    long n = 0;
    for (const auto& g : groups) n += static_cast<long>(g.trajectories.size());
    if (n == 0) throw std::invalid_argument("estimator: no trajectories");
    return n;
}

}  // namespace

std::vector<double> reinforce_gradient(const SoftmaxPolicy& policy,
                                       std::span<const RolloutGroup> groups,
                                       const WeightVector& w, double gamma) {
    const long n = total_trajectories(groups);
    std::vector<double> grad(static_cast<std::size_t>(policy.param_count()), 0.0);
    for (const auto& group : groups) {
        for (const auto& traj : group.trajectories) {
            if (traj.steps.empty()) continue;
            // Reward-to-go of per-step scalarized rewards.
            double acc = 0.0;
            std::vector<double> to_go(traj.steps.size());
            for (std::size_t t = traj.steps.size(); t-- > 0;) {
                acc = scalarize(w, traj.steps[t].reward) + gamma * acc;
                to_go[t] = acc;
            }
            for (std::size_t t = 0; t < traj.steps.size(); ++t)
                policy.accumulate_log_prob_grad(traj.steps[t].state, traj.steps[t].action, to_go[t],
                                                grad);
        }
    }
    scale(1.0 / static_cast<double>(n), grad);
    return grad;
}

std::vector<std::vector<double>> per_objective_gradients(const SoftmaxPolicy& policy,
                                                         std::span<const RolloutGroup> groups,
                                                         double gamma,
                                                         const ParameterMask& mask) {
    const long n = total_trajectories(groups);
    std::size_t k = 0;
    for (const auto& g : groups)
        for (const auto& t : g.trajectories)
            if (!t.steps.empty()) k = t.steps.front().reward.size();
    if (k == 0) throw std::invalid_argument("per_objective_gradients: no reward data");

    std::vector<std::vector<double>> grads(
        k, std::vector<double>(static_cast<std::size_t>(policy.param_count()), 0.0));
    for (const auto& group : groups) {
        for (const auto& traj : group.trajectories) {
            if (traj.steps.empty()) continue;
            const auto to_go = returns_per_objective(traj, gamma);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t t = 0; t < traj.steps.size(); ++t)
                    policy.accumulate_log_prob_grad(traj.steps[t].state, traj.steps[t].action,
                                                    to_go[i][t], grads[i]);
        }
    }
    for (auto& g : grads) {
        scale(1.0 / static_cast<double>(n), g);
        mask.apply(g);
    }
    return grads;
}

std::vector<double> rloo_advantages(const std::vector<double>& scalar_rewards) {
    const std::size_t g = scalar_rewards.size();
    if (g < 2) throw std::invalid_argument("rloo_advantages: need a group of at least 2");
    double total = 0.0;
    for (double r : scalar_rewards) total += r;
    std::vector<double> out(g);
    for (std::size_t i = 0; i < g; ++i)
        out[i] = scalar_rewards[i] - (total - scalar_rewards[i]) / static_cast<double>(g - 1);
    return out;
}

std::vector<double> grpo_advantages(const std::vector<double>& scalar_rewards) {
    const std::size_t g = scalar_rewards.size();
    if (g < 2) throw std::invalid_argument("grpo_advantages: need a group of at least 2");
    double mean = 0.0;
    for (double r : scalar_rewards) mean += r;
    mean /= static_cast<double>(g);
    double var = 0.0;
    for (double r : scalar_rewards) var += (r - mean) * (r - mean);
    var /= static_cast<double>(g);
    std::vector<double> out(g, 0.0);
    if (var == 0.0) return out;  // constant group carries no signal
    const double inv_std = 1.0 / std::sqrt(var);
    for (std::size_t i = 0; i < g; ++i) out[i] = (scalar_rewards[i] - mean) * inv_std;
    return out;
}

double surrogate_coefficient(double advantage, double ratio, const ClipConfig& clip) {
    if (!clip.enabled) return ratio * advantage;
    if (!(clip.epsilon > 0.0) || !(clip.dual_clip_c > 1.0))
        throw std::invalid_argument("surrogate_coefficient: require epsilon > 0 and c > 1");
    const double clipped_ratio =
        std::clamp(ratio, 1.0 - clip.epsilon, 1.0 + clip.epsilon);
    const double unclipped = ratio * advantage;
    const double clipped = clipped_ratio * advantage;
    const double m = std::min(unclipped, clipped);
    if (advantage < 0.0 && clip.dual_clip_c * advantage > m) return 0.0;  // dual clip floor
    // Gradient flows only through the unclipped branch; ties resolve to it.
    return unclipped <= clipped ? ratio * advantage : 0.0;
}

std::vector<double> advantage_gradient(const SoftmaxPolicy& policy,
                                       std::span<const RolloutGroup> groups,
                                       std::span<const std::vector<double>> group_advantages,
                                       const ClipConfig& clip) {
    if (groups.size() != group_advantages.size())
        throw std::invalid_argument("advantage_gradient: group count mismatch");
    const long n = total_trajectories(groups);
    std::vector<double> grad(static_cast<std::size_t>(policy.param_count()), 0.0);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const auto& group = groups[gi];
        const auto& advantages = group_advantages[gi];
        if (advantages.size() != group.trajectories.size())
            throw std::invalid_argument("advantage_gradient: advantage count mismatch");
        for (std::size_t i = 0; i < group.trajectories.size(); ++i) {
            const double coef = surrogate_coefficient(advantages[i], 1.0, clip);
            if (coef == 0.0) continue;
            for (const auto& s : group.trajectories[i].steps)
                policy.accumulate_log_prob_grad(s.state, s.action, coef, grad);
        }
    }
    scale(1.0 / static_cast<double>(n), grad);
    return grad;
}

SoftmaxPolicy policy_update(const SoftmaxPolicy& policy, std::span<const double> gradient,
                            double lr, double max_grad_norm) {
    if (static_cast<int>(gradient.size()) != policy.param_count())
        throw std::invalid_argument("policy_update: gradient dimension mismatch");
    if (!(lr >= 0.0)) throw std::invalid_argument("policy_update: lr must be >= 0");
    if (!(max_grad_norm > 0.0)) throw std::invalid_argument("policy_update: norm cap must be > 0");
    for (double x : gradient)
        if (!std::isfinite(x)) throw std::runtime_error("policy_update: non-finite gradient");
    const double n = norm2(gradient);
    const double factor = n > max_grad_norm ? max_grad_norm / n : 1.0;
    std::vector<double> theta = policy.theta();
    for (std::size_t i = 0; i < theta.size(); ++i) theta[i] += lr * factor * gradient[i];
    SoftmaxPolicy next = policy;
    next.set_theta(std::move(theta));
    return next;
}

}  // namespace morl
