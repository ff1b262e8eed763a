#ifndef MORL_POLICY_HPP
#define MORL_POLICY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morl/rng.hpp"

namespace morl {

/// Differentiable softmax policy over a finite state/action space.
///
/// Tabular parameterization stores one logit per (state, action) pair; the
/// linear parameterization computes logits as W * phi(state) from a fixed
/// per-state feature table (tabular is the one-hot special case and keeps the
/// fast path). Policies are immutable values; updates produce new policies.
class SoftmaxPolicy {
public:
    /// Tabular policy with all logits zero (uniform action distribution).
    static SoftmaxPolicy tabular(int num_states, int num_actions);

    /// Linear-feature policy; `features[s]` is the feature vector of state s.
    static SoftmaxPolicy linear(std::vector<std::vector<double>> features, int num_actions);

    int num_states() const { return num_states_; }
    int num_actions() const { return num_actions_; }
    int param_count() const { return static_cast<int>(theta_.size()); }

    const std::vector<double>& theta() const { return theta_; }
    void set_theta(std::vector<double> theta);

    /// Action probabilities at a state; sums to 1 within 1e-12.
    std::vector<double> action_probs(int state) const;

    double log_prob(int state, int action) const;

    /// Accumulates coef * d/dtheta log pi(action | state) into grad.
    void accumulate_log_prob_grad(int state, int action, double coef,
                                  std::span<double> grad) const;

    int sample_action(int state, Rng& rng) const;

    /// Deterministic argmax action (lowest index wins ties).
    int greedy_action(int state) const;

    /// Checkpoint round-trip. The JSON carries theta, the space descriptors,
    /// feature table when present, and the training step that produced it.
    std::string to_json(long step) const;
    struct Checkpoint {
        SoftmaxPolicy policy;
        long step = 0;
    };
    static Checkpoint from_json(const std::string& text);

private:
    SoftmaxPolicy() = default;

    std::vector<double> logits(int state) const;

    int num_states_ = 0;
    int num_actions_ = 0;
    std::vector<double> theta_;
    // Empty for tabular policies; otherwise num_states rows of equal length.
    std::vector<std::vector<double>> features_;
};

/// Exact sum over states of weight(s) * KL(p(.|s) || q(.|s)). Softmax
/// strict positivity keeps every term finite.
double policy_kl(const SoftmaxPolicy& p, const SoftmaxPolicy& q,
                 std::span<const double> state_weights);

}  // namespace morl

#endif  // MORL_POLICY_HPP
