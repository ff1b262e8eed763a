#include <cmath>
#include <stdexcept>
#include <vector>

#include "morl/estimators.hpp"
#include "morl/vec.hpp"

namespace morl {

namespace {

// Exact V(s, t) and grad V(s, t) over the finite-horizon model by backward
// recursion:
//   V(s,t)      = sum_a pi(a|s) [ rbar(s,a) + gamma * sum p(s') V(s',t+1) ]
//   grad V(s,t) = sum_a pi(a|s) [ grad log pi(a|s) Q(s,a,t)
//                                 + gamma * sum p(s') grad V(s',t+1) ]
// which equals the policy gradient with its gamma^t state weighting, so it
// matches central finite differences of V at every gamma.
struct Enumerator {
    const SoftmaxPolicy& policy;
    const MOEnvironment& env;
    const WeightVector& w;
    double gamma;
    int horizon;
    std::vector<std::vector<char>> have_v;
    std::vector<std::vector<double>> v;
    std::vector<std::vector<std::vector<double>>> dv;
    bool want_gradient = false;

    Enumerator(const SoftmaxPolicy& p, const MOEnvironment& e, const WeightVector& weights,
               double g)
        : policy(p), env(e), w(weights), gamma(g), horizon(e.horizon()) {
        const std::size_t s = static_cast<std::size_t>(env.num_states());
        const std::size_t h = static_cast<std::size_t>(horizon);
        have_v.assign(s, std::vector<char>(h, 0));
        v.assign(s, std::vector<double>(h, 0.0));
    }

    double value(int state, int t) {
        if (t >= horizon) return 0.0;
        auto& flag = have_v[static_cast<std::size_t>(state)][static_cast<std::size_t>(t)];
        auto& slot = v[static_cast<std::size_t>(state)][static_cast<std::size_t>(t)];
        if (flag) return slot;
        const auto probs = policy.action_probs(state);
        double total = 0.0;
        for (int a = 0; a < env.num_actions(); ++a) {
            double q = 0.0;
            for (const auto& tr : env.transitions(state, a)) {
                q += tr.prob * scalarize(w, tr.mean_reward);
                if (!tr.done) q += tr.prob * gamma * value(tr.next_state, t + 1);
            }
            total += probs[static_cast<std::size_t>(a)] * q;
        }
        flag = 1;
        slot = total;
        return total;
    }

    const std::vector<double>& gradient(int state, int t) {
        auto& slot = dv[static_cast<std::size_t>(state)][static_cast<std::size_t>(t)];
        if (!slot.empty()) return slot;
        std::vector<double> g(static_cast<std::size_t>(policy.param_count()), 0.0);
        const auto probs = policy.action_probs(state);
        for (int a = 0; a < env.num_actions(); ++a) {
            double q = 0.0;
            const auto transitions = env.transitions(state, a);
            for (const auto& tr : transitions) {
                q += tr.prob * scalarize(w, tr.mean_reward);
                if (!tr.done) q += tr.prob * gamma * value(tr.next_state, t + 1);
            }
            const double pa = probs[static_cast<std::size_t>(a)];
            policy.accumulate_log_prob_grad(state, a, pa * q, g);
            if (t + 1 < horizon)
                for (const auto& tr : transitions)
                    if (!tr.done) axpy(pa * tr.prob * gamma, gradient(tr.next_state, t + 1), g);
        }
        slot = std::move(g);
        return slot;
    }
};

void check_enumerable(const MOEnvironment& env, long cap) {
    if (!env.has_model())
        throw std::invalid_argument("gradient oracle: environment exposes no transition model");
    const long work = static_cast<long>(env.num_states()) * env.num_actions() * env.horizon();
    if (work > cap) throw std::invalid_argument("gradient oracle: enumeration cap exceeded");
}

}  // namespace

double exact_objective(const SoftmaxPolicy& policy, const MOEnvironment& env,
                       const WeightVector& w, double gamma, long cap) {
    check_enumerable(env, cap);
    Enumerator e(policy, env, w, gamma);
    auto scratch = env.clone();
    double j = 0.0;
    for (int c = 0; c < env.num_contexts(); ++c) j += e.value(scratch->reset(c), 0);
    return j / static_cast<double>(env.num_contexts());
}

std::vector<double> exact_gradient_oracle(const SoftmaxPolicy& policy, const MOEnvironment& env,
                                          const WeightVector& w, double gamma, long cap) {
    check_enumerable(env, cap);
    Enumerator e(policy, env, w, gamma);
    const std::size_t s = static_cast<std::size_t>(env.num_states());
    const std::size_t h = static_cast<std::size_t>(env.horizon());
    e.dv.assign(s, std::vector<std::vector<double>>(h));
    auto scratch = env.clone();
    std::vector<double> grad(static_cast<std::size_t>(policy.param_count()), 0.0);
    for (int c = 0; c < env.num_contexts(); ++c)
        axpy(1.0 / static_cast<double>(env.num_contexts()), e.gradient(scratch->reset(c), 0), grad);
    return grad;
}

}  // namespace morl
