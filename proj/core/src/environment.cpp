#include "morl/environment.hpp"

#include <stdexcept>

namespace morl {

ObjectiveVector MOEnvironment::episode_objectives(const Trajectory& traj) const {
    ObjectiveVector total(static_cast<std::size_t>(num_objectives()), 0.0);
    for (const auto& s : traj.steps) {
        require_same_dimension(s.reward, total);
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += s.reward[i];
    }
    return total;
}

std::vector<MOEnvironment::Transition> MOEnvironment::transitions(int, int) const {
    throw std::invalid_argument("environment does not expose a transition model");
}

std::vector<ObjectiveVector> MOEnvironment::enumerate_front(long) const {
    throw std::invalid_argument("environment does not support front enumeration");
}

std::vector<ObjectiveVector> MOEnvironment::enumerate_context_outcomes(int, long) const {
    throw std::invalid_argument("environment does not support outcome enumeration");
}

Trajectory sample_trajectory(const SoftmaxPolicy& policy, MOEnvironment& env, int context,
                             Rng& rng, bool greedy) {
    if (context < 0 || context >= env.num_contexts())
        throw std::invalid_argument("sample_trajectory: context out of range");
    Trajectory traj;
    traj.context = context;
    int state = env.reset(context);
    for (int t = 0; t < env.horizon(); ++t) {
        const int action = greedy ? policy.greedy_action(state) : policy.sample_action(state, rng);
        auto result = env.step(state, action, rng);
        traj.steps.push_back(Trajectory::Step{state, action, std::move(result.reward)});
        state = result.next_state;
        if (result.done) break;
    }
    return traj;
}

EvaluationSet make_evaluation_set(const MOEnvironment& env, int episode_count, std::uint64_t seed,
                                  bool greedy) {
    if (episode_count < 1) throw std::invalid_argument("make_evaluation_set: empty evaluation set");
    EvaluationSet set;
    set.greedy = greedy;
    set.episodes.reserve(static_cast<std::size_t>(episode_count));
    for (int i = 0; i < episode_count; ++i) {
        std::uint64_t x = seed + 0x632be59bd9b4e019ULL * (static_cast<std::uint64_t>(i) + 1);
        set.episodes.push_back(
            EvaluationSet::Episode{i % env.num_contexts(), Rng::splitmix64(x)});
    }
    return set;
}

ObjectiveVector evaluate(const SoftmaxPolicy& policy, const MOEnvironment& env,
                         const EvaluationSet& eval_set) {
    if (eval_set.episodes.empty()) throw std::invalid_argument("evaluate: empty evaluation set");
    auto scratch = env.clone();
    ObjectiveVector mean(static_cast<std::size_t>(env.num_objectives()), 0.0);
    for (const auto& ep : eval_set.episodes) {
        Rng rng(ep.seed);
        const Trajectory traj =
            sample_trajectory(policy, *scratch, ep.context, rng, eval_set.greedy);
        const ObjectiveVector v = scratch->episode_objectives(traj);
        for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += v[i];
    }
    const double n = static_cast<double>(eval_set.episodes.size());
    for (double& x : mean) x /= n;
    return mean;
}

}  // namespace morl
