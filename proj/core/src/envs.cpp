#include "morl/envs.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace morl {

namespace {

// ---------------------------------------------------------------------------
// Deep sea treasure
// ---------------------------------------------------------------------------

class DeepSeaTreasure final : public MOEnvironment {
public:
    explicit DeepSeaTreasure(const DeepSeaTreasureConfig& cfg) : cfg_(cfg) {
        const int cols = static_cast<int>(cfg_.depths.size());
        if (cols == 0 || cfg_.values.size() != cfg_.depths.size())
            throw std::invalid_argument("deep_sea_treasure: depths and values must be non-empty and equal length");
        for (int c = 0; c < cols; ++c) {
            if (cfg_.depths[static_cast<std::size_t>(c)] < 1)
                throw std::invalid_argument("deep_sea_treasure: depths must be >= 1");
            if (c > 0 && cfg_.depths[static_cast<std::size_t>(c)] < cfg_.depths[static_cast<std::size_t>(c - 1)])
                throw std::invalid_argument("deep_sea_treasure: depths must be non-decreasing");
            if (!(cfg_.values[static_cast<std::size_t>(c)] > 0.0))
                throw std::invalid_argument("deep_sea_treasure: treasure values must be > 0");
        }
        if (cfg_.horizon < 1) throw std::invalid_argument("deep_sea_treasure: horizon must be >= 1");
        if (!(cfg_.time_bonus_per_step > 0.0))
            throw std::invalid_argument("deep_sea_treasure: time bonus must be > 0");
        if (cfg_.starts.empty()) throw std::invalid_argument("deep_sea_treasure: no start cells");

        for (int c = 0; c < cols; ++c)
            for (int r = 0; r <= cfg_.depths[static_cast<std::size_t>(c)]; ++r) {
                cell_id_[{r, c}] = static_cast<int>(cells_.size());
                cells_.emplace_back(r, c);
            }
        for (const auto& [r, c] : cfg_.starts) {
            auto it = cell_id_.find({r, c});
            if (it == cell_id_.end() || is_treasure(r, c))
                throw std::invalid_argument("deep_sea_treasure: start cell must be water");
        }
        orientation_ = {
            ObjectiveChannel{"treasure", false, 0.0, 1.0},
            ObjectiveChannel{"steps", true, cfg_.time_bonus_per_step * cfg_.horizon,
                             cfg_.time_bonus_per_step},
        };
    }

    int num_objectives() const override { return 2; }
    int num_states() const override { return static_cast<int>(cells_.size()); }
    int num_actions() const override { return 4; }
    int horizon() const override { return cfg_.horizon; }
    int num_contexts() const override { return static_cast<int>(cfg_.starts.size()); }
    const OrientationMap& orientation() const override { return orientation_; }

    int reset(int context) override {
        if (context < 0 || context >= num_contexts())
            throw std::invalid_argument("deep_sea_treasure: context out of range");
        steps_taken_ = 0;
        return cell_id_.at(cfg_.starts[static_cast<std::size_t>(context)]);
    }

    StepResult step(int state, int action, Rng&) override {
        static constexpr int kRowDelta[4] = {-1, 1, 0, 0};
        static constexpr int kColDelta[4] = {0, 0, -1, 1};
        if (state < 0 || state >= num_states())
            throw std::invalid_argument("deep_sea_treasure: state out of range");
        if (action < 0 || action >= 4)
            throw std::invalid_argument("deep_sea_treasure: action out of range");
        auto [r, c] = cells_[static_cast<std::size_t>(state)];
        const int nr = r + kRowDelta[action];
        const int nc = c + kColDelta[action];
        auto it = cell_id_.find({nr, nc});
        const int next = (it == cell_id_.end()) ? state : it->second;
        ++steps_taken_;
        auto [r2, c2] = cells_[static_cast<std::size_t>(next)];
        StepResult out;
        out.next_state = next;
        if (is_treasure(r2, c2)) {
            out.done = true;
            out.reward = {cfg_.values[static_cast<std::size_t>(c2)],
                          cfg_.time_bonus_per_step * (cfg_.horizon - steps_taken_)};
        } else {
            out.done = false;
            out.reward = {0.0, 0.0};
        }
        return out;
    }

    ObjectiveVector min_achievable() const override { return {0.0, 0.0}; }

    std::unique_ptr<MOEnvironment> clone() const override {
        return std::make_unique<DeepSeaTreasure>(*this);
    }

    std::vector<ObjectiveVector> enumerate_front(long cap) const override {
        std::set<ObjectiveVector> outcomes;
        std::map<int, int> commitments;
        long leaves = 0;
        enumerate_policies(commitments, outcomes, leaves, cap);
        std::vector<ObjectiveVector> all(outcomes.begin(), outcomes.end());
        return pareto_filter(all);
    }

    std::vector<ObjectiveVector> enumerate_context_outcomes(int context, long cap) const override {
        if (context < 0 || context >= num_contexts())
            throw std::invalid_argument("deep_sea_treasure: context out of range");
        // Layered reachability over (cell, step).
        std::set<ObjectiveVector> outcomes;
        outcomes.insert({0.0, 0.0});  // wandering to the horizon is always possible
        std::set<int> frontier = {cell_id_.at(cfg_.starts[static_cast<std::size_t>(context)])};
        long expanded = 0;
        for (int t = 1; t <= cfg_.horizon && !frontier.empty(); ++t) {
            std::set<int> next_frontier;
            for (int s : frontier) {
                for (int a = 0; a < 4; ++a) {
                    if (++expanded > cap)
                        throw std::invalid_argument("deep_sea_treasure: enumeration cap exceeded");
                    auto [r, c] = cells_[static_cast<std::size_t>(s)];
                    static constexpr int kRowDelta[4] = {-1, 1, 0, 0};
                    static constexpr int kColDelta[4] = {0, 0, -1, 1};
                    auto it = cell_id_.find({r + kRowDelta[a], c + kColDelta[a]});
                    const int ns = (it == cell_id_.end()) ? s : it->second;
                    auto [r2, c2] = cells_[static_cast<std::size_t>(ns)];
                    if (is_treasure(r2, c2)) {
                        outcomes.insert({cfg_.values[static_cast<std::size_t>(c2)],
                                         cfg_.time_bonus_per_step * (cfg_.horizon - t)});
                    } else {
                        next_frontier.insert(ns);
                    }
                }
            }
            frontier = std::move(next_frontier);
        }
        return {outcomes.begin(), outcomes.end()};
    }

private:
    bool is_treasure(int r, int c) const { return r == cfg_.depths[static_cast<std::size_t>(c)]; }

    // Runs one episode under a partial deterministic policy; returns the
    // state needing an action commitment, or the episode outcome.
    struct PartialRollout {
        bool needs_commitment = false;
        int state = -1;
        ObjectiveVector outcome;
    };
    PartialRollout rollout_partial(const std::map<int, int>& commitments, int start) const {
        PartialRollout out;
        int s = start;
        std::set<int> visited;
        for (int t = 1; t <= cfg_.horizon; ++t) {
            auto it = commitments.find(s);
            if (it == commitments.end()) {
                out.needs_commitment = true;
                out.state = s;
                return out;
            }
            if (!visited.insert(s).second) {
                // Revisiting a state under a stationary deterministic policy
                // loops until the horizon: no treasure.
                out.outcome = {0.0, 0.0};
                return out;
            }
            static constexpr int kRowDelta[4] = {-1, 1, 0, 0};
            static constexpr int kColDelta[4] = {0, 0, -1, 1};
            auto [r, c] = cells_[static_cast<std::size_t>(s)];
            auto jt = cell_id_.find({r + kRowDelta[it->second], c + kColDelta[it->second]});
            const int ns = (jt == cell_id_.end()) ? s : jt->second;
            if (ns == s) {
                out.outcome = {0.0, 0.0};
                return out;
            }
            auto [r2, c2] = cells_[static_cast<std::size_t>(ns)];
            if (is_treasure(r2, c2)) {
                out.outcome = {cfg_.values[static_cast<std::size_t>(c2)],
                               cfg_.time_bonus_per_step * (cfg_.horizon - t)};
                return out;
            }
            s = ns;
        }
        out.outcome = {0.0, 0.0};
        return out;
    }

    void enumerate_policies(std::map<int, int>& commitments, std::set<ObjectiveVector>& outcomes,
                            long& leaves, long cap) const {
        ObjectiveVector mean = {0.0, 0.0};
        for (const auto& start : cfg_.starts) {
            const auto result = rollout_partial(commitments, cell_id_.at(start));
            if (result.needs_commitment) {
                for (int a = 0; a < 4; ++a) {
                    commitments[result.state] = a;
                    enumerate_policies(commitments, outcomes, leaves, cap);
                }
                commitments.erase(result.state);
                return;
            }
            mean[0] += result.outcome[0];
            mean[1] += result.outcome[1];
        }
        if (++leaves > cap)
            throw std::invalid_argument("deep_sea_treasure: enumeration cap exceeded");
        const double n = static_cast<double>(cfg_.starts.size());
        outcomes.insert({mean[0] / n, mean[1] / n});
    }

    DeepSeaTreasureConfig cfg_;
    std::vector<std::pair<int, int>> cells_;
    std::map<std::pair<int, int>, int> cell_id_;
    OrientationMap orientation_;
    int steps_taken_ = 0;
};

// ---------------------------------------------------------------------------
// Multi-objective bandit
// ---------------------------------------------------------------------------

class MoBandit final : public MOEnvironment {
public:
    explicit MoBandit(const MoBanditConfig& cfg) : cfg_(cfg) {
        if (cfg_.arms.empty()) throw std::invalid_argument("mo_bandit: empty arm table");
        const std::size_t k = cfg_.arms.front().size();
        if (k < 2) throw std::invalid_argument("mo_bandit: need at least 2 objectives");
        for (const auto& arm : cfg_.arms) {
            if (arm.size() != k) throw std::invalid_argument("mo_bandit: ragged arm table");
            if (!all_finite(arm)) throw std::invalid_argument("mo_bandit: non-finite arm value");
            if (cfg_.kind == MoBanditConfig::Kind::bernoulli)
                for (double p : arm)
                    if (p < 0.0 || p > 1.0)
                        throw std::invalid_argument("mo_bandit: Bernoulli parameters must lie in [0,1]");
        }
        for (std::size_t i = 0; i < k; ++i)
            orientation_.push_back(ObjectiveChannel{"objective_" + std::to_string(i), false, 0.0, 1.0});
    }

    int num_objectives() const override { return static_cast<int>(cfg_.arms.front().size()); }
    int num_states() const override { return 1; }
    int num_actions() const override { return static_cast<int>(cfg_.arms.size()); }
    int horizon() const override { return 1; }
    int num_contexts() const override { return 1; }
    const OrientationMap& orientation() const override { return orientation_; }

    int reset(int context) override {
        if (context != 0) throw std::invalid_argument("mo_bandit: context out of range");
        return 0;
    }

    StepResult step(int state, int action, Rng& rng) override {
        if (state != 0) throw std::invalid_argument("mo_bandit: state out of range");
        if (action < 0 || action >= num_actions())
            throw std::invalid_argument("mo_bandit: action out of range");
        const auto& arm = cfg_.arms[static_cast<std::size_t>(action)];
        StepResult out;
        out.next_state = 0;
        out.done = true;
        if (cfg_.kind == MoBanditConfig::Kind::deterministic) {
            out.reward = arm;
        } else {
            out.reward.resize(arm.size());
            for (std::size_t i = 0; i < arm.size(); ++i)
                out.reward[i] = rng.uniform() < arm[i] ? 1.0 : 0.0;
        }
        return out;
    }

    ObjectiveVector min_achievable() const override {
        if (cfg_.kind == MoBanditConfig::Kind::bernoulli)
            return ObjectiveVector(static_cast<std::size_t>(num_objectives()), 0.0);
        ObjectiveVector lo = cfg_.arms.front();
        for (const auto& arm : cfg_.arms)
            for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], arm[i]);
        return lo;
    }

    bool has_model() const override { return true; }
    std::vector<Transition> transitions(int state, int action) const override {
        if (state != 0 || action < 0 || action >= num_actions())
            throw std::invalid_argument("mo_bandit: invalid model query");
        return {Transition{1.0, 0, cfg_.arms[static_cast<std::size_t>(action)], true}};
    }

    std::vector<ObjectiveVector> enumerate_front(long cap) const override {
        if (static_cast<long>(cfg_.arms.size()) > cap)
            throw std::invalid_argument("mo_bandit: enumeration cap exceeded");
        return pareto_filter(cfg_.arms);
    }

    std::vector<ObjectiveVector> enumerate_context_outcomes(int context, long cap) const override {
        if (context != 0) throw std::invalid_argument("mo_bandit: context out of range");
        if (cfg_.kind == MoBanditConfig::Kind::deterministic) {
            if (static_cast<long>(cfg_.arms.size()) > cap)
                throw std::invalid_argument("mo_bandit: enumeration cap exceeded");
            std::set<ObjectiveVector> s(cfg_.arms.begin(), cfg_.arms.end());
            return {s.begin(), s.end()};
        }
        const int k = num_objectives();
        if ((1L << k) > cap) throw std::invalid_argument("mo_bandit: enumeration cap exceeded");
        std::set<ObjectiveVector> outcomes;
        for (long mask = 0; mask < (1L << k); ++mask) {
            ObjectiveVector v(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 1.0 : 0.0;
            outcomes.insert(std::move(v));
        }
        return {outcomes.begin(), outcomes.end()};
    }

    std::unique_ptr<MOEnvironment> clone() const override { return std::make_unique<MoBandit>(*this); }

private:
    MoBanditConfig cfg_;
    OrientationMap orientation_;
};

// ---------------------------------------------------------------------------
// Synthetic reasoning task
// ---------------------------------------------------------------------------

class SyntheticReasoning final : public MOEnvironment {
public:
    explicit SyntheticReasoning(const SyntheticReasoningConfig& cfg) : cfg_(cfg) {
        if (cfg_.templates.empty()) throw std::invalid_argument("synthetic_reasoning: empty template table");
        if (cfg_.num_contexts < 1) throw std::invalid_argument("synthetic_reasoning: need >= 1 context");
        double total_len = 0.0;
        for (const auto& t : cfg_.templates) {
            if (t.length <= 0) throw std::invalid_argument("synthetic_reasoning: template length must be > 0");
            for (int c : t.correct_contexts)
                if (c < 0 || c >= cfg_.num_contexts)
                    throw std::invalid_argument("synthetic_reasoning: correct context out of range");
            total_len += t.length;
        }
        if (cfg_.initial_avg_length < 0.0)
            cfg_.initial_avg_length = total_len / static_cast<double>(cfg_.templates.size());
        orientation_ = {
            ObjectiveChannel{"accuracy", false, 0.0, 1.0},
            ObjectiveChannel{"length", true, 0.0, 1.0},
            ObjectiveChannel{"clarity", false, 0.0, 1.0},
        };
    }

    int num_objectives() const override { return 3; }
    int num_states() const override { return cfg_.num_contexts; }
    int num_actions() const override { return static_cast<int>(cfg_.templates.size()); }
    int horizon() const override { return 1; }
    int num_contexts() const override { return cfg_.num_contexts; }
    const OrientationMap& orientation() const override { return orientation_; }

    int reset(int context) override {
        if (context < 0 || context >= cfg_.num_contexts)
            throw std::invalid_argument("synthetic_reasoning: context out of range");
        return context;
    }

    StepResult step(int state, int action, Rng&) override {
        if (state < 0 || state >= cfg_.num_contexts)
            throw std::invalid_argument("synthetic_reasoning: state out of range");
        if (action < 0 || action >= num_actions())
            throw std::invalid_argument("synthetic_reasoning: action out of range");
        const auto& t = cfg_.templates[static_cast<std::size_t>(action)];
        StepResult out;
        out.next_state = state;
        out.done = true;
        // Conciseness compares against the average of previous responses only;
        // the current response folds into the average afterwards.
        const double concise = t.length <= running_average() ? 1.0 : 0.0;
        out.reward = {is_correct(t, state), concise, t.has_steps ? 1.0 : 0.0};
        observed_count_ += 1;
        observed_length_sum_ += t.length;
        return out;
    }

    ObjectiveVector episode_objectives(const Trajectory& traj) const override {
        if (traj.steps.size() != 1)
            throw std::invalid_argument("synthetic_reasoning: expected a one-step trajectory");
        const auto& s = traj.steps.front();
        const auto& t = cfg_.templates[static_cast<std::size_t>(s.action)];
        // Reporting convention: accuracy and clarity by reward, conciseness
        // by (negated) raw response length.
        return {is_correct(t, s.state), -static_cast<double>(t.length), t.has_steps ? 1.0 : 0.0};
    }

    ObjectiveVector min_achievable() const override {
        int max_len = 0;
        for (const auto& t : cfg_.templates) max_len = std::max(max_len, t.length);
        return {0.0, -static_cast<double>(max_len), 0.0};
    }

    bool has_model() const override { return true; }
    std::vector<Transition> transitions(int state, int action) const override {
        if (state < 0 || state >= cfg_.num_contexts || action < 0 || action >= num_actions())
            throw std::invalid_argument("synthetic_reasoning: invalid model query");
        const auto& t = cfg_.templates[static_cast<std::size_t>(action)];
        const double concise = t.length <= running_average() ? 1.0 : 0.0;
        return {Transition{1.0, state,
                           {is_correct(t, state), concise, t.has_steps ? 1.0 : 0.0}, true}};
    }

    std::vector<ObjectiveVector> enumerate_front(long cap) const override {
        const int n_templates = num_actions();
        double policies = 1.0;
        for (int c = 0; c < cfg_.num_contexts; ++c) policies *= n_templates;
        if (policies > static_cast<double>(cap))
            throw std::invalid_argument("synthetic_reasoning: enumeration cap exceeded");
        std::set<ObjectiveVector> outcomes;
        std::vector<int> choice(static_cast<std::size_t>(cfg_.num_contexts), 0);
        for (;;) {
            ObjectiveVector mean = {0.0, 0.0, 0.0};
            for (int c = 0; c < cfg_.num_contexts; ++c) {
                const auto& t = cfg_.templates[static_cast<std::size_t>(choice[static_cast<std::size_t>(c)])];
                mean[0] += is_correct(t, c);
                mean[1] += -static_cast<double>(t.length);
                mean[2] += t.has_steps ? 1.0 : 0.0;
            }
            for (double& x : mean) x /= static_cast<double>(cfg_.num_contexts);
            outcomes.insert(std::move(mean));
            int i = 0;
            while (i < cfg_.num_contexts) {
                if (++choice[static_cast<std::size_t>(i)] < n_templates) break;
                choice[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == cfg_.num_contexts) break;
        }
        std::vector<ObjectiveVector> all(outcomes.begin(), outcomes.end());
        return pareto_filter(all);
    }

    std::vector<ObjectiveVector> enumerate_context_outcomes(int context, long cap) const override {
        if (context < 0 || context >= cfg_.num_contexts)
            throw std::invalid_argument("synthetic_reasoning: context out of range");
        if (static_cast<long>(cfg_.templates.size()) > cap)
            throw std::invalid_argument("synthetic_reasoning: enumeration cap exceeded");
        std::set<ObjectiveVector> outcomes;
        for (const auto& t : cfg_.templates)
            outcomes.insert({is_correct(t, context), -static_cast<double>(t.length),
                             t.has_steps ? 1.0 : 0.0});
        return {outcomes.begin(), outcomes.end()};
    }

    std::unique_ptr<MOEnvironment> clone() const override {
        return std::make_unique<SyntheticReasoning>(*this);
    }

private:
    static double is_correct(const SyntheticReasoningConfig::Template& t, int context) {
        return std::find(t.correct_contexts.begin(), t.correct_contexts.end(), context) !=
                       t.correct_contexts.end()
                   ? 1.0
                   : 0.0;
    }

    double running_average() const {
        return observed_count_ > 0
                   ? observed_length_sum_ / static_cast<double>(observed_count_)
                   : cfg_.initial_avg_length;
    }

    SyntheticReasoningConfig cfg_;
    OrientationMap orientation_;
    long observed_count_ = 0;
    double observed_length_sum_ = 0.0;
};

}  // namespace

std::unique_ptr<MOEnvironment> make_deep_sea_treasure(const DeepSeaTreasureConfig& config) {
    return std::make_unique<DeepSeaTreasure>(config);
}

std::unique_ptr<MOEnvironment> make_mo_bandit(const MoBanditConfig& config) {
    return std::make_unique<MoBandit>(config);
}

SyntheticReasoningConfig default_synthetic_reasoning_config() {
    SyntheticReasoningConfig cfg;
    cfg.num_contexts = 2;
    // Correctness and brevity conflict: correct templates are never the
    // shortest, so no single template maximizes all three objectives.
    cfg.templates = {
        {120, true, {0, 1}},   // long, correct everywhere, stepwise
        {40, false, {0}},      // short, correct on context 0 only
        {30, true, {}},        // short, stepwise, never correct
        {80, true, {1}},       // medium, correct on context 1, stepwise
        {10, false, {}},       // shortest, never correct
    };
    return cfg;
}

std::unique_ptr<MOEnvironment> make_synthetic_reasoning(const SyntheticReasoningConfig& config) {
    return std::make_unique<SyntheticReasoning>(config);
}

std::vector<ObjectiveVector> true_pareto_front(const MOEnvironment& env, long cap) {
    return env.enumerate_front(cap);
}

ObjectiveVector default_reference(const MOEnvironment& env, double margin) {
    ObjectiveVector ref = env.min_achievable();
    for (double& x : ref) x -= margin;
    return ref;
}

}  // namespace morl
