#include "morl/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace morl {

SoftmaxPolicy SoftmaxPolicy::tabular(int num_states, int num_actions) {
    if (num_states < 1 || num_actions < 1)
        throw std::invalid_argument("SoftmaxPolicy: spaces must be non-empty");
    SoftmaxPolicy p;
    p.num_states_ = num_states;
    p.num_actions_ = num_actions;
    p.theta_.assign(static_cast<std::size_t>(num_states) * num_actions, 0.0);
    return p;
}

SoftmaxPolicy SoftmaxPolicy::linear(std::vector<std::vector<double>> features, int num_actions) {
    if (features.empty() || num_actions < 1)
        throw std::invalid_argument("SoftmaxPolicy: spaces must be non-empty");
    const std::size_t dim = features.front().size();
    if (dim == 0) throw std::invalid_argument("SoftmaxPolicy: empty feature vectors");
    for (const auto& f : features)
        if (f.size() != dim) throw std::invalid_argument("SoftmaxPolicy: ragged feature table");
    SoftmaxPolicy p;
    p.num_states_ = static_cast<int>(features.size());
    p.num_actions_ = num_actions;
    p.features_ = std::move(features);
    p.theta_.assign(static_cast<std::size_t>(num_actions) * dim, 0.0);
    return p;
}

void SoftmaxPolicy::set_theta(std::vector<double> theta) {
    if (theta.size() != theta_.size())
        throw std::invalid_argument("SoftmaxPolicy: theta size mismatch");
    for (double x : theta)
        if (!std::isfinite(x)) throw std::invalid_argument("SoftmaxPolicy: non-finite parameter");
    theta_ = std::move(theta);
}

std::vector<double> SoftmaxPolicy::logits(int state) const {
    if (state < 0 || state >= num_states_)
        throw std::invalid_argument("SoftmaxPolicy: state out of range");
    std::vector<double> out(static_cast<std::size_t>(num_actions_));
    if (features_.empty()) {
        const std::size_t base = static_cast<std::size_t>(state) * num_actions_;
        for (int a = 0; a < num_actions_; ++a) out[static_cast<std::size_t>(a)] = theta_[base + a];
    } else {
        const auto& phi = features_[static_cast<std::size_t>(state)];
        const std::size_t dim = phi.size();
        for (int a = 0; a < num_actions_; ++a) {
            double s = 0.0;
            const std::size_t base = static_cast<std::size_t>(a) * dim;
            for (std::size_t j = 0; j < dim; ++j) s += theta_[base + j] * phi[j];
            out[static_cast<std::size_t>(a)] = s;
        }
    }
    return out;
}

std::vector<double> SoftmaxPolicy::action_probs(int state) const {
    std::vector<double> z = logits(state);
    const double m = *std::max_element(z.begin(), z.end());
    double sum = 0.0;
    for (double& v : z) {
        v = std::exp(v - m);
        sum += v;
    }
    for (double& v : z) v /= sum;
    return z;
}

double SoftmaxPolicy::log_prob(int state, int action) const {
    std::vector<double> z = logits(state);
    if (action < 0 || action >= num_actions_)
        throw std::invalid_argument("SoftmaxPolicy: action out of range");
    const double m = *std::max_element(z.begin(), z.end());
    double sum = 0.0;
    for (double v : z) sum += std::exp(v - m);
    return z[static_cast<std::size_t>(action)] - m - std::log(sum);
}

void SoftmaxPolicy::accumulate_log_prob_grad(int state, int action, double coef,
                                             std::span<double> grad) const {
    if (grad.size() != theta_.size())
        throw std::invalid_argument("SoftmaxPolicy: gradient buffer size mismatch");
    const std::vector<double> p = action_probs(state);
    if (features_.empty()) {
        const std::size_t base = static_cast<std::size_t>(state) * num_actions_;
        for (int a = 0; a < num_actions_; ++a)
            grad[base + a] -= coef * p[static_cast<std::size_t>(a)];
        grad[base + action] += coef;
    } else {
        const auto& phi = features_[static_cast<std::size_t>(state)];
        const std::size_t dim = phi.size();
        for (int a = 0; a < num_actions_; ++a) {
            const double c = coef * ((a == action ? 1.0 : 0.0) - p[static_cast<std::size_t>(a)]);
            const std::size_t base = static_cast<std::size_t>(a) * dim;
            for (std::size_t j = 0; j < dim; ++j) grad[base + j] += c * phi[j];
        }
    }
}

int SoftmaxPolicy::sample_action(int state, Rng& rng) const {
    const std::vector<double> p = action_probs(state);
    return rng.categorical(p);
}

int SoftmaxPolicy::greedy_action(int state) const {
    const std::vector<double> p = action_probs(state);
    return static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
}

std::string SoftmaxPolicy::to_json(long step) const {
    nlohmann::json j;
    j["theta"] = theta_;
    j["num_states"] = num_states_;
    j["num_actions"] = num_actions_;
    if (!features_.empty()) j["features"] = features_;
    j["step"] = step;
    return j.dump();
}

SoftmaxPolicy::Checkpoint SoftmaxPolicy::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const int ns = j.at("num_states").get<int>();
    const int na = j.at("num_actions").get<int>();
    SoftmaxPolicy p = j.contains("features")
                          ? linear(j.at("features").get<std::vector<std::vector<double>>>(), na)
                          : tabular(ns, na);
    p.set_theta(j.at("theta").get<std::vector<double>>());
    return Checkpoint{std::move(p), j.at("step").get<long>()};
}

double policy_kl(const SoftmaxPolicy& p, const SoftmaxPolicy& q,
                 std::span<const double> state_weights) {
    if (p.num_states() != q.num_states() || p.num_actions() != q.num_actions())
        throw std::invalid_argument("policy_kl: incompatible state/action spaces");
    if (static_cast<int>(state_weights.size()) != p.num_states())
        throw std::invalid_argument("policy_kl: state weight size mismatch");
    double kl = 0.0;
    for (int s = 0; s < p.num_states(); ++s) {
        const double ws = state_weights[static_cast<std::size_t>(s)];
        if (ws == 0.0) continue;
        const auto pp = p.action_probs(s);
        double term = 0.0;
        for (int a = 0; a < p.num_actions(); ++a)
            term += pp[static_cast<std::size_t>(a)] *
                    (std::log(pp[static_cast<std::size_t>(a)]) - q.log_prob(s, a));
        kl += ws * term;
    }
    return std::max(kl, 0.0);
}

}  // namespace morl
