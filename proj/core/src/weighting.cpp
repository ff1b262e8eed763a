#include "morl/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "morl/vec.hpp"

namespace morl {

namespace {
constexpr double kSimplexTolerance = 1e-12;
}

WeightVector::WeightVector(std::vector<double> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw std::invalid_argument("WeightVector: empty");
    double sum = 0.0;
    for (double x : w_) {
        if (!std::isfinite(x) || x <= 0.0)
            throw std::invalid_argument("WeightVector: components must be finite and > 0");
        sum += x;
    }
    if (std::abs(sum - 1.0) > kSimplexTolerance)
        throw std::invalid_argument("WeightVector: components must sum to 1");
}

WeightVector WeightVector::normalized(std::vector<double> raw) {
    double sum = 0.0;
    for (double x : raw) {
        if (!std::isfinite(x) || x <= 0.0)
            throw std::invalid_argument("WeightVector: components must be finite and > 0");
        sum += x;
    }
    for (double& x : raw) x /= sum;
    // Rounding can leave the sum a few ulps off 1; push the residue into the
    // largest component so construction always succeeds.
    double s2 = 0.0;
    for (double x : raw) s2 += x;
    auto it = std::max_element(raw.begin(), raw.end());
    *it += 1.0 - s2;
    return WeightVector(std::move(raw));
}

WeightVector WeightVector::uniform(int k) {
    if (k < 1) throw std::invalid_argument("WeightVector: k must be >= 1");
    return normalized(std::vector<double>(static_cast<std::size_t>(k), 1.0));
}

double meta_reward(double delta_hv) {
    if (!(delta_hv >= 0.0))
        throw std::invalid_argument("meta_reward: contribution must be >= 0");
    const double value = 0.5 + 1.5 * std::tanh(delta_hv);
    // tanh rounds to 1.0 for arguments above ~19; keep the image strictly
    // below the supremum 2.
    return std::min(value, std::nextafter(2.0, 0.0));
}

double scalarize(const WeightVector& w, const ObjectiveVector& r) {
    if (w.size() != static_cast<int>(r.size()))
        throw std::invalid_argument("scalarize: dimension mismatch");
    return dot(w.values(), r);
}

InfluenceVector influence(const std::vector<std::vector<double>>& per_objective_grads) {
    if (per_objective_grads.empty()) throw std::invalid_argument("influence: no gradients");
    const std::size_t dim = per_objective_grads.front().size();
    for (const auto& g : per_objective_grads) {
        if (g.size() != dim) throw std::invalid_argument("influence: gradient dimension mismatch");
        for (double x : g)
            if (!std::isfinite(x)) throw std::invalid_argument("influence: non-finite gradient component");
    }
    const std::vector<double> total = sum_of(per_objective_grads);
    InfluenceVector out;
    out.reserve(per_objective_grads.size());
    for (const auto& g : per_objective_grads) out.push_back(dot(g, total));
    return out;
}

WeightVector update_weights(const WeightVector& w, const InfluenceVector& I, double eta, double mu) {
    if (w.size() != static_cast<int>(I.size()))
        throw std::invalid_argument("update_weights: dimension mismatch");
    if (!(mu > 0.0)) throw std::invalid_argument("update_weights: mu must be > 0");
    if (!(eta >= 0.0)) throw std::invalid_argument("update_weights: eta must be >= 0");
    for (double x : I)
        if (!std::isfinite(x)) throw std::invalid_argument("update_weights: non-finite influence");

    std::vector<double> exponents(I.size());
    for (std::size_t i = 0; i < I.size(); ++i) exponents[i] = eta * I[i] / mu;
    const double shift = *std::max_element(exponents.begin(), exponents.end());
    std::vector<double> next(I.size());
    for (std::size_t i = 0; i < I.size(); ++i)
        next[i] = w[static_cast<int>(i)] * std::exp(exponents[i] - shift);
    return WeightVector::normalized(std::move(next));
}

WeightVector closed_form_weights(const WeightVector& w0,
                                 const std::vector<double>& tau_seq,
                                 const std::vector<InfluenceVector>& influence_seq) {
    if (tau_seq.size() != influence_seq.size())
        throw std::invalid_argument("closed_form_weights: tau and influence sequences differ in length");
    std::vector<double> exponent(static_cast<std::size_t>(w0.size()), 0.0);
    for (std::size_t t = 0; t < tau_seq.size(); ++t) {
        if (static_cast<int>(influence_seq[t].size()) != w0.size())
            throw std::invalid_argument("closed_form_weights: influence dimension mismatch");
        for (std::size_t i = 0; i < exponent.size(); ++i)
            exponent[i] += tau_seq[t] * influence_seq[t][i];
    }
    const double shift = *std::max_element(exponent.begin(), exponent.end());
    std::vector<double> next(exponent.size());
    for (std::size_t i = 0; i < exponent.size(); ++i)
        next[i] = w0[static_cast<int>(i)] * std::exp(exponent[i] - shift);
    return WeightVector::normalized(std::move(next));
}

double ratio_bound(double w0_i, double w0_j, int k, double gradient_bound, double ell) {
    if (!(w0_i > 0.0) || !(w0_j > 0.0) || k < 1 || !(gradient_bound > 0.0) || !(ell >= 0.0))
        throw std::invalid_argument("ratio_bound: inputs must be positive");
    return (w0_i / w0_j) * std::exp(2.0 * k * gradient_bound * gradient_bound * ell);
}

std::pair<double, ScheduleState> schedule_rate(const ScheduleState& state) {
    if (!(state.base_rate > 0.0))
        throw std::invalid_argument("schedule_rate: base rate must be > 0");
    if (state.step < 0) throw std::invalid_argument("schedule_rate: negative step");
    ScheduleState next = state;
    next.step = state.step + 1;
    switch (state.kind) {
        case ScheduleState::Kind::constant:
            return {state.base_rate, next};
        case ScheduleState::Kind::polynomial: {
            if (!(state.power > 1.0))
                throw std::invalid_argument("schedule_rate: polynomial power must be > 1");
            const double rate =
                state.base_rate / std::pow(static_cast<double>(state.step) + 1.0, state.power);
            return {rate, next};
        }
    }
    throw std::logic_error("schedule_rate: unknown schedule kind");
}

double schedule_sum_bound(const ScheduleState& state) {
    if (state.kind == ScheduleState::Kind::constant)
        throw std::invalid_argument("schedule_sum_bound: constant schedules do not converge");
    if (!(state.power > 1.0))
        throw std::invalid_argument("schedule_sum_bound: polynomial power must be > 1");
    // Partial sum plus the integral tail bound: sum_{n>N} n^-p < N^(1-p)/(p-1).
    const long n_terms = 4096;
    double partial = 0.0;
    for (long n = 1; n <= n_terms; ++n) partial += std::pow(static_cast<double>(n), -state.power);
    const double tail =
        std::pow(static_cast<double>(n_terms), 1.0 - state.power) / (state.power - 1.0);
    return state.base_rate * (partial + tail);
}

}  // namespace morl
