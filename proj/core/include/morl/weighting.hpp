#ifndef MORL_WEIGHTING_HPP
#define MORL_WEIGHTING_HPP

#include <utility>
#include <vector>

#include "morl/objective.hpp"

namespace morl {

/// Reward weights on the K-simplex: every component positive, components
/// summing to 1 within 1e-12. Construction validates the invariant.
class WeightVector {
public:
    explicit WeightVector(std::vector<double> weights);

    /// Normalizes an arbitrary positive vector onto the simplex.
    static WeightVector normalized(std::vector<double> raw);
    static WeightVector uniform(int k);

    int size() const { return static_cast<int>(w_.size()); }
    double operator[](int i) const { return w_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const { return w_; }

    bool operator==(const WeightVector& other) const { return w_ == other.w_; }

private:
    std::vector<double> w_;
};

/// Per-objective gradient influence, in squared-gradient units. All entries
/// come from the same gradient snapshot.
using InfluenceVector = std::vector<double>;

/// Meta-reward 0.5 + 1.5*tanh(delta_hv), the multiplicative amplifier driven
/// by a checkpoint's hypervolume contribution. Image is [0.5, 2.0): exactly
/// 0.5 at zero contribution, clamped one ulp below 2 where tanh saturates in
/// double precision. Rejects negative input (contributions are >= 0 by
/// construction).
double meta_reward(double delta_hv);

/// Inner product w . r of weights with a reward vector of the same dimension.
double scalarize(const WeightVector& w, const ObjectiveVector& r);

/// I_i = < grad_i, sum_k grad_k >, computed from one snapshot of K
/// per-objective gradients of equal dimension.
InfluenceVector influence(const std::vector<std::vector<double>>& per_objective_grads);

/// Exponentiated (mirror-descent) weight update:
///   w'_i  proportional to  w_i * exp(eta * I_i / mu),
/// renormalized onto the simplex. The maximum exponent is subtracted before
/// exponentiation; normalization makes the shift a mathematical no-op.
/// eta = 0 is the identity; adding a constant to every I_i changes nothing.
WeightVector update_weights(const WeightVector& w, const InfluenceVector& I, double eta, double mu);

/// Closed form of T sequential update_weights applications:
///   w_i^(T) = w_i^(0) exp(sum_t tau_t I_i^t) / sum_k w_k^(0) exp(sum_t tau_t I_k^t)
/// with tau_t = eta_t / mu recorded per step.
WeightVector closed_form_weights(const WeightVector& w0,
                                 const std::vector<double>& tau_seq,
                                 const std::vector<InfluenceVector>& influence_seq);

/// Uniform ceiling on the weight ratio w_i/w_j after any number of steps of
/// a convergent schedule: (w0_i / w0_j) * exp(2 K C^2 ell), where C bounds
/// every per-objective gradient norm and ell bounds the summed tau sequence.
double ratio_bound(double w0_i, double w0_j, int k, double gradient_bound, double ell);

struct ScheduleState {
    enum class Kind { constant, polynomial };
    Kind kind = Kind::constant;
    double base_rate = 1e-6;
    double power = 1.03;  // polynomial decay exponent, must be > 1
    long step = 0;
};

/// Emits the current learning rate and the advanced state. Constant schedules
/// emit base_rate forever; polynomial schedules emit base_rate / (t+1)^power,
/// whose cumulative sum converges for power > 1 (rejected otherwise).
std::pair<double, ScheduleState> schedule_rate(const ScheduleState& state);

/// Upper bound on the infinite sum of the schedule's rate sequence
/// (base_rate * zeta(power) for polynomial kind, bounded by partial sum plus
/// integral tail). Throws for constant schedules, whose sum diverges.
double schedule_sum_bound(const ScheduleState& state);

}  // namespace morl

#endif  // MORL_WEIGHTING_HPP
