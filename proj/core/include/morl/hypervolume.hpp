#ifndef MORL_HYPERVOLUME_HPP
#define MORL_HYPERVOLUME_HPP

#include <cstdint>
#include <vector>

#include "morl/objective.hpp"

namespace morl {

/// Exact hypervolume of `points` with respect to reference point `ref`:
/// the Lebesgue measure of the union of boxes [ref, p].
///
/// K = 2 uses a sort-and-sweep; K >= 3 sweeps slabs of the sorted last
/// coordinate and recurses on the (K-1)-dimensional projections. Intended for
/// the small archives this library produces (n up to a few hundred).
///
/// Throws std::invalid_argument if dimensions mismatch or any point fails to
/// weakly dominate `ref`. An empty set has hypervolume 0.
double hypervolume(const std::vector<ObjectiveVector>& points, const ObjectiveVector& ref);

/// Hypervolume contribution of `a` to `points`:
///   HV(points U {a}) - HV(points \ {a}).
/// The set-difference form makes the result correct whether or not `a`
/// already belongs to `points`. Always >= 0.
double hypervolume_contribution(const ObjectiveVector& a,
                                const std::vector<ObjectiveVector>& points,
                                const ObjectiveVector& ref);

struct McEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
};

/// Monte Carlo hypervolume estimate: uniform samples in the box [ref, bound],
/// estimate = box volume x fraction of samples dominated by some point.
/// Deterministic for a fixed seed. stderr is the binomial standard error
/// scaled by the box volume.
McEstimate mc_hypervolume(const std::vector<ObjectiveVector>& points,
                          const ObjectiveVector& ref,
                          const ObjectiveVector& bound,
                          long samples,
                          std::uint64_t seed);

}  // namespace morl

#endif  // MORL_HYPERVOLUME_HPP
