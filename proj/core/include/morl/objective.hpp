#ifndef MORL_OBJECTIVE_HPP
#define MORL_OBJECTIVE_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace morl {

/// A point in K-dimensional objective space. Every component is oriented
/// "larger is better"; minimization-oriented raw metrics are negated once at
/// ingestion by the environment that produces them.
using ObjectiveVector = std::vector<double>;

inline void require_same_dimension(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("objective vectors have mismatched dimensions (" +
                                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

inline bool all_finite(const ObjectiveVector& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

/// Strict Pareto dominance: a >= b componentwise and a != b.
inline bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    require_same_dimension(a, b);
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return false;
        if (a[i] > b[i]) strictly_better = true;
    }
    return strictly_better;
}

/// a >= b componentwise (equality allowed).
inline bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    require_same_dimension(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

/// Returns exactly the non-dominated subset, preserving first-occurrence
/// order and storing duplicates once.
inline std::vector<ObjectiveVector> pareto_filter(const std::vector<ObjectiveVector>& points) {
    if (points.empty()) throw std::invalid_argument("pareto_filter: empty input");
    std::vector<ObjectiveVector> out;
    for (const auto& p : points) {
        require_same_dimension(p, points.front());
        bool keep = true;
        for (const auto& q : points) {
            if (dominates(q, p)) { keep = false; break; }
        }
        if (!keep) continue;
        bool seen = false;
        for (const auto& q : out) {
            if (q == p) { seen = true; break; }
        }
        if (!seen) out.push_back(p);
    }
    return out;
}

}  // namespace morl

#endif  // MORL_OBJECTIVE_HPP
