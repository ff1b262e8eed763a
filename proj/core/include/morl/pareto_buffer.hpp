#ifndef MORL_PARETO_BUFFER_HPP
#define MORL_PARETO_BUFFER_HPP

#include <string>
#include <utility>
#include <vector>

#include "morl/objective.hpp"

namespace morl {

/// Archive of non-dominated validation points plus the fixed reference point
/// used for all hypervolume computations of a run.
///
/// The buffer is a value: `with_insert` returns the updated archive rather
/// than mutating in place, so concurrent readers are always safe.
class ParetoBuffer {
public:
    struct Entry {
        ObjectiveVector point;
        long step = 0;  // training step whose evaluation produced the point
    };
    struct Event {
        long step = 0;
        ObjectiveVector point;
        bool accepted = false;
        double delta_hv = 0.0;
    };

    explicit ParetoBuffer(ObjectiveVector reference);

    /// Evaluates the candidate's hypervolume contribution against the current
    /// archive and, if it is positive, inserts the candidate and prunes any
    /// point the candidate dominates. The event is appended to the history
    /// either way. Returns the new buffer and the contribution computed
    /// BEFORE insertion. A candidate equal to an archived point contributes
    /// nothing and is not re-inserted.
    ///
    /// Throws std::invalid_argument if the candidate does not weakly dominate
    /// the reference point.
    [[nodiscard]] std::pair<ParetoBuffer, double> with_insert(const ObjectiveVector& candidate,
                                                              long step) const;

    double hypervolume() const;

    const ObjectiveVector& reference() const { return reference_; }
    const std::vector<Entry>& entries() const { return entries_; }
    const std::vector<Event>& history() const { return history_; }
    std::vector<ObjectiveVector> points() const;
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    std::string to_json() const;
    static ParetoBuffer from_json(const std::string& text);

private:
    ObjectiveVector reference_;
    std::vector<Entry> entries_;   // mutually non-dominated, insertion order
    std::vector<Event> history_;   // append-only log of every candidate
};

}  // namespace morl

#endif  // MORL_PARETO_BUFFER_HPP
