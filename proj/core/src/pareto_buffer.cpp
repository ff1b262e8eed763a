#include "morl/pareto_buffer.hpp"

#include <stdexcept>

#include <json.hpp>

#include "morl/hypervolume.hpp"

namespace morl {

ParetoBuffer::ParetoBuffer(ObjectiveVector reference) : reference_(std::move(reference)) {
    if (reference_.size() < 2)
        throw std::invalid_argument("ParetoBuffer: reference must have dimension >= 2");
    if (!all_finite(reference_))
        throw std::invalid_argument("ParetoBuffer: non-finite reference component");
}

std::pair<ParetoBuffer, double> ParetoBuffer::with_insert(const ObjectiveVector& candidate,
                                                          long step) const {
    require_same_dimension(candidate, reference_);
    if (!all_finite(candidate))
        throw std::invalid_argument("ParetoBuffer: non-finite candidate component");
    if (!weakly_dominates(candidate, reference_))
        throw std::invalid_argument("ParetoBuffer: candidate violates the reference point");

    ParetoBuffer next = *this;

    bool duplicate = false;
    for (const auto& e : entries_)
        if (e.point == candidate) { duplicate = true; break; }

    double delta = 0.0;
    if (!duplicate) delta = hypervolume_contribution(candidate, points(), reference_);

    const bool accepted = delta > 0.0;
    if (accepted) {
        std::vector<Entry> kept;
        kept.reserve(next.entries_.size() + 1);
        for (auto& e : next.entries_)
            if (!dominates(candidate, e.point)) kept.push_back(std::move(e));
        kept.push_back(Entry{candidate, step});
        next.entries_ = std::move(kept);
    }
    next.history_.push_back(Event{step, candidate, accepted, delta});
    return {std::move(next), delta};
}

double ParetoBuffer::hypervolume() const {
    return morl::hypervolume(points(), reference_);
}

std::vector<ObjectiveVector> ParetoBuffer::points() const {
    std::vector<ObjectiveVector> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.point);
    return out;
}

std::string ParetoBuffer::to_json() const {
    nlohmann::json j;
    j["reference"] = reference_;
    auto pts = nlohmann::json::array();
    for (const auto& e : entries_) pts.push_back(e.point);
    j["points"] = pts;
    auto hist = nlohmann::json::array();
    for (const auto& ev : history_) {
        hist.push_back({{"step", ev.step},
                        {"point", ev.point},
                        {"accepted", ev.accepted},
                        {"delta_hv", ev.delta_hv}});
    }
    j["history"] = hist;
    return j.dump();
}

ParetoBuffer ParetoBuffer::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    ParetoBuffer buf(j.at("reference").get<ObjectiveVector>());
    for (const auto& ev : j.at("history")) {
        buf.history_.push_back(Event{ev.at("step").get<long>(),
                                     ev.at("point").get<ObjectiveVector>(),
                                     ev.at("accepted").get<bool>(),
                                     ev.at("delta_hv").get<double>()});
    }
    // Rebuild archive membership by replaying accepted events; acceptance
    // steps come from the last accepted event per surviving point.
    for (const auto& ev : buf.history_) {
        if (!ev.accepted) continue;
        std::vector<Entry> kept;
        for (auto& e : buf.entries_)
            if (!dominates(ev.point, e.point)) kept.push_back(std::move(e));
        kept.push_back(Entry{ev.point, ev.step});
        buf.entries_ = std::move(kept);
    }
    const auto stored = j.at("points").get<std::vector<ObjectiveVector>>();
    if (stored != buf.points())
        throw std::invalid_argument("ParetoBuffer: stored points disagree with history replay");
    return buf;
}

}  // namespace morl
