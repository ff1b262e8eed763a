#include "morl/hypervolume.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "morl/rng.hpp"

namespace morl {

namespace {

void check_inputs(const std::vector<ObjectiveVector>& points, const ObjectiveVector& ref) {
    if (ref.size() < 2) throw std::invalid_argument("hypervolume: dimension K must be >= 2");
    for (const auto& p : points) {
        require_same_dimension(p, ref);
        if (!all_finite(p)) throw std::invalid_argument("hypervolume: non-finite point component");
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j] < ref[j])
                throw std::invalid_argument("hypervolume: point below reference in coordinate " +
                                            std::to_string(j));
        }
    }
}

// Non-dominated subset, duplicates removed. Quadratic, fine at archive sizes.
std::vector<ObjectiveVector> nondominated(std::vector<ObjectiveVector> points) {
    std::vector<ObjectiveVector> out;
    for (const auto& p : points) {
        bool keep = true;
        for (const auto& q : points)
            if (dominates(q, p)) { keep = false; break; }
        if (!keep) continue;
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
}

double hv_2d(std::vector<ObjectiveVector> pts, double ref_x, double ref_y) {
    // Sweep right to left; each point adds the strip above the running top.
    std::sort(pts.begin(), pts.end(),
              [](const ObjectiveVector& a, const ObjectiveVector& b) { return a[0] > b[0]; });
    double volume = 0.0;
    double top = ref_y;
    for (const auto& p : pts) {
        if (p[1] > top) {
            volume += (p[0] - ref_x) * (p[1] - top);
            top = p[1];
        }
    }
    return volume;
}

double hv_recursive(std::vector<ObjectiveVector> pts, const ObjectiveVector& ref) {
    pts = nondominated(std::move(pts));
    if (pts.empty()) return 0.0;
    const std::size_t k = ref.size();
    if (k == 2) return hv_2d(std::move(pts), ref[0], ref[1]);

    // Dimension sweep: slabs of the sorted last coordinate, each slab's
    // cross-section is the (k-1)-dimensional hypervolume of the points seen
    // so far.
    std::sort(pts.begin(), pts.end(),
              [k](const ObjectiveVector& a, const ObjectiveVector& b) { return a[k - 1] > b[k - 1]; });
    ObjectiveVector sub_ref(ref.begin(), ref.end() - 1);
    std::vector<ObjectiveVector> prefix;
    prefix.reserve(pts.size());
    double volume = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        ObjectiveVector proj(pts[i].begin(), pts[i].end() - 1);
        prefix.push_back(std::move(proj));
        const double z_top = pts[i][k - 1];
        const double z_bottom = (i + 1 < pts.size()) ? pts[i + 1][k - 1] : ref[k - 1];
        if (z_top > z_bottom)
            volume += (z_top - z_bottom) * hv_recursive(prefix, sub_ref);
    }
    return volume;
}

}  // namespace

double hypervolume(const std::vector<ObjectiveVector>& points, const ObjectiveVector& ref) {
    check_inputs(points, ref);
    return hv_recursive(points, ref);
}

double hypervolume_contribution(const ObjectiveVector& a,
                                const std::vector<ObjectiveVector>& points,
                                const ObjectiveVector& ref) {
    check_inputs({a}, ref);
    check_inputs(points, ref);
    std::vector<ObjectiveVector> with_a = points;
    if (std::find(with_a.begin(), with_a.end(), a) == with_a.end()) with_a.push_back(a);
    std::vector<ObjectiveVector> without_a;
    for (const auto& p : points)
        if (p != a) without_a.push_back(p);
    return hv_recursive(with_a, ref) - hv_recursive(without_a, ref);
}

McEstimate mc_hypervolume(const std::vector<ObjectiveVector>& points,
                          const ObjectiveVector& ref,
                          const ObjectiveVector& bound,
                          long samples,
                          std::uint64_t seed) {
    check_inputs(points, ref);
    require_same_dimension(bound, ref);
    if (samples < 1) throw std::invalid_argument("mc_hypervolume: samples must be >= 1");
    const std::size_t k = ref.size();
    double box_volume = 1.0;
    for (std::size_t j = 0; j < k; ++j) {
        if (bound[j] <= ref[j])
            throw std::invalid_argument("mc_hypervolume: degenerate sampling box");
        box_volume *= bound[j] - ref[j];
    }
    for (const auto& p : points)
        for (std::size_t j = 0; j < k; ++j)
            if (p[j] > bound[j])
                throw std::invalid_argument("mc_hypervolume: bound below a point");

    Rng rng(seed);
    std::vector<double> x(k);
    long hits = 0;
    for (long s = 0; s < samples; ++s) {
        for (std::size_t j = 0; j < k; ++j) x[j] = ref[j] + (bound[j] - ref[j]) * rng.uniform();
        for (const auto& p : points) {
            bool covered = true;
            for (std::size_t j = 0; j < k; ++j) {
                if (x[j] > p[j]) { covered = false; break; }
            }
            if (covered) { ++hits; break; }
        }
    }
    const double p_hat = static_cast<double>(hits) / static_cast<double>(samples);
    McEstimate est;
    est.estimate = box_volume * p_hat;
    est.stderr_ = box_volume * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(samples));
    return est;
}

}  // namespace morl
