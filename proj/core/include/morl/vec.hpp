#ifndef MORL_VEC_HPP
#define MORL_VEC_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace morl {

inline double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(std::span<const double> a) {
    return std::sqrt(dot(a, a));
}

/// y += alpha * x
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("axpy: size mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline void scale(double alpha, std::span<double> x) {
    for (double& v : x) v *= alpha;
}

inline std::vector<double> sum_of(const std::vector<std::vector<double>>& vs) {
    if (vs.empty()) throw std::invalid_argument("sum_of: empty input");
    std::vector<double> out(vs.front().size(), 0.0);
    for (const auto& v : vs) axpy(1.0, v, out);
    return out;
}

}  // namespace morl

#endif  // MORL_VEC_HPP
