#include "graphclust/graph.hpp"
#include "graphclust/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace graphclust {

Matrix pairwise_sq_dist(const Matrix& x) {
    const std::size_t n = x.cols();
    const std::size_t d = x.rows();
    if (n < 2) {
        throw DataError("pairwise_sq_dist: need at least 2 samples, got " + std::to_string(n));
    }
    Matrix dist(n, n);
    // Explicit per-pair accumulation keeps coincident columns at an exact 0.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                const double diff = x(k, i) - x(k, j);
                s += diff * diff;
            }
            dist(i, j) = s;
            dist(j, i) = s;
        }
    }
    return dist;
}

std::size_t default_p(std::size_t n) {
    const auto raw = static_cast<long long>(std::floor(std::log2(static_cast<double>(n)) + 1.0));
    const long long hi = static_cast<long long>(n) - 1;
    return static_cast<std::size_t>(std::clamp<long long>(raw, 1, hi));
}

std::vector<std::vector<std::size_t>> nearest_neighbors(const Matrix& dist_sq, std::size_t p) {
    const std::size_t n = dist_sq.rows();
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order.resize(n - 1);
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) order[w++] = j;
        std::partial_sort(order.begin(), order.begin() + static_cast<long>(p), order.end(),
                          [&](std::size_t a, std::size_t b) {
                              if (dist_sq(i, a) != dist_sq(i, b)) return dist_sq(i, a) < dist_sq(i, b);
                              return a < b;
                          });
        out[i].assign(order.begin(), order.begin() + static_cast<long>(p));
    }
    return out;
}

Matrix build_pnn_graph(const Matrix& x, const GraphConfig& cfg) {
    const std::size_t n = x.cols();
    const std::size_t p = cfg.p == 0 ? default_p(n) : cfg.p;
    if (p < 1 || p > n - 1) {
        throw ConfigError("build_pnn_graph: p=" + std::to_string(p) +
                          " out of range [1, " + std::to_string(n - 1) + "]");
    }
    const Matrix dist_sq = pairwise_sq_dist(x);
    const auto neigh = nearest_neighbors(dist_sq, p);

    // Per-sample bandwidth: mean Euclidean distance to the p neighbours.
    std::vector<double> sigma(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j : neigh[i]) s += std::sqrt(dist_sq(i, j));
        sigma[i] = s / static_cast<double>(p);
    }
    double smallest_positive = std::numeric_limits<double>::infinity();
    for (double s : sigma)
        if (s > 0.0) smallest_positive = std::min(smallest_positive, s);
    const double fallback = std::isfinite(smallest_positive) ? smallest_positive : 1.0;
    for (double& s : sigma)
        if (s <= 0.0) s = fallback;

    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : neigh[i]) {
            g(i, j) = cfg.weighting == Weighting::binary
                          ? 1.0
                          : std::exp(-dist_sq(i, j) / (sigma[i] * sigma[j]));
        }
    }
    // Union of neighbour sets: keep an edge if either endpoint selected it.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double w = std::max(g(i, j), g(j, i));
            g(i, j) = w;
            g(j, i) = w;
        }
        g(i, i) = 0.0;
    }
    return g;
}

Matrix normalize_affinity(const Matrix& g) {
    const std::size_t n = g.rows();
    if (g.cols() != n) {
        throw ShapeError("normalize_affinity: expected square matrix, got " + shape_string(g));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::fabs(g(i, j) - g(j, i)) > 1e-9)
                throw DataError("normalize_affinity: input asymmetric at (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");

    std::vector<double> inv_sqrt_deg(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double deg = 0.0;
        for (std::size_t j = 0; j < n; ++j) deg += g(i, j);
        inv_sqrt_deg[i] = deg > 0.0 ? 1.0 / std::sqrt(deg) : 0.0;
    }
    Matrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w(i, j) = g(i, j) * inv_sqrt_deg[i] * inv_sqrt_deg[j];
    return w;
}

} // namespace graphclust
