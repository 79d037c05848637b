#ifndef GRAPHCLUST_GRAPH_HPP
#define GRAPHCLUST_GRAPH_HPP

#include "graphclust/matrix.hpp"

#include <cstddef>
#include <vector>

namespace graphclust {

enum class Weighting { binary, rbf };
enum class Normalization { symmetric, none };

/// p-nearest-neighbour graph construction settings.
///
/// The RBF bandwidth is derived per sample (mean distance to its p nearest
/// neighbours) rather than stored here.
struct GraphConfig {
    std::size_t p = 0; // 0 means "use default_p(n)"
    Weighting weighting = Weighting::rbf;
    Normalization normalization = Normalization::symmetric;
};

/// n x n matrix of squared Euclidean distances between the columns of x.
/// Symmetric, zero diagonal. Coincident columns give an exact 0 entry.
/// Throws DataError when x has fewer than two columns.
Matrix pairwise_sq_dist(const Matrix& x);

/// Neighbour-count rule floor(log2(n) + 1), clamped to [1, n-1].
std::size_t default_p(std::size_t n);

/// Indices of the p nearest columns for each column (self excluded),
/// ordered by ascending distance; equal distances break toward the
/// smaller index. Input is the pairwise squared-distance matrix.
std::vector<std::vector<std::size_t>> nearest_neighbors(const Matrix& dist_sq, std::size_t p);

/// Builds the raw affinity G from data columns: connect each sample to its
/// p nearest neighbours, weight 1 (binary) or exp(-d_ij^2 / (sigma_i sigma_j))
/// with sigma_i the mean distance from sample i to its p neighbours, then
/// symmetrize by G = max(G, G^T) and zero the diagonal. A sample with zero
/// bandwidth (duplicates) borrows the smallest positive bandwidth, or 1 when
/// every bandwidth is zero.
Matrix build_pnn_graph(const Matrix& x, const GraphConfig& cfg);

/// Symmetric normalization W = D^{-1/2} G D^{-1/2} with D the degree matrix.
/// Zero-degree rows stay zero. Throws DataError when G is asymmetric beyond
/// 1e-9 in any entry.
Matrix normalize_affinity(const Matrix& g);

} // namespace graphclust

#endif
