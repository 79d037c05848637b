#ifndef GRAPHCLUST_SOLVER_HPP
#define GRAPHCLUST_SOLVER_HPP

#include "graphclust/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace graphclust {

/// Settings for the joint similarity/membership solver.
struct SolverConfig {
    double alpha = 1.0;           // self-expression weight, >= 0
    double beta = 1.0;            // prior-graph weight, >= 0
    std::size_t clusters = 2;     // c, in [2, n]
    double tol = 1e-4;            // stopping threshold on both factor deltas
    std::size_t max_iter = 1000;
    std::uint64_t seed = 0;
    double denom_guard = 1e-12;   // added to every update denominator
};

/// Elementwise positive/negative split of the Gram matrix X^T X.
/// Invariants: pos >= 0, neg >= 0, pos - neg == X^T X, pos .* neg == 0.
struct GramSplit {
    Matrix pos;
    Matrix neg;
};

enum class Termination { tolerance, max_iter };

/// Per-iteration record of one solve.
///
/// objective_per_iter[0] is the objective at initialization; entry t >= 1
/// is the value after sweep t, so it has iterations + 1 entries while the
/// delta sequences have one entry per sweep. The objective sequence is
/// non-increasing up to numerical slack.
struct SolveTrace {
    std::vector<double> objective_per_iter;
    std::vector<double> s_delta_per_iter;
    std::vector<double> v_delta_per_iter;
    std::size_t iterations = 0;
    Termination terminated_by = Termination::max_iter;
};

/// Result of a joint solve.
///
/// similarity: n x n, nonnegative, diagonal exactly 0.
/// membership: n x c, strictly positive when initialized positive.
struct SolveResult {
    Matrix similarity;
    Matrix membership;
    SolveTrace trace;
};

GramSplit gram_split(const Matrix& x);

/// alpha * |X - XS|_F^2 + |S - VV^T|_F^2 + beta * |S - W|_F^2.
double objective_value(const Matrix& x, const Matrix& w, const Matrix& s,
                       const Matrix& v, const SolverConfig& cfg);

/// One multiplicative similarity sweep:
///   S <- S .* sqrt((VV^T + a(X^TX)^+ + a(X^TX)^- S + bW) /
///                  (S + a(X^TX)^+ S + a(X^TX)^- + bS + guard)).
/// The diagonal stays exactly 0. Never increases the objective for fixed V.
Matrix update_similarity(const Matrix& s, const Matrix& v, const GramSplit& split,
                         const Matrix& w, const SolverConfig& cfg);

/// One multiplicative membership sweep:
///   V <- V .* ((SV + S^T V) / (2 VV^T V + guard))^{1/4}.
/// Strictly positive input stays strictly positive. Never increases the
/// objective for fixed S.
Matrix update_membership(const Matrix& s, const Matrix& v, const SolverConfig& cfg);

/// Alternating solve: initializes V and the off-diagonal of S uniformly in
/// (0,1) from cfg.seed (V first, then S, both row-major), runs similarity
/// then membership sweeps, and stops when both factor deltas fall below
/// cfg.tol or at cfg.max_iter. Throws NumericError when a non-finite value
/// appears, with the iteration index.
SolveResult solve(const Matrix& x, const Matrix& w, const SolverConfig& cfg);

/// Row-argmax labels in 0..c-1; ties break toward the smaller column.
std::vector<int> assign_clusters(const Matrix& v);

/// Fixed-point diagnostic: the largest |ratio - 1| where ratio is the
/// bracketed factor of the similarity update (over entries with S_ij > 1e-6)
/// or of the membership update (over every V entry). Small values certify
/// an interior stationary point of the multiplicative rules.
double stationarity_residual(const Matrix& s, const Matrix& v, const GramSplit& split,
                             const Matrix& w, const SolverConfig& cfg);

/// Strictly positive uniform draw in (0,1); the shared initialization
/// primitive for every seeded component.
inline double uniform_open01(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

} // namespace graphclust

#endif
