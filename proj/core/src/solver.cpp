#include "graphclust/solver.hpp"
#include "graphclust/errors.hpp"

#include <cmath>
#include <string>

namespace graphclust {

namespace {

void check_config(const SolverConfig& cfg, std::size_t n) {
    if (cfg.alpha < 0.0 || cfg.beta < 0.0)
        throw ConfigError("solver: alpha and beta must be nonnegative");
    if (cfg.clusters < 2 || cfg.clusters > n)
        throw ConfigError("solver: clusters=" + std::to_string(cfg.clusters) +
                          " out of range [2, " + std::to_string(n) + "]");
    if (cfg.tol <= 0.0) throw ConfigError("solver: tol must be positive");
    if (cfg.max_iter < 1) throw ConfigError("solver: max_iter must be at least 1");
    if (cfg.denom_guard <= 0.0) throw ConfigError("solver: denom_guard must be positive");
}

/// Scratch buffers reused across sweeps of one solve.
struct Workspace {
    Matrix vvt;     // V V^T, n x n
    Matrix pos_s;   // (X^T X)^+ S, n x n
    Matrix neg_s;   // (X^T X)^- S, n x n
    Matrix vtv;     // V^T V, c x c
    Matrix vvtv;    // V (V^T V), n x c
    Matrix sv;      // S V, n x c
    Matrix stv;     // S^T V, n x c
    Matrix xs;      // X S, d x n
};

void similarity_sweep(const Matrix& s, const Matrix& v, const GramSplit& split,
                      const Matrix& w, const SolverConfig& cfg, bool neg_is_zero,
                      Workspace& ws, Matrix& out) {
    const std::size_t n = s.rows();
    matmul_transB_into(v, v, ws.vvt);
    const bool use_gram = cfg.alpha != 0.0;
    if (use_gram) {
        matmul_into(split.pos, s, ws.pos_s);
        if (!neg_is_zero) matmul_into(split.neg, s, ws.neg_s);
    }
    if (out.rows() != n || out.cols() != n) out = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                out(i, j) = 0.0; // zero diagonal is preserved by the rule
                continue;
            }
            double num = ws.vvt(i, j) + cfg.beta * w(i, j);
            double den = s(i, j) + cfg.beta * s(i, j);
            if (use_gram) {
                num += cfg.alpha * split.pos(i, j);
                den += cfg.alpha * ws.pos_s(i, j);
                if (!neg_is_zero) {
                    num += cfg.alpha * ws.neg_s(i, j);
                    den += cfg.alpha * split.neg(i, j);
                }
            }
            out(i, j) = s(i, j) * std::sqrt(num / (den + cfg.denom_guard));
        }
    }
}

void membership_sweep(const Matrix& s, const Matrix& v, const SolverConfig& cfg,
                      Workspace& ws, Matrix& out) {
    matmul_into(s, v, ws.sv);
    matmul_transA_into(s, v, ws.stv);
    matmul_transA_into(v, v, ws.vtv);
    matmul_into(v, ws.vtv, ws.vvtv);
    const std::size_t n = v.rows();
    const std::size_t c = v.cols();
    if (out.rows() != n || out.cols() != c) out = Matrix(n, c);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < c; ++k) {
            const double num = ws.sv(i, k) + ws.stv(i, k);
            const double den = 2.0 * ws.vvtv(i, k) + cfg.denom_guard;
            out(i, k) = v(i, k) * std::pow(num / den, 0.25);
        }
    }
}

double objective_with_ws(const Matrix& x, const Matrix& w, const Matrix& s,
                         const Matrix& v, const SolverConfig& cfg, Workspace& ws) {
    matmul_into(x, s, ws.xs);
    double self_expr = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double r = x.data()[k] - ws.xs.data()[k];
        self_expr += r * r;
    }
    matmul_transB_into(v, v, ws.vvt);
    double fact = 0.0, prior = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const double rf = s.data()[k] - ws.vvt.data()[k];
        const double rp = s.data()[k] - w.data()[k];
        fact += rf * rf;
        prior += rp * rp;
    }
    return cfg.alpha * self_expr + fact + cfg.beta * prior;
}

} // namespace

GramSplit gram_split(const Matrix& x) {
    Matrix gram;
    matmul_transA_into(x, x, gram);
    const std::size_t n = gram.rows();
    GramSplit split{Matrix(n, n), Matrix(n, n)};
    for (std::size_t k = 0; k < gram.size(); ++k) {
        const double g = gram.data()[k];
        const double a = std::fabs(g);
        split.pos.data()[k] = (a + g) / 2.0;
        split.neg.data()[k] = (a - g) / 2.0;
    }
    return split;
}

double objective_value(const Matrix& x, const Matrix& w, const Matrix& s,
                       const Matrix& v, const SolverConfig& cfg) {
    const std::size_t n = x.cols();
    if (s.rows() != n || s.cols() != n)
        throw ShapeError("objective_value: S is " + shape_string(s) + ", expected " +
                         std::to_string(n) + "x" + std::to_string(n));
    if (!w.same_shape(s))
        throw ShapeError("objective_value: W is " + shape_string(w) + ", S is " + shape_string(s));
    if (v.rows() != n)
        throw ShapeError("objective_value: V is " + shape_string(v) + ", expected " +
                         std::to_string(n) + " rows");
    Workspace ws;
    return objective_with_ws(x, w, s, v, cfg, ws);
}

Matrix update_similarity(const Matrix& s, const Matrix& v, const GramSplit& split,
                         const Matrix& w, const SolverConfig& cfg) {
    Workspace ws;
    Matrix out;
    similarity_sweep(s, v, split, w, cfg, max_abs(split.neg) == 0.0, ws, out);
    return out;
}

Matrix update_membership(const Matrix& s, const Matrix& v, const SolverConfig& cfg) {
    Workspace ws;
    Matrix out;
    membership_sweep(s, v, cfg, ws, out);
    return out;
}

SolveResult solve(const Matrix& x, const Matrix& w, const SolverConfig& cfg) {
    const std::size_t n = x.cols();
    check_config(cfg, n);
    if (w.rows() != n || w.cols() != n)
        throw ShapeError("solve: W is " + shape_string(w) + ", expected " +
                         std::to_string(n) + "x" + std::to_string(n));

    std::mt19937_64 rng(cfg.seed);
    Matrix v(n, cfg.clusters);
    for (double& e : v.data()) e = uniform_open01(rng);
    Matrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s(i, j) = i == j ? 0.0 : uniform_open01(rng);

    const GramSplit split = gram_split(x);
    const bool neg_is_zero = max_abs(split.neg) == 0.0;

    Workspace ws;
    SolveTrace trace;
    trace.objective_per_iter.push_back(objective_with_ws(x, w, s, v, cfg, ws));

    Matrix s_next, v_next;
    for (std::size_t t = 1; t <= cfg.max_iter; ++t) {
        similarity_sweep(s, v, split, w, cfg, neg_is_zero, ws, s_next);
        const double ds = max_abs_diff(s_next, s);
        std::swap(s, s_next);

        membership_sweep(s, v, cfg, ws, v_next);
        const double dv = max_abs_diff(v_next, v);
        std::swap(v, v_next);

        const double obj = objective_with_ws(x, w, s, v, cfg, ws);
        if (!std::isfinite(obj) || !std::isfinite(ds) || !std::isfinite(dv))
            throw NumericError("solve: non-finite value encountered", static_cast<long>(t));

        trace.objective_per_iter.push_back(obj);
        trace.s_delta_per_iter.push_back(ds);
        trace.v_delta_per_iter.push_back(dv);
        trace.iterations = t;
        if (ds < cfg.tol && dv < cfg.tol) {
            trace.terminated_by = Termination::tolerance;
            return SolveResult{std::move(s), std::move(v), std::move(trace)};
        }
    }
    trace.terminated_by = Termination::max_iter;
    return SolveResult{std::move(s), std::move(v), std::move(trace)};
}

std::vector<int> assign_clusters(const Matrix& v) {
    std::vector<int> labels(v.rows());
    for (std::size_t i = 0; i < v.rows(); ++i) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < v.cols(); ++k)
            if (v(i, k) > v(i, best)) best = k;
        labels[i] = static_cast<int>(best);
    }
    return labels;
}

double stationarity_residual(const Matrix& s, const Matrix& v, const GramSplit& split,
                             const Matrix& w, const SolverConfig& cfg) {
    const std::size_t n = s.rows();
    Workspace ws;
    const bool neg_is_zero = max_abs(split.neg) == 0.0;
    matmul_transB_into(v, v, ws.vvt);
    const bool use_gram = cfg.alpha != 0.0;
    if (use_gram) {
        matmul_into(split.pos, s, ws.pos_s);
        if (!neg_is_zero) matmul_into(split.neg, s, ws.neg_s);
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (s(i, j) <= 1e-6) continue;
            double num = ws.vvt(i, j) + cfg.beta * w(i, j);
            double den = s(i, j) + cfg.beta * s(i, j);
            if (use_gram) {
                num += cfg.alpha * split.pos(i, j) + cfg.alpha * ws.pos_s(i, j);
                den += cfg.alpha * ws.pos_s(i, j);
                if (!neg_is_zero) {
                    num += cfg.alpha * ws.neg_s(i, j);
                    den += cfg.alpha * split.neg(i, j);
                }
            }
            worst = std::max(worst, std::fabs(std::sqrt(num / (den + cfg.denom_guard)) - 1.0));
        }
    }
    matmul_into(s, v, ws.sv);
    matmul_transA_into(s, v, ws.stv);
    matmul_transA_into(v, v, ws.vtv);
    matmul_into(v, ws.vtv, ws.vvtv);
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double ratio = std::pow((ws.sv.data()[k] + ws.stv.data()[k]) /
                                          (2.0 * ws.vvtv.data()[k] + cfg.denom_guard),
                                      0.25);
        worst = std::max(worst, std::fabs(ratio - 1.0));
    }
    return worst;
}

} // namespace graphclust
