#include "graphclust/matrix.hpp"
#include "graphclust/errors.hpp"

#include <Eigen/Core>

#include <cmath>
#include <string>

namespace graphclust {

namespace {

using EigenMap = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
using EigenMutMap = Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::string shape_string(const Matrix& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), b.cols());
    matmul_into(a, b, out);
    return out;
}

void matmul_into(const Matrix& a, const Matrix& b, Matrix& out) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: incompatible shapes " + shape_string(a) + " and " + shape_string(b));
    }
    if (out.rows() != a.rows() || out.cols() != b.cols()) {
        out = Matrix(a.rows(), b.cols());
    }
    EigenMap ma(a.data().data(), static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
    EigenMap mb(b.data().data(), static_cast<Eigen::Index>(b.rows()), static_cast<Eigen::Index>(b.cols()));
    EigenMutMap mo(out.data().data(), static_cast<Eigen::Index>(out.rows()), static_cast<Eigen::Index>(out.cols()));
    mo.noalias() = ma * mb;
}

void matmul_transA_into(const Matrix& a, const Matrix& b, Matrix& out) {
    if (a.rows() != b.rows()) {
        throw ShapeError("matmul_transA: incompatible shapes " + shape_string(a) + "^T and " + shape_string(b));
    }
    if (out.rows() != a.cols() || out.cols() != b.cols()) {
        out = Matrix(a.cols(), b.cols());
    }
    EigenMap ma(a.data().data(), static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
    EigenMap mb(b.data().data(), static_cast<Eigen::Index>(b.rows()), static_cast<Eigen::Index>(b.cols()));
    EigenMutMap mo(out.data().data(), static_cast<Eigen::Index>(out.rows()), static_cast<Eigen::Index>(out.cols()));
    mo.noalias() = ma.transpose() * mb;
}

void matmul_transB_into(const Matrix& a, const Matrix& b, Matrix& out) {
    if (a.cols() != b.cols()) {
        throw ShapeError("matmul_transB: incompatible shapes " + shape_string(a) + " and " + shape_string(b) + "^T");
    }
    if (out.rows() != a.rows() || out.cols() != b.rows()) {
        out = Matrix(a.rows(), b.rows());
    }
    EigenMap ma(a.data().data(), static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
    EigenMap mb(b.data().data(), static_cast<Eigen::Index>(b.rows()), static_cast<Eigen::Index>(b.cols()));
    EigenMutMap mo(out.data().data(), static_cast<Eigen::Index>(out.rows()), static_cast<Eigen::Index>(out.cols()));
    mo.noalias() = ma * mb.transpose();
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(j, i) = a(i, j);
    return out;
}

double frobenius_norm_sq(const Matrix& a) {
    double s = 0.0;
    for (double v : a.data()) s += v * v;
    return s;
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (double v : a.data()) m = std::max(m, std::fabs(v));
    return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) {
        throw ShapeError("max_abs_diff: incompatible shapes " + shape_string(a) + " and " + shape_string(b));
    }
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::fabs(a.data()[k] - b.data()[k]));
    return m;
}

bool all_finite(const Matrix& a) {
    for (double v : a.data())
        if (!std::isfinite(v)) return false;
    return true;
}

} // namespace graphclust
