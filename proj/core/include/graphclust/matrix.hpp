#ifndef GRAPHCLUST_MATRIX_HPP
#define GRAPHCLUST_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace graphclust {

/// Dense real matrix with row-major flat storage.
///
/// This is the one storage type shared by every module: data matrices,
/// affinity graphs, similarity matrices and membership factors are all
/// Matrix values with documented invariants. Entries are addressed as
/// (row, col). Instances are treated as immutable once built, so they can
/// be shared freely across concurrent workers.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// a * b. Throws ShapeError when a.cols != b.rows.
Matrix matmul(const Matrix& a, const Matrix& b);

/// a * b written into out (reused storage; out must not alias a or b).
void matmul_into(const Matrix& a, const Matrix& b, Matrix& out);

/// a^T * b without materializing the transpose.
void matmul_transA_into(const Matrix& a, const Matrix& b, Matrix& out);

/// a * b^T without materializing the transpose.
void matmul_transB_into(const Matrix& a, const Matrix& b, Matrix& out);

Matrix transpose(const Matrix& a);

/// Sum of squared entries (squared Frobenius norm).
double frobenius_norm_sq(const Matrix& a);

/// Largest absolute entry; the infinity-entry norm used by stopping rules.
double max_abs(const Matrix& a);

/// Largest absolute entrywise difference. Shapes must match.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// True when every entry is finite.
bool all_finite(const Matrix& a);

/// "RxC" rendering for error messages.
std::string shape_string(const Matrix& a);

} // namespace graphclust

#endif
