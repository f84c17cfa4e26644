#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "maxeig/types.hpp"

namespace maxeig {

struct Triplet {
    int row;
    int col;
    double value;
};

/// Compressed-sparse-row matrix. Column indices are sorted and unique within
/// each row; duplicate triplets are summed on construction.
class SparseMatrix {
public:
    SparseMatrix() = default;

    static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet> entries);
    static SparseMatrix identity(int n);
    static SparseMatrix diagonal(const Vector& d);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    std::int64_t nnz() const noexcept { return static_cast<std::int64_t>(values_.size()); }

    const std::vector<int>& row_offsets() const noexcept { return row_offsets_; }
    const std::vector<int>& col_indices() const noexcept { return col_indices_; }
    const std::vector<double>& values() const noexcept { return values_; }

    /// Entry lookup; zero when the position is not stored.
    double coeff(int row, int col) const;

    Vector apply(const Vector& x) const;            // y = A x
    Vector apply_transpose(const Vector& x) const;  // y = A^T x

    SparseMatrix transpose() const;

    /// Submatrix by (sorted or unsorted) index sets; indices are taken verbatim,
    /// so passing the same set twice yields the principal submatrix.
    SparseMatrix submatrix(const std::vector<int>& row_set, const std::vector<int>& col_set) const;

    DenseMatrix dense() const;

    double max_abs() const;
    double norm_inf() const;  // max absolute row sum

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> row_offsets_{0};
    std::vector<int> col_indices_;
    std::vector<double> values_;
};

Vector spmv(const SparseMatrix& a, const Vector& x);
inline Vector operator*(const SparseMatrix& a, const Vector& x) { return a.apply(x); }

/// C = A + alpha * B
SparseMatrix add(const SparseMatrix& a, double alpha, const SparseMatrix& b);
/// C = A * B
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

/// Matrix Market exchange format, coordinate real general/symmetric.
void write_matrix_market(std::ostream& out, const SparseMatrix& a, bool symmetric = false);
void write_matrix_market(const std::string& path, const SparseMatrix& a, bool symmetric = false);
SparseMatrix read_matrix_market(std::istream& in);
SparseMatrix read_matrix_market(const std::string& path);

}  // namespace maxeig
