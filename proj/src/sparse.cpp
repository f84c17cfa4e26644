#include "maxeig/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "maxeig/errors.hpp"

namespace maxeig {

SparseMatrix SparseMatrix::from_triplets(int rows, int cols, std::vector<Triplet> entries) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMatrix: negative dimension");
    for (const Triplet& t : entries) {
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw std::invalid_argument("SparseMatrix: triplet index out of range");
        if (!std::isfinite(t.value)) throw std::invalid_argument("SparseMatrix: non-finite value");
    }
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseMatrix out;
    out.rows_ = rows;
    out.cols_ = cols;
    out.row_offsets_.assign(static_cast<std::size_t>(rows) + 1, 0);
    out.col_indices_.reserve(entries.size());
    out.values_.reserve(entries.size());

    std::size_t i = 0;
    for (int r = 0; r < rows; ++r) {
        while (i < entries.size() && entries[i].row == r) {
            int c = entries[i].col;
            double v = 0.0;
            while (i < entries.size() && entries[i].row == r && entries[i].col == c) {
                v += entries[i].value;
                ++i;
            }
            out.col_indices_.push_back(c);
            out.values_.push_back(v);
        }
        out.row_offsets_[static_cast<std::size_t>(r) + 1] = static_cast<int>(out.col_indices_.size());
    }
    return out;
}

SparseMatrix SparseMatrix::identity(int n) {
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) t.push_back({i, i, 1.0});
    return from_triplets(n, n, std::move(t));
}

SparseMatrix SparseMatrix::diagonal(const Vector& d) {
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(d.size()));
    for (int i = 0; i < d.size(); ++i) t.push_back({i, i, d[i]});
    return from_triplets(static_cast<int>(d.size()), static_cast<int>(d.size()), std::move(t));
}

double SparseMatrix::coeff(int row, int col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw std::out_of_range("SparseMatrix::coeff: index out of range");
    const int* begin = col_indices_.data() + row_offsets_[static_cast<std::size_t>(row)];
    const int* end = col_indices_.data() + row_offsets_[static_cast<std::size_t>(row) + 1];
    const int* it = std::lower_bound(begin, end, col);
    if (it != end && *it == col) return values_[static_cast<std::size_t>(it - col_indices_.data())];
    return 0.0;
}

Vector SparseMatrix::apply(const Vector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("SparseMatrix::apply: dimension mismatch");
    Vector y = Vector::Zero(rows_);
    for (int r = 0; r < rows_; ++r) {
        double s = 0.0;
        for (int k = row_offsets_[static_cast<std::size_t>(r)]; k < row_offsets_[static_cast<std::size_t>(r) + 1]; ++k)
            s += values_[static_cast<std::size_t>(k)] * x[col_indices_[static_cast<std::size_t>(k)]];
        y[r] = s;
    }
    return y;
}

Vector SparseMatrix::apply_transpose(const Vector& x) const {
    if (x.size() != rows_) throw std::invalid_argument("SparseMatrix::apply_transpose: dimension mismatch");
    Vector y = Vector::Zero(cols_);
    for (int r = 0; r < rows_; ++r) {
        const double xr = x[r];
        if (xr == 0.0) continue;
        for (int k = row_offsets_[static_cast<std::size_t>(r)]; k < row_offsets_[static_cast<std::size_t>(r) + 1]; ++k)
            y[col_indices_[static_cast<std::size_t>(k)]] += values_[static_cast<std::size_t>(k)] * xr;
    }
    return y;
}

SparseMatrix SparseMatrix::transpose() const {
    std::vector<Triplet> t;
    t.reserve(values_.size());
    for (int r = 0; r < rows_; ++r)
        for (int k = row_offsets_[static_cast<std::size_t>(r)]; k < row_offsets_[static_cast<std::size_t>(r) + 1]; ++k)
            t.push_back({col_indices_[static_cast<std::size_t>(k)], r, values_[static_cast<std::size_t>(k)]});
    return from_triplets(cols_, rows_, std::move(t));
}

SparseMatrix SparseMatrix::submatrix(const std::vector<int>& row_set, const std::vector<int>& col_set) const {
    std::vector<int> col_map(static_cast<std::size_t>(cols_), -1);
    for (std::size_t j = 0; j < col_set.size(); ++j) {
        if (col_set[j] < 0 || col_set[j] >= cols_) throw std::out_of_range("submatrix: column out of range");
        col_map[static_cast<std::size_t>(col_set[j])] = static_cast<int>(j);
    }
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < row_set.size(); ++i) {
        int r = row_set[i];
        if (r < 0 || r >= rows_) throw std::out_of_range("submatrix: row out of range");
        for (int k = row_offsets_[static_cast<std::size_t>(r)]; k < row_offsets_[static_cast<std::size_t>(r) + 1]; ++k) {
            int cm = col_map[static_cast<std::size_t>(col_indices_[static_cast<std::size_t>(k)])];
            if (cm >= 0) t.push_back({static_cast<int>(i), cm, values_[static_cast<std::size_t>(k)]});
        }
    }
    return from_triplets(static_cast<int>(row_set.size()), static_cast<int>(col_set.size()), std::move(t));
}

DenseMatrix SparseMatrix::dense() const {
    DenseMatrix d = DenseMatrix::Zero(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = row_offsets_[static_cast<std::size_t>(r)]; k < row_offsets_[static_cast<std::size_t>(r) + 1]; ++k)
            d(r, col_indices_[static_cast<std::size_t>(k)]) = values_[static_cast<std::size_t>(k)];
    return d;
}

double SparseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

double SparseMatrix::norm_inf() const {
    double m = 0.0;
    for (int r = 0; r < rows_; ++r) {
        double s = 0.0;
        for (int k = row_offsets_[static_cast<std::size_t>(r)]; k < row_offsets_[static_cast<std::size_t>(r) + 1]; ++k)
            s += std::abs(values_[static_cast<std::size_t>(k)]);
        m = std::max(m, s);
    }
    return m;
}

Vector spmv(const SparseMatrix& a, const Vector& x) { return a.apply(x); }

SparseMatrix add(const SparseMatrix& a, double alpha, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("add: dimension mismatch");
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(a.nnz() + b.nnz()));
    for (int r = 0; r < a.rows(); ++r) {
        int ka = a.row_offsets()[static_cast<std::size_t>(r)];
        int kb = b.row_offsets()[static_cast<std::size_t>(r)];
        const int ea = a.row_offsets()[static_cast<std::size_t>(r) + 1];
        const int eb = b.row_offsets()[static_cast<std::size_t>(r) + 1];
        while (ka < ea || kb < eb) {
            const int ca = ka < ea ? a.col_indices()[static_cast<std::size_t>(ka)] : a.cols();
            const int cb = kb < eb ? b.col_indices()[static_cast<std::size_t>(kb)] : a.cols();
            if (ca < cb) {
                t.push_back({r, ca, a.values()[static_cast<std::size_t>(ka)]});
                ++ka;
            } else if (cb < ca) {
                t.push_back({r, cb, alpha * b.values()[static_cast<std::size_t>(kb)]});
                ++kb;
            } else {
                t.push_back({r, ca, a.values()[static_cast<std::size_t>(ka)] + alpha * b.values()[static_cast<std::size_t>(kb)]});
                ++ka;
                ++kb;
            }
        }
    }
    return SparseMatrix::from_triplets(a.rows(), a.cols(), std::move(t));
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
    // Gustavson row-by-row product with a dense accumulator.
    const int n = a.rows();
    const int m = b.cols();
    std::vector<double> acc(static_cast<std::size_t>(m), 0.0);
    std::vector<int> marker(static_cast<std::size_t>(m), -1);
    std::vector<int> row_cols;
    std::vector<Triplet> t;
    for (int r = 0; r < n; ++r) {
        row_cols.clear();
        for (int ka = a.row_offsets()[static_cast<std::size_t>(r)]; ka < a.row_offsets()[static_cast<std::size_t>(r) + 1]; ++ka) {
            const int j = a.col_indices()[static_cast<std::size_t>(ka)];
            const double va = a.values()[static_cast<std::size_t>(ka)];
            for (int kb = b.row_offsets()[static_cast<std::size_t>(j)]; kb < b.row_offsets()[static_cast<std::size_t>(j) + 1]; ++kb) {
                const int c = b.col_indices()[static_cast<std::size_t>(kb)];
                if (marker[static_cast<std::size_t>(c)] != r) {
                    marker[static_cast<std::size_t>(c)] = r;
                    acc[static_cast<std::size_t>(c)] = 0.0;
                    row_cols.push_back(c);
                }
                acc[static_cast<std::size_t>(c)] += va * b.values()[static_cast<std::size_t>(kb)];
            }
        }
        std::sort(row_cols.begin(), row_cols.end());
        for (int c : row_cols) t.push_back({r, c, acc[static_cast<std::size_t>(c)]});
    }
    return SparseMatrix::from_triplets(n, m, std::move(t));
}

void write_matrix_market(std::ostream& out, const SparseMatrix& a, bool symmetric) {
    out << "%%MatrixMarket matrix coordinate real " << (symmetric ? "symmetric" : "general") << "\n";
    std::int64_t count = 0;
    for (int r = 0; r < a.rows(); ++r)
        for (int k = a.row_offsets()[static_cast<std::size_t>(r)]; k < a.row_offsets()[static_cast<std::size_t>(r) + 1]; ++k) {
            const int c = a.col_indices()[static_cast<std::size_t>(k)];
            if (!symmetric || c <= r) ++count;
        }
    out << a.rows() << " " << a.cols() << " " << count << "\n";
    out.precision(17);
    for (int r = 0; r < a.rows(); ++r)
        for (int k = a.row_offsets()[static_cast<std::size_t>(r)]; k < a.row_offsets()[static_cast<std::size_t>(r) + 1]; ++k) {
            const int c = a.col_indices()[static_cast<std::size_t>(k)];
            if (symmetric && c > r) continue;
            out << (r + 1) << " " << (c + 1) << " " << a.values()[static_cast<std::size_t>(k)] << "\n";
        }
}

void write_matrix_market(const std::string& path, const SparseMatrix& a, bool symmetric) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_matrix_market: cannot open " + path);
    write_matrix_market(out, a, symmetric);
}

SparseMatrix read_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("matrix market: empty stream");
    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket" || object != "matrix" || format != "coordinate" || field != "real")
        throw std::runtime_error("matrix market: unsupported header: " + line);
    const bool symmetric = symmetry == "symmetric";
    if (!symmetric && symmetry != "general")
        throw std::runtime_error("matrix market: unsupported symmetry: " + symmetry);

    do {
        if (!std::getline(in, line)) throw std::runtime_error("matrix market: missing size line");
    } while (!line.empty() && line[0] == '%');

    std::istringstream sizes(line);
    long rows = 0, cols = 0, count = 0;
    if (!(sizes >> rows >> cols >> count)) throw std::runtime_error("matrix market: bad size line");

    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(symmetric ? 2 * count : count));
    for (long k = 0; k < count; ++k) {
        long r = 0, c = 0;
        double v = 0.0;
        if (!(in >> r >> c >> v)) throw std::runtime_error("matrix market: truncated entries");
        t.push_back({static_cast<int>(r - 1), static_cast<int>(c - 1), v});
        if (symmetric && r != c) t.push_back({static_cast<int>(c - 1), static_cast<int>(r - 1), v});
    }
    return SparseMatrix::from_triplets(static_cast<int>(rows), static_cast<int>(cols), std::move(t));
}

SparseMatrix read_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_matrix_market: cannot open " + path);
    return read_matrix_market(in);
}

}  // namespace maxeig
