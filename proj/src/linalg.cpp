#include "maxeig/linalg.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <random>

#include "maxeig/errors.hpp"

namespace maxeig {

namespace {

Eigen::SparseMatrix<double> to_eigen(const SparseMatrix& a) {
    Eigen::SparseMatrix<double> out(a.rows(), a.cols());
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(static_cast<std::size_t>(a.nnz()));
    for (int r = 0; r < a.rows(); ++r)
        for (int k = a.row_offsets()[static_cast<std::size_t>(r)]; k < a.row_offsets()[static_cast<std::size_t>(r) + 1]; ++k)
            t.emplace_back(r, a.col_indices()[static_cast<std::size_t>(k)], a.values()[static_cast<std::size_t>(k)]);
    out.setFromTriplets(t.begin(), t.end());
    out.makeCompressed();
    return out;
}

// Deterministic probe vector, independent of any global RNG state.
Vector probe_vector(int n) {
    std::mt19937_64 gen(0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = dist(gen);
    return v;
}

}  // namespace

struct LuFactorization::Impl {
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    int n = 0;
    double condition_estimate = 0.0;
};

LuFactorization::LuFactorization(const SparseMatrix& a) : impl_(std::make_unique<Impl>()) {
    if (a.rows() != a.cols()) throw std::invalid_argument("LuFactorization: matrix not square");
    impl_->n = a.rows();
    if (impl_->n == 0) return;

    const double amax = a.max_abs();
    if (amax == 0.0) throw SingularMatrix("LuFactorization: zero matrix", 0);

    Eigen::SparseMatrix<double> ea = to_eigen(a);
    impl_->lu.compute(ea);
    if (impl_->lu.info() != Eigen::Success)
        throw SingularMatrix("LuFactorization: zero pivot (" + impl_->lu.lastErrorMessage() + ")", -1);

    // Pivot-threshold check (1e-13 * max|A|) via a solve probe: a pivot that
    // small makes ||A^{-1}|| * max|A| exceed ~1e13 and blows up the probe.
    const Vector b = probe_vector(impl_->n);
    const Vector y = impl_->lu.solve(b);
    if (!y.allFinite()) {
        int worst = 0;
        y.cwiseAbs().maxCoeff(&worst);
        throw SingularMatrix("LuFactorization: non-finite solve (exactly singular)", worst);
    }
    const double growth = y.lpNorm<Eigen::Infinity>() / b.lpNorm<Eigen::Infinity>();
    impl_->condition_estimate = growth * amax;
    if (impl_->condition_estimate > 1e13) {
        int worst = 0;
        y.cwiseAbs().maxCoeff(&worst);
        throw SingularMatrix("LuFactorization: pivot below 1e-13 * max|A|", worst);
    }
}

LuFactorization::~LuFactorization() = default;
LuFactorization::LuFactorization(LuFactorization&&) noexcept = default;
LuFactorization& LuFactorization::operator=(LuFactorization&&) noexcept = default;

Vector LuFactorization::solve(const Vector& b) const {
    if (b.size() != impl_->n) throw std::invalid_argument("LuFactorization::solve: dimension mismatch");
    if (impl_->n == 0) return Vector();
    return impl_->lu.solve(b);
}

int LuFactorization::size() const noexcept { return impl_->n; }

double LuFactorization::condition_estimate() const noexcept { return impl_->condition_estimate; }

CgResult cg_solve_detailed(const SparseMatrix& a, const Vector& b, double rel_tol, int max_it) {
    if (a.rows() != a.cols()) throw std::invalid_argument("cg_solve: matrix not square");
    if (b.size() != a.rows()) throw std::invalid_argument("cg_solve: dimension mismatch");

    const double bnorm = b.norm();
    CgResult res;
    res.x = Vector::Zero(b.size());
    if (bnorm == 0.0) return res;

    Vector r = b;
    Vector p = r;
    double rho = r.squaredNorm();
    const double stop = rel_tol * bnorm;

    for (int it = 1; it <= max_it; ++it) {
        const Vector ap = a.apply(p);
        const double denom = p.dot(ap);
        if (denom <= 0.0)
            throw NoConvergence("cg_solve: non-positive curvature (matrix not SPD?)", it);
        const double alpha = rho / denom;
        res.x += alpha * p;
        r -= alpha * ap;
        const double rho_next = r.squaredNorm();
        res.iterations = it;
        if (std::sqrt(rho_next) <= stop) {
            // Guard against recurrence drift with one true-residual check.
            const Vector rt = b - a.apply(res.x);
            res.rel_residual = rt.norm() / bnorm;
            if (res.rel_residual <= rel_tol) return res;
            r = rt;
            rho = r.squaredNorm();
            p = r;
            continue;
        }
        p = r + (rho_next / rho) * p;
        rho = rho_next;
    }
    throw NoConvergence("cg_solve: no convergence after max_it", max_it);
}

Vector cg_solve(const SparseMatrix& a, const Vector& b, double rel_tol, int max_it) {
    return cg_solve_detailed(a, b, rel_tol, max_it).x;
}

GenEig dense_geneig(const DenseMatrix& kd, const DenseMatrix& md) {
    if (kd.rows() != kd.cols() || md.rows() != md.cols() || kd.rows() != md.rows())
        throw std::invalid_argument("dense_geneig: dimension mismatch");
    Eigen::LLT<DenseMatrix> llt(md);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("dense_geneig: mass matrix not SPD (Cholesky failure)");

    Eigen::GeneralizedSelfAdjointEigenSolver<DenseMatrix> solver(kd, md,
                                                                 Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("dense_geneig: eigensolver failed");
    GenEig out;
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
    return out;
}

bool m_orthonormalize_append(std::vector<Vector>& basis, Vector v, const SparseMatrix& m) {
    const double original = std::sqrt(v.dot(m.apply(v)));
    if (!(original > 0.0)) return false;
    for (int pass = 0; pass < 2; ++pass) {
        for (const Vector& w : basis) {
            const double c = w.dot(m.apply(v));
            v -= c * w;
        }
    }
    const double norm = std::sqrt(v.dot(m.apply(v)));
    if (!(norm > 1e-10 * original)) return false;
    v /= norm;
    basis.push_back(std::move(v));
    return true;
}

std::vector<Vector> m_orthonormalize(std::vector<Vector> input, const SparseMatrix& m) {
    std::vector<Vector> basis;
    basis.reserve(input.size());
    for (Vector& v : input) m_orthonormalize_append(basis, std::move(v), m);
    return basis;
}

}  // namespace maxeig
