#pragma once

#include <memory>
#include <vector>

#include "maxeig/sparse.hpp"

namespace maxeig {

/// Pivoted sparse LU of a square matrix, for the shifted indefinite solves.
/// Construction throws SingularMatrix when a pivot falls below
/// 1e-13 * max|A| (estimated via a solve probe) or is exactly zero.
class LuFactorization {
public:
    explicit LuFactorization(const SparseMatrix& a);
    ~LuFactorization();
    LuFactorization(LuFactorization&&) noexcept;
    LuFactorization& operator=(LuFactorization&&) noexcept;
    LuFactorization(const LuFactorization&) = delete;
    LuFactorization& operator=(const LuFactorization&) = delete;

    Vector solve(const Vector& b) const;
    int size() const noexcept;

    /// Lower bound estimate of the condition number used for the singularity check.
    double condition_estimate() const noexcept;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

inline Vector lu_solve(const LuFactorization& f, const Vector& b) { return f.solve(b); }

struct CgResult {
    Vector x;
    int iterations = 0;
    double rel_residual = 0.0;
};

/// Conjugate gradients for SPD systems; throws NoConvergence past max_it.
CgResult cg_solve_detailed(const SparseMatrix& a, const Vector& b, double rel_tol, int max_it);
Vector cg_solve(const SparseMatrix& a, const Vector& b, double rel_tol, int max_it);

struct GenEig {
    Vector values;        // ascending
    DenseMatrix vectors;  // columns, M-orthonormal
};

/// Dense symmetric generalized eigenproblem Kd V = Md V diag(values).
/// Md must be SPD (Cholesky reduction to a standard symmetric problem).
GenEig dense_geneig(const DenseMatrix& kd, const DenseMatrix& md);

/// Modified Gram-Schmidt in the M-inner product, two passes per vector.
/// Vectors whose post-projection M-norm drops below 1e-10 of the original
/// are dropped, so the returned basis may be smaller.
std::vector<Vector> m_orthonormalize(std::vector<Vector> basis, const SparseMatrix& m);

/// Orthonormalize one vector against an already M-orthonormal basis and append
/// it. Returns false (basis unchanged) when the vector is linearly dependent.
bool m_orthonormalize_append(std::vector<Vector>& basis, Vector v, const SparseMatrix& m);

}  // namespace maxeig
