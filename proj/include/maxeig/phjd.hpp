#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxeig/edgefem.hpp"
#include "maxeig/mesh.hpp"
#include "maxeig/schwarz.hpp"

namespace maxeig {

enum class Method { phjd, plain_jd };

struct SolverConfig {
    Method method = Method::phjd;
    /// Residual b-norm tolerance; <= 0 disables the criterion (2D runs).
    double tol_resnorm = 1e-5;
    /// |lambda^{k+1} - lambda^k| tolerance; <= 0 disables the criterion (3D runs).
    double tol_dlambda = 1e-8;
    int max_iterations = 50;
    double overlap_ratio = 0.25;
    double helmholtz_rel_tol = 1e-12;
    double mass_solve_rel_tol = 1e-12;
    /// Relative cutoff separating the gradient kernel in the coarse eigensolve.
    double zero_mode_threshold = 1e-8;
    /// Safety valve on the Davidson basis, not a restart scheme.
    int max_basis = 30;
    int threads = 1;
    /// plain_jd only: project each correction onto the divergence-free space.
    bool helmholtz_projection = true;

    void validate() const;
};

struct IterationRecord {
    int k = 0;
    double lambda = 0.0;
    double dlambda = 0.0;  // |lambda^k - lambda^{k-1}|
    double resnorm = 0.0;  // ||r^{k-1}||_b that preceded this update
    double div_rel = 0.0;  // ||G^T M x|| / ||M x|| of the iterate
};

struct SolveReport {
    bool converged = false;
    double lambda = 0.0;
    int iterations = 0;  // correction solves + 1 (initial coarse step)
    double final_resnorm = 0.0;
    double final_dlambda = 0.0;
    std::vector<IterationRecord> history;
    int dof = 0;
    std::string warning;
};

/// In-progress eigeniteration: current pair, M-orthonormal divergence-free
/// Davidson basis, and cached K*W columns.
struct IterationState {
    int k = 1;
    double lambda = 0.0;
    Vector x;
    std::vector<Vector> W;
    std::vector<Vector> KW;
    std::vector<IterationRecord> history;
};

/// Coarse eigensolve, prolongation, Helmholtz projection, b-normalization.
std::pair<double, Vector> initial_guess(const Hierarchy& hier,
                                        const AssembledOperators& fine,
                                        const AssembledOperators& coarse,
                                        const SolverConfig& cfg);

/// g = lambda M x - K x (data of b(r^k, .)); resnorm_b = sqrt(g^T M^{-1} g).
std::pair<Vector, double> residual(const AssembledOperators& ops, const Vector& x, double lambda,
                                   const SolverConfig& cfg);

/// e = C g + beta C (M x) with beta enforcing b(e, x) = 0.
Vector correction_step(const TwoLevelPreconditioner& pc, const AssembledOperators& ops,
                       const Vector& x, const Vector& g, bool* degenerate_beta = nullptr);

/// t = e - G p with L p = G^T M e.
Vector helmholtz_project(const AssembledOperators& ops, const Vector& e, const SolverConfig& cfg);

struct RitzUpdate {
    double lambda = 0.0;
    Vector x;
    bool stagnated = false;  // t was linearly dependent; state kept
};

/// Append t to the basis and minimize the Rayleigh quotient over it.
RitzUpdate rayleigh_ritz(std::vector<Vector>& W, std::vector<Vector>& KW,
                         const AssembledOperators& ops, const Vector& t);

/// The two-level PHJD driver (Algorithm 2 counterpart).
SolveReport run(const SolverConfig& cfg, const Hierarchy& hier, const SubdomainCover& cover,
                const AssembledOperators& fine, const AssembledOperators& coarse);

/// Baseline Jacobi-Davidson with the exact bordered correction solve.
/// x0 (optional) must be a fine interior-edge coefficient vector; the default
/// start is a deterministic pseudo-random divergence-free vector.
SolveReport run_plain_jd(const SolverConfig& cfg, const AssembledOperators& fine,
                         const Vector* x0 = nullptr);

}  // namespace maxeig
