#pragma once

#include <optional>
#include <vector>

#include "maxeig/edgefem.hpp"
#include "maxeig/linalg.hpp"
#include "maxeig/mesh.hpp"

namespace maxeig {

/// Two-level additive preconditioner: factorized shifted coarse solve plus
/// independent overlapping-subdomain shifted solves,
///   C = P (K_H - lambda M_H)^{-1} P^T + sum_i E_i (K_i - lambda M_i)^{-1} E_i^T,
/// applied to residual-type data vectors over fine interior edges.
class TwoLevelPreconditioner {
public:
    /// hier/coarse may be null for the single-level degenerate variant.
    TwoLevelPreconditioner(const AssembledOperators& fine,
                           const AssembledOperators* coarse,
                           const Hierarchy* hier,
                           const SubdomainCover& cover,
                           double shift,
                           int threads = 1);

    Vector apply(const Vector& g) const;

    double shift() const noexcept { return shift_; }
    /// Shift actually factored (perturbed when the guard fired).
    double coarse_shift_used() const noexcept { return coarse_shift_used_; }
    bool coarse_guard_fired() const noexcept { return coarse_guard_fired_; }
    int local_guard_count() const noexcept { return local_guard_count_; }
    int subdomains() const noexcept { return static_cast<int>(locals_.size()); }

    static constexpr double guard_epsilon = 1e-8;

private:
    double shift_;
    double coarse_shift_used_;
    bool coarse_guard_fired_ = false;
    int local_guard_count_ = 0;
    int threads_ = 1;
    int n_fine_ = 0;
    const SparseMatrix* prolongation_ = nullptr;
    const SubdomainCover* cover_ = nullptr;
    std::optional<LuFactorization> coarse_;
    std::vector<LuFactorization> locals_;
};

inline Vector apply(const TwoLevelPreconditioner& pc, const Vector& g) { return pc.apply(g); }

}  // namespace maxeig
