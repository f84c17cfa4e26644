#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maxeig/edgefem.hpp"

namespace maxeig {

/// Brute-force dense reference for the assembled pencil (K, M).
struct ReferenceSpectrum {
    std::vector<double> eigenvalues;  // ascending
    int zero_mode_count = 0;          // eigenvalues below threshold (gradient kernel)
    double lambda1h = 0.0;            // smallest eigenvalue above threshold
    double threshold_used = 0.0;
};

/// Dense generalized eigensolve with gradient-kernel filtering. Feasible up
/// to 3000 interior DOFs; throws ConfigError beyond that.
ReferenceSpectrum dense_reference(const AssembledOperators& ops, double threshold_rel = 1e-8);

/// order_j = log2(e_{j-1} / e_j) for successive errors under mesh halving.
/// Nonpositive errors yield NaN markers, never fabricated orders.
std::vector<double> convergence_order(const std::vector<std::pair<std::string, double>>& errors);

}  // namespace maxeig
