#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "maxeig/mesh.hpp"
#include "maxeig/phjd.hpp"

namespace maxeig {

/// Experiment description: a domain, a coarse grid, a refinement range, and
/// solver settings. Parsed from `key = value` lines; CLI flags override.
struct StudyConfig {
    DomainSpec domain;
    std::array<int, 3> coarse_resolution{0, 0, 0};
    std::pair<int, int> refinement_range{1, 1};
    double overlap_ratio = 0.25;
    SolverConfig solver;
    std::optional<double> reference_lambda;
    /// Scalability mode: coarse resolutions tried at a fixed fine resolution.
    std::vector<std::array<int, 3>> scalability_n_list;
    int threads = 1;
    std::string output_path;

    bool has_domain = false;
    bool has_coarse_resolution = false;

    void validate() const;
    /// Analytic or literature principal eigenvalue for the standard domains.
    double resolve_reference_lambda() const;
};

StudyConfig parse_config(const std::string& text);
/// Applies one `key = value` assignment (flag override path).
void apply_config_entry(StudyConfig& cfg, const std::string& key, const std::string& value);

struct StudyRow {
    std::string label;  // h for convergence rows, N for scalability rows
    long dof = 0;
    int iterations = 0;
    double dlambda = 0.0;
    double resnorm = 0.0;
    double lambda = 0.0;
    double conv_order = 0.0;  // NaN on the first row
    bool converged = true;
};

struct StudyReport {
    std::vector<StudyRow> rows;
    std::vector<std::string> provenance;  // config echo for the comment header
    bool all_converged = true;
};

StudyReport run_convergence_study(const StudyConfig& cfg);
StudyReport run_scalability_study(const StudyConfig& cfg);

enum class EmitFormat { csv, table };
EmitFormat emit_format_from_string(const std::string& name);

/// CSV header: h,dof,it,dlambda,resnorm,lambda,con_ord with 15 significant
/// digits on lambda; `table` renders the same data aligned.
std::string emit(const StudyReport& report, EmitFormat format);

/// One full solve at refinement_range.first (shared by `solve` and the studies).
struct SolveArtifacts {
    Hierarchy hier;
    SubdomainCover cover;
    AssembledOperators fine_ops;
    AssembledOperators coarse_ops;
    SolveReport report;
};
SolveArtifacts run_single_solve(const StudyConfig& cfg, int refinements);

}  // namespace maxeig
