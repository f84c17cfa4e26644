#pragma once

#include <functional>

#include "maxeig/mesh.hpp"
#include "maxeig/sparse.hpp"

namespace maxeig {

struct MaterialParams {
    double eps_r = 1.0;  // relative permittivity
    double mu_r = 1.0;   // relative permeability
};

/// Discrete operators of the lowest-order edge-element discretization with
/// essential boundary conditions eliminated. full_K/full_M keep the
/// unconstrained versions for the exactness tests.
struct AssembledOperators {
    SparseMatrix K;  // curl-curl stiffness, interior edges
    SparseMatrix M;  // mass, interior edges
    SparseMatrix G;  // discrete gradient, interior edges x interior nodes
    SparseMatrix L;  // nodal Laplacian G^T M G, interior nodes

    SparseMatrix full_K;
    SparseMatrix full_M;

    std::vector<int> interior_edge_map;  // edge -> interior index or -1
    std::vector<int> interior_edges;     // interior index -> edge
    std::vector<int> interior_node_map;  // node -> interior index or -1
    std::vector<int> interior_nodes;     // interior index -> node

    int n_interior_edges() const { return static_cast<int>(interior_edges.size()); }
    int n_interior_nodes() const { return static_cast<int>(interior_nodes.size()); }
};

AssembledOperators assemble(const MeshLevel& mesh, const MaterialParams& mat);

/// +-1 incidence matrix of the edge tangential-integral DOFs, restricted to
/// interior edges and nodes.
SparseMatrix discrete_gradient(const MeshLevel& mesh);
/// Unconstrained variant over all edges and nodes (tests only).
SparseMatrix discrete_gradient_full(const MeshLevel& mesh);

/// L = G^T M G.
SparseMatrix nodal_laplacian(const SparseMatrix& g, const SparseMatrix& m);

/// Edge-DOF interpolation of a linear vector field (midpoint rule is exact):
/// returns tangential line integrals over all edges (or interior only).
Vector interpolate_edge_field(const MeshLevel& mesh,
                              const std::function<std::array<double, 3>(const std::array<double, 3>&)>& field,
                              bool interior_only = false);

}  // namespace maxeig
