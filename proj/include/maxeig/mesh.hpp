#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "maxeig/sparse.hpp"

namespace maxeig {

enum class DomainKind { rect2d, square2d, lshape2d, box3d, cube3d };

const char* to_string(DomainKind kind);
DomainKind domain_kind_from_string(const std::string& name);

struct DomainSpec {
    DomainKind kind = DomainKind::rect2d;
    /// (Lx, Ly[, Lz]); ignored for lshape2d which is fixed to
    /// (-1,1)^2 minus the closed quadrant [0,1)x(-1,0].
    std::vector<double> lengths;

    int dim() const;
    void validate() const;

    static DomainSpec rect2d(double lx, double ly);
    static DomainSpec square2d(double l);
    static DomainSpec lshape2d();
    static DomainSpec box3d(double lx, double ly, double lz);
    static DomainSpec cube3d(double l);
};

/// One structured triangulation (2D, squares split bottom-left -> top-right)
/// or brick grid (3D). Edges store ascending node pairs; that order fixes the
/// tangential DOF orientation.
struct MeshLevel {
    int dim = 2;
    DomainSpec spec;
    std::array<int, 3> cell_grid{0, 0, 0};  // lattice resolution per axis
    std::array<double, 3> origin{0.0, 0.0, 0.0};
    std::array<double, 3> cell_size{0.0, 0.0, 0.0};

    std::vector<std::array<double, 3>> nodes;
    int nodes_per_element = 3;
    int edges_per_element = 3;
    std::vector<int> element_nodes;  // flat, stride nodes_per_element
    std::vector<int> element_edges;  // flat, stride edges_per_element

    std::vector<std::array<int, 2>> edges;  // (n1, n2) with n1 < n2
    std::vector<std::uint8_t> edge_boundary;
    std::vector<std::uint8_t> node_boundary;

    // edge -> incident elements (CSR)
    std::vector<int> edge_element_offsets;
    std::vector<int> edge_element_list;
    // node -> incident elements (CSR)
    std::vector<int> node_element_offsets;
    std::vector<int> node_element_list;

    std::vector<int> interior_edge_index;  // edge -> interior index or -1
    std::vector<int> interior_edges;       // interior index -> edge
    std::vector<int> interior_node_index;  // node -> interior index or -1
    std::vector<int> interior_nodes;       // interior index -> node

    /// lattice cell -> first element id (-1 for cells outside an L-shape);
    /// 2D cells own two triangles: lower = id, upper = id + 1.
    std::vector<int> cell_first_element;

    int n_nodes() const { return static_cast<int>(nodes.size()); }
    int n_elements() const { return static_cast<int>(element_nodes.size()) / nodes_per_element; }
    int n_edges() const { return static_cast<int>(edges.size()); }
    int n_interior_edges() const { return static_cast<int>(interior_edges.size()); }
    int n_interior_nodes() const { return static_cast<int>(interior_nodes.size()); }

    const int* element_node_ptr(int e) const { return element_nodes.data() + static_cast<std::size_t>(e) * nodes_per_element; }
    const int* element_edge_ptr(int e) const { return element_edges.data() + static_cast<std::size_t>(e) * edges_per_element; }

    /// Maximal edge length (2D: the cell diagonal; 3D bricks: the longest axis step).
    double max_edge_length() const;

    /// Lattice cell index from per-axis cell coordinates.
    int cell_id(int ix, int iy, int iz = 0) const;
};

/// resolution: cells per axis; for lshape2d, cells per unit edge (one entry used).
MeshLevel build_mesh(const DomainSpec& spec, std::array<int, 3> resolution);

struct Hierarchy {
    DomainSpec spec;
    MeshLevel coarse;  // tau_H
    MeshLevel fine;    // tau_h, resolution = coarse * 2^refinements
    int refinements = 1;
    /// fine interior edges x coarse interior edges; reproduces any coarse
    /// edge-element function exactly on the fine level.
    SparseMatrix prolongation;
};

Hierarchy build_hierarchy(const DomainSpec& spec, std::array<int, 3> coarse_resolution, int refinements);

struct SubdomainCover {
    int N = 0;
    int overlap_layers = 0;
    /// Per-subdomain sorted set of fine interior-edge DOF indices interior to the
    /// enlarged subdomain.
    std::vector<std::vector<int>> interior_edges;
    /// Per-subdomain fine-element index sets of the enlarged subdomains.
    std::vector<std::vector<int>> elements_of;
    /// Observed max number of subdomains covering one fine element.
    int max_multiplicity = 0;
};

/// One subdomain per coarse element, enlarged by round(overlap_ratio * 2^r)
/// vertex-adjacency layers of fine elements.
SubdomainCover build_subdomain_cover(const Hierarchy& hier, double overlap_ratio);

/// Degenerate cover: a single subdomain holding every fine interior edge.
SubdomainCover single_cover(const MeshLevel& fine);

/// Plain-text listing (nodes, elements, edges), one record per line.
void dump_mesh(const MeshLevel& mesh, std::ostream& out);

}  // namespace maxeig
