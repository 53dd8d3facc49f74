#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mohcs/graph.hpp"

namespace mohcs {

/// A global edge cut and the bipartition it induces.
struct CutResult {
    std::vector<std::pair<VertexId, VertexId>> cut_edges;
    VertexSet side_a;
    VertexSet side_b;

    const VertexSet& smaller_side() const noexcept {
        return side_a.size() <= side_b.size() ? side_a : side_b;
    }
    const VertexSet& larger_side() const noexcept {
        return side_a.size() <= side_b.size() ? side_b : side_a;
    }
};

struct EdgeConnectivity {
    std::size_t size = 0;
    /// For a disconnected graph: the component of the smallest vertex
    /// against everything else, with no cut edges.
    CutResult cut;
};

/// Degree test: 2 * min_degree >= |V|. Throws GraphError on the empty graph.
bool is_highly_connected(const Graph& g);

/// Degree test on the subgraph of g induced by members, without
/// materialising it. Throws GraphError if members is empty.
bool is_highly_connected(const Graph& g, const VertexSet& members);

/// Deterministic global minimum edge cut. Requires at least two vertices.
EdgeConnectivity edge_connectivity(const Graph& g);

/// Cut-based test: 2 * edge_connectivity >= |V|.
bool is_highly_connected_via_cut(const Graph& g);

/// Every inclusion-maximal vertex subset of size >= min_size whose induced
/// subgraph is highly connected. Exhaustive; limited to 20 vertices.
std::vector<VertexSet> enumerate_maximal_hcs(const Graph& g, std::size_t min_size = 4);

inline constexpr std::size_t max_oracle_vertices = 20;

}  // namespace mohcs
