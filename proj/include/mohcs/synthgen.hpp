#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mohcs/graph.hpp"

namespace mohcs {

/// Planted-partition parameters: k clusters of n vertices, intra-cluster
/// edge probability p, inter-cluster probability q.
struct PlantedSpec {
    std::size_t k = 1;
    std::size_t n = 2;
    double p = 1.0;
    double q = 0.0;
    std::uint64_t seed = 1;

    std::size_t total_vertices() const noexcept { return n * k; }
};

struct EdgeExpectation {
    /// Expected edges inside one cluster: p * n(n-1)/2.
    double intra = 0.0;
    /// Expected edges between one pair of clusters: q * n^2.
    double inter = 0.0;
    /// p >= n / (2(n-1)) and q < 1/n.
    bool valid = false;
};

EdgeExpectation expected_edge_bounds(const PlantedSpec& spec);

/// Human-readable warnings for parameters outside the regime where
/// clusters are highly connected in expectation. Throws GraphError for
/// n < 2, k < 1 or probabilities outside [0, 1].
std::vector<std::string> validate(const PlantedSpec& spec);

struct PlantedGraph {
    Graph graph;
    std::vector<VertexSet> truth;
};

/// Vertices are labelled "0".."N-1"; cluster c holds [c*n, (c+1)*n).
/// Pairs (i, j), i < j, are visited in ascending order and each consumes
/// exactly one draw from a seeded 64-bit Mersenne twister.
PlantedGraph generate_planted(const PlantedSpec& spec);

struct LineGraph {
    Graph graph;
    /// Endpoints in the source graph of each line-graph vertex, by id.
    std::vector<std::pair<VertexId, VertexId>> endpoints;
};

/// One vertex per edge of g, labelled "u~v" with the smaller endpoint
/// label first; two are adjacent when their edges share an endpoint.
LineGraph line_graph(const Graph& g);

struct RecoveryScore {
    std::size_t exact_matches = 0;
    /// Best Jaccard overlap of each truth cluster with any found set.
    std::vector<double> per_cluster_jaccard;

    double mean_jaccard() const;
};

RecoveryScore recovery_score(const std::vector<VertexSet>& found,
                             const std::vector<VertexSet>& truth);

}  // namespace mohcs
