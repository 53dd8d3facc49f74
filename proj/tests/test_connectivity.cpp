#include <gtest/gtest.h>

#include <random>

#include "mohcs/connectivity.hpp"
#include "test_support.hpp"

namespace mohcs {
namespace {

using testing::clique;
using testing::clique_edges;
using testing::cycle;
using testing::ids;
using testing::label_set;
using testing::labeled_graph;
using testing::path;

using Labels = std::vector<std::string>;

Graph k5_minus_edge() {
    Labels vs{"a", "b", "c", "d", "e"};
    auto edges = clique_edges(vs);
    edges.erase(edges.begin());  // a-b
    return labeled_graph(vs, edges);
}

Graph star(std::size_t leaves) {
    Labels vs{"hub"};
    std::vector<testing::LabelEdge> edges;
    for (std::size_t i = 0; i < leaves; ++i) {
        vs.push_back("leaf" + std::to_string(i));
        edges.emplace_back("hub", vs.back());
    }
    return labeled_graph(vs, edges);
}

void expect_valid_cut(const Graph& g, const EdgeConnectivity& ec) {
    const CutResult& cut = ec.cut;
    ASSERT_FALSE(cut.side_a.empty());
    ASSERT_FALSE(cut.side_b.empty());
    EXPECT_TRUE(set_intersection(cut.side_a, cut.side_b).empty());
    EXPECT_EQ(set_union(cut.side_a, cut.side_b), g.vertices());
    EXPECT_LE(cut.smaller_side().size(), cut.larger_side().size());
    std::vector<std::pair<VertexId, VertexId>> crossing;
    for (auto [u, v] : g.edges()) {
        if (set_contains(cut.side_a, u) != set_contains(cut.side_a, v)) {
            crossing.emplace_back(u, v);
        }
    }
    auto reported = cut.cut_edges;
    for (auto& [u, v] : reported) {
        if (v < u) {
            std::swap(u, v);
        }
    }
    std::sort(reported.begin(), reported.end());
    EXPECT_EQ(reported, crossing);
    EXPECT_EQ(ec.size, crossing.size());
}

TEST(HighlyConnected, Examples) {
    EXPECT_TRUE(is_highly_connected(clique(4)));
    EXPECT_FALSE(is_highly_connected(path(4)));
    EXPECT_TRUE(is_highly_connected(k5_minus_edge()));
    EXPECT_THROW(is_highly_connected(Graph{}), GraphError);
}

TEST(HighlyConnected, SubsetOverloadMatchesInducedSubgraph) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 500; ++i) {
        Graph g = testing::random_graph(10, 0.5, rng);
        VertexSet members;
        for (VertexId v : g.vertices()) {
            if (rng() % 2 == 0) {
                members.push_back(v);
            }
        }
        if (members.empty()) {
            EXPECT_THROW(is_highly_connected(g, members), GraphError);
            continue;
        }
        EXPECT_EQ(is_highly_connected(g, members),
                  is_highly_connected(induced_subgraph(g, members)));
    }
}

TEST(EdgeConnectivity, Examples) {
    EXPECT_EQ(edge_connectivity(cycle(4)).size, 2U);
    auto triangles = clique_edges({"a", "b", "c"});
    auto other = clique_edges({"x", "y", "z"});
    triangles.insert(triangles.end(), other.begin(), other.end());
    Graph two = labeled_graph({"a", "b", "c", "x", "y", "z"}, triangles);
    const EdgeConnectivity disconnected = edge_connectivity(two);
    EXPECT_EQ(disconnected.size, 0U);
    EXPECT_EQ(label_set(two, disconnected.cut.side_a), (Labels{"a", "b", "c"}));
    expect_valid_cut(two, disconnected);

    Graph g = k5_minus_edge();
    const EdgeConnectivity ec = edge_connectivity(g);
    EXPECT_EQ(ec.size, 3U);
    EXPECT_EQ(testing::brute_force_min_cut(g), 3U);
    expect_valid_cut(g, ec);
}

TEST(EdgeConnectivity, TooSmall) {
    EXPECT_THROW(edge_connectivity(Graph{}), GraphError);
    EXPECT_THROW(edge_connectivity(clique(1)), GraphError);
    EXPECT_EQ(edge_connectivity(clique(2)).size, 1U);
    EXPECT_EQ(edge_connectivity(labeled_graph({"a", "b"}, {})).size, 0U);
}

TEST(EdgeConnectivity, BridgeBetweenCliques) {
    auto edges = clique_edges({"a", "b", "c", "d"});
    auto right = clique_edges({"e", "f", "g", "h"});
    edges.insert(edges.end(), right.begin(), right.end());
    edges.emplace_back("d", "e");
    Graph g = labeled_graph({"a", "b", "c", "d", "e", "f", "g", "h"}, edges);
    const EdgeConnectivity ec = edge_connectivity(g);
    EXPECT_EQ(ec.size, 1U);
    EXPECT_EQ(label_set(g, ec.cut.smaller_side()).size(), 4U);
    expect_valid_cut(g, ec);
}

TEST(CutTest, Examples) {
    EXPECT_TRUE(is_highly_connected_via_cut(clique(4)));
    EXPECT_FALSE(is_highly_connected_via_cut(star(5)));
    EXPECT_EQ(edge_connectivity(star(5)).size, 1U);
}

// Cuts on larger random graphs, checked against exhaustive bipartitions.
TEST(EdgeConnectivity, MatchesBruteForce) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 3000; ++i) {
        const std::size_t n = 2 + rng() % 13;
        const double p = static_cast<double>(rng() % 100) / 100.0;
        Graph g = testing::random_graph(n, p, rng);
        const EdgeConnectivity ec = edge_connectivity(g);
        ASSERT_EQ(ec.size, testing::brute_force_min_cut(g)) << "n=" << n;
        expect_valid_cut(g, ec);
        EXPECT_LE(ec.size, testing::brute_force_min_degree(g));
    }
}

TEST(EdgeConnectivity, SurvivesVertexRemoval) {
    // Ids with holes exercise the dense renumbering.
    std::mt19937_64 rng(37);
    for (int i = 0; i < 300; ++i) {
        Graph g = testing::random_graph(14, 0.5, rng);
        for (int k = 0; k < 4; ++k) {
            const VertexId v{static_cast<std::uint32_t>(rng() % 14)};
            if (g.contains(v)) {
                g.remove_vertex(v);
            }
        }
        if (g.vertex_count() < 2) {
            continue;
        }
        const EdgeConnectivity ec = edge_connectivity(g);
        EXPECT_EQ(ec.size, testing::brute_force_min_cut(g));
        expect_valid_cut(g, ec);
    }
}

TEST(HighlyConnected, ImpliesConnected) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 2000; ++i) {
        Graph g = testing::random_graph(2 + rng() % 11, 0.6, rng);
        if (is_highly_connected(g)) {
            EXPECT_EQ(connected_components(g).size(), 1U);
        }
    }
}

TEST(Oracle, Examples) {
    Graph k5 = clique(5);
    EXPECT_EQ(enumerate_maximal_hcs(k5), (std::vector<VertexSet>{k5.vertices()}));

    auto edges = clique_edges({"a", "b", "c", "d"});
    auto right = clique_edges({"w", "x", "y", "z"});
    edges.insert(edges.end(), right.begin(), right.end());
    Graph two = labeled_graph({"a", "b", "c", "d", "w", "x", "y", "z"}, edges);
    EXPECT_EQ(enumerate_maximal_hcs(two),
              (std::vector<VertexSet>{ids(two, {"a", "b", "c", "d"}), ids(two, {"w", "x", "y", "z"})}));
}

// Two cliques glued along two vertices: every 8-set that drops one of the
// K6's private vertices is also highly connected, so the maximal family
// contains those mixtures besides the K6 itself. The K5 is not maximal.
TEST(Oracle, CliquesSharingTwoVertices) {
    auto edges = clique_edges({"a", "b", "c", "d", "e"});
    auto right = clique_edges({"c", "d", "f", "g", "h", "i"});
    edges.insert(edges.end(), right.begin(), right.end());
    Graph g = labeled_graph({"a", "b", "c", "d", "e", "f", "g", "h", "i"}, edges);
    std::vector<Labels> found;
    for (const auto& s : enumerate_maximal_hcs(g)) {
        found.push_back(label_set(g, s));
    }
    std::sort(found.begin(), found.end());
    const std::vector<Labels> expected{
        {"a", "b", "c", "d", "e", "f", "g", "h"},
        {"a", "b", "c", "d", "e", "f", "g", "i"},
        {"a", "b", "c", "d", "e", "f", "h", "i"},
        {"a", "b", "c", "d", "e", "g", "h", "i"},
        {"c", "d", "f", "g", "h", "i"},
    };
    EXPECT_EQ(found, expected);
}

TEST(Oracle, MatchesExplicitSupersetScan) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = 2 + rng() % 11;
        Graph g = testing::random_graph(n, 0.55, rng);
        const std::size_t min_size = 2 + rng() % 3;
        EXPECT_EQ(enumerate_maximal_hcs(g, min_size), testing::brute_force_maximal_hcs(g, min_size));
    }
}

TEST(Oracle, GuardedAboveTwentyVertices) {
    try {
        enumerate_maximal_hcs(clique(21));
        FAIL() << "expected GraphError";
    } catch (const GraphError& e) {
        EXPECT_NE(std::string(e.what()).find("desk"), std::string::npos);
    }
}

}  // namespace
}  // namespace mohcs
