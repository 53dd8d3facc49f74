#include <gtest/gtest.h>

#include <chrono>
#include <random>
#include <sstream>

#include "mohcs/connectivity.hpp"
#include "mohcs/peeler.hpp"
#include "test_support.hpp"

namespace mohcs {
namespace {

using testing::clique;
using testing::clique_edges;
using testing::ids;
using testing::label_set;
using testing::labeled_graph;
using testing::path;

using Labels = std::vector<std::string>;

Labels deleted_labels(const Graph& g, const PeelTrace& trace) {
    Labels out;
    for (VertexId v : trace.deleted_order) {
        out.push_back(g.label(v));
    }
    return out;
}

Graph two_k4_with_bridge(const Labels& order, const std::string& left_end,
                         const std::string& right_end) {
    auto edges = clique_edges({"a", "b", "c", "d"});
    auto right = clique_edges({"e", "f", "g", "h"});
    edges.insert(edges.end(), right.begin(), right.end());
    edges.emplace_back(left_end, right_end);
    return labeled_graph(order, edges);
}

TEST(PeelQueue, StrictDegreeOrder) {
    PeelQueue q(4);
    q.push(VertexId{0}, 2);
    q.push(VertexId{1}, 3);
    EXPECT_EQ(q.extract_min(), VertexId{0});
}

TEST(PeelQueue, RecentEntryWinsTies) {
    PeelQueue q(4);
    q.push(VertexId{0}, 2);
    q.push(VertexId{1}, 2);
    EXPECT_LT(q.stamp(VertexId{0}), q.stamp(VertexId{1}));
    EXPECT_EQ(q.top(), VertexId{1});
}

TEST(PeelQueue, DecreaseKeyRefreshesStampAndDegreeDominates) {
    PeelQueue q(4);
    q.push(VertexId{0}, 2);
    q.push(VertexId{1}, 2);
    q.decrease_key(VertexId{0}, 1);
    EXPECT_GT(q.stamp(VertexId{0}), q.stamp(VertexId{1}));
    EXPECT_EQ(q.key(VertexId{0}), 1U);
    EXPECT_EQ(q.extract_min(), VertexId{0});
    EXPECT_EQ(q.extract_min(), VertexId{1});
    EXPECT_TRUE(q.empty());
}

TEST(PeelQueue, DecreaseKeyToSameDegreeStillRefreshes) {
    PeelQueue q(3);
    q.push(VertexId{0}, 5);
    q.push(VertexId{1}, 5);
    q.push(VertexId{2}, 5);
    q.decrease_key(VertexId{0}, 5);
    EXPECT_EQ(q.extract_min(), VertexId{0});
    EXPECT_EQ(q.extract_min(), VertexId{2});
    EXPECT_EQ(q.extract_min(), VertexId{1});
}

TEST(PeelQueue, EmptyQueueIsAnError) {
    PeelQueue q(2);
    EXPECT_ANY_THROW(q.extract_min());
    q.push(VertexId{1}, 0);
    q.erase(VertexId{1});
    EXPECT_FALSE(q.contains(VertexId{1}));
    EXPECT_ANY_THROW(q.top());
}

// Randomised comparison against a plain scan for the minimum.
TEST(PeelQueue, MatchesReferenceOrdering) {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 1 + rng() % 30;
        PeelQueue q(n);
        std::vector<std::size_t> key(n);
        std::vector<std::uint64_t> stamp(n);
        std::vector<bool> live(n, true);
        std::uint64_t clock = 0;
        for (std::size_t v = 0; v < n; ++v) {
            key[v] = rng() % 8;
            stamp[v] = ++clock;
            q.push(VertexId{static_cast<std::uint32_t>(v)}, key[v]);
        }
        std::size_t remaining = n;
        while (remaining > 0) {
            if (rng() % 3 == 0) {
                const std::size_t v = rng() % n;
                if (live[v] && key[v] > 0) {
                    key[v] -= 1 + rng() % key[v];
                    stamp[v] = ++clock;
                    q.decrease_key(VertexId{static_cast<std::uint32_t>(v)}, key[v]);
                }
                continue;
            }
            std::size_t best = n;
            for (std::size_t v = 0; v < n; ++v) {
                if (live[v] && (best == n || key[v] < key[best] ||
                                (key[v] == key[best] && stamp[v] > stamp[best]))) {
                    best = v;
                }
            }
            ASSERT_EQ(q.extract_min().value, best);
            live[best] = false;
            --remaining;
        }
    }
}

TEST(Peel, CliqueIsReturnedUnchanged) {
    Graph g = clique(4);
    PeelResult r = peel(g);
    EXPECT_TRUE(r.found());
    EXPECT_TRUE(r.trace.deleted_order.empty());
    EXPECT_EQ(r.survivors, g.vertices());
}

TEST(Peel, PathOfFourEndsInASingleEdge) {
    Graph g = labeled_graph({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}});
    PeelResult r = peel(g);
    EXPECT_EQ(deleted_labels(g, r.trace), (Labels{"4", "3"}));
    EXPECT_EQ(r.trace.sizes, (std::vector<std::size_t>{3, 2}));
    ASSERT_TRUE(r.found());
    EXPECT_EQ(label_set(g, r.survivors), (Labels{"1", "2"}));
}

TEST(Peel, EdgelessGraphIsExhausted) {
    Graph g = labeled_graph({"x", "y", "z"}, {});
    PeelResult r = peel(g);
    EXPECT_FALSE(r.found());
    EXPECT_TRUE(r.survivors.empty());
    EXPECT_EQ(r.trace.deleted_order.size(), 3U);
    auto [sub, trace] = peel_to_hcs(g);
    EXPECT_FALSE(sub.has_value());
}

TEST(Peel, EmptyGraphIsExhausted) {
    Graph g;
    PeelResult r = peel(g);
    EXPECT_FALSE(r.found());
    EXPECT_EQ(r.trace.initial_size, 0U);
}

TEST(Peel, PendantIsRemovedFromK5) {
    auto edges = clique_edges({"a", "b", "c", "d", "e"});
    edges.emplace_back("a", "p");
    Graph g = labeled_graph({"a", "b", "c", "d", "e", "p"}, edges);
    auto [sub, trace] = peel_to_hcs(g);
    EXPECT_EQ(deleted_labels(g, trace), (Labels{"p"}));
    ASSERT_TRUE(sub.has_value());
    EXPECT_EQ(label_set(g, sub->vertices()), (Labels{"a", "b", "c", "d", "e"}));
    EXPECT_EQ(sub->edge_count(), 10U);
    EXPECT_EQ(g.vertex_count(), 6U);
}

TEST(Peel, BridgedK4sCascadeWithinOneClique) {
    Graph g = two_k4_with_bridge({"a", "b", "c", "d", "e", "f", "g", "h"}, "d", "e");
    PeelResult r = peel(g);
    EXPECT_EQ(deleted_labels(g, r.trace), (Labels{"h", "g", "f", "e"}));
    ASSERT_TRUE(r.found());
    EXPECT_EQ(label_set(g, r.survivors), (Labels{"a", "b", "c", "d"}));
}

TEST(Peel, TraceSizesDropByOne) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        Graph g = testing::random_graph(15, 0.3, rng);
        PeelResult r = peel(g);
        std::size_t expected = g.vertex_count();
        ASSERT_EQ(r.trace.sizes.size(), r.trace.deleted_order.size());
        for (std::size_t s : r.trace.sizes) {
            EXPECT_EQ(s, --expected);
        }
    }
}

TEST(Peel, TraceTable) {
    Graph g = path(4);
    std::ostringstream out;
    write_peel_trace(out, peel(g).trace);
    EXPECT_EQ(out.str(), "0\t4\n1\t3\n2\t2\n");
}

TEST(PeelProperty, SurvivorsAreHighlyConnected) {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 2000; ++i) {
        const std::size_t n = 2 + rng() % 14;
        const double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
        Graph g = testing::random_graph(n, p, rng);
        auto [sub, trace] = peel_to_hcs(g);
        if (sub) {
            EXPECT_TRUE(is_highly_connected(*sub));
            EXPECT_EQ(sub->vertex_count() + trace.deleted_order.size(), n);
        } else {
            EXPECT_EQ(trace.deleted_order.size(), n);
        }
    }
}

TEST(PeelProperty, DeterministicForIdenticalInput) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        Graph g = testing::random_graph(20, 0.35, rng);
        Graph copy = Graph::from_edges(testing::names(20), [&] {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
            for (auto [u, v] : g.edges()) {
                e.emplace_back(u.value, v.value);
            }
            return e;
        }());
        PeelResult a = peel(g);
        PeelResult b = peel(copy);
        EXPECT_EQ(a.trace.deleted_order, b.trace.deleted_order);
        EXPECT_EQ(a.survivors, b.survivors);
    }
}

// Doubling the edge count at fixed |V| should cost roughly twice as much,
// not four times. The bound is loose to tolerate timer noise.
TEST(PeelProperty, TimeGrowsAboutLinearlyInEdges) {
    auto median_ms = [](const Graph& g) {
        std::vector<double> times;
        for (int rep = 0; rep < 5; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            PeelResult r = peel(g);
            const auto stop = std::chrono::steady_clock::now();
            EXPECT_GE(r.trace.initial_size, 1U);
            times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        }
        std::sort(times.begin(), times.end());
        return times[2];
    };
    std::mt19937_64 rng(5);
    Graph sparse = testing::random_graph(3000, 0.02, rng);
    Graph dense = testing::random_graph(3000, 0.04, rng);
    const double ratio = median_ms(dense) / median_ms(sparse);
    EXPECT_LT(ratio, 3.5) << "edges " << sparse.edge_count() << " -> " << dense.edge_count();
}

}  // namespace
}  // namespace mohcs
