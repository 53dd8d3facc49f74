#include "mohcs/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace mohcs {

EdgeExpectation expected_edge_bounds(const PlantedSpec& spec) {
    const auto n = static_cast<double>(spec.n);
    EdgeExpectation e;
    e.intra = spec.p * n * (n - 1.0) / 2.0;
    e.inter = spec.q * n * n;
    // Integer-free forms of p >= n/(2(n-1)) and q < 1/n.
    const bool intra_ok = spec.n >= 2 && 2.0 * (n - 1.0) * spec.p >= n;
    const bool inter_ok = spec.q * n < 1.0;
    e.valid = intra_ok && inter_ok;
    return e;
}

std::vector<std::string> validate(const PlantedSpec& spec) {
    if (spec.n < 2) {
        throw GraphError("planted clusters need n >= 2 vertices");
    }
    if (spec.k < 1) {
        throw GraphError("planted partition needs k >= 1 clusters");
    }
    if (!(spec.p >= 0.0 && spec.p <= 1.0) || !(spec.q >= 0.0 && spec.q <= 1.0)) {
        throw GraphError("edge probabilities must lie in [0, 1]");
    }
    std::vector<std::string> warnings;
    const auto n = static_cast<double>(spec.n);
    if (2.0 * (n - 1.0) * spec.p < n) {
        std::ostringstream msg;
        msg << "p = " << spec.p << " is below n/(2(n-1)) = " << n / (2.0 * (n - 1.0))
            << "; clusters are not highly connected in expectation";
        warnings.push_back(msg.str());
    }
    if (spec.q * n >= 1.0) {
        std::ostringstream msg;
        msg << "q = " << spec.q << " is not below 1/n = " << 1.0 / n
            << "; expected inter-cluster edges reach half the pair's vertex count";
        warnings.push_back(msg.str());
    }
    return warnings;
}

PlantedGraph generate_planted(const PlantedSpec& spec) {
    validate(spec);
    const std::size_t total = spec.total_vertices();
    if (total > std::numeric_limits<std::uint32_t>::max()) {
        throw GraphError("planted graph too large");
    }
    std::mt19937_64 rng(spec.seed);
    // 53 random mantissa bits; draw < p is never true for p = 0 and always
    // true for p = 1.
    auto draw = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    const double expected =
        static_cast<double>(spec.k) * expected_edge_bounds(spec).intra +
        static_cast<double>(spec.k * (spec.k - 1) / 2) * expected_edge_bounds(spec).inter;
    edges.reserve(static_cast<std::size_t>(expected * 1.1) + 16);
    for (std::uint32_t i = 0; i < total; ++i) {
        const std::size_t cluster_i = i / spec.n;
        for (std::uint32_t j = i + 1; j < total; ++j) {
            const double probability = (j / spec.n == cluster_i) ? spec.p : spec.q;
            if (draw() < probability) {
                edges.emplace_back(i, j);
            }
        }
    }

    std::vector<std::string> labels(total);
    for (std::size_t i = 0; i < total; ++i) {
        labels[i] = std::to_string(i);
    }
    PlantedGraph out{Graph::from_edges(std::move(labels), edges), {}};
    out.truth.resize(spec.k);
    for (std::size_t c = 0; c < spec.k; ++c) {
        for (std::size_t i = c * spec.n; i < (c + 1) * spec.n; ++i) {
            out.truth[c].push_back(VertexId{static_cast<std::uint32_t>(i)});
        }
    }
    return out;
}

LineGraph line_graph(const Graph& g) {
    LineGraph out;
    const auto edge_list = g.edges();
    std::vector<std::string> labels;
    labels.reserve(edge_list.size());
    std::vector<std::vector<std::uint32_t>> incident(g.id_bound());
    for (std::uint32_t e = 0; e < edge_list.size(); ++e) {
        auto [u, v] = edge_list[e];
        std::string lu = g.label(u);
        std::string lv = g.label(v);
        if (lv < lu) {
            std::swap(lu, lv);
        }
        labels.push_back(lu + "~" + lv);
        incident[u.value].push_back(e);
        incident[v.value].push_back(e);
        out.endpoints.emplace_back(u, v);
    }
    std::size_t line_edges = 0;
    for (const auto& inc : incident) {
        line_edges += inc.empty() ? 0 : inc.size() * (inc.size() - 1) / 2;
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(line_edges);
    for (const auto& inc : incident) {
        for (std::size_t a = 0; a < inc.size(); ++a) {
            for (std::size_t b = a + 1; b < inc.size(); ++b) {
                edges.emplace_back(inc[a], inc[b]);
            }
        }
    }
    out.graph = Graph::from_edges(std::move(labels), edges);
    return out;
}

double RecoveryScore::mean_jaccard() const {
    if (per_cluster_jaccard.empty()) {
        return 0.0;
    }
    return std::accumulate(per_cluster_jaccard.begin(), per_cluster_jaccard.end(), 0.0) /
           static_cast<double>(per_cluster_jaccard.size());
}

RecoveryScore recovery_score(const std::vector<VertexSet>& found,
                             const std::vector<VertexSet>& truth) {
    RecoveryScore score;
    score.per_cluster_jaccard.reserve(truth.size());
    for (const auto& cluster : truth) {
        double best = 0.0;
        bool exact = false;
        for (const auto& set : found) {
            const std::size_t shared = set_intersection(cluster, set).size();
            const std::size_t joined = cluster.size() + set.size() - shared;
            if (joined == 0) {
                continue;
            }
            best = std::max(best, static_cast<double>(shared) / static_cast<double>(joined));
            exact = exact || set == cluster;
        }
        score.per_cluster_jaccard.push_back(best);
        score.exact_matches += exact ? 1 : 0;
    }
    return score;
}

}  // namespace mohcs
