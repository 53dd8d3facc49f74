#include "mohcs/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

namespace mohcs {

bool is_highly_connected(const Graph& g) {
    if (g.empty()) {
        throw GraphError("highly-connected predicate is undefined on the empty graph");
    }
    return 2 * g.min_degree() >= g.vertex_count();
}

bool is_highly_connected(const Graph& g, const VertexSet& members) {
    if (members.empty()) {
        throw GraphError("highly-connected predicate is undefined on the empty graph");
    }
    const std::size_t n = members.size();
    for (VertexId v : members) {
        if (2 * neighbors_in(g, v, members) < n) {
            return false;
        }
    }
    return true;
}

namespace {

// Contracted multigraph in CSR form. Vertex i owns the half-open range
// [offsets[i], offsets[i+1]) of targets/weights.
struct WeightedGraph {
    std::vector<std::size_t> offsets;
    std::vector<std::uint32_t> targets;
    std::vector<std::uint32_t> weights;

    std::size_t size() const { return offsets.size() - 1; }
};

struct DisjointSets {
    std::vector<std::uint32_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0U);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            // Smaller root wins so the surviving representative is stable.
            if (b < a) {
                std::swap(a, b);
            }
            parent[b] = a;
        }
    }
};

// Max-priority bucket queue over integer keys that only increase.
class MaxBucketQueue {
  public:
    MaxBucketQueue(std::size_t n, std::uint64_t max_key)
        : head_(max_key + 1, none), next_(n, none), prev_(n, none), key_(n, 0), queued_(n, 1) {
        for (std::uint32_t v = static_cast<std::uint32_t>(n); v-- > 0;) {
            link(v, 0);
        }
        size_ = n;
    }

    bool empty() const { return size_ == 0; }
    bool queued(std::uint32_t v) const { return queued_[v] != 0; }
    std::uint64_t key(std::uint32_t v) const { return key_[v]; }

    void increase(std::uint32_t v, std::uint64_t by) {
        unlink(v);
        key_[v] += by;
        link(v, key_[v]);
        top_ = std::max(top_, key_[v]);
    }

    std::uint32_t pop_max() {
        while (head_[top_] == none) {
            --top_;
        }
        const std::uint32_t v = head_[top_];
        unlink(v);
        queued_[v] = 0;
        --size_;
        return v;
    }

  private:
    static constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();

    void link(std::uint32_t v, std::uint64_t k) {
        next_[v] = head_[k];
        prev_[v] = none;
        if (head_[k] != none) {
            prev_[head_[k]] = v;
        }
        head_[k] = v;
    }
    void unlink(std::uint32_t v) {
        const std::uint64_t k = key_[v];
        if (prev_[v] != none) {
            next_[prev_[v]] = next_[v];
        } else {
            head_[k] = next_[v];
        }
        if (next_[v] != none) {
            prev_[next_[v]] = prev_[v];
        }
    }

    std::vector<std::uint32_t> head_;
    std::vector<std::uint32_t> next_;
    std::vector<std::uint32_t> prev_;
    std::vector<std::uint64_t> key_;
    std::vector<std::uint8_t> queued_;
    std::uint64_t top_ = 0;
    std::size_t size_ = 0;
};

WeightedGraph to_weighted(const Graph& g, const VertexSet& ids, std::vector<std::uint32_t>& dense) {
    dense.assign(g.id_bound(), 0);
    for (std::uint32_t i = 0; i < ids.size(); ++i) {
        dense[ids[i].value] = i;
    }
    WeightedGraph wg;
    wg.offsets.resize(ids.size() + 1, 0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        wg.offsets[i + 1] = wg.offsets[i] + g.degree(ids[i]);
    }
    wg.targets.resize(wg.offsets.back());
    wg.weights.assign(wg.offsets.back(), 1);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        std::size_t pos = wg.offsets[i];
        for (VertexId u : g.neighbors(ids[i])) {
            wg.targets[pos++] = dense[u.value];
        }
    }
    return wg;
}

// Merges each group of vertices sharing a representative into one vertex
// and sums parallel edges. new_index maps old vertex -> new vertex.
WeightedGraph contract(const WeightedGraph& wg, const std::vector<std::uint32_t>& new_index,
                       std::size_t new_size) {
    const std::size_t n = wg.size();
    std::vector<std::size_t> group_offsets(new_size + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        ++group_offsets[new_index[v] + 1];
    }
    std::partial_sum(group_offsets.begin(), group_offsets.end(), group_offsets.begin());
    std::vector<std::uint32_t> grouped(n);
    {
        auto cursor = group_offsets;
        for (std::uint32_t v = 0; v < n; ++v) {
            grouped[cursor[new_index[v]]++] = v;
        }
    }

    WeightedGraph out;
    out.offsets.reserve(new_size + 1);
    out.offsets.push_back(0);
    std::vector<std::uint64_t> accumulated(new_size, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t s = 0; s < new_size; ++s) {
        touched.clear();
        for (std::size_t gi = group_offsets[s]; gi < group_offsets[s + 1]; ++gi) {
            const std::uint32_t v = grouped[gi];
            for (std::size_t e = wg.offsets[v]; e < wg.offsets[v + 1]; ++e) {
                const std::uint32_t t = new_index[wg.targets[e]];
                if (t == s) {
                    continue;
                }
                if (accumulated[t] == 0) {
                    touched.push_back(t);
                }
                accumulated[t] += wg.weights[e];
            }
        }
        std::sort(touched.begin(), touched.end());
        for (std::uint32_t t : touched) {
            out.targets.push_back(t);
            out.weights.push_back(static_cast<std::uint32_t>(accumulated[t]));
            accumulated[t] = 0;
        }
        out.offsets.push_back(out.targets.size());
    }
    return out;
}

}  // namespace

EdgeConnectivity edge_connectivity(const Graph& g) {
    if (g.vertex_count() < 2) {
        throw GraphError("edge connectivity needs at least two vertices");
    }
    EdgeConnectivity result;
    auto components = connected_components(g);
    if (components.size() > 1) {
        result.size = 0;
        result.cut.side_a = components.front();
        result.cut.side_b = set_difference(g.vertices(), components.front());
        return result;
    }
    if (g.edge_count() >= std::numeric_limits<std::uint32_t>::max()) {
        throw GraphError("graph too large for the minimum-cut routine");
    }

    // Nagamochi-Ibaraki refinement of Stoer-Wagner: every phase computes a
    // maximum-adjacency ordering, then contracts the last two vertices and
    // every edge whose scan value reached the best cut found so far.
    const VertexSet ids = g.vertices();
    std::vector<std::uint32_t> dense;
    WeightedGraph wg = to_weighted(g, ids, dense);
    std::vector<std::uint32_t> super_of(ids.size());
    std::iota(super_of.begin(), super_of.end(), 0U);

    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint8_t> best_side;

    while (wg.size() > 1) {
        const std::size_t n = wg.size();
        std::uint64_t max_weighted_degree = 0;
        for (std::uint32_t s = 0; s < n; ++s) {
            std::uint64_t wdeg = 0;
            for (std::size_t e = wg.offsets[s]; e < wg.offsets[s + 1]; ++e) {
                wdeg += wg.weights[e];
            }
            max_weighted_degree = std::max(max_weighted_degree, wdeg);
            if (wdeg < best) {
                best = wdeg;
                best_side.assign(ids.size(), 0);
                for (std::size_t v = 0; v < ids.size(); ++v) {
                    best_side[v] = super_of[v] == s ? 1 : 0;
                }
            }
        }

        DisjointSets merged(n);
        MaxBucketQueue queue(n, max_weighted_degree);
        std::uint32_t previous = 0;
        std::uint32_t last = 0;
        bool first = true;
        while (!queue.empty()) {
            const std::uint32_t x = queue.pop_max();
            if (!first) {
                previous = last;
            }
            last = x;
            first = false;
            for (std::size_t e = wg.offsets[x]; e < wg.offsets[x + 1]; ++e) {
                const std::uint32_t y = wg.targets[e];
                if (!queue.queued(y)) {
                    continue;
                }
                queue.increase(y, wg.weights[e]);
                if (queue.key(y) >= best) {
                    merged.unite(x, y);
                }
            }
        }
        merged.unite(previous, last);

        std::vector<std::uint32_t> new_index(n);
        std::vector<std::uint32_t> root_index(n, std::numeric_limits<std::uint32_t>::max());
        std::uint32_t next = 0;
        for (std::uint32_t v = 0; v < n; ++v) {
            const std::uint32_t r = merged.find(v);
            if (root_index[r] == std::numeric_limits<std::uint32_t>::max()) {
                root_index[r] = next++;
            }
            new_index[v] = root_index[r];
        }
        wg = contract(wg, new_index, next);
        for (auto& s : super_of) {
            s = new_index[s];
        }
    }

    for (std::size_t v = 0; v < ids.size(); ++v) {
        (best_side[v] != 0 ? result.cut.side_a : result.cut.side_b).push_back(ids[v]);
    }
    for (auto [u, v] : g.edges()) {
        if (best_side[dense[u.value]] != best_side[dense[v.value]]) {
            result.cut.cut_edges.emplace_back(u, v);
        }
    }
    result.size = static_cast<std::size_t>(best);
    if (result.size != result.cut.cut_edges.size()) {
        throw InvariantError("minimum cut witness does not match its value");
    }
    return result;
}

bool is_highly_connected_via_cut(const Graph& g) {
    return 2 * edge_connectivity(g).size >= g.vertex_count();
}

std::vector<VertexSet> enumerate_maximal_hcs(const Graph& g, std::size_t min_size) {
    const std::size_t n = g.vertex_count();
    if (n > max_oracle_vertices) {
        throw GraphError("exhaustive enumeration is limited to " +
                         std::to_string(max_oracle_vertices) + " vertices (got " +
                         std::to_string(n) +
                         "); it is a desk-scale oracle, not a clustering method");
    }
    if (n == 0) {
        return {};
    }
    min_size = std::max<std::size_t>(min_size, 1);
    const VertexSet ids = g.vertices();
    std::vector<std::uint32_t> adjacency(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && g.has_edge(ids[i], ids[j])) {
                adjacency[i] |= 1U << j;
            }
        }
    }

    const std::uint32_t full = static_cast<std::uint32_t>((1ULL << n) - 1);
    std::vector<std::uint8_t> highly_connected(std::size_t{full} + 1, 0);
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size < min_size) {
            continue;
        }
        bool ok = true;
        for (std::uint32_t rest = mask; rest != 0 && ok; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            ok = 2 * static_cast<std::size_t>(std::popcount(adjacency[v] & mask)) >= size;
        }
        highly_connected[mask] = ok ? 1 : 0;
        if (mask == full) {
            break;
        }
    }

    // has_superset[S] = some T containing S is highly connected.
    std::vector<std::uint8_t> has_superset = highly_connected;
    for (std::size_t bit = 0; bit < n; ++bit) {
        const std::uint32_t b = 1U << bit;
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if ((mask & b) == 0) {
                has_superset[mask] |= has_superset[mask | b];
            }
            if (mask == full) {
                break;
            }
        }
    }

    std::vector<VertexSet> out;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (highly_connected[mask] != 0) {
            bool maximal = true;
            for (std::uint32_t rest = full & ~mask; rest != 0 && maximal; rest &= rest - 1) {
                maximal = has_superset[mask | (rest & (~rest + 1))] == 0;
            }
            if (maximal) {
                VertexSet set;
                for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
                    set.push_back(ids[std::countr_zero(rest)]);
                }
                out.push_back(std::move(set));
            }
        }
        if (mask == full) {
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mohcs
