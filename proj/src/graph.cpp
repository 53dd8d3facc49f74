#include "mohcs/graph.hpp"

#include <algorithm>
#include <iterator>

namespace mohcs {

VertexSet make_vertex_set(std::vector<VertexId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

bool set_contains(const VertexSet& set, VertexId v) {
    return std::binary_search(set.begin(), set.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Graph::Graph() : labels_(std::make_shared<Labels>()) {}

Graph Graph::from_edges(std::vector<std::string> labels,
                        std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
    Graph g;
    auto table = std::make_shared<Labels>();
    table->index.reserve(labels.size());
    for (std::uint32_t i = 0; i < labels.size(); ++i) {
        if (!table->index.emplace(labels[i], i).second) {
            throw GraphError("duplicate vertex label '" + labels[i] + "'");
        }
    }
    table->names = std::move(labels);
    const std::size_t n = table->names.size();
    g.labels_ = std::move(table);
    g.alive_.assign(n, 1);
    g.record_.assign(n, no_record);
    g.vertex_count_ = n;

    std::vector<std::uint32_t> counts(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw GraphError("edge endpoint out of range");
        }
        if (u != v) {
            ++counts[u];
            ++counts[v];
        }
    }
    g.adjacency_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        g.adjacency_[i].reserve(counts[i]);
    }
    for (auto [u, v] : edges) {
        if (u != v) {
            g.adjacency_[u].push_back(VertexId{v});
            g.adjacency_[v].push_back(VertexId{u});
        }
    }
    std::size_t endpoint_total = 0;
    for (auto& adj : g.adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        adj.shrink_to_fit();
        endpoint_total += adj.size();
    }
    g.edge_count_ = endpoint_total / 2;
    return g;
}

Graph Graph::with_vertices(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
    }
    return from_edges(std::move(labels), {});
}

Graph::Labels& Graph::own_labels() {
    if (labels_.use_count() != 1) {
        labels_ = std::make_shared<Labels>(*labels_);
    }
    return const_cast<Labels&>(*labels_);
}

VertexId Graph::add_vertex(std::string label) {
    if (alive_.size() != original_count()) {
        throw GraphError("original vertices must be added before any condensed vertex");
    }
    if (labels_->index.contains(label)) {
        throw GraphError("duplicate vertex label '" + label + "'");
    }
    const VertexId id{static_cast<std::uint32_t>(alive_.size())};
    Labels& table = own_labels();
    table.index.emplace(label, id.value);
    table.names.push_back(std::move(label));
    adjacency_.emplace_back();
    alive_.push_back(1);
    record_.push_back(no_record);
    ++vertex_count_;
    return id;
}

VertexId Graph::add_condensed_vertex(std::size_t record_index) {
    const VertexId id{static_cast<std::uint32_t>(alive_.size())};
    adjacency_.emplace_back();
    alive_.push_back(1);
    record_.push_back(static_cast<std::uint32_t>(record_index));
    ++vertex_count_;
    return id;
}

void Graph::require(VertexId v) const {
    if (!contains(v)) {
        throw GraphError("unknown vertex id " + std::to_string(v.value));
    }
}

bool Graph::add_edge(VertexId u, VertexId v) {
    require(u);
    require(v);
    if (u == v) {
        return false;
    }
    auto& au = adjacency_[u.value];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) {
        return false;
    }
    au.insert(it, v);
    auto& av = adjacency_[v.value];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
    return true;
}

bool Graph::remove_edge(VertexId u, VertexId v) {
    require(u);
    require(v);
    auto& au = adjacency_[u.value];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it == au.end() || *it != v) {
        return false;
    }
    au.erase(it);
    auto& av = adjacency_[v.value];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --edge_count_;
    return true;
}

void Graph::remove_vertex(VertexId v) {
    require(v);
    for (VertexId u : adjacency_[v.value]) {
        auto& au = adjacency_[u.value];
        au.erase(std::lower_bound(au.begin(), au.end(), v));
    }
    edge_count_ -= adjacency_[v.value].size();
    adjacency_[v.value].clear();
    adjacency_[v.value].shrink_to_fit();
    alive_[v.value] = 0;
    --vertex_count_;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    require(u);
    require(v);
    const auto& au = adjacency_[u.value];
    return std::binary_search(au.begin(), au.end(), v);
}

std::size_t Graph::degree(VertexId v) const {
    require(v);
    return adjacency_[v.value].size();
}

std::size_t Graph::min_degree() const {
    if (empty()) {
        throw GraphError("minimum degree of the empty graph is undefined");
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < alive_.size(); ++i) {
        if (alive_[i] != 0) {
            best = std::min(best, adjacency_[i].size());
        }
    }
    return best;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    require(v);
    return adjacency_[v.value];
}

VertexSet Graph::vertices() const {
    VertexSet out;
    out.reserve(vertex_count_);
    for (std::uint32_t i = 0; i < alive_.size(); ++i) {
        if (alive_[i] != 0) {
            out.push_back(VertexId{i});
        }
    }
    return out;
}

std::optional<std::size_t> Graph::record_of(VertexId v) const {
    require(v);
    if (record_[v.value] == no_record) {
        return std::nullopt;
    }
    return record_[v.value];
}

std::string Graph::label(VertexId v) const {
    if (v.value < original_count()) {
        return labels_->names[v.value];
    }
    if (v.value < record_.size() && record_[v.value] != no_record) {
        return "<record " + std::to_string(record_[v.value]) + ">";
    }
    return "<" + std::to_string(v.value) + ">";
}

std::optional<VertexId> Graph::find(const std::string& label) const {
    auto it = labels_->index.find(label);
    if (it == labels_->index.end()) {
        return std::nullopt;
    }
    return VertexId{it->second};
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (std::uint32_t i = 0; i < alive_.size(); ++i) {
        if (alive_[i] == 0) {
            continue;
        }
        const VertexId u{i};
        const auto& adj = adjacency_[i];
        for (auto it = std::upper_bound(adj.begin(), adj.end(), u); it != adj.end(); ++it) {
            out.emplace_back(u, *it);
        }
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vs) {
    for (VertexId v : vs) {
        if (!g.contains(v)) {
            throw GraphError("vertex " + g.label(v) + " (id " + std::to_string(v.value) +
                             ") is not in the graph");
        }
    }
    Graph out;
    out.labels_ = g.labels_;
    out.alive_.assign(g.alive_.size(), 0);
    out.record_ = g.record_;
    out.adjacency_.resize(g.adjacency_.size());
    for (VertexId v : vs) {
        out.alive_[v.value] = 1;
    }
    std::size_t endpoint_total = 0;
    for (VertexId v : vs) {
        auto& adj = out.adjacency_[v.value];
        for (VertexId u : g.adjacency_[v.value]) {
            if (out.alive_[u.value] != 0) {
                adj.push_back(u);
            }
        }
        endpoint_total += adj.size();
    }
    out.vertex_count_ = vs.size();
    out.edge_count_ = endpoint_total / 2;
    return out;
}

std::size_t neighbors_in(const Graph& g, VertexId v, const VertexSet& members) {
    auto adj = g.neighbors(v);
    std::size_t count = 0;
    // Both ranges are sorted; walk the shorter one with binary search.
    if (adj.size() < members.size()) {
        for (VertexId u : adj) {
            count += set_contains(members, u) ? 1 : 0;
        }
    } else {
        for (VertexId u : members) {
            count += std::binary_search(adj.begin(), adj.end(), u) ? 1 : 0;
        }
    }
    return count;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> components;
    std::vector<std::uint8_t> seen(g.id_bound(), 0);
    std::vector<VertexId> stack;
    for (VertexId start : g.vertices()) {
        if (seen[start.value] != 0) {
            continue;
        }
        VertexSet component;
        seen[start.value] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (VertexId u : g.neighbors(v)) {
                if (seen[u.value] == 0) {
                    seen[u.value] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

std::vector<std::string> labels_of(const Graph& g, const VertexSet& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (VertexId v : vs) {
        out.push_back(g.label(v));
    }
    return out;
}

}  // namespace mohcs
