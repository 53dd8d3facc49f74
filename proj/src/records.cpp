#include "mohcs/records.hpp"

#include <algorithm>

namespace mohcs {

std::size_t RecordBook::add(SubgraphRecord record) {
    if (!records_.empty() && record.discovery_index <= records_.back().discovery_index) {
        throw InvariantError("discovery indices must be strictly increasing");
    }
    records_.push_back(std::move(record));
    return records_.size() - 1;
}

void RecordBook::register_condensed(VertexId v, std::size_t record_index) {
    if (!is_condensed(v)) {
        throw InvariantError("vertex " + std::to_string(v.value) + " is an original vertex");
    }
    if (record_index >= records_.size()) {
        throw InvariantError("condensed vertex registered against missing record " +
                             std::to_string(record_index));
    }
    condensed_[v.value] = record_index;
}

std::size_t RecordBook::record_for(VertexId v) const {
    auto it = condensed_.find(v.value);
    if (it == condensed_.end() || it->second >= records_.size()) {
        throw InvariantError("dangling condensed vertex " + std::to_string(v.value));
    }
    return it->second;
}

VertexSet RecordBook::expand_vertex(VertexId v) const {
    if (!is_condensed(v)) {
        return {v};
    }
    return expand(records_[record_for(v)]);
}

VertexSet RecordBook::expand(const SubgraphRecord& record) const {
    std::vector<VertexId> out;
    std::vector<VertexId> pending(record.raw_members.begin(), record.raw_members.end());
    std::vector<std::uint8_t> visited_records(records_.size(), 0);
    while (!pending.empty()) {
        const VertexId v = pending.back();
        pending.pop_back();
        if (!is_condensed(v)) {
            out.push_back(v);
            continue;
        }
        const std::size_t r = record_for(v);
        if (visited_records[r] != 0) {
            throw InvariantError("cyclic condensation through record " + std::to_string(r));
        }
        visited_records[r] = 1;
        const auto& raw = records_[r].raw_members;
        pending.insert(pending.end(), raw.begin(), raw.end());
    }
    return make_vertex_set(std::move(out));
}

VertexId condense_in_place(Graph& g, const VertexSet& vs, RecordBook& book,
                           std::size_t record_index) {
    if (vs.empty()) {
        throw GraphError("cannot condense an empty vertex set");
    }
    for (VertexId v : vs) {
        if (!g.contains(v)) {
            throw GraphError("vertex " + g.label(v) + " is not in the graph");
        }
    }
    VertexSet outside_neighbors;
    for (VertexId v : vs) {
        for (VertexId u : g.neighbors(v)) {
            if (!set_contains(vs, u)) {
                outside_neighbors.push_back(u);
            }
        }
    }
    outside_neighbors = make_vertex_set(std::move(outside_neighbors));

    for (VertexId v : vs) {
        g.remove_vertex(v);
    }
    const VertexId condensed = g.add_condensed_vertex(record_index);
    for (VertexId u : outside_neighbors) {
        g.add_edge(condensed, u);
    }
    book.register_condensed(condensed, record_index);
    return condensed;
}

std::pair<Graph, VertexId> condense(const Graph& g, const VertexSet& vs, RecordBook& book,
                                    std::size_t record_index) {
    Graph out = g;
    const VertexId condensed = condense_in_place(out, vs, book, record_index);
    return {std::move(out), condensed};
}

}  // namespace mohcs
