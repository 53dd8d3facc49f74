#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mohcs/graph.hpp"

namespace mohcs {

/// A mined subgraph.
///
/// raw_members is the vertex set as it was found in the working graph and
/// may contain condensed ids; members holds original ids only and is the
/// set that gets reported.
struct SubgraphRecord {
    VertexSet members;
    VertexSet raw_members;
    std::size_t discovery_index = 0;
};

/// Owns the mined records and the condensed-vertex -> record mapping.
class RecordBook {
  public:
    /// Ids below original_count are original vertices.
    explicit RecordBook(std::size_t original_count) : original_count_(original_count) {}

    std::size_t add(SubgraphRecord record);
    void register_condensed(VertexId v, std::size_t record_index);

    bool is_condensed(VertexId v) const noexcept { return v.value >= original_count_; }
    /// Throws InvariantError for a condensed id without a record.
    std::size_t record_for(VertexId v) const;

    const SubgraphRecord& operator[](std::size_t i) const { return records_.at(i); }
    SubgraphRecord& operator[](std::size_t i) { return records_.at(i); }
    std::size_t size() const noexcept { return records_.size(); }
    const std::vector<SubgraphRecord>& records() const noexcept { return records_; }

    /// Original vertices a record stands for: every condensed id in
    /// raw_members is replaced, recursively, by the expansion of its own
    /// record.
    VertexSet expand(const SubgraphRecord& record) const;
    VertexSet expand_vertex(VertexId v) const;

  private:
    std::size_t original_count_;
    std::vector<SubgraphRecord> records_;
    std::unordered_map<std::uint32_t, std::size_t> condensed_;
};

/// Replaces vs by one new condensed vertex adjacent to every outside
/// vertex that had at least one neighbor in vs, and registers it against
/// record_index in book.
std::pair<Graph, VertexId> condense(const Graph& g, const VertexSet& vs, RecordBook& book,
                                    std::size_t record_index);

/// Same as condense, mutating g.
VertexId condense_in_place(Graph& g, const VertexSet& vs, RecordBook& book,
                           std::size_t record_index);

}  // namespace mohcs
