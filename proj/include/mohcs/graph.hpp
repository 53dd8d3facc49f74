#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mohcs {

/// Stable identifier of a vertex slot. Slots are never reused within a
/// graph lineage (copies, induced subgraphs and condensations keep ids).
struct VertexId {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

enum class VertexKind : std::uint8_t { original, condensed };

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

VertexSet make_vertex_set(std::vector<VertexId> ids);
bool set_contains(const VertexSet& set, VertexId v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

/// Thrown when a caller hands the library an argument that violates an
/// operation's precondition (unknown vertex, empty graph, ...).
class GraphError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when internal bookkeeping is found inconsistent.
class InvariantError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Undirected simple unweighted graph.
///
/// Original vertices carry an external label and occupy ids
/// [0, original_count()). Condensed vertices are appended after them and
/// refer to a mined subgraph record by index. Adjacency lists are kept
/// sorted, so neighbor iteration is in ascending id order.
class Graph {
  public:
    static constexpr std::uint32_t no_record = std::numeric_limits<std::uint32_t>::max();

    Graph();

    /// Builds a graph with the given labels (ids follow label order) and
    /// edges. Self-loops and repeated edges are dropped.
    static Graph from_edges(std::vector<std::string> labels,
                            std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

    /// Graph on n vertices labelled "0".."n-1".
    static Graph with_vertices(std::size_t n);

    VertexId add_vertex(std::string label);
    VertexId add_condensed_vertex(std::size_t record_index);
    /// Returns false when the edge already exists or is a self-loop.
    bool add_edge(VertexId u, VertexId v);
    bool remove_edge(VertexId u, VertexId v);
    void remove_vertex(VertexId v);

    bool contains(VertexId v) const noexcept {
        return v.value < alive_.size() && alive_[v.value] != 0;
    }
    bool has_edge(VertexId u, VertexId v) const;
    bool empty() const noexcept { return vertex_count_ == 0; }

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edge_count_; }
    /// One past the largest id ever allocated in this lineage.
    std::size_t id_bound() const noexcept { return alive_.size(); }
    std::size_t original_count() const noexcept { return labels_ ? labels_->names.size() : 0; }

    std::size_t degree(VertexId v) const;
    /// Throws GraphError on the empty graph.
    std::size_t min_degree() const;
    std::span<const VertexId> neighbors(VertexId v) const;
    VertexSet vertices() const;

    VertexKind kind(VertexId v) const noexcept {
        return v.value < original_count() ? VertexKind::original : VertexKind::condensed;
    }
    std::optional<std::size_t> record_of(VertexId v) const;

    /// External label; condensed vertices render as "<record N>".
    std::string label(VertexId v) const;
    std::optional<VertexId> find(const std::string& label) const;

    /// Every edge once, as (u, v) with u < v, in ascending order.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

  private:
    struct Labels {
        std::vector<std::string> names;
        std::unordered_map<std::string, std::uint32_t> index;
    };

    void require(VertexId v) const;
    Labels& own_labels();

    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::uint8_t> alive_;
    std::vector<std::uint32_t> record_;
    std::shared_ptr<const Labels> labels_;
    std::size_t vertex_count_ = 0;
    std::size_t edge_count_ = 0;

    friend Graph induced_subgraph(const Graph& g, const VertexSet& vs);
};

/// Subgraph induced by vs. Vertex ids are preserved. Throws GraphError
/// naming the first id of vs that is not a vertex of g.
Graph induced_subgraph(const Graph& g, const VertexSet& vs);

/// Number of neighbors of v inside the sorted set members.
std::size_t neighbors_in(const Graph& g, VertexId v, const VertexSet& members);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Human-readable vertex labels in the order given.
std::vector<std::string> labels_of(const Graph& g, const VertexSet& vs);

}  // namespace mohcs
