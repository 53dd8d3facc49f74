#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "mohcs/graph.hpp"

namespace mohcs {

/// Min-priority queue over vertices keyed by (degree, recency).
///
/// Smaller degree wins; among equal degrees the entry with the larger
/// recency stamp wins. push and decrease_key stamp the entry with a fresh
/// counter value. Implemented as degree buckets holding LIFO lists, which
/// gives O(1) push / decrease_key and amortised O(1) extract_min.
class PeelQueue {
  public:
    explicit PeelQueue(std::size_t id_bound = 0);

    void push(VertexId v, std::size_t degree);
    /// degree must not exceed the current key.
    void decrease_key(VertexId v, std::size_t degree);
    VertexId top();
    VertexId extract_min();
    void erase(VertexId v);

    bool contains(VertexId v) const noexcept {
        return v.value < queued_.size() && queued_[v.value] != 0;
    }
    std::size_t key(VertexId v) const;
    std::uint64_t stamp(VertexId v) const;
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

  private:
    static constexpr std::uint32_t none = 0xffffffffU;

    void ensure_slot(VertexId v);
    void link(std::uint32_t v, std::size_t bucket);
    void unlink(std::uint32_t v);

    std::vector<std::uint32_t> head_;
    std::vector<std::uint32_t> next_;
    std::vector<std::uint32_t> prev_;
    std::vector<std::size_t> key_;
    std::vector<std::uint64_t> stamp_;
    std::vector<std::uint8_t> queued_;
    std::size_t min_bucket_ = 0;
    std::size_t size_ = 0;
    std::uint64_t clock_ = 0;
};

enum class PeelOutcome { found_subgraph, exhausted };

struct PeelTrace {
    std::vector<VertexId> deleted_order;
    /// Remaining vertex count after each deletion.
    std::vector<std::size_t> sizes;
    std::size_t initial_size = 0;
    PeelOutcome outcome = PeelOutcome::exhausted;
};

struct PeelResult {
    /// Survivors when outcome is found_subgraph, empty otherwise.
    VertexSet survivors;
    PeelTrace trace;

    bool found() const noexcept { return trace.outcome == PeelOutcome::found_subgraph; }
};

/// Greedy minimum-degree deletion until 2 * min_degree >= |V| holds or the
/// graph runs out of vertices. g is not modified.
PeelResult peel(const Graph& g);

/// Same as peel, returning the surviving subgraph itself.
std::pair<std::optional<Graph>, PeelTrace> peel_to_hcs(const Graph& g);

/// Two-column table: deletion index, remaining vertex count.
void write_peel_trace(std::ostream& out, const PeelTrace& trace);

}  // namespace mohcs
