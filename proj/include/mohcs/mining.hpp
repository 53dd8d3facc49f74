#pragma once

#include <cstddef>
#include <vector>

#include "mohcs/graph.hpp"
#include "mohcs/peeler.hpp"
#include "mohcs/records.hpp"

namespace mohcs {

inline constexpr std::size_t default_min_size = 4;

struct MiningOptions {
    /// Mined subgraphs with fewer members are discarded.
    std::size_t min_size = default_min_size;
    /// Keep every peel trace in the report. Traces hold one entry per
    /// deleted vertex per iteration, which adds up on large sparse inputs.
    bool record_traces = true;
};

struct Adoption {
    VertexId vertex;
    std::size_t subgraph = 0;

    friend bool operator==(const Adoption&, const Adoption&) = default;
};

struct MiningReport {
    std::vector<SubgraphRecord> subgraphs;
    /// Original vertices that ended up in no subgraph.
    VertexSet singletons;
    /// One peel per outer iteration.
    std::vector<PeelTrace> traces;
    /// Singleton adoptions, in the order they happened.
    std::vector<Adoption> adoption_log;
    /// Members of a condensed subgraph adopted back during overlap restoration.
    std::vector<Adoption> overlap_log;
    /// Working-graph vertex count before the first and after every outer iteration.
    std::vector<std::size_t> working_sizes;
    /// Same, counting only original vertices not yet absorbed or discarded.
    std::vector<std::size_t> unmined_sizes;
};

/// Grows members by candidates, one vertex at a time: the candidate with
/// the most neighbors in the current members (ties: smallest id) is tried
/// and kept if the enlarged set is still highly connected in g; the first
/// rejection stops the loop. Returns the adopted vertices in order.
std::vector<VertexId> adopt_into(const Graph& g, VertexSet& members, const VertexSet& candidates);

struct RestoreOutcome {
    /// mined with the condensed vertex replaced by whatever was adopted.
    VertexSet mined;
    std::vector<VertexId> adopted;
};

/// Overlap restoration: drops the condensed vertex from a newly mined set
/// and offers every original vertex it stands for to the set's original
/// members for adoption. Throws GraphError if condensed is not condensed.
RestoreOutcome restore_overlap(const Graph& original, const VertexSet& mined, VertexId condensed,
                               const RecordBook& book);

/// Offers the unclustered vertices to every record, in discovery order.
/// A vertex may be adopted by several records.
void adopt_singletons(const Graph& original, MiningReport& report);

/// Iterated peeling with condensation, overlap restoration and final
/// singleton adoption.
MiningReport mine(const Graph& g, const MiningOptions& options = {});

}  // namespace mohcs
