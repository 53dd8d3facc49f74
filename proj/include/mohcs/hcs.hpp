#pragma once

#include <cstddef>
#include <vector>

#include "mohcs/graph.hpp"
#include "mohcs/records.hpp"

namespace mohcs {

struct HcsResult {
    std::vector<SubgraphRecord> subgraphs;
    VertexSet singletons;
};

/// Minimum-cut clustering baseline: split along a global minimum cut
/// until every part is highly connected. Parts smaller than min_size are
/// reported as singletons. Output subgraphs are pairwise disjoint.
HcsResult hcs(const Graph& g, std::size_t min_size = 4);

}  // namespace mohcs
