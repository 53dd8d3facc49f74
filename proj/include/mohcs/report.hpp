#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "mohcs/graph.hpp"
#include "mohcs/hcs.hpp"
#include "mohcs/mining.hpp"

namespace mohcs {

enum class ReportFormat { text, structured };

/// Labels of vs sorted ascending (byte-wise).
std::vector<std::string> sorted_labels(const Graph& g, const VertexSet& vs);

/// Text form: one subgraph per line in discovery order, members sorted by
/// label, then a final line "# singletons:" followed by the singletons.
/// Structured form: a JSON document.
void write_report(std::ostream& out, const Graph& g, const MiningReport& report,
                  ReportFormat format, std::size_t min_size);
void write_report(std::ostream& out, const Graph& g, const HcsResult& result,
                  ReportFormat format, std::size_t min_size);

/// Outer-iteration shrinkage: iteration index, working-graph vertex count.
void write_shrinkage(std::ostream& out, const MiningReport& report);

/// Subgraph count, size histogram and the largest sizes.
void write_summary(std::ostream& out, const std::vector<SubgraphRecord>& subgraphs,
                   std::size_t singleton_count);

}  // namespace mohcs
