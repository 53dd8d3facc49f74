#include "mohcs/report.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "json.hpp"

namespace mohcs {

namespace {

using nlohmann::json;

void write_text(std::ostream& out, const Graph& g, const std::vector<SubgraphRecord>& subgraphs,
                const VertexSet& singletons) {
    auto write_line = [&out](const std::vector<std::string>& labels) {
        for (std::size_t i = 0; i < labels.size(); ++i) {
            out << (i == 0 ? "" : " ") << labels[i];
        }
    };
    for (const auto& record : subgraphs) {
        write_line(sorted_labels(g, record.members));
        out << '\n';
    }
    out << "# singletons:";
    for (const auto& label : sorted_labels(g, singletons)) {
        out << ' ' << label;
    }
    out << '\n';
}

json subgraphs_json(const Graph& g, const std::vector<SubgraphRecord>& subgraphs) {
    json list = json::array();
    for (const auto& record : subgraphs) {
        list.push_back({{"index", record.discovery_index},
                        {"size", record.members.size()},
                        {"members", sorted_labels(g, record.members)}});
    }
    return list;
}

json adoptions_json(const Graph& g, const std::vector<Adoption>& log) {
    json list = json::array();
    for (const auto& a : log) {
        list.push_back({{"vertex", g.label(a.vertex)}, {"subgraph", a.subgraph}});
    }
    return list;
}

}  // namespace

std::vector<std::string> sorted_labels(const Graph& g, const VertexSet& vs) {
    auto labels = labels_of(g, vs);
    std::sort(labels.begin(), labels.end());
    return labels;
}

void write_report(std::ostream& out, const Graph& g, const MiningReport& report,
                  ReportFormat format, std::size_t min_size) {
    if (format == ReportFormat::text) {
        write_text(out, g, report.subgraphs, report.singletons);
        return;
    }
    json traces = json::array();
    for (const auto& trace : report.traces) {
        // Condensed vertices are internal; only their presence is recorded.
        json deleted = json::array();
        for (VertexId v : trace.deleted_order) {
            deleted.push_back(v.value < g.id_bound() ? json(g.label(v)) : json(nullptr));
        }
        traces.push_back({{"initial_size", trace.initial_size},
                          {"outcome", trace.outcome == PeelOutcome::found_subgraph
                                          ? "found_subgraph"
                                          : "exhausted"},
                          {"deleted", std::move(deleted)}});
    }
    json doc = {{"algorithm", "mohcs"},
                {"min_size", min_size},
                {"vertices", g.vertex_count()},
                {"edges", g.edge_count()},
                {"subgraphs", subgraphs_json(g, report.subgraphs)},
                {"singletons", sorted_labels(g, report.singletons)},
                {"adoption_log", adoptions_json(g, report.adoption_log)},
                {"overlap_log", adoptions_json(g, report.overlap_log)},
                {"working_sizes", report.working_sizes},
                {"unmined_sizes", report.unmined_sizes},
                {"traces", std::move(traces)}};
    out << doc.dump(1) << '\n';
}

void write_report(std::ostream& out, const Graph& g, const HcsResult& result,
                  ReportFormat format, std::size_t min_size) {
    if (format == ReportFormat::text) {
        write_text(out, g, result.subgraphs, result.singletons);
        return;
    }
    json doc = {{"algorithm", "hcs"},
                {"min_size", min_size},
                {"vertices", g.vertex_count()},
                {"edges", g.edge_count()},
                {"subgraphs", subgraphs_json(g, result.subgraphs)},
                {"singletons", sorted_labels(g, result.singletons)}};
    out << doc.dump(1) << '\n';
}

void write_shrinkage(std::ostream& out, const MiningReport& report) {
    for (std::size_t i = 0; i < report.working_sizes.size(); ++i) {
        out << i << '\t' << report.working_sizes[i] << '\n';
    }
}

void write_summary(std::ostream& out, const std::vector<SubgraphRecord>& subgraphs,
                   std::size_t singleton_count) {
    std::map<std::size_t, std::size_t> histogram;
    std::vector<std::size_t> sizes;
    for (const auto& record : subgraphs) {
        ++histogram[record.members.size()];
        sizes.push_back(record.members.size());
    }
    std::sort(sizes.rbegin(), sizes.rend());
    out << "subgraphs: " << subgraphs.size() << '\n';
    out << "singletons: " << singleton_count << '\n';
    out << "size histogram (size count):\n";
    for (auto [size, count] : histogram) {
        out << "  " << size << ' ' << count << '\n';
    }
    out << "largest:";
    for (std::size_t i = 0; i < std::min<std::size_t>(sizes.size(), 11); ++i) {
        out << ' ' << sizes[i];
    }
    out << '\n';
}

}  // namespace mohcs
