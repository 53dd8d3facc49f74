#include "mohcs/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace mohcs {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    auto is_separator = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r'; };
    while (i < line.size()) {
        while (i < line.size() && is_separator(line[i])) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && !is_separator(line[i])) {
            ++i;
        }
        if (i > start) {
            fields.push_back(line.substr(start, i - start));
        }
    }
    return fields;
}

std::string_view trim_left(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    return s;
}

}  // namespace

ParsedGraph read_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::uint32_t> index;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::unordered_set<std::uint64_t> seen;
    EdgeListStats stats;

    auto intern = [&](std::string_view label) {
        auto [it, inserted] =
            index.try_emplace(std::string(label), static_cast<std::uint32_t>(labels.size()));
        if (inserted) {
            labels.emplace_back(label);
        }
        return it->second;
    };

    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string_view body = trim_left(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        const auto fields = split_fields(body);
        if (fields.empty()) {
            continue;
        }
        if (fields.size() > 2) {
            throw ParseError(line_number, "expected two vertex labels, found " +
                                              std::to_string(fields.size()) + " fields");
        }
        const std::uint32_t u = intern(fields[0]);
        if (fields.size() == 1) {
            continue;
        }
        const std::uint32_t v = intern(fields[1]);
        if (u == v) {
            ++stats.self_loops;
            continue;
        }
        const std::uint64_t key = (std::uint64_t{std::min(u, v)} << 32) | std::max(u, v);
        if (!seen.insert(key).second) {
            ++stats.duplicate_edges;
            continue;
        }
        edges.emplace_back(u, v);
    }
    if (in.bad()) {
        throw ParseError(line_number, "read error");
    }
    stats.lines = line_number;
    return {Graph::from_edges(std::move(labels), edges), stats};
}

ParsedGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (auto [u, v] : g.edges()) {
        out << g.label(u) << ' ' << g.label(v) << '\n';
    }
    for (VertexId v : g.vertices()) {
        if (g.degree(v) == 0) {
            out << g.label(v) << '\n';
        }
    }
}

void write_vertex_sets(std::ostream& out, const Graph& g, const std::vector<VertexSet>& sets) {
    for (const auto& set : sets) {
        bool first = true;
        for (VertexId v : set) {
            out << (first ? "" : " ") << g.label(v);
            first = false;
        }
        out << '\n';
    }
}

std::vector<VertexSet> read_vertex_sets(std::istream& in, const Graph& g) {
    std::vector<VertexSet> sets;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string_view body = trim_left(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        std::vector<VertexId> ids;
        for (auto field : split_fields(body)) {
            auto id = g.find(std::string(field));
            if (!id) {
                throw ParseError(line_number, "unknown vertex '" + std::string(field) + "'");
            }
            ids.push_back(*id);
        }
        sets.push_back(make_vertex_set(std::move(ids)));
    }
    return sets;
}

}  // namespace mohcs
