#include "mohcs/mining.hpp"

#include <algorithm>
#include <string>

#include "mohcs/connectivity.hpp"

namespace mohcs {

std::vector<VertexId> adopt_into(const Graph& g, VertexSet& members, const VertexSet& candidates) {
    std::vector<VertexId> adopted;
    VertexSet pool = set_difference(candidates, members);
    if (pool.empty()) {
        return adopted;
    }
    std::vector<std::uint32_t> links(g.id_bound(), 0);
    std::vector<std::uint8_t> in_pool(g.id_bound(), 0);
    for (VertexId v : pool) {
        in_pool[v.value] = 1;
    }
    for (VertexId m : members) {
        for (VertexId u : g.neighbors(m)) {
            if (in_pool[u.value] != 0) {
                ++links[u.value];
            }
        }
    }

    while (!pool.empty()) {
        auto best = pool.begin();
        for (auto it = pool.begin(); it != pool.end(); ++it) {
            if (links[it->value] > links[best->value]) {
                best = it;
            }
        }
        const VertexId v = *best;
        // The enlarged set has |members| + 1 vertices, so v itself needs
        // 2 * links >= |members| + 1 before the full check is worth doing.
        if (2 * std::size_t{links[v.value]} < members.size() + 1) {
            break;
        }
        VertexSet grown = set_union(members, VertexSet{v});
        if (!is_highly_connected(g, grown)) {
            break;
        }
        members = std::move(grown);
        adopted.push_back(v);
        pool.erase(best);
        in_pool[v.value] = 0;
        for (VertexId u : g.neighbors(v)) {
            if (in_pool[u.value] != 0) {
                ++links[u.value];
            }
        }
    }
    return adopted;
}

RestoreOutcome restore_overlap(const Graph& original, const VertexSet& mined, VertexId condensed,
                               const RecordBook& book) {
    if (!book.is_condensed(condensed)) {
        throw GraphError("vertex " + std::to_string(condensed.value) + " is not a condensed vertex");
    }
    if (!set_contains(mined, condensed)) {
        throw GraphError("condensed vertex " + std::to_string(condensed.value) +
                         " is not part of the mined set");
    }
    RestoreOutcome outcome;
    VertexSet originals;
    VertexSet pending;
    for (VertexId v : mined) {
        if (v == condensed) {
            continue;
        }
        (book.is_condensed(v) ? pending : originals).push_back(v);
    }
    outcome.adopted = adopt_into(original, originals, book.expand_vertex(condensed));
    outcome.mined = set_union(originals, pending);
    return outcome;
}

void adopt_singletons(const Graph& original, MiningReport& report) {
    const VertexSet pool = report.singletons;
    for (std::size_t i = 0; i < report.subgraphs.size(); ++i) {
        auto& record = report.subgraphs[i];
        for (VertexId v : adopt_into(original, record.members, pool)) {
            report.adoption_log.push_back({v, i});
        }
    }
    VertexSet clustered;
    for (const auto& record : report.subgraphs) {
        clustered = set_union(clustered, record.members);
    }
    report.singletons = set_difference(pool, clustered);
}

namespace {

std::size_t count_originals(const Graph& work, const RecordBook& book) {
    std::size_t count = 0;
    for (VertexId v : work.vertices()) {
        count += book.is_condensed(v) ? 0 : 1;
    }
    return count;
}

}  // namespace

MiningReport mine(const Graph& g, const MiningOptions& options) {
    MiningReport report;
    const std::size_t min_size = std::max<std::size_t>(options.min_size, 1);
    RecordBook book(g.id_bound());
    Graph work = g;
    report.working_sizes.push_back(work.vertex_count());
    report.unmined_sizes.push_back(work.vertex_count());

    while (!work.empty()) {
        PeelResult peeled = peel(work);
        if (options.record_traces) {
            report.traces.push_back(std::move(peeled.trace));
        }
        if (peeled.survivors.empty()) {
            break;
        }
        const VertexSet& raw = peeled.survivors;
        if (raw.size() < min_size) {
            for (VertexId v : raw) {
                work.remove_vertex(v);
            }
            report.working_sizes.push_back(work.vertex_count());
            report.unmined_sizes.push_back(count_originals(work, book));
            continue;
        }

        VertexSet current = raw;
        std::vector<Adoption> restored;
        for (VertexId v : raw) {
            if (!book.is_condensed(v)) {
                continue;
            }
            RestoreOutcome outcome = restore_overlap(g, current, v, book);
            current = std::move(outcome.mined);
            for (VertexId a : outcome.adopted) {
                restored.push_back({a, book.size()});
            }
        }

        if (current.size() >= min_size && is_highly_connected(g, current)) {
            const std::size_t index = book.add({current, raw, book.size()});
            condense_in_place(work, raw, book, index);
            report.overlap_log.insert(report.overlap_log.end(), restored.begin(), restored.end());
        } else {
            for (VertexId v : raw) {
                work.remove_vertex(v);
            }
        }
        report.working_sizes.push_back(work.vertex_count());
        report.unmined_sizes.push_back(count_originals(work, book));
    }

    report.subgraphs = book.records();
    VertexSet clustered;
    for (const auto& record : report.subgraphs) {
        clustered = set_union(clustered, record.members);
    }
    report.singletons = set_difference(g.vertices(), clustered);
    adopt_singletons(g, report);
    return report;
}

}  // namespace mohcs
