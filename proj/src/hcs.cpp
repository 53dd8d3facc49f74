#include "mohcs/hcs.hpp"

#include <algorithm>

#include "mohcs/connectivity.hpp"

namespace mohcs {

HcsResult hcs(const Graph& g, std::size_t min_size) {
    HcsResult result;
    min_size = std::max<std::size_t>(min_size, 1);
    if (g.empty()) {
        return result;
    }

    // Explicit stack: sparse inputs shave off one vertex per cut, which
    // would recurse |V| deep.
    std::vector<VertexSet> stack{g.vertices()};
    std::vector<VertexId> loose;
    while (!stack.empty()) {
        VertexSet part = std::move(stack.back());
        stack.pop_back();
        if (part.size() < min_size || part.size() < 2) {
            loose.insert(loose.end(), part.begin(), part.end());
            continue;
        }
        const Graph sub = induced_subgraph(g, part);
        if (is_highly_connected(sub)) {
            result.subgraphs.push_back({part, part, result.subgraphs.size()});
            continue;
        }
        // Push in reverse so the first side is processed first.
        auto components = connected_components(sub);
        if (components.size() > 1) {
            for (auto it = components.rbegin(); it != components.rend(); ++it) {
                stack.push_back(std::move(*it));
            }
            continue;
        }
        EdgeConnectivity cut = edge_connectivity(sub);
        stack.push_back(std::move(cut.cut.side_b));
        stack.push_back(std::move(cut.cut.side_a));
    }
    result.singletons = make_vertex_set(std::move(loose));
    return result;
}

}  // namespace mohcs
