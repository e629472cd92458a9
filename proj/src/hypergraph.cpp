#include <string>

#include "tagcloud/error.hpp"
#include "tagcloud/mincut.hpp"

namespace tagcloud {

RelationGraph expand_hyperedges(const Hypergraph& h) {
    std::vector<Edge> edges;
    edges.reserve(clique_edge_count(h));
    for (std::size_t e = 0; e < h.hyperedges.size(); ++e) {
        const auto& members = h.hyperedges[e];
        if (members.size() < 2)
            throw InvalidInput("hyperedge " + std::to_string(e) + " has fewer than 2 members");
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) edges.push_back({members[i], members[j], 1.0});
    }
    return RelationGraph(h.tag_count, edges);
}

std::size_t clique_edge_count(const Hypergraph& h) {
    std::size_t total = 0;
    for (const auto& members : h.hyperedges) total += members.size() * (members.size() - 1) / 2;
    return total;
}

}  // namespace tagcloud
