#include "hirsch/incidence.hpp"

#include <algorithm>

namespace hirsch {

Skeleton Skeleton::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    Skeleton g;
    g.n = n;
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (const auto& [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    return g;
}

bool Skeleton::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

Incidence incidence(const Polytope& p) {
    if (!p.simple())
        throw Error(ErrorCode::NotSimple, "incidence matrix requires a simple polytope");
    Incidence inc;
    inc.n_vertices = p.vertex_count();
    inc.n_facets = p.facet_count();
    inc.rows.reserve(inc.n_vertices);
    for (const VertexData& v : p.vertices()) inc.rows.push_back(v.tight);
    return inc;
}

Skeleton skeleton(const Incidence& inc, int d) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < inc.n_vertices; ++u)
        for (int v = u + 1; v < inc.n_vertices; ++v)
            if (facet_card(inc.rows[u] & inc.rows[v]) == d - 1) edges.emplace_back(u, v);
    return Skeleton::from_edges(inc.n_vertices, std::move(edges));
}

Skeleton skeleton_of(const Polytope& p) { return skeleton(incidence(p), p.dim()); }

}  // namespace hirsch
