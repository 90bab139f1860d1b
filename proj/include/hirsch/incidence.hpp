#pragma once

#include <vector>

#include "hirsch/polytope.hpp"

namespace hirsch {

// Vertex-facet incidence of a simple polytope. Row v is the tight set of
// vertex v in canonical vertex order.
struct Incidence {
    int n_vertices = 0;
    int n_facets = 0;
    std::vector<FacetSet> rows;
};

// The 1-skeleton as an abstract graph.
struct Skeleton {
    int n = 0;
    std::vector<std::pair<int, int>> edges;        // u < v
    std::vector<std::vector<int>> adj;

    static Skeleton from_edges(int n, std::vector<std::pair<int, int>> edges);
    bool has_edge(int u, int v) const;
};

// Throws ENotSimple when some vertex has more than dim tight facets.
Incidence incidence(const Polytope& p);

// Edge rule for simple d-polytopes: two vertices are adjacent iff their
// tight sets share exactly d-1 facets.
Skeleton skeleton(const Incidence& inc, int d);

Skeleton skeleton_of(const Polytope& p);

}  // namespace hirsch
