#pragma once

#include <cstdint>
#include <vector>

#include "hirsch/incidence.hpp"
#include "hirsch/polytope.hpp"

namespace hirsch {

// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Skeleton& g, int src);

// Throws EDisconnected when v is unreachable from u.
int dist(const Skeleton& g, int u, int v);

int diameter(const Skeleton& g);

// The layered DAG carrying exactly the x->y geodesics: vertices v with
// dist(x,v) + dist(v,y) = dist(x,y), arcs u->v for skeleton edges advancing
// one layer.
struct GeodesicDag {
    int x = 0, y = 0;
    int distance = 0;
    std::vector<int> nodes;                     // sorted vertex ids
    std::vector<std::pair<int, int>> arcs;      // directed u -> v
};

GeodesicDag geodesic_dag(const Skeleton& g, int x, int y);

// Number of x->y paths in the DAG (every one is a geodesic).
std::uint64_t count_geodesics(const GeodesicDag& dag);

// All x->y DAG paths as vertex sequences, up to cap (throws EBudgetExceeded
// beyond it). Deterministic order.
std::vector<std::vector<int>> enumerate_geodesics(const GeodesicDag& dag, std::size_t cap);

// Maximum number of point-distinct geodesics (pairwise sharing only x and
// y): unit-capacity max-flow on the geodesic DAG with internal vertices
// split, which equals the maximum by the disjoint-path/min-cut
// correspondence.
int count_disjoint_geodesics(const Skeleton& g, int x, int y);

// An edge {u,v} with {u,v} disjoint from {x,y} is good when some geodesic
// includes it or some geodesic avoids both endpoints; bad otherwise.
bool edge_is_good(const Skeleton& g, int x, int y, int u, int v);

struct EdgeClassification {
    std::vector<std::pair<int, int>> good;
    std::vector<std::pair<int, int>> bad;
};

// Classification of every skeleton edge touching neither x nor y.
EdgeClassification classify_edges(const Skeleton& g, int x, int y);

// Graph-diameter Hirsch bound: diameter <= n - d. Requires a simple
// polytope (the skeleton edge rule needs it).
bool check_hirsch(const Polytope& p);

struct NonrevisitingSearch {
    bool exists = false;
    std::vector<int> path;  // witness when found
    std::uint64_t states = 0;
};

// Does some x->y edge path never re-enter a facet it has left? Memoized
// search over (vertex, departed-facet set) states; throws EBudgetExceeded
// past the state budget.
NonrevisitingSearch check_nonrevisiting(const Polytope& p, int x, int y,
                                        std::uint64_t budget = 10'000'000);

}  // namespace hirsch
