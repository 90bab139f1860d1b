#include "hirsch/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

namespace hirsch {

std::vector<int> bfs_distances(const Skeleton& g, int src) {
    std::vector<int> d(g.n, -1);
    std::deque<int> queue{src};
    d[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.adj[u]) {
            if (d[v] < 0) {
                d[v] = d[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return d;
}

int dist(const Skeleton& g, int u, int v) {
    int d = bfs_distances(g, u)[v];
    if (d < 0) throw Error(ErrorCode::Disconnected, "vertices are not connected");
    return d;
}

int diameter(const Skeleton& g) {
    int best = 0;
    for (int u = 0; u < g.n; ++u) {
        auto d = bfs_distances(g, u);
        for (int v = 0; v < g.n; ++v) {
            if (d[v] < 0) throw Error(ErrorCode::Disconnected, "skeleton is disconnected");
            best = std::max(best, d[v]);
        }
    }
    return best;
}

GeodesicDag geodesic_dag(const Skeleton& g, int x, int y) {
    if (x == y) throw Error(ErrorCode::BadArgument, "geodesic endpoints must differ");
    auto dx = bfs_distances(g, x);
    auto dy = bfs_distances(g, y);
    if (dx[y] < 0) throw Error(ErrorCode::Disconnected, "vertices are not connected");
    GeodesicDag dag;
    dag.x = x;
    dag.y = y;
    dag.distance = dx[y];
    for (int v = 0; v < g.n; ++v)
        if (dx[v] >= 0 && dy[v] >= 0 && dx[v] + dy[v] == dag.distance) dag.nodes.push_back(v);
    for (const auto& [u, v] : g.edges) {
        const bool u_in = dx[u] >= 0 && dy[u] >= 0 && dx[u] + dy[u] == dag.distance;
        const bool v_in = dx[v] >= 0 && dy[v] >= 0 && dx[v] + dy[v] == dag.distance;
        if (!u_in || !v_in) continue;
        if (dx[v] == dx[u] + 1) dag.arcs.emplace_back(u, v);
        else if (dx[u] == dx[v] + 1) dag.arcs.emplace_back(v, u);
    }
    std::sort(dag.arcs.begin(), dag.arcs.end());
    return dag;
}

namespace {

std::vector<std::vector<int>> dag_successors(const GeodesicDag& dag, int n) {
    std::vector<std::vector<int>> succ(n);
    for (const auto& [u, v] : dag.arcs) succ[u].push_back(v);
    return succ;
}

int max_node(const GeodesicDag& dag) {
    int n = std::max(dag.x, dag.y);
    for (int v : dag.nodes) n = std::max(n, v);
    return n + 1;
}

}  // namespace

std::uint64_t count_geodesics(const GeodesicDag& dag) {
    const int n = max_node(dag);
    auto succ = dag_successors(dag, n);
    // Count by decreasing distance from x; the DAG is layered so a plain
    // reverse-topological sweep is enough.
    std::vector<std::uint64_t> ways(n, 0);
    ways[dag.y] = 1;
    std::vector<int> order = dag.nodes;
    // Layer = distance from x, recovered by relaxation (sizes are tiny).
    std::vector<int> layer(n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [u, v] : dag.arcs)
            if (layer[v] < layer[u] + 1) {
                layer[v] = layer[u] + 1;
                changed = true;
            }
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return layer[a] > layer[b]; });
    for (int u : order)
        for (int v : succ[u]) ways[u] += ways[v];
    return ways[dag.x];
}

std::vector<std::vector<int>> enumerate_geodesics(const GeodesicDag& dag, std::size_t cap) {
    const int n = max_node(dag);
    auto succ = dag_successors(dag, n);
    for (auto& s : succ) std::sort(s.begin(), s.end());
    std::vector<std::vector<int>> out;
    std::vector<int> path{dag.x};
    auto dfs = [&](auto&& self, int u) -> void {
        if (u == dag.y) {
            if (out.size() >= cap)
                throw Error(ErrorCode::BudgetExceeded, "too many geodesics to enumerate");
            out.push_back(path);
            return;
        }
        for (int v : succ[u]) {
            path.push_back(v);
            self(self, v);
            path.pop_back();
        }
    };
    dfs(dfs, dag.x);
    return out;
}

namespace {

// Unit-capacity max-flow with internal vertices split into in/out halves.
struct FlowNet {
    struct Arc {
        int to, rev, cap;
    };
    std::vector<std::vector<Arc>> adj;

    explicit FlowNet(int n) : adj(n) {}

    void add(int u, int v, int cap) {
        adj[u].push_back({v, static_cast<int>(adj[v].size()), cap});
        adj[v].push_back({u, static_cast<int>(adj[u].size()) - 1, 0});
    }

    int augment(int s, int t) {
        std::vector<std::pair<int, int>> parent(adj.size(), {-1, -1});
        std::deque<int> queue{s};
        parent[s] = {s, -1};
        while (!queue.empty() && parent[t].first < 0) {
            int u = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < adj[u].size(); ++i) {
                const Arc& a = adj[u][i];
                if (a.cap > 0 && parent[a.to].first < 0) {
                    parent[a.to] = {u, static_cast<int>(i)};
                    queue.push_back(a.to);
                }
            }
        }
        if (parent[t].first < 0) return 0;
        for (int v = t; v != s;) {
            auto [u, i] = parent[v];
            adj[u][i].cap -= 1;
            adj[adj[u][i].to][adj[u][i].rev].cap += 1;
            v = u;
        }
        return 1;
    }

    int max_flow(int s, int t) {
        int total = 0;
        while (augment(s, t)) ++total;
        return total;
    }
};

}  // namespace

int count_disjoint_geodesics(const Skeleton& g, int x, int y) {
    GeodesicDag dag = geodesic_dag(g, x, y);
    const int n = max_node(dag);
    // Node v maps to in = 2v, out = 2v+1.
    FlowNet net(2 * n);
    for (int v : dag.nodes) {
        const int cap = (v == x || v == y) ? static_cast<int>(dag.arcs.size()) + 1 : 1;
        net.add(2 * v, 2 * v + 1, cap);
    }
    for (const auto& [u, v] : dag.arcs) net.add(2 * u + 1, 2 * v, 1);
    return net.max_flow(2 * dag.x, 2 * dag.y + 1);
}

bool edge_is_good(const Skeleton& g, int x, int y, int u, int v) {
    auto dx = bfs_distances(g, x);
    auto dy = bfs_distances(g, y);
    const int total = dx[y];
    if (total < 0) throw Error(ErrorCode::Disconnected, "marked vertices are not connected");
    if (dx[u] >= 0 && dy[v] >= 0 && dx[u] + 1 + dy[v] == total) return true;
    if (dx[v] >= 0 && dy[u] >= 0 && dx[v] + 1 + dy[u] == total) return true;
    // Avoidance arm: BFS in the skeleton with both endpoints removed.
    std::vector<int> d(g.n, -1);
    d[u] = d[v] = -2;
    std::deque<int> queue{x};
    d[x] = 0;
    while (!queue.empty()) {
        int w = queue.front();
        queue.pop_front();
        for (int z : g.adj[w]) {
            if (d[z] == -1) {
                d[z] = d[w] + 1;
                queue.push_back(z);
            }
        }
    }
    return d[y] == total;
}

EdgeClassification classify_edges(const Skeleton& g, int x, int y) {
    EdgeClassification out;
    for (const auto& [u, v] : g.edges) {
        if (u == x || u == y || v == x || v == y) continue;
        (edge_is_good(g, x, y, u, v) ? out.good : out.bad).emplace_back(u, v);
    }
    return out;
}

bool check_hirsch(const Polytope& p) {
    const Skeleton g = skeleton_of(p);
    return diameter(g) <= p.facet_count() - p.dim();
}

NonrevisitingSearch check_nonrevisiting(const Polytope& p, int x, int y, std::uint64_t budget) {
    const Skeleton g = skeleton_of(p);
    const auto& verts = p.vertices();
    NonrevisitingSearch result;
    // State: (vertex, set of departed facets). Each step departs exactly one
    // facet on a simple polytope, so depth is at most n.
    struct State {
        int vertex;
        FacetSet departed;
    };
    std::map<std::pair<int, FacetSet>, std::pair<int, FacetSet>> parent;  // -> predecessor
    std::deque<State> queue{{x, 0}};
    parent[{x, 0}] = {-1, 0};
    while (!queue.empty()) {
        auto [u, departed] = queue.front();
        queue.pop_front();
        if (++result.states > budget)
            throw Error(ErrorCode::BudgetExceeded, "non-revisiting state budget exceeded");
        if (u == y) {
            result.exists = true;
            std::vector<int> path;
            std::pair<int, FacetSet> cur{u, departed};
            while (cur.first >= 0) {
                path.push_back(cur.first);
                cur = parent.at(cur);
            }
            std::reverse(path.begin(), path.end());
            result.path = std::move(path);
            return result;
        }
        for (int v : g.adj[u]) {
            const FacetSet left = verts[u].tight & ~verts[v].tight;
            const FacetSet next = departed | left;
            if (next & verts[v].tight) continue;  // would re-enter a departed facet
            if (parent.count({v, next})) continue;
            parent[{v, next}] = {u, departed};
            queue.push_back({v, next});
        }
    }
    result.exists = false;
    return result;
}

}  // namespace hirsch
