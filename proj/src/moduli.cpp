#include "hirsch/moduli.hpp"

#include <algorithm>
#include <deque>

namespace hirsch {

FdAttempt attempt_fd(const Polytope& p, int mark_x, int mark_y, int facet,
                     const FdPolicy& policy, std::uint64_t perturb_seed) {
    FdAttempt out;
    const bool marked = mark_x >= 0;
    Rng rng(perturb_seed);
    Polytope current = p;
    int cx = mark_x, cy = mark_y;
    for (int round = 0; round <= policy.perturb_retries; ++round) {
        try {
            if (marked) {
                DantzigFigure fig{current, cx, cy};
                out.fd = fd_of_dantzig(fig, facet, policy.step);
                auto [nx, ny] = transport_marks(out.fd, cx, cy);
                out.source_x = cx;
                out.source_y = cy;
                out.result_x = nx;
                out.result_y = ny;
            } else {
                out.fd = fundamental_deformation(current, facet, policy.step);
            }
            out.ok = true;
            return out;
        } catch (const Error& e) {
            out.failure = error_code_name(e.code());
            // A tie can resolve toward a marked vertex, so EProtectedVertex
            // after a re-tilt may still be a genericity artifact; everything
            // else is a stable geometric outcome.
            if (e.code() != ErrorCode::NonGeneric && e.code() != ErrorCode::ProtectedVertex)
                return out;
        }
        // Re-tilt the facet and retry with a finer perturbation each round.
        Integer denom = policy.perturb_denom;
        for (int k = 0; k < round; ++k) denom *= 31;
        auto tilted = perturb_facet(p, facet, rng, denom);
        if (!tilted) continue;
        if (marked) {
            cx = tilted->vertex_by_tight(p.vertices()[mark_x].tight);
            cy = tilted->vertex_by_tight(p.vertices()[mark_y].tight);
        }
        current = std::move(*tilted);
    }
    return out;
}

int ModuliGraph::add_node(ModuliNode node) {
    auto it = index.find(node.canon);
    if (it != index.end()) return it->second;
    const int id = static_cast<int>(nodes.size());
    index.emplace(node.canon, id);
    nodes.push_back(std::move(node));
    return id;
}

namespace {

std::string node_canon(ModuliKind kind, const Polytope& p, int x, int y) {
    const Incidence inc = incidence(p);
    if (kind == ModuliKind::Dantzig) return canonical_form_unordered(inc, x, y);
    return canonical_form(inc);
}

}  // namespace

ModuliGraph explore_moduli(int d, ModuliKind kind, const std::vector<DantzigFigure>& seeds,
                           int budget, std::uint64_t seed, const FdPolicy& policy) {
    ModuliGraph graph;
    graph.kind = kind;
    graph.dim = d;
    std::deque<int> frontier;
    for (const DantzigFigure& fig : seeds) {
        ModuliNode node;
        node.canon = node_canon(kind, fig.poly, fig.x, fig.y);
        node.rep = fig.poly;
        if (kind == ModuliKind::Dantzig) {
            node.x = fig.x;
            node.y = fig.y;
        }
        const int before = static_cast<int>(graph.nodes.size());
        const int id = graph.add_node(std::move(node));
        if (id == before) frontier.push_back(id);
    }
    int expanded = 0;
    while (!frontier.empty() && expanded < budget) {
        const int id = frontier.front();
        frontier.pop_front();
        // Copy what we need: add_node may reallocate the node vector.
        const Polytope rep = graph.nodes[id].rep;
        const int x = graph.nodes[id].x, y = graph.nodes[id].y;
        graph.nodes[id].expanded = true;
        ++expanded;
        for (int facet = 1; facet <= rep.facet_count(); ++facet) {
            FdAttempt at = attempt_fd(rep, x, y, facet, policy,
                                      Rng::derive_seed(seed, std::uint64_t(id) * 64 + facet));
            if (!at.ok) {
                ++graph.fd_failures[at.failure];
                continue;
            }
            const bool good = (kind == ModuliKind::Dantzig)
                                  ? is_good(at.fd, at.source_x, at.source_y)
                                  : goodness_for_all_pairs(at.fd);
            ModuliNode next;
            next.rep = at.fd.result;
            if (kind == ModuliKind::Dantzig) {
                next.x = at.result_x;
                next.y = at.result_y;
            }
            next.canon = node_canon(kind, next.rep, next.x, next.y);
            const int before = static_cast<int>(graph.nodes.size());
            const int dst = graph.add_node(std::move(next));
            if (dst == before) frontier.push_back(dst);
            graph.arcs.push_back({id, dst, facet, policy.step, good});
        }
    }
    return graph;
}

SccResult scc_of(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::vector<int>> succ(n);
    for (const auto& [u, v] : arcs)
        if (u != v) succ[u].push_back(v);
    SccResult out;
    std::vector<int> number(n, -1), low(n, 0), stack_pos(n, -1), stack;
    int counter = 0;
    auto dfs = [&](auto&& self, int u) -> void {
        number[u] = low[u] = counter++;
        stack_pos[u] = static_cast<int>(stack.size());
        stack.push_back(u);
        for (int v : succ[u]) {
            if (number[v] < 0) {
                self(self, v);
                low[u] = std::min(low[u], low[v]);
            } else if (stack_pos[v] >= 0) {
                low[u] = std::min(low[u], number[v]);
            }
        }
        if (low[u] == number[u]) {
            std::vector<int> comp(stack.begin() + stack_pos[u], stack.end());
            for (int w : comp) stack_pos[w] = -1;
            stack.resize(stack.size() - comp.size());
            std::sort(comp.begin(), comp.end());
            out.components.push_back(std::move(comp));
        }
    };
    for (int u = 0; u < n; ++u)
        if (number[u] < 0) dfs(dfs, u);
    std::sort(out.components.begin(), out.components.end());
    out.strongly_connected = out.components.size() == 1 && n > 0;
    return out;
}

SccResult scc(const ModuliGraph& graph, bool good_only) {
    std::vector<std::pair<int, int>> arcs;
    for (const ModuliArc& a : graph.arcs)
        if (!good_only || a.good) arcs.emplace_back(a.src, a.dst);
    return scc_of(static_cast<int>(graph.nodes.size()), arcs);
}

}  // namespace hirsch
