#include "hirsch/canonical.hpp"

#include <algorithm>
#include <map>

namespace hirsch {

namespace {

// Bipartite incidence graph: nodes 0..V-1 are vertices, V..V+F-1 facets.
// Vertex colors always sort strictly below facet colors, so canonical
// positions keep the two sides separated.
struct CanonSearch {
    int n_vertices, n_facets, total;
    std::vector<std::vector<int>> adj;
    std::string best;
    bool have_best = false;

    // Stable 1-dimensional refinement: recolor by (color, sorted multiset of
    // neighbor colors) until the partition stops splitting.
    void refine(std::vector<int>& color) const {
        for (;;) {
            std::vector<std::pair<std::vector<int>, int>> sig(total);
            for (int v = 0; v < total; ++v) {
                std::vector<int> s;
                s.reserve(adj[v].size() + 1);
                s.push_back(color[v]);
                for (int u : adj[v]) s.push_back(color[u]);
                std::sort(s.begin() + 1, s.end());
                sig[v] = {std::move(s), v};
            }
            std::vector<int> order(total);
            for (int v = 0; v < total; ++v) order[v] = v;
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return sig[a].first < sig[b].first; });
            std::vector<int> next(total);
            int classes = 0;
            for (int i = 0; i < total; ++i) {
                if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++classes;
                next[order[i]] = classes;
            }
            int old_classes = *std::max_element(color.begin(), color.end());
            if (classes == old_classes) {
                color = std::move(next);
                return;
            }
            color = std::move(next);
        }
    }

    void search(std::vector<int> color) {
        refine(color);
        // First non-singleton color class, by color id.
        std::map<int, std::vector<int>> cells;
        for (int v = 0; v < total; ++v) cells[color[v]].push_back(v);
        const std::vector<int>* target = nullptr;
        for (const auto& [c, members] : cells) {
            if (members.size() > 1) {
                target = &members;
                break;
            }
        }
        if (!target) {
            emit(color);
            return;
        }
        const int cell_color = color[(*target)[0]];
        for (int pick : *target) {
            std::vector<int> child(total);
            for (int v = 0; v < total; ++v) {
                int c = color[v];
                if (c > cell_color) c += 1;
                else if (c == cell_color && v != pick) c += 1;
                child[v] = c;
            }
            search(std::move(child));
        }
    }

    void emit(const std::vector<int>& color) {
        // Discrete coloring: color id is the canonical position.
        std::vector<int> pos(total);
        for (int v = 0; v < total; ++v) pos[v] = color[v];
        std::string enc;
        enc.push_back(static_cast<char>(n_vertices));
        enc.push_back(static_cast<char>(n_facets));
        std::vector<std::vector<int>> rows(n_vertices);
        for (int v = 0; v < n_vertices; ++v)
            for (int u : adj[v]) rows[pos[v]].push_back(pos[u] - n_vertices);
        for (auto& row : rows) {
            std::sort(row.begin(), row.end());
            enc.push_back(static_cast<char>(row.size()));
            for (int f : row) enc.push_back(static_cast<char>(f));
        }
        if (!have_best || enc < best) {
            best = std::move(enc);
            have_best = true;
        }
    }
};

}  // namespace

std::string canonical_form(const Incidence& inc, int mark_x, int mark_y) {
    if ((mark_x < 0) != (mark_y < 0))
        throw Error(ErrorCode::BadArgument, "marks must be given as a pair");
    if (mark_x >= inc.n_vertices || mark_y >= inc.n_vertices)
        throw Error(ErrorCode::BadArgument, "mark is not a vertex id");
    CanonSearch cs;
    cs.n_vertices = inc.n_vertices;
    cs.n_facets = inc.n_facets;
    cs.total = inc.n_vertices + inc.n_facets;
    cs.adj.assign(cs.total, {});
    for (int v = 0; v < inc.n_vertices; ++v) {
        for (int f : facet_list(inc.rows[v])) {
            cs.adj[v].push_back(inc.n_vertices + f - 1);
            cs.adj[inc.n_vertices + f - 1].push_back(v);
        }
    }
    const bool marked = mark_x >= 0;
    std::vector<int> color(cs.total);
    for (int v = 0; v < cs.total; ++v) {
        if (marked && v == mark_x) color[v] = 0;
        else if (marked && v == mark_y) color[v] = 1;
        else if (v < inc.n_vertices) color[v] = marked ? 2 : 0;
        else color[v] = marked ? 3 : 1;
    }
    cs.search(std::move(color));
    std::string out;
    out.push_back(marked ? 'M' : 'U');
    out += cs.best;
    return out;
}

std::string canonical_form_unordered(const Incidence& inc, int mark_x, int mark_y) {
    return std::min(canonical_form(inc, mark_x, mark_y), canonical_form(inc, mark_y, mark_x));
}

std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

}  // namespace hirsch
