#include "hirsch/dantzig.hpp"

#include "hirsch/linalg.hpp"
#include "hirsch/lp.hpp"

namespace hirsch {

bool is_dantzig(const Polytope& p, int x, int y) {
    if (x < 0 || y < 0 || x >= p.vertex_count() || y >= p.vertex_count() || x == y)
        return false;
    if (!p.simple() || p.facet_count() != 2 * p.dim()) return false;
    const FacetSet tx = p.vertices()[x].tight;
    const FacetSet ty = p.vertices()[y].tight;
    const FacetSet all = (p.facet_count() == 64) ? ~FacetSet(0)
                                                 : (FacetSet(1) << p.facet_count()) - 1;
    return (tx & ty) == 0 && (tx | ty) == all;
}

DantzigFigure DantzigFigure::checked(Polytope poly, int x, int y) {
    if (!is_dantzig(poly, x, y))
        throw Error(ErrorCode::NotDantzig, "marked pair does not form a Dantzig figure");
    return DantzigFigure{std::move(poly), x, y};
}

std::vector<std::pair<int, int>> find_dantzig_pairs(const Polytope& p) {
    if (p.facet_count() != 2 * p.dim())
        throw Error(ErrorCode::NotCandidate,
                    "facet count " + std::to_string(p.facet_count()) + " != 2d");
    if (!p.simple()) throw Error(ErrorCode::NotCandidate, "polytope is not simple");
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < p.vertex_count(); ++x)
        for (int y = x + 1; y < p.vertex_count(); ++y)
            if (is_dantzig(p, x, y)) pairs.emplace_back(x, y);
    return pairs;
}

namespace {

// Edge directions at a vertex of a simple polytope: one per neighbor.
std::vector<RatVec> edge_directions(const Polytope& p, const Skeleton& g, int v) {
    std::vector<RatVec> dirs;
    for (int u : g.adj[v]) {
        RatVec d(p.dim());
        for (int c = 0; c < p.dim(); ++c)
            d[c] = p.vertices()[u].point[c] - p.vertices()[v].point[c];
        dirs.push_back(std::move(d));
    }
    return dirs;
}

}  // namespace

DantzigFigure affine_normalize(const DantzigFigure& fig) {
    const Polytope& p = fig.poly;
    const int d = p.dim();
    const Skeleton g = skeleton_of(p);
    const RatVec& px = p.vertices()[fig.x].point;
    const RatVec& py = p.vertices()[fig.y].point;

    // Strictly separate the translated vertex cones: find c with
    // c . u >= 1 on x's edge directions and c . w <= -1 on y's.
    std::vector<RatVec> ux = edge_directions(p, g, fig.x);
    std::vector<RatVec> wy = edge_directions(p, g, fig.y);
    RatMatrix a;
    RatVec b;
    for (const RatVec& u : ux) {
        RatVec row(d);
        for (int c = 0; c < d; ++c) row[c] = -u[c];
        a.push_back(std::move(row));
        b.push_back(-1);
    }
    for (const RatVec& w : wy) {
        a.push_back(w);
        b.push_back(-1);
    }
    auto sep = lp_feasible_point(a, b);
    if (!sep)
        throw Error(ErrorCode::SeparationFailed,
                    "no strict separating hyperplane between the vertex cones");
    const RatVec& c = *sep;

    // Basis: d-1 kernel vectors of c plus (y - x); the inverse maps the
    // functional c to the last coordinate.
    int pivot = 0;
    while (pivot < d && c[pivot] == 0) ++pivot;
    if (pivot == d) throw Error(ErrorCode::Internal, "zero separating functional");
    RatMatrix m(d, RatVec(d, 0));  // columns are basis vectors
    int col = 0;
    for (int j = 0; j < d; ++j) {
        if (j == pivot) continue;
        m[j][col] = 1;
        m[pivot][col] = -c[j] / c[pivot];
        ++col;
    }
    for (int r = 0; r < d; ++r) m[r][d - 1] = py[r] - px[r];
    auto minv = invert(m);
    if (!minv) throw Error(ErrorCode::Internal, "normalization basis is singular");

    // Halfspace a . z <= b maps to (M^T a) . f(z) <= b - a . x under
    // f(z) = M^{-1} (z - x).
    HalfspaceSystem out;
    out.dim = d;
    for (const Halfspace& h : p.halfspaces()) {
        RatVec normal(d, 0);
        for (int j = 0; j < d; ++j)
            for (int r = 0; r < d; ++r) normal[j] += m[r][j] * h.normal[r];
        out.halfspaces.push_back({std::move(normal), h.offset - dot(h.normal, px)});
    }
    Polytope mapped = Polytope::validate(std::move(out));

    RatVec origin(d, 0), ed(d, 0);
    ed[d - 1] = 1;
    const int nx = mapped.vertex_index(origin);
    const int ny = mapped.vertex_index(ed);
    if (nx < 0 || ny < 0)
        throw Error(ErrorCode::Internal, "normalized marks not found among vertices");
    return DantzigFigure::checked(std::move(mapped), nx, ny);
}

}  // namespace hirsch
