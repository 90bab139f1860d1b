#include "hirsch/deform.hpp"

#include <algorithm>

#include "hirsch/linalg.hpp"

namespace hirsch {

FDRecord fundamental_deformation(const Polytope& p, int facet, const Rational& step) {
    if (p.dim() < 3)
        throw Error(ErrorCode::BadArgument,
                    "fundamental deformation preserves the type only for dim >= 3");
    if (!p.simple()) throw Error(ErrorCode::NotSimple, "source polytope is not simple");
    if (facet < 1 || facet > p.facet_count())
        throw Error(ErrorCode::BadArgument, "facet id out of range");
    if (step <= 0) throw Error(ErrorCode::BadArgument, "step must be positive");

    const Halfspace& moving = p.halfspaces()[facet - 1];
    // Crossing parameter of every vertex off the moving facet.
    int crossed = -1;
    bool tie = false;
    Rational t0, second;
    bool have_second = false;
    for (int u = 0; u < p.vertex_count(); ++u) {
        if (facet_in(p.vertices()[u].tight, facet)) continue;
        const Rational t = (moving.offset - dot(moving.normal, p.vertices()[u].point)) / step;
        if (crossed < 0 || t < t0) {
            if (crossed >= 0 && (!have_second || t0 < second)) {
                second = t0;
                have_second = true;
            }
            t0 = t;
            crossed = u;
            tie = false;
        } else if (t == t0) {
            tie = true;
        } else if (!have_second || t < second) {
            second = t;
            have_second = true;
        }
    }
    if (crossed < 0)
        throw Error(ErrorCode::NoCrossing, "no vertex lies off the moving facet");
    if (tie)
        throw Error(ErrorCode::NonGeneric,
                    "minimal crossing parameter attained by several vertices");

    FDRecord fd;
    fd.facet = facet;
    fd.step = step;
    fd.t0 = t0;
    fd.t1 = have_second ? Rational((t0 + second) / 2) : Rational(t0 + 1);
    fd.v = crossed;

    const int d = p.dim();
    try {
        fd.result = Polytope::validate(move_facet(p.system(), {facet, step}, fd.t1));
    } catch (const Error& e) {
        throw Error(ErrorCode::Degenerate,
                    std::string("result is not a polytope with all facets: ") + e.what());
    }
    if (!fd.result.simple())
        throw Error(ErrorCode::Degenerate, "result polytope is not simple");

    // Companion: the unique neighbor of v on the moving facet whose
    // re-solved position at t = t0 coincides with v. Several neighbors
    // converging onto v is a multi-edge collapse, outside the single
    // vanishing-edge picture.
    const Skeleton g = skeleton_of(p);
    const VertexData& vd = p.vertices()[fd.v];
    int companion = -1;
    for (int u : g.adj[fd.v]) {
        const VertexData& wd = p.vertices()[u];
        if (!facet_in(wd.tight, facet)) continue;
        RatMatrix a;
        RatVec b;
        for (int f : facet_list(wd.tight)) {
            a.push_back(p.halfspaces()[f - 1].normal);
            b.push_back(f == facet ? moving.offset - t0 * step : p.halfspaces()[f - 1].offset);
        }
        auto pos = solve_square(std::move(a), std::move(b));
        if (pos && *pos == vd.point) {
            if (companion >= 0)
                throw Error(ErrorCode::NonGeneric, "companion vertex is not unique");
            companion = u;
        }
    }
    if (companion < 0)
        throw Error(ErrorCode::NonGeneric, "no companion vertex meets the crossed vertex");
    fd.w = companion;
    if (fd.result.vertex_count() != p.vertex_count() + d - 3)
        throw Error(ErrorCode::Degenerate, "vertex bookkeeping failed: |V| delta != d - 3");

    const FacetSet ridge = vd.tight & ~p.vertices()[fd.w].tight;
    if (facet_card(ridge) != 1)
        throw Error(ErrorCode::Internal, "vanishing pair is not an edge");
    fd.ridge_facet = facet_list(ridge)[0];
    fd.source = p;
    return fd;
}

std::vector<int> vertex_correspondence(const FDRecord& fd) {
    std::vector<int> map(fd.source.vertex_count(), -1);
    for (int u = 0; u < fd.source.vertex_count(); ++u) {
        if (u == fd.v || u == fd.w) continue;
        map[u] = fd.result.vertex_by_tight(fd.source.vertices()[u].tight);
        if (map[u] < 0)
            throw Error(ErrorCode::Internal, "persisted vertex lost its tight set");
    }
    return map;
}

std::vector<VertexData> new_ridge_simplex(const FDRecord& fd) {
    const FacetSet want = facet_bit(fd.facet) | facet_bit(fd.ridge_facet);
    std::vector<VertexData> out;
    std::vector<int> ids;
    for (int u = 0; u < fd.result.vertex_count(); ++u) {
        if ((fd.result.vertices()[u].tight & want) == want) {
            out.push_back(fd.result.vertices()[u]);
            ids.push_back(u);
        }
    }
    if (static_cast<int>(out.size()) != fd.result.dim() - 1)
        throw Error(ErrorCode::ShapeMismatch,
                    "ridge vertex count " + std::to_string(out.size()) + " != d - 1");
    const Skeleton g = skeleton_of(fd.result);
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (!g.has_edge(ids[i], ids[j]))
                throw Error(ErrorCode::ShapeMismatch, "ridge vertices are not pairwise adjacent");
    return out;
}

FDRecord fd_of_dantzig(const DantzigFigure& fig, int facet, const Rational& step) {
    FDRecord fd = fundamental_deformation(fig.poly, facet, step);
    if (fd.v == fig.x || fd.v == fig.y || fd.w == fig.x || fd.w == fig.y)
        throw Error(ErrorCode::ProtectedVertex, "vanishing edge touches a marked vertex");
    auto [nx, ny] = transport_marks(fd, fig.x, fig.y);
    if (!is_dantzig(fd.result, nx, ny))
        throw Error(ErrorCode::NotDantzigAfter, "result is not a Dantzig figure");
    return fd;
}

std::pair<int, int> transport_marks(const FDRecord& fd, int x, int y) {
    const int nx = fd.result.vertex_by_tight(fd.source.vertices()[x].tight);
    const int ny = fd.result.vertex_by_tight(fd.source.vertices()[y].tight);
    if (nx < 0 || ny < 0)
        throw Error(ErrorCode::NotDantzigAfter, "marked vertex did not persist");
    return {nx, ny};
}

EdgePath deform_path(const EdgePath& path, const FDRecord& fd) {
    if (path.vertices.size() < 2)
        throw Error(ErrorCode::BadArgument, "path needs at least one edge");
    const Skeleton src = skeleton_of(fd.source);
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
        if (!src.has_edge(path.vertices[i], path.vertices[i + 1]))
            throw Error(ErrorCode::BadArgument, "input is not an edge path of the source");
    if (path.vertices.front() == fd.v || path.vertices.front() == fd.w ||
        path.vertices.back() == fd.v || path.vertices.back() == fd.w)
        throw Error(ErrorCode::EndpointLost, "path endpoint lies on the vanishing edge");

    std::vector<std::size_t> touches;
    for (std::size_t i = 0; i < path.vertices.size(); ++i)
        if (path.vertices[i] == fd.v || path.vertices[i] == fd.w) touches.push_back(i);

    const auto corr = vertex_correspondence(fd);
    if (touches.empty()) {
        EdgePath out;
        for (int u : path.vertices) out.vertices.push_back(corr[u]);
        return out;
    }

    // Normalization: shortcut everything between the first and last touch
    // through the vanishing edge itself. Impossible when both ends of the
    // touched range are the same vertex (that is the excluded "touches just
    // one of {v,w}" condition).
    if (path.vertices[touches.front()] == path.vertices[touches.back()])
        throw Error(ErrorCode::Undeformable,
                    "path touches just one endpoint of the vanishing edge");
    std::vector<int> norm(path.vertices.begin(), path.vertices.begin() + touches.front() + 1);
    norm.insert(norm.end(), path.vertices.begin() + touches.back(), path.vertices.end());
    const std::size_t k = touches.front();  // norm[k], norm[k+1] is the vw step

    // Reroute u -> v -> w -> z through the ridge simplex.
    const int u = norm[k - 1];
    const int z = norm[k + 2];
    std::vector<VertexData> ridge = new_ridge_simplex(fd);
    std::vector<int> ridge_ids;
    for (const VertexData& r : ridge) ridge_ids.push_back(fd.result.vertex_index(r.point));
    const Skeleton dst = skeleton_of(fd.result);
    const int nu = corr[u], nz = corr[z];

    std::vector<int> bridge;  // ridge vertices between nu and nz
    for (int s : ridge_ids)
        if (dst.has_edge(nu, s) && dst.has_edge(s, nz)) {
            bridge = {s};
            break;
        }
    if (bridge.empty()) {
        for (int s1 : ridge_ids) {
            if (!dst.has_edge(nu, s1)) continue;
            for (int s2 : ridge_ids) {
                if (s1 == s2 || !dst.has_edge(s1, s2) || !dst.has_edge(s2, nz)) continue;
                bridge = {s1, s2};
                break;
            }
            if (!bridge.empty()) break;
        }
    }
    if (bridge.empty())
        throw Error(ErrorCode::Internal, "no ridge detour between the vanished edge's neighbors");

    EdgePath out;
    for (std::size_t i = 0; i < k; ++i) out.vertices.push_back(corr[norm[i]]);
    for (int s : bridge) out.vertices.push_back(s);
    for (std::size_t i = k + 2; i < norm.size(); ++i) out.vertices.push_back(corr[norm[i]]);
    if (out.length() > path.length())
        throw Error(ErrorCode::Internal, "deformed path became longer");
    return out;
}

bool is_good(const FDRecord& fd, int x, int y) {
    if (x == y || x < 0 || y < 0 || x >= fd.source.vertex_count() ||
        y >= fd.source.vertex_count())
        throw Error(ErrorCode::BadArgument, "marks must be distinct source vertices");
    if (x == fd.v || x == fd.w || y == fd.v || y == fd.w)
        throw Error(ErrorCode::BadArgument, "marks must avoid the vanishing edge");
    const Skeleton g = skeleton_of(fd.source);
    return edge_is_good(g, x, y, fd.v, fd.w);
}

bool goodness_for_all_pairs(const FDRecord& fd) {
    const Skeleton g = skeleton_of(fd.source);
    for (int x = 0; x < fd.source.vertex_count(); ++x) {
        if (x == fd.v || x == fd.w) continue;
        for (int y = x + 1; y < fd.source.vertex_count(); ++y) {
            if (y == fd.v || y == fd.w) continue;
            if (!edge_is_good(g, x, y, fd.v, fd.w)) return false;
        }
    }
    return true;
}

}  // namespace hirsch
