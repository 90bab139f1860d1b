#include "hirsch/polytope.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "hirsch/linalg.hpp"
#include "hirsch/lp.hpp"

namespace hirsch {

int facet_card(FacetSet s) { return std::popcount(s); }

std::vector<int> facet_list(FacetSet s) {
    std::vector<int> out;
    for (int f = 1; s; ++f, s >>= 1)
        if (s & 1) out.push_back(f);
    return out;
}

FacetSet facet_mask(const std::vector<int>& facets) {
    FacetSet s = 0;
    for (int f : facets) s |= facet_bit(f);
    return s;
}

namespace {

void check_structure(const HalfspaceSystem& sys) {
    if (sys.dim < 2)
        throw Error(ErrorCode::BadArgument, "dimension must be at least 2");
    if (sys.halfspaces.size() > 64)
        throw Error(ErrorCode::BadArgument, "more than 64 halfspaces unsupported");
    for (std::size_t i = 0; i < sys.halfspaces.size(); ++i) {
        const Halfspace& h = sys.halfspaces[i];
        if (static_cast<int>(h.normal.size()) != sys.dim)
            throw Error(ErrorCode::BadArgument,
                        "halfspace " + std::to_string(i + 1) + " has wrong dimension");
        if (is_zero_vec(h.normal))
            throw Error(ErrorCode::Invalid,
                        "halfspace " + std::to_string(i + 1) + " has zero normal");
    }
}

}  // namespace

bool recession_cone_trivial(const HalfspaceSystem& sys) {
    const int d = sys.dim;
    const std::size_t n = sys.halfspaces.size();
    // Cone constraints plus a unit box; a nonzero ray exists iff some
    // coordinate can be pushed strictly above zero inside the box.
    RatMatrix a(n + 2 * d, RatVec(d, 0));
    RatVec b(n + 2 * d, 0);
    for (std::size_t i = 0; i < n; ++i) a[i] = sys.halfspaces[i].normal;
    for (int j = 0; j < d; ++j) {
        a[n + 2 * j][j] = 1;
        b[n + 2 * j] = 1;
        a[n + 2 * j + 1][j] = -1;
        b[n + 2 * j + 1] = 1;
    }
    for (int j = 0; j < d; ++j) {
        for (int sign = 0; sign < 2; ++sign) {
            RatVec c(d, 0);
            c[j] = sign ? -1 : 1;
            LpResult r = solve_lp(a, b, c);
            if (r.status != LpStatus::Optimal)
                throw Error(ErrorCode::Internal, "recession cone LP not optimal");
            if (r.value > 0) return false;
        }
    }
    return true;
}

bool has_interior_point(const HalfspaceSystem& sys) {
    const int d = sys.dim;
    const std::size_t n = sys.halfspaces.size();
    // maximize t subject to a_i . x + t <= b_i and t <= 1; positive optimum
    // is a Slater point.
    RatMatrix a(n + 1, RatVec(d + 1, 0));
    RatVec b(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) a[i][j] = sys.halfspaces[i].normal[j];
        a[i][d] = 1;
        b[i] = sys.halfspaces[i].offset;
    }
    a[n][d] = 1;
    b[n] = 1;
    RatVec c(d + 1, 0);
    c[d] = 1;
    LpResult r = solve_lp(a, b, c);
    if (r.status != LpStatus::Optimal)
        throw Error(ErrorCode::Internal, "interior point LP not optimal");
    return r.value > 0;
}

std::vector<VertexData> enumerate_vertices(const HalfspaceSystem& sys) {
    check_structure(sys);
    if (!recession_cone_trivial(sys))
        throw Error(ErrorCode::Unbounded, "recession cone contains a nonzero ray");
    if (!has_interior_point(sys))
        throw Error(ErrorCode::LowDim, "solution set is not full-dimensional");

    const int d = sys.dim;
    const int n = static_cast<int>(sys.halfspaces.size());
    std::map<RatVec, FacetSet, bool (*)(const RatVec&, const RatVec&)> found(lex_less);

    std::vector<int> subset(d);
    for (int i = 0; i < d; ++i) subset[i] = i;
    auto advance = [&]() -> bool {
        int i = d - 1;
        while (i >= 0 && subset[i] == n - d + i) --i;
        if (i < 0) return false;
        ++subset[i];
        for (int k = i + 1; k < d; ++k) subset[k] = subset[k - 1] + 1;
        return true;
    };

    do {
        RatMatrix a(d, RatVec(d));
        RatVec b(d);
        for (int r = 0; r < d; ++r) {
            a[r] = sys.halfspaces[subset[r]].normal;
            b[r] = sys.halfspaces[subset[r]].offset;
        }
        auto x = solve_square(std::move(a), std::move(b));
        if (!x) continue;
        bool feasible = true;
        FacetSet tight = 0;
        for (int f = 0; f < n && feasible; ++f) {
            const Rational lhs = dot(sys.halfspaces[f].normal, *x);
            if (lhs > sys.halfspaces[f].offset)
                feasible = false;
            else if (lhs == sys.halfspaces[f].offset)
                tight |= facet_bit(f + 1);
        }
        if (feasible) found.emplace(std::move(*x), tight);
    } while (advance());

    std::vector<VertexData> out;
    out.reserve(found.size());
    for (auto& [point, tight] : found) out.push_back({point, tight});
    return out;
}

Polytope Polytope::validate(HalfspaceSystem sys) {
    Polytope p;
    p.verts_ = enumerate_vertices(sys);
    const int d = sys.dim;
    const int n = static_cast<int>(sys.halfspaces.size());
    // Irredundancy: every halfspace must be tight on a (d-1)-dimensional
    // vertex set. Redundant halfspaces are rejected, never dropped, because
    // facet ids carry identity downstream.
    for (int f = 1; f <= n; ++f) {
        std::vector<RatVec> on_facet;
        for (const VertexData& v : p.verts_)
            if (facet_in(v.tight, f)) on_facet.push_back(v.point);
        if (affine_rank(on_facet) != d - 1)
            throw Error(ErrorCode::Invalid,
                        "halfspace " + std::to_string(f) + " does not support a facet");
    }
    p.simple_ = true;
    for (const VertexData& v : p.verts_)
        if (facet_card(v.tight) != d) p.simple_ = false;
    p.sys_ = std::move(sys);
    return p;
}

int Polytope::vertex_index(const RatVec& point) const {
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i].point == point) return static_cast<int>(i);
    return -1;
}

int Polytope::vertex_by_tight(FacetSet tight) const {
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i].tight == tight) return static_cast<int>(i);
    return -1;
}

HalfspaceSystem move_facet(const HalfspaceSystem& sys, const FacetMotion& motion,
                           const Rational& t) {
    if (motion.facet < 1 || motion.facet > static_cast<int>(sys.halfspaces.size()))
        throw Error(ErrorCode::BadArgument, "facet id out of range");
    if (motion.step <= 0)
        throw Error(ErrorCode::BadArgument, "facet motion step must be positive");
    if (t < 0) throw Error(ErrorCode::BadArgument, "motion parameter must be nonnegative");
    HalfspaceSystem out = sys;
    out.halfspaces[motion.facet - 1].offset -= t * motion.step;
    return out;
}

}  // namespace hirsch
