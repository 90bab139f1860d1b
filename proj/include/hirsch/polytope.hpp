#pragma once

#include <cstdint>
#include <vector>

#include "hirsch/rational.hpp"

namespace hirsch {

// Facet ids are 1-based positions in the halfspace list; tight sets are bit
// masks with bit (id-1) set. 64 facets are far beyond the scales this
// library targets (n <= 2d, d <= 5).
using FacetSet = std::uint64_t;

inline FacetSet facet_bit(int facet) { return FacetSet(1) << (facet - 1); }
inline bool facet_in(FacetSet s, int facet) { return (s >> (facet - 1)) & 1; }
int facet_card(FacetSet s);
std::vector<int> facet_list(FacetSet s);
FacetSet facet_mask(const std::vector<int>& facets);

// Closed halfspace {x : normal . x <= offset}.
struct Halfspace {
    RatVec normal;
    Rational offset;
};

// A raw intersection of halfspaces, prior to any validity claim.
struct HalfspaceSystem {
    int dim = 0;
    std::vector<Halfspace> halfspaces;
};

struct VertexData {
    RatVec point;
    FacetSet tight = 0;
};

// Inward motion of one facet: offset(t) = offset - t * step with step > 0.
struct FacetMotion {
    int facet = 0;
    Rational step = 1;
};

// True iff the recession cone {x : normal_i . x <= 0 for all i} is {0}.
bool recession_cone_trivial(const HalfspaceSystem& sys);

// True iff the solution set has a Slater (strictly interior) point.
bool has_interior_point(const HalfspaceSystem& sys);

// All vertices of the solution set, each with its full tight set, sorted
// lexicographically by coordinates. Every d-subset of facets is solved
// exactly and filtered, so the result is deterministic and exact.
// Throws EUnbounded / ELowDim when the set is not a full-dimensional
// polytope (irredundancy is not required here).
std::vector<VertexData> enumerate_vertices(const HalfspaceSystem& sys);

// A validated bounded full-dimensional irredundant H-polytope with its
// vertex list cached in canonical (lexicographic) order. Immutable.
class Polytope {
  public:
    // An empty placeholder; real instances come from validate().
    Polytope() = default;

    // Throws EUnbounded, ELowDim, EInvalid (redundant halfspace or other
    // invariant violation), EBadArgument (structural nonsense).
    static Polytope validate(HalfspaceSystem sys);

    int dim() const { return sys_.dim; }
    int facet_count() const { return static_cast<int>(sys_.halfspaces.size()); }
    const HalfspaceSystem& system() const { return sys_; }
    const std::vector<Halfspace>& halfspaces() const { return sys_.halfspaces; }
    const std::vector<VertexData>& vertices() const { return verts_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }

    // True iff every vertex lies on exactly dim facets.
    bool simple() const { return simple_; }

    int vertex_index(const RatVec& point) const;   // -1 when absent
    int vertex_by_tight(FacetSet tight) const;     // -1 when absent (simple only)

  private:
    HalfspaceSystem sys_;
    std::vector<VertexData> verts_;
    bool simple_ = false;
};

// Pure substitution of the moved offset at parameter t; the caller
// re-validates the result. Requires t >= 0, step > 0 and a valid facet id.
HalfspaceSystem move_facet(const HalfspaceSystem& sys, const FacetMotion& motion,
                           const Rational& t);

}  // namespace hirsch
