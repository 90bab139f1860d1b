#pragma once

#include "hirsch/dantzig.hpp"
#include "hirsch/graph.hpp"
#include "hirsch/polytope.hpp"

namespace hirsch {

// One fundamental deformation: the moving facet crosses exactly one vertex
// v at the critical parameter t0, contracting the edge vw, and the result
// is evaluated just past the event at t1 (strictly before the next
// crossing, so P(t1) carries the final combinatorial type).
struct FDRecord {
    Polytope source;
    int facet = 0;          // the moving facet id
    Rational step = 1;
    Rational t0, t1;
    int v = -1;             // crossed vertex (not on the moving facet)
    int w = -1;             // companion on the moving facet; vw vanishes
    int ridge_facet = 0;    // the unique facet in tight(v) \ tight(w)
    Polytope result;
};

// Throws ENonGeneric (tied minimum crossing or ambiguous companion),
// EDegenerate (result empty, lower-dimensional, loses a facet, not simple,
// or breaks the vertex bookkeeping), ENoCrossing, plus precondition errors
// (ENotSimple, EBadArgument for dim < 3 or a bad facet id / step).
FDRecord fundamental_deformation(const Polytope& p, int facet, const Rational& step);

// FD of a Dantzig figure: the vanishing edge must avoid the marked pair
// (EProtectedVertex) and the result, re-marked through the tight-set
// correspondence, must again be a Dantzig figure (ENotDantzigAfter).
FDRecord fd_of_dantzig(const DantzigFigure& fig, int facet, const Rational& step);

// Result-vertex ids of the marks after an FD of a Dantzig figure.
std::pair<int, int> transport_marks(const FDRecord& fd, int x, int y);

// The simplex created between the moving facet and the ridge facet: d-1
// pairwise-adjacent result vertices. Throws EShapeMismatch when the record
// is inconsistent with that shape.
std::vector<VertexData> new_ridge_simplex(const FDRecord& fd);

struct EdgePath {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Source-vertex -> result-vertex id map; -1 for the vanished v and w.
// Persisted vertices are matched by tight set.
std::vector<int> vertex_correspondence(const FDRecord& fd);

// Transports an edge path across the deformation per the path-deformation
// construction: untouched paths map through the correspondence, a path
// using the vanishing edge is rerouted through the new ridge simplex, and a
// path touching exactly one of {v, w} (after the vw-shortcut normalization)
// is EUndeformable. Endpoints at v or w are EEndpointLost. The output never
// exceeds the input length.
EdgePath deform_path(const EdgePath& path, const FDRecord& fd);

// Goodness of the deformation for one protected pair: some x-y geodesic of
// the source passes the vanishing edge or touches neither of its endpoints.
bool is_good(const FDRecord& fd, int x, int y);

// Polytope-level goodness: is_good over every vertex pair disjoint from
// {v, w}.
bool goodness_for_all_pairs(const FDRecord& fd);

}  // namespace hirsch
