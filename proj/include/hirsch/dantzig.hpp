#pragma once

#include "hirsch/incidence.hpp"
#include "hirsch/polytope.hpp"

namespace hirsch {

// A simple d-polytope with exactly 2d facets and two marked vertices whose
// tight sets partition the facet list.
struct DantzigFigure {
    Polytope poly;
    int x = -1;  // vertex ids into poly.vertices()
    int y = -1;

    // Throws ENotDantzig when the invariants fail.
    static DantzigFigure checked(Polytope poly, int x, int y);
};

bool is_dantzig(const Polytope& p, int x, int y);

// All unordered Dantzig pairs (x < y in canonical vertex order). Throws
// ENotCandidate when n != 2d or the polytope is not simple.
std::vector<std::pair<int, int>> find_dantzig_pairs(const Polytope& p);

// Affine change of coordinates putting the figure in slab normal form:
// f(x) = 0, f(y) = e_d, every other vertex strictly between the hyperplanes
// {last coord = 0} and {last coord = 1}. The separating functional is found
// by exact linear feasibility over the two vertex-cone edge directions;
// throws ESeparationFailed when none exists.
DantzigFigure affine_normalize(const DantzigFigure& fig);

}  // namespace hirsch
