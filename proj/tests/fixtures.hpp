#pragma once

#include <string>
#include <vector>

#include "hirsch/polytope.hpp"

namespace fixtures {

using hirsch::Halfspace;
using hirsch::HalfspaceSystem;
using hirsch::Polytope;
using hirsch::RatVec;
using hirsch::Rational;

inline Halfspace hs(std::vector<Rational> normal, Rational offset) {
    return {RatVec(normal.begin(), normal.end()), std::move(offset)};
}

// Unit cube {0 <= x_i <= 1}: facets 1,3,5 are the lower bounds, 2,4,6 the
// upper bounds.
inline HalfspaceSystem cube_system() {
    HalfspaceSystem sys;
    sys.dim = 3;
    sys.halfspaces = {
        hs({-1, 0, 0}, 0), hs({1, 0, 0}, 1),
        hs({0, -1, 0}, 0), hs({0, 1, 0}, 1),
        hs({0, 0, -1}, 0), hs({0, 0, 1}, 1),
    };
    return sys;
}

inline Polytope cube() { return Polytope::validate(cube_system()); }

// Cube with the top facet tilted to (1/10, 1/20, 1): combinatorially still a
// cube but with all crossing parameters distinct, so deformations of facet 6
// are generic.
inline HalfspaceSystem tilted_cube_system() {
    HalfspaceSystem sys = cube_system();
    sys.halfspaces[5] = hs({Rational(1, 10), Rational(1, 20), 1}, 1);
    return sys;
}

inline Polytope tilted_cube() { return Polytope::validate(tilted_cube_system()); }

// Standard simplex {x_i >= 0, sum x_i <= 1}.
inline HalfspaceSystem simplex_system(int d = 3) {
    HalfspaceSystem sys;
    sys.dim = d;
    for (int j = 0; j < d; ++j) {
        RatVec n(d, 0);
        n[j] = -1;
        sys.halfspaces.push_back({n, 0});
    }
    sys.halfspaces.push_back({RatVec(d, 1), 1});
    return sys;
}

inline Polytope simplex(int d = 3) { return Polytope::validate(simplex_system(d)); }

// Triangular prism {x1 >= 0, x2 >= 0, x1 + x2 <= 1, 0 <= x3 <= 1}.
inline Polytope prism() {
    HalfspaceSystem sys;
    sys.dim = 3;
    sys.halfspaces = {
        hs({-1, 0, 0}, 0), hs({0, -1, 0}, 0), hs({1, 1, 0}, 1),
        hs({0, 0, -1}, 0), hs({0, 0, 1}, 1),
    };
    return Polytope::validate(sys);
}

// Square pyramid: apex (0,0,1) over the square |x1|,|x2| <= 1. Not simple.
inline Polytope square_pyramid() {
    HalfspaceSystem sys;
    sys.dim = 3;
    sys.halfspaces = {
        hs({0, 0, -1}, 0),
        hs({1, 0, 1}, 1), hs({-1, 0, 1}, 1),
        hs({0, 1, 1}, 1), hs({0, -1, 1}, 1),
    };
    return Polytope::validate(sys);
}

// Hypercube {0 <= x_i <= 1} in R^d.
inline HalfspaceSystem hypercube_system(int d) {
    HalfspaceSystem sys;
    sys.dim = d;
    for (int j = 0; j < d; ++j) {
        RatVec lo(d, 0), hi(d, 0);
        lo[j] = -1;
        hi[j] = 1;
        sys.halfspaces.push_back({lo, 0});
        sys.halfspaces.push_back({hi, 1});
    }
    return sys;
}

inline RatVec coords(std::vector<Rational> v) { return RatVec(v.begin(), v.end()); }

}  // namespace fixtures
