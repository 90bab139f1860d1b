#include <doctest.h>

#include "fixtures.hpp"
#include "hirsch/dantzig.hpp"
#include "hirsch/linalg.hpp"
#include "hirsch/lp.hpp"
#include "hirsch/polytope.hpp"

using namespace hirsch;
using namespace fixtures;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4/2") == Rational(-2));
    CHECK(parse_rational("17") == Rational(17));
    CHECK(parse_rational(" 1 / 3 ") == Rational(1, 3));
    CHECK(rational_to_string(Rational(1, 3)) == "1/3");
    CHECK(rational_to_string(Rational(-7)) == "-7");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("a/3"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("square solve and rank") {
    RatMatrix a = {{1, 2}, {3, 4}};
    auto x = solve_square(a, {5, 6});
    REQUIRE(x);
    CHECK((*x)[0] == Rational(-4));
    CHECK((*x)[1] == Rational(9, 2));
    CHECK(!solve_square({{1, 2}, {2, 4}}, {1, 2}));
    CHECK(matrix_rank({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}) == 2);
    CHECK(affine_rank({{0, 0}, {1, 0}, {0, 1}}) == 2);
    CHECK(affine_rank({{1, 1}, {2, 2}, {3, 3}}) == 1);
}

TEST_CASE("exact simplex solves small LPs") {
    // max x + y s.t. x <= 2, y <= 3, x + y <= 4
    LpResult r = solve_lp({{1, 0}, {0, 1}, {1, 1}}, {2, 3, 4}, {1, 1});
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.value == 4);

    // unbounded: max x with only x >= 0 (i.e. -x <= 0)
    r = solve_lp({{-1}}, {0}, {1});
    CHECK(r.status == LpStatus::Unbounded);

    // infeasible: x <= -1, -x <= -1 means x <= -1 and x >= 1
    r = solve_lp({{1}, {-1}}, {-1, -1}, {1});
    CHECK(r.status == LpStatus::Infeasible);

    // phase-1 needed: x >= 5 (as -x <= -5), x <= 7, max -x gives x = 5
    r = solve_lp({{-1}, {1}}, {-5, 7}, {-1});
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.value == -5);
    CHECK(r.x[0] == 5);

    // degenerate constraints with exact ties
    r = solve_lp({{1, 1}, {1, 1}, {-1, 0}, {0, -1}}, {1, 1, 0, 0}, {2, 3});
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.value == 3);
}

TEST_CASE("cube vertex enumeration") {
    Polytope c = cube();
    CHECK(c.dim() == 3);
    CHECK(c.facet_count() == 6);
    REQUIRE(c.vertex_count() == 8);
    for (const VertexData& v : c.vertices()) CHECK(facet_card(v.tight) == 3);
    CHECK(c.simple());
    // canonical order is lexicographic: first vertex is the origin
    CHECK(c.vertices()[0].point == coords({0, 0, 0}));
    CHECK(c.vertices()[7].point == coords({1, 1, 1}));
    // every vertex satisfies every halfspace, tight exactly where recorded
    for (const VertexData& v : c.vertices()) {
        for (int f = 1; f <= 6; ++f) {
            const Halfspace& h = c.halfspaces()[f - 1];
            const Rational lhs = dot(h.normal, v.point);
            CHECK(lhs <= h.offset);
            CHECK((lhs == h.offset) == facet_in(v.tight, f));
        }
    }
}

TEST_CASE("slab is rejected as unbounded") {
    HalfspaceSystem sys;
    sys.dim = 3;
    sys.halfspaces = {hs({-1, 0, 0}, 0), hs({1, 0, 0}, 1)};
    CHECK_THROWS_WITH_AS(enumerate_vertices(sys), doctest::Contains("EUnbounded"), Error);
}

TEST_CASE("empty and flat systems are rejected as low-dimensional") {
    HalfspaceSystem sys = cube_system();
    sys.halfspaces[5].offset = -1;  // x3 <= -1 against x3 >= 0
    CHECK_THROWS_WITH_AS(enumerate_vertices(sys), doctest::Contains("ELowDim"), Error);

    HalfspaceSystem flat = cube_system();
    flat.halfspaces[5].offset = 0;  // 0 <= x3 <= 0
    CHECK_THROWS_WITH_AS(enumerate_vertices(flat), doctest::Contains("ELowDim"), Error);
}

TEST_CASE("simplex enumeration and simplicity") {
    Polytope s = simplex();
    CHECK(s.vertex_count() == 4);
    CHECK(s.simple());
    Polytope p = square_pyramid();
    CHECK(p.vertex_count() == 5);
    CHECK(!p.simple());  // apex lies on 4 facets
    int apex = p.vertex_index(coords({0, 0, 1}));
    REQUIRE(apex >= 0);
    CHECK(facet_card(p.vertices()[apex].tight) == 4);
}

TEST_CASE("redundant halfspace is rejected, not dropped") {
    HalfspaceSystem sys = cube_system();
    sys.halfspaces.push_back(hs({1, 0, 0}, 2));  // strictly outside
    CHECK_THROWS_WITH_AS(Polytope::validate(sys), doctest::Contains("EInvalid"), Error);
    // touching at a single vertex is still redundant
    HalfspaceSystem touch = cube_system();
    touch.halfspaces.push_back(hs({1, 1, 1}, 3));
    CHECK_THROWS_WITH_AS(Polytope::validate(touch), doctest::Contains("EInvalid"), Error);
}

TEST_CASE("enumerate_vertices is order-deterministic") {
    auto a = enumerate_vertices(cube_system());
    auto b = enumerate_vertices(cube_system());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].point == b[i].point);
        CHECK(a[i].tight == b[i].tight);
    }
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(lex_less(a[i - 1].point, a[i].point));
}

TEST_CASE("edge count at each vertex of a simple polytope equals dim") {
    for (const Polytope& p : {cube(), simplex(), prism(), tilted_cube()}) {
        for (int u = 0; u < p.vertex_count(); ++u) {
            int deg = 0;
            for (int v = 0; v < p.vertex_count(); ++v) {
                if (u == v) continue;
                if (facet_card(p.vertices()[u].tight & p.vertices()[v].tight) == p.dim() - 1)
                    ++deg;
            }
            CHECK(deg == p.dim());
        }
    }
}

TEST_CASE("move_facet substitutes the offset") {
    Polytope c = cube();
    HalfspaceSystem same = move_facet(c.system(), {6, 1}, 0);
    CHECK(same.halfspaces[5].offset == 1);
    for (int i = 0; i < 6; ++i) {
        CHECK(same.halfspaces[i].normal == c.halfspaces()[i].normal);
        CHECK(same.halfspaces[i].offset == c.halfspaces()[i].offset);
    }
    HalfspaceSystem half = move_facet(c.system(), {6, 1}, Rational(1, 2));
    CHECK(half.halfspaces[5].offset == Rational(1, 2));
    Polytope squashed = Polytope::validate(half);
    CHECK(squashed.vertex_count() == 8);
    // t = 2 empties the cube against the floor
    CHECK_THROWS_AS(Polytope::validate(move_facet(c.system(), {6, 1}, 2)), Error);
    CHECK_THROWS_AS(move_facet(c.system(), {6, 1}, -1), Error);
    CHECK_THROWS_AS(move_facet(c.system(), {0, 1}, 1), Error);
    CHECK_THROWS_AS(move_facet(c.system(), {6, 0}, 1), Error);
}

TEST_CASE("affine normalization of the marked cube") {
    Polytope c = cube();
    const int x = c.vertex_index(coords({0, 0, 0}));
    const int y = c.vertex_index(coords({1, 1, 1}));
    DantzigFigure fig = DantzigFigure::checked(c, x, y);
    DantzigFigure norm = affine_normalize(fig);

    const RatVec origin = coords({0, 0, 0});
    const RatVec ez = coords({0, 0, 1});
    CHECK(norm.poly.vertices()[norm.x].point == origin);
    CHECK(norm.poly.vertices()[norm.y].point == ez);
    // slab condition with the boundary touched only at the marks
    for (int v = 0; v < norm.poly.vertex_count(); ++v) {
        const Rational last = norm.poly.vertices()[v].point[2];
        CHECK(last >= 0);
        CHECK(last <= 1);
        if (v != norm.x) CHECK(last > 0);
        if (v != norm.y) CHECK(last < 1);
    }
    CHECK(norm.poly.vertex_count() == 8);
    CHECK(norm.poly.facet_count() == 6);

    // idempotence: conditions survive a second normalization
    DantzigFigure again = affine_normalize(norm);
    CHECK(again.poly.vertices()[again.x].point == origin);
    CHECK(again.poly.vertices()[again.y].point == ez);
    for (int v = 0; v < again.poly.vertex_count(); ++v) {
        const Rational last = again.poly.vertices()[v].point[2];
        CHECK(last >= 0);
        CHECK(last <= 1);
    }
}

TEST_CASE("affine normalization rejects non-Dantzig marks") {
    Polytope c = cube();
    CHECK_THROWS_AS(DantzigFigure::checked(c, 0, 1), Error);  // adjacent pair
    Polytope p = square_pyramid();
    CHECK_THROWS_AS(DantzigFigure::checked(p, 0, 4), Error);
}
