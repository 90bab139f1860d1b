#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hirsch/deform.hpp"
#include "hirsch/sampler.hpp"

using namespace hirsch;
using namespace fixtures;

TEST_CASE("axis cube deformation is non-generic") {
    CHECK_THROWS_WITH_AS(fundamental_deformation(cube(), 6, 1), doctest::Contains("ENonGeneric"),
                         Error);
}

TEST_CASE("simplex deformation collapses: EDegenerate") {
    Polytope s = simplex();
    for (int f = 1; f <= 4; ++f)
        CHECK_THROWS_WITH_AS(fundamental_deformation(s, f, 1), doctest::Contains("EDegenerate"),
                             Error);
}

TEST_CASE("preconditions of the deformation operator") {
    CHECK_THROWS_WITH_AS(fundamental_deformation(square_pyramid(), 1, 1),
                         doctest::Contains("ENotSimple"), Error);
    CHECK_THROWS_AS(fundamental_deformation(cube(), 0, 1), Error);
    CHECK_THROWS_AS(fundamental_deformation(cube(), 7, 1), Error);
    CHECK_THROWS_AS(fundamental_deformation(cube(), 6, 0), Error);
    CHECK_THROWS_AS(fundamental_deformation(cube(), 6, -1), Error);
}

TEST_CASE("tilted-cube deformation: the worked example") {
    Polytope p = tilted_cube();
    FDRecord fd = fundamental_deformation(p, 6, 1);
    CHECK(fd.t0 == Rational(17, 20));
    CHECK(fd.t1 == Rational(7, 8));
    CHECK(p.vertices()[fd.v].point == coords({1, 1, 0}));
    CHECK(p.vertices()[fd.w].point == coords({1, 1, Rational(17, 20)}));
    CHECK(facet_card(p.vertices()[fd.v].tight & p.vertices()[fd.w].tight) == 2);
    CHECK(fd.ridge_facet == 5);
    CHECK(fd.result.facet_count() == 6);
    CHECK(fd.result.vertex_count() == 8);  // delta = d - 3 = 0
    CHECK(fd.result.simple());

    // monotonicity: the result is contained in the source
    for (const VertexData& v : fd.result.vertices())
        for (const Halfspace& h : p.halfspaces()) CHECK(dot(h.normal, v.point) <= h.offset);

    // the new ridge is a 1-simplex with the predicted coordinates
    auto ridge = new_ridge_simplex(fd);
    REQUIRE(ridge.size() == 2);
    std::vector<RatVec> pts{ridge[0].point, ridge[1].point};
    std::sort(pts.begin(), pts.end(), lex_less);
    CHECK(pts[0] == coords({Rational(3, 4), 1, 0}));
    CHECK(pts[1] == coords({1, Rational(1, 2), 0}));

    // forged record: a wrong facet pair breaks the simplex shape
    FDRecord forged = fd;
    forged.facet = 5;
    forged.ridge_facet = 5;  // the bottom alone is a pentagon, not a 1-simplex
    CHECK_THROWS_WITH_AS(new_ridge_simplex(forged), doctest::Contains("EShapeMismatch"), Error);
}

TEST_CASE("vertex correspondence covers exactly the persisted vertices") {
    Polytope p = tilted_cube();
    FDRecord fd = fundamental_deformation(p, 6, 1);
    auto corr = vertex_correspondence(fd);
    int persisted = 0;
    std::vector<bool> hit(fd.result.vertex_count(), false);
    for (int u = 0; u < p.vertex_count(); ++u) {
        if (u == fd.v || u == fd.w) {
            CHECK(corr[u] == -1);
            continue;
        }
        REQUIRE(corr[u] >= 0);
        CHECK(fd.result.vertices()[corr[u]].tight == p.vertices()[u].tight);
        hit[corr[u]] = true;
        ++persisted;
    }
    CHECK(persisted == p.vertex_count() - 2);
    // the unmatched result vertices are exactly the ridge simplex
    auto ridge = new_ridge_simplex(fd);
    int fresh = 0;
    for (int r = 0; r < fd.result.vertex_count(); ++r) {
        if (hit[r]) continue;
        ++fresh;
        bool in_ridge = false;
        for (const auto& s : ridge)
            if (s.point == fd.result.vertices()[r].point) in_ridge = true;
        CHECK(in_ridge);
    }
    CHECK(fresh == p.dim() - 1);
}

TEST_CASE("deform_path: transport, reroute, and the excluded case") {
    Polytope p = tilted_cube();
    FDRecord fd = fundamental_deformation(p, 6, 1);
    const int u = p.vertex_index(coords({1, 0, 0}));
    const int z = p.vertex_index(coords({1, 0, Rational(9, 10)}));
    const int o = p.vertex_index(coords({0, 0, 0}));
    REQUIRE(u >= 0);
    REQUIRE(z >= 0);
    REQUIRE(o >= 0);

    // untouched path: transported vertex by vertex
    EdgePath avoid{{o, u, z}};
    EdgePath moved = deform_path(avoid, fd);
    CHECK(moved.length() == 2);
    auto corr = vertex_correspondence(fd);
    CHECK(moved.vertices == std::vector<int>({corr[o], corr[u], corr[z]}));

    // path through the vanishing edge: rerouted via the ridge, shorter here
    EdgePath through{{u, fd.v, fd.w, z}};
    EdgePath rerouted = deform_path(through, fd);
    CHECK(rerouted.length() <= through.length());
    CHECK(rerouted.vertices.front() == corr[u]);
    CHECK(rerouted.vertices.back() == corr[z]);
    const Skeleton dst = skeleton_of(fd.result);
    for (std::size_t i = 0; i + 1 < rerouted.vertices.size(); ++i)
        CHECK(dst.has_edge(rerouted.vertices[i], rerouted.vertices[i + 1]));
    CHECK(rerouted.length() == 2);
    CHECK(fd.result.vertices()[rerouted.vertices[1]].point == coords({1, Rational(1, 2), 0}));

    // touching only one endpoint of the vanishing edge is excluded
    const int b = p.vertex_index(coords({0, 1, 0}));
    REQUIRE(b >= 0);
    EdgePath one_touch{{u, fd.v, b}};
    CHECK_THROWS_WITH_AS(deform_path(one_touch, fd), doctest::Contains("EUndeformable"), Error);

    // endpoints may not vanish
    EdgePath endpoint{{fd.v, u}};
    CHECK_THROWS_WITH_AS(deform_path(endpoint, fd), doctest::Contains("EEndpointLost"), Error);

    // repeated touches still normalize when the range ends on distinct
    // vanishing-edge vertices: everything between the touches is cut
    EdgePath wide{{u, fd.v, b, o, u, fd.v, fd.w, z}};
    EdgePath squeezed = deform_path(wide, fd);
    CHECK(squeezed.length() <= wide.length());
    CHECK(squeezed.vertices.front() == corr[u]);
    CHECK(squeezed.vertices.back() == corr[z]);

    // touches framed by the same vertex cannot be normalized
    EdgePath vbv{{u, fd.v, b, fd.v, b}};
    CHECK_THROWS_WITH_AS(deform_path(vbv, fd), doctest::Contains("EUndeformable"), Error);
}

TEST_CASE("deform_path normalization rewrites non-consecutive touches") {
    Polytope p = tilted_cube();
    FDRecord fd = fundamental_deformation(p, 6, 1);
    // u -> v -> b ... -> w -> z with v and w non-consecutive: the shortcut
    // glues the prefix up to v directly to the suffix from w.
    const int u = p.vertex_index(coords({1, 0, 0}));
    const int z = p.vertex_index(coords({1, 0, Rational(9, 10)}));
    const int b = p.vertex_index(coords({0, 1, 0}));
    const int t4 = p.vertex_index(coords({0, 1, Rational(19, 20)}));
    REQUIRE(t4 >= 0);
    const Skeleton src = skeleton_of(p);
    REQUIRE(src.has_edge(fd.v, b));
    REQUIRE(src.has_edge(b, t4));
    REQUIRE(src.has_edge(t4, fd.w));
    EdgePath wide{{u, fd.v, b, t4, fd.w, z}};
    EdgePath out = deform_path(wide, fd);
    CHECK(out.length() <= wide.length());
    CHECK(out.length() == 2);  // normalized to u -> v -> w -> z, then rerouted
    const Skeleton dst = skeleton_of(fd.result);
    for (std::size_t i = 0; i + 1 < out.vertices.size(); ++i)
        CHECK(dst.has_edge(out.vertices[i], out.vertices[i + 1]));
}

TEST_CASE("FD of a Dantzig figure protects the marks") {
    Polytope p = tilted_cube();
    auto pairs = find_dantzig_pairs(p);
    REQUIRE(pairs.size() == 4);

    // marks off the vanishing edge: valid FD, result is again Dantzig
    const int x = p.vertex_index(coords({1, 0, 0}));
    const int y = p.vertex_index(coords({0, 1, Rational(19, 20)}));
    REQUIRE(is_dantzig(p, x, y));
    DantzigFigure fig{p, x, y};
    FDRecord fd = fd_of_dantzig(fig, 6, 1);
    auto [nx, ny] = transport_marks(fd, x, y);
    CHECK(is_dantzig(fd.result, nx, ny));
    CHECK(fd.result.vertices()[nx].tight == p.vertices()[x].tight);
    CHECK(fd.result.vertices()[ny].tight == p.vertices()[y].tight);

    // the crossed vertex or companion being marked is rejected
    const int o = p.vertex_index(coords({0, 0, 0}));
    const int w6 = p.vertex_index(coords({1, 1, Rational(17, 20)}));
    REQUIRE(is_dantzig(p, o, w6));
    DantzigFigure protected_fig{p, o, w6};
    CHECK_THROWS_WITH_AS(fd_of_dantzig(protected_fig, 6, 1),
                         doctest::Contains("EProtectedVertex"), Error);
}

TEST_CASE("goodness of the tilted-cube deformation") {
    Polytope p = tilted_cube();
    FDRecord fd = fundamental_deformation(p, 6, 1);
    const int x = p.vertex_index(coords({1, 0, 0}));
    const int y = p.vertex_index(coords({0, 1, Rational(19, 20)}));
    // the vanishing edge lies on an x-y geodesic: good via the through arm
    CHECK(is_good(fd, x, y));
    // and for this deformation every admissible pair is good
    CHECK(goodness_for_all_pairs(fd));
    CHECK_THROWS_AS(is_good(fd, fd.v, y), Error);
    CHECK_THROWS_AS(is_good(fd, x, x), Error);
}

TEST_CASE("d=4 deformation gains one vertex and a triangle ridge") {
    // deterministic random (8,4) Dantzig figure
    DantzigFigure fig = random_dantzig(4, 20240502);
    REQUIRE(is_dantzig(fig.poly, fig.x, fig.y));
    FDRecord fd;
    bool found = false;
    for (int facet = 1; facet <= fig.poly.facet_count() && !found; ++facet) {
        try {
            fd = fundamental_deformation(fig.poly, facet, 1);
            found = true;
        } catch (const Error&) {
        }
    }
    REQUIRE(found);
    CHECK(fd.result.vertex_count() == fig.poly.vertex_count() + 1);
    auto ridge = new_ridge_simplex(fd);
    CHECK(ridge.size() == 3);  // a triangle: the d-2 simplex at d=4
}
