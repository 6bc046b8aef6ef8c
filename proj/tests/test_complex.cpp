#include "cwc/boundary.hpp"
#include "cwc/complex.hpp"
#include "cwc/spectral.hpp"
#include "cwc/zoo.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace cwc;

namespace {

// Filled triangle built by hand: edges a={v0,v1}, b={v1,v2}, c={v0,v2},
// face with boundary a + b - c.
CWComplex filled_triangle_manual(long long fa, long long fb, long long fc) {
    CWComplex x;
    x.dim = 2;
    x.cell_counts = {3, 3, 1};
    IntMatrix i1(3, 3);
    i1.at(0, 0) = -1; i1.at(1, 0) = 1;
    i1.at(1, 1) = -1; i1.at(2, 1) = 1;
    i1.at(0, 2) = -1; i1.at(2, 2) = 1;
    IntMatrix i2(3, 1);
    i2.at(0, 0) = fa; i2.at(1, 0) = fb; i2.at(2, 0) = fc;
    x.inc = {i1, i2};
    return x;
}

}  // namespace

TEST_CASE("validate accepts the filled triangle and flags a broken face") {
    CHECK(validate(filled_triangle_manual(1, 1, -1)).ok);

    auto bad = validate(filled_triangle_manual(1, 1, 1));
    CHECK_FALSE(bad.ok);
    REQUIRE_FALSE(bad.violations.empty());
    CHECK(bad.violations[0].n == 1);
}

TEST_CASE("validate: zero-dimensional complex has nothing to check") {
    CWComplex x;
    x.dim = 0;
    x.cell_counts = {5};
    CHECK(validate(x).ok);
}

TEST_CASE("validate flags non-unit incidence when regularity is asserted") {
    CWComplex x;
    x.dim = 1;
    x.cell_counts = {1, 1};
    IntMatrix i1(1, 1);
    i1.at(0, 0) = 2;
    x.inc = {i1};
    x.regular_asserted = true;
    CHECK_FALSE(validate(x).ok);
    x.regular_asserted = false;
    CHECK(validate(x).ok);
}

TEST_CASE("boundary matrices of the path P3") {
    CWComplex p3 = zoo("path", {2});
    Mat b = boundary_matrix_r(p3, 1);
    REQUIRE(b.rows == 3);
    REQUIRE(b.cols == 2);
    CHECK(b.at(0, 0) == -1); CHECK(b.at(1, 0) == 1); CHECK(b.at(2, 0) == 0);
    CHECK(b.at(0, 1) == 0);  CHECK(b.at(1, 1) == -1); CHECK(b.at(2, 1) == 1);

    RationalMatrix aug = boundary_matrix_q(p3, 0, true);
    REQUIRE(aug.rows == 1);
    REQUIRE(aug.cols == 3);
    for (int c = 0; c < 3; ++c) CHECK(aug.at(0, c) == 1);

    CHECK_THROWS_AS(boundary_matrix_r(p3, 0, false), std::out_of_range);
    CHECK_THROWS_AS(boundary_matrix_r(p3, 2, false), std::out_of_range);
}

TEST_CASE("even incidence vanishes over F2") {
    CWComplex x;
    x.dim = 1;
    x.cell_counts = {1, 1};
    IntMatrix i1(1, 1);
    i1.at(0, 0) = 2;
    x.inc = {i1};
    x.regular_asserted = false;
    F2Matrix m = boundary_matrix_f2(x, 1);
    CHECK_FALSE(m.get(0, 0));
}

TEST_CASE("degrees and boundary sets") {
    CWComplex p3 = zoo("path", {2});
    CHECK(degree(p3, 0, 0) == 1);
    CHECK(degree(p3, 0, 1) == 2);
    CHECK(degree(p3, 0, 2) == 1);
    CHECK(boundary_set(p3) == std::vector<int>{0, 2});

    CWComplex tetra = zoo("simplex_boundary", {3});
    for (int e = 0; e < tetra.cells(1); ++e) CHECK(degree(tetra, 1, e) == 2);
    CHECK(boundary_set(tetra).empty());

    CWComplex open_tetra = zoo("tetra_minus_face");
    CHECK(boundary_set(open_tetra).size() == 3);
}

TEST_CASE("orientability verdicts across the zoo") {
    auto ok = [](const CWComplex& x) { return check_orientability(x).orientable; };

    CHECK(ok(zoo("filled_simplex", {2})));
    CHECK(ok(zoo("simplex_boundary", {3})));
    CHECK(ok(zoo("torus_7")));
    CHECK(ok(zoo("tetra_minus_face")));
    CHECK(ok(zoo("path", {4})));
    CHECK(ok(zoo("cycle", {5})));

    auto book = check_orientability(zoo("book", {3}));
    CHECK_FALSE(book.orientable);
    CHECK(book.crowded_cell >= 0);  // the shared edge

    auto rp2 = check_orientability(zoo("rp2_6"));
    CHECK_FALSE(rp2.orientable);
    CHECK((rp2.crowded_cell >= 0 || !rp2.odd_cycle.empty()));
    CHECK_FALSE(check_orientability(zoo("klein_8")).orientable);
}

TEST_CASE("a returned orientation really is pairwise dissimilar") {
    for (const char* name : {"torus_7", "tetra_minus_face"}) {
        CWComplex x = zoo(name);
        auto res = check_orientability(x);
        REQUIRE(res.orientable);
        const IntMatrix& top = x.incidence(x.dim);
        for (int r = 0; r < top.rows; ++r) {
            std::vector<int> cof;
            for (int c = 0; c < top.cols; ++c)
                if (top.at(r, c) != 0) cof.push_back(c);
            if (cof.size() == 2)
                CHECK(res.orientation.signs[cof[0]] * top.at(r, cof[0]) ==
                      -res.orientation.signs[cof[1]] * top.at(r, cof[1]));
        }
    }
}

TEST_CASE("reorient: identity, single flip, involution") {
    CWComplex p3 = zoo("path", {2});
    Orientation all_plus{1, {1, 1}};
    CHECK(reorient(p3, 1, all_plus).same_data(p3));

    Orientation flip_a{1, {-1, 1}};
    CWComplex flipped = reorient(p3, 1, flip_a);
    CHECK(flipped.incidence(1).at(0, 0) == 1);
    CHECK(flipped.incidence(1).at(1, 0) == -1);
    CHECK(validate(flipped).ok);
    CHECK(reorient(flipped, 1, flip_a).same_data(p3));

    CHECK_THROWS_AS(reorient(p3, 1, Orientation{1, {1}}), std::invalid_argument);
}

TEST_CASE("reorient preserves Betti numbers exactly") {
    CWComplex x = zoo("tetra_minus_face");
    std::mt19937 rng(7);
    std::vector<int> signs(x.cells(2));
    for (int& s : signs) s = (rng() & 1) ? 1 : -1;
    CWComplex y = reorient(x, 2, Orientation{2, signs});
    REQUIRE(validate(y).ok);
    for (int n = 0; n <= 2; ++n) {
        CHECK(betti(x, n, Field::f2) == betti(y, n, Field::f2));
        CHECK(betti(x, n, Field::q) == betti(y, n, Field::q));
    }
}

TEST_CASE("augment_boundary on P3, a closed complex, and the open tetrahedron") {
    auto p3 = augment_boundary(zoo("path", {2}));
    CHECK(p3.augmented.cells(0) == 5);
    CHECK(p3.augmented.cells(1) == 4);
    CHECK(p3.virtual_top.size() == 2);
    CHECK(validate(p3.augmented).ok);

    auto closed = augment_boundary(zoo("simplex_boundary", {3}));
    CHECK(closed.virtual_top.empty());
    CHECK(closed.augmented.same_data(closed.base));

    auto open_tetra = augment_boundary(zoo("tetra_minus_face"));
    CHECK(open_tetra.augmented.cells(1) == open_tetra.base.cells(1) + 3);
    CHECK(open_tetra.augmented.cells(2) == open_tetra.base.cells(2) + 3);
    CHECK(validate(open_tetra.augmented).ok);

    // Each original boundary (d-1)-cell reaches degree 2 after doubling.
    for (int mu : open_tetra.doubled)
        CHECK(degree(open_tetra.augmented, 1, mu) == 2);
}

TEST_CASE("from_simplicial: filled triangle with the standard sign convention") {
    CWComplex x = from_simplicial({{0, 1, 2}});
    REQUIRE(x.cell_counts == std::vector<int>{3, 3, 1});
    // edges ordered {0,1}, {0,2}, {1,2}
    CHECK(x.incidence(2).at(0, 0) == 1);
    CHECK(x.incidence(2).at(1, 0) == -1);
    CHECK(x.incidence(2).at(2, 0) == 1);
    CHECK(validate(x).ok);

    CHECK_THROWS_AS(from_simplicial({{0, 1}, {}}), std::invalid_argument);
}

TEST_CASE("from_simplicial is permutation-stable") {
    auto facets = torus_7_facets();
    CWComplex a = from_simplicial(facets);
    std::mt19937 rng(13);
    std::shuffle(facets.begin(), facets.end(), rng);
    CWComplex b = from_simplicial(facets);
    CHECK(a.same_data(b));
}

TEST_CASE("zoo complexes all validate") {
    std::vector<CWComplex> all = {
        zoo("path", {2}), zoo("cycle", {3}), zoo("star", {3}),
        zoo("simplex_boundary", {3}), zoo("filled_simplex", {3}),
        zoo("tetra_minus_face"), zoo("torus_7"), zoo("rp2_6"),
        zoo("klein_8"), zoo("book", {4})};
    for (const auto& x : all) CHECK(validate(x).ok);

    CHECK_THROWS_AS(zoo("unknown"), std::invalid_argument);
    CHECK_THROWS_AS(zoo("path", {0}), std::invalid_argument);
}

TEST_CASE("surface triangulations have the expected invariants") {
    CWComplex torus = zoo("torus_7");
    CHECK(torus.cell_counts == std::vector<int>{7, 21, 14});
    CHECK(euler_characteristic(torus) == 0);
    CHECK(boundary_set(torus).empty());
    CHECK(betti(torus, 2, Field::q) == 1);

    CWComplex rp2 = zoo("rp2_6");
    CHECK(rp2.cell_counts == std::vector<int>{6, 15, 10});
    CHECK(euler_characteristic(rp2) == 1);
    CHECK(betti(rp2, 1, Field::f2) == 1);
    CHECK(betti(rp2, 2, Field::f2) == 1);
    CHECK(betti(rp2, 2, Field::q) == 0);

    CWComplex klein = zoo("klein_8");
    CHECK(euler_characteristic(klein) == 0);
    CHECK(boundary_set(klein).empty());
    for (int e = 0; e < klein.cells(1); ++e) CHECK(degree(klein, 1, e) == 2);
    CHECK(betti(klein, 0, Field::q) == 1);
    CHECK(betti(klein, 1, Field::f2) == 2);
    CHECK(betti(klein, 2, Field::f2) == 1);
    CHECK(betti(klein, 2, Field::q) == 0);
}
