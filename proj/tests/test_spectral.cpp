#include "cwc/boundary.hpp"
#include "cwc/complex.hpp"
#include "cwc/jacobi.hpp"
#include "cwc/spectral.hpp"
#include "cwc/zoo.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace cwc;

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Random 2-complex: K(v) one-skeleton edges chosen at random, faces glued on
// random triangles that are fully present.
CWComplex random_two_complex(std::mt19937& rng, int nv = 6) {
    std::vector<std::vector<int>> facets;
    std::bernoulli_distribution keep(0.5);
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b)
            for (int c = b + 1; c < nv; ++c)
                if (keep(rng)) facets.push_back({a, b, c});
    if (facets.empty()) facets.push_back({0, 1, 2});
    return from_simplicial(facets);
}

}  // namespace

TEST_CASE("Laplacians of the path P3 match the textbook matrices") {
    CWComplex p3 = zoo("path", {2});

    Mat lower = laplacian(p3, 1, LapKind::lower);
    REQUIRE(lower.rows == 2);
    CHECK(lower.at(0, 0) == 2); CHECK(lower.at(0, 1) == -1);
    CHECK(lower.at(1, 0) == -1); CHECK(lower.at(1, 1) == 2);

    Mat upper0 = laplacian(p3, 0, LapKind::upper);
    REQUIRE(upper0.rows == 3);
    CHECK(upper0.at(0, 0) == 1); CHECK(upper0.at(0, 1) == -1); CHECK(upper0.at(0, 2) == 0);
    CHECK(upper0.at(1, 0) == -1); CHECK(upper0.at(1, 1) == 2); CHECK(upper0.at(1, 2) == -1);
    CHECK(upper0.at(2, 0) == 0); CHECK(upper0.at(2, 1) == -1); CHECK(upper0.at(2, 2) == 1);
}

TEST_CASE("full Laplacian is the sum of the two halves") {
    CWComplex x = zoo("tetra_minus_face");
    for (int n = 1; n < x.dim; ++n) {
        Mat lo = laplacian(x, n, LapKind::lower);
        Mat up = laplacian(x, n, LapKind::upper);
        Mat full = laplacian(x, n, LapKind::full);
        for (int i = 0; i < full.rows; ++i)
            for (int j = 0; j < full.cols; ++j)
                CHECK(full.at(i, j) == lo.at(i, j) + up.at(i, j));
    }
}

TEST_CASE("unreduced dimension-0 lower Laplacian is inapplicable") {
    CWComplex p3 = zoo("path", {2});
    CHECK_THROWS_AS(laplacian(p3, 0, LapKind::lower, false), InapplicableError);
    // reduced: the augmentation contributes the all-ones rank-one block
    Mat red = laplacian(p3, 0, LapKind::lower, true);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(red.at(i, j) == 1);
}

TEST_CASE("Laplacians are symmetric positive semidefinite") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 8; ++trial) {
        CWComplex x = random_two_complex(rng);
        for (int n = 0; n <= x.dim; ++n)
            for (LapKind k : {LapKind::lower, LapKind::upper, LapKind::full}) {
                if (n == 0 && k != LapKind::upper) continue;
                Mat lap = laplacian(x, n, k);
                auto eig = sym_eigen(lap);
                if (!eig.values.empty())
                    CHECK(eig.values.front() >= -zero_threshold_for(lap));
            }
    }
}

TEST_CASE("nonzero spectra of the upper Laplacian at n and lower at n+1 coincide") {
    for (const char* name : {"torus_7", "tetra_minus_face", "rp2_6"}) {
        CWComplex x = zoo(name);
        for (int n = 0; n + 1 <= x.dim; ++n) {
            Mat up = laplacian(x, n, LapKind::upper);
            Mat lo = laplacian(x, n + 1, LapKind::lower);
            auto eu = sym_eigen(up);
            auto el = sym_eigen(lo);
            double thr = zero_threshold_for(up);
            std::vector<double> nzu, nzl;
            for (double v : eu.values) if (v > thr) nzu.push_back(v);
            for (double v : el.values) if (v > thr) nzl.push_back(v);
            REQUIRE(nzu.size() == nzl.size());
            for (size_t i = 0; i < nzu.size(); ++i)
                CHECK(nzu[i] == doctest::Approx(nzl[i]).epsilon(1e-8));
        }
    }
}

TEST_CASE("smallest nontrivial eigenvalue on worked examples") {
    SUBCASE("P3 top dimension: lambda_1 = 1") {
        auto rep = smallest_nontrivial_eigenvalue(zoo("path", {2}), 1, LapKind::lower);
        CHECK(rep.lambda == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(norm(rep.eigenvector) == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("cycle-3 top dimension: lambda_1 = 0 (nontrivial H_1)") {
        auto rep = smallest_nontrivial_eigenvalue(zoo("cycle", {3}), 1, LapKind::lower);
        CHECK(std::abs(rep.lambda) <= rep.zero_threshold);
    }
    SUBCASE("tetra_minus_face: restricted spectrum {1, 4, 4}") {
        auto rep = smallest_nontrivial_eigenvalue(zoo("tetra_minus_face"), 2, LapKind::lower);
        CHECK(rep.lambda == doctest::Approx(1.0).epsilon(1e-10));
        REQUIRE(rep.restricted_spectrum.size() == 3);
        CHECK(rep.restricted_spectrum[1] == doctest::Approx(4.0).epsilon(1e-9));
        CHECK(rep.restricted_spectrum[2] == doctest::Approx(4.0).epsilon(1e-9));
    }
    SUBCASE("mid-dimension restriction projects out the coexact space") {
        // torus in dimension 1: trivial_dim = rank I_2 = 13
        auto rep = smallest_nontrivial_eigenvalue(zoo("torus_7"), 1, LapKind::lower);
        CHECK(rep.trivial_dim == 13);
        CHECK(int(rep.restricted_spectrum.size()) == 21 - 13);
    }
}

TEST_CASE("the reported pair is an eigenpair of the restricted operator") {
    for (const char* name : {"torus_7", "rp2_6", "tetra_minus_face"}) {
        CWComplex x = zoo(name);
        auto rep = smallest_nontrivial_eigenvalue(x, x.dim, LapKind::lower);
        Mat lap = laplacian(x, x.dim, LapKind::lower);
        std::vector<double> lv = matvec(lap, rep.eigenvector);
        double err = 0;
        for (size_t i = 0; i < lv.size(); ++i)
            err += std::pow(lv[i] - rep.lambda * rep.eigenvector[i], 2);
        CHECK(std::sqrt(err) <= 1e-8 * std::max(1.0, lap.frobenius()));
    }
}

TEST_CASE("Rayleigh quotients of random vectors never beat lambda") {
    std::mt19937 rng(909);
    std::normal_distribution<double> g;
    CWComplex x = zoo("tetra_minus_face");
    auto rep = smallest_nontrivial_eigenvalue(x, 2, LapKind::lower);
    Mat lap = laplacian(x, 2, LapKind::lower);
    // At top dimension the restriction is the whole space, so every unit
    // vector has Rayleigh quotient >= lambda.
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> v(x.cells(2));
        for (double& c : v) c = g(rng);
        double n2 = dot(v, v);
        if (n2 < 1e-12) continue;
        CHECK(dot(v, matvec(lap, v)) / n2 >= rep.lambda - 1e-9);
    }
}

TEST_CASE("Hodge decomposition: components sum, are orthogonal, and land right") {
    SUBCASE("cycle-3: everything in dimension 1 is harmonic plus exact") {
        CWComplex c3 = zoo("cycle", {3});
        std::vector<double> f = {1, 2, 3};
        auto split = hodge_decompose(c3, 1, f);
        for (int i = 0; i < 3; ++i)
            CHECK(split.exact[i] + split.harmonic[i] + split.coexact[i] ==
                  doctest::Approx(f[i]).epsilon(1e-10));
        // no 2-cells: coexact part vanishes
        for (double v : split.coexact) CHECK(v == doctest::Approx(0.0));
        // harmonic part is a multiple of the circulation (1,1,1) in the
        // edge orientation of the cycle
        CHECK(split.harmonic[0] == doctest::Approx(split.harmonic[1]).epsilon(1e-9));
        CHECK(split.harmonic[1] == doctest::Approx(split.harmonic[2]).epsilon(1e-9));
    }
    SUBCASE("filled triangle: the face coboundary is purely coexact") {
        CWComplex tri = zoo("filled_simplex", {2});
        // f = I_2 * (1) viewed as a 1-cochain
        const IntMatrix& i2 = tri.incidence(2);
        std::vector<double> f(tri.cells(1));
        for (int e = 0; e < tri.cells(1); ++e) f[e] = double(i2.at(e, 0));
        auto split = hodge_decompose(tri, 1, f);
        for (int e = 0; e < tri.cells(1); ++e) {
            CHECK(split.coexact[e] == doctest::Approx(f[e]).epsilon(1e-10));
            CHECK(split.exact[e] == doctest::Approx(0.0).epsilon(1e-10));
            CHECK(split.harmonic[e] == doctest::Approx(0.0).epsilon(1e-10));
        }
    }
    SUBCASE("random complexes: orthogonality and harmonic dimension") {
        std::mt19937 rng(111);
        std::normal_distribution<double> g;
        for (int trial = 0; trial < 6; ++trial) {
            CWComplex x = random_two_complex(rng);
            for (int n = 0; n <= 2; ++n) {
                std::vector<double> f(x.cells(n));
                for (double& v : f) v = g(rng);
                auto split = hodge_decompose(x, n, f);
                CHECK(std::abs(dot(split.exact, split.harmonic)) <= 1e-8);
                CHECK(std::abs(dot(split.exact, split.coexact)) <= 1e-8);
                CHECK(std::abs(dot(split.harmonic, split.coexact)) <= 1e-8);
                // harmonic component is killed by the full Laplacian
                if (n >= 1) {
                    Mat lap = laplacian(x, n, LapKind::full);
                    std::vector<double> lv = matvec(lap, split.harmonic);
                    CHECK(norm(lv) <= 1e-7 * std::max(1.0, lap.frobenius()));
                }
            }
        }
    }
}

TEST_CASE("Betti numbers on worked examples") {
    CHECK(betti(zoo("cycle", {3}), 1, Field::q) == 1);
    CHECK(betti(zoo("cycle", {3}), 0, Field::q) == 1);
    CHECK(betti(zoo("cycle", {3}), 0, Field::q, true) == 0);  // reduced
    CHECK(betti(zoo("path", {4}), 1, Field::f2) == 0);
    CHECK(betti(zoo("simplex_boundary", {3}), 2, Field::q) == 1);
    CHECK(betti(zoo("filled_simplex", {3}), 2, Field::q) == 0);
    CHECK(betti(zoo("tetra_minus_face"), 2, Field::q) == 0);
    CHECK(betti(zoo("rp2_6"), 1, Field::f2) == 1);
    CHECK(betti(zoo("rp2_6"), 1, Field::q) == 0);
    CHECK(betti(zoo("rp2_6"), 2, Field::f2) == 1);
    CHECK(betti(zoo("rp2_6"), 2, Field::q) == 0);
    CHECK(betti(zoo("torus_7"), 1, Field::q) == 2);
}

TEST_CASE("kernel dimension of the full Laplacian equals the rational Betti number") {
    for (const char* name : {"torus_7", "rp2_6", "tetra_minus_face", "klein_8"}) {
        CWComplex x = zoo(name);
        for (int n = 1; n <= x.dim; ++n) {
            Mat lap = laplacian(x, n, LapKind::full);
            auto eig = sym_eigen(lap);
            double thr = zero_threshold_for(lap);
            int zeros = 0;
            for (double v : eig.values)
                if (std::abs(v) <= thr) ++zeros;
            CHECK(zeros == betti(x, n, Field::q));
        }
    }
}

TEST_CASE("reorientation leaves the spectrum invariant") {
    std::mt19937 rng(121);
    CWComplex x = zoo("torus_7");
    std::vector<int> signs(x.cells(2));
    for (int& s : signs) s = (rng() & 1) ? 1 : -1;
    CWComplex y = reorient(x, 2, Orientation{2, signs});
    auto a = smallest_nontrivial_eigenvalue(x, 2, LapKind::lower);
    auto b = smallest_nontrivial_eigenvalue(y, 2, LapKind::lower);
    CHECK(a.lambda == doctest::Approx(b.lambda).epsilon(1e-9));
    REQUIRE(a.restricted_spectrum.size() == b.restricted_spectrum.size());
    for (size_t i = 0; i < a.restricted_spectrum.size(); ++i)
        CHECK(a.restricted_spectrum[i] ==
              doctest::Approx(b.restricted_spectrum[i]).epsilon(1e-9));
}

TEST_CASE("empty restriction raises InapplicableError") {
    // Filled triangle, dimension 2, upper direction: I_2 is injective, so
    // every 2-cochain is in the image of the coboundary and nothing is left
    // after projecting it out.
    CHECK_THROWS_AS(
        smallest_nontrivial_eigenvalue(zoo("filled_simplex", {2}), 2, LapKind::upper),
        InapplicableError);

    // No cells in the requested dimension at all.
    CWComplex empty1;
    empty1.dim = 1;
    empty1.cell_counts = {2, 0};
    empty1.inc = {IntMatrix(2, 0)};
    CHECK_THROWS_AS(smallest_nontrivial_eigenvalue(empty1, 1, LapKind::lower),
                    InapplicableError);
}
