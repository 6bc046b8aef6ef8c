#include "cwc/complex.hpp"
#include "cwc/io.hpp"
#include "cwc/zoo.hpp"

#include <doctest.h>

#include <sstream>

using namespace cwc;

TEST_CASE("cwx round-trip preserves every zoo complex") {
    std::vector<std::pair<std::string, std::vector<int>>> cases = {
        {"path", {3}}, {"cycle", {4}}, {"star", {3}}, {"simplex_boundary", {3}},
        {"filled_simplex", {2}}, {"tetra_minus_face", {}}, {"torus_7", {}},
        {"rp2_6", {}}, {"klein_8", {}}, {"book", {4}}};
    for (const auto& [name, params] : cases) {
        CWComplex x = zoo(name, params);
        std::istringstream in(to_cwx(x));
        CWComplex y = read_cwx(in);
        CHECK(y.same_data(x));
    }
}

TEST_CASE("labels survive the round trip") {
    CWComplex x = zoo("path", {2});
    x.set_label(0, 1, "middle vertex");
    x.set_label(1, 0, "first edge");
    std::istringstream in(to_cwx(x));
    CWComplex y = read_cwx(in);
    CHECK(y.label(0, 1) == "middle vertex");
    CHECK(y.label(1, 0) == "first edge");
    CHECK(y.label(0, 0).empty());
}

TEST_CASE("cwx parsing tolerates comments, blank lines, and line order") {
    std::istringstream in(
        "# a triangle, entries before counts\n"
        "cwx 1\n"
        "\n"
        "dim 1\n"
        "inc 1 0 0 -1   # tail\n"
        "cells 0 3\n"
        "cells 1 3\n"
        "inc 1 1 0 1\n"
        "inc 1 1 1 -1\n"
        "inc 1 2 1 1\n"
        "inc 1 2 2 -1\n"
        "inc 1 0 2 1\n");
    CWComplex x = read_cwx(in);
    CHECK(x.same_data(zoo("cycle", {3})));
}

TEST_CASE("cwx parse errors carry the offending line") {
    auto expect_fail = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_cwx(in), ParseError);
    };
    expect_fail("");                                     // no header
    expect_fail("cwx 2\ndim 0\ncells 0 1\n");            // wrong version
    expect_fail("cwx 1\ncells 0 1\n");                   // cells before dim
    expect_fail("cwx 1\ndim 1\ncells 0 1\ncells 1 1\ninc 1 5 0 1\n");  // bad index
    expect_fail("cwx 1\ndim 0\ncells 0 1\nbogus 1\n");   // unknown keyword
    expect_fail("cwx 1\ndim -2\n");                      // negative dim
    expect_fail("cwx 1\n");                              // missing dim
}

TEST_CASE("facet lists parse into simplicial complexes") {
    std::istringstream in(
        "# open tetrahedron\n"
        "0 1 2\n"
        "0 1 3\n"
        "\n"
        "0 2 3\n");
    CWComplex x = read_facets(in);
    CHECK(x.same_data(zoo("tetra_minus_face")));

    std::istringstream junk("0 1 x\n");
    CHECK_THROWS_AS(read_facets(junk), ParseError);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_facets(empty), ParseError);
}

TEST_CASE("format sniffing picks cwx or facets by the first word") {
    std::istringstream as_cwx(to_cwx(zoo("torus_7")));
    CHECK(read_complex_stream(as_cwx).same_data(zoo("torus_7")));

    std::ostringstream facet_text;
    for (const auto& f : torus_7_facets()) {
        for (size_t i = 0; i < f.size(); ++i) facet_text << (i ? " " : "") << f[i];
        facet_text << "\n";
    }
    std::istringstream as_facets(facet_text.str());
    CHECK(read_complex_stream(as_facets).same_data(zoo("torus_7")));
}

TEST_CASE("shipped data files match the built-in surfaces") {
    const std::string dir = CWC_DATA_DIR;
    CHECK(read_complex_file(dir + "/torus_7.facets").same_data(zoo("torus_7")));
    CHECK(read_complex_file(dir + "/rp2_6.facets").same_data(zoo("rp2_6")));
    CHECK(read_complex_file(dir + "/klein_9.facets").same_data(zoo("klein_8")));
}

TEST_CASE("missing files are a parse error") {
    CHECK_THROWS_AS(read_complex_file("/nonexistent/nowhere.cwx"), ParseError);
}
