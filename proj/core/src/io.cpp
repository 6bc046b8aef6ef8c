#include "cwc/io.hpp"

#include <fstream>
#include <sstream>
#include <tuple>

namespace cwc {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

CWComplex read_cwx(std::istream& in) {
    CWComplex x;
    x.dim = -1;
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    std::vector<std::tuple<int, int, int, long long>> entries;
    std::vector<std::tuple<int, int, std::string>> labels;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream is(strip_comment(line));
        std::string kw;
        if (!(is >> kw)) continue;
        auto bad = [&](const std::string& why) {
            throw ParseError("cwx line " + std::to_string(lineno) + ": " + why);
        };
        if (!saw_header) {
            int ver;
            if (kw != "cwx" || !(is >> ver) || ver != 1) bad("expected header 'cwx 1'");
            saw_header = true;
            continue;
        }
        if (kw == "dim") {
            int d;
            if (!(is >> d) || d < 0) bad("bad dimension");
            x.dim = d;
            x.cell_counts.assign(d + 1, 0);
        } else if (kw == "cells") {
            int n, count;
            if (!(is >> n >> count)) bad("cells needs N COUNT");
            if (x.dim < 0) bad("cells before dim");
            if (n < 0 || n > x.dim) bad("cells dimension out of range");
            if (count < 0) bad("negative cell count");
            x.cell_counts[n] = count;
        } else if (kw == "inc") {
            int n, mu, lambda;
            long long coeff;
            if (!(is >> n >> mu >> lambda >> coeff)) bad("inc needs N MU LAMBDA COEFF");
            entries.push_back({n, mu, lambda, coeff});
        } else if (kw == "label") {
            int n, idx;
            if (!(is >> n >> idx)) bad("label needs N INDEX TEXT");
            std::string text;
            std::getline(is, text);
            size_t start = text.find_first_not_of(" \t");
            labels.push_back({n, idx, start == std::string::npos ? "" : text.substr(start)});
        } else {
            bad("unknown keyword '" + kw + "'");
        }
    }
    if (!saw_header) throw ParseError("cwx: missing header");
    if (x.dim < 0) throw ParseError("cwx: missing dim line");

    for (int n = 1; n <= x.dim; ++n)
        x.inc.push_back(IntMatrix(x.cell_counts[n - 1], x.cell_counts[n]));
    for (auto [n, mu, lambda, coeff] : entries) {
        if (n < 1 || n > x.dim) throw ParseError("cwx: inc dimension out of range");
        IntMatrix& m = x.incidence(n);
        if (mu < 0 || mu >= m.rows || lambda < 0 || lambda >= m.cols)
            throw ParseError("cwx: inc index out of range");
        m.at(mu, lambda) = coeff;
    }
    for (auto& [n, idx, text] : labels) {
        if (n < 0 || n > x.dim || idx < 0 || idx >= x.cells(n))
            throw ParseError("cwx: label index out of range");
        x.set_label(n, idx, text);
    }
    return x;
}

void write_cwx(const CWComplex& x, std::ostream& out) {
    out << "cwx 1\n";
    out << "dim " << x.dim << "\n";
    for (int n = 0; n <= x.dim; ++n) out << "cells " << n << " " << x.cell_counts[n] << "\n";
    for (int n = 1; n <= x.dim; ++n) {
        const IntMatrix& m = x.incidence(n);
        for (int mu = 0; mu < m.rows; ++mu)
            for (int lambda = 0; lambda < m.cols; ++lambda)
                if (m.at(mu, lambda) != 0)
                    out << "inc " << n << " " << mu << " " << lambda << " "
                        << m.at(mu, lambda) << "\n";
    }
    for (int n = 0; n <= x.dim; ++n)
        for (int idx = 0; idx < x.cells(n); ++idx) {
            std::string lab = x.label(n, idx);
            if (!lab.empty()) out << "label " << n << " " << idx << " " << lab << "\n";
        }
}

CWComplex read_facets(std::istream& in) {
    std::vector<std::vector<int>> facets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream is(strip_comment(line));
        std::vector<int> facet;
        int v;
        while (is >> v) facet.push_back(v);
        if (!is.eof()) {
            std::string junk;
            is.clear();
            is >> junk;
            if (!junk.empty())
                throw ParseError("facets line " + std::to_string(lineno) +
                                 ": non-integer token '" + junk + "'");
        }
        if (!facet.empty()) facets.push_back(std::move(facet));
    }
    if (facets.empty()) throw ParseError("facets: no facets found");
    return from_simplicial(facets);
}

CWComplex read_complex_stream(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string content = buffer.str();

    std::istringstream probe(content);
    std::string first_word;
    probe >> first_word;
    std::istringstream again(content);
    if (first_word == "cwx") return read_cwx(again);
    return read_facets(again);
}

CWComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    return read_complex_stream(in);
}

std::string to_cwx(const CWComplex& x) {
    std::ostringstream os;
    write_cwx(x, os);
    return os.str();
}

}  // namespace cwc
