#pragma once

#include "cwc/complex.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace cwc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// cwx text format, one construct per line, '#' comments:
//   cwx 1
//   dim D
//   cells N COUNT
//   inc N MU LAMBDA COEFF
//   label N INDEX TEXT
CWComplex read_cwx(std::istream& in);
void write_cwx(const CWComplex& x, std::ostream& out);

// Facet format: one facet per line, vertex ids separated by whitespace.
CWComplex read_facets(std::istream& in);

// Sniffs by the `cwx 1` header line; anything else is parsed as facets.
CWComplex read_complex_file(const std::string& path);
CWComplex read_complex_stream(std::istream& in);

std::string to_cwx(const CWComplex& x);

}  // namespace cwc
