#pragma once

#include "cwc/complex.hpp"

#include <string>
#include <vector>

namespace cwc {

// Named test complexes:
//   path k, cycle k, star k        — 1-complexes with k edges
//   simplex_boundary n             — boundary of the n-simplex
//   filled_simplex n               — the full n-simplex
//   tetra_minus_face               — tetrahedron boundary minus one triangle
//   torus_7                        — 7-vertex torus triangulation
//   rp2_6                          — 6-vertex projective plane
//   klein_8                        — Klein bottle (connected sum of two rp2_6)
//   book k                         — k triangles sharing one common edge
CWComplex zoo(const std::string& name, const std::vector<int>& params = {});

std::vector<std::string> zoo_names();

std::vector<std::vector<int>> torus_7_facets();
std::vector<std::vector<int>> rp2_6_facets();
std::vector<std::vector<int>> klein_facets();

}  // namespace cwc
