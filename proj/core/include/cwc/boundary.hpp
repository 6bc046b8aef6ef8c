#pragma once

#include "cwc/complex.hpp"
#include "cwc/f2.hpp"
#include "cwc/jacobi.hpp"
#include "cwc/rational.hpp"

namespace cwc {

// Boundary matrix of dimension n with entries mapped into the chosen field.
// n = 0 with reduced = true yields the 1 x c_0 augmentation row of ones.
// The coboundary matrix is the transpose and needs no separate operation.
F2Matrix boundary_matrix_f2(const CWComplex& x, int n, bool reduced = false);
RationalMatrix boundary_matrix_q(const CWComplex& x, int n, bool reduced = false);
Mat boundary_matrix_r(const CWComplex& x, int n, bool reduced = false);

}  // namespace cwc
