#pragma once

#include "cwc/boundary.hpp"
#include "cwc/complex.hpp"
#include "cwc/jacobi.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cwc {

enum class LapKind { lower, upper, full };
enum class Field { f2, q };

struct InapplicableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Combinatorial Laplacian acting on n-cochains. With B the boundary matrix
// I_n (rows: (n-1)-cells, cols: n-cells): lower = B^T B, and the upper
// Laplacian in dimension n-1 is B B^T. Symmetric positive semidefinite.
Mat laplacian(const CWComplex& x, int n, LapKind kind, bool reduced = false);

struct SpectralReport {
    int n = 0;
    LapKind kind = LapKind::lower;
    double lambda = 0.0;
    std::vector<double> eigenvector;  // unit 2-norm, length c_n
    int trivial_dim = 0;              // dimension of the projected-out subspace
    double zero_threshold = 0.0;
    std::vector<double> restricted_spectrum;  // ascending
};

// Smallest eigenvalue of the lower (resp. upper) Laplacian restricted to the
// orthocomplement of B_n = im d_{n+1} (resp. B^n = im delta^{n-1}). The
// orthocomplement is realized as an exact rational kernel before
// orthonormalizing. Throws InapplicableError when the restriction is empty.
SpectralReport smallest_nontrivial_eigenvalue(const CWComplex& x, int n, LapKind direction,
                                              bool reduced = false, double tol = 1e-10);

struct HodgeSplit {
    std::vector<double> exact;     // component in B^n
    std::vector<double> harmonic;  // component in Ker Delta_n
    std::vector<double> coexact;   // component in B_n
};

HodgeSplit hodge_decompose(const CWComplex& x, int n, const std::vector<double>& f,
                           bool reduced = false);

int betti(const CWComplex& x, int n, Field field, bool reduced = false);

double zero_threshold_for(const Mat& a);

}  // namespace cwc
