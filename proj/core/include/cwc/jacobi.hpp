#pragma once

#include <vector>

namespace cwc {

// Minimal dense row-major real matrix.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    double& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static Mat identity(int n);
    Mat transposed() const;
    double frobenius() const;
};

Mat matmul(const Mat& a, const Mat& b);
std::vector<double> matvec(const Mat& a, const std::vector<double>& v);

struct EigenResult {
    std::vector<double> values;  // ascending
    Mat vectors;                 // column i pairs with values[i]
    double residual = 0.0;       // max_i ||A v_i - lambda_i v_i||_2
    int iterations = 0;          // rotation count
};

// Cyclic Jacobi for dense symmetric matrices. Deterministic row-major sweep
// order; stops when the largest off-diagonal magnitude drops below
// tol * ||A||_F.
EigenResult sym_eigen(const Mat& a, double tol = 1e-10);

}  // namespace cwc
