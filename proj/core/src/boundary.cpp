#include "cwc/boundary.hpp"

#include <stdexcept>

namespace cwc {

namespace {

void check_range(const CWComplex& x, int n, bool reduced) {
    if (n == 0) {
        if (!reduced) throw std::out_of_range("boundary_matrix: n = 0 requires reduced");
        return;
    }
    if (n < 1 || n > x.dim) throw std::out_of_range("boundary_matrix: dimension out of range");
}

}  // namespace

F2Matrix boundary_matrix_f2(const CWComplex& x, int n, bool reduced) {
    check_range(x, n, reduced);
    if (n == 0) {
        F2Matrix m(1, x.cells(0));
        for (int c = 0; c < m.cols; ++c) m.set(0, c, true);
        return m;
    }
    const IntMatrix& src = x.incidence(n);
    F2Matrix m(src.rows, src.cols);
    for (int r = 0; r < src.rows; ++r)
        for (int c = 0; c < src.cols; ++c)
            if (src.at(r, c) % 2 != 0) m.set(r, c, true);
    return m;
}

RationalMatrix boundary_matrix_q(const CWComplex& x, int n, bool reduced) {
    check_range(x, n, reduced);
    if (n == 0) {
        RationalMatrix m(1, x.cells(0));
        for (int c = 0; c < m.cols; ++c) m.at(0, c) = 1;
        return m;
    }
    const IntMatrix& src = x.incidence(n);
    RationalMatrix m(src.rows, src.cols);
    for (int r = 0; r < src.rows; ++r)
        for (int c = 0; c < src.cols; ++c) m.at(r, c) = src.at(r, c);
    return m;
}

Mat boundary_matrix_r(const CWComplex& x, int n, bool reduced) {
    check_range(x, n, reduced);
    if (n == 0) {
        Mat m(1, x.cells(0));
        for (int c = 0; c < m.cols; ++c) m.at(0, c) = 1.0;
        return m;
    }
    const IntMatrix& src = x.incidence(n);
    Mat m(src.rows, src.cols);
    for (int r = 0; r < src.rows; ++r)
        for (int c = 0; c < src.cols; ++c) m.at(r, c) = static_cast<double>(src.at(r, c));
    return m;
}

}  // namespace cwc
