#include "cwc/spectral.hpp"

#include "cwc/f2.hpp"
#include "cwc/rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cwc {

namespace {

void check_dim(const CWComplex& x, int n) {
    if (n < 0 || n > x.dim) throw std::out_of_range("laplacian: dimension out of range");
}

Mat gram_lower(const Mat& b) {  // B^T B
    Mat out(b.cols, b.cols);
    for (int i = 0; i < b.cols; ++i)
        for (int j = 0; j < b.cols; ++j) {
            double s = 0;
            for (int k = 0; k < b.rows; ++k) s += b.at(k, i) * b.at(k, j);
            out.at(i, j) = s;
        }
    return out;
}

Mat gram_upper(const Mat& b) {  // B B^T
    Mat out(b.rows, b.rows);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.rows; ++j) {
            double s = 0;
            for (int k = 0; k < b.cols; ++k) s += b.at(i, k) * b.at(j, k);
            out.at(i, j) = s;
        }
    return out;
}

// Orthonormalize a list of column vectors (modified Gram-Schmidt), dropping
// near-dependent ones.
std::vector<std::vector<double>> orthonormalize(std::vector<std::vector<double>> vecs) {
    std::vector<std::vector<double>> q;
    for (auto& v : vecs) {
        for (const auto& u : q) {
            double dot = 0;
            for (size_t i = 0; i < v.size(); ++i) dot += u[i] * v[i];
            for (size_t i = 0; i < v.size(); ++i) v[i] -= dot * u[i];
        }
        double norm = 0;
        for (double t : v) norm += t * t;
        norm = std::sqrt(norm);
        if (norm < 1e-10) continue;
        for (double& t : v) t /= norm;
        q.push_back(std::move(v));
    }
    return q;
}

std::vector<std::vector<double>> rational_kernel_as_double(const RationalMatrix& m) {
    std::vector<std::vector<double>> out;
    for (const auto& v : rational_nullspace(m)) {
        std::vector<double> d(v.size());
        for (size_t i = 0; i < v.size(); ++i) d[i] = static_cast<double>(v[i]);
        out.push_back(std::move(d));
    }
    return out;
}

RationalMatrix transpose_q(const RationalMatrix& m) {
    RationalMatrix t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

}  // namespace

double zero_threshold_for(const Mat& a) {
    return 1e-9 * std::max(1.0, a.frobenius());
}

Mat laplacian(const CWComplex& x, int n, LapKind kind, bool reduced) {
    check_dim(x, n);
    const int cn = x.cells(n);
    switch (kind) {
        case LapKind::lower: {
            if (n == 0 && !reduced)
                throw InapplicableError("lower Laplacian at n = 0 requires reduced");
            return gram_lower(boundary_matrix_r(x, n, reduced));
        }
        case LapKind::upper: {
            if (n == x.dim) return Mat(cn, cn);
            return gram_upper(boundary_matrix_r(x, n + 1, false));
        }
        case LapKind::full: {
            Mat up = laplacian(x, n, LapKind::upper, reduced);
            if (n == 0 && !reduced) return up;  // boundary of 0-cochains vanishes unreduced
            Mat low = laplacian(x, n, LapKind::lower, reduced);
            for (size_t i = 0; i < up.a.size(); ++i) up.a[i] += low.a[i];
            return up;
        }
    }
    throw std::logic_error("unreachable");
}

SpectralReport smallest_nontrivial_eigenvalue(const CWComplex& x, int n, LapKind direction,
                                              bool reduced, double tol) {
    if (direction == LapKind::full)
        throw std::invalid_argument("smallest_nontrivial_eigenvalue: direction must be lower or upper");
    check_dim(x, n);
    const int cn = x.cells(n);
    if (cn == 0) throw InapplicableError("no cells in the requested dimension");

    Mat delta = laplacian(x, n, direction, reduced);

    // Orthocomplement of the trivial subspace, as an exact rational kernel.
    std::vector<std::vector<double>> basis;
    bool full_space = false;
    if (direction == LapKind::lower) {
        // B_n^perp = ker I_{n+1}^T; empty I_{n+1} means B_n = 0.
        if (n == x.dim) full_space = true;
        else basis = rational_kernel_as_double(transpose_q(boundary_matrix_q(x, n + 1, false)));
    } else {
        // B^n perp = ker I_n (plus augmentation when reduced at n = 0).
        if (n == 0 && !reduced) full_space = true;
        else basis = rational_kernel_as_double(boundary_matrix_q(x, n, reduced));
    }

    SpectralReport rep;
    rep.n = n;
    rep.kind = direction;
    rep.zero_threshold = zero_threshold_for(delta);

    if (full_space) {
        EigenResult eig = sym_eigen(delta, tol);
        rep.lambda = eig.values[0];
        rep.restricted_spectrum = eig.values;
        rep.eigenvector.resize(cn);
        for (int k = 0; k < cn; ++k) rep.eigenvector[k] = eig.vectors.at(k, 0);
        rep.trivial_dim = 0;
        return rep;
    }

    auto q = orthonormalize(std::move(basis));
    const int dim_q = static_cast<int>(q.size());
    rep.trivial_dim = cn - dim_q;
    if (dim_q == 0)
        throw InapplicableError("trivial subspace is the whole space; restriction is empty");

    Mat m(dim_q, dim_q);
    for (int i = 0; i < dim_q; ++i) {
        std::vector<double> dq = matvec(delta, q[i]);
        for (int j = 0; j < dim_q; ++j) {
            double s = 0;
            for (int k = 0; k < cn; ++k) s += q[j][k] * dq[k];
            m.at(j, i) = s;
        }
    }
    for (int i = 0; i < dim_q; ++i)  // symmetrize roundoff
        for (int j = i + 1; j < dim_q; ++j) {
            double v = 0.5 * (m.at(i, j) + m.at(j, i));
            m.at(i, j) = m.at(j, i) = v;
        }

    EigenResult eig = sym_eigen(m, tol);
    rep.lambda = eig.values[0];
    rep.restricted_spectrum = eig.values;
    rep.eigenvector.assign(cn, 0.0);
    for (int j = 0; j < dim_q; ++j)
        for (int k = 0; k < cn; ++k) rep.eigenvector[k] += q[j][k] * eig.vectors.at(j, 0);
    double norm = 0;
    for (double v : rep.eigenvector) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : rep.eigenvector) v /= norm;
    return rep;
}

HodgeSplit hodge_decompose(const CWComplex& x, int n, const std::vector<double>& f,
                           bool reduced) {
    check_dim(x, n);
    const int cn = x.cells(n);
    if (static_cast<int>(f.size()) != cn)
        throw std::invalid_argument("hodge_decompose: cochain length mismatch");

    // B^n: rows of I_n (plus the all-ones augmentation image when reduced, n=0).
    std::vector<std::vector<double>> exact_gens;
    if (n >= 1) {
        Mat b = boundary_matrix_r(x, n, false);
        for (int r = 0; r < b.rows; ++r) {
            std::vector<double> v(cn);
            for (int c = 0; c < cn; ++c) v[c] = b.at(r, c);
            exact_gens.push_back(std::move(v));
        }
    }
    if (n == 0 && reduced) exact_gens.push_back(std::vector<double>(cn, 1.0));

    // B_n: columns of I_{n+1}.
    std::vector<std::vector<double>> coexact_gens;
    if (n < x.dim) {
        Mat b = boundary_matrix_r(x, n + 1, false);
        for (int c = 0; c < b.cols; ++c) {
            std::vector<double> v(cn);
            for (int r = 0; r < cn; ++r) v[r] = b.at(r, c);
            coexact_gens.push_back(std::move(v));
        }
    }

    auto project = [&](const std::vector<std::vector<double>>& q) {
        std::vector<double> p(cn, 0.0);
        for (const auto& u : q) {
            double dot = 0;
            for (int i = 0; i < cn; ++i) dot += u[i] * f[i];
            for (int i = 0; i < cn; ++i) p[i] += dot * u[i];
        }
        return p;
    };

    HodgeSplit split;
    split.exact = project(orthonormalize(std::move(exact_gens)));
    split.coexact = project(orthonormalize(std::move(coexact_gens)));
    split.harmonic.resize(cn);
    for (int i = 0; i < cn; ++i)
        split.harmonic[i] = f[i] - split.exact[i] - split.coexact[i];
    return split;
}

int betti(const CWComplex& x, int n, Field field, bool reduced) {
    check_dim(x, n);
    auto rank_of = [&](int m) -> int {
        if (m == 0 && !reduced) return 0;
        if (m == 0 && x.cells(0) == 0) return 0;
        if (field == Field::f2) return f2_rank_nullspace(boundary_matrix_f2(x, m, reduced)).rank;
        return rational_rank(boundary_matrix_q(x, m, reduced));
    };
    int rank_low = (n >= 1 || reduced) ? rank_of(n) : 0;
    int rank_high = (n < x.dim) ? rank_of(n + 1) : 0;
    return x.cells(n) - rank_low - rank_high;
}

}  // namespace cwc
