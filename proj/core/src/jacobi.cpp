#include "cwc/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cwc {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Mat Mat::transposed() const {
    Mat t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

double Mat::frobenius() const {
    double s = 0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

Mat matmul(const Mat& a, const Mat& b) {
    Mat out(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int k = 0; k < a.cols; ++k) {
            double v = a.at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < b.cols; ++c) out.at(r, c) += v * b.at(k, c);
        }
    return out;
}

std::vector<double> matvec(const Mat& a, const std::vector<double>& v) {
    std::vector<double> out(a.rows, 0.0);
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c) out[r] += a.at(r, c) * v[c];
    return out;
}

EigenResult sym_eigen(const Mat& input, double tol) {
    const int n = input.rows;
    if (input.cols != n) throw std::invalid_argument("sym_eigen: matrix not square");
    double fro = input.frobenius();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (!std::isfinite(input.at(r, c)))
                throw std::invalid_argument("sym_eigen: non-finite entry");
            if (std::abs(input.at(r, c) - input.at(c, r)) > 1e-12 * std::max(1.0, fro))
                throw std::invalid_argument("sym_eigen: matrix not symmetric");
        }

    Mat a = input;
    Mat v = Mat::identity(n);
    int rotations = 0;
    const double threshold = tol * std::max(fro, 1e-300);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double max_off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) max_off = std::max(max_off, std::abs(a.at(p, q)));
        if (max_off <= threshold) break;

        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = a.at(p, q);
                if (std::abs(apq) <= threshold * 1e-2) continue;
                double theta = (a.at(q, q) - a.at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1.0 / std::sqrt(t * t + 1);
                double s = t * c;

                for (int k = 0; k < n; ++k) {
                    double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v.at(k, p), vkq = v.at(k, q);
                    v.at(k, p) = c * vkp - s * vkq;
                    v.at(k, q) = s * vkp + c * vkq;
                }
                ++rotations;
            }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a.at(i, i) < a.at(j, j); });

    EigenResult res;
    res.values.resize(n);
    res.vectors = Mat(n, n);
    for (int i = 0; i < n; ++i) {
        res.values[i] = a.at(order[i], order[i]);
        for (int k = 0; k < n; ++k) res.vectors.at(k, i) = v.at(k, order[i]);
    }
    res.iterations = rotations;

    for (int i = 0; i < n; ++i) {
        std::vector<double> col(n);
        for (int k = 0; k < n; ++k) col[k] = res.vectors.at(k, i);
        std::vector<double> av = matvec(input, col);
        double err = 0;
        for (int k = 0; k < n; ++k) {
            double e = av[k] - res.values[i] * col[k];
            err += e * e;
        }
        res.residual = std::max(res.residual, std::sqrt(err));
    }
    return res;
}

}  // namespace cwc
