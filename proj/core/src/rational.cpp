#include "cwc/rational.hpp"

#include <algorithm>

namespace cwc {

namespace {

// Clear denominators row by row; rank is unchanged.
std::vector<std::vector<Int>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<Int>> rows(m.rows, std::vector<Int>(m.cols));
    for (int r = 0; r < m.rows; ++r) {
        Int l = 1;
        for (int c = 0; c < m.cols; ++c) {
            Int den = denominator(m.at(r, c));
            l = lcm(l, den);
        }
        for (int c = 0; c < m.cols; ++c)
            rows[r][c] = numerator(m.at(r, c)) * (l / denominator(m.at(r, c)));
    }
    return rows;
}

}  // namespace

int rational_rank(const RationalMatrix& m) {
    auto a = integer_rows(m);
    const int rows = m.rows, cols = m.cols;
    Int prev = 1;
    int rank = 0;
    int pr = 0;
    for (int pc = 0; pc < cols && pr < rows; ++pc) {
        int piv = -1;
        for (int r = pr; r < rows; ++r)
            if (a[r][pc] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[pr], a[piv]);
        for (int r = pr + 1; r < rows; ++r) {
            for (int c = pc + 1; c < cols; ++c)
                a[r][c] = (a[pr][pc] * a[r][c] - a[r][pc] * a[pr][c]) / prev;
            a[r][pc] = 0;
        }
        prev = a[pr][pc];
        ++pr;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rat>> rational_nullspace(const RationalMatrix& m) {
    // Exact Gauss-Jordan into RREF.
    std::vector<std::vector<Rat>> a(m.rows, std::vector<Rat>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) a[r][c] = m.at(r, c);

    std::vector<int> pivots;
    int pr = 0;
    for (int pc = 0; pc < m.cols && pr < m.rows; ++pc) {
        int piv = -1;
        for (int r = pr; r < m.rows; ++r)
            if (a[r][pc] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[pr], a[piv]);
        Rat inv = a[pr][pc];
        for (int c = pc; c < m.cols; ++c) a[pr][c] /= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == pr || a[r][pc] == 0) continue;
            Rat f = a[r][pc];
            for (int c = pc; c < m.cols; ++c) a[r][c] -= f * a[pr][c];
        }
        pivots.push_back(pc);
        ++pr;
    }

    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rat>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace cwc
