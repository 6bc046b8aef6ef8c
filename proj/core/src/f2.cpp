#include "cwc/f2.hpp"

#include <bit>
#include <deque>
#include <stdexcept>

namespace cwc {

int F2Vec::weight() const {
    int s = 0;
    for (uint64_t x : w) s += std::popcount(x);
    return s;
}

bool F2Vec::zero() const {
    for (uint64_t x : w)
        if (x) return false;
    return true;
}

std::vector<int> F2Vec::support() const {
    std::vector<int> out;
    for (int i = 0; i < len; ++i)
        if (get(i)) out.push_back(i);
    return out;
}

bool support_lex_less(const F2Vec& a, const F2Vec& b) {
    for (size_t i = 0; i < a.w.size(); ++i) {
        uint64_t diff = a.w[i] ^ b.w[i];
        if (diff) {
            uint64_t low = diff & -diff;
            return a.w[i] & low;  // the one owning the lowest differing index is smaller
        }
    }
    return false;
}

F2Vec F2Matrix::mul(const F2Vec& v) const {
    F2Vec out(rows);
    for (int r = 0; r < rows; ++r) {
        uint64_t acc = 0;
        for (size_t i = 0; i < row[r].w.size(); ++i) acc ^= row[r].w[i] & v.w[i];
        out.set(r, std::popcount(acc) & 1);
    }
    return out;
}

F2Vec F2Matrix::mul_transpose(const F2Vec& v) const {
    F2Vec out(cols);
    for (int r = 0; r < rows; ++r)
        if (v.get(r)) out.xor_with(row[r]);
    return out;
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

namespace {

int lowest_set(const F2Vec& v) {
    for (size_t i = 0; i < v.w.size(); ++i)
        if (v.w[i]) return static_cast<int>(i * 64) + std::countr_zero(v.w[i]);
    return -1;
}

// Reduced row echelon form of a list of vectors; returns independent rows
// with their pivot columns, pivots strictly increasing.
void rref(std::vector<F2Vec> rows, std::vector<F2Vec>& out, std::vector<int>& pivots) {
    out.clear();
    pivots.clear();
    for (F2Vec v : rows) {
        for (size_t i = 0; i < out.size(); ++i)
            if (v.get(pivots[i])) v.xor_with(out[i]);
        int p = lowest_set(v);
        if (p < 0) continue;
        for (size_t i = 0; i < out.size(); ++i)
            if (out[i].get(p)) out[i].xor_with(v);
        // insert keeping pivots sorted
        size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < p) ++pos;
        out.insert(out.begin() + pos, v);
        pivots.insert(pivots.begin() + pos, p);
    }
}

}  // namespace

F2RankNullspace f2_rank_nullspace(const F2Matrix& m) {
    std::vector<F2Vec> rows_out;
    std::vector<int> pivots;
    rref(m.row, rows_out, pivots);

    F2RankNullspace res;
    res.rank = static_cast<int>(rows_out.size());

    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        F2Vec v(m.cols);
        v.set(c, true);
        for (size_t i = 0; i < rows_out.size(); ++i)
            if (rows_out[i].get(c)) v.set(pivots[i], true);
        res.nullspace.push_back(std::move(v));
    }
    return res;
}

CosetMinimizer::CosetMinimizer(int len, const std::vector<F2Vec>& basis, CosetBudget budget)
    : len_(len) {
    rref(basis, reduced_basis_, pivots_);
    k_ = static_cast<int>(reduced_basis_.size());

    if (k_ <= budget.max_span_exponent) return;  // enumeration path

    const int r = len_ - k_;
    if (r > budget.max_syndrome_exponent) throw BudgetExceeded{};
    use_table_ = true;

    // Syndrome of e_j: for a free column, the corresponding unit bit; for a
    // pivot column p_i, the free-coordinate pattern of RREF row i.
    std::vector<int> free_index(len_, -1);
    std::vector<bool> is_pivot(len_, false);
    for (int p : pivots_) is_pivot[p] = true;
    int t = 0;
    for (int c = 0; c < len_; ++c)
        if (!is_pivot[c]) free_index[c] = t++;

    column_syndrome_.assign(len_, 0);
    for (int c = 0; c < len_; ++c)
        if (!is_pivot[c]) column_syndrome_[c] = uint32_t(1) << free_index[c];
    for (int i = 0; i < k_; ++i) {
        uint32_t s = 0;
        for (int c : reduced_basis_[i].support())
            if (!is_pivot[c]) s |= uint32_t(1) << free_index[c];
        column_syndrome_[pivots_[i]] = s;
    }

    // BFS over the syndrome Cayley graph gives coset leader weights.
    dist_.assign(size_t(1) << r, 0xFFFF);
    dist_[0] = 0;
    std::deque<uint32_t> queue{0};
    while (!queue.empty()) {
        uint32_t s = queue.front();
        queue.pop_front();
        for (int c = 0; c < len_; ++c) {
            uint32_t nxt = s ^ column_syndrome_[c];
            if (dist_[nxt] == 0xFFFF) {
                dist_[nxt] = dist_[s] + 1;
                queue.push_back(nxt);
            }
        }
    }
}

uint32_t CosetMinimizer::syndrome_of(const F2Vec& v) const {
    uint32_t s = 0;
    for (int c : v.support()) s ^= column_syndrome_[c];
    return s;
}

CosetMinResult CosetMinimizer::min_weight(const F2Vec& v) const {
    if (!use_table_) {
        F2Vec cur = v;
        F2Vec best = cur;
        int best_w = cur.weight();
        const uint64_t total = uint64_t(1) << k_;
        for (uint64_t i = 1; i < total; ++i) {
            cur.xor_with(reduced_basis_[std::countr_zero(i)]);
            int w = cur.weight();
            if (w < best_w || (w == best_w && support_lex_less(cur, best))) {
                best_w = w;
                best = cur;
            }
        }
        return {best_w, best};
    }

    uint32_t s = syndrome_of(v);
    int w = dist_[s];
    F2Vec leader(len_);
    uint32_t cur = s;
    int last = -1;
    for (int step = w; step > 0; --step) {
        for (int c = last + 1; c < len_; ++c) {
            if (dist_[cur ^ column_syndrome_[c]] == dist_[cur] - 1) {
                leader.set(c, true);
                cur ^= column_syndrome_[c];
                last = c;
                break;
            }
        }
    }
    return {w, leader};
}

CosetMinResult f2_coset_min_weight(const std::vector<F2Vec>& basis, const F2Vec& v,
                                   CosetBudget budget) {
    return CosetMinimizer(v.len, basis, budget).min_weight(v);
}

}  // namespace cwc
