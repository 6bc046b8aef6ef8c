#pragma once

#include <cstdint>
#include <exception>
#include <vector>

namespace cwc {

// Bit-packed F2 vector of fixed length.
struct F2Vec {
    int len = 0;
    std::vector<uint64_t> w;

    F2Vec() = default;
    explicit F2Vec(int n) : len(n), w((n + 63) / 64, 0) {}

    bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        if (v) w[i >> 6] |= uint64_t(1) << (i & 63);
        else w[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    void flip(int i) { w[i >> 6] ^= uint64_t(1) << (i & 63); }
    void xor_with(const F2Vec& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
    }
    int weight() const;
    bool zero() const;
    std::vector<int> support() const;

    bool operator==(const F2Vec&) const = default;
};

// True if a's sorted support list is lexicographically smaller than b's.
// For equal-weight vectors this is the tie-break order used throughout.
bool support_lex_less(const F2Vec& a, const F2Vec& b);

// Bit-packed row-major F2 matrix.
struct F2Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<F2Vec> row;

    F2Matrix() = default;
    F2Matrix(int r, int c) : rows(r), cols(c), row(r, F2Vec(c)) {}

    bool get(int r, int c) const { return row[r].get(c); }
    void set(int r, int c, bool v) { row[r].set(c, v); }

    F2Vec mul(const F2Vec& v) const;       // length rows result
    F2Vec mul_transpose(const F2Vec& v) const;  // length cols result
    F2Matrix transposed() const;
};

struct F2RankNullspace {
    int rank = 0;
    std::vector<F2Vec> nullspace;  // basis vectors of length cols
};

// Gauss-Jordan with lowest-index pivoting; deterministic.
F2RankNullspace f2_rank_nullspace(const F2Matrix& m);

struct CosetBudget {
    int max_span_exponent = 20;      // enumerate 2^k coset when k <= this
    int max_syndrome_exponent = 24;  // else build table when L-k <= this
};

struct CosetMinResult {
    long long weight = 0;
    F2Vec minimizer;  // the coset leader of v + span(B)
};

// Minimum Hamming weight over a coset of a linear span, with repeated-query
// support. Small span dimension: Gray-code enumeration of the 2^k coset.
// Otherwise a syndrome -> coset-leader-distance table built by BFS over the
// syndrome Cayley graph. Ties resolved to the lexicographically smallest
// support.
class CosetMinimizer {
public:
    CosetMinimizer(int len, const std::vector<F2Vec>& basis, CosetBudget budget = {});

    CosetMinResult min_weight(const F2Vec& v) const;
    int span_dim() const { return k_; }

private:
    int len_ = 0;
    int k_ = 0;
    bool use_table_ = false;
    std::vector<F2Vec> reduced_basis_;   // RREF rows
    std::vector<int> pivots_;            // pivot column per reduced row
    // syndrome path
    std::vector<uint32_t> column_syndrome_;  // per column of the ambient space
    std::vector<uint16_t> dist_;             // coset leader weight per syndrome
    uint32_t syndrome_of(const F2Vec& v) const;
};

CosetMinResult f2_coset_min_weight(const std::vector<F2Vec>& basis, const F2Vec& v,
                                   CosetBudget budget = {});

struct BudgetExceeded : std::exception {
    const char* what() const noexcept override {
        return "exact search budget exceeded: instance too large";
    }
};

}  // namespace cwc
