#include "cwc/expansion.hpp"

#include "cwc/boundary.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace cwc {

namespace {

// Exact minimum of weight(op . alpha) / dist(alpha, span(B)) over the
// nonzero cosets of span(B). Both quantities are constant on cosets, so the
// search walks canonical representatives supported on the free columns.
ExpansionCertificate expansion_search(int n, bool coboundary, const F2Matrix& op,
                                      const std::vector<F2Vec>& b_basis, int len,
                                      const ExpansionBudget& budget) {
    if (len <= 0) throw InapplicableError("expansion: empty dimension");

    F2Matrix b_mat(static_cast<int>(b_basis.size()), len);
    b_mat.row = b_basis;
    auto rn = f2_rank_nullspace(b_mat);
    const int k = rn.rank;
    const int q = len - k;
    if (q == 0)
        throw InapplicableError("expansion: trivial subspace is the whole cochain space");
    if (q > budget.max_quotient_exponent) throw BudgetExceeded{};

    // Free columns of the RREF of B give canonical coset representatives.
    std::vector<int> free_cols;
    {
        std::vector<bool> is_pivot(len, false);
        std::vector<F2Vec> rows;
        std::vector<int> pivots;
        for (F2Vec v : b_basis) {
            for (size_t i = 0; i < rows.size(); ++i)
                if (v.get(pivots[i])) v.xor_with(rows[i]);
            int p = -1;
            for (int c = 0; c < len && p < 0; ++c)
                if (v.get(c)) p = c;
            if (p < 0) continue;
            rows.push_back(v);
            pivots.push_back(p);
            is_pivot[p] = true;
        }
        for (int c = 0; c < len; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
    }

    CosetMinimizer cm(len, b_basis, budget.coset);

    // Columns of the operator, for incremental boundary updates.
    std::vector<F2Vec> op_col(len, F2Vec(op.rows));
    for (int r = 0; r < op.rows; ++r)
        for (int c : op.row[r].support()) op_col[c].set(r, true);

    F2Vec alpha(len);
    F2Vec image(op.rows);
    bool have_best = false;
    long long best_num = 0, best_den = 1;
    F2Vec best_witness;

    const uint64_t total = uint64_t(1) << q;
    for (uint64_t g = 1; g < total; ++g) {
        int j = free_cols[std::countr_zero(g)];
        alpha.flip(j);
        image.xor_with(op_col[j]);

        long long num = image.weight();
        CosetMinResult dist = cm.min_weight(alpha);
        long long den = dist.weight;

        bool better;
        if (!have_best) better = true;
        else {
            long long lhs = num * best_den, rhs = best_num * den;
            if (lhs != rhs) better = lhs < rhs;
            else if (den != best_den) better = den < best_den;
            else better = support_lex_less(dist.minimizer, best_witness);
        }
        if (better) {
            have_best = true;
            best_num = num;
            best_den = den;
            best_witness = dist.minimizer;
        }
    }

    ExpansionCertificate cert;
    cert.n = n;
    cert.coboundary = coboundary;
    cert.numerator = best_num;
    cert.denominator = best_den;
    cert.h = Rat(best_num, best_den);
    cert.witness = best_witness;
    return cert;
}

std::vector<F2Vec> matrix_columns(const F2Matrix& m) {
    std::vector<F2Vec> cols(m.cols, F2Vec(m.rows));
    for (int r = 0; r < m.rows; ++r)
        for (int c : m.row[r].support()) cols[c].set(r, true);
    return cols;
}

}  // namespace

ExpansionCertificate boundary_expansion(const CWComplex& x, int n, bool reduced,
                                        ExpansionBudget budget) {
    if (n < 0 || n > x.dim) throw std::out_of_range("boundary_expansion: dimension out of range");
    if (n == 0 && !reduced)
        throw InapplicableError("boundary_expansion at n = 0 requires reduced");
    const int len = x.cells(n);

    F2Matrix op = boundary_matrix_f2(x, n, reduced);
    std::vector<F2Vec> b_basis;
    if (n < x.dim) b_basis = matrix_columns(boundary_matrix_f2(x, n + 1, false));
    return expansion_search(n, false, op, b_basis, len, budget);
}

ExpansionCertificate coboundary_expansion(const CWComplex& x, int n, bool reduced,
                                          ExpansionBudget budget) {
    if (n < 0 || n > x.dim)
        throw std::out_of_range("coboundary_expansion: dimension out of range");
    const int len = x.cells(n);

    F2Matrix op(0, len);
    if (n < x.dim) op = boundary_matrix_f2(x, n + 1, false).transposed();
    std::vector<F2Vec> b_basis;
    if (n >= 1) {
        const F2Matrix rows = boundary_matrix_f2(x, n, false);
        b_basis = rows.row;  // rows of I_n span B^n
    }
    if (n == 0 && reduced) {
        F2Vec ones(len);
        for (int i = 0; i < len; ++i) ones.set(i, true);
        b_basis.push_back(ones);
    }
    return expansion_search(n, true, op, b_basis, len, budget);
}

SweepProfile sweep(const CWComplex& x, const std::vector<double>& f) {
    if (x.dim < 1) throw std::invalid_argument("sweep requires dim >= 1");
    if (!incidence_entries_pm1(x, x.dim))
        throw std::invalid_argument("sweep requires top incidence in {-1,0,+1}");
    const int d = x.dim;
    const int nt = x.cells(d);
    if (static_cast<int>(f.size()) != nt)
        throw std::invalid_argument("sweep: cochain length mismatch");

    SweepProfile prof;
    prof.aug = augment_boundary(x);
    const CWComplex& aug = prof.aug.augmented;
    const int big_m = static_cast<int>(prof.aug.virtual_top.size());
    prof.num_virtual = big_m;

    // Only |f| matters: flipping a cell's orientation makes its value
    // positive without touching adjacency counts.
    std::vector<double> value(nt);
    for (int i = 0; i < nt; ++i) value[i] = std::abs(f[i]);

    prof.order_real.resize(nt);
    for (int i = 0; i < nt; ++i) prof.order_real[i] = i;
    std::stable_sort(prof.order_real.begin(), prof.order_real.end(),
                     [&](int a, int b) { return value[a] < value[b]; });

    // Signed sweep position of each augmented top cell: virtual cells 1-M..0, real
    // cells 1..N in sweep order.
    const int n_real = nt;
    std::vector<int> sweep_index(aug.cells(d), 0);
    for (int j = 0; j < big_m; ++j) sweep_index[prof.aug.virtual_top[j]] = j - big_m + 1;
    for (int p = 0; p < n_real; ++p) sweep_index[prof.order_real[p]] = p + 1;

    // Low-adjacent pairs with multiplicity: one pair per shared (d-1)-cell.
    const IntMatrix& top = aug.incidence(d);
    std::vector<std::pair<int, int>> pairs;  // (sweep idx low, sweep idx high)
    for (int r = 0; r < top.rows; ++r) {
        std::vector<int> cof;
        for (int c = 0; c < top.cols; ++c)
            if (top.at(r, c) != 0) cof.push_back(c);
        for (size_t a = 0; a < cof.size(); ++a)
            for (size_t b = a + 1; b < cof.size(); ++b) {
                int ia = sweep_index[cof[a]], ib = sweep_index[cof[b]];
                pairs.push_back({std::min(ia, ib), std::max(ia, ib)});
            }
    }

    // |C_i| via a difference array: pair (a, b) crosses cuts a <= i < b.
    std::vector<long long> diff(n_real + 1, 0);
    for (auto [a, b] : pairs) {
        int lo = std::max(a, 0), hi = std::min(b - 1, n_real - 1);
        if (lo <= hi) {
            diff[lo] += 1;
            diff[hi + 1] -= 1;
        }
    }
    prof.crossings.resize(n_real);
    long long run = 0;
    for (int i = 0; i < n_real; ++i) {
        run += diff[i];
        prof.crossings[i] = run;
    }

    prof.sigma.assign(n_real + 1, 0);
    for (auto [a, b] : pairs) {
        if (b >= 1 && b <= n_real) prof.sigma[b] += 1;  // b sees a below it
        if (a >= 1) prof.sigma[a] -= 1;                 // a sees b above it
    }

    if (n_real == 0) throw InapplicableError("sweep: no top cells");
    prof.argmin = 0;
    prof.H = Rat(prof.crossings[0], n_real);
    for (int i = 1; i < n_real; ++i) {
        Rat cand(prof.crossings[i], n_real - i);
        if (cand < prof.H) {
            prof.H = cand;
            prof.argmin = i;
        }
    }

    prof.witness = F2Vec(aug.cells(d));
    for (int p = prof.argmin; p < n_real; ++p) prof.witness.set(prof.order_real[p], true);

    prof.m = 0;
    const IntMatrix& orig_top = x.incidence(d);
    for (int c = 0; c < orig_top.cols; ++c) {
        long long s = 0;
        for (int r = 0; r < orig_top.rows; ++r) s += std::llabs(orig_top.at(r, c));
        prof.m = std::max(prof.m, s);
    }
    return prof;
}

CheegerReport cheeger_check(const CWComplex& x, bool reduced, ExpansionBudget budget) {
    if (x.dim < 1) throw std::invalid_argument("cheeger_check requires dim >= 1");
    const int d = x.dim;

    CheegerReport rep;
    rep.d = d;
    rep.regular_asserted = x.regular_asserted;
    rep.incidence_pm1 = incidence_entries_pm1(x);
    rep.orientable = rep.incidence_pm1 ? check_orientability(x).orientable : false;
    rep.max_lower_degree_le2 = true;
    for (int mu = 0; mu < x.cells(d - 1); ++mu)
        if (degree(x, d - 1, mu) > 2) rep.max_lower_degree_le2 = false;

    SpectralReport spec = smallest_nontrivial_eigenvalue(x, d, LapKind::lower, reduced);
    rep.lambda_d = spec.lambda;
    rep.zero_threshold = spec.zero_threshold;
    rep.h_d = boundary_expansion(x, d, false, budget);

    rep.m = 0;
    const IntMatrix& top = x.incidence(d);
    for (int c = 0; c < top.cols; ++c) {
        long long s = 0;
        for (int r = 0; r < top.rows; ++r) s += std::llabs(top.at(r, c));
        rep.m = std::max(rep.m, s);
    }

    const double h_val = static_cast<double>(rep.h_d.h);
    rep.lower_applicable = rep.regular_asserted && rep.incidence_pm1 && rep.orientable;
    rep.lower_holds = rep.lambda_d <= h_val + 1e-8;
    rep.lower_slack = h_val - rep.lambda_d;

    rep.upper_applicable = rep.regular_asserted && rep.incidence_pm1 && rep.max_lower_degree_le2;
    rep.upper_bound_value = std::sqrt(2.0 * static_cast<double>(rep.m) *
                                      std::max(rep.lambda_d, 0.0));
    rep.upper_holds = h_val <= rep.upper_bound_value + 1e-8;
    rep.upper_slack = rep.upper_bound_value - h_val;
    return rep;
}

Rat tree_expansion_oracle(const CWComplex& x) {
    if (x.dim != 1) throw std::invalid_argument("tree_expansion_oracle requires a 1-complex");
    const int nv = x.cells(0);
    const int ne = x.cells(1);
    if (nv == 0) throw InapplicableError("tree_expansion_oracle: empty graph");

    std::vector<std::vector<int>> adj(nv);
    const IntMatrix& inc = x.incidence(1);
    for (int e = 0; e < ne; ++e) {
        std::vector<int> ends;
        for (int v = 0; v < nv; ++v)
            if (inc.at(v, e) != 0) ends.push_back(v);
        if (ends.size() == 2) {
            adj[ends[0]].push_back(ends[1]);
            adj[ends[1]].push_back(ends[0]);
        }
    }

    auto bfs = [&](int src, std::vector<int>& dist) {
        dist.assign(nv, -1);
        dist[src] = 0;
        std::deque<int> queue{src};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
    };

    std::vector<int> dist;
    bfs(0, dist);
    for (int v = 0; v < nv; ++v)
        if (dist[v] < 0) throw InapplicableError("tree_expansion_oracle: graph disconnected");

    int b1 = betti(x, 1, Field::f2, false);
    if (b1 > 0) return Rat(0);

    int diam = 0;
    for (int s = 0; s < nv; ++s) {
        bfs(s, dist);
        diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
    }
    if (diam == 0) throw InapplicableError("tree_expansion_oracle: diameter undefined");
    return Rat(2, diam);
}

}  // namespace cwc
