#include "cwc/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cwc {

std::string CWComplex::label(int n, int idx) const {
    if (n < static_cast<int>(labels.size()) && idx < static_cast<int>(labels[n].size()))
        return labels[n][idx];
    return {};
}

void CWComplex::set_label(int n, int idx, const std::string& text) {
    if (static_cast<int>(labels.size()) <= dim) labels.resize(dim + 1);
    if (static_cast<int>(labels[n].size()) <= idx) labels[n].resize(cell_counts[n]);
    labels[n][idx] = text;
}

bool CWComplex::same_data(const CWComplex& other) const {
    return dim == other.dim && cell_counts == other.cell_counts && inc == other.inc;
}

ValidationReport validate(const CWComplex& x) {
    ValidationReport rep;
    auto fail = [&](int n, int r, int c, std::string msg) {
        rep.ok = false;
        rep.violations.push_back({n, r, c, std::move(msg)});
    };

    if (x.dim < 0 || static_cast<int>(x.cell_counts.size()) != x.dim + 1) {
        fail(-1, -1, -1, "cell_counts must have dim+1 entries");
        return rep;
    }
    for (int n = 0; n <= x.dim; ++n)
        if (x.cell_counts[n] < 0) fail(n, -1, -1, "negative cell count");
    if (static_cast<int>(x.inc.size()) != x.dim) {
        fail(-1, -1, -1, "expected one incidence matrix per dimension 1..dim");
        return rep;
    }
    for (int n = 1; n <= x.dim; ++n) {
        const IntMatrix& m = x.incidence(n);
        if (m.rows != x.cell_counts[n - 1] || m.cols != x.cell_counts[n])
            fail(n, m.rows, m.cols, "incidence matrix shape mismatch");
    }
    if (!rep.ok) return rep;

    // del o del = 0 over the integers
    for (int n = 1; n < x.dim; ++n) {
        const IntMatrix& a = x.incidence(n);
        const IntMatrix& b = x.incidence(n + 1);
        for (int r = 0; r < a.rows; ++r)
            for (int c = 0; c < b.cols; ++c) {
                long long s = 0;
                for (int k = 0; k < a.cols; ++k) s += a.at(r, k) * b.at(k, c);
                if (s != 0) {
                    std::ostringstream os;
                    os << "boundary composition nonzero at n=" << n << " row " << r
                       << " col " << c << " (value " << s << ")";
                    fail(n, r, c, os.str());
                }
            }
    }

    if (x.regular_asserted) {
        for (int n = 1; n <= x.dim; ++n) {
            const IntMatrix& m = x.incidence(n);
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < m.cols; ++c)
                    if (std::llabs(m.at(r, c)) > 1)
                        fail(n, r, c, "regular complex requires incidence in {-1,0,+1}");
        }
    }
    return rep;
}

long long degree(const CWComplex& x, int n, int cell) {
    if (n < 0 || n > x.dim || cell < 0 || cell >= x.cells(n))
        throw std::out_of_range("degree: cell index out of range");
    if (n == x.dim) return 0;
    const IntMatrix& m = x.incidence(n + 1);
    long long s = 0;
    for (int c = 0; c < m.cols; ++c) s += std::llabs(m.at(cell, c));
    return s;
}

std::vector<int> boundary_set(const CWComplex& x) {
    if (x.dim < 1) throw std::invalid_argument("boundary_set requires dim >= 1");
    std::vector<int> out;
    for (int mu = 0; mu < x.cells(x.dim - 1); ++mu)
        if (degree(x, x.dim - 1, mu) == 1) out.push_back(mu);
    return out;
}

bool incidence_entries_pm1(const CWComplex& x, int n) {
    const IntMatrix& m = x.incidence(n);
    return std::all_of(m.a.begin(), m.a.end(), [](long long v) { return std::llabs(v) <= 1; });
}

bool incidence_entries_pm1(const CWComplex& x) {
    for (int n = 1; n <= x.dim; ++n)
        if (!incidence_entries_pm1(x, n)) return false;
    return true;
}

long long euler_characteristic(const CWComplex& x) {
    long long chi = 0;
    for (int n = 0; n <= x.dim; ++n) chi += (n % 2 == 0 ? 1 : -1) * (long long)x.cell_counts[n];
    return chi;
}

OrientabilityResult check_orientability(const CWComplex& x) {
    if (x.dim < 1) throw std::invalid_argument("check_orientability requires dim >= 1");
    if (!incidence_entries_pm1(x, x.dim))
        throw std::invalid_argument("check_orientability requires top incidence in {-1,0,+1}");

    const int d = x.dim;
    const IntMatrix& m = x.incidence(d);
    const int nd = x.cells(d);

    OrientabilityResult res;

    // A (d-1)-cell with >= 3 nonzero cofaces cannot see pairwise opposite
    // signs, so it is an immediate witness.
    std::vector<std::vector<int>> cofaces(m.rows);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c) != 0) cofaces[r].push_back(c);
        if (cofaces[r].size() >= 3) {
            res.orientable = false;
            res.crowded_cell = r;
            return res;
        }
    }

    // Parity propagation over the d-cell graph. Edge between the two cofaces
    // of a shared (d-1)-cell mu: signs must differ exactly when the two
    // incidence entries are equal.
    struct Edge { int to; int parity; int via; };
    std::vector<std::vector<Edge>> adj(nd);
    for (int r = 0; r < m.rows; ++r) {
        if (cofaces[r].size() != 2) continue;
        int a = cofaces[r][0], b = cofaces[r][1];
        int parity = (m.at(r, a) == m.at(r, b)) ? 1 : 0;  // 1: opposite signs required
        adj[a].push_back({b, parity, r});
        adj[b].push_back({a, parity, r});
    }

    std::vector<int> sign(nd, 0);
    std::vector<int> parent(nd, -1);
    for (int start = 0; start < nd; ++start) {
        if (sign[start] != 0) continue;
        sign[start] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (const Edge& e : adj[v]) {
                int want = e.parity ? -sign[v] : sign[v];
                if (sign[e.to] == 0) {
                    sign[e.to] = want;
                    parent[e.to] = v;
                    queue.push_back(e.to);
                } else if (sign[e.to] != want) {
                    // Odd cycle: tree path v -> meet, then meet -> e.to,
                    // closed by the conflicting edge.
                    auto path_to_root = [&](int u) {
                        std::vector<int> p;
                        for (; u != -1; u = parent[u]) p.push_back(u);
                        return p;
                    };
                    std::vector<int> pv = path_to_root(v), pw = path_to_root(e.to);
                    std::set<int> on_pv(pv.begin(), pv.end());
                    size_t wi = 0;
                    while (!on_pv.count(pw[wi])) ++wi;  // meet exists (shared root)
                    int meet = pw[wi];
                    res.orientable = false;
                    for (int u : pv) {
                        res.odd_cycle.push_back(u);
                        if (u == meet) break;
                    }
                    for (size_t j = wi; j-- > 0;) res.odd_cycle.push_back(pw[j]);
                    return res;
                }
            }
        }
    }

    res.orientable = true;
    res.orientation.dim = d;
    res.orientation.signs = sign;
    return res;
}

CWComplex reorient(const CWComplex& x, int n, const Orientation& signs) {
    if (n < 0 || n > x.dim) throw std::out_of_range("reorient: dimension out of range");
    if (static_cast<int>(signs.signs.size()) != x.cells(n))
        throw std::invalid_argument("reorient: sign vector length mismatch");
    CWComplex y = x;
    if (n >= 1) {
        IntMatrix& m = y.incidence(n);
        for (int c = 0; c < m.cols; ++c)
            for (int r = 0; r < m.rows; ++r) m.at(r, c) *= signs.signs[c];
    }
    if (n < x.dim) {
        IntMatrix& m = y.incidence(n + 1);
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c) m.at(r, c) *= signs.signs[r];
    }
    return y;
}

AugmentedComplex augment_boundary(const CWComplex& x) {
    if (x.dim < 1) throw std::invalid_argument("augment_boundary requires dim >= 1");
    if (!incidence_entries_pm1(x, x.dim))
        throw std::invalid_argument("augment_boundary requires top incidence in {-1,0,+1}");

    AugmentedComplex out;
    out.base = x;
    out.doubled = boundary_set(x);

    const int d = x.dim;
    const int nl = x.cells(d - 1);
    const int nt = x.cells(d);
    const int k = static_cast<int>(out.doubled.size());

    CWComplex y = x;
    y.labels.clear();
    y.cell_counts[d - 1] = nl + k;
    y.cell_counts[d] = nt + k;

    // Duplicate the column of I_{d-1} for each doubled cell so the new
    // (d-1)-cell has the same boundary.
    if (d >= 2) {
        const IntMatrix& lower = x.incidence(d - 1);
        IntMatrix nl_mat(lower.rows, nl + k);
        for (int r = 0; r < lower.rows; ++r)
            for (int c = 0; c < nl; ++c) nl_mat.at(r, c) = lower.at(r, c);
        for (int j = 0; j < k; ++j)
            for (int r = 0; r < lower.rows; ++r)
                nl_mat.at(r, nl + j) = lower.at(r, out.doubled[j]);
        y.incidence(d - 1) = nl_mat;
    }

    const IntMatrix& top = x.incidence(d);
    IntMatrix nt_mat(nl + k, nt + k);
    for (int r = 0; r < nl; ++r)
        for (int c = 0; c < nt; ++c) nt_mat.at(r, c) = top.at(r, c);
    for (int j = 0; j < k; ++j) {
        nt_mat.at(out.doubled[j], nt + j) = 1;
        nt_mat.at(nl + j, nt + j) = -1;
        out.virtual_lower.push_back(nl + j);
        out.virtual_top.push_back(nt + j);
    }
    y.incidence(d) = nt_mat;

    out.augmented = std::move(y);
    return out;
}

CWComplex from_simplicial(const std::vector<std::vector<int>>& facets) {
    if (facets.empty()) throw std::invalid_argument("from_simplicial: no facets");
    for (const auto& f : facets)
        if (f.empty()) throw std::invalid_argument("from_simplicial: empty facet");

    // Collect all faces of all facets, deduplicated, per dimension.
    std::vector<std::set<std::vector<int>>> faces;  // faces[n] = sorted vertex tuples
    for (const auto& facet : facets) {
        std::vector<int> verts(facet);
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        const int nv = static_cast<int>(verts.size());
        if (static_cast<int>(faces.size()) < nv) faces.resize(nv);
        for (unsigned mask = 1; mask < (1u << nv); ++mask) {
            std::vector<int> face;
            for (int i = 0; i < nv; ++i)
                if (mask & (1u << i)) face.push_back(verts[i]);
            faces[face.size() - 1].insert(face);
        }
    }

    const int d = static_cast<int>(faces.size()) - 1;
    CWComplex x;
    x.dim = d;
    x.cell_counts.resize(d + 1);
    std::vector<std::map<std::vector<int>, int>> index(d + 1);
    x.labels.resize(d + 1);
    for (int n = 0; n <= d; ++n) {
        x.cell_counts[n] = static_cast<int>(faces[n].size());
        int i = 0;
        for (const auto& f : faces[n]) {
            index[n][f] = i++;
            std::string lab;
            for (size_t j = 0; j < f.size(); ++j)
                lab += (j ? "." : "") + std::to_string(f[j]);
            x.labels[n].push_back(lab);
        }
    }

    for (int n = 1; n <= d; ++n) {
        IntMatrix m(x.cell_counts[n - 1], x.cell_counts[n]);
        for (const auto& [face, col] : index[n]) {
            for (size_t i = 0; i < face.size(); ++i) {
                std::vector<int> sub;
                for (size_t j = 0; j < face.size(); ++j)
                    if (j != i) sub.push_back(face[j]);
                m.at(index[n - 1].at(sub), col) = (i % 2 == 0) ? 1 : -1;
            }
        }
        x.inc.push_back(std::move(m));
    }
    x.regular_asserted = true;
    return x;
}

}  // namespace cwc
