#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cwc {

// Dense integer matrix used for incidence data. Desk-scale complexes only,
// so no sparsity engineering.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const IntMatrix&) const = default;
};

// A finite CW complex given purely combinatorially: cell counts per
// dimension and the integer incidence matrices between consecutive
// dimensions. incidence(n) has c_{n-1} rows and c_n columns; entry
// (mu, lambda) is the incidence number of the lambda-th n-cell with the
// mu-th (n-1)-cell.
struct CWComplex {
    int dim = 0;
    std::vector<int> cell_counts;               // size dim+1
    std::vector<IntMatrix> inc;                 // size dim; inc[n-1] is I_n
    std::vector<std::vector<std::string>> labels;  // optional, size dim+1 when present
    bool regular_asserted = true;

    int cells(int n) const { return (n < 0 || n > dim) ? 0 : cell_counts[n]; }
    const IntMatrix& incidence(int n) const { return inc[n - 1]; }
    IntMatrix& incidence(int n) { return inc[n - 1]; }
    bool has_incidence(int n) const { return n >= 1 && n <= dim; }

    std::string label(int n, int idx) const;
    void set_label(int n, int idx, const std::string& text);

    bool same_data(const CWComplex& other) const;
};

struct Violation {
    int n = -1;
    int row = -1;
    int col = -1;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

struct Cochain {
    int dim = 0;
    std::vector<double> values;
};

struct Orientation {
    int dim = 0;
    std::vector<int> signs;  // entries in {-1,+1}, length c_dim
};

// Verdict of the top-dimensional orientability check. When non-orientable,
// exactly one witness kind is set: either a (d-1)-cell with >= 3
// nonzero-incidence cofaces, or an odd sign cycle of d-cells.
struct OrientabilityResult {
    bool orientable = false;
    Orientation orientation;          // valid when orientable
    int crowded_cell = -1;            // (d-1)-cell index, or -1
    std::vector<int> odd_cycle;       // d-cell indices closing an odd cycle
};

// Boundary-doubled complex: each boundary (d-1)-cell gets a duplicate and
// a virtual d-cell capping the pair. virtual_top is the set X_d^boundary.
struct AugmentedComplex {
    CWComplex base;
    CWComplex augmented;
    std::vector<int> virtual_lower;   // new (d-1)-cell ids in augmented
    std::vector<int> virtual_top;     // new d-cell ids in augmented
    std::vector<int> doubled;         // original boundary (d-1)-cell ids
};

ValidationReport validate(const CWComplex& x);

// degree of an n-cell: sum of |incidence| with (n+1)-cells. Top cells have
// degree 0.
long long degree(const CWComplex& x, int n, int cell);

// (d-1)-cells of degree exactly 1.
std::vector<int> boundary_set(const CWComplex& x);

OrientabilityResult check_orientability(const CWComplex& x);

CWComplex reorient(const CWComplex& x, int n, const Orientation& signs);

AugmentedComplex augment_boundary(const CWComplex& x);

// Build a simplicial complex from its facets. Cells of each dimension are
// ordered lexicographically by sorted vertex tuple; boundary signs follow
// the alternating-sum convention on ascending vertices.
CWComplex from_simplicial(const std::vector<std::vector<int>>& facets);

bool incidence_entries_pm1(const CWComplex& x, int n);
bool incidence_entries_pm1(const CWComplex& x);

long long euler_characteristic(const CWComplex& x);

}  // namespace cwc
