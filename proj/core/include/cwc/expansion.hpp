#pragma once

#include "cwc/complex.hpp"
#include "cwc/f2.hpp"
#include "cwc/rational.hpp"
#include "cwc/spectral.hpp"

namespace cwc {

struct ExpansionBudget {
    CosetBudget coset;
    int max_quotient_exponent = 26;  // cap on log2 of enumerated cosets
};

// Exact expansion constant with an attaining witness. h = numerator /
// denominator where numerator is the Hamming weight of the (co)boundary of
// the witness and denominator its distance to the trivial subspace. The
// fraction is kept unreduced so the witness can be rechecked directly.
struct ExpansionCertificate {
    int n = 0;
    bool coboundary = false;
    Rat h;
    F2Vec witness;  // coset leader attaining the minimum
    long long numerator = 0;
    long long denominator = 1;
};

ExpansionCertificate boundary_expansion(const CWComplex& x, int n, bool reduced = false,
                                        ExpansionBudget budget = {});
ExpansionCertificate coboundary_expansion(const CWComplex& x, int n, bool reduced = false,
                                          ExpansionBudget budget = {});

// Sweep-cut profile over the boundary-doubled complex. Virtual cells carry
// f = 0 and precede all real top cells; real cells are sorted by |f|
// ascending with index tie-break. crossings[i] counts low-adjacent pairs
// (with multiplicity) separated by the cut after position i.
struct SweepProfile {
    AugmentedComplex aug;
    std::vector<int> order_real;       // real d-cell ids, sweep order
    int num_virtual = 0;               // M
    std::vector<long long> crossings;  // |C_i|, i = 0..N-1
    std::vector<long long> sigma;      // per real position i=1..N: below minus above pair count
    Rat H;
    int argmin = 0;
    F2Vec witness;                     // indicator cochain on augmented top cells
    long long m = 0;
};

SweepProfile sweep(const CWComplex& x, const std::vector<double>& f);

struct CheegerReport {
    int d = 0;
    bool regular_asserted = false;
    bool incidence_pm1 = false;
    bool orientable = false;
    bool max_lower_degree_le2 = false;

    double lambda_d = 0.0;
    double zero_threshold = 0.0;
    ExpansionCertificate h_d;
    long long m = 0;

    bool lower_applicable = false;
    bool lower_holds = false;
    double lower_slack = 0.0;  // h_d - lambda_d

    bool upper_applicable = false;
    bool upper_holds = false;
    double upper_bound_value = 0.0;  // sqrt(2 m lambda_d)
    double upper_slack = 0.0;        // bound - h_d
};

CheegerReport cheeger_check(const CWComplex& x, bool reduced = false,
                            ExpansionBudget budget = {});

// Exact h_1 for connected graphs: 2/diam for trees, 0 otherwise.
Rat tree_expansion_oracle(const CWComplex& x);

}  // namespace cwc
