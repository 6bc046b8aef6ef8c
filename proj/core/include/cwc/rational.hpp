#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace cwc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Exact rank by fraction-free Bareiss elimination on an integer-scaled copy.
int rational_rank(const RationalMatrix& m);

// Exact kernel basis (column vectors v with Mv = 0), deterministic: free
// columns in ascending order.
std::vector<std::vector<Rat>> rational_nullspace(const RationalMatrix& m);

}  // namespace cwc
