#pragma once

#include "hta/rational.hpp"

#include <map>
#include <vector>

namespace hta {

using SparseVec = std::map<int, Q>;

// Row-major sparse matrix with exact entries.
struct SparseMatrix {
    int rows = 0, cols = 0;
    std::vector<SparseVec> r;

    SparseMatrix() = default;
    SparseMatrix(int rows_, int cols_) : rows(rows_), cols(cols_), r(rows_) {}
    void add(int i, int j, const Q& q);
    bool is_zero() const;
    SparseMatrix operator*(const SparseMatrix& b) const;
    SparseVec apply(const SparseVec& v) const;
};

int rank(const SparseMatrix& a);
// Basis of {v : a v = 0}.
std::vector<SparseVec> nullspace(const SparseMatrix& a);

} // namespace hta
