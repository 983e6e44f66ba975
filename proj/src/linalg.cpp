#include "hta/linalg.hpp"

#include <algorithm>

namespace hta {

void SparseMatrix::add(int i, int j, const Q& q)
{
    if (q == 0) return;
    auto& row = r[i];
    auto it = row.find(j);
    if (it == row.end()) {
        row.emplace(j, q);
        return;
    }
    it->second += q;
    if (it->second == 0) row.erase(it);
}

bool SparseMatrix::is_zero() const
{
    for (auto& row : r)
        if (!row.empty()) return false;
    return true;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& b) const
{
    SparseMatrix c(rows, b.cols);
    for (int i = 0; i < rows; ++i)
        for (auto& [k, q] : r[i])
            for (auto& [j, p] : b.r[k]) c.add(i, j, q * p);
    return c;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const
{
    SparseVec out;
    for (int i = 0; i < rows; ++i) {
        Q s = 0;
        for (auto& [j, q] : r[i]) {
            auto it = v.find(j);
            if (it != v.end()) s += q * it->second;
        }
        if (s != 0) out[i] = s;
    }
    return out;
}

namespace {

// row -= c * piv
void axpy(SparseVec& row, const Q& c, const SparseVec& piv)
{
    for (auto& [j, q] : piv) {
        auto it = row.find(j);
        if (it == row.end()) {
            row.emplace(j, -c * q);
        } else {
            it->second -= c * q;
            if (it->second == 0) row.erase(it);
        }
    }
}

// Echelon form keyed by pivot column; each pivot row is scaled to a leading 1.
std::map<int, SparseVec> echelon(const SparseMatrix& a)
{
    std::vector<int> order(a.rows);
    for (int i = 0; i < a.rows; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a.r[x].size() < a.r[y].size(); });
    std::map<int, SparseVec> piv;
    for (int i : order) {
        SparseVec row = a.r[i];
        while (!row.empty()) {
            auto lead = row.begin();
            auto p = piv.find(lead->first);
            if (p == piv.end()) break;
            Q c = lead->second;
            axpy(row, c, p->second);
        }
        if (row.empty()) continue;
        Q inv = 1 / row.begin()->second;
        for (auto& kv : row) kv.second *= inv;
        piv.emplace(row.begin()->first, std::move(row));
    }
    return piv;
}

} // namespace

int rank(const SparseMatrix& a)
{
    if (a.rows == 0 || a.cols == 0) return 0;
    return int(echelon(a).size());
}

std::vector<SparseVec> nullspace(const SparseMatrix& a)
{
    auto piv = echelon(a);
    // back-substitute to reduced form, last pivot first
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
        int c = it->first;
        for (auto jt = piv.begin(); jt->first < c; ++jt) {
            auto f = jt->second.find(c);
            if (f == jt->second.end()) continue;
            Q q = f->second;
            axpy(jt->second, q, it->second);
        }
    }
    std::vector<SparseVec> out;
    for (int j = 0; j < a.cols; ++j) {
        if (piv.count(j)) continue;
        SparseVec v;
        v[j] = 1;
        for (auto& [c, row] : piv) {
            auto f = row.find(j);
            if (f != row.end()) v[c] = -f->second;
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace hta
