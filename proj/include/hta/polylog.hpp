#pragma once

#include "hta/words.hpp"

#include <map>
#include <tuple>
#include <string>
#include <vector>

namespace hta {

// Li_{p_1..p_m}(x_1..x_m) over a commutative algebra of degree-0 symbols; arguments are
// monomials without t, so merged arguments stay formal products.
struct LiIndex {
    std::vector<int> p;
    std::vector<Monomial> x;

    int weight() const;
    friend bool operator<(const LiIndex& a, const LiIndex& b) { return std::tie(a.p, a.x) < std::tie(b.p, b.x); }
    friend bool operator==(const LiIndex& a, const LiIndex& b) { return a.p == b.p && a.x == b.x; }
};

using LiCombination = std::map<LiIndex, Q>;

// "1,2:x,y" -> Li_{1,2}(x,y); arguments may be products such as x*y.
LiIndex parse_li_index(const AlgPtr& alg, const std::string& s);
std::string render(const Algebra& alg, const LiIndex& a);
std::string render(const Algebra& alg, const LiCombination& c);

// Throws Error when the argument symbol sets overlap.
LiCombination stuffle(const AlgPtr& alg, const LiIndex& a, const LiIndex& b);
LiCombination stuffle(const AlgPtr& alg, const LiCombination& a, const LiCombination& b);

// Truncated power series in the algebra symbols: exponent vector -> coefficient.
struct TruncatedSeries {
    int order = 0;
    std::map<std::vector<int>, Q> c;
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.order == b.order && a.c == b.c; }
};

TruncatedSeries series_expand(const AlgPtr& alg, const LiIndex& a, int order);
TruncatedSeries series_expand(const AlgPtr& alg, const LiCombination& a, int order);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// x_1 t^(1-p_1) (x) t^(p_1-1) (x) x_2 t^(1-p_2) (x) ... as a raw word.
HopfElement forc(const AlgPtr& alg, const LiIndex& a);
HopfElement forc(const AlgPtr& alg, const LiCombination& a);
bool check_T16(const AlgPtr& alg, const LiIndex& a, const LiIndex& b);

// An index where the reduced coproduct of forc differs from forc (x) forc of the index
// deconcatenation.
struct ForcCounterexample {
    LiIndex index;
    Tensor forc_side;  // reduced coproduct of forc(index) in T(R)
    Tensor index_side; // sum of forc(prefix) (x) forc(suffix)
};
ForcCounterexample forc_coproduct_counterexample(const AlgPtr& alg, int weight = 2);

// All indices of the given weight whose arguments are the first symbols of alg, in order.
std::vector<LiIndex> indices_of_weight(const AlgPtr& alg, int weight, int first_symbol, int max_args);

} // namespace hta
