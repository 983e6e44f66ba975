#pragma once

#include "hta/cobar.hpp"
#include "hta/random.hpp"
#include "hta/words.hpp"

#include <optional>
#include <vector>

namespace hta {

// Block lower-triangular period matrix with a framing. Rows and columns are grouped by
// weight 0..n; block (q,p) has size blocks[q] x blocks[p]. Diagonal blocks are t^p * Id.
struct FramedHTMatrix {
    AlgPtr alg;
    int n = 0;
    std::vector<int> blocks;
    std::vector<std::vector<Element>> e; // full square matrix, global indices
    std::vector<Q> v0;                   // column selector in the weight-0 block
    std::vector<Q> fn;                   // row selector in the weight-n block

    // Diagonal-only matrix with default framing (first basis vectors).
    static FramedHTMatrix make(AlgPtr alg, std::vector<int> blocks);
    int dim() const;
    int offset(int p) const;
    Element& at(int q, int p, int row, int col);
    const Element& at(int q, int p, int row, int col) const;
    // Throws Error unless the shape, diagonal and degree invariants hold.
    void validate() const;
};

// <f^q_row | v_p^col> = entry * t^-p
Element matrix_coeff(const FramedHTMatrix& h, int q, int p, int row, int col);
// [f^q_row | v_p^col] = entry * t^-(q-1)
Element bracket(const FramedHTMatrix& h, int q, int p, int row, int col);

// Phi(f^q_row) for every q and row, by the memoized recursion (raw words).
std::vector<std::vector<HopfElement>> phi_table(const FramedHTMatrix& h);
HopfElement phi(const FramedHTMatrix& h);
// Same value, summed over chains 0 = i_0 < ... < i_k = n directly.
HopfElement phi_chains(const FramedHTMatrix& h);
HopfElement period_map(const FramedHTMatrix& h);
// sum_{p <= n} [f^n | v_p] (x) t^(n-p-1) (x) Phi(f^p), with the p = n term read as Phi(f^n).
HopfElement rec2a_defect(const FramedHTMatrix& h);

// Block unipotent rational matrix; only blocks (q,p) with q > p are read.
struct SplittingChange {
    std::vector<int> blocks;
    std::vector<std::vector<Q>> m; // full square, identity on diagonal blocks
    static SplittingChange identity(std::vector<int> blocks);
};
FramedHTMatrix change_splitting(const FramedHTMatrix& h, const SplittingChange& n);

struct FramedPiece {
    int p = 0, alpha = 0;
    FramedHTMatrix left, right; // left carries the (-p) twist
};
std::vector<FramedPiece> framed_coproduct(const FramedHTMatrix& h);
// sum over pieces of P(left) (x) P(right)
Tensor framed_coproduct_image(const FramedHTMatrix& h);

FramedHTMatrix framed_tensor(const FramedHTMatrix& a, const FramedHTMatrix& b);
FramedHTMatrix framed_sum(const FramedHTMatrix& a, const FramedHTMatrix& b);
FramedHTMatrix framed_scale(const FramedHTMatrix& a, const Q& q);
// H as a subobject of a bigger matrix: extra basis vectors per block with random
// couplings that do not feed back into H, and a random extension of f^n.
FramedHTMatrix embed_as_summand(const FramedHTMatrix& h, Rng& rng, const RandomBounds& b, int extra = 1);

// Inverse map on words of degree-0 slots; combinations map to framed sums.
FramedHTMatrix eta(const AlgPtr& alg, const Word& w);
FramedHTMatrix eta(const HopfElement& a);

struct TwistedPair {
    HopfElement value; // two-slot words, slot 0 read modulo Q*t
    int twist = 0;
};
TwistedPair big_period(const HopfElement& a);
// On a representative given as element slots.
HopfElement big_period_prime(const AlgPtr& alg, const std::vector<Element>& slots);
// Matrix side, by direct chain enumeration.
TwistedPair big_period_matrix(const FramedHTMatrix& h);

// Griffith transversality: t * d[f^j|v_p] = sum_a d[f^j|v_{j-1}^a] [f^{j-1}_a|v_p].
bool griffith_check(const FramedHTMatrix& h);

// Basis of ker D on the weight-n words with degree-0 slots in the multidegree md,
// slot t exponents in [b.t_lo, b.t_hi].
std::vector<HopfElement> h0_kernel(const AlgPtr& alg, int n, const MultiDegree& md, const SlotBounds& b);
// Basis of ker of the reduced coproduct on the same kind of component.
std::vector<HopfElement> reduced_coproduct_kernel(const AlgPtr& alg, int n, const MultiDegree& md, const SlotBounds& b);
// Whether x lies in the span of the given elements.
bool in_span(const std::vector<HopfElement>& basis, const HopfElement& x);

// Test matrices.
FramedHTMatrix trilog_matrix(const AlgPtr& polylog_alg);
FramedHTMatrix dilog_matrix(const AlgPtr& polylog_alg);
FramedHTMatrix random_framed(const AlgPtr& alg, Rng& rng, int n, int max_block, const RandomBounds& b);
SplittingChange random_unipotent(const std::vector<int>& blocks, Rng& rng, int bound = 5);

} // namespace hta
