#pragma once

#include "hta/cobar.hpp"
#include "hta/periods.hpp"
#include "hta/words.hpp"

namespace hta {

// Throws Error unless every slot of every word has phi degree exactly 1.
void check_phi_slots(const HopfElement& a);

HopfElement phi_product(const HopfElement& a, const HopfElement& b);
// Requires mode phi_dg.
HopfElement phi_differential(const HopfElement& a);
std::vector<HopfElement> h0_phi(const AlgPtr& alg, int n, const MultiDegree& md, const SlotBounds& b = {});

// Off-diagonal entries of block (q,p) must have phi degree q; throws Error otherwise.
void check_phi_matrix(const FramedHTMatrix& h);
// Chain-by-chain evaluation of <f|v> t^-(gap-1) products, projected to the coset.
HopfElement phi_period_map(const FramedHTMatrix& h);

FramedHTMatrix random_phi_framed(const AlgPtr& alg, Rng& rng, int n, int max_block, const RandomBounds& b);

} // namespace hta
