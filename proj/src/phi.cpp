#include "hta/phi.hpp"

#include <functional>

namespace hta {

void check_phi_slots(const HopfElement& a)
{
    if (!has_phi(a.alg->mode())) throw Error("phi words need a phi algebra");
    for (auto& [w, q] : a.terms)
        for (auto& m : w)
            if (a.alg->phi(m) != 1)
                throw Error("slot " + render(*a.alg, m) + " has phi degree " + std::to_string(a.alg->phi(m)) + ", expected 1");
}

HopfElement phi_product(const HopfElement& a, const HopfElement& b)
{
    check_phi_slots(a);
    check_phi_slots(b);
    HopfElement r = product(a, b);
    check_phi_slots(r);
    return r;
}

HopfElement phi_differential(const HopfElement& a)
{
    if (a.alg->mode() != Mode::phi_dg) throw Error("the phi differential needs a phi_dg algebra");
    check_phi_slots(a);
    HopfElement r = differential_D(a);
    check_phi_slots(r);
    return r;
}

std::vector<HopfElement> h0_phi(const AlgPtr& alg, int n, const MultiDegree& md, const SlotBounds& b)
{
    if (alg->mode() != Mode::phi_dg) throw Error("h0_phi needs a phi_dg algebra");
    return h0_kernel(alg, n, md, b);
}

void check_phi_matrix(const FramedHTMatrix& h)
{
    if (!has_phi(h.alg->mode())) throw Error("phi period map needs a phi algebra");
    h.validate();
    for (int q = 1; q <= h.n; ++q)
        for (int p = 0; p < q; ++p)
            for (int i = 0; i < h.blocks[q]; ++i)
                for (int j = 0; j < h.blocks[p]; ++j) {
                    const Element& x = h.at(q, p, i, j);
                    if (x.is_zero()) continue;
                    auto f = phi_degree_of(x);
                    if (!f || *f != q)
                        throw Error("entry (" + std::to_string(q) + "," + std::to_string(p) + ") must have phi degree " + std::to_string(q));
                }
}

HopfElement phi_period_map(const FramedHTMatrix& h)
{
    check_phi_matrix(h);
    HopfElement out(h.alg, true);
    int n = h.n;
    if (n == 0) {
        Q s = 0;
        for (int g = 0; g < h.blocks[0]; ++g) s += h.fn[g] * h.v0[g];
        out.add_term(Word{}, s);
        return out;
    }
    Element t1 = Element::t_pow(h.alg, 1);
    // interior levels of the chain, as a bitmask over 1..n-1
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> chain{n};
        for (int l = n - 1; l >= 1; --l)
            if (mask >> (l - 1) & 1) chain.push_back(l);
        chain.push_back(0);
        int k = int(chain.size()) - 1;
        // slot elements of the word, top first
        std::vector<int> idx(chain.size(), 0);
        std::function<void(int)> pick = [&](int lvl) {
            if (lvl == int(chain.size())) {
                Q frame = h.fn[idx[0]] * h.v0[idx.back()];
                if (frame == 0) return;
                std::vector<Element> slots;
                for (int s = 0; s + 1 < int(chain.size()); ++s) {
                    int q = chain[s], p = chain[s + 1];
                    int gap = q - p;
                    Element c = matrix_coeff(h, q, p, idx[s], idx[s + 1]);
                    if (c.is_zero()) return;
                    slots.push_back(c * Element::t_pow(h.alg, -(gap - 1)));
                    for (int j = 1; j < gap; ++j) slots.push_back(t1);
                }
                out += HopfElement::from_slots(h.alg, slots, true) * (frame * sign_pow(k));
                return;
            }
            for (int a = 0; a < h.blocks[chain[lvl]]; ++a) {
                idx[lvl] = a;
                pick(lvl + 1);
            }
        };
        pick(0);
    }
    check_phi_slots(out);
    return out;
}

FramedHTMatrix random_phi_framed(const AlgPtr& alg, Rng& rng, int n, int max_block, const RandomBounds& b)
{
    std::vector<int> bl;
    for (int p = 0; p <= n; ++p) bl.push_back(rng.uniform(1, max_block));
    FramedHTMatrix h = FramedHTMatrix::make(alg, bl);
    for (int q = 1; q <= n; ++q)
        for (int p = 0; p < q; ++p)
            for (int i = 0; i < bl[q]; ++i)
                for (int j = 0; j < bl[p]; ++j)
                    if (rng.uniform(0, 3) != 0) h.at(q, p, i, j) = rng.element(alg, 0, b, q);
    for (auto& x : h.v0) x = rng.rational(5);
    for (auto& x : h.fn) x = rng.rational(5);
    h.v0[rng.uniform(0, bl[0] - 1)] = rng.nonzero_rational(5);
    h.fn[rng.uniform(0, bl[n] - 1)] = rng.nonzero_rational(5);
    return h;
}

} // namespace hta
