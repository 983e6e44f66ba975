#include "hta/periods.hpp"

#include <functional>

namespace hta {

namespace {

Element tp(const AlgPtr& a, int k) { return Element::t_pow(a, k); }

// [e] (x) t^pad (x) w, raw
HopfElement prepend(const Element& e, int pad, const HopfElement& w)
{
    HopfElement r(e.alg, false);
    Monomial t1;
    t1.t = 1;
    for (auto& [m, c] : e.terms)
        for (auto& [word, q] : w.terms) {
            Word nw;
            nw.push_back(m);
            for (int k = 0; k < pad; ++k) nw.push_back(t1);
            nw.insert(nw.end(), word.begin(), word.end());
            r.add_term(nw, c * q);
        }
    return r;
}

std::vector<Q> unit_vec(int d, int i)
{
    std::vector<Q> v(d, 0);
    v[i] = 1;
    return v;
}

} // namespace

// ---- matrix ----

FramedHTMatrix FramedHTMatrix::make(AlgPtr alg, std::vector<int> blocks)
{
    if (blocks.empty()) throw Error("a framed matrix needs at least the weight-0 block");
    for (int d : blocks)
        if (d <= 0) throw Error("block sizes must be positive");
    FramedHTMatrix h;
    h.alg = alg;
    h.n = int(blocks.size()) - 1;
    h.blocks = std::move(blocks);
    int D = h.dim();
    h.e.assign(D, std::vector<Element>(D, Element(alg)));
    for (int p = 0; p <= h.n; ++p)
        for (int i = 0; i < h.blocks[p]; ++i) h.at(p, p, i, i) = tp(alg, p);
    h.v0 = unit_vec(h.blocks[0], 0);
    h.fn = unit_vec(h.blocks[h.n], 0);
    return h;
}

int FramedHTMatrix::dim() const
{
    int d = 0;
    for (int b : blocks) d += b;
    return d;
}

int FramedHTMatrix::offset(int p) const
{
    int o = 0;
    for (int k = 0; k < p; ++k) o += blocks[k];
    return o;
}

Element& FramedHTMatrix::at(int q, int p, int row, int col)
{
    return const_cast<Element&>(static_cast<const FramedHTMatrix&>(*this).at(q, p, row, col));
}

const Element& FramedHTMatrix::at(int q, int p, int row, int col) const
{
    if (q < 0 || q > n || p < 0 || p > n || row < 0 || row >= blocks[q] || col < 0 || col >= blocks[p])
        throw Error("matrix index out of range");
    return e[offset(q) + row][offset(p) + col];
}

void FramedHTMatrix::validate() const
{
    if (int(blocks.size()) != n + 1) throw Error("block count does not match the top weight");
    int D = dim();
    if (int(e.size()) != D) throw Error("matrix size does not match the blocks");
    for (auto& r : e)
        if (int(r.size()) != D) throw Error("matrix size does not match the blocks");
    if (int(v0.size()) != blocks[0] || int(fn.size()) != blocks[n]) throw Error("framing size does not match the blocks");
    for (int q = 0; q <= n; ++q)
        for (int p = 0; p <= n; ++p)
            for (int i = 0; i < blocks[q]; ++i)
                for (int j = 0; j < blocks[p]; ++j) {
                    const Element& x = at(q, p, i, j);
                    if (q < p && !x.is_zero()) throw Error("entries above the diagonal blocks must vanish");
                    if (q == p && x != (i == j ? tp(alg, p) : Element(alg)))
                        throw Error("diagonal block " + std::to_string(p) + " must be t^" + std::to_string(p) + " times the identity");
                    if (q > p) {
                        auto d = degree_of(x);
                        if (!x.is_zero() && (!d || *d != 0)) throw Error("matrix entries must have degree 0");
                    }
                }
}

Element matrix_coeff(const FramedHTMatrix& h, int q, int p, int row, int col)
{
    if (q < p) throw Error("matrix_coeff needs q >= p");
    return h.at(q, p, row, col) * tp(h.alg, -p);
}

Element bracket(const FramedHTMatrix& h, int q, int p, int row, int col)
{
    if (q < p) throw Error("bracket needs q >= p");
    return h.at(q, p, row, col) * tp(h.alg, -(q - 1));
}

// ---- Phi ----

std::vector<std::vector<HopfElement>> phi_table(const FramedHTMatrix& h)
{
    std::vector<std::vector<HopfElement>> tab(h.n + 1);
    for (int a = 0; a < h.blocks[0]; ++a) tab[0].push_back(HopfElement::unit(h.alg, false) * h.v0[a]);
    for (int q = 1; q <= h.n; ++q)
        for (int a = 0; a < h.blocks[q]; ++a) {
            HopfElement s(h.alg, false);
            for (int p = 0; p < q; ++p)
                for (int b = 0; b < h.blocks[p]; ++b) {
                    if (h.at(q, p, a, b).is_zero() || tab[p][b].is_zero()) continue;
                    s -= prepend(bracket(h, q, p, a, b), q - p - 1, tab[p][b]);
                }
            tab[q].push_back(s);
        }
    return tab;
}

HopfElement phi(const FramedHTMatrix& h)
{
    auto tab = phi_table(h);
    HopfElement r(h.alg, false);
    for (int g = 0; g < h.blocks[h.n]; ++g)
        if (h.fn[g] != 0) r += tab[h.n][g] * h.fn[g];
    return r;
}

namespace {

// Phi(f^q_a) as a sum over chains, built left to right.
HopfElement phi_chain_row(const FramedHTMatrix& h, int q, int a)
{
    HopfElement out(h.alg, false);
    Monomial t1;
    t1.t = 1;
    std::function<void(int, int, const HopfElement&)> rec = [&](int cq, int ca, const HopfElement& prefix) {
        if (cq == 0) {
            if (h.v0[ca] != 0) out += prefix * h.v0[ca];
            return;
        }
        for (int p = 0; p < cq; ++p)
            for (int b = 0; b < h.blocks[p]; ++b) {
                Element br = bracket(h, cq, p, ca, b);
                if (br.is_zero()) continue;
                HopfElement np(h.alg, false);
                for (auto& [w, c] : prefix.terms)
                    for (auto& [m, d] : br.terms) {
                        Word nw = w;
                        nw.push_back(m);
                        for (int k = 0; k < cq - p - 1; ++k) nw.push_back(t1);
                        np.add_term(nw, -c * d);
                    }
                rec(p, b, np);
            }
    };
    rec(q, a, HopfElement::unit(h.alg, false));
    return out;
}

} // namespace

HopfElement phi_chains(const FramedHTMatrix& h)
{
    HopfElement r(h.alg, false);
    for (int g = 0; g < h.blocks[h.n]; ++g)
        if (h.fn[g] != 0) r += phi_chain_row(h, h.n, g) * h.fn[g];
    return r;
}

HopfElement period_map(const FramedHTMatrix& h) { return project(phi(h)); }

HopfElement rec2a_defect(const FramedHTMatrix& h)
{
    HopfElement r = phi_chains(h);
    for (int p = 0; p < h.n; ++p)
        for (int b = 0; b < h.blocks[p]; ++b) {
            HopfElement lower = phi_chain_row(h, p, b);
            for (int g = 0; g < h.blocks[h.n]; ++g) {
                if (h.fn[g] == 0) continue;
                r += prepend(bracket(h, h.n, p, g, b), h.n - p - 1, lower) * h.fn[g];
            }
        }
    return r;
}

// ---- splitting change ----

SplittingChange SplittingChange::identity(std::vector<int> blocks)
{
    SplittingChange s;
    s.blocks = std::move(blocks);
    int D = 0;
    for (int d : s.blocks) D += d;
    s.m.assign(D, std::vector<Q>(D, 0));
    for (int i = 0; i < D; ++i) s.m[i][i] = 1;
    return s;
}

FramedHTMatrix change_splitting(const FramedHTMatrix& h, const SplittingChange& n)
{
    if (n.blocks != h.blocks) throw Error("splitting change shape does not match");
    int D = h.dim();
    std::vector<int> wt;
    for (int p = 0; p <= h.n; ++p)
        for (int i = 0; i < h.blocks[p]; ++i) wt.push_back(p);
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
            if (wt[i] == wt[j] && n.m[i][j] != (i == j ? 1 : 0)) throw Error("splitting change is not unipotent");
            if (wt[i] < wt[j] && n.m[i][j] != 0) throw Error("splitting change is not lower triangular");
        }
    FramedHTMatrix r = h;
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
            Element s(h.alg);
            for (int k = 0; k < D; ++k)
                if (n.m[k][j] != 0 && !h.e[i][k].is_zero()) s += h.e[i][k] * n.m[k][j];
            r.e[i][j] = s;
        }
    return r;
}

// ---- coproduct ----

namespace {

FramedHTMatrix sub_matrix(const FramedHTMatrix& h, int lo, int hi, int twist)
{
    std::vector<int> bl(h.blocks.begin() + lo, h.blocks.begin() + hi + 1);
    FramedHTMatrix r = FramedHTMatrix::make(h.alg, bl);
    Element tw = tp(h.alg, -twist);
    for (int q = lo; q <= hi; ++q)
        for (int p = lo; p <= hi; ++p)
            for (int i = 0; i < h.blocks[q]; ++i)
                for (int j = 0; j < h.blocks[p]; ++j) r.at(q - lo, p - lo, i, j) = h.at(q, p, i, j) * tw;
    return r;
}

} // namespace

std::vector<FramedPiece> framed_coproduct(const FramedHTMatrix& h)
{
    std::vector<FramedPiece> out;
    for (int p = 0; p <= h.n; ++p)
        for (int a = 0; a < h.blocks[p]; ++a) {
            FramedPiece pc;
            pc.p = p;
            pc.alpha = a;
            pc.left = sub_matrix(h, p, h.n, p);
            pc.left.v0 = unit_vec(h.blocks[p], a);
            pc.left.fn = h.fn;
            pc.right = sub_matrix(h, 0, p, 0);
            pc.right.v0 = h.v0;
            pc.right.fn = unit_vec(h.blocks[p], a);
            out.push_back(std::move(pc));
        }
    return out;
}

Tensor framed_coproduct_image(const FramedHTMatrix& h)
{
    Tensor r(h.alg);
    for (auto& pc : framed_coproduct(h)) {
        HopfElement l = period_map(pc.left), rt = period_map(pc.right);
        for (auto& [wl, cl] : l.terms)
            for (auto& [wr, cr] : rt.terms) r.add_term(Bar{wl, wr}, cl * cr);
    }
    return r;
}

// ---- tensor, sum ----

FramedHTMatrix framed_tensor(const FramedHTMatrix& a, const FramedHTMatrix& b)
{
    if (a.alg != b.alg) throw Error("framed tensor of matrices over different algebras");
    struct Idx {
        int p, pp, i, ii;
    };
    int N = a.n + b.n;
    std::vector<std::vector<Idx>> by_wt(N + 1);
    for (int p = 0; p <= a.n; ++p)
        for (int pp = 0; pp <= b.n; ++pp)
            for (int i = 0; i < a.blocks[p]; ++i)
                for (int ii = 0; ii < b.blocks[pp]; ++ii) by_wt[p + pp].push_back({p, pp, i, ii});
    // lexicographic (p, p', i, i') inside each weight, which is the insertion order
    std::vector<int> bl;
    std::vector<Idx> flat;
    for (auto& v : by_wt) {
        bl.push_back(int(v.size()));
        flat.insert(flat.end(), v.begin(), v.end());
    }
    FramedHTMatrix r = FramedHTMatrix::make(a.alg, bl);
    int D = int(flat.size());
    for (int x = 0; x < D; ++x)
        for (int y = 0; y < D; ++y) {
            auto& R = flat[x];
            auto& C = flat[y];
            if (R.p < C.p || R.pp < C.pp) {
                r.e[x][y] = Element(a.alg);
                continue;
            }
            const Element& ea = a.at(R.p, C.p, R.i, C.i);
            const Element& eb = b.at(R.pp, C.pp, R.ii, C.ii);
            r.e[x][y] = (ea.is_zero() || eb.is_zero()) ? Element(a.alg) : ea * eb;
        }
    r.v0.assign(bl[0], 0);
    for (int k = 0; k < bl[0]; ++k) r.v0[k] = a.v0[by_wt[0][k].i] * b.v0[by_wt[0][k].ii];
    r.fn.assign(bl[N], 0);
    for (int k = 0; k < bl[N]; ++k) {
        auto& ix = by_wt[N][k];
        r.fn[k] = a.fn[ix.i] * b.fn[ix.ii];
    }
    return r;
}

FramedHTMatrix framed_sum(const FramedHTMatrix& a, const FramedHTMatrix& b)
{
    if (a.n != b.n) throw Error("framed sum needs equal top weights");
    std::vector<int> bl;
    for (int p = 0; p <= a.n; ++p) bl.push_back(a.blocks[p] + b.blocks[p]);
    FramedHTMatrix r = FramedHTMatrix::make(a.alg, bl);
    for (int q = 0; q <= a.n; ++q)
        for (int p = 0; p <= a.n; ++p) {
            for (int i = 0; i < a.blocks[q]; ++i)
                for (int j = 0; j < a.blocks[p]; ++j) r.at(q, p, i, j) = a.at(q, p, i, j);
            for (int i = 0; i < b.blocks[q]; ++i)
                for (int j = 0; j < b.blocks[p]; ++j) r.at(q, p, a.blocks[q] + i, a.blocks[p] + j) = b.at(q, p, i, j);
        }
    r.v0 = a.v0;
    r.v0.insert(r.v0.end(), b.v0.begin(), b.v0.end());
    r.fn = a.fn;
    r.fn.insert(r.fn.end(), b.fn.begin(), b.fn.end());
    return r;
}

FramedHTMatrix framed_scale(const FramedHTMatrix& a, const Q& q)
{
    FramedHTMatrix r = a;
    for (auto& x : r.fn) x *= q;
    return r;
}

FramedHTMatrix embed_as_summand(const FramedHTMatrix& h, Rng& rng, const RandomBounds& b, int extra)
{
    std::vector<int> bl;
    for (int d : h.blocks) bl.push_back(d + extra);
    FramedHTMatrix r = FramedHTMatrix::make(h.alg, bl);
    for (int q = 0; q <= h.n; ++q)
        for (int p = 0; p <= h.n; ++p) {
            for (int i = 0; i < h.blocks[q]; ++i)
                for (int j = 0; j < h.blocks[p]; ++j) r.at(q, p, i, j) = h.at(q, p, i, j);
            if (q <= p) continue;
            for (int j = 0; j < extra; ++j) {
                for (int i = 0; i < h.blocks[q]; ++i) r.at(q, p, i, h.blocks[p] + j) = rng.element(h.alg, 0, b);
                for (int i = 0; i < extra; ++i) r.at(q, p, h.blocks[q] + i, h.blocks[p] + j) = rng.element(h.alg, 0, b);
            }
        }
    r.v0 = h.v0;
    r.v0.resize(bl[0], 0);
    r.fn = h.fn;
    for (int j = 0; j < extra; ++j) r.fn.push_back(rng.rational(b.coef_bound));
    return r;
}

// ---- eta ----

FramedHTMatrix eta(const AlgPtr& alg, const Word& w)
{
    int n = int(w.size());
    FramedHTMatrix h = FramedHTMatrix::make(alg, std::vector<int>(n + 1, 1));
    for (auto& m : w)
        if (alg->coh(m) != 0) throw Error("eta needs slots of degree 0");
    for (int k = 0; k < n; ++k) {
        // s_{k+1}: a_n, ..., a_2, then (-1)^n x_1
        int slot = (k + 1 == n) ? 0 : n - 1 - k;
        Q c = (k + 1 == n) ? Q(sign_pow(n)) : Q(1);
        h.at(k + 1, k, 0, 0) = Element::mono(alg, w[slot], c) * tp(alg, k);
    }
    return h;
}

FramedHTMatrix eta(const HopfElement& a)
{
    if (a.is_zero()) {
        FramedHTMatrix h = FramedHTMatrix::make(a.alg, {1});
        h.fn = {0};
        return h;
    }
    std::optional<FramedHTMatrix> r;
    weight(a); // throws on mixed weights
    for (auto& [w, q] : a.terms) {
        FramedHTMatrix x = framed_scale(eta(a.alg, w), q);
        r = r ? framed_sum(*r, x) : x;
    }
    return *r;
}

// ---- big periods ----

TwistedPair big_period(const HopfElement& a)
{
    TwistedPair r{HopfElement(a.alg, true), 0};
    bool first = true;
    for (auto& [w, q] : a.terms) {
        int n = int(w.size());
        if (n < 2) throw Error("big period needs weight at least 2");
        if (first) r.twist = n - 2;
        if (n - 2 != r.twist) throw Error("big period needs a homogeneous weight");
        first = false;
        Monomial acc;
        for (int k = 1; k < n; ++k) {
            if (a.alg->coh(w[k]) != 0) throw Error("big period needs slots of degree 0");
            Monomial out;
            a.alg->mul_mono(acc, w[k], out);
            acc = out;
        }
        acc.t += 2 - n;
        r.value.add_term(Word{w[0], acc}, -q);
    }
    return r;
}

HopfElement big_period_prime(const AlgPtr& alg, const std::vector<Element>& slots)
{
    int n = int(slots.size());
    if (n < 2) throw Error("big period needs weight at least 2");
    Element a = Element::scalar(alg, 1);
    for (int k = 1; k < n; ++k) a = a * slots[k];
    HopfElement r = HopfElement::from_slots(alg, {slots[0] * tp(alg, -1), a * tp(alg, 1 - n)}, false) * Q(-1);
    r += HopfElement::from_slots(alg, {Element::scalar(alg, 1), slots[0] * a * tp(alg, -n)}, false);
    return r;
}

TwistedPair big_period_matrix(const FramedHTMatrix& h)
{
    if (h.n < 2) throw Error("big period needs weight at least 2");
    TwistedPair r{HopfElement(h.alg, true), h.n - 2};
    // state: first slot, product of the remaining slots, coefficient
    std::function<void(int, int, std::optional<Monomial>, Monomial, Q)> rec = [&](int q, int a, std::optional<Monomial> top,
                                                                                  Monomial rest, Q c) {
        if (q == 0) {
            if (h.v0[a] == 0) return;
            rest.t += 2 - h.n;
            r.value.add_term(Word{*top, rest}, -c * h.v0[a]);
            return;
        }
        for (int p = 0; p < q; ++p)
            for (int b = 0; b < h.blocks[p]; ++b)
                for (auto& [m, d] : bracket(h, q, p, a, b).terms) {
                    Monomial nrest = rest;
                    std::optional<Monomial> ntop = top;
                    if (!top) {
                        ntop = m;
                    } else {
                        Monomial out;
                        h.alg->mul_mono(nrest, m, out);
                        nrest = out;
                    }
                    nrest.t += q - p - 1;
                    rec(p, b, ntop, nrest, -c * d);
                }
    };
    for (int g = 0; g < h.blocks[h.n]; ++g)
        if (h.fn[g] != 0) rec(h.n, g, std::nullopt, Monomial{}, h.fn[g]);
    return r;
}

// ---- Griffith ----

bool griffith_check(const FramedHTMatrix& h)
{
    if (h.alg->mode() != Mode::dg) throw Error("griffith_check needs a dg algebra");
    for (int j = 2; j <= h.n; ++j)
        for (int p = 0; p + 2 <= j; ++p)
            for (int r = 0; r < h.blocks[j]; ++r)
                for (int c = 0; c < h.blocks[p]; ++c) {
                    Element lhs = tp(h.alg, 1) * differential(bracket(h, j, p, r, c));
                    Element rhs(h.alg);
                    for (int a = 0; a < h.blocks[j - 1]; ++a)
                        rhs += differential(bracket(h, j, j - 1, r, a)) * bracket(h, j - 1, p, a, c);
                    if (lhs != rhs) return false;
                }
    return true;
}

// ---- kernels ----

namespace {

template <class Img>
std::vector<HopfElement> kernel_of(const AlgPtr& alg, const std::vector<Word>& words, Img img)
{
    std::map<Bar, int, BarLess> idx;
    std::vector<std::vector<std::pair<Bar, Q>>> cols;
    for (auto& w : words) {
        cols.emplace_back();
        for (auto& [b, q] : img(w)) {
            idx.emplace(b, int(idx.size()));
            cols.back().push_back({b, q});
        }
    }
    SparseMatrix m(int(idx.size()), int(words.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (auto& [b, q] : cols[j]) m.add(idx[b], int(j), q);
    std::vector<HopfElement> out;
    for (auto& v : nullspace(m)) {
        HopfElement e(alg, true);
        for (auto& [j, q] : v) e.add_term(words[j], q);
        out.push_back(e);
    }
    return out;
}

} // namespace

std::vector<HopfElement> h0_kernel(const AlgPtr& alg, int n, const MultiDegree& md, const SlotBounds& b)
{
    if (!has_d(alg->mode())) throw Error("h0_kernel needs a dg algebra");
    SlotEnumerator en(alg, md, 0);
    SlotBounds sb = b;
    sb.spread = -1;
    auto words = en.words(n, sb, 0);
    return kernel_of(alg, words, [&](const Word& w) {
        std::vector<std::pair<Bar, Q>> r;
        for (auto& [x, q] : differential_D(HopfElement::word(alg, w)).terms) r.push_back({Bar{x}, q});
        return r;
    });
}

std::vector<HopfElement> reduced_coproduct_kernel(const AlgPtr& alg, int n, const MultiDegree& md, const SlotBounds& b)
{
    SlotEnumerator en(alg, md, 0);
    SlotBounds sb = b;
    sb.spread = -1;
    auto words = en.words(n, sb, 0);
    return kernel_of(alg, words, [&](const Word& w) {
        std::vector<std::pair<Bar, Q>> r;
        for (auto& [x, q] : reduced_coproduct(HopfElement::word(alg, w)).terms) r.push_back({x, q});
        return r;
    });
}

bool in_span(const std::vector<HopfElement>& basis, const HopfElement& x)
{
    std::map<Word, int, WordLess> idx;
    auto index = [&](const HopfElement& h) {
        for (auto& [w, q] : h.terms) idx.emplace(w, int(idx.size()));
    };
    for (auto& b : basis) index(b);
    index(x);
    SparseMatrix a(int(idx.size()), int(basis.size())), ax(int(idx.size()), int(basis.size()) + 1);
    for (size_t j = 0; j < basis.size(); ++j)
        for (auto& [w, q] : basis[j].terms) {
            a.add(idx[w], int(j), q);
            ax.add(idx[w], int(j), q);
        }
    for (auto& [w, q] : x.terms) ax.add(idx[w], int(basis.size()), q);
    return rank(a) == rank(ax);
}

// ---- test matrices ----

FramedHTMatrix trilog_matrix(const AlgPtr& A)
{
    FramedHTMatrix h = FramedHTMatrix::make(A, {1, 1, 1, 1});
    Element lz = Element::symbol(A, "lz");
    h.at(1, 0, 0, 0) = -Element::symbol(A, "L1");
    h.at(2, 0, 0, 0) = -Element::symbol(A, "L2");
    h.at(3, 0, 0, 0) = -Element::symbol(A, "L3");
    h.at(2, 1, 0, 0) = tp(A, 1) * lz;
    h.at(3, 1, 0, 0) = tp(A, 1) * lz * lz * Q(1, 2);
    h.at(3, 2, 0, 0) = tp(A, 2) * lz;
    return h;
}

FramedHTMatrix dilog_matrix(const AlgPtr& A) { return sub_matrix(trilog_matrix(A), 0, 2, 0); }

FramedHTMatrix random_framed(const AlgPtr& alg, Rng& rng, int n, int max_block, const RandomBounds& b)
{
    std::vector<int> bl;
    for (int p = 0; p <= n; ++p) bl.push_back(rng.uniform(1, max_block));
    FramedHTMatrix h = FramedHTMatrix::make(alg, bl);
    for (int q = 0; q <= n; ++q)
        for (int p = 0; p < q; ++p)
            for (int i = 0; i < bl[q]; ++i)
                for (int j = 0; j < bl[p]; ++j)
                    if (rng.uniform(0, 3) != 0) h.at(q, p, i, j) = rng.element(alg, 0, b);
    for (auto& x : h.v0) x = rng.rational(5);
    for (auto& x : h.fn) x = rng.rational(5);
    h.v0[rng.uniform(0, bl[0] - 1)] = rng.nonzero_rational(5);
    h.fn[rng.uniform(0, bl[n] - 1)] = rng.nonzero_rational(5);
    return h;
}

SplittingChange random_unipotent(const std::vector<int>& blocks, Rng& rng, int bound)
{
    SplittingChange s = SplittingChange::identity(blocks);
    std::vector<int> wt;
    for (size_t p = 0; p < blocks.size(); ++p)
        for (int i = 0; i < blocks[p]; ++i) wt.push_back(int(p));
    for (size_t i = 0; i < wt.size(); ++i)
        for (size_t j = 0; j < wt.size(); ++j)
            if (wt[i] > wt[j] && rng.coin()) s.m[i][j] = rng.rational(bound);
    return s;
}

} // namespace hta
