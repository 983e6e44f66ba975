#include "hta/words.hpp"

namespace hta {

static bool is_t(const Monomial& m) { return m.is_t_pow(1); }

// ---- HopfElement ----

HopfElement HopfElement::unit(AlgPtr a, bool coset)
{
    HopfElement h(std::move(a), coset);
    h.terms.emplace(Word{}, Q(1));
    return h;
}

HopfElement HopfElement::word(AlgPtr a, const Word& w, const Q& q, bool coset)
{
    HopfElement h(std::move(a), coset);
    h.add_term(w, q);
    return h;
}

HopfElement HopfElement::from_slots(AlgPtr a, const std::vector<Element>& slots, bool coset)
{
    HopfElement h(a, coset);
    std::vector<std::pair<Word, Q>> acc{{Word{}, Q(1)}};
    for (auto& s : slots) {
        std::vector<std::pair<Word, Q>> nxt;
        for (auto& [w, q] : acc)
            for (auto& [m, c] : s.terms) {
                Word w2 = w;
                w2.push_back(m);
                nxt.push_back({std::move(w2), q * c});
            }
        acc.swap(nxt);
    }
    for (auto& [w, q] : acc) h.add_term(w, q);
    return h;
}

void HopfElement::add_term(const Word& w, const Q& q)
{
    if (q == 0) return;
    if (coset && !w.empty() && is_t(w[0])) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, q);
        return;
    }
    it->second += q;
    if (it->second == 0) terms.erase(it);
}

HopfElement& HopfElement::operator+=(const HopfElement& o)
{
    if (!alg) {
        alg = o.alg;
        coset = o.coset;
    }
    for (auto& [w, q] : o.terms) add_term(w, q);
    return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& o)
{
    if (!alg) {
        alg = o.alg;
        coset = o.coset;
    }
    for (auto& [w, q] : o.terms) add_term(w, -q);
    return *this;
}

HopfElement& HopfElement::operator*=(const Q& q)
{
    if (q == 0) terms.clear();
    for (auto& kv : terms) kv.second *= q;
    return *this;
}

HopfElement HopfElement::operator-() const
{
    HopfElement r = *this;
    for (auto& kv : r.terms) kv.second = -kv.second;
    return r;
}

HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
HopfElement operator*(HopfElement a, const Q& q) { return a *= q; }

void Tensor::add_term(const Bar& b, const Q& q)
{
    if (q == 0) return;
    auto it = terms.find(b);
    if (it == terms.end()) {
        terms.emplace(b, q);
        return;
    }
    it->second += q;
    if (it->second == 0) terms.erase(it);
}

Tensor& Tensor::operator+=(const Tensor& o)
{
    if (!alg) alg = o.alg;
    for (auto& [b, q] : o.terms) add_term(b, q);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o)
{
    if (!alg) alg = o.alg;
    for (auto& [b, q] : o.terms) add_term(b, -q);
    return *this;
}

// ---- gradings ----

int word_degree(const Algebra& alg, const Word& w)
{
    int d = 0;
    for (auto& m : w) d += alg.coh(m);
    return d;
}

int word_weight(const Algebra& alg, const Word& w) { return int(w.size()) + word_degree(alg, w); }

int word_phi(const Algebra& alg, const Word& w)
{
    int d = 0;
    for (auto& m : w) d += alg.phi(m);
    return d;
}

int weight(const HopfElement& a)
{
    if (a.is_zero()) return 0;
    int w = word_weight(*a.alg, a.terms.begin()->first);
    for (auto& kv : a.terms)
        if (word_weight(*a.alg, kv.first) != w) throw Error("inhomogeneous weight");
    return w;
}

int degree(const HopfElement& a)
{
    if (a.is_zero()) return 0;
    int d = word_degree(*a.alg, a.terms.begin()->first);
    for (auto& kv : a.terms)
        if (word_degree(*a.alg, kv.first) != d) throw Error("inhomogeneous degree");
    return d;
}

std::map<int, HopfElement> split_by_degree(const HopfElement& a)
{
    std::map<int, HopfElement> r;
    for (auto& [w, q] : a.terms) {
        int d = word_degree(*a.alg, w);
        auto it = r.find(d);
        if (it == r.end()) it = r.emplace(d, HopfElement(a.alg, a.coset)).first;
        it->second.add_term(w, q);
    }
    return r;
}

// ---- quasi-shuffles ----

std::vector<QuasiShufflePattern> quasi_shuffle_enumerate(int p, int q)
{
    std::vector<QuasiShufflePattern> out;
    QuasiShufflePattern cur;
    using S = QuasiShufflePattern::Slot;
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == p && j == q) {
            out.push_back(cur);
            return;
        }
        if (i < p) {
            cur.slots.push_back({S::Left, i, -1});
            rec(i + 1, j);
            cur.slots.pop_back();
        }
        if (j < q) {
            cur.slots.push_back({S::Right, -1, j});
            rec(i, j + 1);
            cur.slots.pop_back();
        }
        if (i < p && j < q) {
            cur.slots.push_back({S::Collision, i, j});
            cur.sign = -cur.sign;
            rec(i + 1, j + 1);
            cur.sign = -cur.sign;
            cur.slots.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

namespace {

using Acc = std::vector<std::pair<Word, Q>>;

struct RawProduct {
    const Algebra& alg;
    const Word& x;
    const Word& y;
    std::vector<int> alpha; // degree of x[i..]
    std::map<std::pair<int, int>, Acc> memo;
    Monomial t1;

    RawProduct(const Algebra& a, const Word& x_, const Word& y_) : alg(a), x(x_), y(y_)
    {
        alpha.assign(x.size() + 1, 0);
        for (int i = int(x.size()) - 1; i >= 0; --i) alpha[i] = alpha[i + 1] + alg.coh(x[i]);
        t1.t = 1;
    }

    const Acc& run(int i, int j)
    {
        auto key = std::make_pair(i, j);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Acc r;
        if (i == int(x.size())) {
            r.push_back({Word(y.begin() + j, y.end()), Q(1)});
        } else if (j == int(y.size())) {
            r.push_back({Word(x.begin() + i, x.end()), Q(1)});
        } else {
            for (auto& [w, q] : run(i + 1, j)) {
                Word w2{x[i]};
                w2.insert(w2.end(), w.begin(), w.end());
                r.push_back({std::move(w2), q});
            }
            int s = sign_pow((long long)alg.coh(y[j]) * alpha[i]);
            for (auto& [w, q] : run(i, j + 1)) {
                Word w2{y[j]};
                w2.insert(w2.end(), w.begin(), w.end());
                r.push_back({std::move(w2), s > 0 ? q : Q(-q)});
            }
            Monomial xy;
            int ms = alg.mul_mono(x[i], y[j], xy);
            if (ms != 0) {
                xy.t -= 1;
                int s3 = -s * ms;
                for (auto& [w, q] : run(i + 1, j + 1)) {
                    Word w2{xy, t1};
                    w2.insert(w2.end(), w.begin(), w.end());
                    r.push_back({std::move(w2), s3 > 0 ? q : Q(-q)});
                }
            }
        }
        return memo.emplace(key, std::move(r)).first->second;
    }
};

} // namespace

HopfElement product_raw(const HopfElement& a, const HopfElement& b)
{
    AlgPtr alg = a.alg ? a.alg : b.alg;
    HopfElement r(alg, false);
    for (auto& [x, qa] : a.terms)
        for (auto& [y, qb] : b.terms) {
            RawProduct rp(*alg, x, y);
            Q c = qa * qb;
            for (auto& [w, q] : rp.run(0, 0)) r.add_term(w, c * q);
        }
    return r;
}

HopfElement product_raw_patterns(const HopfElement& a, const HopfElement& b)
{
    AlgPtr alg = a.alg ? a.alg : b.alg;
    HopfElement r(alg, false);
    Monomial t1;
    t1.t = 1;
    using S = QuasiShufflePattern::Slot;
    for (auto& [x, qa] : a.terms)
        for (auto& [y, qb] : b.terms) {
            auto pats = quasi_shuffle_enumerate(int(x.size()), int(y.size()));
            for (auto& pat : pats) {
                // position of each left / right index in the pattern
                std::vector<int> px(x.size()), py(y.size());
                for (int k = 0; k < int(pat.slots.size()); ++k) {
                    auto& s = pat.slots[k];
                    if (s.kind != S::Right) px[s.i] = k;
                    if (s.kind != S::Left) py[s.j] = k;
                }
                long long e = 0;
                for (size_t i = 0; i < x.size(); ++i)
                    for (size_t j = 0; j < y.size(); ++j)
                        if (py[j] <= px[i]) e += (long long)alg->coh(x[i]) * alg->coh(y[j]);
                int sign = pat.sign * sign_pow(e);
                Word w;
                bool zero = false;
                for (auto& s : pat.slots) {
                    if (s.kind == S::Left)
                        w.push_back(x[s.i]);
                    else if (s.kind == S::Right)
                        w.push_back(y[s.j]);
                    else {
                        Monomial xy;
                        int ms = alg->mul_mono(x[s.i], y[s.j], xy);
                        if (ms == 0) {
                            zero = true;
                            break;
                        }
                        sign *= ms;
                        xy.t -= 1;
                        w.push_back(xy);
                        w.push_back(t1);
                    }
                }
                if (zero) continue;
                Q c = qa * qb;
                r.add_term(w, sign > 0 ? c : Q(-c));
            }
        }
    return r;
}

HopfElement project(const HopfElement& raw)
{
    HopfElement r(raw.alg, true);
    for (auto& [w, q] : raw.terms) r.add_term(w, q);
    return r;
}

HopfElement lift(const HopfElement& a)
{
    HopfElement r(a.alg, false);
    r.terms = a.terms;
    return r;
}

HopfElement product(const HopfElement& a, const HopfElement& b) { return project(product_raw(lift(a), lift(b))); }

// ---- coalgebra ----

Tensor coproduct(const HopfElement& a)
{
    Tensor r(a.alg);
    for (auto& [w, q] : a.terms) {
        for (size_t k = 0; k <= w.size(); ++k) {
            if (a.coset && k < w.size() && is_t(w[k])) continue;
            r.add_term(Bar{Word(w.begin(), w.begin() + k), Word(w.begin() + k, w.end())}, q);
        }
    }
    return r;
}

Tensor reduced_coproduct(const HopfElement& a)
{
    Tensor r(a.alg);
    for (auto& [w, q] : a.terms) {
        for (size_t k = 1; k < w.size(); ++k) {
            if (a.coset && is_t(w[k])) continue;
            r.add_term(Bar{Word(w.begin(), w.begin() + k), Word(w.begin() + k, w.end())}, q);
        }
    }
    return r;
}

Q counit(const HopfElement& a)
{
    auto it = a.terms.find(Word{});
    return it == a.terms.end() ? Q(0) : it->second;
}

HopfElement factor(const AlgPtr& alg, const Word& w, bool coset) { return HopfElement::word(alg, w, 1, coset); }

Tensor tensor_of(const HopfElement& a, const HopfElement& b)
{
    Tensor r(a.alg ? a.alg : b.alg);
    for (auto& [x, p] : a.terms)
        for (auto& [y, q] : b.terms) r.add_term(Bar{x, y}, p * q);
    return r;
}

HopfElement antipode(const HopfElement& a)
{
    std::map<Word, HopfElement, WordLess> memo;
    std::function<const HopfElement&(const Word&)> S = [&](const Word& w) -> const HopfElement& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        HopfElement r(a.alg, true);
        if (w.empty()) {
            r.add_term(w, 1);
        } else {
            r.add_term(w, -1);
            for (size_t k = 1; k < w.size(); ++k) {
                if (is_t(w[k])) continue;
                Word l(w.begin(), w.begin() + k), rr(w.begin() + k, w.end());
                HopfElement sl = S(l);
                r -= product(sl, factor(a.alg, rr));
            }
        }
        return memo.emplace(w, std::move(r)).first->second;
    };
    HopfElement out(a.alg, true);
    for (auto& [w, q] : a.terms) out += S(w) * q;
    return out;
}

HopfElement differential_D(const HopfElement& a)
{
    HopfElement r(a.alg, a.coset);
    if (a.is_zero()) return r;
    if (!has_d(a.alg->mode())) throw Error(std::string("D requires a dg mode, algebra is ") + mode_name(a.alg->mode()));
    const Algebra& alg = *a.alg;
    for (auto& [w, q] : a.terms) {
        int pre = 0;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            const Element& dx = alg.d_mono(w[i]);
            Q c = (pre % 2) ? Q(-q) : q;
            for (auto& [m, dq] : dx.terms) {
                Monomial prod;
                int s = alg.mul_mono(m, w[i + 1], prod);
                if (s == 0) continue;
                Word w2(w.begin(), w.begin() + i);
                w2.push_back(prod);
                w2.insert(w2.end(), w.begin() + i + 2, w.end());
                r.add_term(w2, s > 0 ? c * dq : Q(-c * dq));
            }
            pre += alg.coh(w[i]);
        }
    }
    return r;
}

// ---- tensor helpers ----

Tensor product2(const Tensor& a, const Tensor& b)
{
    Tensor r(a.alg ? a.alg : b.alg);
    for (auto& [x, p] : a.terms)
        for (auto& [y, q] : b.terms) {
            int s = sign_pow((long long)word_degree(*r.alg, x[1]) * word_degree(*r.alg, y[0]));
            HopfElement l = product(factor(r.alg, x[0]), factor(r.alg, y[0]));
            HopfElement rr = product(factor(r.alg, x[1]), factor(r.alg, y[1]));
            Q c = s > 0 ? p * q : Q(-p * q);
            for (auto& [w1, c1] : l.terms)
                for (auto& [w2, c2] : rr.terms) r.add_term(Bar{w1, w2}, c * c1 * c2);
        }
    return r;
}

Tensor map_at(const Tensor& t, int k, const std::function<HopfElement(const HopfElement&)>& f)
{
    Tensor r(t.alg);
    for (auto& [b, q] : t.terms) {
        HopfElement img = f(factor(t.alg, b[k]));
        for (auto& [w, c] : img.terms) {
            Bar nb = b;
            nb[k] = w;
            r.add_term(nb, q * c);
        }
    }
    return r;
}

Tensor coproduct_at(const Tensor& t, int k)
{
    Tensor r(t.alg);
    for (auto& [b, q] : t.terms) {
        Tensor d = coproduct(factor(t.alg, b[k]));
        for (auto& [pair, c] : d.terms) {
            Bar nb(b.begin(), b.begin() + k);
            nb.push_back(pair[0]);
            nb.push_back(pair[1]);
            nb.insert(nb.end(), b.begin() + k + 1, b.end());
            r.add_term(nb, q * c);
        }
    }
    return r;
}

Tensor D_at(const Tensor& t, int k)
{
    Tensor r(t.alg);
    for (auto& [b, q] : t.terms) {
        int pre = 0;
        for (int j = 0; j < k; ++j) pre += word_degree(*t.alg, b[j]);
        HopfElement img = differential_D(factor(t.alg, b[k]));
        for (auto& [w, c] : img.terms) {
            Bar nb = b;
            nb[k] = w;
            r.add_term(nb, pre % 2 ? Q(-q * c) : q * c);
        }
    }
    return r;
}

HopfElement multiply_factors(const Tensor& t)
{
    HopfElement r(t.alg, true);
    for (auto& [b, q] : t.terms) r += product(factor(t.alg, b[0]), factor(t.alg, b[1])) * q;
    return r;
}

// ---- rendering ----

std::string render(const Algebra& alg, const Word& w)
{
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " | ";
        s += render(alg, w[i]);
    }
    return s + "]";
}

static std::string coef_prefix(const Q& q, bool first)
{
    std::string s;
    Q c = q;
    if (first) {
        if (c < 0) {
            s += "-";
            c = -c;
        }
    } else {
        s += (c < 0) ? " - " : " + ";
        if (c < 0) c = -c;
    }
    if (c != 1) s += q_str(c) + "*";
    return s;
}

std::string render(const HopfElement& a)
{
    if (a.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [w, q] : a.terms) {
        s += coef_prefix(q, first) + render(*a.alg, w);
        first = false;
    }
    return s;
}

std::string render(const Tensor& t)
{
    if (t.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [b, q] : t.terms) {
        s += coef_prefix(q, first);
        for (size_t i = 0; i < b.size(); ++i) {
            if (i) s += " (x) ";
            s += render(*t.alg, b[i]);
        }
        first = false;
    }
    return s;
}

} // namespace hta
