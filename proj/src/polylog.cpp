#include "hta/polylog.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace hta {

int LiIndex::weight() const
{
    int w = 0;
    for (int x : p) w += x;
    return w;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

void check_args(const Algebra& alg, const std::vector<Monomial>& xs)
{
    if (!alg.commutative()) throw Error("polylog indices need a commutative algebra");
    for (auto& m : xs) {
        if (m.t != 0 || m.f.empty()) throw Error("polylog arguments must be products of symbols");
        if (alg.coh(m) != 0) throw Error("polylog arguments must have degree 0");
    }
}

std::set<int> symbols_of(const LiIndex& a)
{
    std::set<int> s;
    for (auto& m : a.x)
        for (auto& [i, e] : m.f) s.insert(i);
    return s;
}

void add(LiCombination& c, const LiIndex& i, const Q& q)
{
    auto it = c.find(i);
    if (it == c.end()) {
        if (q != 0) c.emplace(i, q);
        return;
    }
    it->second += q;
    if (it->second == 0) c.erase(it);
}

} // namespace

LiIndex parse_li_index(const AlgPtr& alg, const std::string& s)
{
    auto colon = s.find(':');
    if (colon == std::string::npos) throw Error("index must look like \"p1,p2:x1,x2\"");
    auto ps = split(s.substr(0, colon), ','), xs = split(s.substr(colon + 1), ',');
    if (ps.empty() || ps.size() != xs.size()) throw Error("index needs as many exponents as arguments");
    LiIndex r;
    for (auto& p : ps) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(p, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != p.size() || v <= 0) throw Error("bad exponent '" + p + "'");
        r.p.push_back(v);
    }
    for (auto& x : xs) {
        Element e = parse_element(alg, x);
        if (e.terms.size() != 1 || e.terms.begin()->second != 1) throw Error("argument '" + x + "' must be a single monomial");
        r.x.push_back(e.terms.begin()->first);
    }
    check_args(*alg, r.x);
    return r;
}

std::string render(const Algebra& alg, const LiIndex& a)
{
    std::string s = "Li_{";
    for (size_t i = 0; i < a.p.size(); ++i) s += (i ? "," : "") + std::to_string(a.p[i]);
    s += "}(";
    for (size_t i = 0; i < a.x.size(); ++i) s += (i ? "," : "") + render(alg, a.x[i]);
    return s + ")";
}

std::string render(const Algebra& alg, const LiCombination& c)
{
    if (c.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [i, q] : c) {
        Q a = abs(q);
        if (first)
            s += q < 0 ? "-" : "";
        else
            s += q < 0 ? " - " : " + ";
        if (a != 1) s += q_str(a) + "*";
        s += render(alg, i);
        first = false;
    }
    return s;
}

LiCombination stuffle(const AlgPtr& alg, const LiIndex& a, const LiIndex& b)
{
    check_args(*alg, a.x);
    check_args(*alg, b.x);
    auto sa = symbols_of(a), sb = symbols_of(b);
    for (int i : sa)
        if (sb.count(i)) throw Error("stuffle needs disjoint arguments; '" + alg->sym(i).name + "' is shared");
    LiCombination out;
    using S = QuasiShufflePattern::Slot;
    for (auto& pat : quasi_shuffle_enumerate(int(a.p.size()), int(b.p.size()))) {
        LiIndex r;
        for (auto& s : pat.slots) {
            if (s.kind == S::Left) {
                r.p.push_back(a.p[s.i]);
                r.x.push_back(a.x[s.i]);
            } else if (s.kind == S::Right) {
                r.p.push_back(b.p[s.j]);
                r.x.push_back(b.x[s.j]);
            } else {
                r.p.push_back(a.p[s.i] + b.p[s.j]);
                Monomial m;
                alg->mul_mono(a.x[s.i], b.x[s.j], m);
                r.x.push_back(m);
            }
        }
        add(out, r, pat.sign);
    }
    return out;
}

LiCombination stuffle(const AlgPtr& alg, const LiCombination& a, const LiCombination& b)
{
    LiCombination out;
    for (auto& [x, p] : a)
        for (auto& [y, q] : b)
            for (auto& [z, r] : stuffle(alg, x, y)) add(out, z, p * q * r);
    return out;
}

TruncatedSeries series_expand(const AlgPtr& alg, const LiIndex& a, int order)
{
    TruncatedSeries s;
    s.order = order;
    int ns = alg->nsym(), m = int(a.p.size());
    std::vector<int> deg(m, 0);
    for (int i = 0; i < m; ++i)
        for (auto& [j, e] : a.x[i].f) deg[i] += e;
    std::vector<int> ex(ns, 0);
    std::function<void(int, int, int, Q)> rec = [&](int i, int kmin, int budget, Q c) {
        if (i == m) {
            s.c[ex] += c;
            return;
        }
        for (int k = kmin; k * deg[i] <= budget; ++k) {
            for (auto& [j, e] : a.x[i].f) ex[j] += k * e;
            mpz_class kp;
            mpz_ui_pow_ui(kp.get_mpz_t(), unsigned(k), unsigned(a.p[i]));
            rec(i + 1, k, budget - k * deg[i], c / Q(kp));
            for (auto& [j, e] : a.x[i].f) ex[j] -= k * e;
        }
    };
    rec(0, 1, order, Q(1));
    for (auto it = s.c.begin(); it != s.c.end();) it = it->second == 0 ? s.c.erase(it) : std::next(it);
    return s;
}

TruncatedSeries series_expand(const AlgPtr& alg, const LiCombination& a, int order)
{
    TruncatedSeries s;
    s.order = order;
    for (auto& [i, q] : a)
        for (auto& [e, c] : series_expand(alg, i, order).c) s.c[e] += q * c;
    for (auto it = s.c.begin(); it != s.c.end();) it = it->second == 0 ? s.c.erase(it) : std::next(it);
    return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    TruncatedSeries s;
    s.order = std::min(a.order, b.order);
    for (auto& [ea, ca] : a.c)
        for (auto& [eb, cb] : b.c) {
            std::vector<int> e(ea.size());
            int tot = 0;
            for (size_t i = 0; i < e.size(); ++i) tot += (e[i] = ea[i] + eb[i]);
            if (tot <= s.order) s.c[e] += ca * cb;
        }
    for (auto it = s.c.begin(); it != s.c.end();) it = it->second == 0 ? s.c.erase(it) : std::next(it);
    return s;
}

HopfElement forc(const AlgPtr& alg, const LiIndex& a)
{
    check_args(*alg, a.x);
    Word w;
    Monomial t1;
    t1.t = 1;
    for (size_t i = 0; i < a.p.size(); ++i) {
        Monomial m = a.x[i];
        m.t = 1 - a.p[i];
        w.push_back(m);
        for (int k = 1; k < a.p[i]; ++k) w.push_back(t1);
    }
    return HopfElement::word(alg, w, 1, false);
}

HopfElement forc(const AlgPtr& alg, const LiCombination& a)
{
    HopfElement r(alg, false);
    for (auto& [i, q] : a) r += forc(alg, i) * q;
    return r;
}

bool check_T16(const AlgPtr& alg, const LiIndex& a, const LiIndex& b)
{
    return forc(alg, stuffle(alg, a, b)) == product_raw(forc(alg, a), forc(alg, b));
}

std::vector<LiIndex> indices_of_weight(const AlgPtr& alg, int weight, int first_symbol, int max_args)
{
    std::vector<LiIndex> out;
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int rem) {
        if (rem == 0) {
            LiIndex a;
            a.p = parts;
            for (size_t i = 0; i < parts.size(); ++i) {
                Monomial m;
                m.f.push_back({first_symbol + int(i), 1});
                a.x.push_back(m);
            }
            out.push_back(a);
            return;
        }
        if (int(parts.size()) == max_args) return;
        for (int p = 1; p <= rem; ++p) {
            parts.push_back(p);
            rec(rem - p);
            parts.pop_back();
        }
    };
    if (first_symbol + std::min(max_args, weight) > alg->nsym()) throw Error("not enough symbols for the index arguments");
    rec(weight);
    return out;
}

ForcCounterexample forc_coproduct_counterexample(const AlgPtr& alg, int weight)
{
    for (auto& idx : indices_of_weight(alg, weight, 0, weight)) {
        ForcCounterexample c;
        c.index = idx;
        c.forc_side = reduced_coproduct(forc(alg, idx));
        c.index_side = Tensor(alg);
        for (size_t k = 1; k < idx.p.size(); ++k) {
            LiIndex l, r;
            l.p.assign(idx.p.begin(), idx.p.begin() + k);
            l.x.assign(idx.x.begin(), idx.x.begin() + k);
            r.p.assign(idx.p.begin() + k, idx.p.end());
            r.x.assign(idx.x.begin() + k, idx.x.end());
            for (auto& [wl, cl] : forc(alg, l).terms)
                for (auto& [wr, cr] : forc(alg, r).terms) c.index_side.add_term(Bar{wl, wr}, cl * cr);
        }
        if (c.forc_side != c.index_side) return c;
    }
    throw Error("no coproduct counterexample in weight " + std::to_string(weight));
}

} // namespace hta
