#include "hta/cobar.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>

namespace hta {

ContentClasses content_classes(const Algebra& alg)
{
    int ns = alg.nsym();
    ContentClasses cc;
    cc.of_symbol.assign(ns, {});
    if (!alg.commutative()) throw Error("cobar components need a commutative algebra");
    for (int s = 0; s < ns; ++s)
        if (alg.sym(s).invertible) throw Error("symbol '" + alg.sym(s).name + "' is invertible; components would be infinite");
    std::vector<SparseVec> rows;
    if (has_d(alg.mode())) {
        for (int s = 0; s < ns; ++s)
            for (auto& [m, q] : alg.d_symbol(s).terms) {
                SparseVec r;
                for (auto& [i, e] : m.f) r[i] += e;
                r[s] -= 1;
                for (auto it = r.begin(); it != r.end();) it = (it->second == 0) ? r.erase(it) : std::next(it);
                if (!r.empty()) rows.push_back(r);
            }
    }
    SparseMatrix c(int(rows.size()), ns);
    for (size_t i = 0; i < rows.size(); ++i) c.r[i] = rows[i];
    auto basis = ns ? nullspace(c) : std::vector<SparseVec>{};
    for (auto& v : basis) {
        mpz_class l = 1;
        for (auto& [j, q] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        std::vector<int> iv(ns, 0);
        bool pos = false, neg = false;
        for (auto& [j, q] : v) {
            Q x = q * l;
            iv[j] = int(x.get_num().get_si());
            pos |= iv[j] > 0;
            neg |= iv[j] < 0;
        }
        if (pos && neg) throw Error("differential rules mix content signs; components would be infinite");
        if (neg)
            for (auto& x : iv) x = -x;
        int first = -1;
        for (int j = 0; j < ns; ++j)
            if (iv[j] > 0) {
                first = j;
                break;
            }
        cc.names.push_back(alg.sym(first).name);
        for (int j = 0; j < ns; ++j) cc.of_symbol[j].push_back(iv[j]);
    }
    for (int s = 0; s < ns; ++s) {
        bool any = false;
        for (int x : cc.of_symbol[s]) any |= x > 0;
        if (!any) throw Error("symbol '" + alg.sym(s).name + "' has zero content under the differential rules");
    }
    return cc;
}

std::string render(const MultiDegree& md)
{
    std::string s = "t_total=" + std::to_string(md.t_total);
    for (auto& [k, v] : md.symbol_degrees) s += " " + k + "=" + std::to_string(v);
    return s;
}

// ---- slot enumeration ----

SlotEnumerator::SlotEnumerator(AlgPtr alg, const MultiDegree& md, int max_coh) : alg_(std::move(alg)), md_(md)
{
    cc_ = content_classes(*alg_);
    target_.assign(cc_.names.size(), 0);
    for (auto& [k, v] : md.symbol_degrees) {
        bool found = false;
        for (size_t i = 0; i < cc_.names.size(); ++i)
            if (cc_.names[i] == k) {
                target_[i] = v;
                found = true;
            }
        if (!found) throw Error("unknown content class '" + k + "'");
    }
    int ns = alg_->nsym();
    std::vector<int> e(ns, 0);
    std::function<void(int, std::vector<int>, int)> rec = [&](int s, std::vector<int> used, int coh) {
        if (s == ns) {
            Part p;
            for (int i = 0; i < ns; ++i)
                if (e[i]) p.m.f.push_back({i, e[i]});
            p.content = used;
            p.coh = coh;
            p.phi = alg_->phi(p.m);
            parts_.push_back(p);
            return;
        }
        int maxe = alg_->odd(s) ? 1 : 1 << 20;
        for (size_t k = 0; k < target_.size(); ++k)
            if (cc_.of_symbol[s][k] > 0) maxe = std::min(maxe, (target_[k] - used[k]) / cc_.of_symbol[s][k]);
        int c = alg_->sym(s).coh;
        for (int x = 0; x <= maxe; ++x) {
            if (coh + x * c > max_coh) break;
            e[s] = x;
            auto u2 = used;
            for (size_t k = 0; k < target_.size(); ++k) u2[k] += x * cc_.of_symbol[s][k];
            rec(s + 1, u2, coh + x * c);
        }
        e[s] = 0;
    };
    rec(0, std::vector<int>(target_.size(), 0), 0);
}

std::vector<int> SlotEnumerator::content(const Monomial& m) const
{
    std::vector<int> c(cc_.names.size(), 0);
    for (auto& [i, e] : m.f)
        for (size_t k = 0; k < c.size(); ++k) c[k] += e * cc_.of_symbol[i][k];
    return c;
}

std::vector<Word> SlotEnumerator::words(int weight, const SlotBounds& b, int fixed_coh) const
{
    std::vector<Word> out;
    bool phi = has_phi(alg_->mode());
    Word cur;
    std::vector<int> rem = target_;
    std::function<void(int, int, int)> rec = [&](int wrem, int tsum, int used) {
        if (wrem == 0) {
            for (int x : rem)
                if (x) return;
            if (tsum != md_.t_total) return;
            out.push_back(cur);
            return;
        }
        for (auto& p : parts_) {
            if (fixed_coh >= 0 && p.coh != fixed_coh) continue;
            if (1 + p.coh > wrem) continue;
            bool ok = true;
            for (size_t k = 0; k < rem.size(); ++k)
                if (p.content[k] > rem[k]) ok = false;
            if (!ok) continue;
            bool last = (wrem == 1 + p.coh);
            auto try_t = [&](int a) {
                Monomial m = p.m;
                m.t = a;
                if (cur.empty() && m.is_t_pow(1)) return;
                int nused = used + std::abs(a);
                if (b.spread >= 0) {
                    if (nused > b.spread) return;
                    if (std::abs(md_.t_total - tsum - a) > b.spread - nused) return;
                } else if (!phi && (a < b.t_lo || a > b.t_hi)) {
                    return;
                }
                for (size_t k = 0; k < rem.size(); ++k) rem[k] -= p.content[k];
                cur.push_back(m);
                rec(wrem - 1 - p.coh, tsum + a, nused);
                cur.pop_back();
                for (size_t k = 0; k < rem.size(); ++k) rem[k] += p.content[k];
            };
            if (phi) {
                try_t(1 - p.phi);
            } else if (last) {
                try_t(md_.t_total - tsum);
            } else if (b.spread >= 0) {
                for (int a = -(b.spread - used); a <= b.spread - used; ++a) try_t(a);
            } else {
                for (int a = b.t_lo; a <= b.t_hi; ++a) try_t(a);
            }
        }
    };
    rec(weight, 0, 0);
    return out;
}

std::vector<Monomial> SlotEnumerator::monomials(int coh) const
{
    std::vector<Monomial> out;
    for (auto& p : parts_) {
        if (p.coh != coh || p.content != target_) continue;
        Monomial m = p.m;
        m.t = md_.t_total;
        out.push_back(m);
    }
    return out;
}

// ---- cobar ----

int bar_degree(const Algebra& alg, const Bar& b)
{
    int d = 0;
    for (auto& w : b) d += word_degree(alg, w) + 1;
    return d;
}

Tensor cobar_differential(const AlgPtr& alg, const Bar& b, CobarPart part)
{
    Tensor r(alg);
    int pre = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        const Word& a = b[i];
        int s = sign_pow(pre);
        if (part != CobarPart::internal) {
            int ldeg = 0;
            for (size_t c = 1; c < a.size(); ++c) {
                ldeg += alg->coh(a[c - 1]);
                if (a[c].is_t_pow(1)) continue;
                Bar nb(b.begin(), b.begin() + i);
                nb.push_back(Word(a.begin(), a.begin() + c));
                nb.push_back(Word(a.begin() + c, a.end()));
                nb.insert(nb.end(), b.begin() + i + 1, b.end());
                r.add_term(nb, s * sign_pow(ldeg));
            }
        }
        if (part != CobarPart::coproduct && has_d(alg->mode())) {
            HopfElement da = differential_D(HopfElement::word(alg, a));
            for (auto& [w, q] : da.terms) {
                Bar nb = b;
                nb[i] = w;
                r.add_term(nb, s > 0 ? q : Q(-q));
            }
        }
        pre += word_degree(*alg, a) + 1;
    }
    return r;
}

static int default_spread(int n, const MultiDegree& md)
{
    int c = 0;
    for (auto& [k, v] : md.symbol_degrees) c += v;
    return std::abs(md.t_total) + 2 * n + 2 * c + 2;
}

CobarComplex build_cobar(const AlgPtr& alg, int n, const MultiDegree& md, int spread)
{
    CobarComplex cx;
    cx.weight = n;
    cx.md = md;
    bool phi = has_phi(alg->mode());
    cx.spread = phi ? -1 : (spread >= 0 ? spread : default_spread(n, md));
    SlotEnumerator en(alg, md, n - 1);
    SlotBounds sb;
    sb.spread = cx.spread;
    for (auto& flat : en.words(n, sb)) {
        std::vector<size_t> cuts;
        for (size_t i = 1; i < flat.size(); ++i)
            if (!flat[i].is_t_pow(1)) cuts.push_back(i);
        for (unsigned long mask = 0; mask < (1ul << cuts.size()); ++mask) {
            Bar b;
            size_t start = 0;
            for (size_t k = 0; k < cuts.size(); ++k)
                if (mask >> k & 1) {
                    b.push_back(Word(flat.begin() + start, flat.begin() + cuts[k]));
                    start = cuts[k];
                }
            b.push_back(Word(flat.begin() + start, flat.end()));
            cx.basis[bar_degree(*alg, b)].push_back(b);
        }
    }
    for (auto& [k, v] : cx.basis) std::sort(v.begin(), v.end(), BarLess{});
    for (auto& [k, cols] : cx.basis) {
        auto nxt = cx.basis.find(k + 1);
        std::map<Bar, int, BarLess> idx;
        if (nxt != cx.basis.end())
            for (size_t i = 0; i < nxt->second.size(); ++i) idx[nxt->second[i]] = int(i);
        int rows = nxt == cx.basis.end() ? 0 : int(nxt->second.size());
        SparseMatrix m(rows, int(cols.size())), mc(rows, int(cols.size())), md_(rows, int(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j) {
            for (auto [part, mat] : {std::pair{CobarPart::coproduct, &mc}, std::pair{CobarPart::internal, &md_}}) {
                Tensor img = cobar_differential(alg, cols[j], part);
                for (auto& [b, q] : img.terms) {
                    auto it = idx.find(b);
                    if (it == idx.end()) throw Error("cobar truncation is not closed under the differential");
                    mat->add(it->second, int(j), q);
                    m.add(it->second, int(j), q);
                }
            }
        }
        cx.boundary[k] = std::move(m);
        cx.boundary_coprod[k] = std::move(mc);
        cx.boundary_D[k] = std::move(md_);
    }
    return cx;
}

static std::map<int, int> ranks_from(const std::map<int, int>& dims, const std::map<int, SparseMatrix>& bd, int lo, int hi)
{
    std::map<int, int> rk;
    for (auto& [k, m] : bd) rk[k] = rank(m);
    std::map<int, int> h;
    for (int k = lo; k <= hi; ++k) {
        int dim = dims.count(k) ? dims.at(k) : 0;
        int out = rk.count(k) ? rk[k] : 0;
        int in = rk.count(k - 1) ? rk[k - 1] : 0;
        h[k] = dim - out - in;
    }
    return h;
}

std::map<int, int> homology_ranks(const CobarComplex& c)
{
    std::map<int, int> dims;
    for (auto& [k, v] : c.basis) dims[k] = int(v.size());
    return ranks_from(dims, c.boundary, 1, c.weight);
}

bool boundary_squares_to_zero(const CobarComplex& c)
{
    for (auto& [k, m] : c.boundary) {
        auto it = c.boundary.find(k + 1);
        if (it == c.boundary.end()) continue;
        if (it->second.rows == 0 || m.cols == 0) continue;
        if (!(it->second * m).is_zero()) return false;
    }
    return true;
}

// ---- Deligne ----

DeligneComplex build_deligne(const AlgPtr& alg, int n, const MultiDegree& md)
{
    DeligneComplex dc;
    dc.weight = n;
    dc.md = md;
    SlotEnumerator en(alg, md, n - 1);
    bool zero_content = true;
    for (int x : en.target()) zero_content &= (x == 0);
    if (md.t_total == n && zero_content) {
        Monomial tn;
        tn.t = n;
        dc.basis[0] = {tn};
    } else {
        dc.basis[0] = {};
    }
    for (int j = 0; j < n; ++j) dc.basis[j + 1] = en.monomials(j);
    for (int k = 0; k < n; ++k) {
        auto& cols = dc.basis[k];
        auto& rows = dc.basis[k + 1];
        std::map<Monomial, int> idx;
        for (size_t i = 0; i < rows.size(); ++i) idx[rows[i]] = int(i);
        SparseMatrix m(int(rows.size()), int(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j) {
            if (k == 0) {
                m.add(idx.at(cols[j]), int(j), 1);
                continue;
            }
            for (auto& [mm, q] : alg->d_mono(cols[j]).terms) {
                auto it = idx.find(mm);
                if (it == idx.end()) throw Error("Deligne component not closed under d");
                m.add(it->second, int(j), q);
            }
        }
        dc.boundary[k] = std::move(m);
    }
    return dc;
}

std::map<int, int> homology_ranks(const DeligneComplex& c)
{
    std::map<int, int> dims;
    for (auto& [k, v] : c.basis) dims[k] = int(v.size());
    return ranks_from(dims, c.boundary, 0, c.weight);
}

DeligneReport deligne_compare(const AlgPtr& alg, int n, const MultiDegree& md, int spread)
{
    if (alg->mode() != Mode::dg) throw Error("deligne_compare needs a dg algebra");
    DeligneReport r;
    r.weight = n;
    r.md = md;
    r.cobar = homology_ranks(build_cobar(alg, n, md, spread));
    r.deligne = homology_ranks(build_deligne(alg, n, md));
    r.agree = r.deligne[0] == 0;
    for (int i = 1; i <= n; ++i) r.agree &= (r.cobar[i] == r.deligne[i]);
    return r;
}

} // namespace hta
