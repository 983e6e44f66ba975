#include "hta/laws.hpp"

namespace hta {

void LawResult::record(bool ok, const std::string& what)
{
    ++cases;
    if (ok) return;
    if (failures == 0) example = what;
    ++failures;
}

namespace {

// Random split of at most `total` into k weights.
std::vector<int> weights(Rng& rng, int k, int total)
{
    std::vector<int> w(k, 0);
    int budget = rng.uniform(0, total);
    for (int i = 0; i < budget; ++i) ++w[rng.uniform(0, k - 1)];
    return w;
}

HopfElement graded_swap_product(const HopfElement& a, const HopfElement& b)
{
    HopfElement r(a.alg, true);
    for (auto& [da, pa] : split_by_degree(a))
        for (auto& [db, pb] : split_by_degree(b)) r += product(pb, pa) * Q(sign_pow(da * db));
    return r;
}

} // namespace

std::vector<LawResult> element_laws(const AlgPtr& A, Rng& rng, int cases, const RandomBounds& b)
{
    LawResult assoc{"ring associativity"}, dist{"distributivity"}, comm{"ring graded commutativity"};
    LawResult divt{"div_t inverts multiplication by t"}, coset{"coset normalization"};
    LawResult dsq{"d^2 = 0"}, leib{"d Leibniz"}, ddeg{"d raises degree by one"}, dphi{"d lowers phi degree by one"};
    int odd = 0;
    for (int i = 0; i < A->nsym(); ++i) odd |= A->odd(i);
    for (int k = 0; k < cases; ++k) {
        int da = rng.uniform(0, odd), db = rng.uniform(0, odd), dc = rng.uniform(0, odd);
        Element a = rng.element(A, da, b), y = rng.element(A, db, b), c = rng.element(A, dc, b);
        std::string in = render(a) + " ; " + render(y) + " ; " + render(c);
        assoc.expect_eq((a * y) * c, a * (y * c), in);
        dist.expect_eq(a * (y + c), a * y + a * c, in);
        if (A->commutative()) comm.expect_eq(a * y, (y * a) * Q(sign_pow(da * db)), in);
        divt.expect_eq(div_t(a * Element::t_pow(A, 1), 1), a, render(a));
        Element n = coset_normalize(a, 1), diff = a - n;
        coset.record(coset_normalize(n, 1) == n && (diff.is_zero() || (diff.terms.size() == 1 && diff.terms.begin()->first.is_t_pow(1))),
                     render(a));
        if (!has_d(A->mode())) continue;
        Element d = differential(a);
        dsq.expect_eq(differential(d), Element(A), render(a));
        leib.expect_eq(differential(a * y), differential(a) * y + (a * differential(y)) * Q(sign_pow(da)), in);
        auto dd = degree_of(d);
        ddeg.record(a.is_zero() || d.is_zero() || (dd && *dd == da + 1), render(a));
        if (has_phi(A->mode())) {
            auto pa = phi_degree_of(a), pd = phi_degree_of(d);
            dphi.record(d.is_zero() || !pa || (pd && *pd == *pa - 1), render(a));
        }
    }
    std::vector<LawResult> out{assoc, dist};
    if (A->commutative()) out.push_back(comm);
    out.push_back(divt);
    out.push_back(coset);
    if (has_d(A->mode())) {
        out.push_back(dsq);
        out.push_back(leib);
        out.push_back(ddeg);
        if (has_phi(A->mode())) out.push_back(dphi);
    }
    return out;
}

std::vector<LawResult> hopf_laws(const AlgPtr& A, Rng& rng, const LawOptions& o)
{
    LawResult assoc{"associativity"}, comm{"graded commutativity"}, unit{"unit"}, coassoc{"coassociativity"};
    LawResult counit_l{"counit"}, hopf{"Hopf axiom"}, anti_l{"antipode (S x id)"}, anti_r{"antipode (id x S)"};
    auto gen = [&](int w) { return rng.hopf(A, w, o.bounds, o.phi_slots, 2); };
    for (int k = 0; k < o.cases; ++k) {
        auto w3 = weights(rng, 3, o.max_weight);
        HopfElement a = gen(w3[0]), b = gen(w3[1]), c = gen(w3[2]);
        std::string in = render(a) + " ; " + render(b) + " ; " + render(c);
        assoc.expect_eq(product(product(a, b), c), product(a, product(b, c)), in);
        if (A->commutative()) comm.expect_eq(product(a, b), graded_swap_product(a, b), in);
        HopfElement one = HopfElement::unit(A);
        unit.record(product(one, a) == a && product(a, one) == a, in);

        auto w1 = weights(rng, 1, o.max_weight);
        HopfElement x = gen(w1[0]);
        Tensor d = coproduct(x);
        coassoc.expect_eq(coproduct_at(d, 0), coproduct_at(d, 1), render(x));
        auto eps = [](const HopfElement& h) { return HopfElement::unit(h.alg) * counit(h); };
        counit_l.record(multiply_factors(map_at(d, 0, eps)) == x && multiply_factors(map_at(d, 1, eps)) == x, render(x));
        HopfElement e = HopfElement::unit(A) * counit(x);
        auto S = [](const HopfElement& h) { return antipode(h); };
        anti_l.expect_eq(multiply_factors(map_at(d, 0, S)), e, render(x));
        anti_r.expect_eq(multiply_factors(map_at(d, 1, S)), e, render(x));

        auto w2 = weights(rng, 2, o.max_weight);
        HopfElement p = gen(w2[0]), q = gen(w2[1]);
        hopf.expect_eq(coproduct(product(p, q)), product2(coproduct(p), coproduct(q)), render(p) + " ; " + render(q));
    }
    if (!A->commutative()) return {assoc, unit, coassoc, counit_l, hopf, anti_l, anti_r};
    return {assoc, comm, unit, coassoc, counit_l, hopf, anti_l, anti_r};
}

std::vector<LawResult> dg_laws(const AlgPtr& A, Rng& rng, const LawOptions& o)
{
    LawResult sq{"D^2 = 0"}, leib{"Leibniz"}, comp{"coproduct compatibility"}, wt{"D preserves weight"};
    auto gen = [&](int w) { return rng.hopf(A, w, o.bounds, o.phi_slots, 2); };
    for (int k = 0; k < o.cases; ++k) {
        auto w1 = weights(rng, 1, o.max_weight);
        HopfElement a = gen(std::max(1, w1[0]));
        HopfElement da = differential_D(a);
        sq.expect_eq(differential_D(da), HopfElement(A, true), render(a));
        wt.record(da.is_zero() || weight(da) == weight(a), render(a));
        Tensor d = coproduct(a);
        Tensor want = D_at(d, 0);
        want += D_at(d, 1);
        comp.expect_eq(coproduct(da), want, render(a));

        auto w2 = weights(rng, 2, o.max_weight);
        HopfElement x = gen(w2[0]), y = gen(w2[1]);
        HopfElement lhs = differential_D(product(x, y)), rhs(A, true);
        for (auto& [dg, part] : split_by_degree(x))
            rhs += product(differential_D(part), y) + product(part, differential_D(y)) * Q(sign_pow(dg));
        leib.expect_eq(lhs, rhs, render(x) + " ; " + render(y));
    }
    return {sq, leib, comp, wt};
}

LawResult quasi_shuffle_cross_check(const AlgPtr& A, Rng& rng, int max_len, int per_shape, const RandomBounds& b)
{
    LawResult r{"inductive m' = pattern sum"};
    int odd = has_d(A->mode()) ? 1 : 0;
    for (int p = 0; p <= max_len; ++p)
        for (int q = 0; p + q <= max_len; ++q)
            for (int k = 0; k < per_shape; ++k) {
                Word x, y;
                std::optional<int> ph;
                if (has_phi(A->mode())) ph = 1;
                for (int i = 0; i < p; ++i) x.push_back(*rng.monomial(*A, rng.uniform(0, odd), b, ph));
                for (int i = 0; i < q; ++i) y.push_back(*rng.monomial(*A, rng.uniform(0, odd), b, ph));
                HopfElement hx = HopfElement::word(A, x, 1, false), hy = HopfElement::word(A, y, 1, false);
                r.expect_eq(product_raw(hx, hy), product_raw_patterns(hx, hy), render(hx) + " ; " + render(hy));
            }
    return r;
}

LawResult lift_independence(const AlgPtr& A, Rng& rng, int cases, const RandomBounds& b)
{
    LawResult r{"lift independence"};
    Monomial t1;
    t1.t = 1;
    auto shifted = [&](const HopfElement& a) {
        HopfElement raw = lift(a);
        Q q = rng.nonzero_rational(9);
        for (auto& [w, c] : a.terms) {
            if (w.empty()) continue;
            Word s = w;
            s[0] = t1;
            raw.add_term(s, c * q);
        }
        return raw;
    };
    for (int k = 0; k < cases; ++k) {
        HopfElement a = rng.hopf(A, rng.uniform(1, 3), b), c = rng.hopf(A, rng.uniform(1, 3), b);
        HopfElement m = product(a, c);
        bool ok = project(product_raw(shifted(a), lift(c))) == m && project(product_raw(lift(a), shifted(c))) == m &&
                  project(product_raw(shifted(a), shifted(c))) == m;
        r.record(ok, render(a) + " ; " + render(c));
    }
    return r;
}

std::vector<LawResult> raw_hopf_defect(const AlgPtr& A, Rng& rng, int cases, const RandomBounds& b)
{
    LawResult loc{"raw Hopf defect lies in T (x) ker pr"}, exists{"raw Hopf defect is nonzero"};
    long offending = 0;
    for (int k = 0; k < cases; ++k) {
        HopfElement a = lift(rng.hopf(A, rng.uniform(1, 3), b)), c = lift(rng.hopf(A, rng.uniform(1, 3), b));
        Tensor lhs = coproduct(product_raw(a, c));
        // m' in each leg of the raw deconcatenations, with the Koszul sign of the middle swap
        Tensor da = coproduct(a), dc = coproduct(c), rhs(A);
        for (auto& [x, p] : da.terms)
            for (auto& [y, q] : dc.terms) {
                int sg = sign_pow(word_degree(*A, x[1]) * word_degree(*A, y[0]));
                HopfElement l = product_raw(HopfElement::word(A, x[0], 1, false), HopfElement::word(A, y[0], 1, false));
                HopfElement r = product_raw(HopfElement::word(A, x[1], 1, false), HopfElement::word(A, y[1], 1, false));
                for (auto& [w1, c1] : l.terms)
                    for (auto& [w2, c2] : r.terms) rhs.add_term(Bar{w1, w2}, p * q * c1 * c2 * sg);
            }
        Tensor diff = lhs;
        diff -= rhs;
        bool ok = true;
        for (auto& [bar, q] : diff.terms) {
            ++offending;
            if (bar[1].empty() || !bar[1][0].is_t_pow(1)) ok = false;
        }
        loc.record(ok, render(a) + " ; " + render(c));
    }
    exists.record(offending > 0, std::to_string(offending) + " defect terms");
    return {loc, exists};
}

LawResult t_blocks(const AlgPtr& A, int max_len)
{
    LawResult r{"m'(t^p, t^q) = t^(p+q)"};
    Monomial t1;
    t1.t = 1;
    for (int p = 0; p <= max_len; ++p)
        for (int q = 0; q <= max_len; ++q)
            r.expect_eq(product_raw(HopfElement::word(A, Word(p, t1), 1, false), HopfElement::word(A, Word(q, t1), 1, false)),
                        HopfElement::word(A, Word(p + q, t1), 1, false), std::to_string(p) + "," + std::to_string(q));
    return r;
}

LawResult block_law(const AlgPtr& A, Rng& rng, int cases, const RandomBounds& b)
{
    LawResult r{"block law"};
    Monomial t1;
    t1.t = 1;
    auto block = [&](const Monomial& m, int p) {
        Word w{m};
        w.insert(w.end(), p, t1);
        return w;
    };
    for (int k = 0; k < cases; ++k) {
        int na = rng.uniform(1, 2), nb = rng.uniform(1, 2);
        std::vector<std::pair<Monomial, int>> ba, bb;
        Word fa, fb;
        for (int i = 0; i < na; ++i) {
            ba.push_back({*rng.monomial(*A, 0, b), rng.uniform(0, 2)});
            auto w = block(ba.back().first, ba.back().second);
            fa.insert(fa.end(), w.begin(), w.end());
        }
        for (int i = 0; i < nb; ++i) {
            bb.push_back({*rng.monomial(*A, 0, b), rng.uniform(0, 2)});
            auto w = block(bb.back().first, bb.back().second);
            fb.insert(fb.end(), w.begin(), w.end());
        }
        HopfElement want(A, false);
        for (auto& pat : quasi_shuffle_enumerate(na, nb)) {
            Word w;
            Q sg = pat.sign;
            for (auto& s : pat.slots) {
                Word piece;
                if (s.kind == QuasiShufflePattern::Slot::Left) {
                    piece = block(ba[s.i].first, ba[s.i].second);
                } else if (s.kind == QuasiShufflePattern::Slot::Right) {
                    piece = block(bb[s.j].first, bb[s.j].second);
                } else {
                    Monomial m;
                    sg *= A->mul_mono(ba[s.i].first, bb[s.j].first, m);
                    m.t -= 1;
                    piece = block(m, ba[s.i].second + bb[s.j].second + 1);
                }
                w.insert(w.end(), piece.begin(), piece.end());
            }
            if (sg != 0) want.add_term(w, sg);
        }
        HopfElement ha = HopfElement::word(A, fa, 1, false), hb = HopfElement::word(A, fb, 1, false);
        r.expect_eq(product_raw(ha, hb), want, render(ha) + " ; " + render(hb));
    }
    return r;
}

LawResult noncommutative_pair(const AlgPtr& A)
{
    LawResult r{"x and y do not commute"};
    Element x = Element::symbol(A, "x"), y = Element::symbol(A, "y");
    HopfElement hx = HopfElement::from_slots(A, {x}), hy = HopfElement::from_slots(A, {y});
    r.record(x * y != y * x, "x*y vs y*x in R");
    r.record(product(hx, hy) != product(hy, hx), "m([x],[y]) vs m([y],[x])");
    r.record(x * Element::t_pow(A, 1) == Element::t_pow(A, 1) * x, "t is central");
    return r;
}

} // namespace hta
