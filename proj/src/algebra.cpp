#include "hta/algebra.hpp"

#include <cctype>
#include <sstream>

namespace hta {

const char* mode_name(Mode m)
{
    switch (m) {
    case Mode::plain: return "plain";
    case Mode::dg: return "dg";
    case Mode::phi: return "phi";
    case Mode::phi_dg: return "phi_dg";
    }
    return "plain";
}

Mode mode_from_name(const std::string& s)
{
    if (s == "plain") return Mode::plain;
    if (s == "dg") return Mode::dg;
    if (s == "phi") return Mode::phi;
    if (s == "phi_dg") return Mode::phi_dg;
    throw Error("unknown mode '" + s + "'");
}

void check_same(const Element& a, const Element& b)
{
    if (a.alg && b.alg && a.alg != b.alg)
        throw Error("elements belong to different algebras");
}

// ---- Element ----

Element Element::scalar(AlgPtr a, const Q& q)
{
    Element e(std::move(a));
    e.add_term(Monomial{}, q);
    return e;
}

Element Element::mono(AlgPtr a, const Monomial& m, const Q& q)
{
    Element e(std::move(a));
    e.add_term(m, q);
    return e;
}

Element Element::t_pow(AlgPtr a, int k)
{
    Monomial m;
    m.t = k;
    return mono(std::move(a), m);
}

Element Element::symbol(AlgPtr a, const std::string& name, int e)
{
    int i = a->index(name);
    if (i < 0) throw Error("unknown symbol '" + name + "'");
    if (e < 0 && !a->sym(i).invertible) throw Error("symbol '" + name + "' is not invertible");
    if (a->odd(i) && e > 1) return Element(a);
    Monomial m;
    if (e != 0) m.f.push_back({i, e});
    return mono(std::move(a), m);
}

void Element::add_term(const Monomial& m, const Q& q)
{
    if (q == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, q);
        return;
    }
    it->second += q;
    if (it->second == 0) terms.erase(it);
}

Element Element::operator-() const
{
    Element r = *this;
    for (auto& kv : r.terms) kv.second = -kv.second;
    return r;
}

Element& Element::operator+=(const Element& o)
{
    check_same(*this, o);
    if (!alg) alg = o.alg;
    for (auto& kv : o.terms) add_term(kv.first, kv.second);
    return *this;
}

Element& Element::operator-=(const Element& o)
{
    check_same(*this, o);
    if (!alg) alg = o.alg;
    for (auto& kv : o.terms) add_term(kv.first, -kv.second);
    return *this;
}

Element& Element::operator*=(const Q& q)
{
    if (q == 0) {
        terms.clear();
        return *this;
    }
    for (auto& kv : terms) kv.second *= q;
    return *this;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(Element a, const Q& q) { return a *= q; }
Element operator*(const Q& q, Element a) { return a *= q; }

Element operator*(const Element& a, const Element& b)
{
    check_same(a, b);
    AlgPtr alg = a.alg ? a.alg : b.alg;
    Element r(alg);
    if (a.is_zero() || b.is_zero()) return r;
    Monomial m;
    for (auto& x : a.terms)
        for (auto& y : b.terms) {
            int s = alg->mul_mono(x.first, y.first, m);
            if (s == 0) continue;
            Q c = x.second * y.second;
            if (s < 0) c = -c;
            r.add_term(m, c);
        }
    return r;
}

// ---- Algebra ----

static bool valid_ident(const std::string& s)
{
    if (s.empty() || !std::isalpha((unsigned char)s[0])) return false;
    for (char c : s)
        if (!std::isalnum((unsigned char)c) && c != '_') return false;
    return true;
}

AlgPtr Algebra::make(std::vector<SymbolDecl> syms, bool commutative, Mode mode)
{
    std::shared_ptr<Algebra> a(new Algebra());
    a->syms_ = std::move(syms);
    a->commutative_ = commutative;
    a->mode_ = mode;
    a->self_ = a;
    for (int i = 0; i < a->nsym(); ++i) {
        const auto& s = a->syms_[i];
        if (!valid_ident(s.name)) throw Error("invalid symbol name '" + s.name + "'");
        if (s.name == "t") throw Error("'t' is reserved for the Tate generator");
        if (a->idx_.count(s.name)) throw Error("duplicate symbol '" + s.name + "'");
        if (s.coh < 0) throw Error("symbol '" + s.name + "' has negative cohomological degree");
        if (s.invertible && s.coh != 0) throw Error("invertible symbol '" + s.name + "' must have degree 0");
        if (!has_phi(mode) && s.phi != 0) throw Error("phi degree given outside a phi mode for '" + s.name + "'");
        a->idx_[s.name] = i;
    }
    AlgPtr ca = a;
    a->d_sym_.assign(a->nsym(), Element(ca));
    a->d_sym_inv_.assign(a->nsym(), Element(ca));
    for (int i = 0; i < a->nsym(); ++i) {
        const auto& s = a->syms_[i];
        if (s.d_expr.empty()) continue;
        if (!has_d(mode)) throw Error("differential rule for '" + s.name + "' in a mode without d");
        Element img = parse_element(ca, s.d_expr);
        if (img.is_zero()) continue;
        auto deg = degree_of(img);
        if (!deg || *deg != s.coh + 1)
            throw Error("d(" + s.name + ") must be homogeneous of degree " + std::to_string(s.coh + 1));
        if (mode == Mode::phi_dg) {
            auto pd = phi_degree_of(img);
            if (!pd || *pd != s.phi - 1)
                throw Error("d(" + s.name + ") must have phi degree " + std::to_string(s.phi - 1));
        }
        a->d_sym_[i] = img;
    }
    for (int i = 0; i < a->nsym(); ++i) {
        if (!a->syms_[i].invertible) continue;
        Element inv = Element::symbol(ca, a->syms_[i].name, -1);
        a->d_sym_inv_[i] = -(inv * a->d_sym_[i] * inv);
    }
    if (has_d(mode)) {
        for (int i = 0; i < a->nsym(); ++i) {
            if (!differential(a->d_sym_[i]).is_zero())
                throw Error("d(d(" + a->syms_[i].name + ")) is not zero");
        }
    }
    return ca;
}

int Algebra::index(const std::string& name) const
{
    auto it = idx_.find(name);
    return it == idx_.end() ? -1 : it->second;
}

int Algebra::coh(const Monomial& m) const
{
    int d = 0;
    for (auto& [i, e] : m.f) d += e * syms_[i].coh;
    return d;
}

int Algebra::phi(const Monomial& m) const
{
    int d = has_phi(mode_) ? m.t : 0;
    for (auto& [i, e] : m.f) d += e * syms_[i].phi;
    return d;
}

int Algebra::mul_mono(const Monomial& a, const Monomial& b, Monomial& out) const
{
    out.t = a.t + b.t;
    out.f.clear();
    int sign = 1;
    if (commutative_) {
        // odd factors of b jump over the odd factors of a with larger index
        int odd_a_after = 0;
        for (auto& [i, e] : a.f)
            if (odd(i)) ++odd_a_after;
        size_t k = 0, l = 0;
        while (k < a.f.size() || l < b.f.size()) {
            if (l == b.f.size() || (k < a.f.size() && a.f[k].first < b.f[l].first)) {
                if (odd(a.f[k].first)) --odd_a_after;
                out.f.push_back(a.f[k++]);
            } else if (k == a.f.size() || b.f[l].first < a.f[k].first) {
                if (odd(b.f[l].first) && odd_a_after % 2) sign = -sign;
                out.f.push_back(b.f[l++]);
            } else {
                int i = a.f[k].first;
                if (odd(i)) return 0;
                int e = a.f[k].second + b.f[l].second;
                if (e != 0) out.f.push_back({i, e});
                ++k;
                ++l;
            }
        }
        return sign;
    }
    out.f = a.f;
    for (auto& p : b.f) {
        if (!out.f.empty() && out.f.back().first == p.first) {
            int e = out.f.back().second + p.second;
            if (odd(p.first) && e > 1) return 0;
            if (e == 0)
                out.f.pop_back();
            else
                out.f.back().second = e;
        } else {
            out.f.push_back(p);
        }
    }
    return sign;
}

Element Algebra::d_raw(const Monomial& m) const
{
    AlgPtr me = self();
    Element res(me);
    std::vector<std::pair<int, int>> fac; // (symbol, +1 or -1)
    for (auto& [i, e] : m.f)
        for (int k = 0; k < std::abs(e); ++k) fac.push_back({i, e > 0 ? 1 : -1});
    Monomial tm;
    tm.t = m.t;
    for (size_t i = 0; i < fac.size(); ++i) {
        Element pre = Element::mono(me, tm);
        int pdeg = 0;
        for (size_t j = 0; j < i; ++j) {
            pre = pre * Element::symbol(me, syms_[fac[j].first].name, fac[j].second);
            pdeg += syms_[fac[j].first].coh;
        }
        const Element& dfi = fac[i].second > 0 ? d_sym_[fac[i].first] : d_sym_inv_[fac[i].first];
        if (dfi.is_zero()) continue;
        Element term = pre * dfi;
        for (size_t j = i + 1; j < fac.size(); ++j) term = term * Element::symbol(me, syms_[fac[j].first].name, fac[j].second);
        if (pdeg % 2) term = -term;
        res += term;
    }
    return res;
}

const Element& Algebra::d_mono(const Monomial& m) const
{
    if (!has_d(mode_)) throw Error(std::string("differential requires a dg mode, algebra is ") + mode_name(mode_));
    std::lock_guard<std::mutex> lk(mu_);
    auto it = d_cache_.find(m);
    if (it != d_cache_.end()) return it->second;
    Element r = d_raw(m);
    return d_cache_.emplace(m, std::move(r)).first->second;
}

// ---- free functions ----

Element div_t(const Element& a, int n)
{
    Element r(a.alg);
    for (auto& [m, q] : a.terms) {
        Monomial m2 = m;
        m2.t -= n;
        r.terms.emplace(m2, q);
    }
    return r;
}

Element coset_normalize(const Element& a, int n)
{
    Element r = a;
    for (auto it = r.terms.begin(); it != r.terms.end(); ++it)
        if (it->first.is_t_pow(n)) {
            r.terms.erase(it);
            break;
        }
    return r;
}

Element differential(const Element& a)
{
    Element r(a.alg);
    if (a.is_zero()) return r;
    for (auto& [m, q] : a.terms) {
        const Element& dm = a.alg->d_mono(m);
        for (auto& [m2, q2] : dm.terms) r.add_term(m2, q * q2);
    }
    return r;
}

std::optional<int> degree_of(const Element& a)
{
    if (a.is_zero()) return 0;
    int d = a.alg->coh(a.terms.begin()->first);
    for (auto& kv : a.terms)
        if (a.alg->coh(kv.first) != d) return std::nullopt;
    return d;
}

std::optional<int> phi_degree_of(const Element& a)
{
    if (a.is_zero()) return 0;
    int d = a.alg->phi(a.terms.begin()->first);
    for (auto& kv : a.terms)
        if (a.alg->phi(kv.first) != d) return std::nullopt;
    return d;
}

// ---- parsing ----

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;
    int line, col0;
    Lexer(const std::string& s_, int line_, int col0_) : s(s_), line(line_), col0(col0_) {}
    void ws()
    {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eof()
    {
        ws();
        return i >= s.size();
    }
    char peek()
    {
        ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col0 + int(i)); }
    std::string digits()
    {
        ws();
        size_t b = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (b == i) fail("expected integer");
        return s.substr(b, i - b);
    }
    std::string ident()
    {
        ws();
        size_t b = i;
        if (i < s.size() && std::isalpha((unsigned char)s[i])) {
            ++i;
            while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
        }
        if (b == i) fail("expected identifier");
        return s.substr(b, i - b);
    }
    int signed_int()
    {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++i;
        } else if (peek() == '+') {
            ++i;
        }
        std::string d = digits();
        if (d.size() > 6) fail("exponent too large");
        int v = std::stoi(d);
        return neg ? -v : v;
    }
};

Element parse_factor(Lexer& lx, const AlgPtr& alg)
{
    size_t at = lx.i;
    std::string name = lx.ident();
    int e = 1;
    if (lx.peek() == '^') {
        ++lx.i;
        e = lx.signed_int();
    }
    if (name == "t") return Element::t_pow(alg, e);
    int idx = alg->index(name);
    if (idx < 0) {
        lx.i = at;
        lx.ws();
        lx.fail("unknown symbol '" + name + "'");
    }
    if (e < 0 && !alg->sym(idx).invertible) {
        lx.i = at;
        lx.ws();
        lx.fail("negative exponent on non-invertible symbol '" + name + "'");
    }
    return Element::symbol(alg, name, e);
}

Element parse_term(Lexer& lx, const AlgPtr& alg)
{
    Element acc = Element::scalar(alg, 1);
    if (std::isdigit((unsigned char)lx.peek())) {
        std::string num = lx.digits();
        Q q(num);
        if (lx.peek() == '/') {
            ++lx.i;
            std::string den = lx.digits();
            mpz_class dz(den);
            if (dz == 0) lx.fail("zero denominator");
            q = Q(mpz_class(num), dz);
            q.canonicalize();
        }
        acc *= q;
    } else {
        acc = parse_factor(lx, alg);
    }
    while (lx.peek() == '*') {
        ++lx.i;
        acc = acc * parse_factor(lx, alg);
    }
    return acc;
}

} // namespace

Element parse_element(const AlgPtr& alg, const std::string& src, int line, int col0)
{
    Lexer lx(src, line, col0);
    Element r(alg);
    if (lx.eof()) lx.fail("empty expression");
    bool neg = false;
    if (lx.peek() == '-') {
        neg = true;
        ++lx.i;
    } else if (lx.peek() == '+') {
        ++lx.i;
    }
    for (;;) {
        Element term = parse_term(lx, alg);
        if (neg)
            r -= term;
        else
            r += term;
        if (lx.eof()) break;
        char c = lx.peek();
        if (c != '+' && c != '-') lx.fail(std::string("unexpected '") + c + "'");
        neg = (c == '-');
        ++lx.i;
    }
    return r;
}

std::string render(const Algebra& alg, const Monomial& m)
{
    std::string out;
    auto put = [&](const std::string& name, int e) {
        if (!out.empty()) out += "*";
        out += name;
        if (e != 1) out += "^" + std::to_string(e);
    };
    if (m.t != 0) put("t", m.t);
    for (auto& [i, e] : m.f) put(alg.sym(i).name, e);
    return out.empty() ? "1" : out;
}

std::string render(const Element& a)
{
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, q] : a.terms) {
        Q c = q;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        }
        first = false;
        bool unit = m.f.empty() && m.t == 0;
        if (unit) {
            out += q_str(c);
        } else {
            if (c != 1) out += q_str(c) + "*";
            out += render(*a.alg, m);
        }
    }
    return out;
}

} // namespace hta
