#include "hta/io.hpp"

#include "hta/models.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <tuple>
#include <sstream>

namespace hta {

namespace {

struct Tok {
    std::string s;
    int col;
};

struct Line {
    int no;
    std::string text; // comment stripped
    std::vector<Tok> toks;
};

std::vector<Line> split_lines(const std::string& text)
{
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto h = raw.find('#');
        if (h != std::string::npos) raw.erase(h);
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        Line l{no, raw, {}};
        size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace((unsigned char)raw[i])) {
                ++i;
                continue;
            }
            size_t j = i;
            while (j < raw.size() && !std::isspace((unsigned char)raw[j])) ++j;
            l.toks.push_back({raw.substr(i, j - i), int(i) + 1});
            i = j;
        }
        if (!l.toks.empty()) out.push_back(std::move(l));
    }
    return out;
}

[[noreturn]] void fail(const Line& l, int col, const std::string& msg) { throw ParseError(msg, l.no, col); }

int to_int(const Line& l, const Tok& t)
{
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(t.s, &used);
    } catch (const std::exception&) {
        fail(l, t.col, "expected an integer, got '" + t.s + "'");
    }
    if (used != t.s.size()) fail(l, t.col, "expected an integer, got '" + t.s + "'");
    return v;
}

Q to_q(const Line& l, const Tok& t)
{
    try {
        return q_parse(t.s);
    } catch (const std::exception&) {
        fail(l, t.col, "expected a rational, got '" + t.s + "'");
    }
}

// Text after the first '=' of the line, with its 1-based column.
std::pair<std::string, int> rhs(const Line& l)
{
    auto eq = l.text.find('=');
    if (eq == std::string::npos) fail(l, int(l.text.size()) + 1, "expected '='");
    return {l.text.substr(eq + 1), int(eq) + 2};
}

Element parse_at(const AlgPtr& alg, const Line& l, const std::string& s, int col)
{
    std::string trimmed = s;
    int lead = 0;
    while (lead < int(trimmed.size()) && std::isspace((unsigned char)trimmed[lead])) ++lead;
    if (lead == int(trimmed.size())) fail(l, col + lead, "empty expression");
    return parse_element(alg, trimmed.substr(lead), l.no, col + lead);
}

std::string q_list(const std::vector<Q>& v)
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + q_str(v[i]);
    return s;
}

} // namespace

bool is_builtin_algebra(const std::string& n)
{
    static const char* names[] = {"laurent", "de_rham", "polylog", "crys", "phi_line", "st", "free_xy"};
    for (auto* x : names)
        if (n == x) return true;
    return n.rfind("plain:", 0) == 0;
}

AlgPtr builtin_algebra(const std::string& n)
{
    if (n == "laurent") return models::laurent();
    if (n == "de_rham") return models::de_rham();
    if (n == "polylog") return models::polylog_dg();
    if (n == "crys") return models::crys();
    if (n == "phi_line") return models::phi_line();
    if (n == "st") return models::st();
    if (n == "free_xy") return models::free_xy();
    if (n.rfind("plain:", 0) == 0) {
        std::vector<std::string> names;
        std::stringstream ss(n.substr(6));
        std::string s;
        while (std::getline(ss, s, ','))
            if (!s.empty()) names.push_back(s);
        return models::plain(names);
    }
    throw Error("unknown algebra '" + n + "'");
}

AlgPtr resolve_algebra(const std::string& ref)
{
    if (is_builtin_algebra(ref)) return builtin_algebra(ref);
    return parse_algebra(read_file(ref));
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AlgPtr parse_algebra(const std::string& text)
{
    Mode mode = Mode::plain;
    bool comm = true;
    std::vector<SymbolDecl> syms;
    std::map<std::string, std::pair<std::string, std::pair<int, int>>> ds; // name -> expr, (line, col)
    auto find_sym = [&](const std::string& n) -> SymbolDecl* {
        for (auto& s : syms)
            if (s.name == n) return &s;
        return nullptr;
    };
    for (auto& l : split_lines(text)) {
        const auto& k = l.toks[0];
        if (k.s == "mode") {
            if (l.toks.size() != 2) fail(l, k.col, "expected 'mode <name>'");
            try {
                mode = mode_from_name(l.toks[1].s);
            } catch (const std::exception&) {
                fail(l, l.toks[1].col, "unknown mode '" + l.toks[1].s + "'");
            }
        } else if (k.s == "commutative") {
            if (l.toks.size() != 2 || (l.toks[1].s != "true" && l.toks[1].s != "false"))
                fail(l, k.col, "expected 'commutative true|false'");
            comm = l.toks[1].s == "true";
        } else if (k.s == "symbol") {
            if (l.toks.size() < 2) fail(l, k.col, "expected a symbol name");
            SymbolDecl d;
            d.name = l.toks[1].s;
            if (d.name == "t") fail(l, l.toks[1].col, "t is implicit");
            if (!std::isalpha((unsigned char)d.name[0])) fail(l, l.toks[1].col, "bad symbol name '" + d.name + "'");
            for (char c : d.name)
                if (!std::isalnum((unsigned char)c) && c != '_') fail(l, l.toks[1].col, "bad symbol name '" + d.name + "'");
            if (find_sym(d.name)) fail(l, l.toks[1].col, "duplicate symbol '" + d.name + "'");
            for (size_t i = 2; i < l.toks.size(); ++i) {
                const auto& a = l.toks[i];
                if (a.s == "invertible") {
                    d.invertible = true;
                } else if (a.s == "deg" || a.s == "phi") {
                    if (i + 1 >= l.toks.size()) fail(l, a.col, "missing value after '" + a.s + "'");
                    int v = to_int(l, l.toks[i + 1]);
                    (a.s == "deg" ? d.coh : d.phi) = v;
                    ++i;
                } else {
                    fail(l, a.col, "unknown attribute '" + a.s + "'");
                }
            }
            if (d.coh < 0) fail(l, k.col, "negative degrees are not supported");
            syms.push_back(d);
        } else if (k.s == "d") {
            if (l.toks.size() < 3) fail(l, k.col, "expected 'd <name> = <expr>'");
            const auto& name = l.toks[1];
            if (ds.count(name.s)) fail(l, name.col, "second rule for d " + name.s);
            auto [expr, col] = rhs(l);
            ds[name.s] = {expr, {l.no, col}};
        } else {
            fail(l, k.col, "unknown directive '" + k.s + "'");
        }
    }
    for (auto& [name, v] : ds) {
        SymbolDecl* s = find_sym(name);
        if (!s) throw ParseError("d of undeclared symbol '" + name + "'", v.second.first, 1);
        s->d_expr = v.first;
    }
    // Parse every rule against a differential-free copy first so errors carry locations.
    std::vector<SymbolDecl> bare = syms;
    for (auto& s : bare) s.d_expr.clear();
    AlgPtr probe = Algebra::make(bare, comm, mode == Mode::dg ? Mode::plain : mode == Mode::phi_dg ? Mode::phi : mode);
    for (auto& [name, v] : ds) {
        std::string e = v.first;
        int lead = 0;
        while (lead < int(e.size()) && std::isspace((unsigned char)e[lead])) ++lead;
        if (lead == int(e.size())) throw ParseError("empty expression", v.second.first, v.second.second);
        parse_element(probe, e.substr(lead), v.second.first, v.second.second + lead);
    }
    if (!ds.empty() && !has_d(mode)) throw Error("differential rules need mode dg or phi_dg");
    return Algebra::make(syms, comm, mode);
}

std::string render_algebra(const Algebra& alg)
{
    std::string s = "mode " + std::string(mode_name(alg.mode())) + "\n";
    s += std::string("commutative ") + (alg.commutative() ? "true" : "false") + "\n";
    for (int i = 0; i < alg.nsym(); ++i) {
        const auto& d = alg.sym(i);
        s += "symbol " + d.name;
        if (d.coh) s += " deg " + std::to_string(d.coh);
        if (d.phi) s += " phi " + std::to_string(d.phi);
        if (d.invertible) s += " invertible";
        s += "\n";
    }
    if (has_d(alg.mode()))
        for (int i = 0; i < alg.nsym(); ++i)
            if (!alg.d_symbol(i).is_zero()) s += "d " + alg.sym(i).name + " = " + render(alg.d_symbol(i)) + "\n";
    return s;
}

HopfElement parse_words(const AlgPtr& alg, const std::string& src, bool coset, int line, int col0)
{
    HopfElement out(alg, coset);
    size_t i = 0;
    auto col = [&](size_t k) { return col0 + int(k); };
    auto skip = [&] {
        while (i < src.size() && std::isspace((unsigned char)src[i])) ++i;
    };
    auto err = [&](const std::string& m) -> void { throw ParseError(m, line, col(i)); };
    skip();
    if (i == src.size()) err("empty expression");
    {
        size_t e = src.find_last_not_of(" \t");
        if (e == i && src[i] == '0') return out;
    }
    bool first = true;
    while (true) {
        skip();
        if (i == src.size()) break;
        int sign = 1;
        if (src[i] == '+' || src[i] == '-') {
            sign = src[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            err(std::string("unexpected '") + src[i] + "'");
        }
        first = false;
        Q coef = sign;
        if (i < src.size() && src[i] != '[') {
            size_t j = i;
            while (j < src.size() && (std::isdigit((unsigned char)src[j]) || src[j] == '/')) ++j;
            if (j == i) err("expected '[' or a coefficient");
            Q c;
            try {
                c = q_parse(src.substr(i, j - i));
            } catch (const std::exception&) {
                err("bad coefficient");
            }
            coef *= c;
            i = j;
            skip();
            if (i < src.size() && src[i] == '*') {
                ++i;
                skip();
                if (i == src.size() || src[i] != '[') err("expected '['");
            } else {
                // a bare scalar is a multiple of the empty word
                out.add_term(Word{}, coef);
                continue;
            }
        }
        if (i >= src.size() || src[i] != '[') err("expected '['");
        ++i;
        size_t close = src.find(']', i);
        if (close == std::string::npos) err("missing ']'");
        std::vector<Element> slots;
        std::string body = src.substr(i, close - i);
        if (body.find_first_not_of(" \t") != std::string::npos) {
            size_t start = i;
            while (true) {
                size_t bar = src.find('|', start);
                size_t end = (bar == std::string::npos || bar > close) ? close : bar;
                std::string piece = src.substr(start, end - start);
                size_t lead = piece.find_first_not_of(" \t");
                if (lead == std::string::npos) throw ParseError("empty slot", line, col(start));
                size_t tail = piece.find_last_not_of(" \t");
                slots.push_back(parse_element(alg, piece.substr(lead, tail - lead + 1), line, col(start + lead)));
                if (end == close) break;
                start = end + 1;
            }
        }
        i = close + 1;
        out += HopfElement::from_slots(alg, slots, coset) * coef;
    }
    return out;
}

WordFile parse_word_file(const std::string& text, const AlgPtr& fallback)
{
    WordFile wf;
    AlgPtr alg = fallback;
    bool coset = true;
    std::string body;
    int body_line = 0, body_col = 1;
    for (auto& l : split_lines(text)) {
        const auto& k = l.toks[0];
        if (body.empty() && k.s == "algebra") {
            if (l.toks.size() != 2) fail(l, k.col, "expected 'algebra <ref>'");
            wf.algebra = l.toks[1].s;
            alg = resolve_algebra(wf.algebra);
        } else if (body.empty() && k.s == "raw" && l.toks.size() == 1) {
            coset = false;
        } else {
            if (body.empty()) {
                body_line = l.no;
                body_col = k.col;
                body = l.text.substr(k.col - 1);
            } else {
                // continuation lines; locations past the first line are reported on it
                body += " " + l.text;
            }
        }
    }
    if (!alg) throw Error("no algebra given");
    if (body.empty()) throw ParseError("missing word combination", body_line ? body_line : 1, 1);
    wf.value = parse_words(alg, body, coset, body_line, body_col);
    return wf;
}

std::string render_word_file(const WordFile& w)
{
    std::string s;
    if (!w.algebra.empty()) s += "algebra " + w.algebra + "\n";
    if (!w.value.coset) s += "raw\n";
    return s + render(w.value) + "\n";
}

MatrixFile parse_matrix_file(const std::string& text, const AlgPtr& fallback)
{
    MatrixFile mf;
    AlgPtr alg = fallback;
    int n = -1;
    std::vector<int> blocks;
    struct Pending {
        Line l;
        int q, p, r, c;
    };
    std::vector<Pending> entries;
    std::optional<Line> v0_line, fn_line;
    for (auto& l : split_lines(text)) {
        const auto& k = l.toks[0];
        if (k.s == "algebra") {
            if (l.toks.size() != 2) fail(l, k.col, "expected 'algebra <ref>'");
            mf.algebra = l.toks[1].s;
            alg = resolve_algebra(mf.algebra);
        } else if (k.s == "weights") {
            if (l.toks.size() != 2) fail(l, k.col, "expected 'weights <n>'");
            n = to_int(l, l.toks[1]);
            if (n < 0) fail(l, l.toks[1].col, "weights must be >= 0");
        } else if (k.s == "blocks") {
            blocks.clear();
            for (size_t i = 1; i < l.toks.size(); ++i) {
                int d = to_int(l, l.toks[i]);
                if (d <= 0) fail(l, l.toks[i].col, "block sizes must be positive");
                blocks.push_back(d);
            }
        } else if (k.s == "entry") {
            if (l.toks.size() < 6 || l.toks[5].s.rfind('=', 0) != 0) fail(l, k.col, "expected 'entry q p row col = <expr>'");
            entries.push_back({l, to_int(l, l.toks[1]), to_int(l, l.toks[2]), to_int(l, l.toks[3]), to_int(l, l.toks[4])});
        } else if (k.s == "v0") {
            v0_line = l;
        } else if (k.s == "fn") {
            fn_line = l;
        } else {
            fail(l, k.col, "unknown directive '" + k.s + "'");
        }
    }
    if (!alg) throw Error("no algebra given");
    if (n < 0) throw ParseError("missing 'weights'", 1, 1);
    if (blocks.empty()) blocks.assign(n + 1, 1);
    if (int(blocks.size()) != n + 1) throw Error("expected " + std::to_string(n + 1) + " block sizes");
    FramedHTMatrix h = FramedHTMatrix::make(alg, blocks);
    std::set<std::tuple<int, int, int, int>> seen;
    for (auto& e : entries) {
        const Line& l = e.l;
        if (e.q < 0 || e.q > n || e.p < 0 || e.p > n) fail(l, l.toks[1].col, "weight out of range");
        if (e.r < 0 || e.r >= blocks[e.q] || e.c < 0 || e.c >= blocks[e.p]) fail(l, l.toks[3].col, "index out of range");
        if (!seen.insert({e.q, e.p, e.r, e.c}).second) fail(l, l.toks[0].col, "duplicate entry");
        auto [s, col] = rhs(l);
        Element x = parse_at(alg, l, s, col);
        std::string blk = "block (" + std::to_string(e.q) + "," + std::to_string(e.p) + ")";
        if (e.q < e.p && !x.is_zero()) fail(l, col, blk + " lies above the diagonal and must vanish");
        if (e.q == e.p) {
            Element want = e.r == e.c ? Element::t_pow(alg, e.p) : Element(alg);
            if (x != want) fail(l, col, blk + ": diagonal blocks must be t^" + std::to_string(e.p) + " times the identity");
            continue;
        }
        if (e.q > e.p) {
            auto d = degree_of(x);
            if (!x.is_zero() && (!d || *d != 0)) fail(l, col, blk + ": entries must have degree 0");
            h.at(e.q, e.p, e.r, e.c) = x;
        }
    }
    auto framing = [&](const std::optional<Line>& l, std::vector<Q>& v, int size, const char* what) {
        if (!l) return;
        auto [s, col] = rhs(*l);
        (void)col;
        auto parts = split_lines(s);
        std::vector<Q> got;
        if (!parts.empty())
            for (auto& t : parts[0].toks) got.push_back(to_q(*l, {t.s, t.col + col - 1}));
        if (int(got.size()) != size)
            fail(*l, l->toks[0].col, std::string(what) + " needs " + std::to_string(size) + " entries");
        v = got;
    };
    framing(v0_line, h.v0, blocks[0], "v0");
    framing(fn_line, h.fn, blocks[n], "fn");
    h.validate();
    mf.h = h;
    return mf;
}

std::string render_matrix_file(const MatrixFile& m)
{
    const auto& h = m.h;
    std::string s;
    if (!m.algebra.empty()) s += "algebra " + m.algebra + "\n";
    s += "weights " + std::to_string(h.n) + "\n";
    s += "blocks";
    for (int b : h.blocks) s += " " + std::to_string(b);
    s += "\n";
    for (int q = 1; q <= h.n; ++q)
        for (int p = 0; p < q; ++p)
            for (int i = 0; i < h.blocks[q]; ++i)
                for (int j = 0; j < h.blocks[p]; ++j) {
                    const Element& x = h.at(q, p, i, j);
                    if (x.is_zero()) continue;
                    s += "entry " + std::to_string(q) + " " + std::to_string(p) + " " + std::to_string(i) + " " +
                         std::to_string(j) + " = " + render(x) + "\n";
                }
    s += "v0 = " + q_list(h.v0) + "\n";
    s += "fn = " + q_list(h.fn) + "\n";
    return s;
}

} // namespace hta
