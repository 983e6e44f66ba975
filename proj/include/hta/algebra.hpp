#pragma once

#include "hta/rational.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    int line, col;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)), line(line_), col(col_) {}
};

enum class Mode { plain, dg, phi, phi_dg };

const char* mode_name(Mode m);
Mode mode_from_name(const std::string& s);
inline bool has_d(Mode m) { return m == Mode::dg || m == Mode::phi_dg; }
inline bool has_phi(Mode m) { return m == Mode::phi || m == Mode::phi_dg; }

struct SymbolDecl {
    std::string name;
    int coh = 0;
    int phi = 0;
    bool invertible = false;
    std::string d_expr; // empty means d = 0
};

// t^t times a product of symbol powers. For commutative algebras the factor list is
// sorted by symbol index with unique entries; otherwise it is the reduced word of runs.
struct Monomial {
    int t = 0;
    std::vector<std::pair<int, int>> f;

    bool is_t_pow(int n) const { return f.empty() && t == n; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.t == b.t && a.f == b.f; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b)
    {
        if (a.t != b.t) return a.t < b.t;
        return a.f < b.f;
    }
};

class Algebra;
using AlgPtr = std::shared_ptr<const Algebra>;

struct Element {
    AlgPtr alg;
    std::map<Monomial, Q> terms;

    Element() = default;
    explicit Element(AlgPtr a) : alg(std::move(a)) {}

    static Element scalar(AlgPtr a, const Q& q);
    static Element mono(AlgPtr a, const Monomial& m, const Q& q = 1);
    static Element t_pow(AlgPtr a, int k);
    static Element symbol(AlgPtr a, const std::string& name, int e = 1);

    bool is_zero() const { return terms.empty(); }
    void add_term(const Monomial& m, const Q& q);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Q& q);

    friend bool operator==(const Element& a, const Element& b) { return a.terms == b.terms; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element operator*(Element a, const Q& q);
Element operator*(const Q& q, Element a);

class Algebra {
public:
    // Validates declarations and differential rules; throws Error on violations.
    static AlgPtr make(std::vector<SymbolDecl> syms, bool commutative, Mode mode);

    int nsym() const { return int(syms_.size()); }
    const SymbolDecl& sym(int i) const { return syms_[i]; }
    int index(const std::string& name) const;
    bool commutative() const { return commutative_; }
    Mode mode() const { return mode_; }
    bool odd(int i) const { return syms_[i].coh % 2 != 0; }

    int coh(const Monomial& m) const;
    int phi(const Monomial& m) const;

    // Returns 0 if the product vanishes, otherwise the sign; out receives the monomial.
    int mul_mono(const Monomial& a, const Monomial& b, Monomial& out) const;

    // d of a monomial, cached. Requires a dg mode.
    const Element& d_mono(const Monomial& m) const;
    const Element& d_symbol(int i) const { return d_sym_[i]; }

    AlgPtr self() const { return self_.lock(); }

private:
    Algebra() = default;
    std::vector<SymbolDecl> syms_;
    std::map<std::string, int> idx_;
    bool commutative_ = true;
    Mode mode_ = Mode::plain;
    std::vector<Element> d_sym_;     // d(s)
    std::vector<Element> d_sym_inv_; // d(s^-1) for invertible s
    std::weak_ptr<const Algebra> self_;
    mutable std::mutex mu_;
    mutable std::map<Monomial, Element> d_cache_;
    Element d_raw(const Monomial& m) const;
};

Element div_t(const Element& a, int n);
Element coset_normalize(const Element& a, int n = 1);
Element differential(const Element& a);
std::optional<int> degree_of(const Element& a);
std::optional<int> phi_degree_of(const Element& a);

// Expression grammar: sums of terms, each term an optional rational times factors t^k, s^k.
Element parse_element(const AlgPtr& alg, const std::string& src, int line = 1, int col0 = 1);
std::string render(const Algebra& alg, const Monomial& m);
std::string render(const Element& a);

void check_same(const Element& a, const Element& b);

} // namespace hta
