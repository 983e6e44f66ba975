#pragma once

#include "hta/algebra.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace hta {

using Word = std::vector<Monomial>;

// Canonical word order: by length, then slotwise.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using WordMap = std::map<Word, Q, WordLess>;

// A linear combination of monomial words. With coset = true the words live in A(R):
// slot 0 is read modulo Q*t, so words whose slot 0 is exactly t are dropped.
struct HopfElement {
    AlgPtr alg;
    bool coset = true;
    WordMap terms;

    HopfElement() = default;
    HopfElement(AlgPtr a, bool c) : alg(std::move(a)), coset(c) {}

    static HopfElement unit(AlgPtr a, bool coset = true);
    static HopfElement word(AlgPtr a, const Word& w, const Q& q = 1, bool coset = true);
    // Multilinear expansion of a word with element slots.
    static HopfElement from_slots(AlgPtr a, const std::vector<Element>& slots, bool coset = true);

    bool is_zero() const { return terms.empty(); }
    void add_term(const Word& w, const Q& q);
    HopfElement& operator+=(const HopfElement& o);
    HopfElement& operator-=(const HopfElement& o);
    HopfElement& operator*=(const Q& q);
    HopfElement operator-() const;

    friend bool operator==(const HopfElement& a, const HopfElement& b) { return a.terms == b.terms; }
    friend bool operator!=(const HopfElement& a, const HopfElement& b) { return !(a == b); }
};

HopfElement operator+(HopfElement a, const HopfElement& b);
HopfElement operator-(HopfElement a, const HopfElement& b);
HopfElement operator*(HopfElement a, const Q& q);

using Bar = std::vector<Word>;
struct BarLess {
    bool operator()(const Bar& a, const Bar& b) const
    {
        if (a.size() != b.size()) return a.size() < b.size();
        WordLess wl;
        for (size_t i = 0; i < a.size(); ++i) {
            if (wl(a[i], b[i])) return true;
            if (wl(b[i], a[i])) return false;
        }
        return false;
    }
};

// Linear combination of tuples of words: elements of A (x) A (x) ... or bar words.
struct Tensor {
    AlgPtr alg;
    std::map<Bar, Q, BarLess> terms;

    Tensor() = default;
    explicit Tensor(AlgPtr a) : alg(std::move(a)) {}
    void add_term(const Bar& b, const Q& q);
    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.terms == b.terms; }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }
};

int word_degree(const Algebra& alg, const Word& w);
int word_weight(const Algebra& alg, const Word& w);
int word_phi(const Algebra& alg, const Word& w);
// Homogeneous weight/degree of a combination; throws on inhomogeneous input. Zero has 0.
int weight(const HopfElement& a);
int degree(const HopfElement& a);
std::map<int, HopfElement> split_by_degree(const HopfElement& a);

struct QuasiShufflePattern {
    struct Slot {
        enum Kind { Left, Right, Collision } kind;
        int i = -1, j = -1; // left / right indices (both for a collision)
    };
    std::vector<Slot> slots;
    int sign = 1;
};

std::vector<QuasiShufflePattern> quasi_shuffle_enumerate(int p, int q);

// m' on T(R), inductive definition.
HopfElement product_raw(const HopfElement& a, const HopfElement& b);
// m' on T(R), evaluated by summing signed quasi-shuffle patterns.
HopfElement product_raw_patterns(const HopfElement& a, const HopfElement& b);
// pr : T(R) -> A(R).
HopfElement project(const HopfElement& raw);
HopfElement lift(const HopfElement& a);
// m on A(R).
HopfElement product(const HopfElement& a, const HopfElement& b);

// Deconcatenation; for coset elements the right leg is normalized.
Tensor coproduct(const HopfElement& a);
Tensor reduced_coproduct(const HopfElement& a);
Q counit(const HopfElement& a);
HopfElement antipode(const HopfElement& a);
HopfElement differential_D(const HopfElement& a);

// Koszul swap on two-factor tensors and helpers.
Tensor tensor_of(const HopfElement& a, const HopfElement& b);
HopfElement factor(const AlgPtr& alg, const Word& w, bool coset = true);

// Tensor-level helpers; every factor is read as an element of A(R).
// Product on A (x) A with the Koszul swap of the inner factors.
Tensor product2(const Tensor& a, const Tensor& b);
// Apply the coproduct to factor k, producing one more factor.
Tensor coproduct_at(const Tensor& t, int k);
// Apply D to factor k with the Koszul sign of the factors before it.
Tensor D_at(const Tensor& t, int k);
// Apply a linear map to factor k.
Tensor map_at(const Tensor& t, int k, const std::function<HopfElement(const HopfElement&)>& f);
// Multiply the two factors of a two-factor tensor.
HopfElement multiply_factors(const Tensor& t);

std::string render(const Algebra& alg, const Word& w);
std::string render(const HopfElement& a);
std::string render(const Tensor& t);

} // namespace hta
