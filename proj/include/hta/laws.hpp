#pragma once

#include "hta/random.hpp"
#include "hta/words.hpp"

#include <string>
#include <vector>

namespace hta {

struct LawResult {
    std::string law;
    long cases = 0;
    long failures = 0;
    std::string example;  // first failing input, rendered
    std::string lhs, rhs; // its two unequal sides, when the law is an equation
    explicit LawResult(std::string name = "") : law(std::move(name)) {}
    bool pass() const { return failures == 0 && cases > 0; }
    void record(bool ok, const std::string& what);
    template <class T>
    bool expect_eq(const T& a, const T& b, const std::string& what)
    {
        bool ok = a == b;
        if (!ok && failures == 0) {
            lhs = render(a);
            rhs = render(b);
        }
        record(ok, what);
        return ok;
    }
};

struct LawOptions {
    int cases = 200;
    int max_weight = 4; // total weight of the inputs of each law
    RandomBounds bounds;
    bool phi_slots = false;
};

// Ring axioms, graded commutativity, div_t, coset normalization and the d rules on
// random elements of R.
std::vector<LawResult> element_laws(const AlgPtr& alg, Rng& rng, int cases, const RandomBounds& b);
// Associativity, graded commutativity, unit, coassociativity, counit, Hopf axiom and
// both antipode identities on random elements of A(R).
std::vector<LawResult> hopf_laws(const AlgPtr& alg, Rng& rng, const LawOptions& o);
// D^2 = 0, Leibniz and compatibility with the coproduct.
std::vector<LawResult> dg_laws(const AlgPtr& alg, Rng& rng, const LawOptions& o);
// Inductive m' against the signed pattern sum on every shape (p,q) with p+q <= max_len.
LawResult quasi_shuffle_cross_check(const AlgPtr& alg, Rng& rng, int max_len, int per_shape, const RandomBounds& b);
// m is unchanged when a slot-0 representative moves by a rational multiple of t.
LawResult lift_independence(const AlgPtr& alg, Rng& rng, int cases, const RandomBounds& b);
// On T(R) the Hopf axiom fails, but every defect word has a right leg starting with t.
// Returns the location law and a check that some defect exists.
std::vector<LawResult> raw_hopf_defect(const AlgPtr& alg, Rng& rng, int cases, const RandomBounds& b);
// m'(t^p, t^q) = t^(p+q) for p, q <= max_len.
LawResult t_blocks(const AlgPtr& alg, int max_len);
// Words built from blocks x (x) t^p multiply by the pattern sum over blocks; degree-0 symbols only.
LawResult block_law(const AlgPtr& alg, Rng& rng, int cases, const RandomBounds& b);
// A non-commuting pair in R and in A(R).
LawResult noncommutative_pair(const AlgPtr& alg);

} // namespace hta
