#pragma once

#include "hta/linalg.hpp"
#include "hta/words.hpp"

#include <map>
#include <string>
#include <vector>

namespace hta {

// Content grading: a nonnegative integer vector per symbol, preserved by d.
// Classes are named after their first symbol.
struct ContentClasses {
    std::vector<std::string> names;
    std::vector<std::vector<int>> of_symbol; // of_symbol[s][k]
};

// Throws Error when the differential rules do not admit a finite content grading.
ContentClasses content_classes(const Algebra& alg);

struct MultiDegree {
    int t_total = 0;
    std::map<std::string, int> symbol_degrees; // by content class name; absent means 0
    int coh_degree = 0;
};

std::string render(const MultiDegree& md);

// Finite slot enumeration. In phi modes every slot has phi degree 1 (so t is forced);
// otherwise slot t exponents are bounded by the total spread (sum of |t exponents|) or
// by a per-slot window.
struct SlotBounds {
    int spread = -1;          // total spread bound, -1 for none
    int t_lo = -3, t_hi = 3;  // per-slot window, used when spread < 0
};

class SlotEnumerator {
public:
    SlotEnumerator(AlgPtr alg, const MultiDegree& md, int max_coh);
    const ContentClasses& classes() const { return cc_; }
    const std::vector<int>& target() const { return target_; }
    // symbol parts (t exponent 0) with their content and degree
    struct Part {
        Monomial m;
        std::vector<int> content;
        int coh, phi;
    };
    const std::vector<Part>& parts() const { return parts_; }
    std::vector<int> content(const Monomial& m) const;
    // Every word of the given weight with all slots of degree <= max_coh, matching md.
    std::vector<Word> words(int weight, const SlotBounds& b, int fixed_coh = -1) const;
    // Monomials with t exponent md.t_total, matching content and of the given degree.
    std::vector<Monomial> monomials(int coh) const;
    const AlgPtr& alg() const { return alg_; }

private:
    AlgPtr alg_;
    MultiDegree md_;
    ContentClasses cc_;
    std::vector<int> target_;
    std::vector<Part> parts_;
};

struct CobarComplex {
    int weight = 0;
    MultiDegree md;
    int spread = 0;
    std::map<int, std::vector<Bar>> basis;       // by total degree
    std::map<int, SparseMatrix> boundary;        // degree k -> k+1
    std::map<int, SparseMatrix> boundary_coprod; // the restricted-coproduct part alone
    std::map<int, SparseMatrix> boundary_D;      // the internal part alone
};

enum class CobarPart { both, coproduct, internal };

// Total degree of a bar word: sum of (deg a_i + 1).
int bar_degree(const Algebra& alg, const Bar& b);
Tensor cobar_differential(const AlgPtr& alg, const Bar& b, CobarPart part = CobarPart::both);

// spread < 0 picks a default large enough for the desk-scale checks.
CobarComplex build_cobar(const AlgPtr& alg, int n, const MultiDegree& md, int spread = -1);
std::map<int, int> homology_ranks(const CobarComplex& c);
bool boundary_squares_to_zero(const CobarComplex& c);

// k(n) -> R^0 -> R^1 -> ... -> R^{n-1}, degrees 0..n.
struct DeligneComplex {
    int weight = 0;
    MultiDegree md;
    std::map<int, std::vector<Monomial>> basis;
    std::map<int, SparseMatrix> boundary;
};

DeligneComplex build_deligne(const AlgPtr& alg, int n, const MultiDegree& md);
std::map<int, int> homology_ranks(const DeligneComplex& c);

struct DeligneReport {
    int weight = 0;
    MultiDegree md;
    std::map<int, int> cobar, deligne;
    bool agree = false;
};

DeligneReport deligne_compare(const AlgPtr& alg, int n, const MultiDegree& md, int spread = -1);

} // namespace hta
