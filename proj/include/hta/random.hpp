#pragma once

#include "hta/words.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace hta {

struct RandomBounds {
    int max_exp = 2;       // symbol exponents
    int t_lo = -3, t_hi = 3;
    int max_terms = 4;     // terms per random element
    int coef_bound = 100;  // numerators and denominators
};

// Deterministic across platforms: only the raw mt19937_64 stream is used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t raw() { return g_(); }
    int uniform(int lo, int hi) { return lo + int(g_() % std::uint64_t(hi - lo + 1)); }
    bool coin() { return g_() & 1; }

    Q rational(int bound)
    {
        int n = uniform(-bound, bound);
        int d = uniform(1, bound);
        Q q(n, d);
        q.canonicalize();
        return q;
    }
    Q nonzero_rational(int bound)
    {
        Q q = 0;
        while (q == 0) q = rational(bound);
        return q;
    }

    // Monomial with the requested cohomological degree (and phi degree in phi modes,
    // in which case the t exponent is forced). Returns nullopt when not reached.
    std::optional<Monomial> monomial(const Algebra& alg, int coh, const RandomBounds& b, std::optional<int> phi = {})
    {
        for (int tries = 0; tries < 64; ++tries) {
            Monomial m;
            int deg = 0, ph = 0;
            std::vector<std::pair<int, int>> f;
            for (int i = 0; i < alg.nsym(); ++i) {
                const auto& s = alg.sym(i);
                int e;
                if (alg.odd(i))
                    e = uniform(0, 1);
                else if (s.invertible)
                    e = uniform(-b.max_exp, b.max_exp);
                else
                    e = uniform(0, b.max_exp);
                if (uniform(0, 2) == 0) e = 0;
                if (e) f.push_back({i, e});
                deg += e * s.coh;
                ph += e * s.phi;
            }
            if (deg != coh) continue;
            if (!alg.commutative()) {
                // random order of runs for the free case
                for (size_t k = f.size(); k > 1; --k) std::swap(f[k - 1], f[uniform(0, int(k) - 1)]);
                Monomial acc, tmp;
                for (auto& p : f) {
                    Monomial one;
                    one.f.push_back(p);
                    if (alg.mul_mono(acc, one, tmp) == 0) goto retry;
                    acc = tmp;
                }
                m.f = acc.f;
            } else {
                m.f = f;
            }
            if (phi) {
                m.t = *phi - ph;
                if (m.t < b.t_lo - 8 || m.t > b.t_hi + 8) continue;
            } else {
                m.t = uniform(b.t_lo, b.t_hi);
            }
            return m;
        retry:;
        }
        return std::nullopt;
    }

    Element element(const AlgPtr& alg, int coh, const RandomBounds& b, std::optional<int> phi = {})
    {
        Element e(alg);
        int n = uniform(1, b.max_terms);
        for (int k = 0; k < n; ++k) {
            auto m = monomial(*alg, coh, b, phi);
            if (m) e.add_term(*m, nonzero_rational(b.coef_bound));
        }
        return e;
    }

    // Monomial word of exactly the given weight; slot degrees are random where possible.
    Word word(const Algebra& alg, int wt, const RandomBounds& b, bool phi_slots = false, bool coset = true)
    {
        for (;;) {
            Word w;
            int r = wt;
            bool ok = true;
            while (r > 0) {
                int d = uniform(0, r - 1);
                if (uniform(0, 1)) d = 0;
                std::optional<int> ph;
                if (phi_slots) ph = 1;
                auto m = monomial(alg, d, b, ph);
                if (!m) m = monomial(alg, 0, b, ph);
                if (!m) {
                    ok = false;
                    break;
                }
                w.push_back(*m);
                r -= 1 + alg.coh(*m);
            }
            if (!ok || r != 0) continue;
            if (coset && w[0].is_t_pow(1)) continue;
            return w;
        }
    }

    HopfElement hopf(const AlgPtr& alg, int wt, const RandomBounds& b, bool phi_slots = false, int max_words = 3)
    {
        HopfElement h(alg, true);
        if (wt == 0) return HopfElement::unit(alg) * nonzero_rational(b.coef_bound);
        int n = uniform(1, max_words);
        for (int k = 0; k < n; ++k) h.add_term(word(*alg, wt, b, phi_slots), nonzero_rational(b.coef_bound));
        return h;
    }

private:
    std::mt19937_64 g_;
};

} // namespace hta
