#include "doctest.h"

#include "hta/models.hpp"
#include "hta/polylog.hpp"
#include "hta/random.hpp"

using namespace hta;

namespace {

AlgPtr vars() { return models::plain({"x", "y", "z", "u", "v", "w"}); }

LiIndex I(const AlgPtr& a, const std::string& s) { return parse_li_index(a, s); }

LiCombination C(const AlgPtr& a, std::initializer_list<std::pair<const char*, int>> terms)
{
    LiCombination c;
    for (auto& [s, q] : terms) c[I(a, s)] += q;
    return c;
}

} // namespace

TEST_CASE("index parsing and rendering")
{
    auto A = vars();
    auto i = I(A, "1,2:x,y*z");
    CHECK(i.p == std::vector<int>{1, 2});
    CHECK(i.weight() == 3);
    CHECK(render(*A, i) == "Li_{1,2}(x,y*z)");
    CHECK_THROWS_AS(I(A, "1,2:x"), Error);
    CHECK_THROWS_AS(I(A, "0:x"), Error);
    CHECK_THROWS_AS(I(A, "1:t"), Error);
    CHECK_THROWS_AS(I(A, "1:q"), ParseError);
}

TEST_CASE("stuffle identities")
{
    auto A = vars();
    CHECK(stuffle(A, I(A, "1:x"), I(A, "1:y")) == C(A, {{"1,1:x,y", 1}, {"1,1:y,x", 1}, {"2:x*y", -1}}));
    CHECK(stuffle(A, I(A, "1:x"), I(A, "1,1:y,z")) ==
          C(A, {{"1,1,1:x,y,z", 1}, {"1,1,1:y,x,z", 1}, {"1,1,1:y,z,x", 1}, {"2,1:x*y,z", -1}, {"1,2:y,x*z", -1}}));
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
            std::string a = std::to_string(p), b = std::to_string(q), ab = std::to_string(p + q);
            LiCombination want;
            want[I(A, a + "," + b + ":x,y")] += 1;
            want[I(A, b + "," + a + ":y,x")] += 1;
            want[I(A, ab + ":x*y")] -= 1;
            CHECK(stuffle(A, I(A, a + ":x"), I(A, b + ":y")) == want);
        }
    CHECK_THROWS_AS(stuffle(A, I(A, "1:x"), I(A, "1,1:y,x")), Error);
    CHECK_THROWS_AS(stuffle(A, I(A, "1:x*y"), I(A, "1:y")), Error);
}

TEST_CASE("series expansion")
{
    auto A = vars();
    auto s = series_expand(A, I(A, "1:x"), 3);
    TruncatedSeries want{3, {}};
    want.c[{1, 0, 0, 0, 0, 0}] = 1;
    want.c[{2, 0, 0, 0, 0, 0}] = Q(1, 2);
    want.c[{3, 0, 0, 0, 0, 0}] = Q(1, 3);
    CHECK(s == want);
    auto s2 = series_expand(A, I(A, "2:x"), 2);
    CHECK(s2.c.size() == 2);
    CHECK(s2.c[{2, 0, 0, 0, 0, 0}] == Q(1, 4));
    auto s3 = series_expand(A, I(A, "1,1:x,y"), 3);
    CHECK(s3.c[{1, 2, 0, 0, 0, 0}] == Q(1, 2));
    CHECK(s3.c[{1, 1, 0, 0, 0, 0}] == 1);
    CHECK(s3.c.count({2, 1, 0, 0, 0, 0}) == 0);
}

TEST_CASE("series oracle confirms the stuffle")
{
    auto A = vars();
    int checked = 0;
    for (int wa = 1; wa <= 3; ++wa)
        for (int wb = 1; wa + wb <= 4; ++wb)
            for (auto& a : indices_of_weight(A, wa, 0, 3))
                for (auto& b : indices_of_weight(A, wb, int(a.p.size()), 3 - int(a.p.size()))) {
                    if (a.p.size() + b.p.size() > 3) continue;
                    auto lhs = series_expand(A, stuffle(A, a, b), 12);
                    auto rhs = series_mul(series_expand(A, a, 12), series_expand(A, b, 12));
                    CAPTURE(render(*A, a));
                    CAPTURE(render(*A, b));
                    CHECK(lhs == rhs);
                    ++checked;
                }
    CHECK(checked == 14);
}

TEST_CASE("stuffle is commutative and associative")
{
    auto A = vars();
    Rng rng(41);
    auto pick = [&](int first) {
        auto all = indices_of_weight(A, rng.uniform(1, 4), first, 2);
        return all[rng.uniform(0, int(all.size()) - 1)];
    };
    for (int it = 0; it < 30; ++it) {
        LiIndex a = pick(0), b = pick(2), c = pick(4);
        CHECK(stuffle(A, a, b) == stuffle(A, b, a));
        LiCombination ca{{a, 1}}, cb{{b, 1}}, cc{{c, 1}};
        CHECK(stuffle(A, stuffle(A, ca, cb), cc) == stuffle(A, ca, stuffle(A, cb, cc)));
    }
}

TEST_CASE("FORC words")
{
    auto A = vars();
    Monomial t1;
    t1.t = 1;
    auto x = parse_element(A, "x").terms.begin()->first;
    auto y = parse_element(A, "y").terms.begin()->first;
    Monomial xt = x, yt = y;
    xt.t = -1;
    yt.t = -1;
    CHECK(forc(A, I(A, "2:x")) == HopfElement::word(A, {xt, t1}, 1, false));
    CHECK(forc(A, I(A, "1:x")) == HopfElement::word(A, {x}, 1, false));
    CHECK(forc(A, I(A, "1,2:x,y")) == HopfElement::word(A, {x, yt, t1}, 1, false));
}

TEST_CASE("FORC turns the stuffle into m'")
{
    auto A = vars();
    CHECK(check_T16(A, I(A, "1:x"), I(A, "1:y")));
    CHECK(check_T16(A, I(A, "1:x"), I(A, "1,1:y,z")));
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) CHECK(check_T16(A, I(A, std::to_string(p) + ":x"), I(A, std::to_string(q) + ":y")));
    int checked = 0;
    for (int wa = 1; wa <= 4; ++wa)
        for (int wb = 1; wa + wb <= 5; ++wb)
            for (auto& a : indices_of_weight(A, wa, 0, 3))
                for (auto& b : indices_of_weight(A, wb, 3, 3)) {
                    CAPTURE(render(*A, a));
                    CAPTURE(render(*A, b));
                    CHECK(check_T16(A, a, b));
                    ++checked;
                }
    CHECK(checked == 47);
}

TEST_CASE("FORC does not respect coproducts")
{
    auto A = vars();
    auto c = forc_coproduct_counterexample(A, 2);
    CHECK(c.index == I(A, "2:x"));
    CHECK(c.index_side.is_zero());
    CHECK_FALSE(c.forc_side.is_zero());
    CHECK(c.forc_side != c.index_side);
}
