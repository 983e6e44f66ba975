#include "doctest.h"

#include "hta/io.hpp"
#include "hta/models.hpp"

#include <functional>

using namespace hta;

namespace {

std::string data(const std::string& f) { return std::string(HTA_DATA_DIR) + "/" + f; }

int error_line(const std::function<void()>& f)
{
    try {
        f();
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

} // namespace

TEST_CASE("algebra files")
{
    auto A = parse_algebra(read_file(data("de_rham.alg")));
    CHECK(A->mode() == Mode::dg);
    CHECK(A->nsym() == 2);
    CHECK(differential(parse_element(A, "z^2")) == parse_element(A, "2*z*dz"));
    std::string canon = render_algebra(*A);
    CHECK(canon == "mode dg\ncommutative true\nsymbol z\nsymbol dz deg 1\nd z = dz\n");
    CHECK(render_algebra(*parse_algebra(canon)) == canon);

    // the file form of the polylog model matches the built-in one
    auto P = parse_algebra(read_file(data("polylog.alg")));
    CHECK(render_algebra(*P) == render_algebra(*models::polylog_dg()));
    for (auto* n : {"laurent", "de_rham", "polylog", "crys", "phi_line", "st", "free_xy", "plain:x,y"}) {
        CAPTURE(n);
        std::string s = render_algebra(*builtin_algebra(n));
        CHECK(render_algebra(*parse_algebra(s)) == s);
    }

    // messy but valid input normalizes
    auto M = parse_algebra("  mode   dg # comment\n\nsymbol dz deg 1\nsymbol z\nd z = 1*dz + 0*z\n");
    CHECK(render_algebra(*M) == "mode dg\ncommutative true\nsymbol dz deg 1\nsymbol z\nd z = dz\n");
}

TEST_CASE("algebra file errors carry locations")
{
    CHECK(error_line([] { parse_algebra(read_file(data("broken.alg"))); }) == 4);
    try {
        parse_algebra("mode dg\nsymbol z\nd z = dz ^ 2\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.col >= 7);
    }
    CHECK(error_line([] { parse_algebra("mode dgg\n"); }) == 1);
    CHECK(error_line([] { parse_algebra("symbol x\nsymbol x\n"); }) == 2);
    CHECK(error_line([] { parse_algebra("symbol x deg\n"); }) == 1);
    CHECK(error_line([] { parse_algebra("symbol x\nfrobnicate\n"); }) == 2);
    CHECK_THROWS_AS(parse_algebra("symbol x\nd x = x\n"), Error);
    CHECK_THROWS_AS(parse_algebra("mode dg\nsymbol x\nd x = x\n"), Error);
}

TEST_CASE("word literals")
{
    auto A = models::de_rham();
    HopfElement k = parse_words(A, "[z | dz] - [1/2*z^2 | 1]");
    HopfElement want = HopfElement::from_slots(A, {parse_element(A, "z"), parse_element(A, "dz")}) -
                       HopfElement::from_slots(A, {parse_element(A, "1/2*z^2"), parse_element(A, "1")});
    CHECK(k == want);
    CHECK(parse_words(A, render(k)) == k);
    CHECK(parse_words(A, "0").is_zero());
    CHECK(parse_words(A, "[]") == HopfElement::unit(A));
    CHECK(parse_words(A, "3 + 2*[z]") == HopfElement::unit(A) * Q(3) + HopfElement::from_slots(A, {parse_element(A, "z")}) * Q(2));
    // multilinear slots and the coset rule
    CHECK(parse_words(A, "[z + t | dz]") == parse_words(A, "[z | dz]"));
    CHECK_FALSE(parse_words(A, "[z + t | dz]", false) == parse_words(A, "[z | dz]", false));
    CHECK(parse_words(A, "[t]").is_zero());

    try {
        parse_words(A, "[z | q]", true, 4, 1);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
        CHECK(e.col == 6);
    }
    CHECK_THROWS_AS(parse_words(A, "[z | ]"), ParseError);
    CHECK_THROWS_AS(parse_words(A, "[z"), ParseError);
    CHECK_THROWS_AS(parse_words(A, "[z] [dz]"), ParseError);
    CHECK_THROWS_AS(parse_words(A, "2*z"), ParseError);
}

TEST_CASE("word files")
{
    auto wf = parse_word_file(read_file(data("kernel.hw")), nullptr);
    CHECK(wf.algebra == "de_rham");
    std::string canon = render_word_file(wf);
    CHECK(canon == "algebra de_rham\n[z | dz] - 1/2*[z^2 | 1]\n");
    CHECK(render_word_file(parse_word_file(canon, nullptr)) == canon);
    auto raw = parse_word_file("raw\n[t | z]\n+ [z]\n", models::de_rham());
    CHECK_FALSE(raw.value.coset);
    CHECK(raw.value.terms.size() == 2);
    CHECK(render_word_file(parse_word_file(render_word_file(raw), models::de_rham())) == render_word_file(raw));
    CHECK_THROWS_AS(parse_word_file("[z]", nullptr), Error);
}

TEST_CASE("matrix files")
{
    auto mf = parse_matrix_file(read_file(data("trilog.htm")), nullptr);
    CHECK(mf.algebra == "polylog");
    auto T = trilog_matrix(mf.h.alg);
    for (int i = 0; i < T.dim(); ++i)
        for (int j = 0; j < T.dim(); ++j) CHECK(mf.h.e[i][j] == T.e[i][j]);
    CHECK(mf.h.v0 == T.v0);
    CHECK(mf.h.fn == T.fn);
    std::string canon = render_matrix_file(mf);
    CHECK(render_matrix_file(parse_matrix_file(canon, nullptr)) == canon);
    CHECK(canon.find("entry 3 1 0 0 = 1/2*t*lz^2\n") != std::string::npos);

    try {
        parse_matrix_file(read_file(data("bad_diagonal.htm")), nullptr);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line == 5);
        CHECK(std::string(e.what()).find("block (1,1)") != std::string::npos);
    }

    auto A = models::plain({"x", "y"});
    auto m2 = parse_matrix_file("weights 1\nblocks 2 1\nentry 1 0 0 1 = x\nv0 = 0 1\nfn = 3\n", A);
    CHECK(m2.h.at(1, 0, 0, 1) == parse_element(A, "x"));
    CHECK(m2.h.v0 == std::vector<Q>{0, 1});
    CHECK(period_map(m2.h) == -HopfElement::from_slots(A, {parse_element(A, "3*x")}));
    std::string c2 = render_matrix_file(m2);
    CHECK(render_matrix_file(parse_matrix_file(c2, A)) == c2);

    CHECK(error_line([&] { parse_matrix_file("weights 1\nentry 0 1 0 0 = x\n", A); }) == 2);
    CHECK(error_line([&] { parse_matrix_file("weights 1\nentry 1 0 0 0 = q\n", A); }) == 2);
    CHECK(error_line([&] { parse_matrix_file("weights 1\nentry 1 0 1 0 = x\n", A); }) == 2);
    CHECK(error_line([&] { parse_matrix_file("weights 1\nfn = 1 2\n", A); }) == 2);
    CHECK(error_line([&] { parse_matrix_file("weights 1\nentry 1 0 0 0 = x\nentry 1 0 0 0 = y\n", A); }) == 3);
    CHECK_THROWS_AS(parse_matrix_file("blocks 1\n", A), Error);
    CHECK(error_line([] { parse_matrix_file("weights 1\nentry 1 0 0 0 = dz\n", models::de_rham()); }) == 2);
}
