#include <doctest.h>

#include "cfs/error.hpp"
#include "support.hpp"

using namespace cfs;
using namespace cfs::test;

namespace {

Formula X() { return Formula::var("x"); }

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no exception");
    return ErrorCode::Internal;
}

}  // namespace

TEST_SUITE("formula") {

TEST_CASE("free variables") {
    CHECK(free_vars(Formula::box(X())) == std::set<std::string>{"x"});
    CHECK(free_vars(henkin_fp("x")).empty());
    CHECK(free_vars(Formula::imp(X(), henkin_fp("x"))) == std::set<std::string>{"x"});
    CHECK(henkin_fp("x").closed());
    CHECK_FALSE(Formula::box(X()).closed());
}

TEST_CASE("modalized") {
    CHECK(is_modalized(Formula::box(X()), "x"));
    CHECK_FALSE(is_modalized(X(), "x"));
    CHECK_FALSE(is_modalized(Formula::imp(X(), Formula::box(X())), "x"));
    CHECK(is_modalized(Formula::atom("p"), "x"));
}

TEST_CASE("substitution") {
    CHECK(substitute(Formula::box(X()), henkin_fp("x"), "x") == Formula::box(henkin_fp("x")));
    CHECK(substitute(henkin_fp("x"), Formula::bot(), "x") == henkin_fp("x"));
    CHECK(substitute(Formula::imp(X(), Formula::bot()), Formula::bot(), "x") ==
          Formula::imp(Formula::bot(), Formula::bot()));
    CHECK(code_of([] { substitute(Formula::box(X()), Formula::var("y"), "x"); }) ==
          ErrorCode::NonClosedSubstituend);
}

TEST_CASE("fixed point constructors") {
    CHECK(mk_fp("x", Formula::box(X())) == henkin_fp("x"));
    CHECK(code_of([] { mk_fp("x", X()); }) == ErrorCode::NotModalized);
    const Formula g = goedel_fp("x");
    REQUIRE(g.is(Kind::Fp));
    CHECK(g.name() == "x");
    CHECK(g.body() == Formula::box(Formula::imp(X(), Formula::bot())));
    CHECK(unfold(g) == Formula::box(Formula::imp(g, Formula::bot())));
    CHECK(unfold(henkin_fp("x")) == Formula::box(henkin_fp("x")));
}

TEST_CASE("graphic identity") {
    CHECK(henkin_fp("x") != henkin_fp("y"));
    CHECK(F("fp $x. box $x") == henkin_fp("x"));
    CHECK(F("fp $y. box $y") == henkin_fp("y"));
    CHECK(F("fp $x. box $x").hash() == henkin_fp("x").hash());
}

TEST_CASE("derived connectives expand exactly") {
    const Formula a = Formula::atom("a"), b = Formula::atom("b"), bot = Formula::bot();
    CHECK(top() == Formula::imp(bot, bot));
    CHECK(neg(a) == Formula::imp(a, bot));
    CHECK(tensor(a, b) == Formula::imp(Formula::imp(a, Formula::imp(b, bot)), bot));
    CHECK(F("top") == top());
    CHECK(F("~ a") == neg(a));
    CHECK(F("(a * b)") == tensor(a, b));
    CHECK(to_string(F("(a * b)")) == "(a -> b -> bot) -> bot");
}

TEST_CASE("parsing") {
    CHECK(F("p -> q -> r") == Formula::imp(F("p"), Formula::imp(F("q"), F("r"))));
    CHECK(F("box p -> q") == Formula::imp(F("box p"), F("q")));
    // fp scopes to the end of the formula
    CHECK(F("fp $x. box $x -> bot") == mk_fp("x", Formula::imp(Formula::box(X()), Formula::bot())));
    CHECK(F("(fp $x. box $x) -> bot") == Formula::imp(henkin_fp("x"), Formula::bot()));
    CHECK(F("q1") == Formula::atom("q1"));
    CHECK(F("box $x") == Formula::box(X()));

    CHECK_THROWS_AS(F("p ->"), ParseError);
    CHECK_THROWS_AS(F("(p"), ParseError);
    CHECK_THROWS_AS(F("p q"), ParseError);
    CHECK_THROWS_AS(F("fp x. box x"), ParseError);
    // the parser reports the guard failure with a position
    CHECK_THROWS_WITH_AS(F("fp $x. $x"), doctest::Contains("not modalized"), ParseError);
    try {
        F("box (p -> )");
        FAIL("accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 10);
    }
}

TEST_CASE("sequent parsing") {
    const Sequent s = S("p, box q => r");
    CHECK(s.ante == std::vector<Formula>{F("p"), F("box q")});
    CHECK(s.succ == std::vector<Formula>{F("r")});
    CHECK(S("=>").ante.empty());
    CHECK(to_string(S("fp $x. box $x, p => bot")) == "fp $x. box $x, p => bot");
    CHECK_THROWS_AS(S("p, => q"), ParseError);
}

TEST_CASE("property: print then parse is the identity") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 3000; ++i) {
        const Formula a = random_formula(rng, 5);
        const std::string text = to_string(a);
        INFO(text);
        REQUIRE(F(text) == a);
        REQUIRE(to_string(F(text)) == text);
    }
}

TEST_CASE("property: mk_fp output is guarded and substitution closes") {
    std::mt19937_64 rng(11);
    int fps = 0;
    for (int i = 0; i < 3000; ++i) {
        const Formula a = random_formula(rng, 5);
        REQUIRE(a.closed());
        if (a.is(Kind::Fp)) {
            ++fps;
            REQUIRE(is_modalized(a.body(), a.name()));
            REQUIRE(unfold(a).closed());
        }
        // A with free x only, closed substituend
        const Formula open = Formula::imp(a, Formula::box(X()));
        REQUIRE(substitute(open, a, "x").closed());
    }
    CHECK(fps > 100);
}

}  // TEST_SUITE
