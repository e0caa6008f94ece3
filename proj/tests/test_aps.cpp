#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cfs/aps.hpp"
#include "cfs/error.hpp"
#include "cfs/sweep.hpp"

using namespace cfs;

namespace {

std::vector<bool> verdicts(const std::vector<ConditionResult>& r) {
    std::vector<bool> v;
    for (const auto& c : r) v.push_back(c.holds);
    return v;
}

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

TEST_SUITE("aps") {

TEST_CASE("singleton instance passes everything") {
    const auto r = check_conditions(singleton_aps());
    for (const auto& c : r) CHECK_MESSAGE(c.holds, c.name);
    CHECK_FALSE(singleton_aps().consistent());
}

TEST_CASE("APS3 fixture") {
    const ApsInstance a = aps3();
    const auto r = check_conditions(a);
    CHECK(passes_c1_c5(r));
    CHECK(holds(r, "C3'"));
    CHECK(holds(r, "C5'"));
    CHECK(a.consistent());
    const auto fps = goedelian_fixed_points(a);
    REQUIRE(fps.size() == 1);
    CHECK(a.names[fps[0]] == "p");
}

TEST_CASE("broken C2 reports its witness") {
    ApsInstance a = aps3();
    a.boxtimes[a.bot] = a.bot;
    const auto r = check_conditions(a);
    CHECK_FALSE(holds(r, "C2"));
    const auto it = std::find_if(r.begin(), r.end(), [](const auto& c) { return c.name == "C2"; });
    REQUIRE(it != r.end());
    CHECK_FALSE(it->detail.empty());
    CHECK(format_report(a, r).find("C2 fails") != std::string::npos);
}

TEST_CASE("parsing") {
    const ApsInstance a =
        parse_aps("carrier a b c ; top c ; bot a ; leq a b, b c, a c, a a, b b, c c ; box a->b b->c c->c ;"
                  " boxtimes a->c b->b c->b");
    CHECK(a.size() == 3);
    CHECK(a.le(a.index_of("a"), a.index_of("c")));
    CHECK_FALSE(a.le(a.index_of("c"), a.index_of("a")));
    CHECK(a.box[a.index_of("a")] == a.index_of("b"));

    // transitivity is validated, not repaired
    const ApsInstance t = parse_aps("carrier a b c ; top c ; bot a ; leq a b, b c ; box a->a b->b c->c ;"
                                    " boxtimes a->a b->b c->c");
    CHECK_FALSE(holds(check_conditions(t), "transitivity"));

    CHECK(code_of([] { parse_aps("carrier a b ; top b ; bot a ; leq a b ; box a->b ; boxtimes a->a b->b"); }) ==
          ErrorCode::InvalidInput);
    CHECK(code_of([] { parse_aps("carrier a b ; top b ; bot a ; leq a z ; box a->b b->b ; boxtimes a->a b->b"); }) ==
          ErrorCode::InvalidInput);
    CHECK(code_of([] { parse_aps("top b ; carrier a b"); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { parse_aps("carrier a a ; top a ; bot a ; leq ; box a->a ; boxtimes a->a"); }) ==
          ErrorCode::InvalidInput);
    CHECK(code_of([] { read_aps_file("/nonexistent.aps"); }) == ErrorCode::InvalidInput);
}

TEST_CASE("text round trip") {
    const ApsInstance a = aps3();
    const ApsInstance b = parse_aps(to_text(a));
    CHECK(b.names == a.names);
    CHECK(b.leq == a.leq);
    CHECK(b.box == a.box);
    CHECK(b.boxtimes == a.boxtimes);
}

TEST_CASE("g2 trace") {
    const ApsInstance a = aps3();
    const DerivationTrace tr = g2_trace(a, a.index_of("p"));
    REQUIRE(tr.steps.size() == 5);
    CHECK(tr.steps[0].rule == TraceRule::C4);
    CHECK(tr.steps[2].rule == TraceRule::C3);
    CHECK(tr.steps[4].rule == TraceRule::Trans);
    const Elem t = a.boxtimes[a.top];
    CHECK(tr.steps.back().lhs == a.boxtimes[t]);
    CHECK(tr.steps.back().rhs == t);
    CHECK_FALSE(validate_trace(a, tr));
    CHECK(format_trace(a, tr).find("C3") != std::string::npos);

    DerivationTrace bad = tr;
    bad.steps[2].rhs = a.bot;
    CHECK(validate_trace(a, bad));

    CHECK(code_of([&] { g2_trace(a, a.top); }) == ErrorCode::NotFixedPoint);
    CHECK(code_of([&] { g2_consistency_check(a, a.bot); }) == ErrorCode::NotFixedPoint);
}

TEST_CASE("g2 trace reports a missing condition") {
    // p is a fixed point but C3 fails at (p, p): boxtimes p <= boxtimes top
    // would need p <= bot.
    ApsInstance a = aps3();
    a.boxtimes[a.top] = a.bot;
    CHECK_FALSE(holds(check_conditions(a), "C3"));
    try {
        g2_trace(a, a.index_of("p"));
        FAIL("derived a trace");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConditionMissing);
    }
}

TEST_CASE("consistency and uniqueness on APS3") {
    const ApsInstance a = aps3();
    CHECK(g2_consistency_check(a, a.index_of("p")).holds);
    const Verdict2 u = uniqueness_check(a);
    CHECK(u.holds);
}

TEST_CASE("property: verdicts are stable under relabeling") {
    const ApsInstance a = aps3();
    std::vector<Elem> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    const auto base = verdicts(check_conditions(a));
    do {
        const ApsInstance b = relabel(a, perm);
        CHECK(verdicts(check_conditions(b)) == base);
        CHECK(goedelian_fixed_points(b).size() == goedelian_fixed_points(a).size());
        CHECK(uniqueness_check(b).holds);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("property: chain sweep") {
    const ApsSweepStats s = aps_sweep_serial();
    CHECK(s.instances == 729);
    CHECK(s.passing > 0);
    CHECK(s.with_fixed_point > 0);
    CHECK(s.uniqueness_violations == 0);
    CHECK(s.relabel_mismatches == 0);
    CHECK(aps_sweep_parallel() == s);
}

}  // TEST_SUITE
