#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cfs/bridge.hpp"
#include "cfs/error.hpp"
#include "cfs/search.hpp"
#include "support.hpp"

using namespace cfs;
using namespace cfs::test;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in, "cannot open " << path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
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

TEST_SUITE("bridge") {

TEST_CASE("S condition report matches the golden file") {
    ConseqOracle s = ConseqOracle::s();
    const ConditionReport rep = condition_suite(s, default_samples());
    CHECK(format_report(rep) == slurp(CFS_GOLDEN_DIR "/conditions_s.txt"));
}

TEST_CASE("S condition verdicts") {
    ConseqOracle s = ConseqOracle::s();
    const ConditionReport rep = condition_suite(s, default_samples());
    for (const char* n : {"I1", "I2", "I3", "I4", "conjunction", "L1", "L2", "L3", "weakening", "box-weakening"})
        CHECK_MESSAGE(rep.line(n).verdict == CondVerdict::Holds, n);
    for (const char* n : {"L1", "L2", "L3"}) CHECK(rep.line(n).instances >= 20);
    CHECK(rep.line("contraction").verdict == CondVerdict::Fails);
    const auto& bc = rep.line("box-contraction");
    CHECK(bc.verdict == CondVerdict::Fails);
    REQUIRE(bc.witness.size() == 2);
    CHECK(bc.witness[0] == to_string(S("box p, box p => box (p * p)")) + " provable");
    CHECK(bc.witness[1] == to_string(S("box p => box (p * p)")) + " refuted");
}

TEST_CASE("Sc condition verdicts") {
    ConseqOracle sc = ConseqOracle::sc();
    const ConditionReport rep = condition_suite(sc, default_samples());
    CHECK(rep.ruleset == Ruleset::Sc);
    CHECK(rep.line("contraction").verdict == CondVerdict::Holds);
    CHECK(rep.line("box-contraction").verdict == CondVerdict::Holds);
    CHECK(rep.line("I2").verdict == CondVerdict::Holds);
    for (const auto& l : rep.lines) CHECK_MESSAGE(l.verdict != CondVerdict::Fails, l.name);
}

TEST_CASE("oracle") {
    ConseqOracle s = ConseqOracle::s();
    const Judgment& j = s.judge({}, F("bot -> bot"));
    CHECK(j.verdict == Tri::Yes);
    REQUIRE(j.proof);
    CHECK_FALSE(check_proof(*j.proof, Ruleset::S));
    CHECK(s.judge({}, Formula::box(F("bot -> bot"))).verdict == Tri::Yes);
    CHECK(s.judge(g2_sequent()).verdict == Tri::No);
    CHECK(code_of([&] { s.store(*j.proof); }) == ErrorCode::RulesetUnsupported);

    ConseqOracle sc = ConseqOracle::sc();
    CHECK(sc.judge(g2_sequent()).verdict == Tri::Unknown);
    sc.store(compile_g2_proof(Ruleset::Sc));
    CHECK(sc.judge(g2_sequent()).verdict == Tri::Yes);
}

TEST_CASE("induced boxtimes") {
    CHECK(induced_boxtimes(F("p")) == Formula::box(F("p -> bot")));
    CHECK(g2_sequent().ante == std::vector<Formula>{F("box (box bot -> bot)")});
}

TEST_CASE("APS condition probes in S") {
    ConseqOracle s = ConseqOracle::s();
    const Formula p = goedel_fp("x");
    const ProbeOutcome c3 = aps_condition_probe(s, ApsCondition::C3, p, p);
    CHECK(c3.verdict == CondVerdict::Fails);
    REQUIRE(c3.judgments.size() == 3);
    CHECK(same_sequent(c3.judgments[0].sequent, Sequent{{p}, {Formula::box(p)}}));
    CHECK(c3.judgments[0].verdict == Tri::Yes);
    CHECK(same_sequent(c3.judgments[1].sequent, Sequent{{p}, {induced_boxtimes(p)}}));
    CHECK(c3.judgments[1].verdict == Tri::Yes);
    CHECK(same_sequent(c3.judgments[2].sequent, Sequent{{p}, {induced_boxtimes(top())}}));
    CHECK(c3.judgments[2].verdict == Tri::No);

    CHECK(aps_condition_probe(s, ApsCondition::C2).verdict == CondVerdict::Holds);
    const ProbeOutcome c4 = aps_condition_probe(s, ApsCondition::C4, F("p"));
    CHECK(c4.verdict == CondVerdict::Holds);
    CHECK(aps_condition_probe(s, ApsCondition::C1, F("p"), F("p")).verdict == CondVerdict::Holds);
    CHECK_FALSE(c3.describe().empty());
}

TEST_CASE("consistency triangle") {
    ConseqOracle s = ConseqOracle::s();
    const TriangleReport t = consistency_triangle(s);
    CHECK(t.g2.verdict == Tri::No);
    CHECK(t.premises_hold);
    CHECK(t.implication_holds);
    CHECK(t.c3.verdict == CondVerdict::Fails);
}

TEST_CASE("compiled Sc proof of the formalized second incompleteness theorem") {
    CHECK(code_of([] { compile_g2_proof(Ruleset::S); }) == ErrorCode::RulesetUnsupported);
    const Proof p = compile_g2_proof(Ruleset::Sc);
    CHECK(same_sequent(p.conclusion, g2_sequent()));
    CHECK_FALSE(check_proof(p, Ruleset::Sc));
    const auto e = check_proof(p, Ruleset::S);
    REQUIRE(e);
    CHECK(e->rule == Rule::CtrL);
    // the stored copy is the same tree
    CHECK(same_tree(read_proof_file(CFS_DATA_DIR "/proofs/g2_sc.proof"), p));
    // deterministic
    CHECK(write_proof(compile_g2_proof(Ruleset::Sc)) == write_proof(p));
}

TEST_CASE("fixed point multiplicity") {
    ConseqOracle s = ConseqOracle::s();
    for (std::size_t n : {1u, 3u, 5u}) {
        const FixedPointDemo d = uniqueness_failure_demo(s, n);
        CHECK(d.ok);
        CHECK(d.points.size() == n);
        CHECK(d.cross.size() == n * (n - 1));
        CHECK(d.equivalences.size() == 2 * n);
    }
    CHECK_THROWS_AS(uniqueness_failure_demo(s, 0), Error);
    CHECK_THROWS_AS(uniqueness_failure_demo(s, 6), Error);
    ConseqOracle sc = ConseqOracle::sc();
    CHECK_THROWS_AS(uniqueness_failure_demo(sc, 2), Error);
}

}  // TEST_SUITE
