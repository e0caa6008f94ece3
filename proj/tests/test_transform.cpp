#include <doctest.h>

#include "cfs/enumerate.hpp"
#include "cfs/error.hpp"
#include "cfs/search.hpp"
#include "cfs/sweep.hpp"
#include "cfs/transform.hpp"
#include "support.hpp"

using namespace cfs;
using namespace cfs::test;

namespace {

const char* kFProof =
    "(FixR (seq () (fp $x. bot -> box $x)) (prin 0)"
    "  (ImpR (seq () (bot -> box (fp $x. bot -> box $x))) (prin 0)"
    "    (BotInit (seq (bot) (box (fp $x. bot -> box $x))) (bot 0))))";

const char* kFLeft =
    "(FixL (seq (fp $x. bot -> box $x) (bot -> bot)) (prin 0)"
    "  (ImpR (seq (bot -> box (fp $x. bot -> box $x)) (bot -> bot)) (prin 0)"
    "    (BotInit (seq (bot -> box (fp $x. bot -> box $x), bot) (bot)) (bot 1))))";

const char* kBox4 = "(BoxRule (seq (box p) (box box p)) (prin 0 (sigma) (pi 0)) (Init (seq (box p) (box p)) (ax 0 0)))";
const char* kBox4Up =
    "(BoxRule (seq (box box p) (box box box p)) (prin 0 (sigma) (pi 0))"
    "  (Init (seq (box box p) (box box p)) (ax 0 0)))";

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no exception");
    return ErrorCode::Internal;
}

void check_cut_output(const CutProblem& pr, const Proof& out) {
    REQUIRE_FALSE(check_proof(out, Ruleset::S));
    CHECK(same_sequent(out.conclusion, cut_conclusion(pr.left.conclusion, pr.left_occ, pr.right.conclusion, pr.right_occ)));
    CHECK(proof_size(out) < proof_size(pr.left) + proof_size(pr.right));
}

}  // namespace

TEST_SUITE("transform") {

TEST_CASE("weaken examples") {
    const Proof init = P("(Init (seq (p) (p)) (ax 0 0))");
    const Proof w = weaken(init, {F("q")}, {});
    CHECK(same_sequent(w.conclusion, S("q, p => p")));
    CHECK(proof_size(w) == 1);
    CHECK_FALSE(check_proof(w, Ruleset::S));

    const Proof f = P(kFProof);
    const Proof wf = weaken(f, {F("box bot")}, {});
    CHECK(same_sequent(wf.conclusion, S("box bot => fp $x. bot -> box $x")));
    CHECK(proof_size(wf) == 3);
    CHECK_FALSE(check_proof(wf, Ruleset::S));

    CHECK(same_tree(weaken(f, {}, {}), f));
}

TEST_CASE("strip_weakening examples") {
    const Proof p = P("(BoxRule (seq (q, box p) (box box p, r)) (prin 0 (sigma) (pi 1))"
                      "  (Init (seq (box p) (box p)) (ax 0 0)))");
    const Proof s = strip_weakening(p);
    CHECK(same_sequent(s.conclusion, S("box p => box box p")));
    CHECK(proof_size(s) == proof_size(p));
    CHECK_FALSE(check_proof(s, Ruleset::S));

    const Proof bare = P(kBox4);
    CHECK(same_tree(strip_weakening(bare), bare));

    const Proof impr = P("(ImpR (seq () (p -> p)) (prin 0) (Init (seq (p) (p)) (ax 0 0)))");
    CHECK(code_of([&] { strip_weakening(impr); }) == ErrorCode::NotBoxFinal);
}

TEST_CASE("eliminate_cut examples") {
    SUBCASE("axiomatic") {
        const Proof a = P("(Init (seq (box p) (box p)) (ax 0 0))");
        const CutProblem pr{a, a, 0, 0};
        const Proof out = eliminate_cut(pr);
        check_cut_output(pr, out);
        CHECK(proof_size(out) == 1);
        CHECK(same_sequent(out.conclusion, S("box p => box p")));
    }
    SUBCASE("fixed point then implication") {
        const CutProblem pr{P(kFProof), P(kFLeft), 0, 0};
        CHECK(classify_cut(pr) == CutCase::FixedPoint);
        const Proof out = eliminate_cut(pr);
        check_cut_output(pr, out);
        CHECK(same_sequent(out.conclusion, S("=> bot -> bot")));
        CHECK(proof_size(out) <= 5);
    }
    SUBCASE("box against boxed active") {
        const CutProblem pr{P(kBox4), P(kBox4Up), 0, 0};
        CHECK(classify_cut(pr) == CutCase::BoxBoxed);
        const Proof out = eliminate_cut(pr);
        check_cut_output(pr, out);
        CHECK(same_sequent(out.conclusion, S("box p => box box box p")));
        CHECK(proof_size(out) < 6);
    }
}

TEST_CASE("eliminate_cut input errors") {
    const Proof b = P(kBox4);
    CHECK(code_of([&] { eliminate_cut({b, b, 0, 0}); }) == ErrorCode::CutMismatch);
    try {
        eliminate_cut({b, b, 0, 0});
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("cut formulas differ") != std::string::npos);
    }
    CHECK(code_of([&] { eliminate_cut({b, P(kBox4Up), 1, 0}); }) == ErrorCode::InvalidInput);
    const Proof bad = P("(Init (seq (p) (box box p)) (ax 0 0))");
    CHECK(code_of([&] { eliminate_cut({bad, P(kBox4Up), 0, 0}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("property: cut elimination over a small exhaustive pool") {
    const auto pool = enumerate_proofs({F("p"), F("box p"), F("bot"), F("p -> bot")});
    const auto problems = all_cut_pairs(pool);
    REQUIRE(problems.size() > 1000);
    const CutSweepStats st = cut_sweep_serial(problems);
    INFO(st.first_violation);
    CHECK(st.violations == 0);
    CHECK(st.pairs == problems.size());
    CHECK(st.output_nodes < st.input_nodes);
}

TEST_CASE("property: every cut case is exercised") {
    const auto pool = enumerate_proofs({F("bot"), F("p"), F("box p"), F("p -> bot"), F("box bot")});
    const auto problems = all_cut_pairs(pool);
    std::array<std::size_t, kCutCaseCount> seen{};
    for (const auto& pr : problems) ++seen[static_cast<std::size_t>(classify_cut(pr))];
    auto fp = enumerate_proofs({goedel_fp("x"), F("p")});
    for (const auto& pr : random_fp_cut_pairs(fp, 300, 1)) ++seen[static_cast<std::size_t>(classify_cut(pr))];
    for (std::size_t c = 0; c < kCutCaseCount; ++c) {
        INFO(to_string(static_cast<CutCase>(c)));
        CHECK(seen[c] > 0);
    }
}

TEST_CASE("property: cut on search witnesses with fixed points") {
    const Formula g = goedel_fp("x"), u = unfold(goedel_fp("x"));
    const auto l = search(Sequent{{g}, {u}});
    const auto r = search(Sequent{{u}, {g}});
    REQUIRE(l.witness);
    REQUIRE(r.witness);
    const CutProblem there_and_back{*l.witness, *r.witness, 0, 0};
    check_cut_output(there_and_back, eliminate_cut(there_and_back));
    const CutProblem back_and_there{*r.witness, *l.witness, 0, 0};
    check_cut_output(back_and_there, eliminate_cut(back_and_there));
}

TEST_CASE("property: weakening keeps size and composes") {
    const auto vocab = std::vector<Formula>{goedel_fp("x"), F("p"), F("box p")};
    const auto pool = enumerate_proofs(vocab);
    const auto extra = formula_closure(vocab, 1);
    std::mt19937_64 rng(9);
    for (const Proof& p : pool) {
        const Formula a = extra[rng() % extra.size()], b = extra[rng() % extra.size()];
        const Proof w1 = weaken(p, {a}, {b});
        REQUIRE_FALSE(check_proof(w1, Ruleset::S));
        REQUIRE(proof_size(w1) <= proof_size(p));
        const Proof w2 = weaken(w1, {b}, {});
        const Proof both = weaken(p, {a, b}, {b});
        REQUIRE(same_sequent(w2.conclusion, both.conclusion));
        REQUIRE(proof_size(w2) == proof_size(both));
        REQUIRE(same_tree(weaken(p, {}, {}), p));
    }
}

TEST_CASE("property: strip_weakening undoes box weakening") {
    const auto pool = enumerate_proofs({F("p"), F("box p"), F("box bot")});
    std::size_t boxes = 0;
    for (const Proof& p : pool) {
        if (p.rule() != Rule::BoxRule) continue;
        ++boxes;
        const Proof s = strip_weakening(p);
        REQUIRE_FALSE(check_proof(s, Ruleset::S));
        REQUIRE(proof_size(s) == proof_size(p));
        const std::size_t kept = p.annotation.sigma.size() + p.annotation.pi.size();
        REQUIRE(s.conclusion.ante.size() == kept);
        REQUIRE(s.conclusion.succ.size() == 1);
        REQUIRE(same_sequent(strip_weakening(weaken(s, {F("q")}, {F("p")})).conclusion, s.conclusion));
    }
    CHECK(boxes > 20);
}

}  // TEST_SUITE
