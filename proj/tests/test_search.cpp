#include <doctest.h>

#include <unordered_set>

#include "cfs/enumerate.hpp"
#include "cfs/error.hpp"
#include "cfs/search.hpp"
#include "support.hpp"

using namespace cfs;
using namespace cfs::test;

namespace {

Verdict verdict(const std::string& s) {
    const SearchResult r = search(S(s));
    if (r.witness) REQUIRE_FALSE(check_proof(*r.witness, Ruleset::S));
    if (r.witness) REQUIRE(same_sequent(r.witness->conclusion, S(s)));
    return r.verdict;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("refuted sequents") {
    CHECK(verdict("box (box bot -> bot) => box bot") == Verdict::Refuted);
    CHECK(verdict("=> fp $x. box $x") == Verdict::Refuted);
    CHECK(verdict("fp $x. box $x => fp $y. box $y") == Verdict::Refuted);
    CHECK(verdict("=> ~ box bot") == Verdict::Refuted);
    CHECK(verdict("box p => box (p * p)") == Verdict::Refuted);
    CHECK(verdict("p => q") == Verdict::Refuted);
}

TEST_CASE("provable sequents") {
    CHECK(verdict("box (p -> q), box p => box q") == Verdict::Provable);
    CHECK(verdict("box p => box box p") == Verdict::Provable);
    CHECK(verdict("box p, box p => box (p * p)") == Verdict::Provable);
    CHECK(verdict("p, bot => q") == Verdict::Provable);
    CHECK(verdict("=> fp $x. bot -> box $x") == Verdict::Provable);
    CHECK(verdict("fp $x. box $x => box (fp $x. box $x)") == Verdict::Provable);

    const Formula g = goedel_fp("x");
    CHECK(search(Sequent{{g}, {unfold(g)}}).verdict == Verdict::Provable);
    CHECK(search(Sequent{{unfold(g)}, {g}}).verdict == Verdict::Provable);
}

TEST_CASE("equiv") {
    CHECK(equiv(goedel_fp("x"), unfold(goedel_fp("x"))) == Tri::Yes);
    CHECK(equiv(goedel_fp("x"), goedel_fp("y")) == Tri::No);
    CHECK(equiv(F("p"), F("p")) == Tri::Yes);
}

TEST_CASE("budget and input errors") {
    SearchBudget tiny;
    tiny.max_sequents = 2;
    CHECK(search(S("box (box bot -> bot) => box bot"), tiny).verdict == Verdict::Unknown);
    SearchBudget shallow;
    shallow.max_depth = 1;
    CHECK(search(S("box p => box box p"), shallow).verdict == Verdict::Unknown);
    try {
        search(Sequent{{}, {Formula::var("x")}});
        FAIL("accepted open goal");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotClosed);
    }
}

TEST_CASE("rule admissibility probes") {
    const Formula a = henkin_fp("x"), ba = Formula::box(a);
    const ProbeResult loeb = rule_admissibility_probe({Sequent{{ba}, {a}}}, Sequent{{}, {a}});
    CHECK(loeb.counterexample);
    REQUIRE(loeb.premises.size() == 1);
    CHECK(loeb.premises[0].verdict == Verdict::Provable);
    CHECK(loeb.conclusion.verdict == Verdict::Refuted);

    const ProbeResult hen = rule_admissibility_probe({Sequent{{ba}, {a}}, Sequent{{a}, {ba}}}, Sequent{{}, {a}});
    CHECK(hen.counterexample);
    for (const auto& p : hen.premises) {
        REQUIRE(p.witness);
        CHECK_FALSE(check_proof(*p.witness, Ruleset::S));
    }

    const ProbeResult weak = rule_admissibility_probe({S("p => p")}, S("q, p => p"));
    CHECK_FALSE(weak.counterexample);
    CHECK(weak.conclusion.verdict == Verdict::Provable);
}

TEST_CASE("property: deterministic verdicts and witnesses") {
    for (const char* s : {"box (p -> q), box p => box q", "fp $x. box ($x -> bot) => box ((fp $x. box ($x -> bot)) -> bot)",
                          "box (box bot -> bot) => box bot", "box p, box p => box (p * p)"}) {
        const SearchResult a = search(S(s)), b = search(S(s));
        CHECK(a.verdict == b.verdict);
        CHECK(a.visited == b.visited);
        CHECK(a.witness.has_value() == b.witness.has_value());
        if (a.witness) CHECK(write_proof(*a.witness) == write_proof(*b.witness));
    }
}

TEST_CASE("property: search agrees with enumeration") {
    const std::vector<Formula> vocab{F("p"), F("box p"), F("bot"), F("p -> bot"), F("box (p -> bot)")};
    EnumerationConfig cfg;
    cfg.max_weakening = 2;
    const auto proofs = enumerate_proofs(vocab, cfg);
    std::unordered_set<SequentKey, SequentKeyHash> provable;
    for (const Proof& p : proofs) provable.insert(key_of(p.conclusion));

    // every enumerated conclusion is found by search
    for (const auto& k : provable) {
        const SearchResult r = search(Sequent{k.ante, k.succ});
        REQUIRE(r.verdict == Verdict::Provable);
        REQUIRE_FALSE(check_proof(*r.witness, Ruleset::S));
    }

    // refuted sequents are never enumerated; small witnesses always are
    const auto closure = formula_closure(vocab, 0);
    std::size_t refuted = 0, checked = 0;
    for (const Formula& a : closure)
        for (const Formula& b : closure)
            for (const Formula& c : closure) {
                const Sequent s{{a, b}, {c}};
                const SearchResult r = search(s);
                REQUIRE(r.verdict != Verdict::Unknown);
                ++checked;
                if (r.verdict == Verdict::Refuted) {
                    ++refuted;
                    REQUIRE(provable.count(key_of(s)) == 0);
                } else {
                    REQUIRE_FALSE(check_proof(*r.witness, Ruleset::S));
                    if (proof_size(*r.witness) <= 3 && s.formula_count() <= 4)
                        REQUIRE(provable.count(key_of(s)) == 1);
                }
            }
    CHECK(checked > 100);
    CHECK(refuted > 10);
}

}  // TEST_SUITE
