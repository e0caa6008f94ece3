#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cfs/enumerate.hpp"
#include "cfs/error.hpp"
#include "support.hpp"

using namespace cfs;
using namespace cfs::test;

namespace {

const char* kFProof =
    "(FixR (seq () (fp $x. bot -> box $x)) (prin 0)"
    "  (ImpR (seq () (bot -> box (fp $x. bot -> box $x))) (prin 0)"
    "    (BotInit (seq (bot) (box (fp $x. bot -> box $x))) (bot 0))))";

const std::vector<Proof>& base_pool() {
    static const std::vector<Proof> pool =
        enumerate_proofs({F("bot"), F("p"), F("box p"), F("p -> bot"), F("box bot")});
    return pool;
}

const std::vector<Proof>& fp_pool() {
    static const std::vector<Proof> pool = enumerate_proofs({goedel_fp("x"), henkin_fp("x"), F("p")});
    return pool;
}

// Visits every node with its path from the root.
template <class Fn>
void each_node(Proof& p, std::vector<std::size_t>& path, Fn&& fn) {
    fn(p, path);
    for (std::size_t i = 0; i < p.premises.size(); ++i) {
        path.push_back(i);
        each_node(p.premises[i], path, fn);
        path.pop_back();
    }
}

Proof& at(Proof& p, const std::vector<std::size_t>& path) {
    Proof* q = &p;
    for (std::size_t i : path) q = &q->premises[i];
    return *q;
}

const Formula& designated(const Proof& n, std::size_t idx, bool ante) {
    return ante ? n.conclusion.ante[idx] : n.conclusion.succ[idx];
}

}  // namespace

TEST_SUITE("proof") {

TEST_CASE("check_node examples") {
    CHECK_FALSE(check_node(P("(Init (seq (box bot) (box bot)) (ax 0 0))"), Ruleset::S));
    const auto e = check_node(P("(BoxRule (seq (p) (box p)) (prin 0 (sigma 0) (pi))"
                                "  (Init (seq (p) (p)) (ax 0 0)))"),
                              Ruleset::S);
    REQUIRE(e);
    CHECK(e->rule == Rule::BoxRule);
    CHECK_FALSE(check_proof(P("(BoxRule (seq (q, box p) (box box p, r)) (prin 0 (sigma) (pi 1))"
                              "  (Init (seq (box p) (box p)) (ax 0 0)))"),
                            Ruleset::S));
}

TEST_CASE("check_proof examples") {
    const Proof f = P(kFProof);
    CHECK_FALSE(check_proof(f, Ruleset::S));
    CHECK(proof_size(f) == 3);
    CHECK(proof_depth(f) == 3);

    const Proof with_ctr = P(
        "(FixR (seq () (fp $x. bot -> box $x)) (prin 0)"
        "  (ImpR (seq () (bot -> box (fp $x. bot -> box $x))) (prin 0)"
        "    (CtrL (seq (bot) (box (fp $x. bot -> box $x))) (ctr 0 1)"
        "      (BotInit (seq (bot, bot) (box (fp $x. bot -> box $x))) (bot 0)))))");
    const auto e = check_proof(with_ctr, Ruleset::S);
    REQUIRE(e);
    CHECK(e->rule == Rule::CtrL);
    CHECK(e->path == std::vector<std::size_t>{0, 0});
    CHECK(e->describe().find("not in ruleset S") != std::string::npos);
    CHECK_FALSE(check_proof(with_ctr, Ruleset::Sc));

    CHECK_FALSE(check_proof(P("(BotInit (seq (p, bot) (q)) (bot 1))"), Ruleset::S));
    CHECK(proof_size(P("(BotInit (seq (p, bot) (q)) (bot 1))")) == 1);
}

TEST_CASE("init may designate either copy of a repeated formula") {
    CHECK_FALSE(check_proof(P("(Init (seq (p, p) (p)) (ax 1 0))"), Ruleset::S));
    CHECK(check_proof(P("(Init (seq (p, q) (p)) (ax 1 0))"), Ruleset::S));
}

TEST_CASE("box premise has exactly one succedent formula") {
    const auto e = check_node(P("(BoxRule (seq (box p) (box p)) (prin 0 (sigma 0) (pi))"
                                "  (Init (seq (p) (p, q)) (ax 0 0)))"),
                              Ruleset::S);
    CHECK(e);
}

TEST_CASE("cut node") {
    const Proof cut = P(
        "(Cut (seq (box p) (box box box p)) (cut 0 0)"
        "  (BoxRule (seq (box p) (box box p)) (prin 0 (sigma) (pi 0)) (Init (seq (box p) (box p)) (ax 0 0)))"
        "  (BoxRule (seq (box box p) (box box box p)) (prin 0 (sigma) (pi 0))"
        "    (Init (seq (box box p) (box box p)) (ax 0 0))))");
    CHECK_FALSE(check_proof(cut, Ruleset::Sc));
    REQUIRE(check_proof(cut, Ruleset::S));
    CHECK(check_proof(cut, Ruleset::S)->rule == Rule::Cut);

    Proof bad = cut;
    bad.conclusion.succ[0] = F("box p");
    CHECK(check_proof(bad, Ruleset::Sc));
}

TEST_CASE("proof file round trip") {
    for (const auto* pool : {&base_pool(), &fp_pool()}) {
        for (const Proof& p : *pool) {
            const std::string text = write_proof(p);
            const Proof q = read_proof(text);
            REQUIRE(same_tree(p, q));
            REQUIRE(write_proof(q) == text);
        }
    }
}

TEST_CASE("ImpL splits survive a round trip") {
    const Proof p = P(
        "(ImpL (seq (p -> q, p, r) (q, s)) (prin 0 (lsplit 2) (rsplit 0))"
        "  (Init (seq (r, q) (q)) (ax 1 0))"
        "  (Init (seq (p) (p, s)) (ax 0 0)))");
    CHECK(p.annotation.left_split == std::vector<std::size_t>{2});
    CHECK(p.annotation.right_split == std::vector<std::size_t>{0});
    CHECK_FALSE(check_proof(p, Ruleset::S));
    CHECK(same_tree(read_proof(write_proof(p)), p));
}

TEST_CASE("proof file errors") {
    CHECK_THROWS_AS(P("(Foo (seq () (p)) (prin 0))"), ParseError);
    CHECK_THROWS_AS(P("(Init (seq (p) (p)) (prin 0))"), ParseError);
    CHECK_THROWS_AS(P("(Init (seq (p) (p)) (ax 0 0)) extra"), ParseError);
    CHECK_THROWS_AS(P("(Init (seq (p) (p)) (ax 0))"), ParseError);
    CHECK_THROWS_AS(read_proof_file("/nonexistent/file.proof"), Error);
}

TEST_CASE("property: every enumerated proof checks and has no CtrL or Cut") {
    REQUIRE(base_pool().size() > 300);
    REQUIRE(fp_pool().size() > 300);
    for (const auto* pool : {&base_pool(), &fp_pool()})
        for (const Proof& p : *pool) {
            REQUIRE_FALSE(check_proof(p, Ruleset::S));
            REQUIRE(proof_size(p) <= 3);
        }
}

TEST_CASE("property: mutations are rejected") {
    std::size_t mutations = 0;
    for (const Proof& original : base_pool()) {
        Proof work = original;
        std::vector<std::size_t> path;
        std::vector<std::vector<std::size_t>> paths;
        each_node(work, path, [&](Proof&, const std::vector<std::size_t>& p) { paths.push_back(p); });

        for (const auto& where : paths) {
            const Proof& node = at(work, where);
            const Annotation& a = node.annotation;
            const bool first_is_ante = a.rule == Rule::Init || a.rule == Rule::BotInit ||
                                       a.rule == Rule::FixL || a.rule == Rule::ImpL;
            const std::size_t n = first_is_ante ? node.conclusion.ante.size() : node.conclusion.succ.size();

            // Move the designated index to an occurrence of a different formula.
            for (std::size_t k = 0; k < n; ++k) {
                if (designated(node, k, first_is_ante) == designated(node, a.first, first_is_ante)) continue;
                Proof m = original;
                Annotation& ma = at(m, where).annotation;
                ma.first = k;
                if (ma.rule == Rule::ImpL) {
                    // keep the partition total
                    auto& ls = ma.left_split;
                    std::replace(ls.begin(), ls.end(), k, a.first);
                }
                ++mutations;
                REQUIRE(check_proof(m, Ruleset::S));
            }
            // Out-of-range index.
            {
                Proof m = original;
                at(m, where).annotation.first = n + 3;
                ++mutations;
                REQUIRE(check_proof(m, Ruleset::S));
            }
            // Extra formula in each premise's conclusion.
            for (std::size_t i = 0; i < node.premises.size(); ++i) {
                Proof m = original;
                at(m, where).premises[i].conclusion.succ.push_back(F("q"));
                ++mutations;
                REQUIRE(check_proof(m, Ruleset::S));
            }
            // Swapped premises.
            if (node.premises.size() == 2 &&
                !same_sequent(node.premises[0].conclusion, node.premises[1].conclusion)) {
                Proof m = original;
                std::swap(at(m, where).premises[0], at(m, where).premises[1]);
                ++mutations;
                REQUIRE(check_proof(m, Ruleset::S));
            }
            // Dropped premise.
            if (!node.premises.empty()) {
                Proof m = original;
                at(m, where).premises.pop_back();
                ++mutations;
                REQUIRE(check_proof(m, Ruleset::S));
            }
        }
    }
    CHECK(mutations > 1000);
}

TEST_CASE("property: relayout preserves validity") {
    std::mt19937_64 rng(3);
    for (const Proof& p : fp_pool()) {
        Sequent t = p.conclusion;
        std::shuffle(t.ante.begin(), t.ante.end(), rng);
        std::shuffle(t.succ.begin(), t.succ.end(), rng);
        const Proof q = relayout(p, t);
        REQUIRE(q.conclusion.ante == t.ante);
        REQUIRE(q.conclusion.succ == t.succ);
        REQUIRE_FALSE(check_proof(q, Ruleset::S));
        REQUIRE(proof_size(q) == proof_size(p));
    }
    CHECK_THROWS_AS(relayout(P("(Init (seq (p) (p)) (ax 0 0))"), S("q => p")), Error);
}

}  // TEST_SUITE
