#pragma once

// S and Sc viewed as consequence relations with an implication: condition
// probes over fixed sample grids, the induced refutability operator, and a
// constructed Sc proof of the formalized second incompleteness theorem.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cfs/proof.hpp"
#include "cfs/search.hpp"

namespace cfs {

struct Judgment {
    Sequent sequent;
    Tri verdict = Tri::Unknown;
    std::optional<Proof> proof;  // set iff verdict is Yes; checks under the oracle's ruleset
};

// Decides Gamma |- phi. The S oracle runs backward search. The Sc oracle
// answers Yes from S search or from its table of stored Sc proofs, and
// Unknown otherwise; it never answers No.
class ConseqOracle {
public:
    static ConseqOracle s(SearchBudget budget = {});
    static ConseqOracle sc(SearchBudget budget = {});

    Ruleset ruleset() const { return ruleset_; }
    const Judgment& judge(const std::vector<Formula>& gamma, const Formula& phi);
    const Judgment& judge(const Sequent& s);

    // Sc only. The proof must check under Sc and have exactly one succedent.
    void store(const Proof& proof);

private:
    ConseqOracle(Ruleset rs, SearchBudget b) : ruleset_(rs), budget_(b) {}

    Ruleset ruleset_;
    SearchBudget budget_;
    std::unordered_map<SequentKey, Judgment, SequentKeyHash> memo_;
    std::unordered_map<SequentKey, Proof, SequentKeyHash> stored_;
};

enum class CondVerdict { Holds, Fails, Inconclusive };

const char* to_string(CondVerdict v);

struct ConditionLine {
    std::string name;
    CondVerdict verdict = CondVerdict::Holds;
    std::size_t instances = 0;
    // For Fails: the premise and conclusion judgments of the first failing
    // instance, each as "sequent [verdict]".
    std::vector<std::string> witness;
};

struct ConditionReport {
    Ruleset ruleset = Ruleset::S;
    std::vector<Formula> samples;
    std::vector<ConditionLine> lines;

    const ConditionLine& line(const std::string& name) const;
};

// Version tag of the grids below; bump when a grid changes.
inline constexpr int kSampleGridVersion = 1;

// p, q, bot, box p.
std::vector<Formula> default_samples();
// Modal formulas used for the L1/L2/L3 and box-rule grids.
std::vector<Formula> modal_grid();

ConditionReport condition_suite(ConseqOracle& oracle, const std::vector<Formula>& samples);

// One line per condition: `NAME verdict instances=N [witness ; witness]`.
std::string format_report(const ConditionReport& report);

// box (A -> bot)
Formula induced_boxtimes(const Formula& a);

enum class ApsCondition { C1, C2, C3, C4 };

const char* to_string(ApsCondition c);

struct ProbeOutcome {
    CondVerdict verdict = CondVerdict::Holds;
    std::vector<Judgment> judgments;  // every judgment consulted, in order

    std::string describe() const;
};

// Checks one instance of C1-C4 for the structure induced on the oracle's
// consequence relation: x <= y iff x |- y, boxtimes = induced_boxtimes.
// C2 ignores x and y; C4 ignores y.
ProbeOutcome aps_condition_probe(ConseqOracle& oracle, ApsCondition c, const Formula& x = {},
                                 const Formula& y = {});

struct TriangleReport {
    Judgment g2;                        // box (box bot -> bot) => box bot
    ProbeOutcome c1_box, c1_boxtimes, c2, c4, c3;
    bool premises_hold = false;         // g2 refuted and C1, C2, C4 hold
    bool implication_holds = false;     // premises_hold implies c3 fails
};

// If the formalized second incompleteness sequent is refuted in S while C1,
// C2 and C4 hold at the instances its derivation needs, then C3 must fail
// at (P, P) for P = goedel_fp(var).
TriangleReport consistency_triangle(ConseqOracle& oracle, const std::string& var = "x");

// box (box bot -> bot) => box bot
Sequent g2_sequent();

// An Sc proof of g2_sequent(). Only the contraction step uses CtrL, and it
// is the first node an S check meets, so checking under S fails there.
// Throws RulesetUnsupported for S.
Proof compile_g2_proof(Ruleset ruleset, const std::string& var = "x");

struct FixedPointDemo {
    std::vector<Formula> points;
    std::vector<Judgment> cross;         // P_i => P_j for i != j, expected refuted
    std::vector<Judgment> equivalences;  // P_i => boxtimes P_i and back, expected provable
    bool ok = false;
};

// goedel_fp over variables x1..xn, with every pair checked inequivalent and
// every point checked to be a fixed point. Requires the S oracle, n <= 5.
FixedPointDemo uniqueness_failure_demo(ConseqOracle& oracle, std::size_t n);

}  // namespace cfs
