#pragma once

// Role-annotated proof trees and the proof checker.
//
// Every node records its conclusion together with an explicit annotation
// that fixes the role of each occurrence in the final inference. The
// checker reconstructs the premises the rule demands from the conclusion
// and the annotation, then compares them with the stored premises up to
// multiset equality. It never searches for an annotation.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cfs/sequent.hpp"

namespace cfs {

enum class Rule { Init, BotInit, FixL, FixR, ImpL, ImpR, BoxRule, CtrL, Cut };

const char* to_string(Rule r);

enum class Ruleset { S, Sc };

const char* to_string(Ruleset r);

// Index conventions, all 0-based:
//   Init     first = antecedent index, second = succedent index (axiomatic pair)
//   BotInit  first = antecedent index of bot
//   FixL/ImpL      first = antecedent index of the principal formula
//   FixR/ImpR/BoxRule  first = succedent index of the principal formula
//   ImpL     left_split/right_split: antecedent/succedent occurrences of the
//            conclusion sent to the first premise (Gamma, B => Delta); all
//            other side occurrences go to the second premise (Sigma => A, Pi)
//   BoxRule  sigma: boxed antecedent occurrences stripped of their box in the
//            premise; pi: boxed occurrences carried over boxed. Every other
//            occurrence is a weakening formula.
//   CtrL     first = antecedent index of the contracted formula in the
//            conclusion; second = position of the extra copy in the premise
//   Cut      first = succedent index of the cut formula in the left premise,
//            second = its antecedent index in the right premise
struct Annotation {
    Rule rule = Rule::Init;
    std::size_t first = 0;
    std::size_t second = 0;
    std::vector<std::size_t> left_split;
    std::vector<std::size_t> right_split;
    std::vector<std::size_t> sigma;
    std::vector<std::size_t> pi;

    static Annotation init(std::size_t ante, std::size_t succ);
    static Annotation bot_init(std::size_t ante);
    static Annotation principal(Rule rule, std::size_t index);
    static Annotation imp_left(std::size_t index, std::vector<std::size_t> left_split,
                               std::vector<std::size_t> right_split);
    static Annotation box(std::size_t index, std::vector<std::size_t> sigma,
                          std::vector<std::size_t> pi);
    static Annotation contraction(std::size_t ante, std::size_t premise_pos);
    static Annotation cut(std::size_t left_succ, std::size_t right_ante);

    friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct Proof {
    Sequent conclusion;
    Annotation annotation;
    std::vector<Proof> premises;

    const Sequent& root() const { return conclusion; }
    Rule rule() const { return annotation.rule; }
};

std::size_t proof_size(const Proof& p);
std::size_t proof_depth(const Proof& p);

struct CheckError {
    // Premise indices from the root down to the failing node.
    std::vector<std::size_t> path;
    Rule rule = Rule::Init;
    std::string message;

    std::string describe() const;
};

// Premise sequents demanded by the node's conclusion and annotation, in a
// fixed layout; returns an error message instead when the annotation does
// not fit the conclusion. Cut has no conclusion-determined premises and
// yields an empty list.
struct ExpectedPremises {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::vector<Sequent> premises;
    // For each premise position, the conclusion index it was copied from
    // (same side), or npos for formulas introduced by the rule.
    std::vector<std::vector<std::size_t>> ante_origin;
    std::vector<std::vector<std::size_t>> succ_origin;
    std::string error;

    bool ok() const { return error.empty(); }
};

ExpectedPremises expected_premises(const Sequent& conclusion, const Annotation& ann);

bool rule_in(Rule r, Ruleset rs);

// Checks only the final inference of `node`.
std::optional<CheckError> check_node(const Proof& node, Ruleset rs);

// Checks every node, children before parents, premises left to right; the
// first failing node in that order is reported.
std::optional<CheckError> check_proof(const Proof& proof, Ruleset rs);

// Same proof with its root conclusion rearranged to `target`, which must be
// multiset-equal to the current root. Only the root annotation changes.
Proof relayout(Proof proof, const Sequent& target);

// Annotation of `ann` after the conclusion's antecedent and succedent have
// been renumbered (old index -> new index).
Annotation renumber(const Annotation& ann, const std::vector<std::size_t>& ante_map,
                    const std::vector<std::size_t>& succ_map);

}  // namespace cfs
