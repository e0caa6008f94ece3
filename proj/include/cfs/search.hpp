#pragma once

// Backward proof search for S with branch-local loop pruning.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cfs/proof.hpp"

namespace cfs {

struct SearchBudget {
    std::size_t max_depth = 64;
    std::size_t max_sequents = 200000;
    std::size_t max_formula_size = 200;
};

enum class Verdict { Provable, Refuted, Unknown };

const char* to_string(Verdict v);

struct SearchResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<Proof> witness;  // set iff Provable; checks under S
    std::size_t visited = 0;       // sequents expanded
};

// Every rule instance is tried in a fixed order, so the verdict and the
// witness are deterministic. A branch is pruned when its sequent repeats an
// ancestor. Sequents are not required to be closed by the caller; an open
// goal is rejected with NotClosed.
SearchResult search(const Sequent& goal, const SearchBudget& budget = {});

enum class Tri { Yes, No, Unknown };

const char* to_string(Tri t);

// Yes iff both A => B and B => A are provable, No if either is refuted.
Tri equiv(const Formula& a, const Formula& b, const SearchBudget& budget = {});

struct ProbeResult {
    bool counterexample = false;  // every premise provable, conclusion refuted
    std::vector<SearchResult> premises;
    SearchResult conclusion;
};

// Tests one instance of a rule for admissibility in S.
ProbeResult rule_admissibility_probe(const std::vector<Sequent>& premises, const Sequent& conclusion,
                                     const SearchBudget& budget = {});

}  // namespace cfs
