#pragma once

// Forward, bottom-up enumeration of small S proofs; a test oracle for the
// checker, the search and the transforms.

#include <cstddef>
#include <vector>

#include "cfs/proof.hpp"

namespace cfs {

struct EnumerationConfig {
    std::size_t max_size = 3;
    // Weakening formulas added at each Init, BotInit or BoxRule node.
    std::size_t max_weakening = 1;
    // No sequent in an emitted proof has more formulas than this.
    std::size_t max_sequent_formulas = 4;
};

// Closed subformulas of the vocabulary, closed under fp-unfolding for
// `rounds` rounds. Sorted, duplicate-free.
std::vector<Formula> formula_closure(const std::vector<Formula>& vocabulary, std::size_t rounds);

// Every S proof up to max_size nodes whose formulas lie in the closure,
// each in a canonical layout, ordered by size and then by generation order.
// Every emitted proof checks.
std::vector<Proof> enumerate_proofs(const std::vector<Formula>& vocabulary,
                                    const EnumerationConfig& config = {});

}  // namespace cfs
