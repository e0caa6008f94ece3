#pragma once

// Admissible structural transformations on cut-free proofs: weakening,
// erasure of the weakening formulas of a box inference, and cut elimination.

#include <cstddef>
#include <vector>

#include "cfs/proof.hpp"

namespace cfs {

// Proof of Sigma, Gamma => Delta, Pi from a proof of Gamma => Delta. The new
// formulas are appended to the root and pushed up to the weakening slots of
// the leaves and box inferences, so the size never grows.
Proof weaken(const Proof& proof, const std::vector<Formula>& add_left,
             const std::vector<Formula>& add_right);

// Removes every weakening occurrence from the root of a BoxRule-final proof.
// Throws NotBoxFinal otherwise.
Proof strip_weakening(const Proof& proof);

struct CutProblem {
    Proof left;              // Gamma => Delta, A
    Proof right;             // A, Sigma => Pi
    std::size_t left_occ;    // succedent index of A in left
    std::size_t right_occ;   // antecedent index of A in right
};

// Layout of the cut conclusion: left antecedent, then the right antecedent
// without the cut occurrence; right succedent, then the left succedent
// without the cut occurrence.
Sequent cut_conclusion(const Sequent& left, std::size_t left_occ, const Sequent& right,
                       std::size_t right_occ);

// Cut-free proof of Gamma, Sigma => Pi, Delta with fewer nodes than the two
// inputs together. Throws CutMismatch when the designated formulas differ,
// InvalidInput when an input does not check under S, and MeasureViolation
// if the size bound is ever broken.
Proof eliminate_cut(const CutProblem& problem);

// Which case of the procedure fired at the top level; exposed for tests.
enum class CutCase {
    LeftWeakening,
    LeftAxiomatic,
    LeftSide,
    RightWeakening,
    RightAxiomatic,
    RightSide,
    BoxUnboxed,
    BoxBoxed,
    FixedPoint,
    Implication,
};

const char* to_string(CutCase c);

CutCase classify_cut(const CutProblem& problem);

}  // namespace cfs
