#pragma once

#include <random>
#include <string>
#include <vector>

#include "cfs/formula.hpp"
#include "cfs/proof.hpp"
#include "cfs/proof_io.hpp"
#include "cfs/syntax.hpp"

namespace cfs::test {

inline Formula F(const std::string& text) { return parse_formula(text); }
inline Sequent S(const std::string& text) { return parse_sequent(text); }
inline Proof P(const std::string& text) { return read_proof(text); }

inline bool same_tree(const Proof& a, const Proof& b) {
    if (a.conclusion.ante != b.conclusion.ante || a.conclusion.succ != b.conclusion.succ) return false;
    if (!(a.annotation == b.annotation) || a.premises.size() != b.premises.size()) return false;
    for (std::size_t i = 0; i < a.premises.size(); ++i)
        if (!same_tree(a.premises[i], b.premises[i])) return false;
    return true;
}

// Random formula over atoms p, q and the given bound variables; fp bodies
// are guarded by construction (the variable only appears under a box).
inline Formula random_formula(std::mt19937_64& rng, int depth, std::vector<std::string>& bound,
                              bool guarded = true) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 6);
    switch (pick(rng)) {
        case 0: return Formula::bot();
        case 1: return Formula::atom(rng() % 2 ? "p" : "q");
        case 2:
            if (!bound.empty() && guarded) return Formula::var(bound[rng() % bound.size()]);
            return Formula::atom("r");
        case 3:
        case 4: {
            Formula l = random_formula(rng, depth - 1, bound, false);
            return Formula::imp(l, random_formula(rng, depth - 1, bound, false));
        }
        case 5: return Formula::box(random_formula(rng, depth - 1, bound, true));
        default: {
            const std::string x = "x" + std::to_string(bound.size());
            bound.push_back(x);
            Formula body = Formula::box(random_formula(rng, depth - 1, bound, true));
            if (rng() % 2) body = Formula::imp(random_formula(rng, depth - 2, bound, false), body);
            bound.pop_back();
            return mk_fp(x, body);
        }
    }
}

inline Formula random_formula(std::mt19937_64& rng, int depth) {
    std::vector<std::string> bound;
    return random_formula(rng, depth, bound);
}

}  // namespace cfs::test
