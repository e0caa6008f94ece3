#pragma once

// Batch property sweeps. Each has a serial reference version and an OpenMP
// version; both return identical statistics for identical input.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cfs/proof.hpp"
#include "cfs/transform.hpp"

namespace cfs {

inline constexpr std::size_t kCutCaseCount = 10;

struct CutSweepStats {
    std::size_t pairs = 0;
    std::size_t violations = 0;
    std::array<std::size_t, kCutCaseCount> cases{};  // indexed by CutCase
    std::size_t output_nodes = 0;
    std::size_t input_nodes = 0;
    std::string first_violation;  // lowest-numbered failing problem

    friend bool operator==(const CutSweepStats&, const CutSweepStats&) = default;
};

// Every compatible cut between proofs in `pool`: each succedent occurrence
// of a left proof against each antecedent occurrence of an equal formula
// in a right proof.
std::vector<CutProblem> all_cut_pairs(const std::vector<Proof>& pool);

// `count` compatible cut problems drawn uniformly from `pool` with a seeded
// generator, keeping only those where a cut proof mentions an fp formula.
std::vector<CutProblem> random_fp_cut_pairs(const std::vector<Proof>& pool, std::size_t count,
                                            std::uint64_t seed);

// Runs eliminate_cut on each problem and checks the result: it passes the
// S checker, proves the expected root, and is smaller than both inputs
// together.
CutSweepStats cut_sweep_serial(const std::vector<CutProblem>& problems);
CutSweepStats cut_sweep_parallel(const std::vector<CutProblem>& problems);

struct WeakeningJob {
    Proof proof;
    std::vector<Formula> add_left, add_right;
};

struct WeakeningSweepStats {
    std::size_t proofs = 0;
    std::size_t violations = 0;
    std::size_t size_before = 0;
    std::size_t size_after = 0;
    std::string first_violation;

    friend bool operator==(const WeakeningSweepStats&, const WeakeningSweepStats&) = default;
};

// Pairs each proof with random addition multisets (up to `max_add` formulas
// per side) drawn from `formulas`.
std::vector<WeakeningJob> weakening_jobs(const std::vector<Proof>& proofs,
                                         const std::vector<Formula>& formulas, std::size_t max_add,
                                         std::uint64_t seed);

WeakeningSweepStats weakening_sweep_serial(const std::vector<WeakeningJob>& jobs);
WeakeningSweepStats weakening_sweep_parallel(const std::vector<WeakeningJob>& jobs);

struct ApsSweepStats {
    std::size_t instances = 0;
    std::size_t passing = 0;              // preorder and C1-C5 hold
    std::size_t with_fixed_point = 0;     // passing and a Goedelian fixed point exists
    std::size_t uniqueness_violations = 0;  // passing, yet uniqueness fails
    std::size_t relabel_mismatches = 0;   // verdicts change under renaming
    std::size_t primed_only = 0;          // C3' and C5' hold but C3 or C5 fails
    std::size_t primed_only_non_unique = 0;  // ... with inequivalent fixed points

    friend bool operator==(const ApsSweepStats&, const ApsSweepStats&) = default;
};

// All 3^3 x 3^3 box/boxtimes tables on the chain bot < m < top.
ApsSweepStats aps_sweep_serial();
ApsSweepStats aps_sweep_parallel();

}  // namespace cfs
