#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cfs/formula.hpp"

namespace cfs {

// Gamma => Delta. Sides are stored as ordered lists so that annotations can
// address individual occurrences; equality of sequents is multiset equality.
struct Sequent {
    std::vector<Formula> ante;
    std::vector<Formula> succ;

    bool closed() const;
    std::size_t formula_count() const { return ante.size() + succ.size(); }
};

bool multiset_equal(std::span<const Formula> a, std::span<const Formula> b);
bool same_sequent(const Sequent& a, const Sequent& b);

// Both sides sorted; two sequents are multiset-equal iff their keys are equal.
struct SequentKey {
    std::vector<Formula> ante;
    std::vector<Formula> succ;
    std::size_t hash = 0;

    friend bool operator==(const SequentKey&, const SequentKey&) = default;
    friend std::strong_ordering operator<=>(const SequentKey&, const SequentKey&) = default;
};

SequentKey key_of(const Sequent& s);

struct SequentKeyHash {
    std::size_t operator()(const SequentKey& k) const noexcept { return k.hash; }
};

// Index of the occurrence in `actual` matching expected[index]: the k-th
// copy of a formula in `expected` maps to the k-th copy in `actual`.
// Returns actual.size() if there is no such copy.
std::size_t map_occurrence(std::span<const Formula> expected, std::size_t index,
                           std::span<const Formula> actual);

// Bijection target -> source between two multiset-equal lists; the k-th copy
// of each formula in target is paired with the k-th copy in source.
std::vector<std::size_t> match_lists(std::span<const Formula> source,
                                     std::span<const Formula> target);

std::vector<Formula> without(std::span<const Formula> side, std::size_t index);

}  // namespace cfs
