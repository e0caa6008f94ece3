#include "cfs/sequent.hpp"

#include <algorithm>

#include "cfs/error.hpp"

namespace cfs {

bool Sequent::closed() const {
    auto is_closed = [](const Formula& f) { return f.closed(); };
    return std::all_of(ante.begin(), ante.end(), is_closed) &&
           std::all_of(succ.begin(), succ.end(), is_closed);
}

namespace {

std::vector<Formula> sorted(std::span<const Formula> side) {
    std::vector<Formula> v(side.begin(), side.end());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

bool multiset_equal(std::span<const Formula> a, std::span<const Formula> b) {
    if (a.size() != b.size()) return false;
    std::size_t ha = 0, hb = 0;
    for (const auto& f : a) ha += f.hash();
    for (const auto& f : b) hb += f.hash();
    if (ha != hb) return false;
    return sorted(a) == sorted(b);
}

bool same_sequent(const Sequent& a, const Sequent& b) {
    return multiset_equal(a.ante, b.ante) && multiset_equal(a.succ, b.succ);
}

SequentKey key_of(const Sequent& s) {
    SequentKey k{sorted(s.ante), sorted(s.succ), 0};
    std::size_t h = 0x51ed270b;
    for (const auto& f : k.ante) h = h * 1000003u ^ f.hash();
    h = h * 31u + 0x3d;  // side separator
    for (const auto& f : k.succ) h = h * 1000003u ^ f.hash();
    k.hash = h;
    return k;
}

std::size_t map_occurrence(std::span<const Formula> expected, std::size_t index,
                           std::span<const Formula> actual) {
    const Formula& f = expected[index];
    std::size_t rank = 0;
    for (std::size_t i = 0; i < index; ++i)
        if (expected[i] == f) ++rank;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        if (actual[i] == f) {
            if (rank == 0) return i;
            --rank;
        }
    }
    return actual.size();
}

std::vector<std::size_t> match_lists(std::span<const Formula> source,
                                     std::span<const Formula> target) {
    if (source.size() != target.size())
        throw Error(ErrorCode::Internal, "match_lists: sides differ in length");
    std::vector<std::size_t> out(target.size());
    std::vector<bool> used(source.size(), false);
    for (std::size_t t = 0; t < target.size(); ++t) {
        std::size_t s = 0;
        while (s < source.size() && (used[s] || !(source[s] == target[t]))) ++s;
        if (s == source.size())
            throw Error(ErrorCode::Internal, "match_lists: sides are not multiset-equal");
        used[s] = true;
        out[t] = s;
    }
    return out;
}

std::vector<Formula> without(std::span<const Formula> side, std::size_t index) {
    std::vector<Formula> out;
    out.reserve(side.size());
    for (std::size_t i = 0; i < side.size(); ++i)
        if (i != index) out.push_back(side[i]);
    return out;
}

}  // namespace cfs
