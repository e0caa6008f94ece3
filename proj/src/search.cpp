#include "cfs/search.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cfs/error.hpp"
#include "cfs/syntax.hpp"

namespace cfs {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Provable: return "Provable";
        case Verdict::Refuted: return "Refuted";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

const char* to_string(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        case Tri::Unknown: return "unknown";
    }
    return "?";
}

namespace {

constexpr std::size_t kNoLoop = std::numeric_limits<std::size_t>::max();

struct Instance {
    Annotation ann;
    std::vector<Sequent> premises;
};

// All backward rule instances for `s`, in the canonical order, with
// instances yielding the same premise multisets collapsed.
std::vector<Instance> instances(const Sequent& s) {
    std::vector<Instance> out;
    std::set<std::vector<SequentKey>> seen;
    auto add = [&](Annotation ann) {
        ExpectedPremises ex = expected_premises(s, ann);
        if (!ex.ok()) throw Error(ErrorCode::Internal, "search generated a bad instance: " + ex.error);
        std::vector<SequentKey> keys;
        for (const auto& p : ex.premises) keys.push_back(key_of(p));
        // Keys of leaves are empty; distinguish leaf rules by rule only.
        if (!keys.empty() && !seen.insert(keys).second) return;
        out.push_back({std::move(ann), std::move(ex.premises)});
    };
    const auto& a = s.ante;
    const auto& d = s.succ;

    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            if (a[i] == d[j]) return {{Annotation::init(i, j), {}}};
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].is(Kind::Bot)) return {{Annotation::bot_init(i), {}}};

    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].is(Kind::Fp)) add(Annotation::principal(Rule::FixL, i));
    for (std::size_t j = 0; j < d.size(); ++j)
        if (d[j].is(Kind::Fp)) add(Annotation::principal(Rule::FixR, j));
    for (std::size_t j = 0; j < d.size(); ++j)
        if (d[j].is(Kind::Imp)) add(Annotation::principal(Rule::ImpR, j));

    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is(Kind::Imp)) continue;
        std::vector<std::size_t> others;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (k != i) others.push_back(k);
        const std::size_t n = others.size(), m = d.size();
        if (n + m >= 24) throw Error(ErrorCode::InvalidInput, "sequent too wide for split enumeration");
        for (std::size_t lm = 0; lm < (std::size_t{1} << n); ++lm) {
            std::vector<std::size_t> ls;
            for (std::size_t b = 0; b < n; ++b)
                if (lm >> b & 1) ls.push_back(others[b]);
            for (std::size_t rm = 0; rm < (std::size_t{1} << m); ++rm) {
                std::vector<std::size_t> rs;
                for (std::size_t b = 0; b < m; ++b)
                    if (rm >> b & 1) rs.push_back(b);
                add(Annotation::imp_left(i, ls, rs));
            }
        }
    }

    std::vector<std::size_t> boxed;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].is(Kind::Box)) boxed.push_back(i);
    std::size_t combos = 1;
    for (std::size_t k = 0; k < boxed.size(); ++k) {
        combos *= 3;
        if (combos > 600000) throw Error(ErrorCode::InvalidInput, "too many boxed antecedents");
    }
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (!d[j].is(Kind::Box)) continue;
        // Digit 0 = sigma, 1 = pi, 2 = weakened.
        for (std::size_t c = 0; c < combos; ++c) {
            std::vector<std::size_t> sigma, pi;
            std::size_t code = c;
            for (std::size_t k = 0; k < boxed.size(); ++k, code /= 3) {
                if (code % 3 == 0) sigma.push_back(boxed[k]);
                else if (code % 3 == 1) pi.push_back(boxed[k]);
            }
            add(Annotation::box(j, sigma, pi));
        }
    }
    return out;
}

struct Outcome {
    Verdict verdict;
    std::size_t min_loop;  // shallowest ancestor depth a pruned loop pointed to
    std::optional<Proof> proof;
};

class Searcher {
public:
    explicit Searcher(const SearchBudget& b) : budget_(b) {}

    Outcome run(const Sequent& s, std::size_t depth) {
        SequentKey key = key_of(s);
        if (auto it = proved_.find(key); it != proved_.end())
            return {Verdict::Provable, kNoLoop, relayout(it->second, s)};
        if (refuted_.count(key)) return {Verdict::Refuted, kNoLoop, std::nullopt};
        if (auto it = path_.find(key); it != path_.end()) return {Verdict::Refuted, it->second, std::nullopt};
        if (depth >= budget_.max_depth || visited_ >= budget_.max_sequents) return unknown();
        for (const auto& f : s.ante)
            if (f.size() > budget_.max_formula_size) return unknown();
        for (const auto& f : s.succ)
            if (f.size() > budget_.max_formula_size) return unknown();
        ++visited_;

        path_.emplace(key, depth);
        Outcome result{Verdict::Refuted, kNoLoop, std::nullopt};
        bool unknown_seen = false;
        for (auto& inst : instances(s)) {
            std::vector<Proof> subs;
            bool ok = true;
            for (const auto& p : inst.premises) {
                Outcome o = run(p, depth + 1);
                result.min_loop = std::min(result.min_loop, o.min_loop);
                if (o.verdict != Verdict::Provable) {
                    if (o.verdict == Verdict::Unknown) unknown_seen = true;
                    ok = false;
                    break;
                }
                subs.push_back(std::move(*o.proof));
            }
            if (ok) {
                result = {Verdict::Provable, kNoLoop,
                          Proof{s, std::move(inst.ann), std::move(subs)}};
                break;
            }
        }
        path_.erase(key);

        if (result.verdict == Verdict::Provable) {
            proved_.emplace(std::move(key), *result.proof);
            return result;
        }
        if (unknown_seen) return {Verdict::Unknown, result.min_loop, std::nullopt};
        // A refutation that leaned on a loop to a strict ancestor is only
        // valid relative to that branch.
        if (result.min_loop >= depth) {
            refuted_.insert(std::move(key));
            result.min_loop = kNoLoop;
        }
        return result;
    }

    std::size_t visited() const { return visited_; }

private:
    static Outcome unknown() { return {Verdict::Unknown, kNoLoop, std::nullopt}; }

    SearchBudget budget_;
    std::size_t visited_ = 0;
    std::unordered_map<SequentKey, std::size_t, SequentKeyHash> path_;
    std::unordered_map<SequentKey, Proof, SequentKeyHash> proved_;
    std::unordered_set<SequentKey, SequentKeyHash> refuted_;
};

}  // namespace

SearchResult search(const Sequent& goal, const SearchBudget& budget) {
    if (!goal.closed()) throw Error(ErrorCode::NotClosed, "search goal " + to_string(goal) + " is not closed");
    Searcher s(budget);
    Outcome o = s.run(goal, 0);
    SearchResult r;
    r.verdict = o.verdict;
    r.witness = std::move(o.proof);
    r.visited = s.visited();
    return r;
}

Tri equiv(const Formula& a, const Formula& b, const SearchBudget& budget) {
    const Verdict ab = search(Sequent{{a}, {b}}, budget).verdict;
    const Verdict ba = search(Sequent{{b}, {a}}, budget).verdict;
    if (ab == Verdict::Refuted || ba == Verdict::Refuted) return Tri::No;
    if (ab == Verdict::Provable && ba == Verdict::Provable) return Tri::Yes;
    return Tri::Unknown;
}

ProbeResult rule_admissibility_probe(const std::vector<Sequent>& premises, const Sequent& conclusion,
                                     const SearchBudget& budget) {
    ProbeResult r;
    bool all = true;
    for (const auto& p : premises) {
        r.premises.push_back(search(p, budget));
        all = all && r.premises.back().verdict == Verdict::Provable;
    }
    r.conclusion = search(conclusion, budget);
    r.counterexample = all && r.conclusion.verdict == Verdict::Refuted;
    return r;
}

}  // namespace cfs
