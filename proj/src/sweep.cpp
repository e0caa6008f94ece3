#include "cfs/sweep.hpp"

#include <limits>
#include <map>
#include <random>

#include <omp.h>

#include "cfs/aps.hpp"
#include "cfs/error.hpp"
#include "cfs/proof_io.hpp"

namespace cfs {

namespace {

bool mentions_fp(const Formula& f) {
    switch (f.kind()) {
        case Kind::Fp: return true;
        case Kind::Imp: return mentions_fp(f.left()) || mentions_fp(f.right());
        case Kind::Box: return mentions_fp(f.body());
        default: return false;
    }
}

bool mentions_fp(const Proof& p) {
    for (const auto& f : p.conclusion.ante)
        if (mentions_fp(f)) return true;
    for (const auto& f : p.conclusion.succ)
        if (mentions_fp(f)) return true;
    for (const auto& q : p.premises)
        if (mentions_fp(q)) return true;
    return false;
}

struct CutOutcome {
    bool ok = true;
    CutCase kind = CutCase::LeftWeakening;
    std::size_t in = 0, out = 0;
    std::string why;
};

CutOutcome run_cut(const CutProblem& p) {
    CutOutcome r;
    r.in = proof_size(p.left) + proof_size(p.right);
    try {
        r.kind = classify_cut(p);
        const Proof e = eliminate_cut(p);
        r.out = proof_size(e);
        if (auto err = check_proof(e, Ruleset::S)) {
            r.ok = false;
            r.why = "output fails the checker: " + err->describe();
        } else if (!same_sequent(e.conclusion, cut_conclusion(p.left.conclusion, p.left_occ,
                                                               p.right.conclusion, p.right_occ))) {
            r.ok = false;
            r.why = "wrong root " + write_proof(e);
        } else if (r.out >= r.in) {
            r.ok = false;
            r.why = "size " + std::to_string(r.out) + " not below " + std::to_string(r.in);
        }
    } catch (const Error& e) {
        r.ok = false;
        r.why = std::string(to_string(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {  // nothing may escape a parallel region
        r.ok = false;
        r.why = e.what();
    }
    return r;
}

std::string describe_problem(const CutProblem& p, std::size_t index, const std::string& why) {
    return "problem " + std::to_string(index) + " (" + std::to_string(p.left_occ) + ", " +
           std::to_string(p.right_occ) + "): " + why;
}

struct WeakOutcome {
    bool ok = true;
    std::size_t before = 0, after = 0;
    std::string why;
};

WeakOutcome run_weak(const WeakeningJob& j) {
    WeakOutcome r;
    r.before = proof_size(j.proof);
    try {
        const Proof w = weaken(j.proof, j.add_left, j.add_right);
        r.after = proof_size(w);
        Sequent want = j.proof.conclusion;
        want.ante.insert(want.ante.end(), j.add_left.begin(), j.add_left.end());
        want.succ.insert(want.succ.end(), j.add_right.begin(), j.add_right.end());
        if (auto err = check_proof(w, Ruleset::S)) {
            r.ok = false;
            r.why = "output fails the checker: " + err->describe();
        } else if (!same_sequent(w.conclusion, want)) {
            r.ok = false;
            r.why = "wrong root";
        } else if (r.after > r.before) {
            r.ok = false;
            r.why = "size grew from " + std::to_string(r.before) + " to " + std::to_string(r.after);
        }
    } catch (const std::exception& e) {
        r.ok = false;
        r.why = e.what();
    }
    return r;
}

// Chain bot=0 < m=1 < top=2 with tables encoded in base 3.
ApsInstance chain_instance(std::size_t code) {
    ApsInstance a;
    a.names = {"bot", "m", "top"};
    a.bot = 0;
    a.top = 2;
    a.leq.assign(3, std::vector<bool>(3, false));
    for (Elem x = 0; x < 3; ++x)
        for (Elem y = x; y < 3; ++y) a.leq[x][y] = true;
    a.box.resize(3);
    a.boxtimes.resize(3);
    for (Elem x = 0; x < 3; ++x, code /= 3) a.box[x] = code % 3;
    for (Elem x = 0; x < 3; ++x, code /= 3) a.boxtimes[x] = code % 3;
    return a;
}

constexpr std::size_t kChainTables = 729;

struct ApsOutcome {
    bool passing = false, fixed = false, uniqueness_violation = false, relabel_mismatch = false;
    bool primed_only = false, primed_non_unique = false;
};

ApsOutcome run_aps(std::size_t code) {
    ApsOutcome r;
    const ApsInstance a = chain_instance(code);
    const auto rep = check_conditions(a);
    const auto rep2 = check_conditions(relabel(a, {2, 0, 1}));
    for (std::size_t i = 0; i < rep.size(); ++i)
        if (rep[i].holds != rep2[i].holds) r.relabel_mismatch = true;
    const auto fps = goedelian_fixed_points(a);
    r.passing = passes_c1_c5(rep);
    if (r.passing) {
        r.fixed = !fps.empty();
        r.uniqueness_violation = !uniqueness_check(a).holds;
    } else if (holds(rep, "C1") && holds(rep, "C2") && holds(rep, "C4") && holds(rep, "C3'") &&
               holds(rep, "C5'")) {
        r.primed_only = true;
        for (Elem p : fps)
            for (Elem q : fps)
                if (!a.eq(p, q)) r.primed_non_unique = true;
    }
    return r;
}

void add(ApsSweepStats& s, const ApsOutcome& o) {
    ++s.instances;
    s.passing += o.passing;
    s.with_fixed_point += o.fixed;
    s.uniqueness_violations += o.uniqueness_violation;
    s.relabel_mismatches += o.relabel_mismatch;
    s.primed_only += o.primed_only;
    s.primed_only_non_unique += o.primed_non_unique;
}

}  // namespace

std::vector<CutProblem> all_cut_pairs(const std::vector<Proof>& pool) {
    // Antecedent occurrences indexed by formula.
    std::map<Formula, std::vector<std::pair<std::size_t, std::size_t>>> by_formula;
    for (std::size_t r = 0; r < pool.size(); ++r)
        for (std::size_t j = 0; j < pool[r].conclusion.ante.size(); ++j)
            by_formula[pool[r].conclusion.ante[j]].emplace_back(r, j);
    std::vector<CutProblem> out;
    for (const auto& l : pool)
        for (std::size_t i = 0; i < l.conclusion.succ.size(); ++i) {
            auto it = by_formula.find(l.conclusion.succ[i]);
            if (it == by_formula.end()) continue;
            for (const auto& [r, j] : it->second) out.push_back({l, pool[r], i, j});
        }
    return out;
}

std::vector<CutProblem> random_fp_cut_pairs(const std::vector<Proof>& pool, std::size_t count,
                                            std::uint64_t seed) {
    std::map<Formula, std::vector<std::pair<std::size_t, std::size_t>>> by_formula;
    std::vector<std::pair<std::size_t, std::size_t>> lefts;
    for (std::size_t r = 0; r < pool.size(); ++r) {
        for (std::size_t j = 0; j < pool[r].conclusion.ante.size(); ++j)
            by_formula[pool[r].conclusion.ante[j]].emplace_back(r, j);
        for (std::size_t i = 0; i < pool[r].conclusion.succ.size(); ++i) lefts.emplace_back(r, i);
    }
    std::vector<char> has_fp(pool.size());
    for (std::size_t k = 0; k < pool.size(); ++k) has_fp[k] = mentions_fp(pool[k]);
    std::mt19937_64 rng(seed);
    std::vector<CutProblem> out;
    std::size_t attempts = 0;
    while (out.size() < count && !lefts.empty()) {
        if (++attempts > count * 1000)
            throw Error(ErrorCode::InvalidInput, "pool yields too few fp cut pairs");
        const auto [l, i] = lefts[std::uniform_int_distribution<std::size_t>(0, lefts.size() - 1)(rng)];
        auto it = by_formula.find(pool[l].conclusion.succ[i]);
        if (it == by_formula.end()) continue;
        const auto& cands = it->second;
        const auto [r, j] = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
        if (!has_fp[l] && !has_fp[r]) continue;
        out.push_back({pool[l], pool[r], i, j});
    }
    return out;
}

CutSweepStats cut_sweep_serial(const std::vector<CutProblem>& problems) {
    CutSweepStats s;
    for (std::size_t k = 0; k < problems.size(); ++k) {
        const CutOutcome o = run_cut(problems[k]);
        ++s.pairs;
        ++s.cases[static_cast<std::size_t>(o.kind)];
        s.input_nodes += o.in;
        s.output_nodes += o.out;
        if (!o.ok && s.violations++ == 0) s.first_violation = describe_problem(problems[k], k, o.why);
    }
    return s;
}

CutSweepStats cut_sweep_parallel(const std::vector<CutProblem>& problems) {
    const auto n = static_cast<std::ptrdiff_t>(problems.size());
    std::size_t violations = 0, in = 0, out = 0;
    std::ptrdiff_t first = std::numeric_limits<std::ptrdiff_t>::max();
    std::string first_why;
    std::vector<std::array<std::size_t, kCutCaseCount>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : violations, in, out)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        const CutOutcome o = run_cut(problems[static_cast<std::size_t>(k)]);
        ++per_thread[static_cast<std::size_t>(omp_get_thread_num())][static_cast<std::size_t>(o.kind)];
        in += o.in;
        out += o.out;
        if (!o.ok) {
            ++violations;
#pragma omp critical(cfs_cut_first)
            if (k < first) {
                first = k;
                first_why = o.why;
            }
        }
    }
    CutSweepStats s;
    s.pairs = problems.size();
    s.violations = violations;
    s.input_nodes = in;
    s.output_nodes = out;
    for (const auto& t : per_thread)
        for (std::size_t c = 0; c < kCutCaseCount; ++c) s.cases[c] += t[c];
    if (violations)
        s.first_violation = describe_problem(problems[static_cast<std::size_t>(first)],
                                             static_cast<std::size_t>(first), first_why);
    return s;
}

std::vector<WeakeningJob> weakening_jobs(const std::vector<Proof>& proofs,
                                         const std::vector<Formula>& formulas, std::size_t max_add,
                                         std::uint64_t seed) {
    if (formulas.empty()) throw Error(ErrorCode::InvalidInput, "no formulas to add");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> count(0, max_add);
    std::uniform_int_distribution<std::size_t> pick(0, formulas.size() - 1);
    std::vector<WeakeningJob> jobs;
    for (const auto& p : proofs) {
        WeakeningJob j{p, {}, {}};
        for (std::size_t k = count(rng); k > 0; --k) j.add_left.push_back(formulas[pick(rng)]);
        for (std::size_t k = count(rng); k > 0; --k) j.add_right.push_back(formulas[pick(rng)]);
        jobs.push_back(std::move(j));
    }
    return jobs;
}

WeakeningSweepStats weakening_sweep_serial(const std::vector<WeakeningJob>& jobs) {
    WeakeningSweepStats s;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        const WeakOutcome o = run_weak(jobs[k]);
        ++s.proofs;
        s.size_before += o.before;
        s.size_after += o.after;
        if (!o.ok && s.violations++ == 0) s.first_violation = "job " + std::to_string(k) + ": " + o.why;
    }
    return s;
}

WeakeningSweepStats weakening_sweep_parallel(const std::vector<WeakeningJob>& jobs) {
    const auto n = static_cast<std::ptrdiff_t>(jobs.size());
    std::size_t violations = 0, before = 0, after = 0;
    std::ptrdiff_t first = std::numeric_limits<std::ptrdiff_t>::max();
    std::string first_why;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : violations, before, after)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        const WeakOutcome o = run_weak(jobs[static_cast<std::size_t>(k)]);
        before += o.before;
        after += o.after;
        if (!o.ok) {
            ++violations;
#pragma omp critical(cfs_weak_first)
            if (k < first) {
                first = k;
                first_why = o.why;
            }
        }
    }
    WeakeningSweepStats s{jobs.size(), violations, before, after, {}};
    if (violations) s.first_violation = "job " + std::to_string(first) + ": " + first_why;
    return s;
}

ApsSweepStats aps_sweep_serial() {
    ApsSweepStats s;
    for (std::size_t code = 0; code < kChainTables; ++code) add(s, run_aps(code));
    return s;
}

ApsSweepStats aps_sweep_parallel() {
    std::vector<ApsOutcome> outcomes(kChainTables);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t code = 0; code < static_cast<std::ptrdiff_t>(kChainTables); ++code)
        outcomes[static_cast<std::size_t>(code)] = run_aps(static_cast<std::size_t>(code));
    ApsSweepStats s;
    for (const auto& o : outcomes) add(s, o);
    return s;
}

}  // namespace cfs
