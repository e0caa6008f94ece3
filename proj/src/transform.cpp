#include "cfs/transform.hpp"

#include <algorithm>
#include <numeric>

#include "cfs/error.hpp"
#include "cfs/syntax.hpp"

namespace cfs {

Proof weaken(const Proof& proof, const std::vector<Formula>& add_left,
             const std::vector<Formula>& add_right) {
    if (add_left.empty() && add_right.empty()) return proof;
    Proof out = proof;
    const std::size_t na = out.conclusion.ante.size();
    const std::size_t ns = out.conclusion.succ.size();
    out.conclusion.ante.insert(out.conclusion.ante.end(), add_left.begin(), add_left.end());
    out.conclusion.succ.insert(out.conclusion.succ.end(), add_right.begin(), add_right.end());
    switch (proof.rule()) {
        case Rule::Init:
        case Rule::BotInit:
        case Rule::BoxRule:
            // The new occurrences are unreferenced, hence weakening formulas.
            break;
        case Rule::FixL:
        case Rule::FixR:
        case Rule::ImpR:
            out.premises[0] = weaken(proof.premises[0], add_left, add_right);
            break;
        case Rule::ImpL: {
            for (std::size_t i = 0; i < add_left.size(); ++i) out.annotation.left_split.push_back(na + i);
            for (std::size_t i = 0; i < add_right.size(); ++i)
                out.annotation.right_split.push_back(ns + i);
            out.premises[0] = weaken(proof.premises[0], add_left, add_right);
            break;
        }
        case Rule::CtrL:
        case Rule::Cut:
            throw Error(ErrorCode::InvalidInput,
                        std::string("weaken: rule ") + to_string(proof.rule()) + " is not in S");
    }
    return out;
}

Proof strip_weakening(const Proof& proof) {
    if (proof.rule() != Rule::BoxRule)
        throw Error(ErrorCode::NotBoxFinal, std::string("final inference is ") +
                                                to_string(proof.rule()) + ", not BoxRule");
    const Annotation& a = proof.annotation;
    const std::size_t npos = ExpectedPremises::npos;
    std::vector<std::size_t> am(proof.conclusion.ante.size(), npos);
    std::vector<std::size_t> sm(proof.conclusion.succ.size(), npos);
    Proof out = proof;
    out.conclusion.ante.clear();
    out.conclusion.succ.clear();
    for (std::size_t i = 0; i < proof.conclusion.ante.size(); ++i) {
        const bool active = std::find(a.sigma.begin(), a.sigma.end(), i) != a.sigma.end() ||
                            std::find(a.pi.begin(), a.pi.end(), i) != a.pi.end();
        if (!active) continue;
        am[i] = out.conclusion.ante.size();
        out.conclusion.ante.push_back(proof.conclusion.ante[i]);
    }
    sm[a.first] = 0;
    out.conclusion.succ.push_back(proof.conclusion.succ[a.first]);
    out.annotation = renumber(a, am, sm);
    return out;
}

Sequent cut_conclusion(const Sequent& left, std::size_t left_occ, const Sequent& right,
                       std::size_t right_occ) {
    Sequent s;
    s.ante = left.ante;
    for (const auto& f : without(right.ante, right_occ)) s.ante.push_back(f);
    s.succ = right.succ;
    for (const auto& f : without(left.succ, left_occ)) s.succ.push_back(f);
    return s;
}

const char* to_string(CutCase c) {
    switch (c) {
        case CutCase::LeftWeakening: return "left-weakening";
        case CutCase::LeftAxiomatic: return "left-axiomatic";
        case CutCase::LeftSide: return "left-side";
        case CutCase::RightWeakening: return "right-weakening";
        case CutCase::RightAxiomatic: return "right-axiomatic";
        case CutCase::RightSide: return "right-side";
        case CutCase::BoxUnboxed: return "box-unboxed";
        case CutCase::BoxBoxed: return "box-boxed";
        case CutCase::FixedPoint: return "fixed-point";
        case CutCase::Implication: return "implication";
    }
    return "?";
}

namespace {

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

bool succ_is_weakening(const Proof& p, std::size_t i) {
    switch (p.rule()) {
        case Rule::Init: return i != p.annotation.second;
        case Rule::BotInit: return true;
        case Rule::BoxRule: return i != p.annotation.first;
        default: return false;
    }
}

bool succ_is_side(const Proof& p, std::size_t i) {
    switch (p.rule()) {
        case Rule::FixL:
        case Rule::ImpL: return true;
        case Rule::FixR:
        case Rule::ImpR: return i != p.annotation.first;
        default: return false;
    }
}

bool ante_is_weakening(const Proof& p, std::size_t i) {
    const Annotation& a = p.annotation;
    switch (p.rule()) {
        case Rule::Init:
        case Rule::BotInit: return i != a.first;
        case Rule::BoxRule: return !contains(a.sigma, i) && !contains(a.pi, i);
        default: return false;
    }
}

bool ante_is_side(const Proof& p, std::size_t i) {
    switch (p.rule()) {
        case Rule::FixR:
        case Rule::ImpR: return true;
        case Rule::FixL:
        case Rule::ImpL: return i != p.annotation.first;
        default: return false;
    }
}

CutCase dispatch(const Proof& l, std::size_t i1, const Proof& r, std::size_t i2) {
    if (succ_is_weakening(l, i1)) return CutCase::LeftWeakening;
    if (l.rule() == Rule::Init) return CutCase::LeftAxiomatic;
    if (succ_is_side(l, i1)) return CutCase::LeftSide;
    if (ante_is_weakening(r, i2)) return CutCase::RightWeakening;
    if (r.rule() == Rule::Init || r.rule() == Rule::BotInit) return CutCase::RightAxiomatic;
    if (ante_is_side(r, i2)) return CutCase::RightSide;
    // Principal in the left proof; principal or active in the right one.
    switch (l.rule()) {
        case Rule::BoxRule:
            if (r.rule() == Rule::BoxRule)
                return contains(r.annotation.sigma, i2) ? CutCase::BoxUnboxed : CutCase::BoxBoxed;
            break;
        case Rule::FixR:
            if (r.rule() == Rule::FixL) return CutCase::FixedPoint;
            break;
        case Rule::ImpR:
            if (r.rule() == Rule::ImpL) return CutCase::Implication;
            break;
        default:
            break;
    }
    throw Error(ErrorCode::Internal, std::string("cut: no case for ") + to_string(l.rule()) +
                                         " against " + to_string(r.rule()));
}

// Index maps from the two cut premises into cut_conclusion's layout.
struct Layout {
    std::size_t gamma, pi;  // |left antecedent|, |right succedent|
    std::size_t i1, i2;

    std::size_t left_ante(std::size_t k) const { return k; }
    std::size_t right_ante(std::size_t k) const { return gamma + (k < i2 ? k : k - 1); }
    std::size_t right_succ(std::size_t k) const { return k; }
    std::size_t left_succ(std::size_t k) const { return pi + (k < i1 ? k : k - 1); }
};

std::vector<std::size_t> map_each(const std::vector<std::size_t>& v, std::size_t skip,
                                  std::size_t (Layout::*f)(std::size_t) const, const Layout& lay) {
    std::vector<std::size_t> out;
    for (std::size_t k : v)
        if (k != skip) out.push_back((lay.*f)(k));
    return out;
}

std::vector<std::size_t> iota(std::size_t from, std::size_t count) {
    std::vector<std::size_t> v(count);
    std::iota(v.begin(), v.end(), from);
    return v;
}

std::vector<std::size_t> concat(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Index in the stored premise k of the conclusion occurrence `idx`.
std::size_t premise_ante(const Proof& p, std::size_t k, std::size_t idx) {
    const ExpectedPremises ex = expected_premises(p.conclusion, p.annotation);
    const auto& origin = ex.ante_origin[k];
    const auto pos = static_cast<std::size_t>(std::find(origin.begin(), origin.end(), idx) -
                                              origin.begin());
    const std::size_t j = map_occurrence(ex.premises[k].ante, pos, p.premises[k].conclusion.ante);
    if (pos == origin.size() || j == p.premises[k].conclusion.ante.size())
        throw Error(ErrorCode::Internal, "cut: lost track of an antecedent occurrence");
    return j;
}

std::size_t premise_succ(const Proof& p, std::size_t k, std::size_t idx) {
    const ExpectedPremises ex = expected_premises(p.conclusion, p.annotation);
    const auto& origin = ex.succ_origin[k];
    const auto pos = static_cast<std::size_t>(std::find(origin.begin(), origin.end(), idx) -
                                              origin.begin());
    const std::size_t j = map_occurrence(ex.premises[k].succ, pos, p.premises[k].conclusion.succ);
    if (pos == origin.size() || j == p.premises[k].conclusion.succ.size())
        throw Error(ErrorCode::Internal, "cut: lost track of a succedent occurrence");
    return j;
}

// Index in premise k of a formula the rule introduced at expected position pos.
std::size_t introduced_ante(const Proof& p, std::size_t k, std::size_t pos) {
    const ExpectedPremises ex = expected_premises(p.conclusion, p.annotation);
    return map_occurrence(ex.premises[k].ante, pos, p.premises[k].conclusion.ante);
}

std::size_t introduced_succ(const Proof& p, std::size_t k, std::size_t pos) {
    const ExpectedPremises ex = expected_premises(p.conclusion, p.annotation);
    return map_occurrence(ex.premises[k].succ, pos, p.premises[k].conclusion.succ);
}

Proof node(Sequent conclusion, Annotation ann, std::vector<Proof> premises) {
    Proof p{std::move(conclusion), std::move(ann), std::move(premises)};
    if (auto e = check_node(p, Ruleset::S))
        throw Error(ErrorCode::Internal, "cut: rebuilt an invalid inference: " + e->describe());
    return p;
}

Proof eliminate(const Proof& l, std::size_t i1, const Proof& r, std::size_t i2);

// Recursive call guarded by the termination measure.
Proof recurse(const Proof& l, std::size_t i1, const Proof& r, std::size_t i2, std::size_t bound) {
    const std::size_t measure = proof_size(l) + proof_size(r);
    if (measure >= bound)
        throw Error(ErrorCode::MeasureViolation,
                    "recursive cut does not decrease the size measure (" + std::to_string(measure) +
                        " >= " + std::to_string(bound) + ")");
    return eliminate(l, i1, r, i2);
}

Proof eliminate(const Proof& l, std::size_t i1, const Proof& r, std::size_t i2) {
    const std::size_t bound = proof_size(l) + proof_size(r);
    const Sequent target = cut_conclusion(l.conclusion, i1, r.conclusion, i2);
    const Layout lay{l.conclusion.ante.size(), r.conclusion.succ.size(), i1, i2};
    const Annotation& la = l.annotation;
    const Annotation& ra = r.annotation;

    Proof out;
    switch (dispatch(l, i1, r, i2)) {
        case CutCase::LeftWeakening: {
            // Erase A from the left proof and widen its weakening slots.
            std::vector<std::size_t> am = iota(0, l.conclusion.ante.size());
            std::vector<std::size_t> sm(l.conclusion.succ.size());
            for (std::size_t k = 0; k < sm.size(); ++k) sm[k] = k == i1 ? 0 : lay.left_succ(k);
            out = l;
            out.conclusion = target;
            out.annotation = renumber(la, am, sm);
            break;
        }
        case CutCase::LeftAxiomatic: {
            out = relayout(weaken(r, without(l.conclusion.ante, la.first), without(l.conclusion.succ, i1)),
                           target);
            break;
        }
        case CutCase::LeftSide: {
            if (l.rule() == Rule::ImpL) {
                const std::size_t k = contains(la.right_split, i1) ? 0 : 1;
                const std::size_t j1 = premise_succ(l, k, i1);
                Proof sub = recurse(l.premises[k], j1, r, i2, bound);
                std::vector<std::size_t> ls = la.left_split;  // left antecedent keeps its indices
                std::vector<std::size_t> rs = map_each(la.right_split, i1, &Layout::left_succ, lay);
                if (k == 0) {
                    ls = concat(ls, iota(lay.gamma, target.ante.size() - lay.gamma));
                    rs = concat(rs, iota(0, lay.pi));
                }
                std::vector<Proof> prem = l.premises;
                prem[k] = std::move(sub);
                out = node(target, Annotation::imp_left(la.first, ls, rs), std::move(prem));
            } else {
                const std::size_t j1 = premise_succ(l, 0, i1);
                Proof sub = recurse(l.premises[0], j1, r, i2, bound);
                const std::size_t prin =
                    l.rule() == Rule::FixL ? lay.left_ante(la.first) : lay.left_succ(la.first);
                out = node(target, Annotation::principal(l.rule(), prin),
                           {std::move(sub)});
            }
            break;
        }
        case CutCase::RightWeakening: {
            std::vector<std::size_t> am(r.conclusion.ante.size());
            for (std::size_t k = 0; k < am.size(); ++k) am[k] = k == i2 ? 0 : lay.right_ante(k);
            std::vector<std::size_t> sm = iota(0, r.conclusion.succ.size());
            out = r;
            out.conclusion = target;
            out.annotation = renumber(ra, am, sm);
            break;
        }
        case CutCase::RightAxiomatic: {
            if (r.rule() != Rule::Init)
                throw Error(ErrorCode::Internal, "cut: bot cannot be principal on the left proof");
            out = relayout(weaken(l, without(r.conclusion.ante, i2), without(r.conclusion.succ, ra.second)),
                           target);
            break;
        }
        case CutCase::RightSide: {
            if (r.rule() == Rule::ImpL) {
                const std::size_t k = contains(ra.left_split, i2) ? 0 : 1;
                const std::size_t j2 = premise_ante(r, k, i2);
                Proof sub = recurse(l, i1, r.premises[k], j2, bound);
                std::vector<std::size_t> ls = map_each(ra.left_split, i2, &Layout::right_ante, lay);
                std::vector<std::size_t> rs = ra.right_split;  // right succedent keeps its indices
                if (k == 0) {
                    ls = concat(ls, iota(0, lay.gamma));
                    rs = concat(rs, iota(lay.pi, target.succ.size() - lay.pi));
                }
                std::vector<Proof> prem = r.premises;
                prem[k] = std::move(sub);
                out = node(target, Annotation::imp_left(lay.right_ante(ra.first), ls, rs),
                           std::move(prem));
            } else {
                const std::size_t j2 = premise_ante(r, 0, i2);
                Proof sub = recurse(l, i1, r.premises[0], j2, bound);
                const std::size_t prin =
                    r.rule() == Rule::FixL ? lay.right_ante(ra.first) : lay.right_succ(ra.first);
                out = node(target, Annotation::principal(r.rule(), prin), {std::move(sub)});
            }
            break;
        }
        case CutCase::BoxUnboxed: {
            const Proof& p1 = l.premises[0];
            const std::size_t j1 = introduced_succ(l, 0, 0);
            const std::size_t j2 = premise_ante(r, 0, i2);
            Proof sub = recurse(p1, j1, r.premises[0], j2, bound);
            auto sigma = concat(la.sigma, map_each(ra.sigma, i2, &Layout::right_ante, lay));
            auto pi = concat(la.pi, map_each(ra.pi, i2, &Layout::right_ante, lay));
            out = node(target, Annotation::box(lay.right_succ(ra.first), sigma, pi), {std::move(sub)});
            break;
        }
        case CutCase::BoxBoxed: {
            const Proof stripped = strip_weakening(l);
            const std::size_t j2 = premise_ante(r, 0, i2);
            Proof sub = recurse(stripped, stripped.annotation.first, r.premises[0], j2, bound);
            auto sigma = map_each(ra.sigma, i2, &Layout::right_ante, lay);
            auto pi = concat(concat(la.sigma, la.pi), map_each(ra.pi, i2, &Layout::right_ante, lay));
            out = node(target, Annotation::box(lay.right_succ(ra.first), sigma, pi), {std::move(sub)});
            break;
        }
        case CutCase::FixedPoint: {
            const std::size_t j1 = introduced_succ(l, 0, i1);
            const std::size_t j2 = introduced_ante(r, 0, i2);
            out = relayout(recurse(l.premises[0], j1, r.premises[0], j2, bound), target);
            break;
        }
        case CutCase::Implication: {
            // l ends with ->R on A0 -> A1, r with ->L on the same formula.
            const Proof& p1 = l.premises[0];       // Gamma, A0 => A1, Delta
            const Proof& r_first = r.premises[0];  // Sigma1, A1 => Pi1
            const Proof& r_second = r.premises[1]; // Sigma0 => A0, Pi0
            const std::size_t a0_in_p1 = introduced_ante(l, 0, l.conclusion.ante.size());
            const std::size_t a1_in_p1 = introduced_succ(l, 0, i1);
            const ExpectedPremises rex = expected_premises(r.conclusion, ra);
            const std::size_t a1_in_rf = introduced_ante(r, 0, rex.premises[0].ante.size() - 1);
            const std::size_t a0_in_rs = introduced_succ(r, 1, 0);
            Proof inner = recurse(r_second, a0_in_rs, p1, a0_in_p1, bound);
            // inner's succedent starts with p1's succedent, so A1 keeps its index.
            out = relayout(recurse(inner, a1_in_p1, r_first, a1_in_rf, bound), target);
            break;
        }
    }
    if (proof_size(out) >= bound)
        throw Error(ErrorCode::MeasureViolation,
                    "cut result has " + std::to_string(proof_size(out)) + " nodes, bound is " +
                        std::to_string(bound));
    return out;
}

}  // namespace

CutCase classify_cut(const CutProblem& p) {
    return dispatch(p.left, p.left_occ, p.right, p.right_occ);
}

Proof eliminate_cut(const CutProblem& p) {
    if (p.left_occ >= p.left.conclusion.succ.size() || p.right_occ >= p.right.conclusion.ante.size())
        throw Error(ErrorCode::InvalidInput, "cut occurrence index out of range");
    if (!(p.left.conclusion.succ[p.left_occ] == p.right.conclusion.ante[p.right_occ]))
        throw Error(ErrorCode::CutMismatch,
                    "cut formulas differ: " + to_string(p.left.conclusion.succ[p.left_occ]) +
                        " vs " + to_string(p.right.conclusion.ante[p.right_occ]));
    if (auto e = check_proof(p.left, Ruleset::S))
        throw Error(ErrorCode::InvalidInput, "left proof does not check under S: " + e->describe());
    if (auto e = check_proof(p.right, Ruleset::S))
        throw Error(ErrorCode::InvalidInput, "right proof does not check under S: " + e->describe());
    return eliminate(p.left, p.left_occ, p.right, p.right_occ);
}

}  // namespace cfs
