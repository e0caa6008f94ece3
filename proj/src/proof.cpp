#include "cfs/proof.hpp"

#include <algorithm>

#include "cfs/error.hpp"
#include "cfs/syntax.hpp"

namespace cfs {

const char* to_string(Rule r) {
    switch (r) {
        case Rule::Init: return "Init";
        case Rule::BotInit: return "BotInit";
        case Rule::FixL: return "FixL";
        case Rule::FixR: return "FixR";
        case Rule::ImpL: return "ImpL";
        case Rule::ImpR: return "ImpR";
        case Rule::BoxRule: return "BoxRule";
        case Rule::CtrL: return "CtrL";
        case Rule::Cut: return "Cut";
    }
    return "?";
}

const char* to_string(Ruleset r) { return r == Ruleset::S ? "S" : "Sc"; }

Annotation Annotation::init(std::size_t ante, std::size_t succ) {
    Annotation a;
    a.rule = Rule::Init;
    a.first = ante;
    a.second = succ;
    return a;
}

Annotation Annotation::bot_init(std::size_t ante) {
    Annotation a;
    a.rule = Rule::BotInit;
    a.first = ante;
    return a;
}

Annotation Annotation::principal(Rule rule, std::size_t index) {
    Annotation a;
    a.rule = rule;
    a.first = index;
    return a;
}

Annotation Annotation::imp_left(std::size_t index, std::vector<std::size_t> left_split,
                                std::vector<std::size_t> right_split) {
    Annotation a;
    a.rule = Rule::ImpL;
    a.first = index;
    a.left_split = std::move(left_split);
    a.right_split = std::move(right_split);
    std::sort(a.left_split.begin(), a.left_split.end());
    std::sort(a.right_split.begin(), a.right_split.end());
    return a;
}

Annotation Annotation::box(std::size_t index, std::vector<std::size_t> sigma,
                           std::vector<std::size_t> pi) {
    Annotation a;
    a.rule = Rule::BoxRule;
    a.first = index;
    a.sigma = std::move(sigma);
    a.pi = std::move(pi);
    std::sort(a.sigma.begin(), a.sigma.end());
    std::sort(a.pi.begin(), a.pi.end());
    return a;
}

Annotation Annotation::contraction(std::size_t ante, std::size_t premise_pos) {
    Annotation a;
    a.rule = Rule::CtrL;
    a.first = ante;
    a.second = premise_pos;
    return a;
}

Annotation Annotation::cut(std::size_t left_succ, std::size_t right_ante) {
    Annotation a;
    a.rule = Rule::Cut;
    a.first = left_succ;
    a.second = right_ante;
    return a;
}

std::size_t proof_size(const Proof& p) {
    std::size_t n = 1;
    for (const auto& q : p.premises) n += proof_size(q);
    return n;
}

std::size_t proof_depth(const Proof& p) {
    std::size_t d = 0;
    for (const auto& q : p.premises) d = std::max(d, proof_depth(q));
    return d + 1;
}

std::string CheckError::describe() const {
    std::string where = "root";
    for (std::size_t i : path) where += "." + std::to_string(i);
    return std::string(to_string(rule)) + " node at " + where + ": " + message;
}

bool rule_in(Rule r, Ruleset rs) {
    if (r == Rule::CtrL || r == Rule::Cut) return rs == Ruleset::Sc;
    return true;
}

namespace {

std::size_t premise_count(Rule r) {
    switch (r) {
        case Rule::Init:
        case Rule::BotInit:
            return 0;
        case Rule::ImpL:
        case Rule::Cut:
            return 2;
        default:
            return 1;
    }
}

// Validates a list of indices: in range, distinct, none equal to `excluded`.
std::string check_indices(const std::vector<std::size_t>& idx, std::size_t bound,
                          std::size_t excluded, const char* what) {
    std::vector<std::size_t> s = idx;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        return std::string(what) + " lists an occurrence twice";
    for (std::size_t i : s) {
        if (i >= bound) return std::string(what) + " index " + std::to_string(i) + " out of range";
        if (i == excluded) return std::string(what) + " contains the principal occurrence";
    }
    return {};
}

ExpectedPremises fail(std::string msg) { return {{}, {}, {}, std::move(msg)}; }

// A premise under construction together with its origin maps.
struct Draft {
    Sequent s;
    std::vector<std::size_t> ao, so;

    void ante(const Formula& f, std::size_t origin) {
        s.ante.push_back(f);
        ao.push_back(origin);
    }
    void succ(const Formula& f, std::size_t origin) {
        s.succ.push_back(f);
        so.push_back(origin);
    }
};

Draft copy_of(const Sequent& c) {
    Draft d;
    for (std::size_t i = 0; i < c.ante.size(); ++i) d.ante(c.ante[i], i);
    for (std::size_t i = 0; i < c.succ.size(); ++i) d.succ(c.succ[i], i);
    return d;
}

ExpectedPremises done(std::vector<Draft> drafts) {
    ExpectedPremises ex;
    for (auto& d : drafts) {
        ex.premises.push_back(std::move(d.s));
        ex.ante_origin.push_back(std::move(d.ao));
        ex.succ_origin.push_back(std::move(d.so));
    }
    return ex;
}

}  // namespace

ExpectedPremises expected_premises(const Sequent& c, const Annotation& ann) {
    constexpr std::size_t npos = ExpectedPremises::npos;
    const auto& ante = c.ante;
    const auto& succ = c.succ;
    switch (ann.rule) {
        case Rule::Init:
            if (ann.first >= ante.size() || ann.second >= succ.size())
                return fail("axiomatic pair out of range");
            if (!(ante[ann.first] == succ[ann.second]))
                return fail("axiomatic formulas differ: " + to_string(ante[ann.first]) + " vs " +
                            to_string(succ[ann.second]));
            return {};
        case Rule::BotInit:
            if (ann.first >= ante.size()) return fail("bot index out of range");
            if (!ante[ann.first].is(Kind::Bot))
                return fail("designated occurrence " + to_string(ante[ann.first]) + " is not bot");
            return {};
        case Rule::FixL: {
            if (ann.first >= ante.size()) return fail("principal index out of range");
            if (!ante[ann.first].is(Kind::Fp)) return fail("principal is not an fp formula");
            Draft d = copy_of(c);
            d.s.ante[ann.first] = unfold(ante[ann.first]);
            d.ao[ann.first] = npos;
            return done({std::move(d)});
        }
        case Rule::FixR: {
            if (ann.first >= succ.size()) return fail("principal index out of range");
            if (!succ[ann.first].is(Kind::Fp)) return fail("principal is not an fp formula");
            Draft d = copy_of(c);
            d.s.succ[ann.first] = unfold(succ[ann.first]);
            d.so[ann.first] = npos;
            return done({std::move(d)});
        }
        case Rule::ImpR: {
            if (ann.first >= succ.size()) return fail("principal index out of range");
            const Formula& f = succ[ann.first];
            if (!f.is(Kind::Imp)) return fail("principal is not an implication");
            Draft d = copy_of(c);
            d.ante(f.left(), npos);
            d.s.succ[ann.first] = f.right();
            d.so[ann.first] = npos;
            return done({std::move(d)});
        }
        case Rule::ImpL: {
            if (ann.first >= ante.size()) return fail("principal index out of range");
            const Formula& f = ante[ann.first];
            if (!f.is(Kind::Imp)) return fail("principal is not an implication");
            if (auto e = check_indices(ann.left_split, ante.size(), ann.first, "lsplit"); !e.empty())
                return fail(e);
            if (auto e = check_indices(ann.right_split, succ.size(), npos, "rsplit"); !e.empty())
                return fail(e);
            Draft first, second;
            std::vector<bool> to_first_l(ante.size(), false), to_first_r(succ.size(), false);
            for (std::size_t i : ann.left_split) to_first_l[i] = true;
            for (std::size_t i : ann.right_split) to_first_r[i] = true;
            for (std::size_t i = 0; i < ante.size(); ++i) {
                if (i == ann.first) continue;
                (to_first_l[i] ? first : second).ante(ante[i], i);
            }
            first.ante(f.right(), npos);
            second.succ(f.left(), npos);
            for (std::size_t i = 0; i < succ.size(); ++i)
                (to_first_r[i] ? first : second).succ(succ[i], i);
            return done({std::move(first), std::move(second)});
        }
        case Rule::BoxRule: {
            if (ann.first >= succ.size()) return fail("principal index out of range");
            if (!succ[ann.first].is(Kind::Box)) return fail("principal is not a boxed formula");
            if (auto e = check_indices(ann.sigma, ante.size(), npos, "sigma"); !e.empty())
                return fail(e);
            if (auto e = check_indices(ann.pi, ante.size(), npos, "pi"); !e.empty()) return fail(e);
            for (std::size_t i : ann.sigma) {
                if (std::find(ann.pi.begin(), ann.pi.end(), i) != ann.pi.end())
                    return fail("occurrence " + std::to_string(i) + " is in both sigma and pi");
                if (!ante[i].is(Kind::Box))
                    return fail("sigma occurrence " + to_string(ante[i]) + " is not boxed");
            }
            for (std::size_t i : ann.pi)
                if (!ante[i].is(Kind::Box))
                    return fail("pi occurrence " + to_string(ante[i]) + " is not boxed");
            // Sigma members change shape, so their origin still names the
            // conclusion occurrence they come from.
            Draft d;
            for (std::size_t i : ann.sigma) d.ante(ante[i].body(), i);
            for (std::size_t i : ann.pi) d.ante(ante[i], i);
            d.succ(succ[ann.first].body(), ann.first);
            return done({std::move(d)});
        }
        case Rule::CtrL: {
            if (ann.first >= ante.size()) return fail("contracted index out of range");
            if (ann.second > ante.size()) return fail("premise position out of range");
            Draft d = copy_of(c);
            d.s.ante.insert(d.s.ante.begin() + static_cast<std::ptrdiff_t>(ann.second),
                            ante[ann.first]);
            d.ao.insert(d.ao.begin() + static_cast<std::ptrdiff_t>(ann.second), ann.first);
            return done({std::move(d)});
        }
        case Rule::Cut:
            return {};
    }
    return fail("unknown rule");
}

std::optional<CheckError> check_node(const Proof& node, Ruleset rs) {
    const Rule r = node.rule();
    auto err = [&](std::string msg) { return CheckError{{}, r, std::move(msg)}; };
    if (!rule_in(r, rs))
        return err(std::string("rule ") + to_string(r) + " is not in ruleset " + to_string(rs));
    if (node.premises.size() != premise_count(r))
        return err("expected " + std::to_string(premise_count(r)) + " premise(s), found " +
                   std::to_string(node.premises.size()));
    if (!node.conclusion.closed()) return err("conclusion contains an open formula");

    if (r == Rule::Cut) {
        const Sequent& l = node.premises[0].conclusion;
        const Sequent& rr = node.premises[1].conclusion;
        const auto& a = node.annotation;
        if (a.first >= l.succ.size() || a.second >= rr.ante.size())
            return err("cut occurrence out of range");
        if (!(l.succ[a.first] == rr.ante[a.second])) return err("cut formulas differ");
        Sequent expect;
        expect.ante = l.ante;
        for (const auto& f : without(rr.ante, a.second)) expect.ante.push_back(f);
        expect.succ = rr.succ;
        for (const auto& f : without(l.succ, a.first)) expect.succ.push_back(f);
        if (!same_sequent(expect, node.conclusion))
            return err("conclusion " + to_string(node.conclusion) + " does not match " +
                       to_string(expect));
        return std::nullopt;
    }

    const ExpectedPremises ex = expected_premises(node.conclusion, node.annotation);
    if (!ex.ok()) return err(ex.error);
    for (std::size_t k = 0; k < ex.premises.size(); ++k) {
        if (!same_sequent(ex.premises[k], node.premises[k].conclusion))
            return err("premise " + std::to_string(k) + " is " +
                       to_string(node.premises[k].conclusion) + ", rule requires " +
                       to_string(ex.premises[k]));
    }
    return std::nullopt;
}

namespace {

std::optional<CheckError> check_rec(const Proof& p, Ruleset rs, std::vector<std::size_t>& path) {
    for (std::size_t k = 0; k < p.premises.size(); ++k) {
        path.push_back(k);
        if (auto e = check_rec(p.premises[k], rs, path)) return e;
        path.pop_back();
    }
    if (auto e = check_node(p, rs)) {
        e->path = path;
        return e;
    }
    return std::nullopt;
}

std::vector<std::size_t> remap(const std::vector<std::size_t>& idx,
                               const std::vector<std::size_t>& map) {
    std::vector<std::size_t> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(i < map.size() ? map[i] : i);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t remap(std::size_t i, const std::vector<std::size_t>& map) {
    return i < map.size() ? map[i] : i;
}

std::vector<std::size_t> invert(const std::vector<std::size_t>& target_to_source) {
    std::vector<std::size_t> out(target_to_source.size());
    for (std::size_t t = 0; t < target_to_source.size(); ++t) out[target_to_source[t]] = t;
    return out;
}

}  // namespace

std::optional<CheckError> check_proof(const Proof& proof, Ruleset rs) {
    std::vector<std::size_t> path;
    return check_rec(proof, rs, path);
}

Annotation renumber(const Annotation& ann, const std::vector<std::size_t>& am,
                    const std::vector<std::size_t>& sm) {
    Annotation out = ann;
    switch (ann.rule) {
        case Rule::Init:
            out.first = remap(ann.first, am);
            out.second = remap(ann.second, sm);
            break;
        case Rule::BotInit:
        case Rule::FixL:
        case Rule::CtrL:
            out.first = remap(ann.first, am);
            break;
        case Rule::ImpL:
            out.first = remap(ann.first, am);
            out.left_split = remap(ann.left_split, am);
            out.right_split = remap(ann.right_split, sm);
            break;
        case Rule::FixR:
        case Rule::ImpR:
            out.first = remap(ann.first, sm);
            break;
        case Rule::BoxRule:
            out.first = remap(ann.first, sm);
            out.sigma = remap(ann.sigma, am);
            out.pi = remap(ann.pi, am);
            break;
        case Rule::Cut:
            break;
    }
    return out;
}

Proof relayout(Proof proof, const Sequent& target) {
    if (!same_sequent(proof.conclusion, target))
        throw Error(ErrorCode::Internal, "relayout: " + to_string(proof.conclusion) +
                                             " is not a rearrangement of " + to_string(target));
    const auto am = invert(match_lists(proof.conclusion.ante, target.ante));
    const auto sm = invert(match_lists(proof.conclusion.succ, target.succ));
    proof.annotation = renumber(proof.annotation, am, sm);
    proof.conclusion = target;
    return proof;
}

}  // namespace cfs
