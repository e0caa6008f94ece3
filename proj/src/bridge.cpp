#include "cfs/bridge.hpp"

#include <algorithm>
#include <sstream>

#include "cfs/error.hpp"
#include "cfs/syntax.hpp"
#include "cfs/transform.hpp"

namespace cfs {

ConseqOracle ConseqOracle::s(SearchBudget budget) { return ConseqOracle(Ruleset::S, budget); }
ConseqOracle ConseqOracle::sc(SearchBudget budget) { return ConseqOracle(Ruleset::Sc, budget); }

const Judgment& ConseqOracle::judge(const std::vector<Formula>& gamma, const Formula& phi) {
    return judge(Sequent{gamma, {phi}});
}

const Judgment& ConseqOracle::judge(const Sequent& s) {
    SequentKey key = key_of(s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Judgment j{s, Tri::Unknown, std::nullopt};
    SearchResult r = search(s, budget_);
    if (r.verdict == Verdict::Provable) {
        if (auto e = check_proof(*r.witness, Ruleset::S))
            throw Error(ErrorCode::Internal, "search witness fails the checker: " + e->describe());
        j.verdict = Tri::Yes;
        j.proof = std::move(r.witness);
    } else if (ruleset_ == Ruleset::S) {
        j.verdict = r.verdict == Verdict::Refuted ? Tri::No : Tri::Unknown;
    } else if (auto it = stored_.find(key); it != stored_.end()) {
        j.verdict = Tri::Yes;
        j.proof = relayout(it->second, s);
    }
    return memo_.emplace(std::move(key), std::move(j)).first->second;
}

void ConseqOracle::store(const Proof& proof) {
    if (ruleset_ != Ruleset::Sc) throw Error(ErrorCode::RulesetUnsupported, "only the Sc oracle stores proofs");
    if (proof.conclusion.succ.size() != 1)
        throw Error(ErrorCode::InvalidInput, "stored proofs need exactly one succedent formula");
    if (auto e = check_proof(proof, Ruleset::Sc))
        throw Error(ErrorCode::InvalidInput, "stored proof fails the Sc checker: " + e->describe());
    SequentKey key = key_of(proof.conclusion);
    memo_.erase(key);
    stored_.insert_or_assign(std::move(key), proof);
}

const char* to_string(CondVerdict v) {
    switch (v) {
        case CondVerdict::Holds: return "holds-on-samples";
        case CondVerdict::Fails: return "fails";
        case CondVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

const ConditionLine& ConditionReport::line(const std::string& name) const {
    for (const auto& l : lines)
        if (l.name == name) return l;
    throw Error(ErrorCode::Internal, "no report line " + name);
}

namespace {

Formula f(std::string_view text) { return parse_formula(text); }

std::string show(const Judgment& j) {
    const char* v = j.verdict == Tri::Yes ? "provable" : j.verdict == Tri::No ? "refuted" : "unknown";
    return to_string(j.sequent) + " " + v;
}

std::vector<Formula> cat(std::vector<Formula> a, const std::vector<Formula>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<Formula> boxed(const std::vector<Formula>& v) {
    std::vector<Formula> out;
    for (const auto& x : v) out.push_back(Formula::box(x));
    return out;
}

Judgment constructed(Sequent s, Proof p, Ruleset rs) {
    if (auto e = check_proof(p, rs))
        throw Error(ErrorCode::Internal, "constructed proof fails the checker: " + e->describe());
    Proof laid = relayout(std::move(p), s);
    return {std::move(s), Tri::Yes, std::move(laid)};
}

// Proof of Gamma, Sigma => Pi, Delta from the two premises: the cut is
// eliminated when both are S proofs, and kept as a Cut node otherwise.
Proof compose(const Proof& left, std::size_t li, const Proof& right, std::size_t ri) {
    if (!check_proof(left, Ruleset::S) && !check_proof(right, Ruleset::S))
        return eliminate_cut({left, right, li, ri});
    return Proof{cut_conclusion(left.conclusion, li, right.conclusion, ri), Annotation::cut(li, ri),
                 {left, right}};
}

std::size_t index_in(const std::vector<Formula>& side, const Formula& x) {
    for (std::size_t i = 0; i < side.size(); ++i)
        if (side[i] == x) return i;
    throw Error(ErrorCode::Internal, "formula " + to_string(x) + " not found");
}

// box x => box y from a proof of x => y.
Proof c1_box(const Proof& p) {
    const Sequent& s = p.conclusion;
    return Proof{{{Formula::box(s.ante[0])}, {Formula::box(s.succ[0])}}, Annotation::box(0, {0}, {}), {p}};
}

// boxtimes y => boxtimes x from a proof of x => y.
Proof c1_boxtimes(const Proof& p) {
    const Formula& x = p.conclusion.ante[0];
    const Formula& y = p.conclusion.succ[0];
    const Formula bot = Formula::bot();
    const Formula ny = Formula::imp(y, bot), nx = Formula::imp(x, bot);
    Proof leaf{{{bot}, {bot}}, Annotation::bot_init(0), {}};
    Proof impl{{{ny, x}, {bot}}, Annotation::imp_left(0, {}, {0}), {leaf, p}};
    Proof impr{{{ny}, {nx}}, Annotation::principal(Rule::ImpR, 0), {impl}};
    return Proof{{{induced_boxtimes(y)}, {induced_boxtimes(x)}}, Annotation::box(0, {0}, {}), {impr}};
}

// x => boxtimes top from x => box y and x => boxtimes y, through
// transitivity and one contraction on x.
Proof c3_construct(const Proof& pbox, const Proof& pbt, const Formula& x, const Formula& y) {
    const Formula by = Formula::box(y), xy = induced_boxtimes(y), xt = induced_boxtimes(top());
    SearchResult schema = search(Sequent{{by, xy}, {xt}});
    if (schema.verdict != Verdict::Provable)
        throw Error(ErrorCode::Internal, "C3 schema sequent is not provable");
    const Proof sch = relayout(*schema.witness, Sequent{{by, xy}, {xt}});
    Proof step1 = compose(pbox, 0, sch, 0);                                       // x, bt y => bt top
    Proof step2 = compose(pbt, 0, step1, index_in(step1.conclusion.ante, xy));   // x, x => bt top
    step2 = relayout(std::move(step2), Sequent{{x, x}, {xt}});
    return Proof{{{x}, {xt}}, Annotation::contraction(0, 1), {std::move(step2)}};
}

// One instance of a conditional claim: the conclusions must all be
// provable whenever the premises all are.
struct Instance {
    std::vector<Judgment> premises;
    std::vector<Judgment> conclusions;
};

CondVerdict verdict_of(const Instance& in, bool rule_backed) {
    const auto yes = [](const Judgment& j) { return j.verdict == Tri::Yes; };
    const auto no = [](const Judgment& j) { return j.verdict == Tri::No; };
    if (std::all_of(in.conclusions.begin(), in.conclusions.end(), yes)) return CondVerdict::Holds;
    if (std::any_of(in.premises.begin(), in.premises.end(), no)) return CondVerdict::Holds;
    const bool prem = std::all_of(in.premises.begin(), in.premises.end(), yes);
    if (prem && std::any_of(in.conclusions.begin(), in.conclusions.end(), no)) return CondVerdict::Fails;
    if (!prem && rule_backed) return CondVerdict::Holds;
    return CondVerdict::Inconclusive;
}

class LineBuilder {
public:
    LineBuilder(std::string name, bool rule_backed) : rule_backed_(rule_backed) { line_.name = std::move(name); }

    void add(const Instance& in) {
        ++line_.instances;
        const CondVerdict v = verdict_of(in, rule_backed_);
        if (v == CondVerdict::Fails && line_.verdict != CondVerdict::Fails) {
            line_.verdict = CondVerdict::Fails;
            for (const auto& j : in.premises) line_.witness.push_back(show(j));
            for (const auto& j : in.conclusions) line_.witness.push_back(show(j));
        } else if (v == CondVerdict::Inconclusive && line_.verdict == CondVerdict::Holds) {
            line_.verdict = CondVerdict::Inconclusive;
        }
    }

    // Both directions of an equivalence.
    void iff(const Judgment& a, const Judgment& b) {
        add({{a}, {b}});
        --line_.instances;
        add({{b}, {a}});
    }

    ConditionLine done() { return std::move(line_); }

private:
    bool rule_backed_;
    ConditionLine line_;
};

}  // namespace

std::vector<Formula> default_samples() { return {f("p"), f("q"), f("bot"), f("box p")}; }

std::vector<Formula> modal_grid() {
    static const char* const grid[] = {
        "p",           "q",           "bot",         "box p",         "p -> q",
        "box q",       "box bot",     "p -> bot",    "box (p -> q)",  "box box p",
        "top",         "box ~p",      "q -> p",      "box top",       "(p * q)",
        "box box bot", "box bot -> bot", "p -> box p", "(p -> q) -> p", "box (box p -> p)",
        "fp $x. box ($x -> bot)",     "fp $x. box $x",
    };
    std::vector<Formula> out;
    for (const char* g : grid) out.push_back(f(g));
    return out;
}

Formula induced_boxtimes(const Formula& a) { return Formula::box(Formula::imp(a, Formula::bot())); }

ConditionReport condition_suite(ConseqOracle& oracle, const std::vector<Formula>& samples) {
    for (const auto& s : samples)
        if (!s.closed()) throw Error(ErrorCode::NotClosed, "sample " + to_string(s) + " is not closed");
    const Ruleset rs = oracle.ruleset();
    const bool sc = rs == Ruleset::Sc;
    ConditionReport rep;
    rep.ruleset = rs;
    rep.samples = samples;
    auto J = [&](std::vector<Formula> g, const Formula& phi) -> Judgment { return oracle.judge(g, phi); };
    const Formula bot = Formula::bot(), t = top();
    const auto grid = modal_grid();
    // Contexts: empty or a single sample.
    std::vector<std::vector<Formula>> ctx{{}};
    for (const auto& s : samples) ctx.push_back({s});

    {
        LineBuilder b("I1", false);
        for (const auto& phi : samples) b.add({{}, {J({phi}, phi)}});
        rep.lines.push_back(b.done());
    }
    {
        // Gamma, psi |- phi and delta |- psi give Gamma, delta |- phi.
        LineBuilder b("I2", true);
        for (const auto& g : ctx)
            for (const auto& d : samples)
                for (const auto& psi : samples)
                    for (const auto& phi : samples) {
                        Judgment p1 = J(cat(g, {psi}), phi), p2 = J({d}, psi);
                        Sequent goal{cat(g, {d}), {phi}};
                        Judgment c = p1.verdict == Tri::Yes && p2.verdict == Tri::Yes
                                         ? constructed(goal,
                                                       compose(*p2.proof, 0, *p1.proof,
                                                               index_in(p1.proof->conclusion.ante, psi)),
                                                       rs)
                                         : J(goal.ante, phi);
                        b.add({{p1, p2}, {c}});
                    }
        rep.lines.push_back(b.done());
    }
    {
        LineBuilder b("I3", false);
        for (const auto& g : ctx)
            for (const auto& phi : samples)
                for (const auto& psi : samples) b.iff(J(cat(g, {phi}), psi), J(g, Formula::imp(phi, psi)));
        rep.lines.push_back(b.done());
    }
    {
        LineBuilder b("I4", false);
        for (const auto& g : ctx)
            for (const auto& phi : samples) b.iff(J(cat(g, {t}), phi), J(g, phi));
        rep.lines.push_back(b.done());
    }
    {
        LineBuilder b("conjunction", false);
        for (const auto& phi : samples)
            for (const auto& psi : samples)
                for (const auto& th : samples) b.iff(J({phi, psi}, th), J({tensor(phi, psi)}, th));
        rep.lines.push_back(b.done());
    }
    {
        LineBuilder b("imp-prop-i", false);
        for (const auto& g : ctx)
            for (const auto& d : samples)
                for (const auto& phi : samples)
                    for (const auto& psi : samples)
                        b.add({{J(g, Formula::imp(phi, psi)), J({d}, phi)}, {J(cat(g, {d}), psi)}});
        rep.lines.push_back(b.done());
    }
    {
        LineBuilder b("imp-prop-ii", false);
        const auto ext = cat(samples, {Formula::imp(t, bot)});
        for (const auto& a1 : ext)
            for (const auto& a2 : ext)
                for (const auto& b1 : ext)
                    for (const auto& b2 : ext) {
                        Instance in{{J({a1}, a2), J({a2}, a1), J({b1}, b2), J({b2}, b1)}, {}};
                        if (std::any_of(in.premises.begin(), in.premises.end(),
                                        [](const Judgment& j) { return j.verdict == Tri::No; })) {
                            b.add(in);  // vacuous; skip the conclusion searches
                            continue;
                        }
                        const Formula l = Formula::imp(a1, b1), r = Formula::imp(a2, b2);
                        in.conclusions = {J({l}, r), J({r}, l)};
                        b.add(in);
                    }
        rep.lines.push_back(b.done());
    }
    {
        LineBuilder b("imp-prop-iii", false);
        for (const auto& g : ctx)
            for (const auto& phi : samples)
                for (const auto& psi : samples)
                    b.add({{J(cat(g, {phi}), psi)}, {J(cat(g, {neg(psi)}), neg(phi))}});
        rep.lines.push_back(b.done());
    }
    {
        LineBuilder b("L1", false);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t k = 0; k < 6; ++k) {
                const Formula &phi = grid[i], &psi = grid[k];
                b.add({{}, {J({Formula::box(Formula::imp(phi, psi))},
                              Formula::imp(Formula::box(phi), Formula::box(psi)))}});
            }
        rep.lines.push_back(b.done());
    }
    {
        LineBuilder b("L2", false);
        for (const auto& phi : grid) b.add({{}, {J({Formula::box(phi)}, Formula::box(Formula::box(phi)))}});
        rep.lines.push_back(b.done());
    }
    {
        LineBuilder b("L3", true);
        for (const auto& chi : grid) {
            const Formula th = Formula::imp(chi, chi);
            Judgment p = J({}, th);
            Judgment c = p.verdict == Tri::Yes
                             ? constructed(Sequent{{}, {Formula::box(th)}},
                                           Proof{{{}, {Formula::box(th)}}, Annotation::box(0, {}, {}), {*p.proof}},
                                           rs)
                             : J({}, Formula::box(th));
            b.add({{p}, {c}});
        }
        rep.lines.push_back(b.done());
    }
    {
        // Gamma |- phi gives box Gamma |- box phi.
        LineBuilder b("lob-equiv-ii", false);
        std::vector<std::vector<Formula>> gs = ctx;
        for (std::size_t i = 0; i < samples.size(); ++i)
            for (std::size_t k = i; k < samples.size(); ++k) gs.push_back({samples[i], samples[k]});
        for (const auto& g : gs)
            for (const auto& phi : samples) b.add({{J(g, phi)}, {J(boxed(g), Formula::box(phi))}});
        rep.lines.push_back(b.done());
    }
    {
        // Gamma, box Delta |- phi gives box Gamma, box Delta |- box phi.
        LineBuilder b("lob-equiv-iii", false);
        for (const auto& g : ctx)
            for (const auto& d : ctx)
                for (const auto& phi : samples)
                    b.add({{J(cat(g, boxed(d)), phi)}, {J(cat(boxed(g), boxed(d)), Formula::box(phi))}});
        rep.lines.push_back(b.done());
    }
    {
        // The three formulations must agree on the samples.
        auto v = [&](const char* n) { return rep.line(n).verdict; };
        const auto all = [](std::initializer_list<CondVerdict> vs) {
            for (auto x : vs)
                if (x != CondVerdict::Holds) return x;
            return CondVerdict::Holds;
        };
        const CondVerdict i = all({v("L1"), v("L2"), v("L3")});
        const CondVerdict ii = all({v("L2"), v("lob-equiv-ii")});
        const CondVerdict iii = v("lob-equiv-iii");
        ConditionLine l{"lob-equivalence", CondVerdict::Holds, 3, {}};
        if (i == CondVerdict::Inconclusive || ii == CondVerdict::Inconclusive ||
            iii == CondVerdict::Inconclusive) {
            l.verdict = CondVerdict::Inconclusive;
        } else if (i != ii || ii != iii) {
            l.verdict = CondVerdict::Fails;
            l.witness = {std::string("(i) ") + to_string(i), std::string("(ii) ") + to_string(ii),
                         std::string("(iii) ") + to_string(iii)};
        } else {
            l.verdict = i;
        }
        rep.lines.push_back(l);
    }

    // Structural probes. Under Sc, contraction is a rule.
    auto contraction_line = [&](const std::string& name, bool boxed_only) {
        LineBuilder b(name, sc);
        for (const auto& base : samples) {
            const Formula phi = boxed_only ? Formula::box(base) : base;
            std::vector<Formula> targets{boxed_only ? Formula::box(tensor(base, base)) : tensor(base, base)};
            for (const auto& s : samples) targets.push_back(s);
            for (const auto& psi : targets) {
                Judgment prem = J({phi, phi}, psi);
                Judgment c = J({phi}, psi);
                if (sc && prem.verdict == Tri::Yes && c.verdict != Tri::Yes) {
                    Proof pr = relayout(*prem.proof, Sequent{{phi, phi}, {psi}});
                    c = constructed(c.sequent, Proof{{{phi}, {psi}}, Annotation::contraction(0, 1), {pr}}, rs);
                }
                b.add({{prem}, {c}});
            }
        }
        return b.done();
    };
    auto weakening_line = [&](const std::string& name, bool boxed_only) {
        LineBuilder b(name, false);
        for (const auto& g : ctx)
            for (const auto& psi : samples)
                for (const auto& base : samples) {
                    const Formula phi = boxed_only ? Formula::box(base) : base;
                    Judgment prem = J(g, psi);
                    Sequent goal{cat(g, {phi}), {psi}};
                    Judgment c;
                    if (prem.verdict == Tri::Yes && !check_proof(*prem.proof, Ruleset::S))
                        c = constructed(goal, weaken(*prem.proof, {phi}, {}), rs);
                    else
                        c = J(goal.ante, psi);
                    b.add({{prem}, {c}});
                }
        return b.done();
    };
    rep.lines.push_back(contraction_line("contraction", false));
    rep.lines.push_back(weakening_line("weakening", false));
    rep.lines.push_back(contraction_line("box-contraction", true));
    rep.lines.push_back(weakening_line("box-weakening", true));
    return rep;
}

std::string format_report(const ConditionReport& report) {
    std::ostringstream out;
    for (const auto& l : report.lines) {
        out << l.name << ' ' << to_string(l.verdict) << " instances=" << l.instances;
        if (!l.witness.empty()) {
            out << " [";
            for (std::size_t i = 0; i < l.witness.size(); ++i) out << (i ? " ; " : "") << l.witness[i];
            out << ']';
        }
        out << '\n';
    }
    return out.str();
}

const char* to_string(ApsCondition c) {
    switch (c) {
        case ApsCondition::C1: return "C1";
        case ApsCondition::C2: return "C2";
        case ApsCondition::C3: return "C3";
        case ApsCondition::C4: return "C4";
    }
    return "?";
}

std::string ProbeOutcome::describe() const {
    std::string s = to_string(verdict);
    for (const auto& j : judgments) s += " ; " + show(j);
    return s;
}

ProbeOutcome aps_condition_probe(ConseqOracle& oracle, ApsCondition c, const Formula& x, const Formula& y) {
    const Ruleset rs = oracle.ruleset();
    auto J = [&](const Formula& a, const Formula& b) -> Judgment { return oracle.judge({a}, b); };
    const Formula bt = induced_boxtimes(top());
    Instance in;
    bool rule_backed = false;
    switch (c) {
        case ApsCondition::C1: {
            // x <= y gives box x <= box y and boxtimes y <= boxtimes x.
            rule_backed = true;
            Judgment p = J(x, y);
            in.premises = {p};
            if (p.verdict == Tri::Yes) {
                const Proof pr = relayout(*p.proof, Sequent{{x}, {y}});
                in.conclusions = {
                    constructed(Sequent{{Formula::box(x)}, {Formula::box(y)}}, c1_box(pr), rs),
                    constructed(Sequent{{induced_boxtimes(y)}, {induced_boxtimes(x)}}, c1_boxtimes(pr), rs)};
            } else {
                in.conclusions = {J(Formula::box(x), Formula::box(y)), J(induced_boxtimes(y), induced_boxtimes(x))};
            }
            break;
        }
        case ApsCondition::C2:
            in.conclusions = {J(top(), induced_boxtimes(Formula::bot())),
                              oracle.judge({}, induced_boxtimes(Formula::bot()))};
            break;
        case ApsCondition::C3: {
            Judgment pb = J(x, Formula::box(y)), px = J(x, induced_boxtimes(y));
            in.premises = {pb, px};
            Judgment concl = J(x, bt);
            if (rs == Ruleset::Sc) {
                rule_backed = true;
                if (concl.verdict != Tri::Yes && pb.verdict == Tri::Yes && px.verdict == Tri::Yes) {
                    Proof p = c3_construct(relayout(*pb.proof, Sequent{{x}, {Formula::box(y)}}),
                                           relayout(*px.proof, Sequent{{x}, {induced_boxtimes(y)}}), x, y);
                    concl = constructed(concl.sequent, std::move(p), rs);
                }
            }
            in.conclusions = {concl};
            break;
        }
        case ApsCondition::C4:
            in.conclusions = {J(induced_boxtimes(x), Formula::box(induced_boxtimes(x)))};
            break;
    }
    ProbeOutcome out;
    out.verdict = verdict_of(in, rule_backed);
    out.judgments = in.premises;
    out.judgments.insert(out.judgments.end(), in.conclusions.begin(), in.conclusions.end());
    return out;
}

Sequent g2_sequent() { return parse_sequent("box (box bot -> bot) => box bot"); }

TriangleReport consistency_triangle(ConseqOracle& oracle, const std::string& var) {
    const Formula P = goedel_fp(var);
    const Formula bt = induced_boxtimes(top());
    TriangleReport r;
    r.g2 = oracle.judge(g2_sequent());
    r.c1_box = aps_condition_probe(oracle, ApsCondition::C1, induced_boxtimes(P), P);
    r.c1_boxtimes = aps_condition_probe(oracle, ApsCondition::C1, P, bt);
    r.c2 = aps_condition_probe(oracle, ApsCondition::C2);
    r.c4 = aps_condition_probe(oracle, ApsCondition::C4, P);
    r.c3 = aps_condition_probe(oracle, ApsCondition::C3, P, P);
    r.premises_hold = r.g2.verdict == Tri::No && r.c1_box.verdict == CondVerdict::Holds &&
                      r.c1_boxtimes.verdict == CondVerdict::Holds && r.c2.verdict == CondVerdict::Holds &&
                      r.c4.verdict == CondVerdict::Holds;
    r.implication_holds = !r.premises_hold || r.c3.verdict == CondVerdict::Fails;
    return r;
}

Proof compile_g2_proof(Ruleset ruleset, const std::string& var) {
    if (ruleset != Ruleset::Sc)
        throw Error(ErrorCode::RulesetUnsupported,
                    "the formalized G2 proof needs contraction; ruleset S has none");
    const Formula P = goedel_fp(var);
    const Formula bP = induced_boxtimes(P);
    const Formula bT = induced_boxtimes(top());
    const Formula bbT = induced_boxtimes(bT);
    if (!(unfold(P) == bP)) throw Error(ErrorCode::Internal, "unfolding of P is not boxtimes P");

    const Proof id{{{bP}, {bP}}, Annotation::init(0, 0), {}};
    const Proof fix_up{{{P}, {bP}}, Annotation::principal(Rule::FixL, 0), {id}};
    const Proof fix_down{{{bP}, {P}}, Annotation::principal(Rule::FixR, 0), {id}};
    const Proof c4{{{bP}, {Formula::box(bP)}}, Annotation::box(0, {}, {0}), {id}};
    const Proof c1{{{Formula::box(bP)}, {Formula::box(P)}}, Annotation::box(0, {0}, {}), {fix_down}};
    const Proof p_box = compose(compose(fix_up, 0, c4, 0), 0, c1, 0);  // P => box P

    // The one contraction: P => boxtimes top.
    const Proof x = c3_construct(p_box, fix_up, P, P);
    const Proof y = c1_boxtimes(x);  // boxtimes boxtimes top => boxtimes P

    auto cut = [](const Proof& l, const Proof& r) {
        return Proof{cut_conclusion(l.conclusion, 0, r.conclusion, 0), Annotation::cut(0, 0), {l, r}};
    };
    const Proof m = cut(cut(y, fix_down), x);  // boxtimes boxtimes top => boxtimes top

    const Sequent g2 = g2_sequent();
    SearchResult a = search(Sequent{g2.ante, {bbT}});
    SearchResult b = search(Sequent{{bT}, g2.succ});
    if (a.verdict != Verdict::Provable || b.verdict != Verdict::Provable)
        throw Error(ErrorCode::Internal, "bridging sequents are not provable");
    Proof root = cut(cut(*a.witness, m), *b.witness);
    if (auto e = check_proof(root, Ruleset::Sc))
        throw Error(ErrorCode::Internal, "compiled proof fails the Sc checker: " + e->describe());
    return root;
}

FixedPointDemo uniqueness_failure_demo(ConseqOracle& oracle, std::size_t n) {
    if (oracle.ruleset() != Ruleset::S) throw Error(ErrorCode::RulesetUnsupported, "the demo needs the S oracle");
    if (n == 0 || n > 5) throw Error(ErrorCode::InvalidInput, "n must be between 1 and 5");
    FixedPointDemo d;
    for (std::size_t i = 1; i <= n; ++i) d.points.push_back(goedel_fp("x" + std::to_string(i)));
    d.ok = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (i == k) continue;
            d.cross.push_back(oracle.judge({d.points[i]}, d.points[k]));
            d.ok = d.ok && d.cross.back().verdict == Tri::No;
        }
    for (const auto& p : d.points) {
        d.equivalences.push_back(oracle.judge({p}, induced_boxtimes(p)));
        d.equivalences.push_back(oracle.judge({induced_boxtimes(p)}, p));
        d.ok = d.ok && d.equivalences[d.equivalences.size() - 1].verdict == Tri::Yes &&
               d.equivalences[d.equivalences.size() - 2].verdict == Tri::Yes;
    }
    return d;
}

}  // namespace cfs
