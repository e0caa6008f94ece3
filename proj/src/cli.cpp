#include "cfs/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

#include "cfs/aps.hpp"
#include "cfs/bridge.hpp"
#include "cfs/error.hpp"
#include "cfs/proof_io.hpp"
#include "cfs/search.hpp"
#include "cfs/suite.hpp"
#include "cfs/syntax.hpp"
#include "cfs/transform.hpp"

namespace cfs {

namespace {

struct Options {
    bool porcelain = false;
    std::string ruleset = "s";
    std::size_t max_depth = SearchBudget{}.max_depth;
    std::size_t max_sequents = SearchBudget{}.max_sequents;
    std::size_t left_occ = 0, right_occ = 0;
    std::string out_path;
    std::string text, path, path2, token, add_left, add_right, suite;
    int criterion = 0;
    std::size_t count = 3;
    bool timing = false;
};

Ruleset ruleset_of(const std::string& s) { return s == "sc" ? Ruleset::Sc : Ruleset::S; }

std::string join(const std::vector<std::string>& xs, const char* sep) {
    std::string r;
    for (std::size_t i = 0; i < xs.size(); ++i) r += (i ? sep : "") + xs[i];
    return r;
}

std::vector<Formula> parse_side(const std::string& text) {
    if (text.find_first_not_of(" \t") == std::string::npos) return {};
    return parse_sequent(text + " =>").ante;
}

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    // Writes the proof to --out, or prints it when no path was given.
    void emit_proof(const Proof& p) {
        if (!o_.out_path.empty())
            write_proof_file(p, o_.out_path);
        else
            out_ << write_proof(p);
    }

    int parse() {
        if (o_.text.find("=>") != std::string::npos) {
            const Sequent s = parse_sequent(o_.text);
            out_ << (o_.porcelain ? "sequent\t" : "") << to_string(s) << '\n';
        } else {
            const Formula f = parse_formula(o_.text);
            out_ << (o_.porcelain ? "formula\t" : "") << to_string(f) << '\n';
        }
        return kExitOk;
    }

    int check() {
        const Ruleset rs = ruleset_of(o_.ruleset);
        const Proof p = read_proof_file(o_.path);
        if (auto e = check_proof(p, rs)) {
            if (o_.porcelain) {
                std::string where = "root";
                for (std::size_t i : e->path) where += "." + std::to_string(i);
                out_ << "check\t" << to_string(rs) << "\tinvalid\t" << where << '\t' << to_string(e->rule) << '\t'
                     << e->message << '\n';
            } else {
                out_ << "invalid under " << to_string(rs) << ": " << e->describe() << '\n';
            }
            return kExitFailed;
        }
        if (o_.porcelain)
            out_ << "check\t" << to_string(rs) << "\tvalid\t" << proof_size(p) << '\t' << to_string(p.conclusion)
                 << '\n';
        else
            out_ << "valid " << to_string(rs) << " proof of " << to_string(p.conclusion) << " (" << proof_size(p)
                 << " nodes)\n";
        return kExitOk;
    }

    int search() {
        if (ruleset_of(o_.ruleset) != Ruleset::S)
            throw Error(ErrorCode::RulesetUnsupported, "search supports --ruleset s only");
        const Sequent goal = parse_sequent(o_.text);
        SearchBudget b;
        b.max_depth = o_.max_depth;
        b.max_sequents = o_.max_sequents;
        const SearchResult r = cfs::search(goal, b);
        if (o_.porcelain)
            out_ << "search\t" << to_string(r.verdict) << '\t' << r.visited << '\t' << to_string(goal) << '\n';
        else
            out_ << to_string(goal) << "\n" << to_string(r.verdict) << " (" << r.visited << " sequents visited)\n";
        if (r.witness) emit_proof(*r.witness);
        switch (r.verdict) {
            case Verdict::Provable: return kExitOk;
            case Verdict::Refuted: return kExitFailed;
            default: return kExitUnknown;
        }
    }

    int cut() {
        CutProblem pr{read_proof_file(o_.path), read_proof_file(o_.path2), o_.left_occ, o_.right_occ};
        const std::size_t ls = proof_size(pr.left), rs = proof_size(pr.right);
        const Proof p = eliminate_cut(pr);
        if (o_.porcelain)
            out_ << "cut\t" << to_string(classify_cut(pr)) << '\t' << proof_size(p) << '\t' << ls << '\t' << rs
                 << '\t' << to_string(p.conclusion) << '\n';
        else
            out_ << "cut-free proof of " << to_string(p.conclusion) << ": " << proof_size(p) << " nodes from "
                 << ls << " + " << rs << " (" << to_string(classify_cut(pr)) << ")\n";
        emit_proof(p);
        return kExitOk;
    }

    int weaken() {
        const Proof in = read_proof_file(o_.path);
        if (auto e = check_proof(in, Ruleset::S))
            throw Error(ErrorCode::InvalidInput, "input is not a cut-free proof: " + e->describe());
        const Proof p = cfs::weaken(in, parse_side(o_.add_left), parse_side(o_.add_right));
        if (o_.porcelain)
            out_ << "weaken\t" << proof_size(in) << '\t' << proof_size(p) << '\t' << to_string(p.conclusion) << '\n';
        else
            out_ << "weakened proof of " << to_string(p.conclusion) << ": " << proof_size(p) << " nodes (input "
                 << proof_size(in) << ")\n";
        emit_proof(p);
        return kExitOk;
    }

    int aps_check() {
        const ApsInstance a = read_aps_file(o_.path);
        const auto rep = check_conditions(a);
        const auto fps = goedelian_fixed_points(a);
        std::vector<std::string> fp_names;
        for (Elem e : fps) fp_names.push_back(a.names[e]);
        if (o_.porcelain) {
            for (const auto& c : rep) {
                std::vector<std::string> w;
                for (Elem e : c.witness) w.push_back(a.names[e]);
                out_ << "condition\t" << c.name << '\t'
                     << (c.holds ? "holds" : (c.informational ? "differs" : "fails")) << '\t' << join(w, " ")
                     << '\t' << c.detail << '\n';
            }
            out_ << "fixed-points\t" << join(fp_names, " ") << '\n';
        } else {
            out_ << format_report(a, rep);
            out_ << "goedelian fixed points: " << (fp_names.empty() ? "none" : join(fp_names, " ")) << '\n';
        }
        if (!passes_c1_c5(rep)) return kExitFailed;
        const Verdict2 u = uniqueness_check(a);
        if (o_.porcelain)
            out_ << "uniqueness\t" << (u.holds ? "holds" : "fails") << '\t' << u.detail << '\n';
        else
            out_ << "uniqueness " << (u.holds ? "holds" : "fails") << (u.detail.empty() ? "" : ": " + u.detail)
                 << '\n';
        return u.holds ? kExitOk : kExitFailed;
    }

    int aps_g2() {
        const ApsInstance a = read_aps_file(o_.path);
        const Elem p = a.index_of(o_.token);
        DerivationTrace tr;
        try {
            tr = g2_trace(a, p);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotFixedPoint && e.code() != ErrorCode::ConditionMissing) throw;
            out_ << (o_.porcelain ? "g2\tfails\t" : "no derivation: ") << e.what() << '\n';
            return kExitFailed;
        }
        const auto bad = validate_trace(a, tr);
        const Verdict2 c = g2_consistency_check(a, p);
        if (o_.porcelain) {
            for (std::size_t i = 0; i < tr.steps.size(); ++i) {
                const auto& s = tr.steps[i];
                out_ << "step\t" << i << '\t' << to_string(s.rule) << '\t' << a.names[s.lhs] << '\t'
                     << a.names[s.rhs] << '\n';
            }
            out_ << "trace\t" << (bad ? "invalid\t" + *bad : std::string("valid")) << '\n';
            out_ << "consistency\t" << (c.holds ? "holds" : "fails") << '\t' << c.detail << '\n';
        } else {
            out_ << format_trace(a, tr);
            out_ << "trace " << (bad ? "invalid: " + *bad : std::string("valid")) << '\n';
            out_ << "consistency " << (c.holds ? "holds" : "fails") << (c.detail.empty() ? "" : ": " + c.detail)
                 << '\n';
        }
        return !bad && c.holds ? kExitOk : kExitFailed;
    }

    int suite() {
        if (o_.suite == "paper") return paper();
        if (o_.suite == "conditions") return conditions();
        if (o_.suite == "fixed-points") return fixed_points();
        throw Error(ErrorCode::InvalidInput, "unknown suite '" + o_.suite + "' (paper, conditions, fixed-points)");
    }

private:
    int paper() {
        std::vector<CriterionResult> rs;
        if (o_.criterion)
            rs.push_back(run_criterion(o_.criterion));
        else
            rs = run_acceptance_suite();
        bool all = true;
        for (const auto& r : rs) {
            all = all && r.pass;
            if (o_.porcelain)
                out_ << "criterion\t" << r.id << '\t' << (r.pass ? "PASS" : "FAIL") << '\t' << r.name << '\t'
                     << r.detail << '\n';
            else
                out_ << format_criterion(r, o_.timing) << '\n';
        }
        return all ? kExitOk : kExitFailed;
    }

    int conditions() {
        SearchBudget b;
        b.max_depth = o_.max_depth;
        b.max_sequents = o_.max_sequents;
        ConseqOracle oracle = ruleset_of(o_.ruleset) == Ruleset::S ? ConseqOracle::s(b) : ConseqOracle::sc(b);
        const ConditionReport rep = condition_suite(oracle, default_samples());
        bool failed = false, unknown = false;
        for (const auto& l : rep.lines) {
            failed = failed || l.verdict == CondVerdict::Fails;
            unknown = unknown || l.verdict == CondVerdict::Inconclusive;
            if (o_.porcelain)
                out_ << "condition\t" << l.name << '\t' << to_string(l.verdict) << '\t' << l.instances << '\t'
                     << join(l.witness, " ; ") << '\n';
        }
        if (!o_.porcelain) out_ << format_report(rep);
        return failed ? kExitFailed : unknown ? kExitUnknown : kExitOk;
    }

    int fixed_points() {
        ConseqOracle oracle = ConseqOracle::s();
        const FixedPointDemo d = uniqueness_failure_demo(oracle, o_.count);
        for (const auto& p : d.points) out_ << (o_.porcelain ? "point\t" : "fixed point ") << to_string(p) << '\n';
        for (const auto* group : {&d.cross, &d.equivalences})
            for (const auto& j : *group)
                out_ << (o_.porcelain ? "judgment\t" : "") << to_string(j.sequent) << (o_.porcelain ? "\t" : " ")
                     << to_string(j.verdict) << '\n';
        out_ << (o_.porcelain ? "demo\t" : "demo ") << (d.ok ? "ok" : "failed") << '\n';
        return d.ok ? kExitOk : kExitFailed;
    }

    const Options& o_;
    std::ostream& out_;
};

// Points at the offending byte of a one-line input.
void caret(std::ostream& err, const std::string& text, std::size_t offset) {
    if (text.find('\n') != std::string::npos || offset > text.size()) return;
    err << "  " << text << "\n  " << std::string(offset, ' ') << "^\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"cut-free fixed-point sequent calculus toolkit", "cfs"};
    app.require_subcommand(1);
    app.add_flag("--porcelain", o.porcelain, "one tab-separated record per line");

    auto ruleset = [&](CLI::App* c) {
        c->add_option("--ruleset", o.ruleset, "s or sc")
            ->transform(CLI::IsMember({"s", "sc"}, CLI::ignore_case));
    };
    auto budget = [&](CLI::App* c) {
        c->add_option("--max-depth", o.max_depth)->check(CLI::PositiveNumber);
        c->add_option("--max-sequents", o.max_sequents)->check(CLI::PositiveNumber);
    };

    auto* parse = app.add_subcommand("parse", "parse and print a formula or sequent");
    parse->add_option("text", o.text)->required();

    auto* check = app.add_subcommand("check", "check a proof file");
    check->add_option("proof", o.path)->required();
    ruleset(check);

    auto* search = app.add_subcommand("search", "backward proof search in S");
    search->add_option("sequent", o.text)->required();
    ruleset(search);
    budget(search);
    search->add_option("--out", o.out_path, "write the witness proof here");

    auto* cut = app.add_subcommand("cut", "eliminate a cut between two proofs");
    cut->add_option("left", o.path)->required();
    cut->add_option("right", o.path2)->required();
    cut->add_option("--left-occ", o.left_occ, "succedent index in the left proof");
    cut->add_option("--right-occ", o.right_occ, "antecedent index in the right proof");
    cut->add_option("--out", o.out_path);

    auto* weaken = app.add_subcommand("weaken", "add formulas to the root of a proof");
    weaken->add_option("proof", o.path)->required();
    weaken->add_option("--add-left", o.add_left, "comma-separated formulas");
    weaken->add_option("--add-right", o.add_right, "comma-separated formulas");
    weaken->add_option("--out", o.out_path);

    auto* aps_check = app.add_subcommand("aps-check", "check APS conditions of a finite instance");
    aps_check->add_option("aps", o.path)->required();

    auto* aps_g2 = app.add_subcommand("aps-g2", "derive boxtimes boxtimes top <= boxtimes top");
    aps_g2->add_option("aps", o.path)->required();
    aps_g2->add_option("fixed-point", o.token)->required();

    auto* suite = app.add_subcommand("suite", "run a named battery: paper, conditions, fixed-points");
    suite->add_option("name", o.suite)->required();
    suite->add_option("--criterion", o.criterion, "paper: run one criterion")->check(CLI::Range(1, 10));
    suite->add_option("--count", o.count, "fixed-points: how many")->check(CLI::Range(1, 5));
    suite->add_flag("--timing", o.timing, "paper: append wall time");
    ruleset(suite);
    budget(suite);

    for (auto* c : app.get_subcommands({})) c->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    Runner run(o, out);
    try {
        if (parse->parsed()) return run.parse();
        if (check->parsed()) return run.check();
        if (search->parsed()) return run.search();
        if (cut->parsed()) return run.cut();
        if (weaken->parsed()) return run.weaken();
        if (aps_check->parsed()) return run.aps_check();
        if (aps_g2->parsed()) return run.aps_g2();
        if (suite->parsed()) return run.suite();
    } catch (const ParseError& e) {
        err << "error: parse " << e.what() << '\n';
        if (parse->parsed() || search->parsed()) caret(err, o.text, e.offset());
        return kExitInput;
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        switch (e.code()) {
            case ErrorCode::Internal:
            case ErrorCode::MeasureViolation:
            case ErrorCode::ConditionMissing:
            case ErrorCode::NotFixedPoint:
                return kExitFailed;
            default:
                return kExitInput;
        }
    }
    return kExitInput;
}

}  // namespace cfs
