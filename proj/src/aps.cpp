#include "cfs/aps.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cfs/error.hpp"

namespace cfs {

Elem ApsInstance::index_of(std::string_view name) const {
    for (Elem i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    throw Error(ErrorCode::InvalidInput, "unknown carrier element '" + std::string(name) + "'");
}

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> words(std::string_view s) {
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::vector<Elem> parse_table(const ApsInstance& inst, const std::vector<std::string>& ws,
                              const std::string& what) {
    std::vector<Elem> table(inst.size(), inst.size());
    for (std::size_t k = 1; k < ws.size(); ++k) {
        const auto arrow = ws[k].find("->");
        if (arrow == std::string::npos)
            throw Error(ErrorCode::InvalidInput, what + ": expected a->b, got '" + ws[k] + "'");
        const Elem from = inst.index_of(ws[k].substr(0, arrow));
        const Elem to = inst.index_of(ws[k].substr(arrow + 2));
        if (table[from] != inst.size())
            throw Error(ErrorCode::InvalidInput, what + ": " + inst.names[from] + " mapped twice");
        table[from] = to;
    }
    for (Elem i = 0; i < inst.size(); ++i)
        if (table[i] == inst.size())
            throw Error(ErrorCode::InvalidInput, what + " is not total: " + inst.names[i] + " unmapped");
    return table;
}

}  // namespace

ApsInstance parse_aps(std::string_view text) {
    ApsInstance inst;
    bool have_carrier = false, have_top = false, have_bot = false, have_box = false, have_bt = false;
    std::vector<std::string> sections;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            sections.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    sections.push_back(cur);
    for (const auto& raw : sections) {
        const std::string sec = trim(raw);
        if (sec.empty()) continue;
        const auto ws = words(sec);
        const std::string& head = ws[0];
        if (head == "carrier") {
            inst.names.assign(ws.begin() + 1, ws.end());
            auto sorted = inst.names;
            std::sort(sorted.begin(), sorted.end());
            if (sorted.empty()) throw Error(ErrorCode::InvalidInput, "empty carrier");
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw Error(ErrorCode::InvalidInput, "carrier lists an element twice");
            inst.leq.assign(inst.size(), std::vector<bool>(inst.size(), false));
            for (Elem i = 0; i < inst.size(); ++i) inst.leq[i][i] = true;
            have_carrier = true;
            continue;
        }
        if (!have_carrier) throw Error(ErrorCode::InvalidInput, "'carrier' must come first");
        if (head == "top" || head == "bot") {
            if (ws.size() != 2) throw Error(ErrorCode::InvalidInput, head + " takes one element");
            (head == "top" ? inst.top : inst.bot) = inst.index_of(ws[1]);
            (head == "top" ? have_top : have_bot) = true;
        } else if (head == "leq") {
            std::string rest = sec.substr(3);
            std::stringstream ss(rest);
            for (std::string pair; std::getline(ss, pair, ',');) {
                const auto pw = words(pair);
                if (pw.empty()) continue;
                if (pw.size() != 2)
                    throw Error(ErrorCode::InvalidInput, "leq pair '" + trim(pair) + "' needs two elements");
                inst.leq[inst.index_of(pw[0])][inst.index_of(pw[1])] = true;
            }
        } else if (head == "box") {
            inst.box = parse_table(inst, ws, "box");
            have_box = true;
        } else if (head == "boxtimes") {
            inst.boxtimes = parse_table(inst, ws, "boxtimes");
            have_bt = true;
        } else {
            throw Error(ErrorCode::InvalidInput, "unknown section '" + head + "'");
        }
    }
    if (!have_carrier || !have_top || !have_bot || !have_box || !have_bt)
        throw Error(ErrorCode::InvalidInput, "instance needs carrier, top, bot, box and boxtimes");
    return inst;
}

ApsInstance read_aps_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_aps(buf.str());
}

std::string to_text(const ApsInstance& inst) {
    std::ostringstream out;
    out << "carrier";
    for (const auto& n : inst.names) out << ' ' << n;
    out << " ; top " << inst.names[inst.top] << " ; bot " << inst.names[inst.bot] << " ; leq";
    bool first = true;
    for (Elem x = 0; x < inst.size(); ++x)
        for (Elem y = 0; y < inst.size(); ++y)
            if (x != y && inst.le(x, y)) {
                out << (first ? " " : ", ") << inst.names[x] << ' ' << inst.names[y];
                first = false;
            }
    out << " ; box";
    for (Elem x = 0; x < inst.size(); ++x) out << ' ' << inst.names[x] << "->" << inst.names[inst.box[x]];
    out << " ; boxtimes";
    for (Elem x = 0; x < inst.size(); ++x)
        out << ' ' << inst.names[x] << "->" << inst.names[inst.boxtimes[x]];
    return out.str();
}

ApsInstance relabel(const ApsInstance& inst, const std::vector<Elem>& perm) {
    const std::size_t n = inst.size();
    ApsInstance out;
    out.names.resize(n);
    out.leq.assign(n, std::vector<bool>(n, false));
    out.box.resize(n);
    out.boxtimes.resize(n);
    for (Elem i = 0; i < n; ++i) out.names[perm[i]] = inst.names[i];
    out.top = perm[inst.top];
    out.bot = perm[inst.bot];
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) out.leq[perm[x]][perm[y]] = inst.leq[x][y];
        out.box[perm[x]] = perm[inst.box[x]];
        out.boxtimes[perm[x]] = perm[inst.boxtimes[x]];
    }
    return out;
}

std::vector<ConditionResult> check_conditions(const ApsInstance& a) {
    const std::size_t n = a.size();
    const auto& B = a.box;
    const auto& X = a.boxtimes;
    std::vector<ConditionResult> r;
    r.reserve(10);  // references returned by add() must stay valid
    auto add = [&](std::string name) -> ConditionResult& {
        r.push_back({std::move(name), true, false, {}, {}});
        return r.back();
    };
    auto fail = [&](ConditionResult& c, std::vector<Elem> w, std::string detail) {
        if (!c.holds) return;
        c.holds = false;
        c.witness = std::move(w);
        c.detail = std::move(detail);
    };
    auto nm = [&](Elem e) { return a.names[e]; };

    auto& refl = add("reflexivity");
    for (Elem x = 0; x < n; ++x)
        if (!a.le(x, x)) fail(refl, {x}, nm(x) + " </= " + nm(x));

    auto& trans = add("transitivity");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z)
                if (a.le(x, y) && a.le(y, z) && !a.le(x, z))
                    fail(trans, {x, y, z}, nm(x) + " <= " + nm(y) + " <= " + nm(z) + " but " + nm(x) +
                                               " </= " + nm(z));

    auto& c1 = add("C1");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            if (!a.le(x, y)) continue;
            if (!a.le(B[x], B[y]))
                fail(c1, {x, y}, nm(x) + " <= " + nm(y) + " but box " + nm(x) + " </= box " + nm(y));
            if (!a.le(X[y], X[x]))
                fail(c1, {x, y},
                     nm(x) + " <= " + nm(y) + " but boxtimes " + nm(y) + " </= boxtimes " + nm(x));
        }

    auto& c2 = add("C2");
    if (!a.le(a.top, X[a.bot]))
        fail(c2, {a.top, X[a.bot]}, "top </= boxtimes bot (= " + nm(X[a.bot]) + ")");

    const Elem xt = X[a.top];
    auto& c3 = add("C3");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (a.le(x, B[y]) && a.le(x, X[y]) && !a.le(x, xt))
                fail(c3, {x, y}, nm(x) + " <= box " + nm(y) + ", " + nm(x) + " <= boxtimes " + nm(y) +
                                     " but " + nm(x) + " </= boxtimes top");

    auto& c4 = add("C4");
    for (Elem x = 0; x < n; ++x)
        if (!a.le(X[x], B[X[x]])) fail(c4, {x}, "boxtimes " + nm(x) + " </= box boxtimes " + nm(x));

    auto& c5 = add("C5");
    for (Elem x = 0; x < n; ++x)
        if (!a.le(x, a.top)) fail(c5, {x}, nm(x) + " </= top");

    auto& c3p = add("C3'");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (a.le(X[x], B[y]) && a.le(X[x], X[y]) && !a.le(X[x], xt))
                fail(c3p, {x, y}, "boxtimes " + nm(x) + " </= boxtimes top");

    auto& c5p = add("C5'");
    for (Elem x = 0; x < n; ++x)
        if (!a.le(X[x], a.top)) fail(c5p, {x}, "boxtimes " + nm(x) + " </= top");

    auto& info = add("box-bot=boxtimes-top");
    info.informational = true;
    if (!a.eq(B[a.bot], xt))
        fail(info, {B[a.bot], xt}, "box bot = " + nm(B[a.bot]) + ", boxtimes top = " + nm(xt));
    return r;
}

bool holds(const std::vector<ConditionResult>& report, std::string_view name) {
    for (const auto& c : report)
        if (c.name == name) return c.holds;
    throw Error(ErrorCode::Internal, "no condition named " + std::string(name));
}

bool passes_c1_c5(const std::vector<ConditionResult>& report) {
    for (const char* c : {"reflexivity", "transitivity", "C1", "C2", "C3", "C4", "C5"})
        if (!holds(report, c)) return false;
    return true;
}

std::string format_report(const ApsInstance& inst, const std::vector<ConditionResult>& report) {
    std::ostringstream out;
    for (const auto& c : report) {
        out << c.name << ' ' << (c.holds ? "holds" : (c.informational ? "differs" : "fails"));
        if (!c.holds) {
            out << " [";
            for (std::size_t i = 0; i < c.witness.size(); ++i)
                out << (i ? " " : "") << inst.names[c.witness[i]];
            out << "] " << c.detail;
        }
        out << '\n';
    }
    return out.str();
}

std::vector<Elem> goedelian_fixed_points(const ApsInstance& inst) {
    std::vector<Elem> out;
    for (Elem p = 0; p < inst.size(); ++p)
        if (inst.eq(p, inst.boxtimes[p])) out.push_back(p);
    return out;
}

const char* to_string(TraceRule r) {
    switch (r) {
        case TraceRule::C1Box: return "C1-box";
        case TraceRule::C1Boxtimes: return "C1-boxtimes";
        case TraceRule::C3: return "C3";
        case TraceRule::C4: return "C4";
        case TraceRule::Trans: return "trans";
    }
    return "?";
}

namespace {

void require_fixed_point(const ApsInstance& inst, Elem p) {
    if (p >= inst.size()) throw Error(ErrorCode::InvalidInput, "element out of range");
    if (!inst.eq(p, inst.boxtimes[p]))
        throw Error(ErrorCode::NotFixedPoint, inst.names[p] + " is not a Goedelian fixed point");
}

}  // namespace

DerivationTrace g2_trace(const ApsInstance& a, Elem p) {
    require_fixed_point(a, p);
    const auto& B = a.box;
    const auto& X = a.boxtimes;
    const Elem bp = X[p], t = X[a.top];
    const Fact up{Fact::FixUp, 0}, down{Fact::FixDown, 0};
    auto step = [](std::size_t i) { return Fact{Fact::Step, i}; };

    DerivationTrace tr;
    tr.fixed_point = p;
    tr.steps = {
        {bp, B[bp], TraceRule::C4, p, 0, {}},
        {B[bp], B[p], TraceRule::C1Box, bp, p, {{down}}},
        {p, t, TraceRule::C3, p, p, {{up, step(0), step(1)}, {up}}},
        {X[t], bp, TraceRule::C1Boxtimes, p, t, {{step(2)}}},
        {X[t], t, TraceRule::Trans, 0, 0, {{step(3), down, step(2)}}},
    };
    static const char* needed[] = {"C4", "C1", "C3", "C1", "C1"};
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        const auto& s = tr.steps[i];
        if (!a.le(s.lhs, s.rhs))
            throw Error(ErrorCode::ConditionMissing,
                        std::string(needed[i]) + " fails on the instance needed at step " +
                            std::to_string(i + 1) + ": " + a.names[s.lhs] + " </= " + a.names[s.rhs]);
    }
    return tr;
}

std::optional<std::string> validate_trace(const ApsInstance& a, const DerivationTrace& tr) {
    const Elem p = tr.fixed_point;
    if (p >= a.size() || !a.eq(p, a.boxtimes[p])) return "fixed-point hypothesis does not hold";
    const auto& B = a.box;
    const auto& X = a.boxtimes;
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        const TraceStep& s = tr.steps[i];
        const std::string at = "step " + std::to_string(i + 1) + ": ";
        std::vector<std::pair<Elem, Elem>> prem;
        for (const auto& chain : s.premises) {
            if (chain.empty()) return at + "empty premise chain";
            std::optional<std::pair<Elem, Elem>> acc;
            for (const Fact& f : chain) {
                std::pair<Elem, Elem> e;
                if (f.kind == Fact::Step) {
                    if (f.step >= i) return at + "refers to a later step";
                    e = {tr.steps[f.step].lhs, tr.steps[f.step].rhs};
                } else if (f.kind == Fact::FixUp) {
                    e = {p, X[p]};
                } else {
                    e = {X[p], p};
                }
                if (acc && acc->second != e.first) return at + "premise chain does not link";
                acc = acc ? std::pair{acc->first, e.second} : e;
            }
            prem.push_back(*acc);
        }
        auto shape = [&](bool ok) -> std::optional<std::string> {
            if (!ok) return at + "does not have the shape of " + to_string(s.rule);
            return std::nullopt;
        };
        std::optional<std::string> bad;
        switch (s.rule) {
            case TraceRule::C4:
                bad = shape(prem.empty() && s.lhs == X[s.x] && s.rhs == B[X[s.x]]);
                break;
            case TraceRule::C1Box:
                bad = shape(prem.size() == 1 && prem[0] == std::pair{s.x, s.y} && s.lhs == B[s.x] &&
                            s.rhs == B[s.y]);
                break;
            case TraceRule::C1Boxtimes:
                bad = shape(prem.size() == 1 && prem[0] == std::pair{s.x, s.y} && s.lhs == X[s.y] &&
                            s.rhs == X[s.x]);
                break;
            case TraceRule::C3:
                bad = shape(prem.size() == 2 && prem[0] == std::pair{s.x, B[s.y]} &&
                            prem[1] == std::pair{s.x, X[s.y]} && s.lhs == s.x && s.rhs == X[a.top]);
                break;
            case TraceRule::Trans:
                bad = shape(prem.size() == 1 && prem[0] == std::pair{s.lhs, s.rhs});
                break;
        }
        if (bad) return bad;
        if (!a.le(s.lhs, s.rhs)) return at + a.names[s.lhs] + " </= " + a.names[s.rhs] + " in the order";
    }
    if (tr.steps.empty() || tr.steps.back().lhs != X[X[a.top]] || tr.steps.back().rhs != X[a.top])
        return "trace does not end in boxtimes boxtimes top <= boxtimes top";
    return std::nullopt;
}

std::string format_trace(const ApsInstance& a, const DerivationTrace& tr) {
    std::ostringstream out;
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        const auto& s = tr.steps[i];
        out << i + 1 << ". " << a.names[s.lhs] << " <= " << a.names[s.rhs] << "  by " << to_string(s.rule);
        if (s.rule != TraceRule::Trans) out << '(' << a.names[s.x] << (s.rule == TraceRule::C4 ? "" : ", " + a.names[s.y]) << ')';
        out << '\n';
    }
    return out.str();
}

Verdict2 g2_consistency_check(const ApsInstance& a, Elem p) {
    require_fixed_point(a, p);
    const Elem t = a.boxtimes[a.top];
    if (a.consistent() && a.le(t, a.bot)) {
        std::string why = "consistent, yet boxtimes top <= bot";
        for (const auto& c : check_conditions(a))
            if (!c.holds && !c.informational) why += "; " + c.name + " fails";
        return {false, {t, a.bot}, why};
    }
    return {};
}

Verdict2 uniqueness_check(const ApsInstance& a) {
    for (const auto& c : check_conditions(a)) {
        if (c.holds || c.informational || c.name == "C3'" || c.name == "C5'") continue;
        throw Error(ErrorCode::ConditionMissing, c.name + " fails: " + c.detail);
    }
    const Elem t = a.boxtimes[a.top];
    const auto fps = goedelian_fixed_points(a);
    for (Elem p : fps)
        if (!a.eq(p, t)) return {false, {p, t}, a.names[p] + " is not equivalent to boxtimes top"};
    if (!fps.empty() && !a.eq(a.boxtimes[t], t))
        return {false, {a.boxtimes[t], t}, "boxtimes boxtimes top differs from boxtimes top"};
    return {};
}

ApsInstance aps3() {
    return parse_aps(
        "carrier bot p top ; top top ; bot bot ; leq bot p, p top, bot top ;"
        " box bot->p p->top top->top ; boxtimes bot->top p->p top->p");
}

ApsInstance singleton_aps() { return parse_aps("carrier e ; top e ; bot e ; leq ; box e->e ; boxtimes e->e"); }

}  // namespace cfs
