#pragma once

// Finite abstract provability structures: a preordered carrier with top,
// bot and two unary operations, box (provability) and boxtimes
// (refutability).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cfs {

using Elem = std::size_t;

struct ApsInstance {
    std::vector<std::string> names;
    Elem top = 0;
    Elem bot = 0;
    std::vector<std::vector<bool>> leq;  // leq[x][y] iff x <= y
    std::vector<Elem> box;
    std::vector<Elem> boxtimes;

    std::size_t size() const { return names.size(); }
    bool le(Elem x, Elem y) const { return leq[x][y]; }
    bool eq(Elem x, Elem y) const { return leq[x][y] && leq[y][x]; }
    bool consistent() const { return !le(top, bot); }
    Elem index_of(std::string_view name) const;  // throws InvalidInput
};

// `carrier a b c ; top c ; bot a ; leq a b, b c, a c ; box a->b b->c c->c ;
// boxtimes a->c b->b c->b`. Reflexive pairs may be omitted; transitivity is
// not repaired, check_conditions reports it.
ApsInstance parse_aps(std::string_view text);
ApsInstance read_aps_file(const std::string& path);
std::string to_text(const ApsInstance& inst);

// Renames carrier element i to names[perm[i]] and reorders accordingly.
ApsInstance relabel(const ApsInstance& inst, const std::vector<Elem>& perm);

struct ConditionResult {
    std::string name;
    bool holds = true;
    bool informational = false;  // reported, never required
    std::vector<Elem> witness;   // quantifier instance of the first failure
    std::string detail;
};

// reflexivity, transitivity, C1, C2, C3, C4, C5, C3', C5' and the
// informational box bot = boxtimes top, in that order.
std::vector<ConditionResult> check_conditions(const ApsInstance& inst);

bool holds(const std::vector<ConditionResult>& report, std::string_view name);
// True iff the preorder axioms and C1-C5 hold.
bool passes_c1_c5(const std::vector<ConditionResult>& report);

std::string format_report(const ApsInstance& inst, const std::vector<ConditionResult>& report);

std::vector<Elem> goedelian_fixed_points(const ApsInstance& inst);

// One premise of a trace step: facts chained by transitivity. A fact is an
// earlier step or one direction of the fixed-point hypothesis p = boxtimes p.
struct Fact {
    enum Kind { Step, FixUp, FixDown } kind;  // FixUp: p <= bp, FixDown: bp <= p
    std::size_t step = 0;
};

enum class TraceRule { C1Box, C1Boxtimes, C3, C4, Trans };

const char* to_string(TraceRule r);

struct TraceStep {
    Elem lhs, rhs;
    TraceRule rule;
    Elem x = 0, y = 0;                     // condition instance
    std::vector<std::vector<Fact>> premises;
};

struct DerivationTrace {
    Elem fixed_point = 0;
    std::vector<TraceStep> steps;
};

// Derives boxtimes boxtimes top <= boxtimes top from a Goedelian fixed point
// p: C4 at p, C1 for box, C3 at (p, p), C1 for boxtimes, transitivity.
// Throws NotFixedPoint, or ConditionMissing naming the first condition
// whose needed instance fails.
DerivationTrace g2_trace(const ApsInstance& inst, Elem p);

// Empty when the trace is valid: premise chains link up, each step has the
// shape its rule demands, and every step is in the order.
std::optional<std::string> validate_trace(const ApsInstance& inst, const DerivationTrace& trace);

std::string format_trace(const ApsInstance& inst, const DerivationTrace& trace);

struct Verdict2 {
    bool holds = true;
    std::vector<Elem> witness;
    std::string detail;
};

// If the instance is consistent, boxtimes top must not be refutable.
// Throws NotFixedPoint.
Verdict2 g2_consistency_check(const ApsInstance& inst, Elem p);

// Every Goedelian fixed point equals boxtimes top, and boxtimes boxtimes top
// equals boxtimes top when a fixed point exists. Throws ConditionMissing
// when a condition among C1-C5 fails.
Verdict2 uniqueness_check(const ApsInstance& inst);

// APS3: bot < p < top; box: bot->p, p->top, top->top;
// boxtimes: bot->top, p->p, top->p.
ApsInstance aps3();
ApsInstance singleton_aps();

}  // namespace cfs
