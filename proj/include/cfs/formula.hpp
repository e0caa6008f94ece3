#pragma once

// Modal formulas with fixed-point binders.
//
// Formulas are immutable, reference-counted trees. Equality is graphic:
// two formulas are equal iff they are the same tree, binder names included,
// so fp $x. box $x and fp $y. box $y are different sentences.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace cfs {

enum class Kind : std::uint8_t { Atom, Var, Bot, Imp, Box, Fp };

class Formula {
public:
    // Default-constructs bot.
    Formula();

    static Formula atom(std::string name);
    static Formula var(std::string name);
    static Formula bot();
    static Formula imp(Formula lhs, Formula rhs);
    static Formula box(Formula body);

    Kind kind() const noexcept;
    bool is(Kind k) const noexcept { return kind() == k; }

    // Atom/Var name, or the binder of an Fp node.
    const std::string& name() const noexcept;
    // Imp: antecedent; Box/Fp: body.
    const Formula& left() const noexcept;
    // Imp: consequent.
    const Formula& right() const noexcept;
    const Formula& body() const noexcept { return left(); }

    std::size_t hash() const noexcept;
    // Number of constructor nodes.
    std::size_t size() const noexcept;
    bool closed() const noexcept;
    // Sorted, duplicate-free free variables.
    const std::vector<std::string>& free_variables() const noexcept;

    friend bool operator==(const Formula& a, const Formula& b) noexcept;
    // Structural total order: kind, then name, then children.
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Formula make(Kind kind, std::string name, Formula lhs, Formula rhs);

    friend Formula make_fp_unchecked(std::string var, Formula body);

    std::shared_ptr<const Node> node_;
};

std::set<std::string> free_vars(const Formula& f);

// True iff every free occurrence of x in f lies strictly inside a box.
bool is_modalized(const Formula& f, const std::string& x);

// f[b//x]. Throws NonClosedSubstituend when b has free variables.
Formula substitute(const Formula& f, const Formula& b, const std::string& x);

// fp x. body. Throws NotModalized when x occurs unguarded in body.
Formula mk_fp(const std::string& x, Formula body);

// The one-step unfolding body[fp x. body // x] of an Fp formula.
Formula unfold(const Formula& fp);

// Derived connectives; these expand to core constructors.
Formula neg(Formula a);
Formula top();
Formula tensor(Formula a, Formula b);

// fp x. box (x -> bot)
Formula goedel_fp(const std::string& x);
// fp x. box x
Formula henkin_fp(const std::string& x);

struct FormulaHash {
    std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

}  // namespace cfs
