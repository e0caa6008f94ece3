#include "cfs/formula.hpp"

#include <algorithm>

#include "cfs/error.hpp"

namespace cfs {

struct Formula::Node {
    Kind kind;
    std::string name;
    Formula lhs;
    Formula rhs;
    std::size_t hash;
    std::size_t size;
    std::vector<std::string> free;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    // 64-bit variant of boost::hash_combine
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 12) + (h >> 4));
}

std::size_t hash_name(const std::string& s) {
    std::size_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::vector<std::string> merge_free(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

const Formula& bot_singleton() {
    static const Formula b = Formula::bot();
    return b;
}

}  // namespace

Formula::Formula() : Formula(bot_singleton()) {}

Formula Formula::make(Kind kind, std::string name, Formula lhs, Formula rhs) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->name = std::move(name);
    std::size_t h = mix(static_cast<std::size_t>(kind) + 1, hash_name(n->name));
    std::size_t sz = 1;
    switch (kind) {
        case Kind::Atom:
        case Kind::Bot:
            break;
        case Kind::Var:
            n->free.push_back(n->name);
            break;
        case Kind::Imp:
            h = mix(mix(h, lhs.hash()), rhs.hash());
            sz += lhs.size() + rhs.size();
            n->free = merge_free(lhs.free_variables(), rhs.free_variables());
            break;
        case Kind::Box:
            h = mix(h, lhs.hash());
            sz += lhs.size();
            n->free = lhs.free_variables();
            break;
        case Kind::Fp: {
            h = mix(h, lhs.hash());
            sz += lhs.size();
            n->free = lhs.free_variables();
            auto it = std::lower_bound(n->free.begin(), n->free.end(), n->name);
            if (it != n->free.end() && *it == n->name) n->free.erase(it);
            break;
        }
    }
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    n->hash = h;
    n->size = sz;
    return Formula(std::move(n));
}

Formula Formula::atom(std::string name) { return make(Kind::Atom, std::move(name), {}, {}); }
Formula Formula::var(std::string name) { return make(Kind::Var, std::move(name), {}, {}); }

Formula Formula::bot() {
    // Built directly: make() default-constructs children, which would recurse.
    auto n = std::make_shared<Node>(Node{Kind::Bot, {}, Formula(nullptr), Formula(nullptr),
                                         mix(static_cast<std::size_t>(Kind::Bot) + 1,
                                             hash_name({})),
                                         1, {}});
    return Formula(std::move(n));
}

Formula Formula::imp(Formula lhs, Formula rhs) {
    return make(Kind::Imp, {}, std::move(lhs), std::move(rhs));
}

Formula Formula::box(Formula body) { return make(Kind::Box, {}, std::move(body), {}); }

Formula make_fp_unchecked(std::string var, Formula body) {
    return Formula::make(Kind::Fp, std::move(var), std::move(body), {});
}

Kind Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::name() const noexcept { return node_->name; }
const Formula& Formula::left() const noexcept { return node_->lhs; }
const Formula& Formula::right() const noexcept { return node_->rhs; }
std::size_t Formula::hash() const noexcept { return node_->hash; }
std::size_t Formula::size() const noexcept { return node_->size; }
bool Formula::closed() const noexcept { return node_->free.empty(); }
const std::vector<std::string>& Formula::free_variables() const noexcept { return node_->free; }

bool operator==(const Formula& a, const Formula& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Kind::Bot:
            return true;
        case Kind::Atom:
        case Kind::Var:
            return a.name() == b.name();
        case Kind::Imp:
            return a.left() == b.left() && a.right() == b.right();
        case Kind::Box:
            return a.left() == b.left();
        case Kind::Fp:
            return a.name() == b.name() && a.left() == b.left();
    }
    return false;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    switch (a.kind()) {
        case Kind::Bot:
            return std::strong_ordering::equal;
        case Kind::Atom:
        case Kind::Var:
            return a.name().compare(b.name()) <=> 0;
        case Kind::Imp:
            if (auto c = a.left() <=> b.left(); c != 0) return c;
            return a.right() <=> b.right();
        case Kind::Box:
            return a.left() <=> b.left();
        case Kind::Fp:
            if (auto c = a.name().compare(b.name()) <=> 0; c != 0) return c;
            return a.left() <=> b.left();
    }
    return std::strong_ordering::equal;
}

std::set<std::string> free_vars(const Formula& f) {
    const auto& v = f.free_variables();
    return {v.begin(), v.end()};
}

namespace {

bool occurs_free(const Formula& f, const std::string& x) {
    const auto& v = f.free_variables();
    return std::binary_search(v.begin(), v.end(), x);
}

bool modalized_rec(const Formula& f, const std::string& x) {
    if (!occurs_free(f, x)) return true;
    switch (f.kind()) {
        case Kind::Var:
            return false;  // an unguarded free occurrence
        case Kind::Box:
            return true;
        case Kind::Imp:
            return modalized_rec(f.left(), x) && modalized_rec(f.right(), x);
        case Kind::Fp:
            return modalized_rec(f.body(), x);
        default:
            return true;
    }
}

Formula subst_rec(const Formula& f, const Formula& b, const std::string& x) {
    if (!occurs_free(f, x)) return f;
    switch (f.kind()) {
        case Kind::Var:
            return b;
        case Kind::Imp:
            return Formula::imp(subst_rec(f.left(), b, x), subst_rec(f.right(), b, x));
        case Kind::Box:
            return Formula::box(subst_rec(f.body(), b, x));
        case Kind::Fp:
            // x is free here, so the binder differs from x; b is closed, so no capture.
            return make_fp_unchecked(f.name(), subst_rec(f.body(), b, x));
        default:
            return f;
    }
}

}  // namespace

bool is_modalized(const Formula& f, const std::string& x) { return modalized_rec(f, x); }

Formula substitute(const Formula& f, const Formula& b, const std::string& x) {
    if (!b.closed()) {
        throw Error(ErrorCode::NonClosedSubstituend,
                    "substituend has free variables; substitution is defined for closed "
                    "formulas only");
    }
    return subst_rec(f, b, x);
}

Formula mk_fp(const std::string& x, Formula body) {
    if (!is_modalized(body, x)) {
        throw Error(ErrorCode::NotModalized,
                    "variable $" + x + " occurs outside the scope of box in fp body");
    }
    return make_fp_unchecked(x, std::move(body));
}

Formula unfold(const Formula& fp) {
    if (!fp.is(Kind::Fp)) throw Error(ErrorCode::InvalidInput, "unfold: not an fp formula");
    return substitute(fp.body(), fp, fp.name());
}

Formula neg(Formula a) { return Formula::imp(std::move(a), Formula::bot()); }
Formula top() { return neg(Formula::bot()); }
Formula tensor(Formula a, Formula b) { return neg(Formula::imp(std::move(a), neg(std::move(b)))); }

Formula goedel_fp(const std::string& x) {
    return mk_fp(x, Formula::box(Formula::imp(Formula::var(x), Formula::bot())));
}

Formula henkin_fp(const std::string& x) { return mk_fp(x, Formula::box(Formula::var(x))); }

}  // namespace cfs
