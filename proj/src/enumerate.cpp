#include "cfs/enumerate.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cfs/error.hpp"
#include "cfs/proof_io.hpp"

namespace cfs {

namespace {

void collect(const Formula& f, std::set<Formula>& out) {
    if (f.closed()) out.insert(f);
    switch (f.kind()) {
        case Kind::Imp:
            collect(f.left(), out);
            collect(f.right(), out);
            break;
        case Kind::Box:
        case Kind::Fp:
            collect(f.body(), out);
            break;
        default:
            break;
    }
}

using Side = std::vector<Formula>;

// All multisets of exactly k members of `pool`, as sorted lists.
void multisets(const std::vector<Formula>& pool, std::size_t k, std::size_t from, Side& cur,
               std::vector<Side>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        multisets(pool, k, i, cur, out);
        cur.pop_back();
    }
}

// Pairs (left, right) of multisets with |left| + |right| <= w.
std::vector<std::pair<Side, Side>> weakenings(const std::vector<Formula>& pool, std::size_t w) {
    std::vector<std::pair<Side, Side>> out;
    for (std::size_t total = 0; total <= w; ++total) {
        for (std::size_t a = 0; a <= total; ++a) {
            std::vector<Side> ls, rs;
            Side cur;
            multisets(pool, a, 0, cur, ls);
            multisets(pool, total - a, 0, cur, rs);
            for (const auto& l : ls)
                for (const auto& r : rs) out.emplace_back(l, r);
        }
    }
    return out;
}

Side concat(Side a, const Side& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

class Enumerator {
public:
    Enumerator(std::vector<Formula> closure, const EnumerationConfig& cfg)
        : c_(std::move(closure)), cset_(c_.begin(), c_.end()), cfg_(cfg), weak_(weakenings(c_, cfg.max_weakening)) {}

    std::vector<Proof> run() {
        levels_.resize(cfg_.max_size + 1);
        if (cfg_.max_size >= 1) leaves();
        for (std::size_t n = 2; n <= cfg_.max_size; ++n) {
            for (const auto& p : levels_[n - 1]) unary(p, n);
            for (std::size_t k = 1; k + 1 < n; ++k)
                for (const auto& p0 : levels_[k])
                    for (const auto& p1 : levels_[n - 1 - k]) imp_left(p0, p1, n);
        }
        std::vector<Proof> all;
        for (auto& lv : levels_)
            for (auto& p : lv) all.push_back(std::move(p));
        return all;
    }

private:
    bool in_closure(const Formula& f) const { return cset_.count(f) != 0; }

    void emit(Proof p, std::size_t n) {
        if (p.conclusion.formula_count() > cfg_.max_sequent_formulas) return;
        if (auto e = check_node(p, Ruleset::S))
            throw Error(ErrorCode::Internal, "enumeration built a bad node: " + e->describe());
        if (!seen_.insert(write_proof(p)).second) return;
        levels_[n].push_back(std::move(p));
    }

    void leaves() {
        for (const auto& [l, r] : weak_) {
            for (const auto& a : c_)
                emit(Proof{{concat({a}, l), concat({a}, r)}, Annotation::init(0, 0), {}}, 1);
            emit(Proof{{concat({Formula::bot()}, l), r}, Annotation::bot_init(0), {}}, 1);
        }
    }

    void unary(const Proof& p, std::size_t n) {
        const Sequent& s = p.conclusion;
        for (const auto& f : c_) {
            if (!f.is(Kind::Fp)) continue;
            const Formula u = unfold(f);
            for (std::size_t i = 0; i < s.ante.size(); ++i) {
                if (!(s.ante[i] == u)) continue;
                Sequent c = s;
                c.ante[i] = f;
                emit(Proof{c, Annotation::principal(Rule::FixL, i), {p}}, n);
            }
            for (std::size_t j = 0; j < s.succ.size(); ++j) {
                if (!(s.succ[j] == u)) continue;
                Sequent c = s;
                c.succ[j] = f;
                emit(Proof{c, Annotation::principal(Rule::FixR, j), {p}}, n);
            }
        }
        for (const auto& f : c_) {
            if (!f.is(Kind::Imp)) continue;
            for (std::size_t i = 0; i < s.ante.size(); ++i) {
                if (!(s.ante[i] == f.left())) continue;
                for (std::size_t j = 0; j < s.succ.size(); ++j) {
                    if (!(s.succ[j] == f.right())) continue;
                    Sequent c{without(s.ante, i), s.succ};
                    c.succ[j] = f;
                    emit(Proof{c, Annotation::principal(Rule::ImpR, j), {p}}, n);
                }
            }
        }
        if (s.succ.size() == 1) box(p, n);
    }

    void box(const Proof& p, std::size_t n) {
        const Sequent& s = p.conclusion;
        const Formula goal = Formula::box(s.succ[0]);
        if (!in_closure(goal)) return;
        const std::size_t k = s.ante.size();
        std::size_t combos = 1;
        for (std::size_t i = 0; i < k; ++i) combos *= 2;
        for (std::size_t mask = 0; mask < combos; ++mask) {
            // Bit set = sigma (boxed in the conclusion), clear = pi.
            Side ante;
            std::vector<std::size_t> sigma, pi;
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i) {
                if (mask >> i & 1) {
                    const Formula b = Formula::box(s.ante[i]);
                    ok = in_closure(b);
                    sigma.push_back(i);
                    ante.push_back(b);
                } else {
                    ok = s.ante[i].is(Kind::Box);
                    pi.push_back(i);
                    ante.push_back(s.ante[i]);
                }
            }
            if (!ok) continue;
            for (const auto& [l, r] : weak_)
                emit(Proof{{concat(ante, l), concat({goal}, r)}, Annotation::box(0, sigma, pi), {p}}, n);
        }
    }

    void imp_left(const Proof& p0, const Proof& p1, std::size_t n) {
        const Sequent& s0 = p0.conclusion;  // Gamma, B => Delta
        const Sequent& s1 = p1.conclusion;  // Sigma => A, Pi
        for (const auto& f : c_) {
            if (!f.is(Kind::Imp)) continue;
            for (std::size_t i = 0; i < s0.ante.size(); ++i) {
                if (!(s0.ante[i] == f.right())) continue;
                for (std::size_t j = 0; j < s1.succ.size(); ++j) {
                    if (!(s1.succ[j] == f.left())) continue;
                    const Side g = without(s0.ante, i);
                    Sequent c;
                    c.ante = concat(concat({f}, g), s1.ante);
                    c.succ = concat(s0.succ, without(s1.succ, j));
                    std::vector<std::size_t> ls, rs;
                    for (std::size_t k = 0; k < g.size(); ++k) ls.push_back(1 + k);
                    for (std::size_t k = 0; k < s0.succ.size(); ++k) rs.push_back(k);
                    emit(Proof{c, Annotation::imp_left(0, ls, rs), {p0, p1}}, n);
                }
            }
        }
    }

    std::vector<Formula> c_;
    std::set<Formula> cset_;
    EnumerationConfig cfg_;
    std::vector<std::pair<Side, Side>> weak_;
    std::vector<std::vector<Proof>> levels_;
    std::set<std::string> seen_;
};

}  // namespace

std::vector<Formula> formula_closure(const std::vector<Formula>& vocabulary, std::size_t rounds) {
    std::set<Formula> out;
    for (const auto& f : vocabulary) collect(f, out);
    for (std::size_t r = 0; r < rounds; ++r) {
        std::set<Formula> next = out;
        for (const auto& f : out)
            if (f.is(Kind::Fp)) collect(unfold(f), next);
        if (next.size() == out.size()) break;
        out = std::move(next);
    }
    return {out.begin(), out.end()};
}

std::vector<Proof> enumerate_proofs(const std::vector<Formula>& vocabulary,
                                    const EnumerationConfig& config) {
    for (const auto& f : vocabulary)
        if (!f.closed()) throw Error(ErrorCode::NotClosed, "vocabulary formulas must be closed");
    return Enumerator(formula_closure(vocabulary, config.max_size), config).run();
}

}  // namespace cfs
