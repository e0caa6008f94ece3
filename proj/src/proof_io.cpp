#include "cfs/proof_io.hpp"

#include <fstream>
#include <sstream>

#include "cfs/error.hpp"
#include "cfs/syntax.hpp"

namespace cfs {

namespace {

Rule parse_tag(const Token& t) {
    static constexpr Rule all[] = {Rule::Init, Rule::BotInit, Rule::FixL,   Rule::FixR, Rule::ImpL,
                                   Rule::ImpR, Rule::BoxRule, Rule::CtrL, Rule::Cut};
    for (Rule r : all)
        if (t.text == to_string(r)) return r;
    throw ParseError(t.offset, "unknown rule tag '" + std::string(t.text) + "'");
}

std::size_t parse_index(Lexer& lex) {
    const Token t = lex.expect(Tok::Number, "an index");
    return std::stoul(std::string(t.text));
}

std::vector<std::size_t> parse_index_group(Lexer& lex, std::string_view head) {
    lex.expect(Tok::LParen, "'('");
    lex.expect_keyword(head);
    std::vector<std::size_t> out;
    while (lex.peek().kind == Tok::Number) out.push_back(parse_index(lex));
    lex.expect(Tok::RParen, "')'");
    return out;
}

std::vector<Formula> parse_side(Lexer& lex) {
    lex.expect(Tok::LParen, "'(' opening a formula list");
    auto side = parse_formula_list(lex);
    lex.expect(Tok::RParen, "')' closing a formula list");
    return side;
}

Annotation parse_roles(Lexer& lex, Rule rule) {
    const Token open = lex.expect(Tok::LParen, "'(' opening roles");
    const Token head = lex.expect(Tok::Ident, "role keyword");
    auto mismatch = [&] {
        return ParseError(head.offset, "role '" + std::string(head.text) + "' does not fit rule " +
                                           to_string(rule));
    };
    Annotation a;
    a.rule = rule;
    if (head.text == "ax") {
        if (rule != Rule::Init) throw mismatch();
        a.first = parse_index(lex);
        a.second = parse_index(lex);
    } else if (head.text == "bot") {
        if (rule != Rule::BotInit) throw mismatch();
        a.first = parse_index(lex);
    } else if (head.text == "ctr") {
        if (rule != Rule::CtrL) throw mismatch();
        a.first = parse_index(lex);
        a.second = parse_index(lex);
    } else if (head.text == "cut") {
        if (rule != Rule::Cut) throw mismatch();
        a.first = parse_index(lex);
        a.second = parse_index(lex);
    } else if (head.text == "prin") {
        a.first = parse_index(lex);
        if (rule == Rule::ImpL) {
            auto lsplit = parse_index_group(lex, "lsplit");
            a = Annotation::imp_left(a.first, std::move(lsplit), parse_index_group(lex, "rsplit"));
        } else if (rule == Rule::BoxRule) {
            auto sigma = parse_index_group(lex, "sigma");
            a = Annotation::box(a.first, std::move(sigma), parse_index_group(lex, "pi"));
        } else if (rule != Rule::FixL && rule != Rule::FixR && rule != Rule::ImpR) {
            throw mismatch();
        }
    } else {
        throw ParseError(head.offset, "unknown role keyword '" + std::string(head.text) + "'");
    }
    (void)open;
    lex.expect(Tok::RParen, "')' closing roles");
    return a;
}

Proof parse_node(Lexer& lex, int depth) {
    if (depth > 100000) throw ParseError(lex.peek().offset, "proof nesting too deep");
    lex.expect(Tok::LParen, "'(' opening a proof node");
    const Token tag = lex.expect(Tok::Ident, "rule tag");
    Proof p;
    const Rule rule = parse_tag(tag);
    lex.expect(Tok::LParen, "'(' opening seq");
    lex.expect_keyword("seq");
    p.conclusion.ante = parse_side(lex);
    p.conclusion.succ = parse_side(lex);
    lex.expect(Tok::RParen, "')' closing seq");
    p.annotation = parse_roles(lex, rule);
    while (lex.peek().kind == Tok::LParen) p.premises.push_back(parse_node(lex, depth + 1));
    lex.expect(Tok::RParen, "')' closing a proof node");
    return p;
}

void indices(std::ostringstream& out, const std::vector<std::size_t>& v) {
    for (std::size_t i : v) out << ' ' << i;
}

void write_node(std::ostringstream& out, const Proof& p, int indent) {
    out << std::string(static_cast<std::size_t>(indent) * 2, ' ') << '(' << to_string(p.rule())
        << " (seq (" << to_string(p.conclusion.ante) << ") (" << to_string(p.conclusion.succ)
        << ")) ";
    const Annotation& a = p.annotation;
    switch (a.rule) {
        case Rule::Init: out << "(ax " << a.first << ' ' << a.second << ')'; break;
        case Rule::BotInit: out << "(bot " << a.first << ')'; break;
        case Rule::CtrL: out << "(ctr " << a.first << ' ' << a.second << ')'; break;
        case Rule::Cut: out << "(cut " << a.first << ' ' << a.second << ')'; break;
        case Rule::ImpL:
            out << "(prin " << a.first << " (lsplit";
            indices(out, a.left_split);
            out << ") (rsplit";
            indices(out, a.right_split);
            out << "))";
            break;
        case Rule::BoxRule:
            out << "(prin " << a.first << " (sigma";
            indices(out, a.sigma);
            out << ") (pi";
            indices(out, a.pi);
            out << "))";
            break;
        default: out << "(prin " << a.first << ')'; break;
    }
    for (const auto& q : p.premises) {
        out << '\n';
        write_node(out, q, indent + 1);
    }
    out << ')';
}

}  // namespace

Proof read_proof(std::string_view text) {
    Lexer lex(text);
    Proof p = parse_node(lex, 0);
    if (lex.peek().kind != Tok::End) throw ParseError(lex.peek().offset, "trailing input after proof");
    return p;
}

Proof read_proof_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return read_proof(buf.str());
}

std::string write_proof(const Proof& p) {
    std::ostringstream out;
    write_node(out, p, 0);
    out << '\n';
    return out.str();
}

void write_proof_file(const Proof& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
    out << write_proof(p);
}

}  // namespace cfs
