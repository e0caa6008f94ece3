#include "cfs/syntax.hpp"

#include <cctype>

#include "cfs/error.hpp"
#include "cfs/sequent.hpp"

namespace cfs {

Lexer::Lexer(std::string_view input) : input_(input) { advance(); }

void Lexer::advance() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= input_.size()) {
        current_ = {Tok::End, {}, start};
        return;
    }
    const char c = input_[pos_];
    auto single = [&](Tok k) {
        ++pos_;
        current_ = {k, input_.substr(start, 1), start};
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (pos_ < input_.size() &&
               (std::isalnum(static_cast<unsigned char>(input_[pos_])) || input_[pos_] == '_'))
            ++pos_;
        current_ = {Tok::Ident, input_.substr(start, pos_ - start), start};
        return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) ++pos_;
        current_ = {Tok::Number, input_.substr(start, pos_ - start), start};
        return;
    }
    if (c == '-' && pos_ + 1 < input_.size() && input_[pos_ + 1] == '>') {
        pos_ += 2;
        current_ = {Tok::Arrow, input_.substr(start, 2), start};
        return;
    }
    if (c == '=' && pos_ + 1 < input_.size() && input_[pos_ + 1] == '>') {
        pos_ += 2;
        current_ = {Tok::DArrow, input_.substr(start, 2), start};
        return;
    }
    switch (c) {
        case '$': return single(Tok::Dollar);
        case '(': return single(Tok::LParen);
        case ')': return single(Tok::RParen);
        case '*': return single(Tok::Star);
        case '~': return single(Tok::Tilde);
        case '.': return single(Tok::Dot);
        case ',': return single(Tok::Comma);
        default:
            throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
}

Token Lexer::next() {
    Token t = current_;
    advance();
    return t;
}

bool Lexer::accept(Tok kind) {
    if (current_.kind != kind) return false;
    advance();
    return true;
}

Token Lexer::expect(Tok kind, const char* what) {
    if (current_.kind != kind) {
        std::string got = current_.kind == Tok::End ? "end of input"
                                                    : "'" + std::string(current_.text) + "'";
        throw ParseError(current_.offset, std::string("expected ") + what + ", got " + got);
    }
    return next();
}

bool Lexer::at_keyword(std::string_view word) const {
    return current_.kind == Tok::Ident && current_.text == word;
}

void Lexer::expect_keyword(std::string_view word) {
    if (!at_keyword(word)) {
        throw ParseError(current_.offset, "expected '" + std::string(word) + "'");
    }
    advance();
}

namespace {

bool is_keyword(std::string_view s) {
    return s == "box" || s == "bot" || s == "top" || s == "fp";
}

Formula parse_unary(Lexer& lex);

Formula parse_atom(Lexer& lex) {
    const Token t = lex.peek();
    switch (t.kind) {
        case Tok::Ident: {
            if (t.text == "bot") {
                lex.next();
                return Formula::bot();
            }
            if (t.text == "top") {
                lex.next();
                return top();
            }
            if (t.text == "fp") {
                lex.next();
                lex.expect(Tok::Dollar, "'$' after fp");
                const std::string var(lex.expect(Tok::Ident, "variable name").text);
                lex.expect(Tok::Dot, "'.' after fp binder");
                Formula body = parse_formula(lex);
                if (!is_modalized(body, var)) {
                    throw ParseError(t.offset, "fp body is not modalized in $" + var);
                }
                return mk_fp(var, std::move(body));
            }
            if (is_keyword(t.text)) throw ParseError(t.offset, "misplaced keyword");
            lex.next();
            return Formula::atom(std::string(t.text));
        }
        case Tok::Dollar: {
            lex.next();
            const Token name = lex.expect(Tok::Ident, "variable name");
            return Formula::var(std::string(name.text));
        }
        case Tok::LParen: {
            lex.next();
            Formula a = parse_formula(lex);
            if (lex.accept(Tok::Star)) {
                Formula b = parse_formula(lex);
                a = tensor(std::move(a), std::move(b));
            }
            lex.expect(Tok::RParen, "')'");
            return a;
        }
        case Tok::End:
            throw ParseError(t.offset, "unexpected end of input, expected a formula");
        default:
            throw ParseError(t.offset, "unexpected '" + std::string(t.text) + "', expected a formula");
    }
}

Formula parse_unary(Lexer& lex) {
    if (lex.at_keyword("box")) {
        lex.next();
        return Formula::box(parse_unary(lex));
    }
    if (lex.accept(Tok::Tilde)) return neg(parse_unary(lex));
    return parse_atom(lex);
}

}  // namespace

Formula parse_formula(Lexer& lex) {
    Formula lhs = parse_unary(lex);
    if (lex.accept(Tok::Arrow)) return Formula::imp(std::move(lhs), parse_formula(lex));
    return lhs;
}

Formula parse_formula(std::string_view text) {
    Lexer lex(text);
    Formula f = parse_formula(lex);
    if (lex.peek().kind != Tok::End) {
        throw ParseError(lex.peek().offset, "trailing input '" + std::string(lex.peek().text) + "'");
    }
    return f;
}

std::vector<Formula> parse_formula_list(Lexer& lex) {
    std::vector<Formula> out;
    const Tok k = lex.peek().kind;
    if (k == Tok::DArrow || k == Tok::RParen || k == Tok::End) return out;
    out.push_back(parse_formula(lex));
    while (lex.accept(Tok::Comma)) out.push_back(parse_formula(lex));
    return out;
}

Sequent parse_sequent(std::string_view text) {
    Lexer lex(text);
    Sequent s;
    s.ante = parse_formula_list(lex);
    lex.expect(Tok::DArrow, "'=>'");
    s.succ = parse_formula_list(lex);
    if (lex.peek().kind != Tok::End) {
        throw ParseError(lex.peek().offset, "trailing input '" + std::string(lex.peek().text) + "'");
    }
    if (!s.closed()) throw Error(ErrorCode::NotClosed, "sequent contains an open formula");
    return s;
}

namespace {

void print(const Formula& f, std::string& out);

void print_operand(const Formula& f, std::string& out) {
    if (f.is(Kind::Imp) || f.is(Kind::Fp)) {
        out += '(';
        print(f, out);
        out += ')';
    } else {
        print(f, out);
    }
}

void print(const Formula& f, std::string& out) {
    switch (f.kind()) {
        case Kind::Atom:
            out += f.name();
            break;
        case Kind::Var:
            out += '$';
            out += f.name();
            break;
        case Kind::Bot:
            out += "bot";
            break;
        case Kind::Imp:
            print_operand(f.left(), out);
            out += " -> ";
            print(f.right(), out);
            break;
        case Kind::Box:
            out += "box ";
            print_operand(f.body(), out);
            break;
        case Kind::Fp:
            out += "fp $";
            out += f.name();
            out += ". ";
            print(f.body(), out);
            break;
    }
}

}  // namespace

std::string to_string(const Formula& f) {
    std::string out;
    print(f, out);
    return out;
}

std::string to_string(const std::vector<Formula>& side) {
    std::string out;
    for (std::size_t i = 0; i < side.size(); ++i) {
        if (i) out += ", ";
        print(side[i], out);
    }
    return out;
}

std::string to_string(const Sequent& s) {
    std::string out = to_string(s.ante);
    out += out.empty() ? "=>" : " =>";
    if (!s.succ.empty()) {
        out += ' ';
        out += to_string(s.succ);
    }
    return out;
}

}  // namespace cfs
