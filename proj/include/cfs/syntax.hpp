#pragma once

// Concrete text syntax.
//
//   formula := impl
//   impl    := unary ("->" impl)?                         right-associative
//   unary   := "box" unary | "~" unary | atom
//   atom    := "bot" | "top" | IDENT | "$" IDENT
//            | "(" formula ("*" formula)? ")"
//            | "fp" "$" IDENT "." formula                 body runs to the end
//
// `~`, `top` and `*` are expanded while parsing; the printer emits core
// constructors only.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cfs/formula.hpp"

namespace cfs {

struct Sequent;

enum class Tok { Ident, Number, Dollar, LParen, RParen, Arrow, DArrow, Star, Tilde, Dot, Comma, End };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t offset;
};

// Tokenizer shared by the formula, sequent, proof-file and APS readers.
class Lexer {
public:
    explicit Lexer(std::string_view input);

    const Token& peek() const { return current_; }
    Token next();
    bool accept(Tok kind);
    Token expect(Tok kind, const char* what);
    bool at_keyword(std::string_view word) const;
    void expect_keyword(std::string_view word);

private:
    void advance();

    std::string_view input_;
    std::size_t pos_ = 0;
    Token current_;
};

Formula parse_formula(Lexer& lex);
// Parses the whole input; open formulas are accepted.
Formula parse_formula(std::string_view text);

// Comma-separated formulas, possibly empty, stopping before `=>` or `)`.
std::vector<Formula> parse_formula_list(Lexer& lex);

// `A, B => C, D`; every member must be closed.
Sequent parse_sequent(std::string_view text);

std::string to_string(const Formula& f);
std::string to_string(const std::vector<Formula>& side);
std::string to_string(const Sequent& s);

}  // namespace cfs
