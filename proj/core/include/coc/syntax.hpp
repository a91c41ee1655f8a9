#pragma once

// Concrete syntax shared by terms and scripts:
//   (x:T)U   dependent product      T -> U   non-dependent product
//   [x:T]u   abstraction            (f a b)  application, left associative
//   Prop, Type                      identifiers [A-Za-z_][A-Za-z0-9_']*
// Binder bodies extend as far to the right as possible; ((x:T))U is read
// as (x:T)U. Comments are
// written (* ... *) and nest.

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "coc/errors.hpp"
#include "coc/term.hpp"

namespace coc {

enum class TokenKind { Ident, LParen, RParen, LBracket, RBracket, Colon, ColonEq, Comma, Arrow, Dot, End };

struct Token {
  TokenKind kind;
  std::string text;
  SourceLocation where;
};

std::vector<Token> tokenize(std::string_view source);

// Parses one term starting at tokens[pos], advancing pos past it. Unknown
// identifiers become free variables.
Term parse_term(const std::vector<Token>& tokens, std::size_t& pos);

// Parses a whole string as a single term.
Term parse_term(std::string_view text);

std::string print_term(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);

}  // namespace coc
