#include "coc/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

namespace coc {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::End:
      return "end of input";
    case TokenKind::Ident:
      return "'" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  SourceLocation loc;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '(' && i + 1 < src.size() && src[i + 1] == '*') {
      SourceLocation start = loc;
      int depth = 0;
      do {
        if (src.substr(i, 2) == "(*") {
          ++depth;
          advance(2);
        } else if (src.substr(i, 2) == "*)") {
          --depth;
          advance(2);
        } else {
          advance(1);
        }
      } while (depth > 0 && i < src.size());
      if (depth > 0) throw ParseError("unterminated comment", start);
      continue;
    }
    SourceLocation start = loc;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      out.push_back({TokenKind::Ident, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    auto punct = [&](TokenKind k, std::size_t len) {
      out.push_back({k, std::string(src.substr(i, len)), start});
      advance(len);
    };
    switch (c) {
      case '(': punct(TokenKind::LParen, 1); break;
      case ')': punct(TokenKind::RParen, 1); break;
      case '[': punct(TokenKind::LBracket, 1); break;
      case ']': punct(TokenKind::RBracket, 1); break;
      case ',': punct(TokenKind::Comma, 1); break;
      case '.': punct(TokenKind::Dot, 1); break;
      case ':':
        if (src.substr(i, 2) == ":=") punct(TokenKind::ColonEq, 2);
        else punct(TokenKind::Colon, 1);
        break;
      case '-':
        if (src.substr(i, 2) == "->") {
          punct(TokenKind::Arrow, 2);
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({TokenKind::End, "", loc});
  return out;
}

namespace {

class TermParser {
 public:
  TermParser(const std::vector<Token>& tokens, std::size_t& pos) : toks_(tokens), pos_(pos) {}

  Term term() {
    Term lhs = application();
    if (peek().kind != TokenKind::Arrow) return lhs;
    ++pos_;
    scope_.push_back("");
    Term rhs = term();
    scope_.pop_back();
    return Term::prod("_", lhs, rhs);
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }

  const Token& expect(TokenKind k, const char* what) {
    const Token& t = peek();
    if (t.kind != k) throw ParseError(std::string("expected ") + what + ", found " + describe(t), t.where);
    ++pos_;
    return t;
  }

  bool starts_atom() const {
    auto k = peek().kind;
    return k == TokenKind::Ident || k == TokenKind::LParen || k == TokenKind::LBracket;
  }

  bool binder_ahead() const {
    // '(' x ':' or '(' x ',' y ... ':'
    if (peek().kind != TokenKind::LParen && peek().kind != TokenKind::LBracket) return false;
    std::size_t k = 1;
    for (;;) {
      if (peek(k).kind != TokenKind::Ident) return false;
      if (peek(k + 1).kind == TokenKind::Colon) return true;
      if (peek(k + 1).kind != TokenKind::Comma) return false;
      k += 2;
    }
  }

  Term application() {
    if (!starts_atom()) throw ParseError("expected a term, found " + describe(peek()), peek().where);
    bool binder = false;
    Term head = atom(binder);
    while (!binder && starts_atom()) head = Term::app(head, atom(binder));
    return head;
  }

  Term atom(bool& was_binder) {
    const Token& t = peek();
    if (t.kind == TokenKind::Ident) {
      ++pos_;
      if (t.text == "Prop") return Term::prop();
      if (t.text == "Type") return Term::type();
      for (std::size_t k = scope_.size(); k-- > 0;)
        if (scope_[k] == t.text) return Term::bound(static_cast<std::uint32_t>(scope_.size() - 1 - k));
      return Term::free(t.text);
    }
    if (t.kind == TokenKind::LBracket && !binder_ahead())
      throw ParseError("expected an abstraction [x:T]", t.where);
    if (binder_ahead()) {
      was_binder = true;
      return binder(header());
    }
    // ((x:T)) is the same binder as (x:T).
    if (auto h = wrapped_header()) {
      was_binder = true;
      return binder(std::move(*h));
    }
    ++pos_;
    Term inner = term();
    expect(TokenKind::RParen, "')'");
    return inner;
  }

  struct Header {
    bool is_lam;
    std::vector<std::string> names;
    Term domain;
  };

  Header header() {
    Header h{peek().kind == TokenKind::LBracket, {}, Term::prop()};
    ++pos_;
    h.names.push_back(expect(TokenKind::Ident, "a binder name").text);
    while (peek().kind == TokenKind::Comma) {
      ++pos_;
      h.names.push_back(expect(TokenKind::Ident, "a binder name").text);
    }
    for (const auto& n : h.names)
      if (n == "Prop" || n == "Type") throw ParseError("sort used as a binder name", peek().where);
    expect(TokenKind::Colon, "':'");
    h.domain = term();
    expect(h.is_lam ? TokenKind::RBracket : TokenKind::RParen, h.is_lam ? "']'" : "')'");
    return h;
  }

  std::optional<Header> wrapped_header() {
    if (peek().kind != TokenKind::LParen || peek(1).kind != TokenKind::LParen) return std::nullopt;
    std::size_t saved = pos_;
    ++pos_;
    if (binder_ahead()) {
      try {
        Header h = header();
        if (peek().kind == TokenKind::RParen) {
          ++pos_;
          return h;
        }
      } catch (const ParseError&) {
      }
    }
    pos_ = saved;
    return std::nullopt;
  }

  Term binder(Header h) {
    for (const auto& n : h.names) scope_.push_back(n);
    Term body = term();
    for (std::size_t k = h.names.size(); k-- > 0;) {
      scope_.pop_back();
      Term dom = shift(h.domain, static_cast<std::int64_t>(k));
      body = h.is_lam ? Term::lam(h.names[k], dom, body) : Term::prod(h.names[k], dom, body);
    }
    return body;
  }

  const std::vector<Token>& toks_;
  std::size_t& pos_;
  std::vector<std::string> scope_;
};

class Printer {
 public:
  explicit Printer(const Term& root) : reserved_(free_names(root)) {}

  std::string print(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Sort:
        return t.sort_value() == Sort::Prop ? "Prop" : "Type";
      case Term::Kind::Bound:
        if (t.index() < stack_.size()) return stack_[stack_.size() - 1 - t.index()];
        return "#" + std::to_string(t.index());
      case Term::Kind::Free:
        return t.name();
      case Term::Kind::App: {
        Spine s = spine(t);
        std::string out = "(" + operand(s.head);
        for (const auto& a : s.args) out += " " + operand(a);
        return out + ")";
      }
      case Term::Kind::Lam: {
        std::string dom = print(t.domain());
        std::string name = choose(t.name(), binds_loose_zero(t.body()));
        stack_.push_back(name);
        std::string body = print(t.body());
        stack_.pop_back();
        return "[" + name + ":" + dom + "]" + body;
      }
      case Term::Kind::Prod: {
        std::string dom = print(t.domain());
        if (!binds_loose_zero(t.body())) {
          stack_.push_back("_");
          std::string body = print(t.body());
          stack_.pop_back();
          if (t.domain().is_binder()) dom = "(" + dom + ")";
          return dom + " -> " + body;
        }
        std::string name = choose(t.name(), true);
        stack_.push_back(name);
        std::string body = print(t.body());
        stack_.pop_back();
        return "(" + name + ":" + dom + ")" + body;
      }
    }
    return "?";
  }

 private:
  std::string operand(const Term& t) {
    std::string s = print(t);
    return t.is_binder() ? "(" + s + ")" : s;
  }

  std::string choose(const std::string& hint, bool used) {
    std::string base = display_name(hint);
    if (base.empty() || base == "_") {
      if (!used) return "_";
      base = "x";
    }
    std::string name = base;
    while (reserved_.count(name) || std::find(stack_.begin(), stack_.end(), name) != stack_.end()) name += "'";
    return name;
  }

  std::set<std::string> reserved_;
  std::vector<std::string> stack_;
};

}  // namespace

Term parse_term(const std::vector<Token>& tokens, std::size_t& pos) { return TermParser(tokens, pos).term(); }

Term parse_term(std::string_view text) {
  auto tokens = tokenize(text);
  std::size_t pos = 0;
  Term t = parse_term(tokens, pos);
  if (tokens[pos].kind != TokenKind::End)
    throw ParseError("unexpected " + describe(tokens[pos]) + " after term", tokens[pos].where);
  return t;
}

std::string print_term(const Term& t) { return Printer(t).print(t); }

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << print_term(t); }

}  // namespace coc
