#include "coc/vernacular.hpp"

#include <algorithm>
#include <map>

#include "coc/kernel.hpp"
#include "coc/syntax.hpp"
#include "coc/synthesizer.hpp"

namespace coc {

namespace {

const std::map<std::string, Instruction::Kind, std::less<>>& keywords() {
  static const std::map<std::string, Instruction::Kind, std::less<>> table{
      {"Variable", Instruction::Kind::Variable}, {"Hypothesis", Instruction::Kind::Hypothesis},
      {"Axiom", Instruction::Kind::Axiom},       {"Definition", Instruction::Kind::Definition},
      {"Remark", Instruction::Kind::Remark},     {"Statement", Instruction::Kind::Statement},
      {"Using", Instruction::Kind::Using}};
  return table;
}

class ScriptParser {
 public:
  explicit ScriptParser(std::string_view source) : toks_(tokenize(source)) {}

  std::vector<Instruction> parse() {
    std::vector<Instruction> out;
    while (peek().kind != TokenKind::End) out.push_back(instruction());
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  const Token& expect(TokenKind k, const char* what) {
    const Token& t = peek();
    if (t.kind != k) {
      std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
      throw ParseError(std::string("expected ") + what + ", found " + found, t.where);
    }
    ++pos_;
    return t;
  }

  std::string name() {
    const Token& t = expect(TokenKind::Ident, "a name");
    if (t.text == "Prop" || t.text == "Type" || keywords().count(t.text))
      throw ParseError("'" + t.text + "' is reserved", t.where);
    return t.text;
  }

  Term term() { return parse_term(toks_, pos_); }

  Instruction instruction() {
    const Token& kw = peek();
    if (kw.kind != TokenKind::Ident || !keywords().count(kw.text))
      throw ParseError("expected an instruction, found '" + kw.text + "'", kw.where);
    ++pos_;
    Instruction ins{keywords().find(kw.text)->second, {}, {}, {}, {}, kw.where};
    switch (ins.kind) {
      case Instruction::Kind::Variable:
      case Instruction::Kind::Hypothesis:
      case Instruction::Kind::Axiom:
        ins.name = name();
        expect(TokenKind::Colon, "':'");
        ins.type = term();
        break;
      case Instruction::Kind::Definition:
        ins.name = name();
        if (peek().kind == TokenKind::Colon) {
          ++pos_;
          ins.type = term();
        }
        expect(TokenKind::ColonEq, "':='");
        ins.body = term();
        break;
      case Instruction::Kind::Remark:
        ins.name = name();
        break;
      case Instruction::Kind::Statement:
        ins.type = term();
        break;
      case Instruction::Kind::Using:
        if (peek().kind == TokenKind::Ident) {
          ins.premises.push_back(name());
          while (peek().kind == TokenKind::Comma) {
            ++pos_;
            ins.premises.push_back(name());
          }
        }
        break;
    }
    expect(TokenKind::Dot, "'.'");
    return ins;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void require_fresh(const CheckerState& state, const std::string& name) {
  if (state.visible().contains(name)) throw ScriptError(name + " is already declared");
}

void add_local(CheckerState& state, ContextEntry entry) {
  if (state.frames.empty()) {
    state.global.push_back(std::move(entry));
    return;
  }
  RemarkFrame& f = state.frames.back();
  (f.statement ? f.after_statement : f.before_statement).push_back(std::move(entry));
}

template <class F>
auto rejecting_type_errors(F&& f) {
  try {
    return f();
  } catch (const TypeError& e) {
    throw ScriptError(e.what());
  }
}

std::string premise_list(const std::vector<std::string>& premises) {
  std::string out = "{";
  for (std::size_t k = 0; k < premises.size(); ++k) out += (k ? ", " : "") + premises[k];
  return out + "}";
}

}  // namespace

std::string_view keyword(Instruction::Kind kind) {
  for (const auto& [text, k] : keywords())
    if (k == kind) return text;
  return "?";
}

std::vector<Instruction> parse_script(std::string_view source) { return ScriptParser(source).parse(); }

Context CheckerState::visible() const {
  Context out = global;
  for (const auto& f : frames) {
    for (const auto& e : f.before_statement) out.push_back(e);
    for (const auto& e : f.after_statement) out.push_back(e);
  }
  return out;
}

CheckerState exec(CheckerState state, const Instruction& ins, const CheckerOptions& options) {
  using Kind = Instruction::Kind;
  switch (ins.kind) {
    case Kind::Variable:
    case Kind::Hypothesis:
    case Kind::Axiom: {
      if (ins.kind == Kind::Axiom && !state.frames.empty())
        throw ScriptError("Axiom " + ins.name + " inside Remark " + state.frames.back().name +
                          "; axioms are global");
      if (ins.kind != Kind::Axiom && !state.frames.empty() && state.frames.back().statement)
        throw ScriptError(std::string(keyword(ins.kind)) + " " + ins.name + " after the Statement of Remark " +
                          state.frames.back().name + "; declare it before the Statement");
      require_fresh(state, ins.name);
      Context ctx = state.visible();
      rejecting_type_errors([&] {
        check_is_type(ctx, *ins.type);
        return 0;
      });
      Universal u{ins.name, *ins.type};
      if (ins.kind == Kind::Axiom)
        state.global.push_back(u);
      else
        add_local(state, u);
      return state;
    }
    case Kind::Definition: {
      require_fresh(state, ins.name);
      Context ctx = state.visible();
      Term type = rejecting_type_errors([&] {
        if (!ins.type) return infer_type(ctx, *ins.body);
        check_is_type(ctx, *ins.type);
        check_type(ctx, *ins.body, *ins.type);
        return *ins.type;
      });
      add_local(state, Definition{ins.name, type, *ins.body});
      return state;
    }
    case Kind::Remark:
      require_fresh(state, ins.name);
      state.frames.push_back(RemarkFrame{ins.name, ins.where, {}, std::nullopt, {}});
      return state;
    case Kind::Statement: {
      if (state.frames.empty()) throw ScriptError("Statement outside a Remark");
      if (state.frames.back().statement)
        throw ScriptError("Remark " + state.frames.back().name + " already has a Statement");
      Context ctx = state.visible();
      rejecting_type_errors([&] {
        check_is_type(ctx, *ins.type);
        return 0;
      });
      state.frames.back().statement = *ins.type;
      return state;
    }
    case Kind::Using:
      return check_using(std::move(state), ins.premises, options, ins.where);
  }
  throw InternalError("unknown instruction");
}

CheckerState check_using(CheckerState state, const std::vector<std::string>& premises, const CheckerOptions& options,
                         SourceLocation where) {
  if (state.frames.empty()) throw ScriptError("Using outside a Remark");
  if (!state.frames.back().statement)
    throw ScriptError("Using without a Statement in Remark " + state.frames.back().name);
  Context ctx = state.visible();
  for (const auto& p : premises)
    if (!ctx.contains(p)) throw ScriptError("unknown premise " + p);

  RemarkFrame frame = state.frames.back();
  SynthesisRequest request;
  request.context = ctx;
  request.goal = *frame.statement;
  request.premises = premises;
  request.fuel = options.fuel;
  request.max_solutions = options.max_solutions;
  request.trace = options.trace;
  request.trace_matcher = options.trace_matcher;
  SynthesisOutcome outcome = synthesize(request);
  for (auto& line : outcome.trace) state.trace.push_back(std::move(line));
  if (outcome.status == SynthesisOutcome::Status::InternalError)
    throw InternalError("synthesis failed for Remark " + frame.name + ": " + outcome.reason);
  if (!outcome.found())
    throw ScriptError("no proof of " + print_term(*frame.statement) + " found using " + premise_list(premises));

  // Discharge: substitute local definitions, abstract local variables.
  Term proof = *outcome.proof;
  Term type = *frame.statement;
  std::vector<ContextEntry> locals = frame.before_statement;
  locals.insert(locals.end(), frame.after_statement.begin(), frame.after_statement.end());
  for (auto it = locals.rbegin(); it != locals.rend(); ++it) {
    if (auto d = std::get_if<Definition>(&*it)) {
      proof = subst(proof, d->name, d->body);
      type = subst(type, d->name, d->body);
    } else if (auto u = std::get_if<Universal>(&*it)) {
      proof = Term::lam(u->name, u->type, abstract(proof, u->name));
      type = Term::prod(u->name, u->type, abstract(type, u->name));
    }
  }
  proof = beta_normalize(proof);
  type = beta_normalize(type);

  state.frames.pop_back();
  Context outer = state.visible();
  if (outer.contains(frame.name)) throw ScriptError(frame.name + " is already declared");
  try {
    check_type(outer, proof, type);
  } catch (const TypeError& e) {
    throw InternalError("discharged proof of " + frame.name + " failed kernel recheck: " + e.what());
  }
  add_local(state, Definition{frame.name, type, proof});
  state.proved.push_back(ProvedConstant{frame.name, type, proof, state.frames.size(), where});
  return state;
}

ScriptReport check_script(std::string_view source, const CheckerOptions& options) {
  ScriptReport report;
  CheckerState state;
  auto fail = [&](Diagnostic::Severity severity, SourceLocation where, std::string message) {
    report.failure = Diagnostic{severity, where, std::move(message)};
  };
  std::vector<Instruction> instructions;
  try {
    instructions = parse_script(source);
  } catch (const ParseError& e) {
    fail(Diagnostic::Severity::Error, e.where(), e.what());
    return report;
  }
  for (const auto& ins : instructions) {
    try {
      state = exec(state, ins, options);
    } catch (const ScriptError& e) {
      std::string message = e.what();
      std::string_view kw = keyword(ins.kind);
      if (message.rfind(kw, 0) != 0) message = std::string(kw) + ": " + message;
      fail(Diagnostic::Severity::Error, ins.where, std::move(message));
    } catch (const InternalError& e) {
      fail(Diagnostic::Severity::InternalError, ins.where, e.what());
    }
    if (report.failure) break;
  }
  if (!report.failure && !state.frames.empty()) {
    const RemarkFrame& open = state.frames.back();
    fail(Diagnostic::Severity::Error, open.where, "unclosed Remark " + open.name);
  }
  report.proved = state.proved;
  report.trace = std::move(state.trace);
  report.final_context = state.global;
  return report;
}

}  // namespace coc
