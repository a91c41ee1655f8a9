#pragma once

// Proof scripts.
//
//   Variable x : T.   Hypothesis h : T.   Axiom a : T.
//   Definition c := t.   Definition c : T := t.
//   Remark r.   Statement T.   Using p1, ..., pn.
//
// A Remark opens a scope. Its Statement is proved by `Using`, which runs the
// synthesizer with the listed premises, then discharges the scope: local
// definitions are substituted into the proof, local variables and hypotheses
// are abstracted in declaration order, and the result is added to the
// enclosing scope as a definition named after the remark.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coc/context.hpp"
#include "coc/errors.hpp"
#include "coc/reduction.hpp"
#include "coc/term.hpp"

namespace coc {

struct Instruction {
  enum class Kind { Variable, Hypothesis, Axiom, Definition, Remark, Statement, Using };

  Kind kind;
  std::string name;                     // all but Statement and Using
  std::optional<Term> type;             // declarations, Statement, optional for Definition
  std::optional<Term> body;             // Definition
  std::vector<std::string> premises;    // Using
  SourceLocation where;
};

std::string_view keyword(Instruction::Kind kind);

// Throws ParseError.
std::vector<Instruction> parse_script(std::string_view source);

struct RemarkFrame {
  std::string name;
  SourceLocation where;
  std::vector<ContextEntry> before_statement;
  std::optional<Term> statement;
  std::vector<ContextEntry> after_statement;
};

struct ProvedConstant {
  std::string name;
  Term type;  // generalized over the remark's variables
  Term proof;
  std::size_t depth = 0;  // number of enclosing remarks
  SourceLocation where;   // the Using instruction
};

struct CheckerOptions {
  std::size_t fuel = kDefaultReductionFuel;
  std::size_t max_solutions = 64;
  bool trace = false;
  bool trace_matcher = false;
};

struct CheckerState {
  Context global;
  std::vector<RemarkFrame> frames;
  std::vector<ProvedConstant> proved;
  std::vector<std::string> trace;

  // Everything in scope: globals, then each open frame's locals.
  Context visible() const;
};

// A script is rejected (exit status 1 in the CLI). Internal failures are
// reported as InternalError instead.
class ScriptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CheckerState exec(CheckerState state, const Instruction& instruction, const CheckerOptions& options = {});

CheckerState check_using(CheckerState state, const std::vector<std::string>& premises,
                         const CheckerOptions& options = {}, SourceLocation where = {});

struct Diagnostic {
  enum class Severity { Error, InternalError };
  Severity severity;
  SourceLocation where;
  std::string message;
};

struct ScriptReport {
  std::vector<ProvedConstant> proved;
  std::optional<Diagnostic> failure;
  std::vector<std::string> trace;
  Context final_context;

  bool ok() const { return !failure.has_value(); }
};

// Parses and runs a whole script; the first failure stops the run.
ScriptReport check_script(std::string_view source, const CheckerOptions& options = {});

}  // namespace coc
