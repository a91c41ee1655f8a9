#pragma once

// The always-terminating proof synthesis method.
//
// For a goal (x1:P1)...(xn:Pn)P in a plain context, every pair (i, w) of a
// binder count and a head variable is tried in a fixed order. The head's
// curried type yields holes h1..hq and one closing equation; the holes are
// then instantiated in three phases:
//   1. left to right, holes whose type is not second order are instantiated
//      by variables, solving each accounting equation by matching;
//   2. the closing equation is solved by matching;
//   3. right to left, remaining holes are instantiated by variables.
// Proofs that survive are rechecked by the kernel.
//
// Inside the search the consumed binders x1..xi are opened as ordinary
// variables and each hole hj is represented by Hj with hj = [x1..xi]Hj, so
// the matcher sees Hj at its own (lowered) order.

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coc/context.hpp"
#include "coc/goal.hpp"
#include "coc/matcher.hpp"
#include "coc/reduction.hpp"
#include "coc/term.hpp"

namespace coc {

struct SynthesisRequest {
  Context context;  // plain
  Term goal;
  // Names usable as heads and instantiations; all constants when absent.
  // Goal binders are always usable.
  std::optional<std::vector<std::string>> premises;
  std::size_t fuel = kDefaultReductionFuel;
  std::size_t max_solutions = 64;
  bool trace = false;
  bool trace_matcher = false;
};

struct SynthesisOutcome {
  enum class Status { Found, NotFound, InternalError };
  Status status = Status::NotFound;
  std::optional<Term> proof;  // beta-normal and kernel-checked when Found
  std::vector<std::string> trace;
  std::string reason;  // InternalError only

  bool found() const { return status == Status::Found; }
};

SynthesisOutcome synthesize(const SynthesisRequest& request);

// -- the search steps, exposed for testing --------------------------------

// Candidate policy shared by the phases of one request.
struct SearchEnvironment {
  Context base;  // the request context
  std::optional<std::set<std::string>> premises;
  MatchOptions match;
  std::size_t* fuel = nullptr;
  std::vector<std::string>* trace = nullptr;

  bool allowed(const std::string& constant) const { return !premises || premises->count(constant) > 0; }
};

struct SearchState {
  // Base context, consumed binders as variables, holes, and (until solved)
  // the closing equation.
  Context context;
  // The same extension in quantified form: base[?goal := gamma].
  Context quantified;
  std::vector<Binder> consumed;
  std::vector<std::string> holes;  // all holes h1..hq, in order
  std::string head;
  Term skeleton;  // (w h1 ... hq) with solved holes substituted

  std::vector<std::string> open_holes() const;
  bool has_equation() const;
  // [x1:P1]...[xi:Pi]skeleton, beta-normal.
  Term proof() const;
};

std::optional<SearchState> attempt_head(const SearchEnvironment& env, const GoalDecomposition& goal,
                                        std::size_t consumed, const std::string& head, NameSupply& names);

// Each visitor returns false to stop the enumeration; the phase then returns
// false as well.
using StateVisitor = std::function<bool(const SearchState&)>;

bool phase_eager(const SearchState& state, const SearchEnvironment& env, const StateVisitor& visit);
bool phase_equation(const SearchState& state, const SearchEnvironment& env,
                    const std::function<bool(const MatchSolution&, const SearchState&)>& visit);
bool phase_fill(const SearchState& state, const SearchEnvironment& env, const StateVisitor& visit);

std::vector<SearchState> phase_eager(const SearchState& state, const SearchEnvironment& env);
std::vector<std::pair<MatchSolution, SearchState>> phase_equation(const SearchState& state,
                                                                  const SearchEnvironment& env);
std::vector<SearchState> phase_fill(const SearchState& state, const SearchEnvironment& env);

}  // namespace coc
