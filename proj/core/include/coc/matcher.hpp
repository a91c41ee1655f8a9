#pragma once

// Second-order pattern matching in the Calculus of Constructions.
//
// Equations lhs = rhs have existential (flexible) variables on the left only;
// right-hand sides are closed. Solving alternates rigid decomposition with
// Huet's projection and imitation rules. Every flexible step either shrinks
// the right-hand side or strictly shrinks the left-hand side, so the search
// tree is finite.

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coc/context.hpp"
#include "coc/term.hpp"

namespace coc {

struct MatchEquation {
  Term lhs;
  Term rhs;
};

struct MatchProblem {
  Context context;                        // declares every existential below
  std::vector<std::string> existentials;  // the flexible variables
  std::vector<MatchEquation> equations;
};

struct MatchSolution {
  // Closed, normal bindings. Existentials the equations do not constrain are
  // absent.
  std::map<std::string, Term> bindings;

  friend bool operator==(const MatchSolution&, const MatchSolution&) = default;
};

struct MatchOptions {
  std::size_t max_solutions = 64;
  // Receives one line per search node: "[depth] F ← candidate | residuals: k".
  std::function<void(const std::string&)> trace;
  // Shared step budget; decremented per search node. Null means unbounded.
  std::size_t* fuel = nullptr;
  // Fresh names; a private supply is used when null.
  NameSupply* names = nullptr;
};

// Existentials have types of order <= 2, each applied occurrence in a
// normalized lhs has atomic-typed arguments, and no rhs mentions an
// existential.
bool is_argument_restricted(const MatchProblem& problem);

// Solutions in search order: projections before imitation, leftmost binder
// first. Duplicates are removed. Throws std::invalid_argument when the
// problem is not argument-restricted.
std::vector<MatchSolution> solve(const MatchProblem& problem, const MatchOptions& options = {});

// Streams solutions (without the max_solutions cap) until `visit` returns
// false.
void for_each_solution(const MatchProblem& problem, const std::function<bool(const MatchSolution&)>& visit,
                       const MatchOptions& options = {});

// -- single steps, exposed for testing ------------------------------------

struct RigidStep {
  bool clash = false;
  std::vector<MatchEquation> equations;
  std::vector<Universal> locals;  // fresh binder variables opened by the step
};

// Decomposes an equation whose lhs head is not flexible. Both sides must be
// normal.
RigidStep step_rigid(const Term& lhs, const Term& rhs, const Context& ctx, NameSupply& names);

struct FlexCandidate {
  enum class Rule { Projection, Imitation };
  Rule rule;
  Term binding;
  std::vector<Existential> fresh;  // new existentials introduced by imitation
  std::vector<Universal> locals;   // binder variables opened by imitation
  std::vector<MatchEquation> residuals;
};

// Candidates for `var args... = rhs`. `var`'s type is read from ctx (with
// existentials treated as declared). Names in `rhs_locals` are bound inside
// the rhs and may not be imitated.
std::vector<FlexCandidate> step_flex(const std::string& var, const std::vector<Term>& args, const Term& rhs,
                                     const Context& ctx, const std::set<std::string>& rhs_locals,
                                     NameSupply& names);

}  // namespace coc
