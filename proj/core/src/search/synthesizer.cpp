#include "coc/synthesizer.hpp"

#include <algorithm>

#include "coc/errors.hpp"
#include "coc/kernel.hpp"
#include "coc/syntax.hpp"

namespace coc {

namespace {

void tick(const SearchEnvironment& env) {
  if (!env.fuel) return;
  if (*env.fuel == 0) throw FuelExhausted("search fuel exhausted");
  --*env.fuel;
}

void note(const SearchEnvironment& env, std::string line) {
  if (env.trace) env.trace->push_back(std::move(line));
}

const Existential* find_hole(const Context& ctx, const std::string& name) {
  const ContextEntry* e = ctx.find(name);
  return e ? std::get_if<Existential>(e) : nullptr;
}

SearchState instantiate_hole(const SearchState& state, const std::string& hole, const Term& value) {
  SearchState next = state;
  next.context = apply_substitution(state.context, instantiation(hole, value));
  next.skeleton = subst(state.skeleton, hole, value);
  return next;
}

SearchState apply_solution(const SearchState& state, const MatchSolution& solution) {
  SearchState next = state;
  for (const auto& [name, value] : solution.bindings) next = instantiate_hole(next, name, value);
  return next;
}

std::vector<std::string> holes_in(const SearchState& state, const Term& t) {
  std::vector<std::string> out;
  for (const auto& h : state.open_holes())
    if (occurs_free(t, h)) out.push_back(h);
  return out;
}

std::size_t hole_index(const SearchState& state, const std::string& hole) {
  auto it = std::find(state.holes.begin(), state.holes.end(), hole);
  return static_cast<std::size_t>(it - state.holes.begin()) + 1;
}

// Variables usable for a hole: consumed binders x_i..x_1, then the allowed
// constants from most recent to oldest, applied to x1..xi.
std::vector<Term> instantiation_candidates(const SearchState& state, const SearchEnvironment& env) {
  std::vector<Term> out;
  std::vector<Term> xs;
  for (const auto& b : state.consumed) xs.push_back(Term::free(b.name));
  for (std::size_t m = state.consumed.size(); m-- > 0;) out.push_back(xs[m]);
  auto constants = env.base.constant_names();
  for (auto it = constants.rbegin(); it != constants.rend(); ++it)
    if (env.allowed(*it)) out.push_back(Term::app(Term::free(*it), xs));
  return out;
}

// Instantiates `hole` by each candidate whose accounting equation
// (hole type = candidate type) has a matching solution.
bool instantiate_by_variables(const SearchState& state, const std::string& hole, const SearchEnvironment& env,
                              const char* phase, const StateVisitor& visit) {
  const Existential* h = find_hole(state.context, hole);
  if (!h) throw InternalError("hole " + hole + " vanished from the context");
  Term hole_type = normalize(h->type, state.context);
  Context typing = state.context.as_universal();
  for (const Term& candidate : instantiation_candidates(state, env)) {
    tick(env);
    Term candidate_type = Term::prop();
    try {
      candidate_type = infer_type(typing, candidate);
    } catch (const TypeError&) {
      continue;
    }
    MatchProblem accounting{state.context, holes_in(state, hole_type), {{hole_type, candidate_type}}};
    if (!is_argument_restricted(accounting)) continue;
    for (const auto& solution : solve(accounting, env.match)) {
      SearchState next = instantiate_hole(apply_solution(state, solution), hole, candidate);
      note(env, std::string("  ") + phase + " h" + std::to_string(hole_index(state, hole)) +
                    " := " + print_term(candidate));
      if (!visit(next)) return false;
    }
  }
  return true;
}

bool eager_from(const SearchState& state, std::size_t index, const SearchEnvironment& env,
                const StateVisitor& visit) {
  for (; index < state.holes.size(); ++index) {
    const Existential* h = find_hole(state.context, state.holes[index]);
    if (h && order(h->type, state.context) > 2) break;
  }
  if (index == state.holes.size()) return visit(state);
  return instantiate_by_variables(state, state.holes[index], env, "eager",
                                  [&](const SearchState& next) { return eager_from(next, index + 1, env, visit); });
}

bool fill_rest(const SearchState& state, const SearchEnvironment& env, const StateVisitor& visit) {
  auto open = state.open_holes();
  if (open.empty()) return visit(state);
  return instantiate_by_variables(state, open.back(), env, "fill",
                                  [&](const SearchState& next) { return fill_rest(next, env, visit); });
}

}  // namespace

std::vector<std::string> SearchState::open_holes() const {
  std::vector<std::string> out;
  for (const auto& h : holes)
    if (find_hole(context, h)) out.push_back(h);
  return out;
}

bool SearchState::has_equation() const {
  return std::any_of(context.entries().begin(), context.entries().end(),
                     [](const ContextEntry& e) { return std::holds_alternative<Equation>(e); });
}

Term SearchState::proof() const { return beta_normalize(make_lambda(consumed, skeleton)); }

std::optional<SearchState> attempt_head(const SearchEnvironment& env, const GoalDecomposition& goal,
                                        std::size_t consumed, const std::string& head, NameSupply& names) {
  Term head_type = Term::prop();
  auto binder = std::find_if(goal.binders.begin(), goal.binders.begin() + static_cast<std::ptrdiff_t>(consumed),
                             [&](const Binder& b) { return b.name == head; });
  if (binder != goal.binders.begin() + static_cast<std::ptrdiff_t>(consumed)) {
    head_type = binder->type;
  } else if (auto t = env.base.type_of(head)) {
    head_type = *t;
  } else {
    throw InternalError("attempt_head: " + head + " is neither a consumed binder nor a constant");
  }

  SubstitutionTriple gamma;
  try {
    gamma = build_gamma(goal, consumed, head, head_type, env.base, names);
  } catch (const TypeError& e) {
    note(env, std::string("  discarded: ") + e.what());
    return std::nullopt;
  }

  SearchState state;
  state.quantified = apply_substitution(env.base.with(Existential{gamma.variable, recompose(goal)}), gamma);
  state.head = head;
  state.holes = gamma.existentials();
  state.consumed.assign(goal.binders.begin(), goal.binders.begin() + static_cast<std::ptrdiff_t>(consumed));

  CurriedType curried = curry_type(head_type, env.base);
  state.context = env.base;
  for (const auto& b : state.consumed) state.context.push_back(Universal{b.name, b.type});
  std::vector<Term> hole_vars;
  for (std::size_t j = 0; j < state.holes.size(); ++j) {
    state.context.push_back(
        Existential{state.holes[j], beta_normalize(Term::app(curried.components[j], hole_vars))});
    hole_vars.push_back(Term::free(state.holes[j]));
  }
  std::vector<Binder> rest(goal.binders.begin() + static_cast<std::ptrdiff_t>(consumed), goal.binders.end());
  state.context.push_back(Equation{Term::app(curried.result, hole_vars), make_pi(rest, goal.head)});
  state.skeleton = Term::app(Term::free(head), hole_vars);
  return state;
}

bool phase_eager(const SearchState& state, const SearchEnvironment& env, const StateVisitor& visit) {
  return eager_from(state, 0, env, visit);
}

bool phase_equation(const SearchState& state, const SearchEnvironment& env,
                    const std::function<bool(const MatchSolution&, const SearchState&)>& visit) {
  const Equation* eq = nullptr;
  std::vector<ContextEntry> without;
  for (const auto& e : state.context.entries()) {
    if (auto q = std::get_if<Equation>(&e)) {
      if (eq) throw InternalError("search state carries more than one equation");
      eq = q;
    } else {
      without.push_back(e);
    }
  }
  if (!eq) throw InternalError("phase_equation: no equation to solve");
  Term lhs = normalize(eq->lhs, state.context);
  MatchProblem problem{state.context, holes_in(state, lhs), {{eq->lhs, eq->rhs}}};
  if (!is_argument_restricted(problem)) {
    note(env, "  equation is not argument-restricted");
    return true;
  }
  auto solutions = solve(problem, env.match);
  note(env, "  eq solved: " + std::to_string(solutions.size()) + " solutions");
  SearchState dropped = state;
  dropped.context = Context(std::move(without));
  for (const auto& s : solutions)
    if (!visit(s, apply_solution(dropped, s))) return false;
  return true;
}

bool phase_fill(const SearchState& state, const SearchEnvironment& env, const StateVisitor& visit) {
  if (state.has_equation()) throw InternalError("phase_fill: the equation is still pending");
  return fill_rest(state, env, visit);
}

std::vector<SearchState> phase_eager(const SearchState& state, const SearchEnvironment& env) {
  std::vector<SearchState> out;
  phase_eager(state, env, [&](const SearchState& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<std::pair<MatchSolution, SearchState>> phase_equation(const SearchState& state,
                                                                  const SearchEnvironment& env) {
  std::vector<std::pair<MatchSolution, SearchState>> out;
  phase_equation(state, env, [&](const MatchSolution& m, const SearchState& s) {
    out.emplace_back(m, s);
    return true;
  });
  return out;
}

std::vector<SearchState> phase_fill(const SearchState& state, const SearchEnvironment& env) {
  std::vector<SearchState> out;
  phase_fill(state, env, [&](const SearchState& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

SynthesisOutcome synthesize(const SynthesisRequest& request) {
  SynthesisOutcome outcome;
  std::size_t fuel = request.fuel;
  SearchEnvironment env;
  env.base = request.context;
  env.fuel = &fuel;
  env.trace = request.trace ? &outcome.trace : nullptr;
  env.match.max_solutions = request.max_solutions;
  env.match.fuel = &fuel;
  if (request.trace && request.trace_matcher)
    env.match.trace = [&outcome](const std::string& line) { outcome.trace.push_back("    " + line); };

  try {
    if (!request.context.is_plain()) throw InternalError("synthesis context must be plain");
    if (request.premises) {
      env.premises.emplace();
      for (const auto& p : *request.premises) {
        const ContextEntry* e = request.context.find(p);
        if (!e) throw InternalError("premise " + p + " is not declared");
        env.premises->insert(p);
      }
    }
    NameSupply names("s");
    env.match.names = &names;
    GoalDecomposition goal = split_goal(request.goal, request.context, names);
    const bool sort_goal = goal.head.is_sort();

    std::optional<Term> found;
    auto on_complete = [&](const SearchState& s) {
      Term proof = s.proof();
      for (const auto& h : s.holes)
        if (occurs_free(proof, h)) throw InternalError("hole " + h + " left in proof " + print_term(proof));
      try {
        check_type(request.context, proof, request.goal);
      } catch (const TypeError& e) {
        throw InternalError(std::string("synthesized proof failed kernel recheck: ") + e.what());
      }
      found = proof;
      return false;
    };

    auto try_head = [&](std::size_t i, const std::string& w, const Term& w_type) {
      if (sort_goal && normalize(w_type, request.context) != goal.head) return false;
      tick(env);
      note(env, "try w=" + display_name(w) + " i=" + std::to_string(i));
      auto state = attempt_head(env, goal, i, w, names);
      if (!state) return false;
      phase_eager(*state, env, [&](const SearchState& after_eager) {
        return phase_equation(after_eager, env, [&](const MatchSolution&, const SearchState& after_eq) {
          return phase_fill(after_eq, env, on_complete);
        });
      });
      return found.has_value();
    };

    auto constants = request.context.constant_names();
    for (std::size_t i = goal.arity() + 1; i-- > 0;) {
      for (std::size_t m = i; m-- > 0;)
        if (try_head(i, goal.binders[m].name, goal.binders[m].type)) break;
      if (found) break;
      for (auto it = constants.rbegin(); it != constants.rend(); ++it) {
        if (!env.allowed(*it)) continue;
        if (try_head(i, *it, *request.context.type_of(*it))) break;
      }
      if (found) break;
    }

    if (found) {
      outcome.status = SynthesisOutcome::Status::Found;
      outcome.proof = found;
      note(env, "FOUND: " + print_term(*found));
    } else {
      outcome.status = SynthesisOutcome::Status::NotFound;
    }
  } catch (const InternalError& e) {
    outcome.status = SynthesisOutcome::Status::InternalError;
    outcome.reason = e.what();
  }
  return outcome;
}

}  // namespace coc
