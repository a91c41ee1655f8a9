#include "coc/matcher.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "coc/errors.hpp"
#include "coc/kernel.hpp"
#include "coc/reduction.hpp"
#include "coc/syntax.hpp"

namespace coc {

namespace {

Term type_in(const Context& ctx, const Term& t) { return infer_type(ctx.as_universal(), t); }

// Instantiates the binders of `type` with fresh names, returning the binders
// and the remaining codomain; nullopt when there are fewer than `count`.
std::optional<std::pair<std::vector<Binder>, Term>> open_binders(Term type, std::size_t count, const Context& ctx,
                                                                 NameSupply& names) {
  std::vector<Binder> binders;
  for (std::size_t k = 0; k < count; ++k) {
    type = whnf(type, ctx);
    if (!type.is_prod()) return std::nullopt;
    std::string z = names.fresh(type.name() == "_" ? "z" : type.name());
    binders.push_back(Binder{z, normalize(type.domain(), ctx)});
    type = instantiate(type.body(), Term::free(z));
  }
  return std::make_pair(std::move(binders), normalize(type, ctx));
}

std::vector<Term> vars_of(const std::vector<Binder>& binders) {
  std::vector<Term> out;
  for (const auto& b : binders) out.push_back(Term::free(b.name));
  return out;
}

bool mentions_any(const Term& t, const std::set<std::string>& names) {
  for (const auto& n : free_names(t))
    if (names.count(n)) return true;
  return false;
}

}  // namespace

RigidStep step_rigid(const Term& lhs, const Term& rhs, const Context& ctx, NameSupply& names) {
  (void)ctx;
  RigidStep out;
  if (lhs.is_sort() || rhs.is_sort()) {
    out.clash = !(lhs.is_sort() && rhs.is_sort() && lhs.sort_value() == rhs.sort_value());
    return out;
  }
  if (lhs.is_binder() || rhs.is_binder()) {
    if (lhs.kind() != rhs.kind()) {
      out.clash = true;
      return out;
    }
    std::string u = names.fresh(rhs.name() == "_" ? "u" : rhs.name());
    out.locals.push_back(Universal{u, rhs.domain()});
    out.equations.push_back({lhs.domain(), rhs.domain()});
    out.equations.push_back({instantiate(lhs.body(), Term::free(u)), instantiate(rhs.body(), Term::free(u))});
    return out;
  }
  Spine l = spine(lhs);
  Spine r = spine(rhs);
  if (!l.head.is_free() || !r.head.is_free() || l.head.name() != r.head.name() || l.args.size() != r.args.size()) {
    out.clash = true;
    return out;
  }
  for (std::size_t k = 0; k < l.args.size(); ++k) out.equations.push_back({l.args[k], r.args[k]});
  return out;
}

std::vector<FlexCandidate> step_flex(const std::string& var, const std::vector<Term>& args, const Term& rhs,
                                     const Context& ctx, const std::set<std::string>& rhs_locals,
                                     NameSupply& names) {
  std::vector<FlexCandidate> out;
  auto var_type = ctx.type_of(var);
  if (!var_type) throw InternalError("step_flex: " + var + " is not declared");
  auto opened = open_binders(*var_type, args.size(), ctx, names);
  if (!opened) return out;
  const auto& [zs, result_type] = *opened;
  const std::vector<Term> z_vars = vars_of(zs);
  const Term lhs = Term::app(Term::free(var), args);

  Context scope = ctx;
  for (const auto& z : zs) scope.push_back(Universal{z.name, z.type});

  for (std::size_t m = 0; m < zs.size(); ++m) {
    if (!conv(zs[m].type, result_type, scope)) continue;
    FlexCandidate c{FlexCandidate::Rule::Projection, make_lambda(zs, z_vars[m]), {}, {}, {{args[m], rhs}}};
    assert(args[m].size() < lhs.size());
    out.push_back(std::move(c));
  }

  try {
    Spine r = spine(rhs);
    if (r.head.is_sort() && r.args.empty()) {
      out.push_back({FlexCandidate::Rule::Imitation, make_lambda(zs, r.head), {}, {}, {}});
    } else if (r.head.is_free() && !rhs_locals.count(r.head.name())) {
      auto head_type = ctx.type_of(r.head.name());
      if (!head_type) throw TypeError("unbound head " + r.head.name());
      FlexCandidate c{FlexCandidate::Rule::Imitation, Term::prop(), {}, {}, {}};
      Term remaining = *head_type;
      std::vector<Term> new_args;
      for (std::size_t j = 0; j < r.args.size(); ++j) {
        remaining = whnf(remaining, scope);
        if (!remaining.is_prod()) throw TypeError("over-applied head");
        std::string h = names.fresh("H");
        c.fresh.push_back(Existential{h, make_pi(zs, normalize(remaining.domain(), scope))});
        Term h_app = Term::app(Term::free(h), z_vars);
        new_args.push_back(h_app);
        remaining = instantiate(remaining.body(), h_app);
        c.residuals.push_back({Term::app(Term::free(h), args), r.args[j]});
        assert(r.args[j].size() < rhs.size());
      }
      c.binding = make_lambda(zs, Term::app(r.head, new_args));
      out.push_back(std::move(c));
    } else if (rhs.is_binder()) {
      FlexCandidate c{FlexCandidate::Rule::Imitation, Term::prop(), {}, {}, {}};
      std::string k1 = names.fresh("K");
      std::string k2 = names.fresh("K");
      std::string u = names.fresh(rhs.name() == "_" ? "u" : rhs.name());
      Term domain_type = type_in(ctx, rhs.domain());
      Context inner = ctx.with(Universal{u, rhs.domain()});
      Term body = instantiate(rhs.body(), Term::free(u));
      Term body_type = type_in(inner, body);
      Term k1_app = Term::app(Term::free(k1), z_vars);
      std::vector<Binder> zu = zs;
      zu.push_back(Binder{u, k1_app});
      c.fresh.push_back(Existential{k1, make_pi(zs, domain_type)});
      c.fresh.push_back(Existential{k2, make_pi(zu, body_type)});
      c.locals.push_back(Universal{u, rhs.domain()});
      std::vector<Binder> ub{Binder{u, k1_app}};
      Term k2_app = Term::app(Term::free(k2), vars_of(zu));
      c.binding = make_lambda(zs, rhs.is_prod() ? make_pi(ub, k2_app) : make_lambda(ub, k2_app));
      std::vector<Term> args_u = args;
      args_u.push_back(Term::free(u));
      c.residuals.push_back({Term::app(Term::free(k1), args), rhs.domain()});
      c.residuals.push_back({Term::app(Term::free(k2), args_u), body});
      assert(rhs.domain().size() < rhs.size() && body.size() < rhs.size());
      out.push_back(std::move(c));
    }
  } catch (const TypeError&) {
    // No well-typed imitation.
  }
  return out;
}

namespace {

class Solver {
 public:
  Solver(const MatchProblem& problem, const MatchOptions& options,
         const std::function<bool(const MatchSolution&)>& visit)
      : problem_(problem), options_(options), visit_(visit),
        names_(options.names ? *options.names : own_names_) {}

  void run() {
    State s;
    s.ctx = problem_.context;
    s.flexible.insert(problem_.existentials.begin(), problem_.existentials.end());
    for (auto it = problem_.equations.rbegin(); it != problem_.equations.rend(); ++it) s.pending.push_back(*it);
    search(std::move(s), 0);
  }

 private:
  struct State {
    Context ctx;
    std::set<std::string> flexible;  // unbound flexible variables
    std::set<std::string> rhs_locals;
    std::vector<MatchEquation> pending;  // back is next
  };

  void tick() {
    if (!options_.fuel) return;
    if (*options_.fuel == 0) throw FuelExhausted("search fuel exhausted in matcher");
    --*options_.fuel;
  }

  // Returns false once the visitor asked to stop.
  bool search(State s, int depth) {
    for (;;) {
      tick();
      if (s.pending.empty()) return emit(s);
      MatchEquation eq = s.pending.back();
      s.pending.pop_back();
      Term lhs = normalize(eq.lhs, s.ctx);
      Term rhs = normalize(eq.rhs, s.ctx);
      if (!mentions_any(lhs, s.flexible)) {
        if (lhs == rhs) continue;
        return true;
      }
      Spine l = spine(lhs);
      if (l.head.is_free() && s.flexible.count(l.head.name())) {
        const std::string var = l.head.name();
        auto candidates = step_flex(var, l.args, rhs, s.ctx, s.rhs_locals, names_);
        for (auto& c : candidates) {
          if (options_.trace)
            options_.trace("[" + std::to_string(depth) + "] " + var + " ← " + print_term(c.binding) +
                           " | residuals: " + std::to_string(c.residuals.size()));
          State next = s;
          for (const auto& f : c.fresh) {
            next.ctx.push_back(f);
            next.flexible.insert(f.name);
          }
          for (const auto& u : c.locals) {
            next.ctx.push_back(u);
            next.rhs_locals.insert(u.name);
          }
          bind(next, var, c.binding);
          for (auto it = c.residuals.rbegin(); it != c.residuals.rend(); ++it) next.pending.push_back(*it);
          if (!search(std::move(next), depth + 1)) return false;
        }
        return true;
      }
      RigidStep step = step_rigid(lhs, rhs, s.ctx, names_);
      if (step.clash) return true;
      for (const auto& u : step.locals) {
        s.ctx.push_back(u);
        s.rhs_locals.insert(u.name);
      }
      for (auto it = step.equations.rbegin(); it != step.equations.rend(); ++it) s.pending.push_back(*it);
    }
  }

  // The existential becomes a definition, so later normalization unfolds it.
  static void bind(State& s, const std::string& var, const Term& value) {
    std::vector<ContextEntry> entries;
    for (const auto& e : s.ctx.entries()) {
      if (auto x = std::get_if<Existential>(&e); x && x->name == var)
        entries.push_back(Definition{var, x->type, value});
      else
        entries.push_back(e);
    }
    s.ctx = Context(std::move(entries));
    s.flexible.erase(var);
  }

  bool emit(const State& s) {
    MatchSolution sol;
    for (const auto& name : problem_.existentials)
      if (!s.flexible.count(name)) sol.bindings[name] = normalize(Term::free(name), s.ctx);
    if (std::find(seen_.begin(), seen_.end(), sol) != seen_.end()) return true;
    seen_.push_back(sol);
    return visit_(sol);
  }

  const MatchProblem& problem_;
  const MatchOptions& options_;
  const std::function<bool(const MatchSolution&)>& visit_;
  NameSupply own_names_{"m"};
  NameSupply& names_;
  std::vector<MatchSolution> seen_;
};

bool arguments_atomic(const Term& t, const Context& ctx, const std::set<std::string>& flexible, NameSupply& names) {
  if (t.is_binder()) {
    if (!arguments_atomic(t.domain(), ctx, flexible, names)) return false;
    std::string u = names.fresh("u");
    return arguments_atomic(instantiate(t.body(), Term::free(u)), ctx.with(Universal{u, t.domain()}), flexible,
                            names);
  }
  Spine s = spine(t);
  if (s.head.is_free() && flexible.count(s.head.name())) {
    for (const auto& a : s.args)
      if (!is_atomic(infer_type(ctx, a), ctx)) return false;
  } else if (!s.args.empty() && !arguments_atomic(s.head, ctx, flexible, names)) {
    return false;
  }
  for (const auto& a : s.args)
    if (!arguments_atomic(a, ctx, flexible, names)) return false;
  return true;
}

}  // namespace

bool is_argument_restricted(const MatchProblem& problem) {
  std::set<std::string> flexible(problem.existentials.begin(), problem.existentials.end());
  const Context& ctx = problem.context;
  for (const auto& x : problem.existentials) {
    if (!ctx.is_existential(x)) return false;
    if (order(*ctx.type_of(x), ctx) > 2) return false;
  }
  NameSupply names("r");
  Context typing = ctx.as_universal();
  try {
    for (const auto& eq : problem.equations) {
      if (mentions_any(normalize(eq.rhs, ctx), flexible)) return false;
      if (!arguments_atomic(normalize(eq.lhs, ctx), typing, flexible, names)) return false;
    }
  } catch (const TypeError&) {
    return false;
  }
  return true;
}

void for_each_solution(const MatchProblem& problem, const std::function<bool(const MatchSolution&)>& visit,
                       const MatchOptions& options) {
  if (!is_argument_restricted(problem))
    throw std::invalid_argument("matching problem is not second-order argument-restricted");
  Solver(problem, options, visit).run();
}

std::vector<MatchSolution> solve(const MatchProblem& problem, const MatchOptions& options) {
  std::vector<MatchSolution> out;
  if (options.max_solutions == 0) return out;
  for_each_solution(
      problem,
      [&](const MatchSolution& s) {
        out.push_back(s);
        return out.size() < options.max_solutions;
      },
      options);
  return out;
}

}  // namespace coc
