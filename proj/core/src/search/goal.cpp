#include "coc/goal.hpp"

#include "coc/errors.hpp"
#include "coc/kernel.hpp"
#include "coc/reduction.hpp"

namespace coc {

GoalDecomposition split_goal(const Term& goal, const Context& ctx, NameSupply& names) {
  GoalDecomposition out{{}, normalize(goal, ctx)};
  while (out.head.is_prod()) {
    std::string x = names.fresh(out.head.name() == "_" ? "x" : out.head.name());
    out.binders.push_back(Binder{x, out.head.domain()});
    out.head = instantiate(out.head.body(), Term::free(x));
  }
  return out;
}

Term recompose(const GoalDecomposition& goal) { return make_pi(goal.binders, goal.head); }

CurriedType curry_type(const Term& w_type, const Context& ctx) {
  Term t = normalize(w_type, ctx);
  std::vector<Term> domains;
  std::vector<std::string> binder_names;
  while (t.is_prod()) {
    domains.push_back(t.domain());
    binder_names.push_back(t.name() == "_" ? "y" + std::to_string(domains.size()) : t.name());
    t = t.body();
  }
  // Domain j already lives under binders 1..j-1, so wrapping it in the same
  // binders as abstractions closes it without reindexing.
  auto wrap = [&](Term body, std::size_t count) {
    for (std::size_t k = count; k-- > 0;) body = Term::lam(binder_names[k], domains[k], body);
    return body;
  };
  CurriedType out{{}, wrap(t, domains.size()), binder_names};
  for (std::size_t j = 0; j < domains.size(); ++j) out.components.push_back(wrap(domains[j], j));
  return out;
}

Term recompose(const CurriedType& curried) {
  NameSupply names("c");
  std::vector<Binder> binders;
  std::vector<Term> vars;
  for (std::size_t j = 0; j < curried.arity(); ++j) {
    std::string y = names.fresh(curried.binder_names[j]);
    binders.push_back(Binder{y, Term::app(curried.components[j], vars)});
    vars.push_back(Term::free(y));
  }
  return make_pi(binders, Term::app(curried.result, vars));
}

std::vector<std::string> SubstitutionTriple::existentials() const {
  std::vector<std::string> out;
  for (const auto& e : extension)
    if (auto x = std::get_if<Existential>(&e)) out.push_back(x->name);
  return out;
}

SubstitutionTriple build_gamma(const GoalDecomposition& goal, std::size_t i, const std::string& w,
                               const Term& w_type, const Context& ctx, NameSupply& names,
                               const std::string& variable) {
  if (i > goal.arity()) throw InternalError("build_gamma: binder count out of range");
  std::vector<Binder> prefix(goal.binders.begin(), goal.binders.begin() + static_cast<std::ptrdiff_t>(i));
  std::vector<Term> xs;
  for (const auto& b : prefix) xs.push_back(Term::free(b.name));

  CurriedType curried = curry_type(w_type, ctx);

  // Existential types are checked with x1..xi and earlier holes in scope.
  Context scope = ctx.as_universal();
  for (const auto& b : goal.binders) scope.push_back(Universal{b.name, b.type});

  SubstitutionTriple out{variable, {}, Term::prop()};
  std::vector<Term> applied;  // (hk x1 ... xi)
  for (std::size_t j = 0; j < curried.arity(); ++j) {
    std::string h = names.fresh("h" + std::to_string(j + 1));
    Term type = make_pi(prefix, beta_normalize(Term::app(curried.components[j], applied)));
    try {
      check_is_type(scope, type);
    } catch (const TypeError& e) {
      throw TypeError("ill-typed existential " + h + ": " + e.what());
    }
    scope.push_back(Universal{h, type});
    out.extension.push_back(Existential{h, type});
    applied.push_back(Term::app(Term::free(h), xs));
  }
  out.extension.push_back(Equation{make_pi(prefix, Term::app(curried.result, applied)), recompose(goal)});
  out.body = make_lambda(prefix, Term::app(Term::free(w), applied));
  return out;
}

Context apply_substitution(const Context& ctx, const SubstitutionTriple& triple) {
  Context out;
  bool found = false;
  auto rewrite = [&](const Term& t) { return subst(t, triple.variable, triple.body); };
  for (const auto& e : ctx.entries()) {
    if (!found) {
      if (auto x = std::get_if<Existential>(&e); x && x->name == triple.variable) {
        found = true;
        for (const auto& ext : triple.extension) out.push_back(ext);
        continue;
      }
      out.push_back(e);
      continue;
    }
    std::visit(
        [&](const auto& entry) {
          using T = std::decay_t<decltype(entry)>;
          if constexpr (std::is_same_v<T, Universal>)
            out.push_back(Universal{entry.name, rewrite(entry.type)});
          else if constexpr (std::is_same_v<T, Definition>)
            out.push_back(Definition{entry.name, rewrite(entry.type), rewrite(entry.body)});
          else if constexpr (std::is_same_v<T, Existential>)
            out.push_back(Existential{entry.name, rewrite(entry.type)});
          else
            out.push_back(Equation{rewrite(entry.lhs), rewrite(entry.rhs)});
        },
        e);
  }
  if (!found) throw InternalError("apply_substitution: " + triple.variable + " is not an existential of the context");
  return out;
}

SubstitutionTriple instantiation(std::string variable, Term value) {
  return SubstitutionTriple{std::move(variable), {}, std::move(value)};
}

}  // namespace coc
