#pragma once

// Goal decomposition, the currying of a head candidate's type, and the
// quantified context extension built for each candidate head.

#include <cstddef>
#include <string>
#include <vector>

#include "coc/context.hpp"
#include "coc/term.hpp"

namespace coc {

// goal = (x1:P1)...(xn:Pn)P with P atomic. Binder names are fresh free
// names, so later binder types and the head refer to earlier binders by name.
struct GoalDecomposition {
  std::vector<Binder> binders;
  Term head;

  std::size_t arity() const { return binders.size(); }
};

GoalDecomposition split_goal(const Term& goal, const Context& ctx, NameSupply& names);
Term recompose(const GoalDecomposition& goal);

// For w : (y1:Q'1)...(yq:Q'q)Q':
//   components[j-1] = [y1:Q'1]...[y(j-1):Q'(j-1)]Q'j
//   result          = [y1:Q'1]...[yq:Q'q]Q'
// Every component is a closed term.
struct CurriedType {
  std::vector<Term> components;
  Term result;
  std::vector<std::string> binder_names;

  std::size_t arity() const { return components.size(); }
};

CurriedType curry_type(const Term& w_type, const Context& ctx);

// (y1:Q1)(y2:(Q2 y1))...(Q y1 ... yq), convertible to the original type.
Term recompose(const CurriedType& curried);

// <variable, extension, body>: `extension` declares the existentials h1..hq
// followed by one equation; `body` instantiates `variable`.
struct SubstitutionTriple {
  std::string variable;
  std::vector<ContextEntry> extension;
  Term body;

  std::vector<std::string> existentials() const;
};

// Builds the extension for head `w` consuming the first `i` goal binders:
//   ?hj : (x1:P1)...(xi:Pi)(Qj (h1 x1..xi) ... (h(j-1) x1..xi))
//   (x1:P1)...(xi:Pi)(Q (h1 x1..xi) ... (hq x1..xi)) = goal
//   body = [x1:P1]...[xi:Pi](w (h1 x1..xi) ... (hq x1..xi))
// Throws TypeError when an existential's type is ill-formed.
SubstitutionTriple build_gamma(const GoalDecomposition& goal, std::size_t i, const std::string& w,
                               const Term& w_type, const Context& ctx, NameSupply& names,
                               const std::string& variable = "goal");

// Replaces the existential `triple.variable` by the extension and substitutes
// `triple.body` for it in every later entry.
Context apply_substitution(const Context& ctx, const SubstitutionTriple& triple);

// The degenerate triple instantiating an existential by a closed term.
SubstitutionTriple instantiation(std::string variable, Term value);

}  // namespace coc
