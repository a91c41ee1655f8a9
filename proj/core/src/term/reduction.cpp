#include "coc/reduction.hpp"

#include <algorithm>

#include "coc/errors.hpp"

namespace coc {

namespace {

class Reducer {
 public:
  Reducer(const Context& ctx, std::size_t fuel) : ctx_(ctx), fuel_(fuel) {}

  Term whnf(Term t) {
    for (;;) {
      Spine s = spine(t);
      if (s.head.is_lam() && !s.args.empty()) {
        tick();
        Term reduced = instantiate(s.head.body(), s.args.front());
        s.args.erase(s.args.begin());
        t = Term::app(std::move(reduced), s.args);
        continue;
      }
      if (s.head.is_free()) {
        if (const Term* body = ctx_.definition_of(s.head.name())) {
          tick();
          t = Term::app(*body, s.args);
          continue;
        }
      }
      return t;
    }
  }

  Term normalize(const Term& input) {
    Term t = whnf(input);
    switch (t.kind()) {
      case Term::Kind::Lam:
        return Term::lam(t.name(), normalize(t.domain()), normalize(t.body()));
      case Term::Kind::Prod:
        return Term::prod(t.name(), normalize(t.domain()), normalize(t.body()));
      case Term::Kind::App: {
        Spine s = spine(t);
        for (auto& a : s.args) a = normalize(a);
        return Term::app(s.head, s.args);
      }
      default:
        return t;
    }
  }

 private:
  void tick() {
    if (fuel_ == 0) throw FuelExhausted("reduction fuel exhausted");
    --fuel_;
  }

  const Context& ctx_;
  std::size_t fuel_;
};

int order_of_normal(const Term& t) {
  if (!t.is_prod()) return 1;
  return std::max(order_of_normal(t.domain()) + 1, order_of_normal(t.body()));
}

}  // namespace

Term whnf(const Term& t, const Context& ctx, std::size_t fuel) { return Reducer(ctx, fuel).whnf(t); }

Term normalize(const Term& t, const Context& ctx, std::size_t fuel) {
  return Reducer(ctx, fuel).normalize(t);
}

Term beta_normalize(const Term& t, std::size_t fuel) {
  static const Context empty;
  return Reducer(empty, fuel).normalize(t);
}

bool conv(const Term& a, const Term& b, const Context& ctx) {
  if (a == b) return true;
  return normalize(a, ctx) == normalize(b, ctx);
}

int order(const Term& type, const Context& ctx) { return order_of_normal(normalize(type, ctx)); }

bool is_atomic(const Term& type, const Context& ctx) { return !whnf(type, ctx).is_prod(); }

}  // namespace coc
