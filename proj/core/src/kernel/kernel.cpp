#include "coc/kernel.hpp"

#include <string>
#include <vector>

#include "coc/errors.hpp"
#include "coc/reduction.hpp"
#include "coc/syntax.hpp"

namespace coc {

namespace {

class Checker {
 public:
  Checker(const Context& ctx, const KernelOptions& options) : ctx_(ctx), options_(options) {}

  Term infer(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Sort:
        if (t.sort_value() == Sort::Type) throw TypeError("Type has no type");
        return Term::type();
      case Term::Kind::Bound: {
        if (t.index() >= locals_.size()) throw TypeError("dangling bound variable");
        return shift(locals_[locals_.size() - 1 - t.index()], t.index() + 1);
      }
      case Term::Kind::Free: {
        auto type = ctx_.type_of(t.name());
        if (!type) throw TypeError("unbound variable " + t.name());
        return *type;
      }
      case Term::Kind::App: {
        Term fn_type = whnf(infer(t.fn()), ctx_);
        if (!fn_type.is_prod())
          throw TypeError("non-product applied: " + show(t.fn()) + " has type " + show_type(fn_type));
        Term arg_type = infer(t.arg());
        if (!conv(fn_type.domain(), arg_type, ctx_))
          throw TypeError("domain mismatch in " + show(t) + ": expected " + show_type(fn_type.domain()) +
                          ", got " + show_type(arg_type));
        return instantiate(fn_type.body(), t.arg());
      }
      case Term::Kind::Lam: {
        sort_of(t.domain());
        locals_.push_back(t.domain());
        Term body_type = infer(t.body());
        locals_.pop_back();
        if (body_type.is_sort() && body_type.sort_value() == Sort::Type)
          throw TypeError("abstraction over a type family returning a sort is not typable: " + show(t));
        return Term::prod(t.name(), t.domain(), body_type);
      }
      case Term::Kind::Prod: {
        sort_of(t.domain());
        locals_.push_back(t.domain());
        Sort s = sort_of(t.body());
        locals_.pop_back();
        return Term::sort(s);
      }
    }
    throw InternalError("unknown term kind");
  }

  Sort sort_of(const Term& type) {
    Term s = whnf(infer(type), ctx_);
    if (!s.is_sort()) throw TypeError("not a type: " + show(type) + " has type " + show_type(s));
    return s.sort_value();
  }

  std::string show_type(const Term& type) const {
    // Types mentioning local binders are printed as-is.
    std::string normal = type.locally_closed() ? print_term(normalize(type, ctx_)) : print_term(type);
    if (options_.raw_types && type.locally_closed()) normal += " (as written: " + print_term(type) + ")";
    return normal;
  }

  std::string show(const Term& t) const { return t.locally_closed() ? print_term(t) : debug_string(t); }

 private:
  const Context& ctx_;
  const KernelOptions& options_;
  std::vector<Term> locals_;
};

void require_plain(const Context& ctx) {
  if (!ctx.is_plain()) throw TypeError("the kernel only accepts contexts without existentials or equations");
}

}  // namespace

Term infer_type(const Context& ctx, const Term& t, const KernelOptions& options) {
  require_plain(ctx);
  return Checker(ctx, options).infer(t);
}

TypingReport typing_report(const Context& ctx, const Term& t, const KernelOptions& options) {
  return TypingReport{t, infer_type(ctx, t, options), ctx};
}

void check_type(const Context& ctx, const Term& t, const Term& type, const KernelOptions& options) {
  Term inferred = infer_type(ctx, t, options);
  if (!conv(inferred, type, ctx)) {
    Checker printer(ctx, options);
    throw TypeError("type mismatch for " + print_term(t) + ": expected " + printer.show_type(type) + ", got " +
                    printer.show_type(inferred));
  }
}

void check_is_type(const Context& ctx, const Term& type, const KernelOptions& options) {
  if (type.is_sort() && type.sort_value() == Sort::Type) return;
  require_plain(ctx);
  Checker(ctx, options).sort_of(type);
}

void check_context(const Context& ctx, const KernelOptions& options) {
  require_plain(ctx);
  Context prefix;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const ContextEntry& e = ctx.entries()[i];
    try {
      if (prefix.contains(entry_name(e))) throw TypeError("name " + entry_name(e) + " declared twice");
      if (auto u = std::get_if<Universal>(&e)) {
        check_is_type(prefix, u->type, options);
      } else if (auto d = std::get_if<Definition>(&e)) {
        check_is_type(prefix, d->type, options);
        check_type(prefix, d->body, d->type, options);
      }
    } catch (const TypeError& err) {
      throw TypeError("context entry " + std::to_string(i) + " (" + entry_name(e) + "): " + err.what());
    }
    prefix.push_back(e);
  }
}

}  // namespace coc
