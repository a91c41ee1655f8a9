#pragma once

// The trusted type checker. It knows terms, contexts and reduction only;
// it must never depend on the search or script layers.

#include "coc/context.hpp"
#include "coc/term.hpp"

namespace coc {

struct KernelOptions {
  // Also show the types as written (before normalization) in errors.
  bool raw_types = false;
};

struct TypingReport {
  Term subject;
  Term inferred_type;
  Context context;
};

// Infers T with ctx |- t : T. The context must be plain (no existentials,
// no equations). Throws TypeError.
Term infer_type(const Context& ctx, const Term& t, const KernelOptions& options = {});

TypingReport typing_report(const Context& ctx, const Term& t, const KernelOptions& options = {});

// Succeeds iff the inferred type is convertible to `type`.
void check_type(const Context& ctx, const Term& t, const Term& type, const KernelOptions& options = {});

// `type` is Type or is typed by a sort.
void check_is_type(const Context& ctx, const Term& type, const KernelOptions& options = {});

// Every declaration is a type in its prefix and every definition body checks
// against its declared type. Errors name the offending entry position.
void check_context(const Context& ctx, const KernelOptions& options = {});

}  // namespace coc
