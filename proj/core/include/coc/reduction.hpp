#pragma once

#include <cstddef>

#include "coc/context.hpp"
#include "coc/term.hpp"

namespace coc {

inline constexpr std::size_t kDefaultReductionFuel = 1'000'000;

// Beta/delta reduction. Delta unfolds the definitions recorded in `ctx`;
// pass an empty context for beta only. Running out of fuel throws
// FuelExhausted: well-typed terms always normalize, so it signals a bug.
Term whnf(const Term& t, const Context& ctx, std::size_t fuel = kDefaultReductionFuel);
Term normalize(const Term& t, const Context& ctx, std::size_t fuel = kDefaultReductionFuel);
Term beta_normalize(const Term& t, std::size_t fuel = kDefaultReductionFuel);

// Equal beta/delta normal forms, up to alpha.
bool conv(const Term& a, const Term& b, const Context& ctx);

// 1 for atomic types, max(order(A) + 1, order(B)) for (x:A)B, measured on
// the normal form.
int order(const Term& type, const Context& ctx);

// Normal form is not a product.
bool is_atomic(const Term& type, const Context& ctx);

}  // namespace coc
