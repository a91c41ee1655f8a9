#include <gtest/gtest.h>

#include <random>

#include "coc/goal.hpp"
#include "coc/kernel.hpp"
#include "coc/reduction.hpp"
#include "coc/syntax.hpp"
#include "coc/synthesizer.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace coc;

namespace {

// Random locally closed terms over a few free names.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  Term term(int depth, std::uint32_t bound = 0) {
    std::size_t choice = pick(0, depth <= 1 ? 2 : 5);
    switch (choice) {
      case 0:
        return Term::free(std::string(1, static_cast<char>('a' + pick(0, 3))));
      case 1:
        if (bound > 0) return Term::bound(static_cast<std::uint32_t>(pick(0, bound - 1)));
        return Term::prop();
      case 2:
        return Term::prop();
      case 3:
        return Term::app(term(depth - 1, bound), term(depth - 1, bound));
      case 4:
        return Term::lam(std::string(1, static_cast<char>('x' + pick(0, 2))), term(depth - 1, bound),
                         term(depth - 1, bound + 1));
      default:
        return Term::prod(pick(0, 1) ? "_" : "y", term(depth - 1, bound), term(depth - 1, bound + 1));
    }
  }

 private:
  std::size_t pick(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }
  std::mt19937_64 rng_;
};

TEST(Property, PrintThenParseIsIdentity) {
  TermGen gen(11);
  for (int k = 0; k < 500; ++k) {
    Term t = gen.term(5);
    EXPECT_EQ(parse_term(print_term(t)), t) << print_term(t);
  }
}

TEST(Property, AbstractThenInstantiateIsIdentity) {
  TermGen gen(12);
  for (int k = 0; k < 500; ++k) {
    Term t = gen.term(5);
    EXPECT_EQ(instantiate(abstract(t, "a"), Term::free("a")), t);
    EXPECT_FALSE(occurs_free(abstract(t, "b"), "b"));
  }
}

TEST(Property, SubstOfAbsentNameIsIdentity) {
  TermGen gen(13);
  for (int k = 0; k < 300; ++k) {
    Term t = gen.term(5);
    EXPECT_EQ(subst(t, "zz", Term::free("a")), t);
  }
}

TEST(Property, RandomRequestsAreSoundAndRespectPremises) {
  auto requests = coctest::random_requests(2024, 150);
  std::mt19937_64 rng(5);
  for (auto& r : requests) {
    // Restrict to a random subset of the constants.
    std::vector<std::string> premises;
    for (const auto& c : r.context.constant_names())
      if (rng() % 2) premises.push_back(c);
    r.premises = premises;
    auto out = synthesize(r);
    ASSERT_NE(out.status, SynthesisOutcome::Status::InternalError) << out.reason;
    if (!out.found()) continue;
    EXPECT_NO_THROW(check_type(r.context, *out.proof, r.goal));
    std::set<std::string> allowed(premises.begin(), premises.end());
    for (const auto& n : free_names(normalize(r.goal, r.context))) allowed.insert(n);
    for (const auto& p : premises)
      for (const auto& n : free_names(normalize(*r.context.type_of(p), r.context))) allowed.insert(n);
    for (const auto& n : free_names(*out.proof))
      EXPECT_TRUE(allowed.count(n)) << n << " in " << print_term(*out.proof);
  }
}

TEST(Property, RandomRequestsAreWellFormed) {
  for (const auto& r : coctest::random_requests(99, 200)) {
    EXPECT_LE(r.context.size(), 8u);
    EXPECT_LE(coctest::type_depth(r.goal), 4);
    EXPECT_NO_THROW(check_context(r.context));
    EXPECT_NO_THROW(check_is_type(r.context, r.goal));
  }
}

TEST(Property, MatcherSolutionsSatisfyTheEquations) {
  for (const auto& p : coctest::oracle_problems(31, 150)) {
    for (const auto& s : solve(p.problem)) {
      for (const auto& eq : p.problem.equations) {
        Term lhs = eq.lhs;
        for (const auto& [name, value] : s.bindings) lhs = subst(lhs, name, value);
        // Unbound existentials may remain only where they do not matter, so
        // check after plugging in any well-typed value.
        for (const auto& name : coctest::occurring_existentials(p.problem))
          if (!s.bindings.count(name))
            lhs = subst(lhs, name, coctest::enumerate_closed(p.problem.context, *p.problem.context.type_of(name), 1)[0]);
        EXPECT_EQ(beta_normalize(lhs), beta_normalize(eq.rhs)) << p.description;
      }
    }
  }
}

TEST(Property, CurryingRoundTripsOnRandomTypes) {
  for (const auto& r : coctest::random_requests(7, 100)) {
    for (const auto& name : r.context.constant_names()) {
      Term t = *r.context.type_of(name);
      EXPECT_TRUE(conv(recompose(curry_type(t, r.context)), t, r.context)) << print_term(t);
    }
  }
}

TEST(Property, NormalizationIsIdempotentOnWellTypedTerms) {
  for (const auto& c : coctest::soundness_corpus()) {
    auto r = coctest::to_request(c);
    Term n = normalize(r.goal, r.context);
    EXPECT_EQ(normalize(n, r.context), n);
  }
}

}  // namespace
