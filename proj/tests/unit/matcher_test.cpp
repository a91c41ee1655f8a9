#include <gtest/gtest.h>

#include "coc/matcher.hpp"
#include "coc/reduction.hpp"
#include "coc/syntax.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace coc;

namespace {

MatchProblem problem(const std::string& ctx, const std::vector<std::pair<std::string, std::string>>& exs,
                     const std::vector<std::pair<std::string, std::string>>& eqs) {
  MatchProblem p{coctest::parse_context(ctx), {}, {}};
  for (const auto& [name, type] : exs) {
    p.context.push_back(Existential{name, parse_term(type)});
    p.existentials.push_back(name);
  }
  for (const auto& [l, r] : eqs) p.equations.push_back({parse_term(l), parse_term(r)});
  return p;
}

std::set<std::string> bindings_of(const std::vector<MatchSolution>& sols, const std::string& var) {
  std::set<std::string> out;
  for (const auto& s : sols) {
    auto it = s.bindings.find(var);
    out.insert(it == s.bindings.end() ? "<free>" : print_term(it->second));
  }
  return out;
}

const char* kSig = "o : Prop; a : o; b : o; f : (x:o)(y:o)o; P : (x:o)Prop";

TEST(Matcher, FirstOrder) {
  auto sols = solve(problem(kSig, {{"X", "o"}}, {{"(f X b)", "(f a b)"}}));
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].bindings.at("X"), Term::free("a"));
}

TEST(Matcher, RigidClash) {
  EXPECT_TRUE(solve(problem(kSig, {{"X", "o"}}, {{"(f X b)", "(f a a)"}})).empty());
}

TEST(Matcher, ProjectionAndImitation) {
  // F a = (f a a): every occurrence of a is either projected or imitated.
  auto sols = solve(problem(kSig, {{"F", "(z:o)o"}}, {{"(F a)", "(f a a)"}}));
  EXPECT_EQ(bindings_of(sols, "F"),
            (std::set<std::string>{"[z:o](f z z)", "[z:o](f z a)", "[z:o](f a z)", "[z:o](f a a)"}));
}

TEST(Matcher, ProjectionComesFirst) {
  auto sols = solve(problem(kSig, {{"F", "(z:o)o"}}, {{"(F a)", "a"}}));
  ASSERT_EQ(sols.size(), 2u);
  EXPECT_EQ(sols[0].bindings.at("F"), parse_term("[z:o]z"));
  EXPECT_EQ(sols[1].bindings.at("F"), parse_term("[z:o]a"));
}

TEST(Matcher, PredicateAbstraction) {
  // The Leibniz instance: (Q y) = (P y) -> (P x).
  auto sols = solve(problem("A : Prop; x : A; y : A; P : (z:A)Prop", {{"Q", "(z:A)Prop"}},
                            {{"(Q y)", "(P y) -> (P x)"}}));
  auto qs = bindings_of(sols, "Q");
  EXPECT_TRUE(qs.count("[z:A](P z) -> (P x)"));
  EXPECT_TRUE(qs.count("[z:A](P y) -> (P x)"));
  EXPECT_EQ(qs.size(), 2u);
}

TEST(Matcher, BinderDecomposition) {
  auto sols = solve(problem(kSig, {{"X", "o"}}, {{"(u:o)(P (f u X))", "(v:o)(P (f v b))"}}));
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].bindings.at("X"), Term::free("b"));
}

TEST(Matcher, BoundVariablesCannotEscape) {
  // X would have to be the locally bound v.
  EXPECT_TRUE(solve(problem(kSig, {{"X", "o"}}, {{"(u:o)(P (f u X))", "(v:o)(P (f v v))"}})).empty());
}

TEST(Matcher, UnconstrainedExistentialsAreAbsent) {
  auto sols = solve(problem(kSig, {{"F", "(z:o)o"}, {"X", "o"}}, {{"(F X)", "b"}}));
  // F := [z]b leaves X free; F := [z]z forces X := b.
  ASSERT_EQ(sols.size(), 2u);
  EXPECT_EQ(sols[0].bindings.at("X"), Term::free("b"));
  EXPECT_EQ(sols[1].bindings.count("X"), 0u);
}

TEST(Matcher, DefinitionsAreUnfolded) {
  auto sols = solve(problem("o : Prop; a : o; g := [x:o]x", {{"X", "o"}}, {{"(g X)", "a"}}));
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].bindings.at("X"), Term::free("a"));
}

TEST(Matcher, SortEquation) {
  auto sols = solve(problem("A : Prop", {{"X", "Prop"}}, {{"X -> X", "A -> A"}}));
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].bindings.at("X"), Term::free("A"));
}

TEST(Matcher, ArgumentRestriction) {
  EXPECT_TRUE(is_argument_restricted(problem(kSig, {{"F", "(z:o)o"}}, {{"(F a)", "a"}})));
  // Order three.
  EXPECT_FALSE(is_argument_restricted(problem(kSig, {{"F", "((z:o)o)->o"}}, {{"(F [z:o]z)", "a"}})));
  // Existential on the right.
  EXPECT_FALSE(is_argument_restricted(problem(kSig, {{"X", "o"}}, {{"a", "X"}})));
  EXPECT_THROW(solve(problem(kSig, {{"X", "o"}}, {{"a", "X"}})), std::invalid_argument);
}

TEST(Matcher, MaxSolutionsCaps) {
  MatchOptions opts;
  opts.max_solutions = 2;
  EXPECT_EQ(solve(problem(kSig, {{"F", "(z:o)o"}}, {{"(F a)", "(f a a)"}}), opts).size(), 2u);
}

TEST(Matcher, TraceReportsEachNode) {
  std::vector<std::string> lines;
  MatchOptions opts;
  opts.trace = [&](const std::string& l) { lines.push_back(l); };
  solve(problem(kSig, {{"F", "(z:o)o"}}, {{"(F a)", "a"}}), opts);
  ASSERT_FALSE(lines.empty());
  EXPECT_NE(lines[0].find("F"), std::string::npos);
}

TEST(Matcher, StepRigidDecomposesApplications) {
  NameSupply names;
  Context ctx = coctest::parse_context(kSig);
  RigidStep s = step_rigid(parse_term("(f a b)"), parse_term("(f a a)"), ctx, names);
  EXPECT_FALSE(s.clash);
  EXPECT_EQ(s.equations.size(), 2u);
  EXPECT_TRUE(step_rigid(parse_term("a"), parse_term("b"), ctx, names).clash);
}

TEST(Matcher, StepFlexOffersProjectionThenImitation) {
  NameSupply names;
  Context ctx = coctest::parse_context(kSig);
  ctx.push_back(Existential{"F", parse_term("(z:o)o")});
  auto cands = step_flex("F", {Term::free("a")}, parse_term("(f a b)"), ctx, {}, names);
  ASSERT_EQ(cands.size(), 2u);
  EXPECT_EQ(cands[0].rule, FlexCandidate::Rule::Projection);
  EXPECT_EQ(cands[1].rule, FlexCandidate::Rule::Imitation);
  EXPECT_EQ(cands[1].fresh.size(), 2u);
}

TEST(Matcher, AgreesWithTheOracleOnASample) {
  for (const auto& p : coctest::oracle_problems(7, 40))
    EXPECT_EQ(coctest::expanded_matcher_solutions(p.problem), coctest::oracle_solutions(p.problem)) << p.description;
}

TEST(Oracle, EnumerationCountsSmallSignatures) {
  Context ctx = coctest::parse_context("o : Prop; a : o; g : (x:o)o");
  // depth 1: a; depth 2: (g a); depth 3: (g (g a)).
  EXPECT_EQ(coctest::enumerate_closed(ctx, parse_term("o"), 3).size(), 3u);
  // [z]: a, z, (g a), (g z), (g (g a)), (g (g z)).
  EXPECT_EQ(coctest::enumerate_closed(ctx, parse_term("(z:o)o"), 3).size(), 6u);
}

}  // namespace
