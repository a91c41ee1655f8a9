#include <gtest/gtest.h>

#include "coc/errors.hpp"
#include "coc/kernel.hpp"
#include "coc/reduction.hpp"
#include "coc/syntax.hpp"
#include "corpus.hpp"

using namespace coc;

namespace {

Term infer(const std::string& ctx, const std::string& t) {
  return infer_type(coctest::parse_context(ctx), parse_term(t));
}

TEST(Kernel, Sorts) {
  EXPECT_EQ(infer("", "Prop"), Term::type());
  EXPECT_THROW(infer("", "Type"), TypeError);
}

TEST(Kernel, ProductsTakeTheCodomainSort) {
  EXPECT_EQ(infer("A : Prop", "(x:A)A"), Term::prop());
  EXPECT_EQ(infer("", "(A:Prop)A"), Term::prop());
  EXPECT_EQ(infer("A : Prop", "(x:A)Prop"), Term::type());
  EXPECT_EQ(infer("", "Prop -> Prop"), Term::type());
}

TEST(Kernel, Abstractions) {
  EXPECT_EQ(infer("", "[A:Prop][x:A]x"), parse_term("(A:Prop)(x:A)A"));
}

TEST(Kernel, LambdaReturningATypeIsRejected) {
  // [x:A]Prop has type (x:A)Type, which is not well formed in pure CoC.
  EXPECT_THROW(infer("A : Prop", "[x:A]Prop"), TypeError);
}

TEST(Kernel, ApplicationChecksDomain) {
  EXPECT_EQ(infer("A : Prop; B : Prop; f : (x:A)B; a : A", "(f a)"), parse_term("B"));
  EXPECT_THROW(infer("A : Prop; B : Prop; f : (x:A)B; b : B", "(f b)"), TypeError);
  EXPECT_THROW(infer("A : Prop; a : A", "(a a)"), TypeError);
}

TEST(Kernel, DependentApplicationSubstitutes) {
  EXPECT_EQ(infer("A : Prop; P : (x:A)Prop; h : (x:A)(P x); a : A", "(h a)"), parse_term("(P a)"));
}

TEST(Kernel, ConversionUsesDefinitions) {
  Context ctx = coctest::parse_context("A : Prop; id := [X:Prop]X; a : A");
  EXPECT_NO_THROW(check_type(ctx, parse_term("a"), parse_term("(id A)")));
  EXPECT_THROW(check_type(ctx, parse_term("a"), parse_term("(id (id Prop))")), TypeError);
}

TEST(Kernel, UnboundVariable) { EXPECT_THROW(infer("", "x"), TypeError); }

TEST(Kernel, RejectsContextsWithHoles) {
  Context ctx;
  ctx.push_back(Existential{"h", Term::prop()});
  EXPECT_THROW(infer_type(ctx, Term::free("h")), std::exception);
}

TEST(Kernel, CheckIsType) {
  Context ctx = coctest::parse_context("A : Prop; a : A");
  EXPECT_NO_THROW(check_is_type(ctx, parse_term("A")));
  EXPECT_NO_THROW(check_is_type(ctx, parse_term("Type")));
  EXPECT_NO_THROW(check_is_type(ctx, parse_term("(x:A)Prop")));
  EXPECT_THROW(check_is_type(ctx, parse_term("a")), TypeError);
}

TEST(Kernel, CheckContextNamesTheEntry) {
  Context ctx;
  ctx.push_back(Universal{"A", Term::prop()});
  ctx.push_back(Universal{"a", Term::free("B")});
  try {
    check_context(ctx);
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_NE(std::string(e.what()).find("a"), std::string::npos);
  }
}

TEST(Kernel, MismatchMessagesShowNormalizedTypes) {
  Context ctx = coctest::parse_context("A : Prop; B : Prop; id := [X:Prop]X; a : A");
  try {
    check_type(ctx, parse_term("a"), parse_term("(id B)"));
    FAIL();
  } catch (const TypeError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("B"), std::string::npos) << msg;
  }
}

}  // namespace
