#include <gtest/gtest.h>

#include "coc/syntax.hpp"
#include "coc/term.hpp"

using namespace coc;

namespace {

Term v(const char* n) { return Term::free(n); }

TEST(Term, AlphaEquivalentTermsAreEqual) {
  EXPECT_EQ(parse_term("[x:Prop]x"), parse_term("[y:Prop]y"));
  EXPECT_EQ(parse_term("(x:Prop)(y:x)x").hash(), parse_term("(a:Prop)(b:a)a").hash());
  EXPECT_NE(parse_term("[x:Prop][y:Prop]x"), parse_term("[x:Prop][y:Prop]y"));
}

TEST(Term, LooseBoundTracksOpenIndices) {
  EXPECT_EQ(Term::bound(2).loose_bound(), 3u);
  EXPECT_TRUE(Term::lam("x", Term::prop(), Term::bound(0)).locally_closed());
  EXPECT_EQ(Term::lam("x", Term::prop(), Term::bound(1)).loose_bound(), 1u);
}

TEST(Term, InstantiateShiftsTheValueUnderBinders) {
  // body = [y:Prop](#1 y) ; instantiating #0 (outer) by a term with a loose index.
  Term body = Term::lam("y", Term::prop(), Term::app(Term::bound(1), Term::bound(0)));
  Term out = instantiate(body, Term::bound(0));
  EXPECT_EQ(out, Term::lam("y", Term::prop(), Term::app(Term::bound(1), Term::bound(0))));
  EXPECT_EQ(instantiate(body, v("f")), Term::lam("y", Term::prop(), Term::app(v("f"), Term::bound(0))));
}

TEST(Term, AbstractInvertsInstantiate) {
  Term t = parse_term("(f x [y:A](g x y))");
  Term body = abstract(t, "x");
  EXPECT_FALSE(occurs_free(body, "x"));
  EXPECT_EQ(instantiate(body, v("x")), t);
}

TEST(Term, SubstIsCaptureAvoiding) {
  // Replacing y by x under a binder named x must not capture.
  Term t = parse_term("[x:A](f x y)");
  Term out = subst(t, "y", v("x"));
  EXPECT_EQ(out, Term::lam("x", v("A"), Term::app(Term::app(v("f"), Term::bound(0)), v("x"))));
}

TEST(Term, FreeNames) {
  auto names = free_names(parse_term("(x:A)(P x y)"));
  EXPECT_EQ(names, (std::set<std::string>{"A", "P", "y"}));
}

TEST(Term, MakePiClosesOverNames) {
  Term t = make_pi({{"a#s1", v("A")}, {"b#s2", Term::app(v("P"), v("a#s1"))}}, v("a#s1"));
  EXPECT_EQ(t, parse_term("(a:A)(b:(P a))a"));
  EXPECT_EQ(t.name(), "a");
  EXPECT_EQ(make_lambda({{"x", v("A")}}, v("x")), parse_term("[x:A]x"));
}

TEST(Term, ArrowDoesNotBind) {
  Term t = make_arrow(v("A"), v("B"));
  EXPECT_FALSE(binds_loose_zero(t.body()));
  EXPECT_EQ(t, parse_term("A -> B"));
}

TEST(Term, SpineFlattensApplications) {
  Spine s = spine(parse_term("(f a b c)"));
  EXPECT_EQ(s.head, v("f"));
  ASSERT_EQ(s.args.size(), 3u);
  EXPECT_EQ(s.args[2], v("c"));
}

TEST(Term, NameSupplyNeverCollidesWithSourceNames) {
  NameSupply names("t");
  std::string a = names.fresh("x"), b = names.fresh("x#s9");
  EXPECT_NE(a, b);
  EXPECT_NE(a.find('#'), std::string::npos);
  EXPECT_EQ(display_name(b), "x");
}

TEST(Term, TermLessIsAStrictOrderConsistentWithEquality) {
  Term a = parse_term("(f a)"), b = parse_term("(f b)");
  EXPECT_TRUE(term_less(a, b) != term_less(b, a));
  EXPECT_FALSE(term_less(a, parse_term("(f a)")));
}

}  // namespace
