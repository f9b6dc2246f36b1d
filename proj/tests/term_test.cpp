#include <gtest/gtest.h>

#include "rgoi/parse.hpp"
#include "rgoi/term_sum.hpp"
#include "rgoi/typecheck.hpp"

namespace rgoi {
namespace {

const char* kI = "\\x:*. x";
const char* kT = "\\f:*->*. f [f [*]]";  // λf. f₁[f₂[⋆]]

SimpleTerm P(const std::string& s) { return parse_term(s); }
std::string key(const std::string& s) { return canonical_key(P(s)); }

TEST(Parse, Atoms) {
  EXPECT_TRUE(P("*").is_star());
  EXPECT_TRUE(P("⋆").is_star());

  SimpleTerm id = P("\\x:*. x");
  ASSERT_TRUE(id.is_lambda());
  EXPECT_EQ(id.name(), "x");
  EXPECT_TRUE(id.annotation().is_ground());
  EXPECT_TRUE(id.body().is_var());
  EXPECT_EQ(id.body().name(), "x");

  SimpleTerm redex = P("(\\x:*. x) [*]");
  ASSERT_TRUE(redex.is_redex());
  ASSERT_EQ(redex.argument().size(), 1u);
  EXPECT_TRUE(redex.argument()[0].is_star());
}

TEST(Parse, UnicodeAndEmptyBag) {
  EXPECT_EQ(key("λx:⋆ → ⋆. x 1"), key("\\x:*->*. x 1"));
  SimpleTerm t = P("(\\x:*. *) 1");
  ASSERT_TRUE(t.is_redex());
  EXPECT_TRUE(t.argument().empty());
}

TEST(Parse, ArrowIsRightAssociative) {
  Type t = parse_type("* -> * -> *");
  EXPECT_TRUE(t.argument().is_ground());
  EXPECT_TRUE(t.result().is_arrow());
  Type u = parse_type("(* -> *) -> *");
  EXPECT_TRUE(u.argument().is_arrow());
  EXPECT_EQ(u.str({true}), "(* -> *) -> *");
}

TEST(Parse, ApplicationIsLeftAssociative) {
  SimpleTerm t = P("f [*] [*, *]");
  ASSERT_TRUE(t.is_app());
  EXPECT_EQ(t.argument().size(), 2u);
  EXPECT_TRUE(t.function().is_app());
}

TEST(Parse, BindersAreFreshened) {
  SimpleTerm t = P("(\\x:*. x) [(\\x:*. x) [x]]");
  // the free x stays, both binders are renamed apart
  auto fv = free_variables(t);
  ASSERT_EQ(fv.size(), 1u);
  EXPECT_EQ(fv[0], "x");
  EXPECT_NE(t.function().name(), "x");
  EXPECT_NE(t.function().name(), t.argument()[0].function().name());
  // shadowing is resolved, not rejected
  SimpleTerm s = P("\\x:*. \\x:*. x");
  EXPECT_NE(s.name(), s.body().name());
  EXPECT_EQ(s.body().body().name(), s.body().name());
}

TEST(Parse, ErrorsCarryLineAndColumn) {
  try {
    P("\\x:*.\n  x ]");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 5);
  }
  EXPECT_THROW(P("\\x. x"), ParseError);  // annotations are mandatory
  EXPECT_THROW(P("f []"), ParseError);
  EXPECT_THROW(P("f [*"), ParseError);
}

TEST(Parse, TopLevelSums) {
  TermSum s = TermSum::from_parsed(parse_term_sum("2.* + * + (\\x:*. x) [*]"));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(count_addends(s), 4u);
  EXPECT_EQ(to_string(s, {true}), "3.* + (\\x:*. x) [*]");
  EXPECT_EQ(TermSum::from_parsed(parse_term_sum(to_string(s, {true}))), s);
  EXPECT_EQ(TermSum::from_parsed(parse_term_sum(to_string(s))), s);
}

TEST(Typecheck, Basics) {
  EXPECT_EQ(typecheck(P(kI)), Type::arrow(Type::ground(), Type::ground()));
  EXPECT_EQ(typecheck(P("*")), Type::ground());
  // the same variable used twice with one annotation is fine
  EXPECT_EQ(typecheck(P(kT)), Type::arrow(Type::arrow(Type::ground(), Type::ground()), Type::ground()));
  EXPECT_EQ(typecheck(P("(\\x:*. *) 1")), Type::ground());
  // an empty bag takes the function's argument type
  EXPECT_EQ(typecheck(P("(\\f:*->*. *) 1")), Type::ground());
}

TEST(Typecheck, SelfApplicationIsRejected) {
  try {
    typecheck(P("\\x:*->*. x [x]"));
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_EQ(e.kind(), TypeErrorKind::TypeMismatch);
  }
  try {
    typecheck(P("\\x:*. x [x]"));
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_EQ(e.kind(), TypeErrorKind::NotAFunction);
  }
  // no small annotation makes x both the function and its own argument
  for (const char* ty : {"*", "* -> *", "(* -> *) -> *", "* -> * -> *", "((* -> *) -> *) -> *"}) {
    EXPECT_THROW(typecheck(P(std::string("\\x:") + ty + ". x [x]")), TypeError) << ty;
  }
}

TEST(Typecheck, Unbound) {
  try {
    typecheck(P("y [*]"));
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_EQ(e.kind(), TypeErrorKind::UnboundVariable);
  }
  EXPECT_EQ(typecheck(P("y [*]"), {{"y", Type::arrow(Type::ground(), Type::ground())}}), Type::ground());
}

TEST(Canonical, AlphaAndBagOrder) {
  EXPECT_EQ(key("\\x:*. x"), key("\\y:*. y"));
  EXPECT_NE(key("\\x:*. x"), key("\\x:*->*. x"));
  EXPECT_EQ(key("f [a, b]"), key("f [b, a]"));
  EXPECT_NE(key("f [a, b]"), key("f [a, a]"));
  // bag union is associative and commutative with 1 as unit: ([x]·1)·[y] = [x,y]
  EXPECT_EQ(key("f [y, x]"), key("f [x, y]"));
  EXPECT_NE(key("f [x] [y]"), key("f [x, y]"));
}

TEST(Reduce, Example1FirstStep) {
  // with I = I' the two reducts coincide up to alpha
  TermSum s(P(std::string("(") + kT + ") [" + kI + ", \\y:*. y]"));
  TermSum r = reduce_step(s, {0, {}});
  EXPECT_EQ(count_addends(r), 2u);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.keyed()[0].first, key("(\\x:*. x) [(\\y:*. y) [*]]"));

  // with distinguishable arguments both substitutions show up
  const std::string j = "\\z:*. (\\w:*. w) [z]";
  TermSum s2(P(std::string("(") + kT + ") [" + kI + ", " + j + "]"));
  TermSum r2 = reduce_step(s2, {0, {}});
  TermSum expected;
  expected.add(P(std::string("(") + kI + ") [(" + j + ") [*]]"));
  expected.add(P(std::string("(") + j + ") [(" + kI + ") [*]]"));
  EXPECT_EQ(r2, expected);
}

TEST(Reduce, Annihilation) {
  TermSum s(P(std::string("(") + kT + ") [" + kI + "]"));
  EXPECT_TRUE(reduce_step(s, {0, {}}).is_zero());
  EXPECT_EQ(to_string(normalize_term(s)), "0");
}

TEST(Reduce, EmptyBagOnConstantFunction) {
  EXPECT_EQ(normalize_term(TermSum(P("(\\x:*. *) 1"))), TermSum(SimpleTerm::star()));
  EXPECT_TRUE(normalize_term(TermSum(P("(\\x:*. *) [*]"))).is_zero());
}

TEST(Reduce, InvalidPosition) {
  TermSum s(P("(\\x:*. x) [*]"));
  EXPECT_THROW(reduce_step(s, {0, {1}}), InvalidPosition);
  EXPECT_THROW(reduce_step(s, {0, {0}}), InvalidPosition);  // a lambda, not a redex
  EXPECT_THROW(reduce_step(s, {3, {}}), InvalidPosition);
}

TEST(Reduce, CaptureAvoidance) {
  // substituting the free y under the inner binder y must rename the binder
  SimpleTerm t = SimpleTerm::app(
      SimpleTerm::lambda("x", Type::ground(),
                         SimpleTerm::app(SimpleTerm::lambda("y", Type::ground(), SimpleTerm::var("x")), {SimpleTerm::var("y")})),
      {SimpleTerm::var("y")});
  TermSum r = reduce_term_at(t, {});
  ASSERT_EQ(r.size(), 1u);
  SimpleTerm out = r.addends()[0].term;
  EXPECT_EQ(canonical_key(out), canonical_key(SimpleTerm::app(
                                    SimpleTerm::lambda("z", Type::ground(), SimpleTerm::var("y")), {SimpleTerm::var("y")})));
}

TEST(Normalize, Example1) {
  TermSum s = TermSum::from_parsed(parse_term_sum("(\\x:*. x) [(\\y:*. y) [*]] + (\\y:*. y) [(\\x:*. x) [*]]"));
  TermSum nf = normalize_term(s);
  EXPECT_EQ(to_string(nf), "2⋆");
  EXPECT_EQ(to_string(nf, {true}), "2.*");
  EXPECT_EQ(count_addends(nf), 2u);
  EXPECT_EQ(normalize_term(TermSum(SimpleTerm::star())), TermSum(SimpleTerm::star()));
  EXPECT_EQ(count_addends(TermSum()), 0u);
}

TEST(Normalize, ThreeOccurrencesThreeIdentities) {
  // 3! substitutions, each I[I[I[⋆]]] ↠ ⋆
  TermSum s(P("(\\f:*->*. f [f [f [*]]]) [\\a:*. a, \\b:*. b, \\c:*. c]"));
  EXPECT_EQ(to_string(normalize_term(s)), "6⋆");
  TermSum s2(P("(\\f:*->*. f [f [f [*]]]) [\\a:*. a, \\b:*. (\\d:*. d) [b], \\c:*. c]"));
  EXPECT_EQ(to_string(normalize_term(s2)), "6⋆");
}

TEST(Normalize, CoefficientLaw) {
  SimpleTerm t = P("(\\f:*->*. f [f [*]]) [\\a:*. a, \\b:*. b]");
  TermSum one = normalize_term(TermSum(t));
  for (std::uint64_t k : {1u, 2u, 3u}) {
    TermSum scaled;
    scaled.add(one, k);
    EXPECT_EQ(normalize_term(TermSum(t, k)), scaled);
  }
}

TEST(Normalize, ArityLaw) {
  for (const char* src : {"(\\x:*. *) [*]", "(\\x:*. x) 1", "(\\x:*. x) [*, *]",
                          "(\\f:*->*. f [f [*]]) [\\a:*. a, \\b:*. b, \\c:*. c]"}) {
    EXPECT_TRUE(reduce_term_at(P(src), {}).is_zero()) << src;
  }
}

}  // namespace
}  // namespace rgoi
