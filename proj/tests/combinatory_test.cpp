#include <gtest/gtest.h>

#include "goi/combinatory.hpp"
#include "goi/generate.hpp"

using namespace goi;

namespace {

CLTerm C(const char* s) { return parse_cl(s); }
CLTerm V(const char* x) { return CLTerm::var(x); }

// Behavioural check of a translation: applied to fresh variables it reduces
// to the body of the source term with those variables plugged in.
void expect_behaves(const char* lambda, const std::vector<std::string>& args, const char* result) {
  CLTerm t = to_cl(parse_lambda(lambda));
  ASSERT_TRUE(is_closed(t)) << lambda;
  for (const auto& a : args) t = CLTerm::app(t, CLTerm::var(a));
  EXPECT_EQ(cl_normalize(t), C(result)) << lambda;
}

}  // namespace

TEST(Combinatory, ParseAndPrint) {
  EXPECT_EQ(C("B I I x"), CLTerm::app(CLTerm::app(CLTerm::app(CLTerm::B(), CLTerm::I()), CLTerm::I()), V("x")));
  EXPECT_EQ(to_string(C("C (B B I) I")), "C (B B I) I");
  EXPECT_EQ(to_string(C("((K a) b)")), "K a b");
  EXPECT_THROW(C("K ("), ParseError);
}

TEST(Combinatory, BracketAbstractionClauses) {
  EXPECT_EQ(abstract("x", V("x")), CLTerm::I());
  EXPECT_EQ(abstract("x", V("y")), C("K y"));
  EXPECT_EQ(abstract("x", C("x y")), C("C I y"));
  EXPECT_EQ(cl_normalize(CLTerm::app(C("C I y"), V("z"))), C("z y"));
}

TEST(Combinatory, TranslationsBehave) {
  EXPECT_EQ(to_cl(parse_lambda("\\x. x")), CLTerm::I());
  EXPECT_EQ(to_cl(parse_lambda("\\x.\\y. x y")), C("C (B B I) I"));
  expect_behaves("\\x.\\y. x y", {"a", "b"}, "a b");
  expect_behaves("\\x.\\y. x", {"a", "b"}, "a");
  expect_behaves("\\x.\\y.\\z. x (y z)", {"a", "b", "c"}, "a (b c)");
  expect_behaves("\\x.\\y.\\z. x z y", {"a", "b", "c"}, "a c b");
  expect_behaves("\\x.\\y.\\z. (\\w. x) (y z)", {"a", "b", "c"}, "a");
}

TEST(Combinatory, TranslationOfKSatisfiesKLaw) {
  const CLTerm k = to_cl(parse_lambda("\\x.\\y. x"));
  EXPECT_EQ(cl_normalize(CLTerm::app(CLTerm::app(k, V("a")), V("b"))), V("a"));
}

TEST(Combinatory, ToLambda) {
  EXPECT_EQ(to_lambda(CLTerm::I()), parse_lambda("\\x. x"));
  EXPECT_EQ(to_lambda(CLTerm::K()), parse_lambda("\\x.\\y. x"));
  EXPECT_EQ(to_lambda(C("B I")), parse_lambda("(\\x.\\y.\\z. x (y z)) (\\x. x)"));
  EXPECT_EQ(to_lambda(C("x y")), parse_lambda("x y"));
}

TEST(Combinatory, WeakReduction) {
  EXPECT_EQ(cl_normalize(C("B I I x")), V("x"));
  EXPECT_EQ(cl_normalize(C("K a b")), V("a"));
  EXPECT_EQ(cl_normalize(C("(C (B B I) I) a b")), C("a b"));
  EXPECT_EQ(cl_normalize(C("C K a b")), V("b"));
  EXPECT_EQ(cl_normalize(C("x (I y)")), C("x y"));
  EXPECT_EQ(cl_normalize(C("B x y")), C("B x y"));
}

TEST(Combinatory, AbstractionOracleOnRandomTerms) {
  Generator g(11);
  for (int i = 0; i < 200; ++i) {
    const CLTerm m = g.cl_term(5, {"x", "y", "z"}, {"x"});
    const CLTerm n = g.cl_term(3, {"y"});
    EXPECT_EQ(cl_normalize(CLTerm::app(abstract("x", m), n)), cl_normalize(substitute(m, "x", n))) << to_string(m);
    EXPECT_EQ(occurrence_count("x", abstract("x", m)), 0u);
  }
}

TEST(Combinatory, TranslationRoundTripReducesAlike) {
  Generator g(12);
  for (int i = 0; i < 200; ++i) {
    const LambdaTerm m = g.affine_term(6);
    const CLTerm t = to_cl(m);
    EXPECT_TRUE(is_closed(t));
    EXPECT_TRUE(alpha_eq(normalize(to_lambda(t)), normalize(m))) << to_string(m);
  }
}
