#include <gtest/gtest.h>

#include "goi/generate.hpp"
#include "goi/inference.hpp"

using namespace goi;

namespace {

Type T(const char* s) { return parse_type(s); }
LambdaTerm L(const char* s) { return parse_lambda(s); }

std::string pt(const char* s) { return to_string(principal_type(L(s)).type); }
std::string pt_cl(const char* s) { return to_string(principal_type_cl(parse_cl(s)).type); }
std::string canon(const char* s) { return to_string(canonical(T(s))); }

}  // namespace

TEST(Inference, ClosedTerms) {
  EXPECT_EQ(pt("\\x. x"), "t0 -> t0");
  EXPECT_EQ(pt("\\x.\\y.\\z. (\\w. x) (y z)"), "t0 -> (t1 -> t2) -> t1 -> t0");
  EXPECT_EQ(pt("\\x.\\y. x y"), "(t0 -> t1) -> t0 -> t1");
  EXPECT_EQ(pt("\\x.\\y. x"), "t0 -> t1 -> t0");
}

TEST(Inference, CombinatorTypes) {
  EXPECT_EQ(to_string(combinator_principal_type(Combinator::I)), canon("a -> a"));
  EXPECT_EQ(to_string(combinator_principal_type(Combinator::K)), canon("a -> b -> a"));
  EXPECT_EQ(to_string(combinator_principal_type(Combinator::C)), canon("(a -> b -> c) -> b -> a -> c"));
  EXPECT_EQ(to_string(combinator_principal_type(Combinator::B)), canon("(a -> b) -> (c -> a) -> c -> b"));
  for (auto k : {Combinator::B, Combinator::C, Combinator::I, Combinator::K}) {
    EXPECT_EQ(to_string(principal_type(combinator_lambda(k)).type), to_string(combinator_principal_type(k)));
  }
}

TEST(Inference, CombinatoryTerms) {
  EXPECT_EQ(pt_cl("I"), canon("a -> a"));
  EXPECT_EQ(pt_cl("C I"), canon("a -> (a -> b) -> b"));
  EXPECT_EQ(pt_cl("C I I"), canon("((a -> a) -> b) -> b"));
  EXPECT_EQ(pt_cl("C I I I"), canon("a -> a"));
}

TEST(Inference, OpenTermsPrintJudgements) {
  EXPECT_EQ(to_string(principal_type(L("x y"))), "x: t0 -> t1, y: t0 |- x y : t1");
  EXPECT_EQ(to_string(principal_type(L("\\x. x"))), "|- \\x. x : t0 -> t0");
  EXPECT_EQ(to_string(principal_type(L("\\z. y (x z)"))), "x: t0 -> t1, y: t1 -> t2 |- \\z. y (x z) : t0 -> t2");
}

TEST(Inference, RejectsNonAffine) {
  EXPECT_THROW(principal_type(L("\\x. x x")), PreconditionError);
  EXPECT_THROW(principal_type(L("x x")), PreconditionError);
}

TEST(Inference, InstanceAndRenaming) {
  const LambdaTerm id = L("\\x. x");
  const Judgement a{{}, id, T("a -> a")};
  const Judgement b{{}, id, T("(b -> b) -> b -> b")};
  EXPECT_TRUE(is_instance(a, b));
  EXPECT_FALSE(is_instance(b, a));
  const LambdaTerm k = L("\\x.\\y. x");
  EXPECT_TRUE(equal_up_to_renaming(Judgement{{}, k, T("a -> b -> a")}, Judgement{{}, k, T("c -> d -> c")}));
  EXPECT_EQ(to_string(canonical_rename(Judgement{{{"y", T("q")}, {"x", T("q -> p")}}, L("x y"), T("p")})),
            "x: t0 -> t1, y: t0 |- x y : t1");
}

TEST(Inference, CounterexampleIsStrictInstance) {
  const LambdaTerm m = L("\\x.\\y.\\z. (\\w. x) (y z)");
  const Judgement before = principal_type(m);
  const Judgement after = principal_type(normalize(m));
  const Judgement after_on_m{after.ctx, m, after.type};
  EXPECT_TRUE(is_instance(after_on_m, before));
  EXPECT_FALSE(equal_up_to_renaming(after_on_m, before));
}

TEST(Inference, SimpleDerivationsOfNormalForms) {
  EXPECT_TRUE(derives_simple({}, L("\\x. x"), T("(b -> b) -> b -> b")));
  EXPECT_FALSE(derives_simple({}, L("\\x. x"), T("a -> b")));
  EXPECT_TRUE(derives_simple({{"x", T("a -> b")}, {"y", T("a")}}, L("x y"), T("b")));
  EXPECT_FALSE(derives_simple({{"x", T("a -> b")}, {"y", T("b")}}, L("x y"), T("b")));
}

// Every simple typing of a normal form is an instance of the principal one.
TEST(Inference, PrincipalJudgementIsMostGeneral) {
  Generator g(21);
  for (int i = 0; i < 200; ++i) {
    const LambdaTerm m = normalize(g.affine_term(6));
    const Judgement j = principal_type(m);
    EXPECT_TRUE(derives_simple(j.ctx, j.subject, j.type)) << to_string(m);
    std::set<std::string> vars = vars_of(j.type);
    Substitution u;
    for (const auto& v : vars) u.bind(v, g.random_type(2, 2, "u"));
    const Judgement k = apply(u, j);
    EXPECT_TRUE(derives_simple(k.ctx, k.subject, k.type)) << to_string(m);
    EXPECT_TRUE(is_instance(j, k));
  }
}

TEST(Inference, TranslationPreservesPrincipalType) {
  Generator g(22);
  for (int i = 0; i < 200; ++i) {
    const LambdaTerm m = g.affine_term(6);
    EXPECT_EQ(to_string(principal_type(m).type), to_string(principal_type_cl(to_cl(m)).type)) << to_string(m);
  }
}

TEST(Inference, AlphaRenamedTermsShareTypes) {
  auto rename = [](auto& self, const LambdaTerm& m) -> LambdaTerm {
    if (m.is_var()) return m;
    if (m.is_app()) return LambdaTerm::app(self(self, m.fun()), self(self, m.arg()));
    const std::string y = m.name() + "'";
    return LambdaTerm::abs(y, self(self, substitute(m.body(), m.name(), LambdaTerm::var(y))));
  };
  Generator g(23);
  for (int i = 0; i < 100; ++i) {
    const LambdaTerm m = g.affine_term(6);
    const LambdaTerm n = rename(rename, m);
    ASSERT_TRUE(alpha_eq(m, n));
    EXPECT_EQ(to_string(principal_type(m).type), to_string(principal_type(n).type)) << to_string(m);
  }
}
