#include <gtest/gtest.h>

#include "goi/properties.hpp"

using namespace goi;

namespace {

template <class T>
std::vector<T> samples_of(const GenConfig& cfg) {
  std::vector<T> out;
  for (const auto& s : generate(cfg)) out.push_back(std::get<T>(s));
  return out;
}

}  // namespace

TEST(Generate, AffineTermsAreClosedAndAffine) {
  for (const auto& m : samples_of<LambdaTerm>({1, 300, 6, GenMode::affine})) {
    EXPECT_TRUE(is_closed(m)) << to_string(m);
    EXPECT_TRUE(is_affine(m)) << to_string(m);
    EXPECT_LE(depth(m), 6u);
  }
}

TEST(Generate, LinearTermsAreLinear) {
  for (const auto& m : samples_of<LambdaTerm>({2, 300, 6, GenMode::linear})) {
    EXPECT_TRUE(is_closed(m)) << to_string(m);
    EXPECT_TRUE(is_linear(m)) << to_string(m);
    EXPECT_LE(depth(m), 6u);
  }
}

TEST(Generate, BinaryTypes) {
  for (const auto& t : samples_of<Type>({3, 300, 5, GenMode::binary_type})) {
    EXPECT_TRUE(is_binary(t)) << to_string(t);
    EXPECT_LE(type_depth(t), 5u);
  }
}

TEST(Generate, StrictlyBinaryPairs) {
  for (const auto& [s, t] : samples_of<std::pair<Type, Type>>({4, 300, 5, GenMode::strictly_binary_pair})) {
    EXPECT_TRUE(is_strictly_binary(s)) << to_string(s);
    EXPECT_TRUE(is_strictly_binary(t)) << to_string(t);
    for (const auto& v : vars_of(s)) EXPECT_FALSE(occurs_in(v, t));
  }
}

TEST(Generate, Deterministic) {
  for (auto mode : {GenMode::affine, GenMode::linear, GenMode::binary_type, GenMode::strictly_binary_pair}) {
    const GenConfig cfg{1, 50, 5, mode};
    EXPECT_EQ(generate(cfg), generate(cfg));
  }
  const auto a = samples_of<LambdaTerm>({1, 1, 2, GenMode::affine});
  const auto b = samples_of<LambdaTerm>({1, 1, 2, GenMode::affine});
  EXPECT_EQ(a, b);
  EXPECT_NE(generate({1, 20, 6, GenMode::affine}), generate({2, 20, 6, GenMode::affine}));
}

TEST(Generate, TermsAreNotTrivial) {
  std::size_t redexes = 0, big = 0;
  for (const auto& m : samples_of<LambdaTerm>({5, 200, 7, GenMode::affine})) {
    if (has_redex(m)) ++redexes;
    if (node_count(m) >= 10) ++big;
  }
  EXPECT_GT(redexes, 50u);
  EXPECT_GT(big, 50u);
}

TEST(Generate, NormalFormEnumeration) {
  const auto all = closed_affine_normal_forms(5);
  EXPECT_FALSE(all.empty());
  for (const auto& m : all) {
    EXPECT_TRUE(is_closed(m) && is_affine(m) && is_normal_form(m)) << to_string(m);
    EXPECT_LE(node_count(m), 5u);
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(alpha_eq(all[i], all[j]));
  // \x. x, then \x.\y. x and \x.\y. y, then the three three-binder projections.
  EXPECT_EQ(closed_affine_normal_forms(4).size(), 6u);
}

TEST(Properties, Names) {
  const auto names = property_names();
  for (const char* n : {"main-theorem", "abstraction", "toplevel-conversion", "linear-conversion", "bck-laws",
                        "unif-equivalence", "nf-determination", "resolution-lemma", "binary-judgements",
                        "translation-invariance", "affine-full-reduction"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  EXPECT_THROW(run_property("no-such-property", {}), PreconditionError);
}

TEST(Properties, SuitesPass) {
  for (const auto& name : property_names()) {
    if (name == "affine-full-reduction") continue;
    const GenConfig cfg{3, 60, name == "nf-determination" ? 7u : 5u, GenMode::affine};
    const CheckReport r = run_property(name, cfg);
    EXPECT_TRUE(r.passed()) << name << ": " << (r.failures.empty() ? "" : r.failures.front().input);
    EXPECT_GT(r.samples, 0u);
  }
}

TEST(Properties, MainTheoremAtSpecifiedSize) {
  const CheckReport r = run_property("main-theorem", {42, 200, 6, GenMode::affine});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.samples, 200u);
}

TEST(Properties, BckLaws) { EXPECT_TRUE(run_property("bck-laws", {7, 100, 5, GenMode::affine}).passed()); }

TEST(Properties, AffineFullReductionFailsOnWitness) {
  const CheckReport r = run_property("affine-full-reduction", {1, 1, 5, GenMode::affine});
  ASSERT_FALSE(r.passed());
  EXPECT_NE(r.failures.front().input.find(to_string(affine_reduction_witness())), std::string::npos);
  EXPECT_EQ(r.failures.front().expected, "t0 -> (t1 -> t2) -> t1 -> t0");
}

TEST(Properties, ReportsAreReproducible) {
  const GenConfig cfg{9, 40, 6, GenMode::affine};
  const CheckReport a = run_property("affine-full-reduction", cfg);
  const CheckReport b = run_property("affine-full-reduction", cfg);
  ASSERT_EQ(a.failures.size(), b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i) EXPECT_EQ(a.failures[i].input, b.failures[i].input);
  EXPECT_TRUE(std::is_sorted(a.failures.begin(), a.failures.end(),
                             [](const Failure& x, const Failure& y) { return x.input < y.input; }));
}
