#include <gtest/gtest.h>

#include "goi/types.hpp"

using namespace goi;

namespace {

Type T(const char* s) { return parse_type(s); }
Occurrence O(const char* path, const char* var) { return {Path::parse(path), var}; }

}  // namespace

TEST(Types, ParseRightAssociative) {
  EXPECT_EQ(T("a -> a"), arrow(Type::var("a"), Type::var("a")));
  EXPECT_EQ(T("(a -> b) -> a -> b"), arrow(T("a -> b"), T("a -> b")));
  EXPECT_EQ(T("a -> (b -> c) -> b -> a"), arrow(T("a"), arrow(T("b -> c"), T("b -> a"))));
  EXPECT_EQ(to_string(T("a -> (b -> c) -> b -> a")), "a -> (b -> c) -> b -> a");
  EXPECT_THROW(T("a ->"), ParseError);
  EXPECT_THROW(T("(a"), ParseError);
}

TEST(Types, PathsPrintEForEmpty) {
  EXPECT_EQ(Path().str(), "e");
  EXPECT_EQ(Path::parse("e"), Path());
  EXPECT_EQ(to_string(O("lr", "a")), "lr[a]");
  EXPECT_THROW(Path("lx"), PreconditionError);
}

TEST(Types, Occurrences) {
  EXPECT_EQ(occurrences(T("a")), (std::set<Occurrence>{O("e", "a")}));
  EXPECT_EQ(occurrences(T("(a -> b) -> a")), (std::set<Occurrence>{O("ll", "a"), O("lr", "b"), O("r", "a")}));
  EXPECT_EQ(occurrences(T("a -> a")), (std::set<Occurrence>{O("l", "a"), O("r", "a")}));
}

TEST(Types, TypeOfOccurrences) {
  FreshSupply z("z");
  EXPECT_EQ(type_of_occurrences({}, z), T("z0"));
  EXPECT_EQ(type_of_occurrences({O("e", "a")}, z), T("a"));
  EXPECT_TRUE(equal_up_to_renaming(type_of_occurrences({O("ll", "a"), O("r", "b")}, z), T("(a -> z) -> b")));
  EXPECT_THROW(type_of_occurrences({O("l", "a"), O("lr", "b")}, z), PreconditionError);
}

TEST(Types, OccurrencesRoundTrip) {
  for (const char* s : {"a", "a -> b", "(a -> b) -> (c -> a) -> c -> b", "((a -> a) -> b) -> b"}) {
    FreshSupply z("z");
    EXPECT_EQ(type_of_occurrences(occurrences(T(s)), z), T(s)) << s;
  }
}

TEST(Types, ThetaFreeAncestor) {
  FreshSupply z("z");
  const Type t = theta_free_ancestor(T("(a -> b) -> c"), {"a", "b"}, z);
  EXPECT_TRUE(t.right() == T("c") && t.left().is_var() && z.issued(t.left().name()));
  EXPECT_EQ(theta_free_ancestor(T("a -> a"), {}, z), T("a -> a"));
  const Type v = theta_free_ancestor(T("a"), {"a"}, z);
  EXPECT_TRUE(v.is_var() && z.issued(v.name()));
}

TEST(Types, BinaryAndStrictlyBinary) {
  EXPECT_TRUE(is_binary(T("a -> b -> a")));
  EXPECT_FALSE(is_binary(T("a -> a -> a")));
  EXPECT_TRUE(is_strictly_binary(T("(a -> b) -> b -> a")));
  EXPECT_FALSE(is_strictly_binary(T("a -> b -> a")));
}

TEST(Types, CanonicalRenaming) {
  EXPECT_EQ(to_string(canonical(T("q -> (p -> r) -> p -> q"))), "t0 -> (t1 -> t2) -> t1 -> t0");
  EXPECT_TRUE(equal_up_to_renaming(T("a -> b -> a"), T("x -> y -> x")));
  EXPECT_FALSE(equal_up_to_renaming(T("a -> b -> a"), T("x -> x -> x")));
  EXPECT_FALSE(equal_up_to_renaming(T("a -> b"), T("a -> a")));
}
