#include "qorbital/group.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qorbital;

TEST(Perm, CycleNotationRoundTrip) {
  Perm p = perm_from_cycles("(12)(34)", 5);
  EXPECT_EQ(perm_to_cycles(p), "(12)(34)");
  EXPECT_EQ(perm_to_cycles(perm_identity(4)), "e");
  Perm q = perm_from_cycles("(1,2,10)", 10);
  EXPECT_EQ(q[0], 1);
  EXPECT_EQ(q[1], 9);
  EXPECT_EQ(q[9], 0);
  EXPECT_THROW(perm_from_cycles("(16)", 5), Error);
}

TEST(Perm, ComposeInverse) {
  Perm a = perm_from_cycles("(123)", 3);
  Perm b = perm_from_cycles("(12)", 3);
  EXPECT_EQ(perm_compose(a, perm_inverse(a)), perm_identity(3));
  // (123)(12): apply (12) first, then (123): 1->2->3.
  Perm c = perm_compose(a, b);
  EXPECT_EQ(c[0], 2);
}

TEST(Groups, Builtins) {
  EXPECT_EQ(*builtin_group("Z1")->size(), 1u);
  EXPECT_EQ(*builtin_group("Z6")->size(), 6u);
  EXPECT_EQ(*builtin_group("S3")->size(), 6u);
  EXPECT_EQ(*builtin_group("S4")->size(), 24u);
  EXPECT_EQ(*builtin_group("S5")->size(), 120u);
  EXPECT_EQ(*builtin_group("A4")->size(), 12u);
  EXPECT_EQ(*builtin_group("A5")->size(), 60u);
  EXPECT_EQ(*builtin_group("D4")->size(), 8u);
  EXPECT_EQ(*builtin_group("Q8")->size(), 8u);
  EXPECT_THROW(builtin_group("E8"), Error);
}

TEST(Groups, AssociativityValidation) {
  for (const char* label : {"Z5", "S3", "D4", "Q8", "A4"})
    EXPECT_TRUE(builtin_group(label)->validate_associativity()) << label;
}

TEST(Groups, BinaryIcosahedral) {
  auto g = builtin_group("2I");
  EXPECT_EQ(*g->size(), 120u);
  int s = g->find_named("s");
  int t = g->find_named("t");
  EXPECT_EQ(g->order_of(s), 6);
  EXPECT_EQ(g->order_of(t), 10);
  // s^3 = -1: the unique central involution.
  int s3 = g->pow(s, 3);
  EXPECT_EQ(g->order_of(s3), 2);
  EXPECT_EQ(g->quaternions()[static_cast<size_t>(s3)],
            Quaternion::from_rationals(-1, 0, 0, 0));
  // All elements are unit quaternions.
  for (const auto& q : g->quaternions()) EXPECT_TRUE(q.norm().is_one());
}

TEST(Groups, QuaternionRelations) {
  auto g = builtin_group("Q8");
  int i = g->find_named("i"), j = g->find_named("j"), k = g->find_named("k");
  int m1 = g->mul(i, i);
  EXPECT_EQ(g->mul(j, j), m1);
  EXPECT_EQ(g->mul(k, k), m1);
  EXPECT_EQ(g->mul(g->mul(i, j), k), m1);
  EXPECT_EQ(g->order_of(m1), 2);
}

TEST(Groups, Abelianizations) {
  EXPECT_EQ(*abelianization(*builtin_group("S3")).quotient->size(), 2u);
  EXPECT_EQ(*abelianization(*builtin_group("A4")).quotient->size(), 3u);
  EXPECT_EQ(*abelianization(*builtin_group("A5")).quotient->size(), 1u);
  EXPECT_EQ(*abelianization(*builtin_group("D4")).quotient->size(), 4u);
  EXPECT_EQ(*abelianization(*builtin_group("Q8")).quotient->size(), 4u);
  EXPECT_EQ(*abelianization(*builtin_group("2I")).quotient->size(), 1u);
  // Quotient map is a homomorphism.
  auto g = builtin_group("S3");
  auto ab = abelianization(*g);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      EXPECT_EQ(ab.map[static_cast<size_t>(g->mul(a, b))],
                ab.quotient->mul(ab.map[static_cast<size_t>(a)],
                                 ab.map[static_cast<size_t>(b)]));
}

TEST(FreeProduct, ReducedWords) {
  FreeProductGroup fp({2, 3});
  int a = fp.generator(0);
  int b = fp.generator(1);
  EXPECT_EQ(fp.mul(a, a), fp.identity());
  EXPECT_EQ(fp.pow(b, 3), fp.identity());
  // (a b)(b^2 a) reduces to a b^3 a = a a = e.
  int ab = fp.mul(a, b);
  int b2a = fp.mul(fp.pow(b, 2), a);
  EXPECT_EQ(fp.mul(ab, b2a), fp.identity());
  EXPECT_EQ(fp.elem_name(fp.mul(ab, fp.inv(b))), "a");
  EXPECT_FALSE(fp.size().has_value());
  EXPECT_EQ(*FreeProductGroup({4}).size(), 4u);
}

TEST(FreeProduct, FuzzAgainstNaiveReduction) {
  // Oracle: multiply unreduced letter strings and reduce once at the end.
  FreeProductGroup fp({2, 3, 4});
  std::mt19937 rng(777);
  auto reduce_naive = [&](std::vector<std::pair<int, int>> letters) {
    std::vector<std::pair<int, int>> out;
    for (auto [f, e] : letters) {
      e %= fp.factor_orders()[static_cast<size_t>(f)];
      if (e == 0) continue;
      if (!out.empty() && out.back().first == f) {
        int c = (out.back().second + e) % fp.factor_orders()[static_cast<size_t>(f)];
        out.pop_back();
        if (c != 0) out.emplace_back(f, c);
      } else {
        out.emplace_back(f, e);
      }
    }
    return out;
  };
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::pair<int, int>> letters;
    int x = fp.identity();
    for (int i = 0; i < 6; ++i) {
      int f = static_cast<int>(rng() % 3);
      int e = 1 + static_cast<int>(rng() % 3);
      letters.emplace_back(f, e);
      x = fp.mul(x, fp.pow(fp.generator(f), e));
    }
    auto reduced = reduce_naive(letters);
    int y = fp.identity();
    for (auto [f, e] : reduced) y = fp.mul(y, fp.pow(fp.generator(f), e));
    EXPECT_EQ(x, y);
    EXPECT_EQ(fp.mul(x, fp.inv(x)), fp.identity());
  }
}

TEST(Groups, A5Generators) {
  auto g = builtin_group("A5");
  EXPECT_EQ(g->order_of(g->find_named("(123)")), 3);
  EXPECT_EQ(g->order_of(g->find_named("(345)")), 3);
}
