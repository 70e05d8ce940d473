#include <gtest/gtest.h>

#include <random>

#include "condenv/capacity.hpp"
#include "condenv/error.hpp"
#include "fixtures.hpp"

using namespace condenv;
using fixtures::q;

namespace {

Capacity two(const Rational& a, const Rational& b) { return Capacity::with_default_names(2, {0, a, b, 1}); }

}  // namespace

TEST(Capacity, Validation) {
  EXPECT_THROW(Capacity::with_default_names(2, {q(1, 5), q(1, 5), q(1, 5), 1}), Error);
  EXPECT_THROW(Capacity::with_default_names(2, {0, q(1, 5), q(1, 5), q(4, 5)}), Error);
  EXPECT_THROW(Capacity::with_default_names(2, {0, q(1, 2), q(1, 5), q(2, 5)}), Error);
  EXPECT_THROW(Capacity::with_default_names(2, {0, 1, 1}), Error);
  EXPECT_EQ(Capacity::with_default_names(2, {0, 0, 0, 1}).ground(), (std::vector<std::string>{"x1", "x2"}));
}

TEST(Mobius, TwoElements) {
  auto v = two(q(1, 5), q(3, 10));
  auto m = mobius(v);
  EXPECT_EQ(m.mass, (std::vector<Rational>{0, q(1, 5), q(3, 10), q(1, 2)}));
  EXPECT_EQ(unmobius(v.ground(), m), v);
  EXPECT_TRUE(is_totally_monotone(v));
  EXPECT_EQ(core_vertices(v).size(), 2u);
}

TEST(Mobius, RoundTripOnThreeElements) {
  auto v = Capacity::with_default_names(3, {0, q(1, 10), q(1, 5), q(2, 5), q(3, 10), q(1, 2), q(3, 5), 1});
  EXPECT_EQ(unmobius(v.ground(), mobius(v)), v);
}

TEST(Monotonicity, NotTwoMonotone) {
  auto v = two(q(4, 5), q(4, 5));
  auto rep = check_n_monotone(v, 2);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.witness, (std::vector<Mask>{0b01, 0b10}));
  EXPECT_EQ(rep.lhs, 1);
  EXPECT_EQ(rep.rhs, q(8, 5));
  EXPECT_FALSE(is_supermodular(v));
  try {
    core_vertices(v);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotTwoMonotone);
  }
}

// v(S) = (|S| - 1)^+ / 2: convex in |S| but with a negative triple mass.
TEST(Monotonicity, TwoButNotThreeMonotone) {
  std::vector<Rational> values(8);
  for (Mask s = 0; s < 8; ++s) {
    const int c = std::popcount(s);
    values[s] = c <= 1 ? Rational(0) : q(c - 1, 2);
  }
  auto v = Capacity::with_default_names(3, values);
  EXPECT_TRUE(is_n_monotone(v, 2));
  EXPECT_TRUE(is_supermodular(v));
  EXPECT_FALSE(is_n_monotone(v, 3));
  EXPECT_FALSE(is_totally_monotone(v));
  EXPECT_EQ(mobius(v).mass[7], q(-1, 2));
}

TEST(Monotonicity, GroundLimit) {
  std::vector<Rational> values(1 << 7, Rational(0));
  values.back() = 1;
  auto v = Capacity::with_default_names(7, values);
  try {
    check_n_monotone(v, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroundTooLarge);
  }
  EXPECT_TRUE(is_supermodular(v));
}

TEST(Monotonicity, SupermodularMatchesExhaustiveCheck) {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    auto raw = fixtures::random_distribution(rng, 15);
    std::vector<Rational> mass(16, Rational(0));
    for (std::size_t s = 1; s < 16; ++s) mass[s] = raw[s - 1];
    if (t % 2 == 1) {
      mass[3] -= q(1, 8);
      mass[1] += q(1, 16);
      mass[2] += q(1, 16);
    }
    Capacity v;
    try {
      v = unmobius(default_names(4), Mobius{mass});
    } catch (const Error&) {
      continue;
    }
    EXPECT_EQ(is_supermodular(v), is_n_monotone(v, 2));
  }
}

TEST(Dual, Values) {
  auto v = two(q(1, 5), q(3, 10));
  auto d = dual(v);
  EXPECT_EQ(d(0b01), q(7, 10));
  EXPECT_EQ(d(0b10), q(4, 5));
  EXPECT_EQ(dual(d), v);
}

TEST(InnerMeasure, BlockAlgebra) {
  auto v = inner_measure(3, {0b011, 0b100}, {q(1, 3), q(2, 3)});
  EXPECT_EQ(v(0b001), 0);
  EXPECT_EQ(v(0b011), q(1, 3));
  EXPECT_EQ(v(0b101), q(2, 3));
  EXPECT_TRUE(is_totally_monotone(v));
  auto w = outer_measure(3, {0b011, 0b100}, {q(1, 3), q(2, 3)});
  EXPECT_EQ(w(0b001), q(1, 3));
  EXPECT_EQ(w, dual(v));
}

TEST(Choquet, AgainstCoreAndStieltjes) {
  auto v = two(q(1, 5), q(3, 10));
  EXPECT_EQ(choquet({3, 1}, v), q(7, 5));
  EXPECT_EQ(choquet({3, 1}, dual(v)), q(12, 5));
  Rational best = 100;
  for (const auto& p : core_vertices(v)) best = std::min<Rational>(best, 3 * p[0] + p[1]);
  EXPECT_EQ(best, q(7, 5));

  const std::vector<Mask> blocks = {0b011, 0b100};
  const std::vector<Rational> mass = {q(1, 3), q(2, 3)};
  const std::vector<Rational> x = {q(1, 2), q(1, 5), 1};
  EXPECT_EQ(lower_stieltjes(x, blocks, mass), choquet(x, inner_measure(3, blocks, mass)));
  EXPECT_EQ(lower_stieltjes(x, blocks, mass), q(1, 3) * q(1, 5) + q(2, 3));
  EXPECT_EQ(upper_stieltjes(x, blocks, mass), q(1, 3) * q(1, 2) + q(2, 3));
}

TEST(CoreVertices, Additive) {
  auto v = two(q(1, 4), q(3, 4));
  auto core = core_vertices(v);
  ASSERT_EQ(core.size(), 1u);
  EXPECT_EQ(core[0], (std::vector<Rational>{q(1, 4), q(3, 4)}));
}
