#include <gtest/gtest.h>

#include "oracles.hpp"
#include "propp/property_p.hpp"

using namespace propp;

namespace {

IntSet mask_set(std::uint32_t m) {
  std::vector<std::int64_t> e;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) e.push_back(i + 1);
  return IntSet::from_sorted(std::move(e));
}

// Largest z, then smallest x, then smallest y.
std::optional<Witness> naive_witness(const IntSet& a) {
  std::optional<Witness> best;
  for (auto z : a)
    for (auto x : a)
      for (auto y : a) {
        if (!(z < x && x <= y && (x + y) % z == 0)) continue;
        const Witness w{z, x, y};
        if (!best || z > best->z || (z == best->z && (x < best->x || (x == best->x && y < best->y)))) best = w;
      }
  return best;
}

std::optional<Witness> naive_weak(const IntSet& a) {
  std::optional<Witness> best;
  for (auto z : a)
    for (auto x : a)
      for (auto y : a) {
        if (!(x < y && z != x && z != y && (x + y) % z == 0 && (x + y) / z != 2)) continue;
        const Witness w{z, x, y};
        if (!best || z > best->z || (z == best->z && (x < best->x || (x == best->x && y < best->y)))) best = w;
      }
  return best;
}

}  // namespace

TEST(HasPropertyP, Examples) {
  EXPECT_TRUE(has_property_p(ProblemInstance(10, IntSet{7, 8, 9, 10})));
  EXPECT_FALSE(has_property_p(ProblemInstance(4, IntSet{2, 3, 4})));
  EXPECT_TRUE(has_property_p(IntSet{}));
  EXPECT_TRUE(has_property_p(IntSet{6}));
  EXPECT_TRUE(has_property_p(ProblemInstance(5, IntSet{4, 5})));
}

TEST(FindViolation, Examples) {
  EXPECT_EQ(find_violation(IntSet{2, 3, 4}), (Witness{2, 3, 3}));
  EXPECT_EQ(find_violation(IntSet{3, 4, 5}), (Witness{3, 4, 5}));
  EXPECT_FALSE(find_violation(IntSet{7, 8, 9, 10}).has_value());
  EXPECT_EQ(Witness(2, 3, 3).str(), "(2,3,3)");
}

TEST(FindViolation, ExhaustiveAgainstCubicOracle) {
  for (int n = 1; n <= 14; ++n)
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      const IntSet a = mask_set(m);
      const bool p = oracle::has_p(a.elements());
      ASSERT_EQ(has_property_p(a), p) << a.str();
      if (!p) {
        ASSERT_EQ(find_violation(a), naive_witness(a)) << a.str();
      } else {
        ASSERT_FALSE(find_violation(a).has_value());
      }
    }
}

TEST(FindViolation, Monotone) {
  const int n = 12;
  std::vector<char> p(1u << n);
  for (std::uint32_t m = 0; m < p.size(); ++m) p[m] = has_property_p(mask_set(m));
  for (std::uint32_t m = 0; m < p.size(); ++m) {
    if (!p[m]) continue;
    for (std::uint32_t sub = m; sub; sub = (sub - 1) & m) ASSERT_TRUE(p[sub]);
  }
}

TEST(FindViolation, TrivialHalfBound) {
  for (int n = 1; n <= 14; ++n)
    for (std::uint32_t m = 0; m < (1u << n); ++m)
      if (has_property_p(mask_set(m))) {
        ASSERT_LE(__builtin_popcount(m), (n + 1) / 2);
      }
}

TEST(FindWeakViolation, Examples) {
  EXPECT_FALSE(find_weak_violation(IntSet{2, 3, 4}).has_value());
  EXPECT_EQ(find_weak_violation(IntSet{3, 4, 5}), (Witness{3, 4, 5}));
  EXPECT_FALSE(find_weak_violation(IntSet{9}).has_value());
}

TEST(FindWeakViolation, ExhaustiveAgainstOracle) {
  for (int n = 1; n <= 12; ++n)
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      const IntSet a = mask_set(m);
      ASSERT_EQ(find_weak_violation(a), naive_weak(a)) << a.str();
    }
}

TEST(FindWeakViolation, StrictlyWeaker) {
  bool found = false;
  for (int n = 1; n <= 14 && !found; ++n)
    for (std::uint32_t m = 0; m < (1u << n) && !found; ++m) {
      const IntSet a = mask_set(m);
      if (!has_property_p(a) && !find_weak_violation(a)) {
        const auto w = find_violation(a);
        EXPECT_EQ(w->x, w->y);
        found = true;
      }
    }
  EXPECT_TRUE(found);
}

TEST(ExtremalExample, Examples) {
  EXPECT_EQ(extremal_example(10), (IntSet{7, 8, 9, 10}));
  EXPECT_EQ(extremal_example(3), (IntSet{3}));
  EXPECT_EQ(extremal_example(12), (IntSet{9, 10, 11, 12}));
}

TEST(ExtremalExample, PropertyAndSize) {
  for (std::int64_t n = 1; n <= 300; ++n) {
    const IntSet e = extremal_example(n);
    EXPECT_EQ(static_cast<std::int64_t>(e.size()), (n + 2) / 3);
    EXPECT_TRUE(oracle::has_p(e.elements())) << n;
  }
}

TEST(ExtremalExample, LargeN) {
  const std::int64_t n = 10000;
  const IntSet e = extremal_example(n);
  EXPECT_EQ(e.min(), 2 * n / 3 + 1);
  EXPECT_TRUE(has_property_p(e));
}

TEST(RandomPropertyP, MaximalAndDeterministic) {
  EXPECT_EQ(random_property_p(1, 42), (IntSet{1}));
  for (std::int64_t n : {5, 17, 40, 90}) {
    for (std::uint64_t seed : {1ull, 2ull, 12345ull}) {
      const IntSet s = random_property_p(n, seed);
      EXPECT_EQ(s, random_property_p(n, seed));
      EXPECT_TRUE(oracle::has_p(s.elements()));
      for (std::int64_t v = 1; v <= n; ++v) {
        if (s.contains(v)) continue;
        auto e = s.elements();
        e.push_back(v);
        EXPECT_FALSE(oracle::has_p(IntSet(e).elements())) << "n=" << n << " can add " << v;
      }
    }
  }
}
