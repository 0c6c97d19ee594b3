#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "propp/property_p.hpp"
#include "propp/sumset_structure.hpp"

using namespace propp;

namespace {

IntSet bits_set(std::uint32_t m, std::int64_t offset = 0) {
  std::vector<std::int64_t> e;
  for (std::int64_t i = 0; m; ++i, m >>= 1)
    if (m & 1) e.push_back(i + offset);
  return IntSet::from_sorted(std::move(e));
}

}  // namespace

TEST(LongestAp, Examples) {
  EXPECT_EQ(longest_ap(IntSet{2, 4, 6, 7, 8, 10}, 2), (APDescriptor{2, 2, 5}));
  EXPECT_EQ(longest_ap(IntSet{5}, 3), (APDescriptor{5, 3, 1}));
  EXPECT_FALSE(longest_ap(IntSet{}, 1).has_value());
  EXPECT_ERROR_KIND(longest_ap(IntSet{1}, 0), ErrorKind::PreconditionViolation);
}

TEST(LongestAp, MatchesBruteScanWithSmallestStart) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 1000; ++it) {
    oracle::Vec v;
    for (int i = 0, k = 1 + rng() % 20; i < k; ++i) v.push_back(rng() % 40);
    const IntSet x(v);
    const std::int64_t d = 1 + rng() % 4;
    const auto ap = longest_ap(x, d);
    ASSERT_TRUE(ap.has_value());
    EXPECT_EQ(ap->length, oracle::longest_run(x.elements(), d));
    for (std::int64_t i = 0; i < ap->length; ++i) EXPECT_TRUE(x.contains(ap->start + i * d));
    // Earlier starts give strictly shorter runs.
    for (auto u : x) {
      if (u >= ap->start) break;
      std::int64_t len = 0;
      while (x.contains(u + len * d)) ++len;
      EXPECT_LT(len, ap->length);
    }
  }
}

TEST(FreimanClassify, Examples) {
  const auto a = freiman_classify(IntSet{0, 1, 2}, IntSet{0, 1, 2});
  EXPECT_FALSE(a.expansion_holds);
  ASSERT_TRUE(a.ap.has_value());
  EXPECT_EQ(*a.ap, (APDescriptor{0, 1, 5}));
  EXPECT_EQ(a.sum_size, 5u);

  EXPECT_TRUE(freiman_classify(IntSet{0}, IntSet{0}).expansion_holds);

  const IntSet s{0, 2, 3, 4, 5, 6};
  const auto b = freiman_classify(s, s);
  EXPECT_EQ(b.sum_size, 12u);
  EXPECT_FALSE(b.expansion_holds);
  ASSERT_TRUE(b.ap.has_value());
  EXPECT_EQ(b.ap->diff, 1);
  EXPECT_GE(b.ap->length, 11);
}

TEST(FreimanClassify, EmptyOperand) {
  EXPECT_ERROR_KIND(freiman_classify(IntSet{}, IntSet{1}), ErrorKind::PreconditionViolation);
}

TEST(FreimanClassify, BothBranchesAgreeWithNaiveCounts) {
  for (std::uint32_t s = 1; s < (1u << 7); ++s)
    for (std::uint32_t t = 1; t < (1u << 7); ++t) {
      const IntSet S = bits_set(s), T = bits_set(t);
      const auto fc = freiman_classify(S, T);
      const auto st = oracle::naive_sumset(S.elements(), T.elements());
      const auto ss = static_cast<std::int64_t>(S.size()), ts = static_cast<std::int64_t>(T.size());
      const auto sz = static_cast<std::int64_t>(st.size());
      ASSERT_EQ(fc.sum_size, st.size());
      ASSERT_EQ(fc.expansion_holds, sz >= ss + ts + std::min(ss, ts) - 3);
      const std::int64_t g = std::max<std::int64_t>(1, oracle::gcd_of_differences(st));
      ASSERT_EQ(fc.ap.has_value(), oracle::longest_run(st, g) >= ss + ts - 1);
    }
}

TEST(BgHypotheses, Examples) {
  const auto a = bg_hypotheses(IntSet{0, 1, 2}, IntSet{0, 1, 2});
  ASSERT_EQ(a.size(), 5u);
  for (const auto& c : a) EXPECT_TRUE(c.holds) << c.name;
  EXPECT_EQ(a.back().rhs, Rational(5));

  const auto b = bg_hypotheses(IntSet{0, 10}, IntSet{0, 1});
  EXPECT_EQ(b.size(), 4u);
  EXPECT_FALSE(b[2].holds);
  EXPECT_EQ(b[2].lhs, Rational(4));
  EXPECT_EQ(b[2].rhs, Rational(2));

  const auto c = bg_hypotheses(IntSet{0}, IntSet{0});
  EXPECT_EQ(c.size(), 4u);
  EXPECT_FALSE(c[2].holds);
}

TEST(BgHypotheses, ConclusionWheneverHypothesesHold) {
  std::uint64_t met = 0;
  for (std::uint32_t s = 1; s < (1u << 8); ++s)
    for (std::uint32_t t = 1; t < (1u << 8); ++t) {
      const IntSet S = bits_set(s), T = bits_set(t);
      const auto st = oracle::naive_sumset(S.elements(), T.elements());
      const auto ss = static_cast<std::int64_t>(S.size()), ts = static_cast<std::int64_t>(T.size());
      const auto sz = static_cast<std::int64_t>(st.size());
      const bool hyp = T.max() - T.min() <= S.max() - S.min() && oracle::gcd_of_differences(st) == 1 &&
                       sz <= ss + 2 * ts - 4 &&
                       (oracle::gcd_of_differences(S.elements()) == 1 || sz <= 2 * ss + ts - 3);
      const auto cs = bg_hypotheses(S, T);
      ASSERT_EQ(cs.size() == 5, hyp) << S.str() << " | " << T.str();
      if (hyp) {
        ++met;
        ASSERT_GE(oracle::longest_run(st, 1), ss + ts - 1);
      }
    }
  EXPECT_GT(met, 0u);
}

TEST(ResidueSumCount, Examples) {
  EXPECT_EQ(residue_sum_count(IntSet{1, 2, 3}, 2, 0), 3);
  EXPECT_EQ(residue_sum_count(IntSet{5}, 3, 1), 1);
  EXPECT_EQ(residue_sum_count(IntSet{}, 4, 2), 0);
}

TEST(DoublingBound, Examples) {
  const auto a = doubling_bound_check(IntSet{1, 2, 3, 4, 5, 6, 7, 8}, Container::interval(0, 8), 2, 0);
  EXPECT_TRUE(a.hypothesis_met);
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.lhs, Rational(7));
  EXPECT_EQ(a.rhs, Rational(8));

  const auto b = doubling_bound_check(IntSet{1, 2}, Container::interval(0, 8), 2, 0);
  EXPECT_FALSE(b.hypothesis_met);
  EXPECT_FALSE(b.failed());

  const auto c = doubling_bound_check(IntSet{3, 6, 9, 12}, Container::ap(0, 3, 4), 2, 0);
  EXPECT_TRUE(c.hypothesis_met);
  EXPECT_EQ(c.rhs, Rational(4));
  EXPECT_EQ(c.lhs, Rational(3));
}

TEST(DoublingBound, Errors) {
  EXPECT_ERROR_KIND(doubling_bound_check(IntSet{9}, Container::interval(0, 8), 2, 0), ErrorKind::ContainerMismatch);
  EXPECT_ERROR_KIND(doubling_bound_check(IntSet{4}, Container::ap(0, 2, 4), 2, 0), ErrorKind::CoprimalityViolation);
  EXPECT_ERROR_KIND(doubling_bound_check(IntSet{4}, Container::ap(0, 3, 4), 3, 0), ErrorKind::CoprimalityViolation);
}

TEST(DoublingBound, ExhaustiveAgainstDirectCount) {
  for (std::int64_t m = 1; m <= 10; ++m)
    for (std::int64_t q = 1; q <= 4; ++q)
      for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        const IntSet u = bits_set(mask, 1);
        if (2 * static_cast<std::int64_t>(u.size()) < m + q) continue;
        const auto uu = oracle::naive_sumset(u.elements(), u.elements());
        for (std::int64_t a = 0; a < q; ++a) {
          std::int64_t cnt = 0;
          for (auto w : uu) cnt += w % q == a;
          ASSERT_GE(q * (cnt + 1), 2 * static_cast<std::int64_t>(u.size()));
          ASSERT_FALSE(doubling_bound_check(u, Container::interval(0, m), q, a).failed());
        }
      }
}

TEST(BasicMult, EmptyB) {
  const ProblemInstance inst(10, IntSet{7, 8, 9, 10});
  const auto c = lemma_basicmult_check(inst, Rational(2, 3), IntSet{}, 2, ResidueClass{0, 1},
                                       IntervalSpec::half_open(Rational(4, 3), Rational(2)));
  EXPECT_TRUE(c.holds);
}

TEST(BasicMult, PreconditionBreak) {
  const ProblemInstance inst(12, IntSet{7, 9, 10});
  EXPECT_ERROR_KIND(lemma_basicmult_check(inst, Rational(2, 3), IntSet{5}, 2, ResidueClass{0, 1},
                                          IntervalSpec::half_open(Rational(0), Rational(2))),
                    ErrorKind::HypothesisViolation);
  EXPECT_ERROR_KIND(lemma_basicmult_check(ProblemInstance(4, IntSet{2, 3, 4}), Rational(1, 2), IntSet{}, 1,
                                          ResidueClass{0, 1}, IntervalSpec::half_open(Rational(0), Rational(2))),
                    ErrorKind::HypothesisViolation);
}

// Every property-P A in [n], n <= 10, with B the largest admissible set for
// each (alpha, k, q, a, I) in a small grid.
TEST(BasicMult, ExhaustiveSmallTuples) {
  const Rational alphas[] = {Rational(1, 3), Rational(1, 2), Rational(2, 3)};
  std::uint64_t checked = 0, nonempty = 0;
  for (std::int64_t n = 3; n <= 10; ++n)
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const IntSet a = bits_set(mask, 1);
      if (!oracle::has_p(a.elements())) continue;
      const ProblemInstance inst(n, a);
      for (const auto& alpha : alphas)
        for (std::int64_t k = 1; k <= 3; ++k)
          for (std::int64_t q = 1; q <= 2; ++q)
            for (std::int64_t r = 0; r < q; ++r)
              for (std::int64_t lo = 0; lo < 6; lo += 2)
                for (std::int64_t hi = lo + 2; hi <= 6; hi += 2) {
                  const auto iv = IntervalSpec::half_open(Rational(lo, 3), Rational(hi, 3));
                  const ResidueClass rc{r, q};
                  std::vector<std::int64_t> b;
                  for (std::int64_t v = 1; v <= 2 * n; ++v) {
                    const std::int64_t kv = k * v;
                    if (!iv.contains(kv, n) || !rc.contains(kv)) continue;
                    for (auto d : a)
                      if (Rational(d) <= alpha * Rational(n) && kv % d == 0) {
                        b.push_back(v);
                        break;
                      }
                  }
                  const auto c = lemma_basicmult_check(inst, alpha, IntSet(b), k, rc, iv);
                  ASSERT_TRUE(c.holds) << "n=" << n << " A={" << a.str() << "}";
                  ++checked;
                  nonempty += !b.empty();
                }
    }
  EXPECT_GT(nonempty, 0u);
  EXPECT_GT(checked, 0u);
}
