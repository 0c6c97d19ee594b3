#pragma once

// Slow, obviously-correct reference implementations used by the tests.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "propp/error.hpp"
#include "propp/int_set.hpp"

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline Vec naive_sumset(const Vec& x, const Vec& y) {
  std::set<std::int64_t> s;
  for (auto u : x)
    for (auto v : y) s.insert(u + v);
  return Vec(s.begin(), s.end());
}

// Cubic scan for z < x <= y (all in a) with z | x + y.
inline bool has_p(const Vec& a) {
  for (auto z : a)
    for (auto x : a)
      for (auto y : a)
        if (z < x && x <= y && (x + y) % z == 0) return false;
  return true;
}

// Largest subset of [n] with property P, by trying every mask.
inline int brute_max(int n) {
  int best = 0;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    const int pc = __builtin_popcount(m);
    if (pc <= best) continue;
    Vec a;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) a.push_back(i + 1);
    if (has_p(a)) best = pc;
  }
  return best;
}

inline std::uint64_t brute_count(int n) {
  std::uint64_t c = 0;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    Vec a;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) a.push_back(i + 1);
    if (has_p(a)) ++c;
  }
  return c;
}

// Longest run start, start+d, ... inside x, scanning every start.
inline std::int64_t longest_run(const Vec& x, std::int64_t d) {
  std::set<std::int64_t> s(x.begin(), x.end());
  std::int64_t best = 0;
  for (auto u : x) {
    std::int64_t len = 0;
    while (s.count(u + len * d)) ++len;
    best = std::max(best, len);
  }
  return best;
}

inline std::int64_t gcd_of_differences(const Vec& x) {
  std::int64_t g = 0;
  for (auto u : x)
    for (auto v : x) g = std::gcd(g, u > v ? u - v : v - u);
  return g;
}

}  // namespace oracle

#define EXPECT_ERROR_KIND(stmt, k)                                     \
  do {                                                                 \
    try {                                                              \
      stmt;                                                            \
      ADD_FAILURE() << "expected " << propp::to_string(k);             \
    } catch (const propp::Error& e__) {                                \
      EXPECT_EQ(e__.kind(), k) << e__.what();                          \
    }                                                                  \
  } while (0)
