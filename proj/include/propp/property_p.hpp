#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "propp/bits.hpp"
#include "propp/int_set.hpp"

namespace propp {

// z divides x + y. For property-P witnesses z < x <= y.
struct Witness {
  std::int64_t z = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Witness&, const Witness&) = default;

  std::string str() const {
    return "(" + std::to_string(z) + "," + std::to_string(x) + "," + std::to_string(y) + ")";
  }
};

namespace detail {

// Largest z in a dividing some x + y with x, y in a and x, y > z, or -1.
// Descending scan: before z is examined, `sums` holds every pair sum of
// the elements above z, so only multiples of z need probing.
inline std::int64_t largest_violating_z(const IntSet& a) {
  if (a.size() < 2) return -1;
  const auto top = static_cast<std::size_t>(a.max());
  Bits above(top + 1), sums(2 * top + 1);
  for (std::size_t i = a.size(); i-- > 0;) {
    const std::int64_t z = a[i];
    if (z == 0) break;  // 0 divides no positive sum
    for (std::int64_t m = 3 * z; m <= 2 * a.max(); m += z)
      if (sums.test(static_cast<std::size_t>(m))) return z;
    above.set(static_cast<std::size_t>(z));
    sums.or_shifted(above, static_cast<std::size_t>(z));
  }
  return -1;
}

}  // namespace detail

inline bool has_property_p(const IntSet& a) { return detail::largest_violating_z(a) < 0; }
inline bool has_property_p(const ProblemInstance& inst) { return has_property_p(inst.a); }

// Largest z, then smallest x, then smallest y.
inline std::optional<Witness> find_violation(const IntSet& a) {
  const std::int64_t z = detail::largest_violating_z(a);
  if (z < 0) return std::nullopt;
  const auto& e = a.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] <= z) continue;
    for (std::size_t j = i; j < e.size(); ++j)
      if ((e[i] + e[j]) % z == 0) return Witness{z, e[i], e[j]};
  }
  return std::nullopt;  // unreachable
}
inline std::optional<Witness> find_violation(const ProblemInstance& inst) { return find_violation(inst.a); }

// Distinct x, y, z in a with z | x + y and (x + y) / z != 2, in any order
// of magnitude. Reported with x < y; same tie-breaking as find_violation.
inline std::optional<Witness> find_weak_violation(const IntSet& a) {
  if (a.size() < 3) return std::nullopt;
  const std::int64_t top = a.max();
  Bits in(static_cast<std::size_t>(top) + 1);
  for (auto v : a) in.set(static_cast<std::size_t>(v));
  for (std::size_t k = a.size(); k-- > 0;) {
    const std::int64_t z = a[k];
    if (z == 0) continue;
    for (auto x : a) {
      if (x == z) continue;
      // y = m*z - x with y > x
      for (std::int64_t m = (2 * x) / z + 1; m * z - x <= top; ++m) {
        const std::int64_t y = m * z - x;
        if (m == 2 || y == z || !in.test(static_cast<std::size_t>(y))) continue;
        return Witness{z, x, y};
      }
    }
  }
  return std::nullopt;
}
inline std::optional<Witness> find_weak_violation(const ProblemInstance& inst) {
  return find_weak_violation(inst.a);
}

// {floor(2n/3)+1, ..., n}
inline IntSet extremal_example(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidInstance, "n must be positive");
  std::vector<std::int64_t> e;
  for (std::int64_t v = 2 * n / 3 + 1; v <= n; ++v) e.push_back(v);
  return IntSet::from_sorted(std::move(e));
}

// splitmix64 (Steele, Lea, Flood 2014; constants as in Vigna's reference code).
// Fixed here so generated instances match on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), rejection sampling on the top of the range.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do r = next();
    while (r >= limit);
    return r % bound;
  }

 private:
  std::uint64_t s_;
};

namespace detail {

// Can w join the property-P set `in` (members listed in `members`) inside [1, n]?
inline bool can_insert(const Bits& in, const std::vector<std::int64_t>& members, std::int64_t n,
                       std::int64_t w) {
  // w as the divisor: need x, y > w with x + y = 0 mod w.
  std::vector<char> res(static_cast<std::size_t>(w), 0);
  bool any = false;
  for (auto x : members)
    if (x > w) res[static_cast<std::size_t>(x % w)] = 1, any = true;
  if (any)
    for (std::int64_t r = 0; r < w; ++r)
      if (res[static_cast<std::size_t>(r)] && res[static_cast<std::size_t>((w - r) % w)]) return false;
  // w as a summand: z < w, y > z, y in the set or y == w, z | w + y.
  for (auto z : members) {
    if (z >= w) continue;
    std::int64_t m = (w + z) / z * z + z;  // first multiple above w + z
    for (; m <= w + n; m += z) {
      const std::int64_t y = m - w;
      if (y == w || in.test(static_cast<std::size_t>(y))) return false;
    }
  }
  return true;
}

}  // namespace detail

// Greedy maximal property-P subset of [1, n] over a splitmix64-seeded
// Fisher-Yates permutation.
inline IntSet random_property_p(std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::InvalidInstance, "n must be positive");
  std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  SplitMix64 rng(seed);
  for (std::size_t i = perm.size(); i-- > 1;) std::swap(perm[i], perm[rng.below(i + 1)]);

  Bits in(static_cast<std::size_t>(n) + 1);
  std::vector<std::int64_t> members;
  for (auto w : perm) {
    if (!detail::can_insert(in, members, n, w)) continue;
    in.set(static_cast<std::size_t>(w));
    members.push_back(w);
  }
  return IntSet(std::move(members));
}

}  // namespace propp
