#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "propp/int_set.hpp"
#include "propp/property_p.hpp"
#include "propp/rational.hpp"
#include "propp/sumset_structure.hpp"

namespace propp {

// One element of a construction: image = multiplier * source, where the
// multiplier is base^exponent for the dyadic/triadic maps.
struct MappedEntry {
  std::int64_t source = 0;
  std::int64_t exponent = 0;
  Rational multiplier{1};
  std::int64_t image = 0;

  friend bool operator==(const MappedEntry&, const MappedEntry&) = default;
};

struct MappedSet {
  std::vector<MappedEntry> entries;  // in source order
  IntSet image_set;

  std::size_t size() const { return image_set.size(); }

  const MappedEntry* find_image(std::int64_t v) const {
    for (const auto& e : entries)
      if (e.image == v) return &e;
    return nullptr;
  }
};

struct ZPartition {
  IntSet z_odd_left;  // odd, (2n/9, n/3]
  IntSet z_b;         // even, (2n/9, n/3], 3z/2 in Z
  IntSet z_g;         // even, (2n/9, n/3], 3z/2 not in Z
  IntSet z_right;     // (n/3, n/2]
};

namespace detail {

inline std::string describe(const MappedEntry& e) {
  return e.multiplier.str() + "*" + std::to_string(e.source);
}

// Sorts images and throws on the first collision.
inline MappedSet finish(std::vector<MappedEntry> entries, const char* what) {
  std::vector<const MappedEntry*> order;
  order.reserve(entries.size());
  for (const auto& e : entries) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->image < b->image; });
  std::vector<std::int64_t> img;
  img.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i && order[i]->image == order[i - 1]->image)
      throw Error(ErrorKind::InjectivityViolation,
                  std::string(what) + ": " + describe(*order[i - 1]) + " = " + describe(*order[i]) + " = " +
                      std::to_string(order[i]->image));
    img.push_back(order[i]->image);
  }
  MappedSet m;
  m.image_set = IntSet::from_sorted(std::move(img));
  m.entries = std::move(entries);
  return m;
}

inline std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Smallest j >= 0 with base^j * a > lo_num * n / lo_den.
inline MappedEntry lift(std::int64_t a, std::int64_t base, std::int64_t n, std::int64_t lo_num,
                        std::int64_t lo_den) {
  MappedEntry e{a, 0, Rational(1), a};
  while (static_cast<__int128>(e.image) * lo_den <= static_cast<__int128>(lo_num) * n) {
    e.image *= base;
    ++e.exponent;
  }
  e.multiplier = Rational(ipow(base, e.exponent));
  return e;
}

}  // namespace detail

// 2^j a in (n/3, 2n/3] for each a in A n [2n/3].
inline MappedSet build_b1(const ProblemInstance& inst) {
  std::vector<MappedEntry> out;
  for (auto a : slice(inst, IntervalSpec::closed(0, Rational(2, 3)))) out.push_back(detail::lift(a, 2, inst.n, 1, 3));
  return detail::finish(std::move(out), "B1");
}

// (1/3) * ((A_(1/2,1] + A_(1/2,1]) n 3N)
inline IntSet build_a3(const ProblemInstance& inst) {
  const IntSet u = slice(inst, Rational(1, 2), 1);
  std::vector<std::int64_t> e;
  for (auto s : sumset(u, u))
    if (s % 3 == 0) e.push_back(s / 3);
  return IntSet::from_sorted(std::move(e));
}

// 2^p a in (n/4, n/2] for each a in A n [n/2].
inline MappedSet build_b_half(const ProblemInstance& inst) {
  std::vector<MappedEntry> out;
  for (auto a : slice(inst, IntervalSpec::closed(0, Rational(1, 2)))) out.push_back(detail::lift(a, 2, inst.n, 1, 4));
  return detail::finish(std::move(out), "B_1/2");
}

// Keeps B_1/2 n (n/3, n/2] and moves b = 2 mod 4 in (n/4, n/3] to 3b/2.
inline MappedSet build_z_half_mapped(const ProblemInstance& inst) {
  const MappedSet bh = build_b_half(inst);
  std::vector<MappedEntry> out;
  for (auto e : bh.entries) {
    if (3 * e.image > inst.n) {
      out.push_back(e);
    } else if (e.image % 4 == 2) {
      const std::int64_t moved = 3 * e.image / 2;
      if (const MappedEntry* hit = bh.find_image(moved))
        throw Error(ErrorKind::IncidenceViolation, "3/2*" + std::to_string(e.image) + " = " +
                                                       std::to_string(moved) + " already in B_1/2 (from " +
                                                       detail::describe(*hit) + ")");
      e.multiplier = e.multiplier * Rational(3, 2);
      e.image = moved;
      out.push_back(e);
    }
  }
  return detail::finish(std::move(out), "Z_1/2");
}

inline IntSet build_z_half(const ProblemInstance& inst) { return build_z_half_mapped(inst).image_set; }

// 2^p a in (n/4, n/2] for a in A n [n/2] with 3 not dividing a.
inline MappedSet build_c1(const ProblemInstance& inst) {
  std::vector<MappedEntry> out;
  for (auto a : slice(inst, IntervalSpec::closed(0, Rational(1, 2))))
    if (a % 3 != 0) out.push_back(detail::lift(a, 2, inst.n, 1, 4));
  return detail::finish(std::move(out), "C1");
}

// 2^l a in (n/2, n] for the same sources as C1.
inline MappedSet build_c1_prime(const ProblemInstance& inst) {
  std::vector<MappedEntry> out;
  for (auto a : slice(inst, IntervalSpec::closed(0, Rational(1, 2))))
    if (a % 3 != 0) out.push_back(detail::lift(a, 2, inst.n, 1, 2));
  return detail::finish(std::move(out), "C1'");
}

// Elements that must be absent before B2 can be built: A n [n/9] and
// the multiples of 3 in A n [n/3].
inline IntSet b2_obstructions(const ProblemInstance& inst) {
  return inst.a.filter([&](std::int64_t a) { return 9 * a <= inst.n || (a % 3 == 0 && 3 * a <= inst.n); });
}

inline MappedSet build_b2(const ProblemInstance& inst) {
  if (auto bad = b2_obstructions(inst); !bad.empty())
    throw Error(ErrorKind::PreconditionViolation, "B2 needs A n [n/9] and A n 3N n [n/3] empty; offending: " + bad.str());
  const std::int64_t n = inst.n;
  std::vector<MappedEntry> out;
  for (auto a : slice(inst, IntervalSpec::closed(0, Rational(1, 2)))) {
    Rational k(1);
    if (6 * a <= n) k = Rational(3);                       // (n/9, n/6]
    else if (4 * a <= n) k = Rational(2);                  // (n/6, n/4]
    else if (3 * a <= n && a % 2 == 0) k = Rational(3, 2); // even, (n/4, n/3]
    out.push_back({a, 0, k, (k * Rational(a)).num()});
  }
  return detail::finish(std::move(out), "B2");
}

// (B2 n (n/4, n/3], B2 n (n/3, n/2])
inline std::pair<IntSet, IntSet> split_b2(const MappedSet& b2, std::int64_t n) {
  IntSet l = b2.image_set.filter([&](std::int64_t v) { return 3 * v <= n; });
  IntSet r = b2.image_set.filter([&](std::int64_t v) { return 3 * v > n; });
  return {std::move(l), std::move(r)};
}

// 3^m a in (n/6, n/2], doubled when it lands in (n/6, 2n/9].
inline MappedSet build_z(const ProblemInstance& inst) {
  std::vector<MappedEntry> out;
  for (auto a : slice(inst, IntervalSpec::closed(0, Rational(1, 2)))) {
    MappedEntry e = detail::lift(a, 3, inst.n, 1, 6);
    if (9 * e.image <= 2 * inst.n) {
      e.image *= 2;
      e.multiplier = e.multiplier * Rational(2);
    }
    out.push_back(e);
  }
  try {
    return detail::finish(std::move(out), "Z");
  } catch (const Error& err) {
    throw Error(ErrorKind::InjectivityViolation,
                std::string(err.what()) + " (incidence 2*3^m_a*a = 3^m_b*b)");
  }
}

inline ZPartition partition_z(const ProblemInstance& inst, const MappedSet& z) {
  const std::int64_t n = inst.n;
  ZPartition p;
  std::vector<std::int64_t> odd, b, g, right;
  for (auto v : z.image_set) {
    if (3 * v > n) {
      right.push_back(v);
    } else if (v % 2 != 0) {
      odd.push_back(v);
    } else if (z.image_set.contains(3 * v / 2)) {
      b.push_back(v);
    } else {
      g.push_back(v);
    }
  }
  p.z_odd_left = IntSet::from_sorted(std::move(odd));
  p.z_b = IntSet::from_sorted(std::move(b));
  p.z_g = IntSet::from_sorted(std::move(g));
  p.z_right = IntSet::from_sorted(std::move(right));
  return p;
}

// (3/2) Z_G u Z_(1/3,1/2]
inline IntSet build_z_rg(const ZPartition& p) {
  return set_union(dilate(Rational(3, 2), p.z_g), p.z_right);
}

// 2(Z_odd u Z_B u Z_G) u Z_(1/3,1/2] u (9/4) Z_B u A_(1/2,2/3]. Throws if the
// six pieces overlap, leave (n/3, 2n/3], or meet A'''.
inline IntSet build_b3(const ProblemInstance& inst) {
  const MappedSet z = build_z(inst);
  const ZPartition p = partition_z(inst, z);
  const std::vector<std::pair<const char*, IntSet>> parts = {
      {"2*Z_odd", dilate(2, p.z_odd_left)},
      {"2*Z_B", dilate(2, p.z_b)},
      {"2*Z_G", dilate(2, p.z_g)},
      {"Z_(1/3,1/2]", p.z_right},
      {"9/4*Z_B", dilate(Rational(9, 4), p.z_b)},
      {"A_(1/2,2/3]", slice(inst, Rational(1, 2), Rational(2, 3))},
  };
  IntSet b3;
  std::size_t total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (auto both = set_intersection(parts[i].second, parts[j].second); !both.empty())
        throw Error(ErrorKind::DisjointnessViolation, std::string(parts[j].first) + " and " + parts[i].first +
                                                          " share " + std::to_string(both.min()));
    total += parts[i].second.size();
    b3 = set_union(b3, parts[i].second);
  }
  const IntervalSpec band = IntervalSpec::half_open(Rational(1, 3), Rational(2, 3));
  for (auto v : b3)
    if (!band.contains(v, inst.n))
      throw Error(ErrorKind::SizeIdentityViolation, "B3 element " + std::to_string(v) + " outside (n/3, 2n/3]");
  const std::size_t expect = slice(inst, IntervalSpec::closed(0, Rational(2, 3))).size() + p.z_b.size();
  if (total != expect)
    throw Error(ErrorKind::SizeIdentityViolation,
                "|B3| = " + std::to_string(total) + ", expected " + std::to_string(expect));
  if (auto both = set_intersection(b3, build_a3(inst)); !both.empty())
    throw Error(ErrorKind::DisjointnessViolation, "B3 meets A''' at " + std::to_string(both.min()));
  return b3;
}

// B1 and A''' are disjoint inside (n/3, 2n/3]; returns |B1| + |A'''| <= ceil(n/3).
inline CheckResult b1_a3_disjoint(const ProblemInstance& inst) {
  if (auto w = find_violation(inst.a))
    throw Error(ErrorKind::HypothesisViolation, "A lacks property P, witness " + w->str());
  const MappedSet b1 = build_b1(inst);
  const IntSet a3 = build_a3(inst);
  if (auto both = set_intersection(b1.image_set, a3); !both.empty())
    throw Error(ErrorKind::DisjointnessViolation, "B1 meets A''' at " + std::to_string(both.min()));
  return make_check("dyadicembed", static_cast<std::int64_t>(b1.size() + a3.size()), Relation::LessEq,
                    Rational(inst.n, 3).ceil(), "disjoint subsets of the interval");
}

// (evens, odds)
inline std::pair<IntSet, IntSet> split_even_odd(const IntSet& x) {
  return {x.filter([](std::int64_t v) { return v % 2 == 0; }), x.filter([](std::int64_t v) { return v % 2 != 0; })};
}

}  // namespace propp
