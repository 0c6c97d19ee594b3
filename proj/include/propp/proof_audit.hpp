#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "propp/audit_registry.hpp"
#include "propp/constructions.hpp"
#include "propp/int_set.hpp"
#include "propp/property_p.hpp"
#include "propp/rational.hpp"
#include "propp/sumset_structure.hpp"

namespace propp {

struct AuditConfig {
  Rational delta{1, 1000};
  Rational c_const{1000};
  Rational epsilon{16, 1000};

  void validate() const {
    if (delta <= Rational(0) || c_const <= Rational(0) || epsilon <= Rational(0))
      throw Error(ErrorKind::InvalidConfig, "delta, c and epsilon must be positive");
    if (!(epsilon > Rational(15) * delta))
      throw Error(ErrorKind::InvalidConfig, "epsilon must exceed 15*delta");
  }
};

struct ConstructionSummary {
  std::string name;
  IntSet elements;
};

struct CaseReport {
  std::int64_t n = 0;
  IntSet set;
  std::string path;
  AuditConfig config;
  std::vector<CheckResult> checks;
  std::vector<ConstructionSummary> constructions;
  bool unconditional_pass = true;
};

inline bool unconditional_pass(const std::vector<CheckResult>& checks) {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.kind == CheckKind::Unconditional && c.failed(); });
}

namespace detail {

inline Rational frac(std::int64_t n, std::int64_t p, std::int64_t q) { return Rational(p * n, q); }
inline Rational sz(const IntSet& s) { return Rational(static_cast<std::int64_t>(s.size())); }
inline Rational sz(std::size_t s) { return Rational(static_cast<std::int64_t>(s)); }
inline Rational sz(const MappedSet& s) { return sz(s.size()); }

inline IntSet mod_class(const IntSet& x, std::int64_t r, std::int64_t q) {
  return x.filter([=](std::int64_t v) { return v % q == r; });
}

inline void require_property_p(const ProblemInstance& inst) {
  if (auto w = find_violation(inst.a))
    throw Error(ErrorKind::NotPropertyP, "witness " + w->str());
}

// Appends registry-labelled checks. In `alt` mode (the orientation a
// "without loss of generality" step discards) every check is conditional.
class Checks {
 public:
  explicit Checks(std::vector<CheckResult>& out) : out_(out) {}

  bool alt = false;

  CheckResult& add(std::string_view tag, Rational lhs, Relation rel, Rational rhs, bool hyp = true,
                   std::string label = {}, std::string note = {}) {
    const RegistryEntry& e = registry_entry(tag);
    CheckResult c = make_check(std::string(tag) + label + (alt ? "[alt]" : ""), lhs, rel, rhs, std::string(e.anchor));
    c.kind = alt ? CheckKind::Conditional : e.kind;
    c.hypothesis_met = hyp;
    if (!hyp && note.empty()) note = "hypothesis not met";
    c.note = std::move(note);
    out_.push_back(std::move(c));
    return out_.back();
  }
  CheckResult& le(std::string_view tag, Rational lhs, Rational rhs, bool hyp = true, std::string label = {}) {
    return add(tag, lhs, Relation::LessEq, rhs, hyp, std::move(label));
  }
  CheckResult& ge(std::string_view tag, Rational lhs, Rational rhs, bool hyp = true, std::string label = {}) {
    return add(tag, rhs, Relation::LessEq, lhs, hyp, std::move(label));
  }
  CheckResult& lt(std::string_view tag, Rational lhs, Rational rhs, bool hyp = true, std::string label = {}) {
    return add(tag, lhs, Relation::Less, rhs, hyp, std::move(label));
  }
  CheckResult& gt(std::string_view tag, Rational lhs, Rational rhs, bool hyp = true, std::string label = {}) {
    return add(tag, rhs, Relation::Less, lhs, hyp, std::move(label));
  }
  CheckResult& eq(std::string_view tag, Rational lhs, Rational rhs, bool hyp = true, std::string label = {}) {
    return add(tag, lhs, Relation::Equal, rhs, hyp, std::move(label));
  }
  // Runs f; a construction error becomes a failed check under `tag`.
  void guarded(std::string_view tag, const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& err) {
      add(tag, 1, Relation::Equal, 0, true, {}, err.what());
    }
  }
  // Records an externally built check under the registry's labels.
  void adopt(std::string_view tag, CheckResult c, std::string label = {}) {
    const RegistryEntry& e = registry_entry(tag);
    c.name = std::string(tag) + label + (alt ? "[alt]" : "");
    c.anchor = std::string(e.anchor);
    c.kind = alt ? CheckKind::Conditional : e.kind;
    out_.push_back(std::move(c));
  }

 private:
  std::vector<CheckResult>& out_;
};

// Container of the integers = r mod 3 in (n/2, n], as {k+3, ..., k+3m}.
inline Container class_container(std::int64_t n, std::int64_t r) {
  std::int64_t f = n / 2 + 1;
  while (f % 3 != r) ++f;
  const std::int64_t m = f <= n ? (n - f) / 3 + 1 : 0;
  return Container::ap(f - 3, 3, m);
}

inline bool doubling_hypothesis(const IntSet& u, const Container& box, std::int64_t q) {
  return !u.empty() && Rational(static_cast<std::int64_t>(u.size())) >= Rational(box.m, 2) + Rational(q, 2);
}

// A minus A n [n/9] and minus the multiples of 3 in A n [n/3].
inline ProblemInstance normalize_for_b2(const ProblemInstance& inst) {
  return ProblemInstance(inst.n, set_difference(inst.a, b2_obstructions(inst)));
}

}  // namespace detail

// Identities and disjointness statements that hold for every property-P set.
inline std::vector<CheckResult> verify_unconditional(const ProblemInstance& inst) {
  using namespace detail;
  require_property_p(inst);
  const std::int64_t n = inst.n;
  const IntSet& A = inst.a;
  std::vector<CheckResult> out;
  Checks ck(out);

  for (std::int64_t k = 2; k <= 8; ++k)
    ck.eq("lemma31", sz(set_intersection(A, dilate(k, A))), 0, true, "[A,k=" + std::to_string(k) + "]");
  for (std::int64_t k = 3; k <= 8; ++k)
    ck.eq("lemma31", sz(set_intersection(dilate(2, A), dilate(k, A))), 0, true, "[2A,k=" + std::to_string(k) + "]");

  const IntSet a2 = slice(inst, Rational(2, 3), 1);
  const IntSet low_half = slice(inst, IntervalSpec::closed(0, Rational(1, 2)));
  const IntSet a3 = build_a3(inst);

  ck.guarded("Adecompo", [&] {
    const MappedSet b1 = build_b1(inst);
    ck.eq("Adecompo", sz(A), sz(b1) + sz(a2));
    ck.eq("B1A3disjoint", sz(set_intersection(b1.image_set, a3)), 0);
    ck.le("dyadicembed", sz(b1) + sz(a3), Rational(n, 3).ceil());
  });

  ck.guarded("lemmalo", [&] {
    const MappedSet bh = build_b_half(inst);
    ck.eq("B_1/2size", sz(bh), sz(low_half));
    const IntSet zh = build_z_half(inst);
    const auto rest = bh.image_set.filter([&](std::int64_t b) { return 3 * b <= n && b % 4 != 2; });
    ck.eq("lemmalo", sz(bh), sz(zh) + sz(rest));
    ck.le("lemmalo.bound", sz(bh), sz(zh) + frac(n, 1, 16) + 3);
    const IntSet even_a2 = mod_class(a2, 0, 2);
    ck.add("jaja2", sz(zh) + sz(even_a2), Relation::LessEq, frac(n, 1, 6) + 1);
  });

  ck.guarded("B_1'decompo", [&] {
    const MappedSet c1 = build_c1(inst);
    const MappedSet c1p = build_c1_prime(inst);
    const auto sources = low_half.filter([](std::int64_t a) { return a % 3 != 0; });
    ck.eq("B_1'decompo", sz(c1), sz(sources));
    ck.eq("C1'size", sz(c1p), sz(sources));
    ck.eq("C1'even", sz(mod_class(c1p.image_set, 1, 2)), 0);
  });

  ck.guarded("Zsize", [&] {
    const MappedSet z = build_z(inst);
    ck.eq("Zsize", sz(z), sz(low_half));
    const ZPartition p = partition_z(inst, z);
    ck.eq("Zpartition", sz(p.z_odd_left) + sz(p.z_b) + sz(p.z_g) + sz(p.z_right), sz(z));
    const IntSet zrg = build_z_rg(p);
    ck.eq("Z_RG", sz(zrg), sz(p.z_g) + sz(p.z_right));
    ck.eq("Ycrucial.integral", sz(p.z_b.filter([](std::int64_t v) { return v % 4 != 0; })), 0);
    for (std::int64_t i : {1, 3}) {
      const std::string label = "[i=" + std::to_string(i) + "]";
      ck.le("Coddcase2", sz(p.z_odd_left) + sz(mod_class(a2, i, 4)), frac(n, 1, 12) + 3, true, label);
    }
    const IntSet low23 = slice(inst, IntervalSpec::closed(0, Rational(2, 3)));
    ck.le("goodineq", sz(low23) + sz(p.z_b) + sz(a3), Rational(n, 3).ceil());
  });

  ck.guarded("Ycrucial.size", [&] {
    const IntSet b3 = build_b3(inst);
    const ZPartition p = partition_z(inst, build_z(inst));
    const IntSet low23 = slice(inst, IntervalSpec::closed(0, Rational(2, 3)));
    ck.eq("Ycrucial.size", sz(b3), sz(low23) + sz(p.z_b));
    const IntervalSpec band = IntervalSpec::half_open(Rational(1, 3), Rational(2, 3));
    ck.eq("Ycrucial.range", sz(b3.filter([&](std::int64_t v) { return !band.contains(v, n); })), 0);
    ck.eq("Ycrucial.disjoint", sz(set_intersection(b3, a3)), 0);
  });

  // Without its preconditions B2 is checked on the normalized sub-instance.
  {
    const IntSet removed = b2_obstructions(inst);
    const ProblemInstance sub = removed.empty() ? inst : normalize_for_b2(inst);
    ck.guarded("B_2equals", [&] {
      const MappedSet b2 = build_b2(sub);
      auto& c = ck.eq("B_2equals", sz(b2), sz(slice(sub, IntervalSpec::closed(0, Rational(1, 2)))));
      if (!removed.empty()) c.note = "normalized instance, removed " + std::to_string(removed.size());
    });
  }

  // Multiples of A_[2/3] dilated into (4n/3, 2n], one check per class.
  const IntervalSpec top = IntervalSpec::half_open(Rational(4, 3), 2);
  ck.guarded("basicmult", [&] {
    const IntSet b1 = build_b1(inst).image_set;
    const IntSet b1l = b1.filter([&](std::int64_t v) { return 2 * v <= n; });
    const IntSet b1r = b1.filter([&](std::int64_t v) { return 2 * v > n; });
    for (std::int64_t i = 0; i < 3; ++i)
      ck.adopt("basicmult",
               lemma_basicmult_check(inst, Rational(2, 3), mod_class(b1l, i, 3), 4, {(4 * i) % 12, 12}, top),
               "[L,i=" + std::to_string(i) + "]");
    for (std::int64_t i = 0; i < 4; ++i)
      ck.adopt("basicmult",
               lemma_basicmult_check(inst, Rational(2, 3), mod_class(b1r, i, 4), 3, {(3 * i) % 12, 12}, top),
               "[R,i=" + std::to_string(i) + "]");
  });
  return out;
}

// Leaf of the case tree.
inline std::string classify_case(const ProblemInstance& inst) {
  detail::require_property_p(inst);
  const std::int64_t n = inst.n;
  const Rational a2 = detail::sz(slice(inst, Rational(2, 3), 1));
  if (a2 >= detail::frac(n, 2, 9) + Rational(4, 3)) return "1";
  if (a2 >= detail::frac(n, 1, 6) + 24) return "2";
  const IntSet u = slice(inst, Rational(1, 2), 1);
  const IntSet u0 = residue_filter(u, {0, 3}), u1 = residue_filter(u, {1, 3}), u2 = residue_filter(u, {2, 3});
  const bool sub1 = 3 * (u1.size() + u2.size()) >= 2 * u.size();
  const std::string head = sub1 ? "3.1" : "3.2";
  const IntSet& s = sub1 ? u1 : u0;
  const IntSet& t = sub1 ? u2 : u0;
  if (s.empty() || t.empty()) return "3.early-exit";
  const FreimanClassification fc = freiman_classify(s, t);
  if (fc.ap) {
    const std::int64_t d = gcd_star(sumset(s, t));
    if (d == 9) return head + ".1";
    if (d == 6) return head + ".2";
    if (d == 3) return head + ".3";
  }
  return head + (fc.expansion_holds ? ".expansion" : ".other-gcd");
}

namespace detail {

struct AuditState {
  const ProblemInstance& inst;
  const AuditConfig& cfg;
  Checks& ck;
  std::vector<ConstructionSummary>& cons;
  std::int64_t n;
  IntSet a2, amid, u, u0, u1, u2;
  Rational C;  // the additive constant
  Rational dn3;  // delta*n/3

  AuditState(const ProblemInstance& i, const AuditConfig& c, Checks& k, std::vector<ConstructionSummary>& cs)
      : inst(i), cfg(c), ck(k), cons(cs), n(i.n) {
    a2 = slice(inst, Rational(2, 3), 1);
    amid = slice(inst, Rational(1, 2), Rational(2, 3));
    u = slice(inst, Rational(1, 2), 1);
    u0 = residue_filter(u, {0, 3});
    u1 = residue_filter(u, {1, 3});
    u2 = residue_filter(u, {2, 3});
    C = cfg.c_const;
    dn3 = cfg.delta * Rational(n) / Rational(3);
  }

  Rational size_a() const { return sz(inst.a); }
  void keep(std::string name, IntSet s) { cons.push_back({std::move(name), std::move(s)}); }

  // ---------------------------------------------------------------- Case 1
  void case1() {
    ck.ge("case1", sz(a2), frac(n, 2, 9) + Rational(4, 3));
    const IntSet ss = sumset(a2, a2);
    ck.le("case1.trivial", sz(ss), frac(n, 2, 3).ceil());
    ck.le("case1.noexpansion", sz(ss), 3 * sz(a2) - 4);
    ck.eq("case1.gcd", gcd_star(a2), 1);
    const auto q = longest_ap(ss, 1);
    const std::int64_t qlen = q ? q->length : 0;
    ck.ge("case1.Q", qlen, 2 * sz(a2) - 1);
    ck.gt("case1.Qlong", 2 * sz(a2) - 1, frac(n, 4, 9) + 1);
    if (q) keep("Q", IntSet::from_sorted([&] {
                  std::vector<std::int64_t> e;
                  for (std::int64_t i = 0; i < q->length; ++i) e.push_back(q->start + i);
                  return e;
                }()));
    const std::int64_t s = inst.a.min();
    ck.gt("case1.min", s, frac(n, 4, 9) + 1);
    const auto band = inst.a.filter([&](std::int64_t v) { return v > s && v <= 2 * s; });
    ck.le("case1.band", sz(band), (s - 1) / 2);
    ck.le("case1.final", size_a(), Rational(n, 3).ceil());
  }

  // ---------------------------------------------------------------- Case 2
  void case2() {
    ck.ge("case2", sz(a2), frac(n, 1, 6) + 24);
    ck.lt("case2", sz(a2), frac(n, 2, 9) + Rational(4, 3), true, "[upper]");
    const std::int64_t lo = 2 * n / 3;
    const Container box = Container::interval(lo, n - lo);
    bool q12 = true;
    for (std::int64_t j = 0; j < 12; ++j) {
      CheckResult c = doubling_bound_check(a2, box, 12, j);
      q12 = q12 && c.hypothesis_met;
      ck.adopt("q12bound", std::move(c), "[j=" + std::to_string(j) + "]");
    }
    const IntSet b1 = build_b1(inst).image_set;
    keep("B1", b1);
    const IntSet b1l = b1.filter([&](std::int64_t v) { return 2 * v <= n; });
    const IntSet b1r = b1.filter([&](std::int64_t v) { return 2 * v > n; });
    for (std::int64_t i = 0; i < 3; ++i)
      ck.le("go1", sz(a2) + 6 * sz(mod_class(b1l, i, 3)), frac(n, 1, 3) + 12, q12, "[i=" + std::to_string(i) + "]");
    for (std::int64_t i = 0; i < 4; ++i)
      ck.le("go2", sz(a2) + 6 * sz(mod_class(b1r, i, 4)), frac(n, 1, 3) + 12, q12, "[i=" + std::to_string(i) + "]");

    auto [even, odd] = split_even_odd(a2);
    const bool odd_primary = 2 * odd.size() >= a2.size();
    case2_orientation(odd_primary ? odd : even, b1, b1l, b1r, box);
    ck.alt = true;
    case2_orientation(odd_primary ? even : odd, b1, b1l, b1r, box);
    ck.alt = false;
  }

  void case2_orientation(const IntSet& x, const IntSet& b1, const IntSet& b1l, const IntSet& b1r,
                         const Container& box) {
    if (x.size() < 2) return;
    ck.eq("case2.gcd", gcd_star(x), 2, sz(x) >= frac(n, 1, 12) + 12);
    const IntSet xx = sumset(x, x);
    const bool expansion = static_cast<std::int64_t>(xx.size()) >= 3 * static_cast<std::int64_t>(x.size()) - 3;
    if (!expansion) {
      const auto q = longest_ap(xx, 2);
      ck.ge("Qdefi", q->length, 2 * sz(x) - 1);
      const std::int64_t len = std::min<std::int64_t>(q->length, static_cast<std::int64_t>(a2.size()) - 1);
      std::vector<std::int64_t> thirds, quarters;
      for (std::int64_t i = 0; i < len; ++i) {
        const std::int64_t v = q->start + 2 * i;
        if (v % 3 == 0) thirds.push_back(v / 3);
        if (v % 4 == 0) quarters.push_back(v / 4);
      }
      const IntSet q3 = IntSet::from_sorted(thirds), q4 = IntSet::from_sorted(quarters);
      ck.eq("Qdisjoint", sz(set_intersection(q3, q4)), 0);
      const IntSet ap = set_union(q3, q4);
      ck.ge("A'sizebound1", sz(ap), Rational(5, 6) * sz(a2) - 2);
      CheckResult m6 = doubling_bound_check(a2, box, 6, 3);
      const bool hyp6 = m6.hypothesis_met;
      ck.adopt("3Modulo6many", std::move(m6));
      std::vector<std::int64_t> third6;
      for (auto w : sumset(a2, a2))
        if (w % 6 == 3) third6.push_back(w / 3);
      const IntSet app = set_union(ap, IntSet::from_sorted(third6));
      keep("A''", app);
      ck.gt("Aprimebound", sz(app), Rational(7, 6) * sz(a2) - frac(n, 1, 36) - 4, hyp6);
      ck.eq("A''B1disjoint", sz(set_intersection(app, b1)), 0);
      ck.le("A''B1size", sz(app) + sz(b1), Rational(n, 3).ceil());
    } else {
      ck.ge("O_1expansionsum", sz(xx), 3 * sz(x) - 3);
      const IntSet l0 = mod_class(b1l, 0, 3), l1 = mod_class(b1l, 1, 3), l2 = mod_class(b1l, 2, 3);
      const IntSet r2 = mod_class(b1r, 2, 4);
      ck.gt("B_1LRbound", sz(l0) + sz(l1) + sz(l2) + sz(r2), sz(b1) / 2 - 6);
      const std::vector<IntSet> parts = {dilate(4, l0), dilate(4, l1), dilate(4, l2), dilate(3, r2), xx};
      IntSet all;
      Rational total(0);
      for (const auto& p : parts) {
        all = set_union(all, p);
        total = total + sz(p);
      }
      ck.eq("evenpack.disjoint", sz(all), total);
      const IntervalSpec top = IntervalSpec::half_open(Rational(4, 3), 2);
      std::int64_t evens = 0;
      for (std::int64_t v = 4 * n / 3 + 1; v <= 2 * n; ++v)
        if (v % 2 == 0 && top.contains(v, n)) ++evens;
      ck.le("evenpack", total, evens);
    }
    ck.lt("case2.final", size_a(), frac(n, 1, 3) + 1);
  }

  // ---------------------------------------------------------------- Case 3
  void case3_common() {
    ck.lt("case3", sz(a2), frac(n, 1, 6) + 24);
    // worst a for |A n (n-a, n]| > (1/3 - delta) a
    {
      Rational worst_gap(0);
      std::int64_t worst_a = 1, worst_cnt = 0;
      std::int64_t cnt = 0;
      const Rational rate = Rational(1, 3) - cfg.delta;
      bool first = true;
      for (std::int64_t a = 1; a <= n; ++a) {
        if (inst.a.contains(n - a + 1)) ++cnt;
        const Rational gap = Rational(cnt) - rate * Rational(a);
        if (first || gap < worst_gap) worst_gap = gap, worst_a = a, worst_cnt = cnt, first = false;
      }
      auto& c = ck.gt("inductionbound", worst_cnt, rate * Rational(worst_a));
      c.note = "worst a=" + std::to_string(worst_a);
    }
    {
      Rational worst_gap(0);
      std::int64_t wk = 2, wl = 1, wc = 0;
      bool first = true;
      for (std::int64_t k = 2; k <= n; ++k) {
        std::vector<std::int64_t> mk;
        for (std::int64_t m = k; m <= n; m += k)
          if (inst.a.contains(m)) mk.push_back(m);
        for (std::int64_t l = 1; k * l <= n; ++l) {
          const auto c = std::upper_bound(mk.begin(), mk.end(), n / l) - mk.begin();
          const Rational gap = Rational(n, 3 * k * l) + C - Rational(static_cast<std::int64_t>(c));
          if (first || gap < worst_gap) worst_gap = gap, wk = k, wl = l, wc = c, first = false;
        }
      }
      auto& c = ck.le("inductionboundmultiples", wc, Rational(n, 3 * wk * wl) + C);
      c.note = "worst k=" + std::to_string(wk) + " l=" + std::to_string(wl);
    }
    ck.ge("A_2genelowe", sz(amid), frac(n, 1, 48) - 17);

    const IntSet zh = build_z_half(inst);
    keep("Z_1/2", zh);
    ck.le("jajaja", size_a() - sz(amid), sz(a2) + sz(zh) + frac(n, 1, 16) + 3);
    const IntSet x1 = mod_class(a2, 1, 4), x3 = mod_class(a2, 3, 4);
    ck.le("jaja1", sz(mod_class(a2, 1, 2)), frac(n, 1, 12) + 1, x1.empty() || x3.empty());
    ck.le("jajafinal", sz(a2) + sz(zh), frac(n, 1, 4) + 14);

    const IntSet b1 = build_b1(inst).image_set;
    keep("B1", b1);
    keep("A'''", build_a3(inst));
  }

  // One residue class of A_(1/2,1] mod 3 empty.
  void early_exit() {
    ck.le("yaya0", sz(inst.a.filter([](std::int64_t v) { return v % 3 == 0; })), frac(n, 1, 9) + C);
    const std::int64_t r = u2.empty() ? 1 : 2;
    const IntSet& w = r == 1 ? u1 : u2;
    const MappedSet c1 = build_c1(inst);
    keep("C1", c1.image_set);
    const Container box = class_container(n, r);
    ck.le("yaya1", sz(mod_class(c1.image_set, (2 * r) % 3, 3)) + sz(w) / 2 - 1, frac(n, 1, 12) + 1,
          doubling_hypothesis(w, box, 4));
    ck.le("yaya2", sz(mod_class(c1.image_set, r, 3)) + Rational(2, 5) * sz(w) - 1, frac(n, 1, 10) + 1,
          doubling_hypothesis(w, box, 5));
    ck.le("nonempty.final", size_a(), frac(n, 14, 45) + C + 5);
  }

  // gcd*(S+T) = 9. `res` is the residue of S+T mod 9.
  void gcd9(const IntSet& s, const IntSet& t, bool sub1) {
    std::int64_t res = (s.min() + t.min()) % 9;
    if (sub1) {
      ck.le("classbound", 2 * sz(u0), sz(u1) + sz(u2), true, "[U0]");
      ck.le("classbound", sz(u1), Rational(n, 18).ceil(), true, "[U1]");
      ck.le("classbound", sz(u2), Rational(n, 18).ceil(), true, "[U2]");
    } else {
      ck.eq("nonzero9", res == 0 ? 1 : 0, 0);
      ck.le("Ubound9", sz(u), 3 * Rational(n, 18).ceil());
    }
    const IntSet low_half = slice(inst, IntervalSpec::closed(0, Rational(1, 2)));
    if (res == 0) {
      const MappedSet c1p = build_c1_prime(inst);
      keep("C1'", c1p.image_set);
      ck.le("dada0", sz(low_half), sz(c1p) + dn3 + 2);
      ck.le("dada1", sz(u1) + sz(u2) + sz(c1p), 8 * Rational(n, 36).ceil(), sub1);
      ck.le("dada.final", size_a(), frac(n, 5, 18) + dn3 + 11);
      return;
    }
    const IntSet a3 = build_a3(inst);
    const std::int64_t cls = res / 3;
    std::int64_t missing = 0;
    for (std::int64_t v = n / 3 + 1; 3 * v <= 2 * n; ++v)
      if (v % 3 == cls && !a3.contains(v)) ++missing;
    ck.le("zaza0", missing, dn3 + 2);
    const MappedSet c1 = build_c1(inst);
    keep("C1", c1.image_set);
    ck.le("zaza1", sz(c1), Rational(n, 36).ceil() + Rational(n, 18).ceil() + dn3 + 2);
    ck.le("zaza2", sz(low_half.filter([](std::int64_t v) { return v % 3 == 0; })), frac(n, 1, 18) + C);
    ck.le("zaza.final", size_a(), frac(n, 11, 36) + dn3 + C + 7);
  }

  // gcd*(S+T) = 6.
  void gcd6(const IntSet& s, const IntSet& t, const APDescriptor& q, bool sub1) {
    ck.ge("Qlength", q.length, sz(s) + sz(t) - 1);
    ck.ge("Qlength", q.length, Rational(2, 3) * sz(u) - 1, true, "[U]");
    const IntSet b1 = build_b1(inst).image_set;
    auto [eb, ob] = split_even_odd(b1);
    const Rational evens_cap = frac(n, 1, 6) + 1;
    if (q.start % 6 == 0) {
      ck.le("eq1", sz(eb), evens_cap - q.length);
      const IntSet ob_low = ob.filter([&](std::int64_t v) { return 2 * v <= n; });
      ck.le("shii", sz(ob), sz(amid) + sz(ob_low));
      ck.le("eq2", sz(ob) - sz(amid), frac(n, 1, 12) + 1 - frac(n, 1, 100));
      ck.le("eq.final", size_a(), frac(n, 1, 3) - frac(n, 1, 100) + 16);
    } else {
      ck.le("oddA'", sz(ob), evens_cap - q.length);
      ck.le("evenA'", sz(eb), evens_cap - sz(u0));
      ck.le("oddeven.final", size_a(), frac(n, 1, 3) + 3 - sz(amid), sub1);
    }
  }

  // gcd*(S+T) = 3, on the normalized sub-instance.
  void gcd3(const APDescriptor& q) {
    const IntSet removed = b2_obstructions(inst);
    auto& nc = ck.le("normalization", sz(removed), 4 * cfg.delta * Rational(n));
    nc.note = "removed " + std::to_string(removed.size());
    const ProblemInstance sub = normalize_for_b2(inst);
    const MappedSet b2 = build_b2(sub);
    keep("B2", b2.image_set);
    auto [b2l, b2r] = split_b2(b2, n);
    const Rational asub = sz(sub.a);
    ck.eq("B_2decompo", asub, sz(u) + sz(b2));
    for (std::int64_t i : {1, 3})
      ck.le("Coddu", sz(b2l) + sz(mod_class(a2, i, 4)), frac(n, 1, 12) + 3, true, "[i=" + std::to_string(i) + "]");
    const bool both = !mod_class(a2, 1, 4).empty() && !mod_class(a2, 3, 4).empty();
    const bool e4 = ck.le("expands4", 2 * sz(b2r) + sz(a2), frac(n, 1, 3) + 4).holds;
    const bool ne4 = ck.le("noexpands4u", sz(b2) + sz(a2), frac(n, 1, 4) + 4).holds;
    ck.le("divideby4", 1, Rational((e4 ? 1 : 0) + (ne4 ? 1 : 0))).note = "number of alternatives that hold";
    (void)both;
    ck.ge("A_2case1", sz(amid), frac(n, 1, 12) - 4, ne4);
    ck.le("B2Lbound", sz(b2l), frac(n, 1, 36) + 1);
    ck.le("AminusB", asub - sz(amid), frac(n, 7, 36) + 3 + sz(a2) / 2, e4);
    ck.ge("Bbound", sz(amid), frac(n, 5, 36) - sz(a2) / 2 - 3, e4);
    const Rational m = std::min(frac(n, 1, 12) - 4, frac(n, 5, 36) - sz(a2) / 2 - 3);
    ck.ge("A_2T", sz(amid), m);
    ck.ge("minineq", sz(u), std::min(frac(n, 1, 12) - 4 + sz(a2), frac(n, 5, 36) + sz(a2) / 2 - 3));
    ck.ge("3.1.3Q", q.length, frac(n, 5, 36) - 5);
    const Rational cut = frac(n, 5, 12) - 15;
    ck.eq("nomult3", sz(sub.a.filter([&](std::int64_t v) { return v % 3 == 0 && Rational(v) <= cut; })), 0);
    std::vector<std::int64_t> iv;
    for (std::int64_t i = 0; i < q.length; ++i) iv.push_back((q.start + 3 * i) / 3);
    const IntSet interval = IntSet::from_sorted(iv);
    keep("I", interval);
    ck.eq("IB1disjoint", sz(set_intersection(interval, build_b1(sub).image_set)), 0);
    const std::int64_t im = interval.min(), iM = interval.max();
    const Rational en = cfg.epsilon * Rational(n);
    if (Rational(im) > frac(n, 7, 18) + en)
      ck.le("branch(i)", asub, frac(n, 1, 3) - en / 3 + 22);
    else if (2 * iM <= n)
      ck.le("branch(ii)", asub, frac(n, 11, 36) + 16);
    else
      ck.le("branch(ii')", asub, frac(n, 35, 108) + en / 3 + 23);
  }

  void expansion(const IntSet& s, const IntSet& t, bool sub1) {
    const IntSet st = sumset(s, t);
    ck.ge("freimaindouble", sz(st), sz(s) + sz(t) + std::min(sz(s), sz(t)) - 3);
    const MappedSet z = build_z(inst);
    const ZPartition p = partition_z(inst, z);
    const IntSet zrg = build_z_rg(p);
    keep("Z", z.image_set);
    keep("Z_RG", zrg);
    const Rational x = sz(mod_class(a2, 1, 4)), y = sz(mod_class(a2, 3, 4));
    const Rational z0 = sz(mod_class(a2, 0, 4)), w = sz(mod_class(a2, 2, 4));
    const bool xy = x > Rational(0) && y > Rational(0);
    const Rational zo = sz(p.z_odd_left), zr = sz(zrg);
    const bool h1 = ck.le("rara1", zo + zr + sz(a2), frac(n, 1, 4) + 4).holds;
    const Rational m2 = std::max({x + y + std::min(x, y), 3 * z0, 3 * w});
    const bool h2 = ck.le("rara2", zr, frac(n, 1, 6) + 5 - m2).holds;
    const Rational m3 = std::max({x + y, 2 * z0, 2 * w});
    const bool h3 = ck.le("rara4", zr, frac(n, 1, 6) + 2 - m3, xy).holds;
    ck.le("lemmaZ", 1, Rational((h1 ? 1 : 0) + (h2 ? 1 : 0) + (h3 ? 1 : 0))).note =
        "number of statements that hold";
    {
      const IntSet s4 = sumset(a2, a2).filter([](std::int64_t v) { return v % 4 == 0; });
      const std::int64_t d = s4.size() >= 2 ? gcd_star(s4) : 4;
      const auto ap = longest_ap(s4, d);
      ck.ge("lemmaZ.AP", ap ? ap->length : 0, sz(a2) / 2 - 1, h3);
    }
    const Rational zb = sz(p.z_b);
    if (h1 || h2)
      ck.ge("cor11", sz(amid) + zb, frac(n, 1, 12) - 8);
    else
      ck.ge("cor120", sz(amid) + zb, frac(n, 1, 24) - 11);
    ck.eq("bababa1", size_a() - sz(amid) - zb, sz(a2) + zo + zr);
    const IntSet low23 = slice(inst, IntervalSpec::closed(0, Rational(2, 3)));
    if (!sub1) {
      ck.ge("goodineqnew", Rational(n, 3).ceil(), sz(low23) + zb + 3 * sz(u0) - 3);
      ck.le("3.2.expansion", size_a() - 3 + sz(amid), Rational(n, 3).ceil());
      ck.le("expansion.final", size_a(), frac(n, 1, 3) + 3);
      return;
    }
    ck.le("goodineqnew", sz(low23) + zb + sz(s) + sz(t) + std::min(sz(s), sz(t)) - 3, Rational(n, 3).ceil());
    const bool one_primary = u1.size() >= u2.size();
    expansion_orientation(one_primary ? 1 : 2, zb, h1 || h2);
    ck.alt = true;
    expansion_orientation(one_primary ? 2 : 1, zb, h1 || h2);
    ck.alt = false;
    if (h1 || h2)
      ck.le("expansion.final", size_a(), frac(n, 14, 45) + C + 30);
    else if (sz(a2) <= frac(n, 1, 9) + 4)
      ck.le("expansion.final", size_a(), frac(n, 13, 40) + C + 22, true, "[small]");
    else
      ck.le("expansion.final", size_a(), frac(n, 239, 720) + C + 22, true, "[large]");
  }

  // r is the residue class (mod 3) playing the larger role.
  void expansion_orientation(std::int64_t r, const Rational& zb, bool h12) {
    const IntSet& big = r == 1 ? u1 : u2;
    const IntSet& small = r == 1 ? u2 : u1;
    ck.le("Mainbound", sz(big) + 2 * sz(small) + zb - 3, sz(a2));
    ck.le("mamama0", sz(small), sz(a2) / 3 - Rational(2, 3) * sz(amid) - zb + 3);
    ck.gt("A_u,1dense", sz(big), frac(n, 1, 12) + frac(n, 1, 100));
    const IntSet bh = build_b_half(inst).image_set;
    const Container box = class_container(n, r);
    const IntSet bc = mod_class(bh, (2 * r) % 3, 3), br = mod_class(bh, r, 3);
    ck.le("final1", sz(bc), frac(n, 1, 12) + 2 - sz(big) / 2, doubling_hypothesis(big, box, 4));
    const bool h5 = doubling_hypothesis(big, box, 5);
    ck.le("final2", sz(br), frac(n, 1, 10) + 2 - Rational(2, 5) * sz(big), h5);
    const IntSet br_low = br.filter([&](std::int64_t v) { return 5 * v <= 2 * n; });
    ck.lt("lemmaB_bound", sz(br_low) + Rational(2, 5) * sz(big) - 1, frac(n, 1, 15) + 1, h5);
    if (!h12 && sz(a2) > frac(n, 1, 9) + 4)
      ck.le("final2case3", sz(br), frac(n, 11, 90) + 4 - Rational(2, 5) * sz(big) - sz(a2) / 6);
  }

  void other_gcd(std::int64_t d) {
    auto& c = ck.eq("gcd.other", 0, 1);
    c.note = "gcd* = " + std::to_string(d) + ", outside {3,6,9}";
  }
};

}  // namespace detail

inline CaseReport audit(const ProblemInstance& inst, const AuditConfig& cfg = {}) {
  using namespace detail;
  cfg.validate();
  require_property_p(inst);
  CaseReport rep;
  rep.n = inst.n;
  rep.set = inst.a;
  rep.config = cfg;
  rep.path = classify_case(inst);
  rep.checks = verify_unconditional(inst);
  Checks ck(rep.checks);
  AuditState st(inst, cfg, ck, rep.constructions);
  const std::string& path = rep.path;
  if (path == "1") {
    st.case1();
  } else if (path == "2") {
    st.case2();
  } else {
    st.case3_common();
    const bool sub1 = path.rfind("3.2", 0) != 0;
    if (sub1)
      ck.ge("subcase3.1", 3 * (sz(st.u1) + sz(st.u2)), 2 * sz(st.u));
    else
      ck.lt("subcase3.2", 3 * (sz(st.u1) + sz(st.u2)), 2 * sz(st.u));
    if (path == "3.early-exit") {
      st.early_exit();
    } else {
      const IntSet& s = sub1 ? st.u1 : st.u0;
      const IntSet& t = sub1 ? st.u2 : st.u0;
      if (sub1)
        ck.le("A_2lowe", sz(st.amid), sz(st.a2) / 2 + 1);
      else
        ck.ge("A_u,0bound", sz(st.u0), (Rational(1, 3) - cfg.delta) * frac(inst.n, 1, 6));
      const FreimanClassification fc = freiman_classify(s, t);
      const char leaf = path.back();
      if (leaf == '1') st.gcd9(s, t, sub1);
      else if (leaf == '2') st.gcd6(s, t, *fc.ap, sub1);
      else if (leaf == '3') st.gcd3(*fc.ap);
      else if (path.size() > 4 && path.compare(4, std::string::npos, "expansion") == 0) st.expansion(s, t, sub1);
      else st.other_gcd(gcd_star(sumset(s, t)));
    }
  }
  rep.unconditional_pass = unconditional_pass(rep.checks);
  return rep;
}

}  // namespace propp
