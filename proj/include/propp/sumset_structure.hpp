#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "propp/int_set.hpp"
#include "propp/property_p.hpp"
#include "propp/rational.hpp"

namespace propp {

struct APDescriptor {
  std::int64_t start = 0;
  std::int64_t diff = 1;
  std::int64_t length = 0;

  friend bool operator==(const APDescriptor&, const APDescriptor&) = default;
};

struct FreimanClassification {
  bool expansion_holds = false;
  std::optional<APDescriptor> ap;
  std::size_t s_size = 0;
  std::size_t t_size = 0;
  std::size_t sum_size = 0;
};

enum class Relation { Less, LessEq, Equal };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Equal: return "=";
  }
  return "?";
}

inline bool evaluate(const Rational& lhs, Relation r, const Rational& rhs) {
  switch (r) {
    case Relation::Less: return lhs < rhs;
    case Relation::LessEq: return lhs <= rhs;
    case Relation::Equal: return lhs == rhs;
  }
  return false;
}

enum class CheckKind { Unconditional, Conditional };

inline const char* to_string(CheckKind k) {
  return k == CheckKind::Unconditional ? "unconditional" : "conditional";
}

// One evaluated inequality. A ">=" statement is stored flipped as rhs <= lhs.
struct CheckResult {
  std::string name;
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::LessEq;
  bool holds = false;
  std::string anchor;
  CheckKind kind = CheckKind::Unconditional;
  bool hypothesis_met = true;
  std::string note;

  // Failed with its hypothesis in force.
  bool failed() const { return hypothesis_met && !holds; }
};

inline CheckResult make_check(std::string name, Rational lhs, Relation rel, Rational rhs,
                              std::string anchor = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.relation = rel;
  c.holds = evaluate(lhs, rel, rhs);
  c.anchor = std::move(anchor);
  return c;
}

// Longest run start, start+diff, ... inside x; ties go to the smallest start.
inline std::optional<APDescriptor> longest_ap(const IntSet& x, std::int64_t diff) {
  if (diff < 1) throw Error(ErrorKind::PreconditionViolation, "diff must be positive");
  if (x.empty()) return std::nullopt;
  const auto& e = x.elements();
  std::vector<std::int64_t> len(e.size(), 1);
  APDescriptor best{e[0], diff, 1};
  std::size_t j = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::int64_t want = e[i] - diff;
    while (j < i && e[j] < want) ++j;
    if (j < i && e[j] == want) len[i] = len[j] + 1;
    if (len[i] > best.length) best = {e[i] - (len[i] - 1) * diff, diff, len[i]};
  }
  return best;
}

inline std::string dump_pair(const IntSet& s, const IntSet& t) {
  return "S={" + s.str() + "} T={" + t.str() + "}";
}

inline FreimanClassification freiman_classify(const IntSet& s, const IntSet& t) {
  if (s.empty() || t.empty()) throw Error(ErrorKind::PreconditionViolation, "freiman_classify needs non-empty sets");
  const IntSet st = sumset(s, t);
  FreimanClassification fc;
  fc.s_size = s.size();
  fc.t_size = t.size();
  fc.sum_size = st.size();
  const auto ss = static_cast<std::int64_t>(s.size()), ts = static_cast<std::int64_t>(t.size());
  fc.expansion_holds = static_cast<std::int64_t>(st.size()) >= ss + ts + std::min(ss, ts) - 3;
  const std::int64_t d = st.size() >= 2 ? gcd_star(st) : 1;
  auto ap = longest_ap(st, d);
  if (ap && ap->length >= ss + ts - 1) fc.ap = ap;
  if (!fc.expansion_holds && !fc.ap)
    throw Error(ErrorKind::TheoremCounterexample, "Freiman dichotomy fails for " + dump_pair(s, t));
  return fc;
}

// The four hypotheses of the diff-1 progression theorem; the conclusion
// is appended (and enforced) only when all four hold.
inline std::vector<CheckResult> bg_hypotheses(const IntSet& s, const IntSet& t) {
  if (s.empty() || t.empty()) throw Error(ErrorKind::PreconditionViolation, "bg_hypotheses needs non-empty sets");
  const IntSet st = sumset(s, t);
  const auto S = static_cast<std::int64_t>(s.size()), T = static_cast<std::int64_t>(t.size());
  const auto ST = static_cast<std::int64_t>(st.size());
  std::vector<CheckResult> out;
  out.push_back(make_check("bg.diam", diam(t), Relation::LessEq, diam(s), "diam T <= diam S"));
  out.push_back(make_check("bg.gcd", gcd_star(st), Relation::Equal, 1, "gcd*(S+T)=1"));
  out.push_back(make_check("bg.size", ST, Relation::LessEq, S + 2 * T - 4, "|S+T| <= |S|+2|T|-4"));
  if (gcd_star(s) == 1)
    out.push_back(make_check("bg.alt", gcd_star(s), Relation::Equal, 1, "either gcd*(S)=1 or |S+T| <= 2|S|+|T|-3"));
  else
    out.push_back(make_check("bg.alt", ST, Relation::LessEq, 2 * S + T - 3, "either gcd*(S)=1 or |S+T| <= 2|S|+|T|-3"));
  bool all = true;
  for (const auto& c : out) all = all && c.holds;
  if (all) {
    const auto ap = longest_ap(st, 1);
    auto c = make_check("bg.conclusion", S + T - 1, Relation::LessEq, ap->length,
                        "contains an arithmetic progression with common difference 1");
    if (!c.holds)
      throw Error(ErrorKind::TheoremCounterexample, "progression theorem fails for " + dump_pair(s, t));
    out.push_back(std::move(c));
  }
  return out;
}

inline std::int64_t residue_sum_count(const IntSet& u, std::int64_t q, std::int64_t a) {
  if (q < 1) throw Error(ErrorKind::PreconditionViolation, "q must be positive");
  const ResidueClass rc{((a % q) + q) % q, q};
  std::int64_t c = 0;
  for (auto w : sumset(u, u))
    if (rc.contains(w)) ++c;
  return c;
}

// U inside [k+1, k+m] (interval) or {k+d, ..., k+md} (progression).
struct Container {
  enum class Shape { Interval, Progression } shape = Shape::Interval;
  std::int64_t k = 0;
  std::int64_t d = 1;
  std::int64_t m = 0;

  static Container interval(std::int64_t k, std::int64_t m) { return {Shape::Interval, k, 1, m}; }
  static Container ap(std::int64_t k, std::int64_t d, std::int64_t m) { return {Shape::Progression, k, d, m}; }

  bool contains(std::int64_t u) const {
    const std::int64_t off = u - k;
    return off >= d && off <= m * d && off % d == 0;
  }
};

// Hypothesis |U| >= m/2 + q/2; conclusion: at least 2|U|/q - 1 sums in class a mod q.
inline CheckResult doubling_bound_check(const IntSet& u, const Container& box, std::int64_t q, std::int64_t a) {
  if (q < 1) throw Error(ErrorKind::PreconditionViolation, "q must be positive");
  if (box.shape == Container::Shape::Progression && std::gcd(box.d, q) != 1)
    throw Error(ErrorKind::CoprimalityViolation,
                "gcd(" + std::to_string(box.d) + "," + std::to_string(q) + ") > 1");
  for (auto v : u)
    if (!box.contains(v)) throw Error(ErrorKind::ContainerMismatch, std::to_string(v) + " outside container");
  const Rational size(static_cast<std::int64_t>(u.size()));
  const bool hyp = size >= Rational(box.m, 2) + Rational(q, 2);
  auto c = make_check(box.shape == Container::Shape::Interval ? "doublinglemma" : "doublinglemmad",
                      size * Rational(2, q) - Rational(1), Relation::LessEq, residue_sum_count(u, q, a),
                      box.shape == Container::Shape::Interval ? "the number of integers in the sumset"
                                                              : "coprime to d");
  c.hypothesis_met = hyp;
  if (!hyp) c.note = "hypothesis not met";
  return c;
}

// |B| + |(A_(alpha,1] + A_(alpha,1]) n I n class| < |I|/q + 1, with I scaled by n
// and |I| its number of integers.
inline CheckResult lemma_basicmult_check(const ProblemInstance& inst, const Rational& alpha, const IntSet& b,
                                         std::int64_t k, const ResidueClass& rc, const IntervalSpec& iv,
                                         std::string name = "basicmult") {
  if (k < 1 || rc.q < 1) throw Error(ErrorKind::PreconditionViolation, "k and q must be positive");
  if (auto w = find_violation(inst.a))
    throw Error(ErrorKind::HypothesisViolation, "A lacks property P, witness " + w->str());
  const IntSet low = slice(inst, IntervalSpec::closed(0, alpha));
  for (auto v : b) {
    const std::int64_t kb = k * v;
    if (!iv.contains(kb, inst.n))
      throw Error(ErrorKind::HypothesisViolation, std::to_string(kb) + " = k*" + std::to_string(v) + " outside I");
    if (!rc.contains(kb))
      throw Error(ErrorKind::HypothesisViolation, std::to_string(kb) + " not in the residue class");
    bool mult = false;
    for (auto d : low)
      if (kb % d == 0) {
        mult = true;
        break;
      }
    if (!mult)
      throw Error(ErrorKind::HypothesisViolation,
                  std::to_string(kb) + " is not a multiple of any element of A_[alpha]");
  }
  const IntSet high = slice(inst, alpha, 1);
  std::int64_t hits = 0;
  for (auto w : sumset(high, high))
    if (iv.contains(w, inst.n) && rc.contains(w)) ++hits;
  const auto len = iv.integer_count(inst.n);
  return make_check(std::move(name), static_cast<std::int64_t>(b.size()) + hits, Relation::Less,
                    Rational(len, rc.q) + Rational(1), "consists exclusively of integer multiples");
}

}  // namespace propp
