#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "propp/bits.hpp"
#include "propp/error.hpp"
#include "propp/rational.hpp"

namespace propp {

// Strictly increasing sequence of non-negative integers.
class IntSet {
 public:
  using value_type = std::int64_t;
  using const_iterator = std::vector<value_type>::const_iterator;

  IntSet() = default;
  IntSet(std::initializer_list<value_type> il) : IntSet(std::vector<value_type>(il)) {}
  explicit IntSet(std::vector<value_type> v) : e_(std::move(v)) {
    std::sort(e_.begin(), e_.end());
    e_.erase(std::unique(e_.begin(), e_.end()), e_.end());
    if (!e_.empty() && e_.front() < 0)
      throw Error(ErrorKind::InvalidInstance, "negative element " + std::to_string(e_.front()));
  }

  // Caller guarantees strictly increasing, non-negative input.
  static IntSet from_sorted(std::vector<value_type> v) {
    IntSet s;
    s.e_ = std::move(v);
    return s;
  }

  std::size_t size() const { return e_.size(); }
  bool empty() const { return e_.empty(); }
  const_iterator begin() const { return e_.begin(); }
  const_iterator end() const { return e_.end(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type min() const { return e_.front(); }
  value_type max() const { return e_.back(); }
  const std::vector<value_type>& elements() const { return e_; }

  bool contains(value_type v) const { return std::binary_search(e_.begin(), e_.end(), v); }

  template <class Pred>
  IntSet filter(Pred&& p) const {
    std::vector<value_type> out;
    for (auto v : e_)
      if (p(v)) out.push_back(v);
    return from_sorted(std::move(out));
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(e_[i]);
    }
    return s;
  }

  friend bool operator==(const IntSet&, const IntSet&) = default;
  friend auto operator<=>(const IntSet&, const IntSet&) = default;

 private:
  std::vector<value_type> e_;
};

inline IntSet set_union(const IntSet& a, const IntSet& b) {
  std::vector<std::int64_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IntSet::from_sorted(std::move(out));
}

inline IntSet set_intersection(const IntSet& a, const IntSet& b) {
  std::vector<std::int64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IntSet::from_sorted(std::move(out));
}

inline IntSet set_difference(const IntSet& a, const IntSet& b) {
  std::vector<std::int64_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IntSet::from_sorted(std::move(out));
}

namespace detail {
// Above this many bits the sumset falls back to sort-and-unique.
inline constexpr std::int64_t kDenseLimit = std::int64_t{1} << 27;
}  // namespace detail

inline IntSet sumset(const IntSet& x0, const IntSet& y0) {
  if (x0.empty() || y0.empty()) return {};
  const IntSet& x = x0.size() <= y0.size() ? x0 : y0;
  const IntSet& y = x0.size() <= y0.size() ? y0 : x0;
  const std::int64_t top = x.max() + y.max();
  // dense cost ~ |x|*top/64 words, sparse cost ~ |x|*|y|*log
  if (top < detail::kDenseLimit && static_cast<double>(y.size()) * 512.0 > static_cast<double>(top)) {
    Bits yb(static_cast<std::size_t>(y.max()) + 1), out(static_cast<std::size_t>(top) + 1);
    for (auto v : y) yb.set(static_cast<std::size_t>(v));
    for (auto u : x) out.or_shifted(yb, static_cast<std::size_t>(u));
    std::vector<std::int64_t> e;
    e.reserve(out.count());
    out.for_each([&](std::size_t i) { e.push_back(static_cast<std::int64_t>(i)); });
    return IntSet::from_sorted(std::move(e));
  }
  std::vector<std::int64_t> e;
  e.reserve(x.size() * y.size());
  for (auto u : x)
    for (auto v : y) e.push_back(u + v);
  return IntSet(std::move(e));
}

// May contain negatives, so it is a plain sorted vector.
inline std::vector<std::int64_t> difference_set(const IntSet& x, const IntSet& y) {
  std::vector<std::int64_t> e;
  e.reserve(x.size() * y.size());
  for (auto u : x)
    for (auto v : y) e.push_back(u - v);
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

inline IntSet dilate(const Rational& q, const IntSet& x) {
  if (q <= Rational(0)) throw Error(ErrorKind::NonIntegerDilation, "dilation factor must be positive");
  std::vector<std::int64_t> e;
  e.reserve(x.size());
  for (auto u : x) {
    Rational r = q * Rational(u);
    if (!r.is_integer())
      throw Error(ErrorKind::NonIntegerDilation, q.str() + "*" + std::to_string(u) + " is not an integer");
    e.push_back(r.num());
  }
  return IntSet::from_sorted(std::move(e));
}

// gcd of all pairwise differences; 0 when |x| <= 1.
inline std::int64_t gcd_star(const IntSet& x) {
  std::int64_t g = 0;
  for (std::size_t i = 1; i < x.size(); ++i) g = std::gcd(g, x[i] - x[0]);
  return g;
}

inline std::int64_t diam(const IntSet& x) {
  if (x.empty()) throw Error(ErrorKind::EmptySet, "diam of empty set");
  return x.max() - x.min();
}

// Interval with rational endpoints; in slice() the endpoints are scaled by n.
struct IntervalSpec {
  Rational lo{0};
  Rational hi{0};
  bool lo_open = true;
  bool hi_open = false;

  // (lo, hi], the usual shape.
  static IntervalSpec half_open(Rational lo, Rational hi) { return {lo, hi, true, false}; }
  static IntervalSpec closed(Rational lo, Rational hi) { return {lo, hi, false, false}; }

  // Membership of m in the interval scaled by `scale`, decided exactly.
  bool contains(std::int64_t m, std::int64_t scale = 1) const {
    using i128 = __int128;
    const i128 lhs_lo = i128(m) * lo.den(), rhs_lo = i128(lo.num()) * scale;
    const i128 lhs_hi = i128(m) * hi.den(), rhs_hi = i128(hi.num()) * scale;
    const bool above = lo_open ? lhs_lo > rhs_lo : lhs_lo >= rhs_lo;
    const bool below = hi_open ? lhs_hi < rhs_hi : lhs_hi <= rhs_hi;
    return above && below;
  }

  // Number of integers in the interval scaled by `scale`.
  std::int64_t integer_count(std::int64_t scale = 1) const {
    Rational a = lo * Rational(scale), b = hi * Rational(scale);
    std::int64_t first = lo_open ? a.floor() + 1 : a.ceil();
    std::int64_t last = hi_open ? b.ceil() - 1 : b.floor();
    return std::max<std::int64_t>(0, last - first + 1);
  }
};

struct ResidueClass {
  std::int64_t a = 0;
  std::int64_t q = 1;

  bool contains(std::int64_t u) const { return ((u % q) + q) % q == a; }
};

inline IntSet residue_filter(const IntSet& x, const ResidueClass& rc) {
  return x.filter([&](std::int64_t u) { return u >= 1 && rc.contains(u); });
}

struct ProblemInstance {
  std::int64_t n = 1;
  IntSet a;

  ProblemInstance() = default;
  ProblemInstance(std::int64_t n_, IntSet a_) : n(n_), a(std::move(a_)) {
    if (n < 1) throw Error(ErrorKind::InvalidInstance, "n must be positive");
    if (!a.empty() && (a.min() < 1 || a.max() > n))
      throw Error(ErrorKind::InvalidInstance, "elements must lie in [1, " + std::to_string(n) + "]");
  }
};

inline IntSet slice(const ProblemInstance& inst, const IntervalSpec& iv) {
  return inst.a.filter([&](std::int64_t m) { return iv.contains(m, inst.n); });
}

// A_(lo, hi] for the instance.
inline IntSet slice(const ProblemInstance& inst, Rational lo, Rational hi) {
  return slice(inst, IntervalSpec::half_open(lo, hi));
}

// Comma-separated decimal integers, whitespace allowed.
inline IntSet parse_set_literal(std::string_view text) {
  std::vector<std::int64_t> e;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size()) throw Error(ErrorKind::ParseError, "bad integer '" + tok + "'");
    e.push_back(v);
    tok.clear();
  };
  for (char c : text) {
    if (c == ',') {
      if (tok.empty()) throw Error(ErrorKind::ParseError, "empty list entry");
      flush();
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      continue;
    } else {
      tok += c;
    }
  }
  flush();
  return IntSet(std::move(e));
}

// One integer per line; '#' starts a comment.
inline IntSet read_set_stream(std::istream& in) {
  std::vector<std::int64_t> e;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t pos = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size()) throw Error(ErrorKind::ParseError, "bad integer '" + tok + "'");
      e.push_back(v);
    }
  }
  return IntSet(std::move(e));
}

inline IntSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return read_set_stream(in);
}

}  // namespace propp
