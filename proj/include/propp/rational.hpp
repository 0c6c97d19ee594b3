#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <charconv>

#include "propp/error.hpp"

namespace propp {

// Exact num/den with den > 0 and gcd(|num|, den) = 1.
// Intermediate products go through __int128; results must fit in int64.
class Rational {
 public:
  using i128 = __int128;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT implicit
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  // Largest integer <= *this.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(ErrorKind::Overflow, "division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const { return make(-i128(num_), den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 l = i128(a.num_) * b.den_, r = i128(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p", "-p" or "p/q". No decimals.
  static Rational parse(std::string_view s) {
    auto slash = s.find('/');
    auto to_i64 = [&](std::string_view t) {
      std::int64_t v = 0;
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (t.empty() || ec != std::errc() || p != t.data() + t.size())
        throw Error(ErrorKind::ParseError, "bad rational '" + std::string(s) + "'");
      return v;
    };
    if (slash == std::string_view::npos) return Rational(to_i64(s));
    std::int64_t d = to_i64(s.substr(slash + 1));
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(s) + "'");
    return Rational(to_i64(s.substr(0, slash)), d);
  }

 private:
  static Rational make(i128 num, i128 den) {
    Rational r;
    r.assign128(num, den);
    return r;
  }
  void assign(std::int64_t num, std::int64_t den) { assign128(num, den); }
  void assign128(i128 num, i128 den) {
    if (den == 0) throw Error(ErrorKind::Overflow, "zero denominator");
    if (den < 0) num = -num, den = -den;
    i128 a = num < 0 ? -num : num, b = den;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) num /= a, den /= a;
    constexpr i128 lim = INT64_MAX;
    if (num > lim || num < -lim || den > lim) throw Error(ErrorKind::Overflow, "rational out of range");
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace propp
