#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <thread>
#include <vector>

#include "propp/error.hpp"
#include "propp/int_set.hpp"

namespace propp {

struct SearchResult {
  std::int64_t n = 0;
  std::int64_t best_size = 0;
  IntSet best_set;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{0};
};

struct TableRow {
  std::int64_t n = 0;
  std::int64_t f = 0;
  std::int64_t ceil_n_3 = 0;
  std::int64_t floor_n_3_plus_1 = 0;
  std::int64_t ceil_n_2 = 0;
  bool optimal = false;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

inline constexpr std::int64_t kSearchMaxN = 255;
inline constexpr std::int64_t kBruteForceMaxN = 24;
inline constexpr std::int64_t kEnumerateMaxN = 18;

namespace detail {

template <std::size_t W>
struct FixedBits {
  std::array<std::uint64_t, W> w{};

  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool meets(const FixedBits& o) const {
    for (std::size_t i = 0; i < W; ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  // *this |= src << s
  void or_shifted(const FixedBits& src, std::size_t s) {
    const std::size_t ws = s >> 6, bs = s & 63;
    for (std::size_t i = W; i-- > ws;) {
      std::uint64_t v = src.w[i - ws] << bs;
      if (bs && i > ws) v |= src.w[i - ws - 1] >> (64 - bs);
      w[i] |= v;
    }
  }
};

// Descending insertion: when z is tried, every member of S exceeds z, so
// any triple that z could complete has z as its minimum. The pair sums of
// S therefore decide feasibility completely: z fits iff none of
// 3z, 4z, ..., 2n is a sum x + y with x, y in S.
template <std::size_t W>
class BranchAndBound {
 public:
  BranchAndBound(std::int64_t n, std::optional<std::uint64_t> budget) : n_(n), budget_(budget), mult_(n + 1) {
    for (std::int64_t c = 1; c <= n; ++c)
      for (std::int64_t m = 3 * c; m <= 2 * n; m += c) mult_[c].set(static_cast<std::size_t>(m));
  }

  SearchResult run() {
    const auto t0 = std::chrono::steady_clock::now();
    dfs(n_, {}, {});
    SearchResult r;
    r.n = n_;
    r.best_size = static_cast<std::int64_t>(best_.size());
    r.best_set = IntSet(best_);
    r.optimal = !aborted_;
    r.nodes_explored = nodes_;
    r.elapsed = std::chrono::steady_clock::now() - t0;
    return r;
  }

 private:
  void dfs(std::int64_t c, const FixedBits<W>& members, const FixedBits<W>& sums) {
    if (budget_ && nodes_ >= *budget_) {
      aborted_ = true;
      return;
    }
    ++nodes_;
    if (cur_.size() > best_.size()) best_ = cur_;
    std::vector<std::int64_t> feas;
    for (std::int64_t z = c; z >= 1; --z)
      if (!sums.meets(mult_[z])) feas.push_back(z);
    for (std::size_t i = 0; i < feas.size(); ++i) {
      if (cur_.size() + (feas.size() - i) <= best_.size()) break;
      const auto z = feas[i];
      FixedBits<W> m = members, s = sums;
      m.set(static_cast<std::size_t>(z));
      s.or_shifted(m, static_cast<std::size_t>(z));
      cur_.push_back(z);
      dfs(z - 1, m, s);
      cur_.pop_back();
      if (aborted_) return;
    }
  }

  std::int64_t n_;
  std::optional<std::uint64_t> budget_;
  std::vector<FixedBits<W>> mult_;
  std::vector<std::int64_t> cur_, best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

// Exact f(n) by branch and bound. A budget (in nodes) cuts the search
// short; the best set so far comes back with optimal = false.
inline SearchResult max_property_p(std::int64_t n, std::optional<std::uint64_t> node_budget = std::nullopt) {
  if (n < 1) throw Error(ErrorKind::InvalidInstance, "n must be positive");
  if (n > kSearchMaxN) throw Error(ErrorKind::TooLarge, "search supports n <= " + std::to_string(kSearchMaxN));
  if (2 * n < 128) return detail::BranchAndBound<2>(n, node_budget).run();
  return detail::BranchAndBound<8>(n, node_budget).run();
}

// Independent oracle: good[mask] from good[mask minus its lowest element]
// plus a test of that lowest element against the pairs above it.
inline std::int64_t brute_force_max(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidInstance, "n must be positive");
  if (n > kBruteForceMaxN) throw Error(ErrorKind::TooLarge, "brute force supports n <= " + std::to_string(kBruteForceMaxN));
  std::vector<std::vector<std::uint32_t>> bad(static_cast<std::size_t>(n) + 1);
  for (std::int64_t z = 1; z <= n; ++z)
    for (std::int64_t x = z + 1; x <= n; ++x)
      for (std::int64_t y = x; y <= n; ++y)
        if ((x + y) % z == 0) bad[z].push_back((1u << (x - 1)) | (1u << (y - 1)));
  const std::uint32_t total = 1u << n;
  std::vector<std::uint8_t> good(total, 0);
  good[0] = 1;
  std::int64_t best = 0;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    const std::uint32_t rest = mask & (mask - 1);
    if (!good[rest]) continue;
    const auto z = std::countr_zero(mask) + 1;
    bool ok = true;
    for (auto b : bad[z])
      if ((rest & b) == b) {
        ok = false;
        break;
      }
    if (!ok) continue;
    good[mask] = 1;
    best = std::max<std::int64_t>(best, std::popcount(mask));
  }
  return best;
}

// Calls f(IntSet) once for every property-P subset of [n], the empty set
// included, in descending-insertion DFS order.
template <class F>
void enumerate_property_p(std::int64_t n, F&& f) {
  if (n < 1) throw Error(ErrorKind::InvalidInstance, "n must be positive");
  if (n > kEnumerateMaxN) throw Error(ErrorKind::TooLarge, "enumeration supports n <= " + std::to_string(kEnumerateMaxN));
  std::vector<std::uint64_t> mult(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t c = 1; c <= n; ++c)
    for (std::int64_t m = 3 * c; m <= 2 * n; m += c) mult[c] |= std::uint64_t{1} << m;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t c, std::uint64_t members, std::uint64_t sums) -> void {
    f(IntSet(cur));
    for (std::int64_t z = c; z >= 1; --z) {
      if (sums & mult[z]) continue;
      const std::uint64_t m = members | (std::uint64_t{1} << z);
      cur.push_back(z);
      self(self, z - 1, m, sums | (m << z));
      cur.pop_back();
    }
  };
  rec(rec, n, 0, 0);
}

inline std::uint64_t count_property_p(std::int64_t n) {
  std::uint64_t c = 0;
  enumerate_property_p(n, [&](const IntSet&) { ++c; });
  return c;
}

inline TableRow make_row(const SearchResult& r) {
  const std::int64_t n = r.n;
  return {n, r.best_size, (n + 2) / 3, n / 3 + 1, (n + 1) / 2, r.optimal};
}

// Rows lo..hi. Each row is an independent single-threaded search, so the
// output does not depend on `jobs`.
inline std::vector<TableRow> f_table(std::int64_t lo, std::int64_t hi, std::optional<std::uint64_t> budget = std::nullopt,
                                     unsigned jobs = 1) {
  if (lo < 1 || lo > hi) throw Error(ErrorKind::InvalidInstance, "need 1 <= lo <= hi");
  if (hi > kSearchMaxN) throw Error(ErrorKind::TooLarge, "search supports n <= " + std::to_string(kSearchMaxN));
  std::vector<TableRow> rows(static_cast<std::size_t>(hi - lo + 1));
  std::atomic<std::int64_t> next{lo};
  auto work = [&] {
    for (std::int64_t n; (n = next.fetch_add(1)) <= hi;) rows[n - lo] = make_row(max_property_p(n, budget));
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(rows.size())));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return rows;
}

inline void write_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "n,f,ceil_n_3,floor_n_3_plus_1,ceil_n_2,optimal\n";
  for (const auto& r : rows)
    os << r.n << ',' << r.f << ',' << r.ceil_n_3 << ',' << r.floor_n_3_plus_1 << ',' << r.ceil_n_2 << ','
       << (r.optimal ? "true" : "false") << '\n';
}

}  // namespace propp
