// One PASS/FAIL line per acceptance criterion on stdout; timings and
// detail on stderr.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "propp/extremal_search.hpp"
#include "propp/json_io.hpp"
#include "propp/proof_audit.hpp"
#include "propp/property_p.hpp"
#include "propp/sumset_structure.hpp"

using namespace propp;

namespace {

int failures = 0;

void criterion(int id, const std::string& title, const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = problem.empty();
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << title << (ok ? "" : ": " + problem) << std::endl;
  std::cerr << "  criterion " << id << " took " << secs << "s" << std::endl;
}

IntSet from_mask(std::uint32_t mask) {
  std::vector<std::int64_t> e;
  for (std::int64_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) e.push_back(i);
  return IntSet::from_sorted(std::move(e));
}

// Every property-P subset of [n] for n <= 16, then 200 greedy random
// instances with n in [50, 200].
std::vector<ProblemInstance> harness_instances() {
  std::vector<ProblemInstance> out;
  for (std::int64_t n = 1; n <= 16; ++n)
    enumerate_property_p(n, [&](const IntSet& s) { out.emplace_back(n, s); });
  SplitMix64 rng(20240601);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::int64_t>(50 + rng.below(151));
    out.emplace_back(n, random_property_p(n, rng.next()));
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "tight example has property P and size ceil(n/3), n <= 5000", [] {
    for (std::int64_t n = 1; n <= 5000; ++n) {
      const IntSet e = extremal_example(n);
      if (!has_property_p(e)) return "n=" + std::to_string(n) + " lacks property P";
      if (static_cast<std::int64_t>(e.size()) != (n + 2) / 3) return "n=" + std::to_string(n) + " has wrong size";
    }
    return std::string();
  });

  criterion(2, "branch and bound equals brute force, n <= 20", [] {
    for (std::int64_t n = 1; n <= 20; ++n) {
      const SearchResult r = max_property_p(n);
      if (!r.optimal || r.best_size != brute_force_max(n) || !has_property_p(r.best_set))
        return "n=" + std::to_string(n);
    }
    return std::string();
  });

  criterion(3, "ceil(n/3) <= f(n) <= ceil(n/2), n <= 40, optimal", [] {
    std::string above;
    for (const TableRow& row : f_table(1, 40)) {
      if (!row.optimal) return "n=" + std::to_string(row.n) + " not optimal";
      if (row.f < row.ceil_n_3 || row.f > row.ceil_n_2) return "n=" + std::to_string(row.n) + " outside bracket";
      if (row.f > row.floor_n_3_plus_1) above += " " + std::to_string(row.n);
    }
    std::cerr << "  rows with f(n) > floor(n/3)+1:" << (above.empty() ? " none" : above) << std::endl;
    return std::string();
  });

  criterion(4, "Freiman dichotomy over all non-empty S, T in [0,10]", [] {
    std::uint64_t pairs = 0;
    for (std::uint32_t s = 1; s < (1u << 11); ++s) {
      const IntSet S = from_mask(s);
      for (std::uint32_t t = 1; t < (1u << 11); ++t) {
        try {
          freiman_classify(S, from_mask(t));
        } catch (const Error& e) {
          return std::string(e.what());
        }
        ++pairs;
      }
    }
    std::cerr << "  pairs " << pairs << std::endl;
    return std::string();
  });

  criterion(5, "difference-one progression theorem over S, T in [0,9]", [] {
    std::uint64_t met = 0;
    for (std::uint32_t s = 1; s < (1u << 10); ++s) {
      const IntSet S = from_mask(s);
      for (std::uint32_t t = 1; t < (1u << 10); ++t) {
        try {
          const auto cs = bg_hypotheses(S, from_mask(t));
          if (cs.size() == 5) ++met;
        } catch (const Error& e) {
          return std::string(e.what());
        }
      }
    }
    std::cerr << "  pairs meeting the hypotheses " << met << std::endl;
    return std::string();
  });

  criterion(6, "doubling lemmas, m <= 12, q <= 4, d in {1,2,3}", [] {
    std::uint64_t checked = 0;
    for (std::int64_t m = 1; m <= 12; ++m)
      for (std::int64_t q = 1; q <= 4; ++q)
        for (std::int64_t d = 1; d <= 3; ++d) {
          if (std::gcd(d, q) != 1) continue;
          for (std::int64_t k = 0; k < q; ++k) {
            const Container box = d == 1 ? Container::interval(k, m) : Container::ap(k, d, m);
            for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
              std::vector<std::int64_t> e;
              for (std::int64_t i = 0; i < m; ++i)
                if (mask >> i & 1) e.push_back(k + (i + 1) * d);
              const IntSet u = IntSet::from_sorted(std::move(e));
              if (2 * static_cast<std::int64_t>(u.size()) < m + q) continue;
              for (std::int64_t a = 0; a < q; ++a) {
                const CheckResult c = doubling_bound_check(u, box, q, a);
                if (c.failed())
                  return "m=" + std::to_string(m) + " q=" + std::to_string(q) + " d=" + std::to_string(d) +
                         " U={" + u.str() + "} a=" + std::to_string(a);
                ++checked;
              }
            }
          }
        }
    std::cerr << "  bounds checked " << checked << std::endl;
    return std::string();
  });

  const std::vector<ProblemInstance> instances = harness_instances();

  criterion(7, "unconditional identities on every harness instance", [&] {
    for (const auto& inst : instances)
      for (const auto& c : verify_unconditional(inst))
        if (c.failed())
          return c.name + " fails for n=" + std::to_string(inst.n) + " A={" + inst.a.str() + "} " + c.note;
    std::cerr << "  instances " << instances.size() << std::endl;
    return std::string();
  });

  criterion(8, "audit is total and deterministic on every harness instance", [&] {
    for (const auto& inst : instances) {
      const std::string path = classify_case(inst);
      const std::string first = to_json(audit(inst)).dump();
      const CaseReport again = audit(inst);
      if (again.path != path) return "path mismatch for A={" + inst.a.str() + "}";
      if (to_json(again).dump() != first) return "non-deterministic report for A={" + inst.a.str() + "}";
      for (const auto& c : again.checks)
        if (c.failed() && c.kind != CheckKind::Conditional)
          return c.name + " failed unconditionally for n=" + std::to_string(inst.n) + " A={" + inst.a.str() + "}";
    }
    return std::string();
  });

  return failures == 0 ? 0 : 1;
}
