// Audits a random property-P set and lists the checks that failed.
#include <cstdlib>
#include <iostream>

#include "propp/proof_audit.hpp"

int main(int argc, char** argv) {
  const std::int64_t n = argc > 1 ? std::atoll(argv[1]) : 200;
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;
  const propp::ProblemInstance inst(n, propp::random_property_p(n, seed));
  const propp::CaseReport r = propp::audit(inst);
  std::cout << "n=" << n << " |A|=" << inst.a.size() << " path " << r.path << ", " << r.checks.size()
            << " checks\n";
  for (const auto& c : r.checks)
    if (c.failed())
      std::cout << "  " << c.name << ": " << c.lhs << ' ' << propp::to_string(c.relation) << ' ' << c.rhs << " ("
                << propp::to_string(c.kind) << ")\n";
  std::cout << (r.unconditional_pass ? "unconditional checks pass\n" : "UNCONDITIONAL FAILURE\n");
  return r.unconditional_pass ? 0 : 1;
}
