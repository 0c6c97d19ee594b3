// Prints f(n) next to ceil(n/3) for a range of n, then the best set found
// for the largest n.
#include <cstdlib>
#include <iostream>

#include "propp/extremal_search.hpp"

int main(int argc, char** argv) {
  const std::int64_t hi = argc > 1 ? std::atoll(argv[1]) : 30;
  const auto rows = propp::f_table(1, hi);
  propp::write_csv(std::cout, rows);
  const auto best = propp::max_property_p(hi);
  std::cout << "# n=" << hi << " best {" << best.best_set.str() << "} after " << best.nodes_explored
            << " nodes\n";
}
