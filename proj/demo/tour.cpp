// A short walk through the library: the Euler triangle, the Foata map on a
// concrete word, recursive-tree counts, and one passing and one failing
// identity check.

#include <iostream>

#include "eulerian/bijections.hpp"
#include "eulerian/counting.hpp"
#include "eulerian/identities.hpp"
#include "eulerian/toolkit/export.hpp"
#include "eulerian/toolkit/report_io.hpp"
#include "eulerian/trees.hpp"

int main() {
  using namespace eulerian;

  std::cout << toolkit::to_csv(eulerian_recurrence(6)) << "\n";

  const Permutation sigma{6, 2, 1, 4, 5, 7, 3};
  const auto phi = exc_to_desc(sigma);
  std::cout << sigma.to_string() << " has " << excedances(sigma) << " excedances and ends in "
            << sigma.last() << "\n";
  std::cout << phi.to_string() << " has " << descents(phi) << " descents and ends in " << phi.last()
            << "\n\n";

  RRecurrence r;
  for (int x = 1; x <= 3; ++x) {
    std::cout << "R(4,2," << x << ") = " << r(4, 2, x) << "\n";
  }
  std::cout << "\n";

  Ranges ranges;
  ranges.max_n = 6;
  std::cout << toolkit::to_text(verify(IdentityId::thm4_desc_exc, ranges));
  std::cout << toolkit::to_text(verify(IdentityId::t_closed_form, ranges));
}
