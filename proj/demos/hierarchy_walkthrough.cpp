// Builds the K_5 edge code, prints its supported file sizes next to the upper
// bounds, then does the same for its transpose.

#include <iostream>

#include "frc/frc.hpp"

int main() {
  const frc::FrCode code = frc::catalog::complete_graph_code(5);
  for (const frc::FrCode& c : {code, frc::dual(code)}) {
    const frc::Hierarchy h = frc::full_hierarchy(c);
    const frc::BoundProfile bounds = frc::bound_profile(c.params());
    std::cout << "code " << c.params() << '\n';
    std::cout << "  k  M_k  recursive  dual  floor\n";
    for (const auto& row : bounds.rows)
      std::cout << "  " << row.k << "  " << h.M(row.k) << "  " << row.recursive << "  " << row.dual << "  "
                << row.floor << '\n';
    std::cout << "  pareto:";
    for (const auto& p : frc::pareto_points(c)) std::cout << " (" << p.k0 << ',' << p.l0 << ')';
    std::cout << "\n\n";
  }
}
