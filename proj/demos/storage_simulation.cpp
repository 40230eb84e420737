// Stores a short message on the six-node octahedron layout, loses a node,
// repairs it by plain copying and reads the message back from three nodes.

#include <iostream>
#include <string>

#include "frc/frc.hpp"

int main() {
  const std::string message = "FR-codes!";  // M = 9 symbols
  std::vector<frc::Gf256> file;
  for (char ch : message) file.emplace_back(static_cast<std::uint8_t>(ch));

  const frc::FrCode layout = frc::catalog::octahedron_code();
  frc::DressSystem system = frc::distribute(layout, frc::mds_encode(file, layout.theta()), file.size());

  const frc::RepairReport repair = system.repair(2);
  std::cout << "node 2 repaired with " << repair.symbols_transferred() << " copied symbols:";
  for (const auto& t : repair.transfers) std::cout << " [" << t.point << " from node " << t.helper << ']';
  std::cout << '\n';

  const std::vector<std::size_t> nodes{0, 2, 5};
  const frc::Reconstruction r = system.reconstruct(nodes);
  if (!r.ok()) {
    std::cout << "decode failed, short by " << r.deficit << " symbols\n";
    return 1;
  }
  std::string decoded;
  for (auto s : *r.file) decoded.push_back(static_cast<char>(s.value()));
  std::cout << "decoded from nodes 0, 2, 5: " << decoded << '\n';
}
