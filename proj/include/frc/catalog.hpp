#pragma once

// Named FR codes and designs. Graph codes index edges lexicographically by
// vertex pair, so (0,1) is point 0, (0,2) point 1, and so on.

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frc/designs.hpp"
#include "frc/incidence.hpp"
#include "frc/products.hpp"

namespace frc::catalog {

using frc::trivial_code;

// (n, 1, 1, n): every node stores the single packet.
inline FrCode repetition_code(std::size_t n) {
  frc::detail::require(n >= 1, "repetition code needs n >= 1");
  return validate_fr(from_blocks(1, std::vector<Block>(n, Block{0})));
}

// Graph code: nodes are vertices, points are edges, a node stores its incident edges.
inline FrCode graph_code(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<Block> blocks(vertices);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    blocks[edges[e].first].push_back(e);
    blocks[edges[e].second].push_back(e);
  }
  return validate_fr(from_blocks(edges.size(), std::move(blocks)));
}

// K_m: an (m, m-1, m(m-1)/2, 2)-FR code.
inline FrCode complete_graph_code(std::size_t m) {
  frc::detail::require(m >= 3, "complete graph code needs m >= 3");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) edges.emplace_back(a, b);
  return graph_code(m, edges);
}

// K_{2,2,2}: K_6 without the matching {0,1},{2,3},{4,5}; a (6,4,12,2)-FR code.
inline FrCode octahedron_code() {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b)
      if (a / 2 != b / 2) edges.emplace_back(a, b);
  return graph_code(6, edges);
}

inline TDesign design_2_7_4_2() {
  return verify_t_design(
      from_blocks(7, {{0, 1, 2, 5}, {0, 1, 4, 6}, {0, 2, 3, 4}, {0, 3, 5, 6}, {1, 2, 3, 6}, {1, 3, 4, 5}, {2, 4, 5, 6}}),
      2);
}

// Steiner triple system S(2,3,7).
inline TDesign fano_plane() {
  return verify_t_design(
      from_blocks(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}), 2);
}

// A (9,2,6,3)-FR code that meets the dual bound at k = 4.
inline FrCode example3_code() {
  return validate_fr(from_matrix({
      {1, 1, 0, 0, 0, 0},
      {1, 0, 1, 0, 0, 0},
      {1, 0, 0, 1, 0, 0},
      {0, 1, 0, 0, 1, 0},
      {0, 1, 0, 0, 0, 1},
      {0, 0, 1, 1, 0, 0},
      {0, 0, 1, 0, 1, 0},
      {0, 0, 0, 1, 0, 1},
      {0, 0, 0, 0, 1, 1},
  }));
}

struct CatalogEntry {
  std::string name;
  FrCode code;
  std::string provenance;
  std::optional<std::size_t> design_t;  // set when the entry is a verified t-design
};

inline std::vector<CatalogEntry> entries() {
  const std::vector<std::size_t> gfr_531{3, 1};
  return {
      {"trivial-5", trivial_code(5), "identity incidence matrix, (g,1,g,1) with g = 5", std::nullopt},
      {"repetition-3", repetition_code(3), "all-one 3x1 matrix, (n,1,1,n) with n = 3", std::nullopt},
      {"complete-graph-4", complete_graph_code(4), "edges of K_4 stored at their endpoints", std::nullopt},
      {"complete-graph-5", complete_graph_code(5), "edges of K_5 stored at their endpoints", std::nullopt},
      {"complete-graph-6", complete_graph_code(6), "edges of K_6 stored at their endpoints", std::nullopt},
      {"octahedron", octahedron_code(),
       "substitute: edges of K_{2,2,2}, same (6,4,12,2) parameters and M_3 = 9 as the six-node example layout",
       std::nullopt},
      {"example3", example3_code(), "(9,2,6,3) code attaining the dual bound at k = 4", std::nullopt},
      {"design-2-7-4-2", design_to_fr(design_2_7_4_2()), "2-(7,4,2) design", 2},
      {"fano", design_to_fr(fano_plane()), "Fano plane, 2-(7,3,1) design", 2},
      {"grid-3", tensor(trivial_code(3), trivial_code(3)), "trivial(3) tensor trivial(3), the 3x3 grid code",
       std::nullopt},
      {"gfr-5-3-1", gfr(5, gfr_531), "(5,3,1)-GFR code", std::nullopt},
  };
}

namespace detail {

inline std::optional<std::size_t> suffix_number(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  const std::string_view rest = name.substr(prefix.size());
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty()) return std::nullopt;
  return v;
}

}  // namespace detail

// Looks up a fixed entry, or a parametric name: trivial-<g>, repetition-<n>, complete-graph-<m>.
inline CatalogEntry lookup(std::string_view name) {
  for (auto& e : entries())
    if (e.name == name) return e;
  const std::string n(name);
  if (auto g = detail::suffix_number(name, "trivial-")) return {n, trivial_code(*g), "identity incidence matrix", {}};
  if (auto r = detail::suffix_number(name, "repetition-")) return {n, repetition_code(*r), "all-one column", {}};
  if (auto m = detail::suffix_number(name, "complete-graph-"))
    return {n, complete_graph_code(*m), "edges of a complete graph stored at their endpoints", {}};
  throw InvalidInput("unknown catalog entry '" + n + "'");
}

inline TDesign lookup_design(std::string_view name) {
  if (name == "design-2-7-4-2") return design_2_7_4_2();
  if (name == "fano") return fano_plane();
  throw InvalidInput("unknown catalog design '" + std::string(name) + "'");
}

}  // namespace frc::catalog
