#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <json.hpp>

#include "frc/catalog.hpp"
#include "frc/hierarchy.hpp"

namespace frc {
namespace {

using V = std::vector<std::size_t>;

nlohmann::json load_golden(const std::string& name) {
  std::ifstream in(std::string(FRC_GOLDEN_DIR) + "/catalog/" + name + ".json");
  if (!in) throw std::runtime_error("missing golden file for " + name);
  return nlohmann::json::parse(in);
}

TEST(Catalog, EntriesValidateAndNamesAreUnique) {
  std::set<std::string> names;
  for (const auto& e : catalog::entries()) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    EXPECT_TRUE(e.code.params().consistent());
    EXPECT_EQ(validate_fr(e.code.structure()).params(), e.code.params());
    EXPECT_FALSE(e.provenance.empty());
    EXPECT_EQ(catalog::lookup(e.name).code, e.code);
  }
}

TEST(Catalog, GoldenBlocksAndHierarchies) {
  for (const auto& e : catalog::entries()) {
    const auto g = load_golden(e.name);
    EXPECT_EQ(g.at("theta").get<std::size_t>(), e.code.theta()) << e.name;
    EXPECT_EQ(g.at("blocks").get<std::vector<Block>>(), e.code.blocks()) << e.name;
    EXPECT_EQ(full_hierarchy(e.code).m_values, g.at("M").get<V>()) << e.name;
  }
}

TEST(Catalog, CompleteGraphFiveMatrix) {
  const IncidenceMatrix expected{
      {1, 1, 1, 1, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 1, 1, 1, 0, 0, 0}, {0, 1, 0, 0, 1, 0, 0, 1, 1, 0},
      {0, 0, 1, 0, 0, 1, 0, 1, 0, 1}, {0, 0, 0, 1, 0, 0, 1, 0, 1, 1},
  };
  EXPECT_EQ(catalog::complete_graph_code(5).matrix(), expected);
}

TEST(Catalog, CompleteGraphParameters) {
  for (std::size_t m = 3; m <= 9; ++m)
    EXPECT_EQ(catalog::complete_graph_code(m).params(), (FrParams{m, m - 1, m * (m - 1) / 2, 2}));
  EXPECT_THROW(catalog::complete_graph_code(2), InvalidInput);
}

TEST(Catalog, Octahedron) {
  const FrCode c = catalog::octahedron_code();
  EXPECT_EQ(c.params(), (FrParams{6, 4, 12, 2}));
  EXPECT_EQ(supported_file_size(c, 3), 9u);
  EXPECT_TRUE(is_simple(dual(c).structure()));
}

TEST(Catalog, Example3) {
  const FrCode c = catalog::example3_code();
  EXPECT_EQ(c.params(), (FrParams{9, 2, 6, 3}));
  EXPECT_EQ(supported_file_size(c, 4), 4u);
}

TEST(Catalog, ParametricLookup) {
  EXPECT_EQ(catalog::lookup("trivial-7").code.params(), (FrParams{7, 1, 7, 1}));
  EXPECT_EQ(catalog::lookup("repetition-6").code.params(), (FrParams{6, 1, 1, 6}));
  EXPECT_EQ(catalog::lookup("complete-graph-7").code.params(), (FrParams{7, 6, 21, 2}));
  EXPECT_THROW(catalog::lookup("complete-graph-"), InvalidInput);
  EXPECT_THROW(catalog::lookup("trivial-3x"), InvalidInput);
  EXPECT_THROW(catalog::lookup("no-such-code"), InvalidInput);
  EXPECT_EQ(catalog::lookup_design("fano").lambda(), 1u);
  EXPECT_THROW(catalog::lookup_design("octahedron"), InvalidInput);
}

TEST(Catalog, DesignEntriesCarryStrength) {
  for (const auto& e : catalog::entries())
    if (e.design_t) {
      EXPECT_NO_THROW(verify_t_design(e.code.structure(), *e.design_t)) << e.name;
    }
}

}  // namespace
}  // namespace frc
