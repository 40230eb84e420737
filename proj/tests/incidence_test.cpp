#include <gtest/gtest.h>

#include <random>

#include "frc/catalog.hpp"
#include "frc/incidence.hpp"
#include "frc/io.hpp"
#include "support/oracles.hpp"

namespace frc {
namespace {

const std::vector<Block> kDesign2742{{0, 1, 2, 5}, {0, 1, 4, 6}, {0, 2, 3, 4}, {0, 3, 5, 6},
                                     {1, 2, 3, 6}, {1, 3, 4, 5}, {2, 4, 5, 6}};

const IncidenceMatrix kCompleteGraph5{
    {1, 1, 1, 1, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 1, 1, 1, 0, 0, 0}, {0, 1, 0, 0, 1, 0, 0, 1, 1, 0},
    {0, 0, 1, 0, 0, 1, 0, 1, 0, 1}, {0, 0, 0, 1, 0, 0, 1, 0, 1, 1},
};

TEST(FromBlocks, KeepsOrderAndSortsPoints) {
  auto s = from_blocks(7, kDesign2742);
  EXPECT_EQ(s.theta(), 7u);
  EXPECT_EQ(s.blocks(), kDesign2742);

  auto t = from_blocks(5, {{4, 0, 2}, {1, 3, 0}});
  EXPECT_EQ(t.block(0), (Block{0, 2, 4}));
  EXPECT_EQ(t.block(1), (Block{0, 1, 3}));
}

TEST(FromBlocks, RepeatedBlocksRetained) {
  auto s = from_blocks(1, {{0}, {0}});
  EXPECT_EQ(s.block_count(), 2u);
  EXPECT_FALSE(is_simple(s));
}

TEST(FromBlocks, Errors) {
  EXPECT_THROW(from_blocks(3, {{0, 3}}), InvalidInput);
  EXPECT_THROW(from_blocks(3, {{1, 1}}), InvalidInput);
  EXPECT_THROW(from_blocks(0, {{}}), InvalidInput);
  EXPECT_THROW(from_blocks(3, {}), InvalidInput);
  EXPECT_THROW(from_blocks(kMaxPoints + 1, {{0}}), InvalidInput);
  EXPECT_THROW(from_blocks(1, std::vector<Block>(kMaxBlocks + 1, Block{0})), InvalidInput);
}

TEST(FromMatrix, CompleteGraphExample) {
  auto s = from_matrix(kCompleteGraph5);
  EXPECT_EQ(s.blocks(), (std::vector<Block>{{0, 1, 2, 3}, {0, 4, 5, 6}, {1, 4, 7, 8}, {2, 5, 7, 9}, {3, 6, 8, 9}}));
}

TEST(FromMatrix, IdentityAndAllOnes) {
  EXPECT_EQ(from_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).blocks(), (std::vector<Block>{{0}, {1}, {2}}));
  EXPECT_EQ(from_matrix({{1}, {1}, {1}, {1}}).blocks(), std::vector<Block>(4, Block{0}));
}

TEST(FromMatrix, Errors) {
  EXPECT_THROW(from_matrix({{1, 0}, {1}}), InvalidInput);
  EXPECT_THROW(from_matrix({{1, 2}}), InvalidInput);
  EXPECT_THROW(from_matrix({}), InvalidInput);
}

TEST(ValidateFr, Parameters) {
  EXPECT_EQ(validate_fr(from_matrix(kCompleteGraph5)).params(), (FrParams{5, 4, 10, 2}));
  EXPECT_EQ(catalog::example3_code().params(), (FrParams{9, 2, 6, 3}));
  EXPECT_EQ(validate_fr(from_blocks(7, kDesign2742)).params(), (FrParams{7, 4, 7, 4}));
}

TEST(ValidateFr, RejectsNonTactical) {
  EXPECT_THROW(validate_fr(from_blocks(2, {{0, 1}, {0}})), InvalidInput);     // block size
  EXPECT_THROW(validate_fr(from_blocks(3, {{0, 1}, {0, 2}})), InvalidInput);  // point degree
  EXPECT_THROW(validate_fr(from_blocks(3, {{0, 1}, {0, 1}})), InvalidInput);  // point 2 uncovered
}

TEST(ValidateFr, ReverseIndex) {
  const auto code = validate_fr(from_matrix(kCompleteGraph5));
  EXPECT_EQ(code.holders(0), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(code.holders(9), (std::vector<std::size_t>{3, 4}));
}

TEST(Dual, ParameterTransposition) {
  const auto oct = catalog::octahedron_code();
  EXPECT_EQ(dual(oct).params(), (FrParams{12, 2, 6, 4}));
  const auto rep = catalog::repetition_code(4);
  EXPECT_EQ(rep.params(), (FrParams{4, 1, 1, 4}));
  const auto d = dual(rep);
  EXPECT_EQ(d.params(), (FrParams{1, 4, 4, 1}));
  EXPECT_EQ(d.block(0), (Block{0, 1, 2, 3}));
}

TEST(Dual, Involution) {
  const auto c = validate_fr(from_matrix(kCompleteGraph5));
  EXPECT_EQ(dual(dual(c)).matrix(), c.matrix());
  EXPECT_EQ(dual(c).matrix(), testing::transpose(c.matrix()));
}

TEST(IsSimple, Cases) {
  EXPECT_TRUE(is_simple(from_blocks(7, kDesign2742)));
  EXPECT_FALSE(is_simple(catalog::repetition_code(2).structure()));
  EXPECT_TRUE(is_simple(from_blocks(3, {{0, 1}})));
  EXPECT_FALSE(is_simple(from_blocks(3, {{0, 1}, {1, 0}})));
}

// Random structures: matrix and block views round-trip, dual column sums are
// original row sums, and n*alpha == theta*rho holds.
TEST(IncidenceProperties, RandomCodes) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t parts = 1 + rng() % 4;
    const std::size_t theta = parts * (1 + rng() % 5);
    const std::size_t rho = 1 + rng() % 4;
    const FrCode c = testing::random_fr_code(rng, theta, parts, rho);
    const auto& p = c.params();
    EXPECT_EQ(p.n * p.alpha, p.theta * p.rho);
    EXPECT_EQ(from_matrix(c.matrix()).matrix(), c.matrix());
    EXPECT_EQ(from_blocks(c.theta(), c.blocks()), c.structure());
    const auto dm = dual(c).matrix();
    const auto m = c.matrix();
    for (std::size_t j = 0; j < dm.front().size(); ++j) {
      std::size_t col = 0;
      for (const auto& row : dm) col += row[j];
      std::size_t row_sum = 0;
      for (auto v : m[j]) row_sum += v;
      EXPECT_EQ(col, row_sum);
    }
    EXPECT_EQ(dual(dual(c)).matrix(), m);
  }
}

TEST(Io, MatrixTextRoundTrip) {
  const auto s = from_matrix(kCompleteGraph5);
  const std::string text = io::format_matrix_text(s);
  EXPECT_EQ(text.substr(0, 5), "5 10\n");
  EXPECT_EQ(io::parse_matrix_text(text), s);
}

TEST(Io, MatrixTextSpacesAndErrors) {
  EXPECT_EQ(io::parse_matrix_text("2 3\n1 0 1\n0 1 0\n"), from_blocks(3, {{0, 2}, {1}}));
  EXPECT_EQ(io::parse_matrix_text("2 3\r\n101\r\n010\r\n\n"), from_blocks(3, {{0, 2}, {1}}));
  EXPECT_THROW(io::parse_matrix_text("2 3\n101\n010\nextra\n"), InvalidInput);
  EXPECT_THROW(io::parse_matrix_text("2 3\n101\n"), InvalidInput);
  EXPECT_THROW(io::parse_matrix_text("2 3\n1  01\n010\n"), InvalidInput);
  EXPECT_THROW(io::parse_matrix_text("2 3\n1021\n010\n"), InvalidInput);
  EXPECT_THROW(io::parse_matrix_text("2 3\n10\n010\n"), InvalidInput);
  EXPECT_THROW(io::parse_matrix_text("x 3\n"), InvalidInput);
}

TEST(Io, StructuredRoundTrip) {
  const auto s = from_blocks(7, kDesign2742);
  const auto loaded = io::parse_structure(io::to_json(s).dump());
  EXPECT_EQ(loaded.structure, s);
  EXPECT_FALSE(loaded.t.has_value());
  const auto with_t = io::parse_structure(R"({"theta": 3, "blocks": [[0,1],[1,2],[0,2]], "t": 1})");
  EXPECT_EQ(with_t.t, 1u);
}

TEST(Io, StructuredErrors) {
  EXPECT_THROW(io::parse_structure(R"({"theta": 3, "blocks": [[0,1]]} junk)"), InvalidInput);
  EXPECT_THROW(io::parse_structure(R"({"theta": 3, "blocks": [[0,5]]})"), InvalidInput);
  EXPECT_THROW(io::parse_structure(R"({"theta": -1, "blocks": [[0]]})"), InvalidInput);
  EXPECT_THROW(io::parse_structure(R"({"blocks": [[0]]})"), InvalidInput);
  EXPECT_THROW(io::parse_structure(R"({"theta": 1, "blocks": [[0]], "extra": 1})"), InvalidInput);
}

}  // namespace
}  // namespace frc
