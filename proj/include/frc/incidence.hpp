#pragma once

// Incidence structures and fractional repetition (FR) codes.
//
// Points and blocks are 0-indexed everywhere. Printed FR-code literature
// usually labels packets from 1; subtract one when transcribing.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "frc/error.hpp"
#include "frc/point_set.hpp"

namespace frc {

inline constexpr std::size_t kMaxPoints = 4096;
inline constexpr std::size_t kMaxBlocks = 4096;

using Block = std::vector<std::size_t>;
using IncidenceMatrix = std::vector<std::vector<std::uint8_t>>;

// Points 0..theta-1 plus an ordered list of blocks. Blocks are stored sorted;
// the same block may appear more than once in the list.
class IncidenceStructure {
 public:
  std::size_t theta() const noexcept { return theta_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_.at(i); }

  bool contains(std::size_t block, std::size_t point) const {
    const Block& b = blocks_.at(block);
    return std::binary_search(b.begin(), b.end(), point);
  }

  IncidenceMatrix matrix() const {
    IncidenceMatrix m(blocks_.size(), std::vector<std::uint8_t>(theta_, 0));
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      for (std::size_t p : blocks_[i]) m[i][p] = 1;
    return m;
  }

  PointSet block_set(std::size_t i) const {
    PointSet s(theta_);
    for (std::size_t p : blocks_.at(i)) s.set(p);
    return s;
  }

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;

  friend IncidenceStructure from_blocks(std::size_t theta, std::vector<Block> blocks);

 private:
  std::size_t theta_ = 0;
  std::vector<Block> blocks_;
};

// Builds a structure from block lists. Each block is sorted; order of blocks is kept.
inline IncidenceStructure from_blocks(std::size_t theta, std::vector<Block> blocks) {
  using detail::require;
  require(theta >= 1, "theta must be at least 1");
  require(!blocks.empty(), "at least one block is required");
  require(theta <= kMaxPoints, "theta exceeds the supported maximum of " + std::to_string(kMaxPoints));
  require(blocks.size() <= kMaxBlocks,
          "block count exceeds the supported maximum of " + std::to_string(kMaxBlocks));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Block& b = blocks[i];
    std::sort(b.begin(), b.end());
    for (std::size_t j = 0; j < b.size(); ++j) {
      require(b[j] < theta, "block " + std::to_string(i) + ": point index " + std::to_string(b[j]) +
                                " out of range (theta = " + std::to_string(theta) + ")");
      require(j == 0 || b[j] != b[j - 1],
              "block " + std::to_string(i) + ": duplicate point " + std::to_string(b[j]));
    }
  }
  IncidenceStructure s;
  s.theta_ = theta;
  s.blocks_ = std::move(blocks);
  return s;
}

// Row i of the zero-one matrix becomes block i; column j is point j.
inline IncidenceStructure from_matrix(const IncidenceMatrix& rows) {
  using detail::require;
  require(!rows.empty(), "matrix has no rows");
  const std::size_t width = rows.front().size();
  require(width >= 1, "matrix rows must be non-empty");
  std::vector<Block> blocks;
  blocks.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == width, "ragged matrix: row " + std::to_string(i) + " has " +
                                         std::to_string(rows[i].size()) + " entries, expected " +
                                         std::to_string(width));
    Block b;
    for (std::size_t j = 0; j < width; ++j) {
      require(rows[i][j] <= 1, "matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") is not 0 or 1");
      if (rows[i][j]) b.push_back(j);
    }
    blocks.push_back(std::move(b));
  }
  return from_blocks(width, std::move(blocks));
}

// True iff no two blocks carry the same point set.
inline bool is_simple(const IncidenceStructure& s) {
  std::vector<Block> sorted = s.blocks();
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

// (n, alpha, theta, rho): nodes, packets per node, packets, replicas per packet.
struct FrParams {
  std::size_t n = 0;
  std::size_t alpha = 0;
  std::size_t theta = 0;
  std::size_t rho = 0;

  bool consistent() const noexcept {
    return n >= 1 && alpha >= 1 && theta >= 1 && rho >= 1 && n * alpha == theta * rho;
  }

  FrParams transposed() const noexcept { return {theta, rho, n, alpha}; }

  void check() const {
    detail::require(consistent(), "inconsistent FR parameters " + to_string() +
                                      ": need all positive and n*alpha == theta*rho");
  }

  std::string to_string() const {
    return "(" + std::to_string(n) + "," + std::to_string(alpha) + "," + std::to_string(theta) +
           "," + std::to_string(rho) + ")";
  }

  friend bool operator==(const FrParams&, const FrParams&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FrParams& p) { return os << p.to_string(); }
};

// A tactical configuration: every block has alpha points, every point lies in rho blocks.
class FrCode {
 public:
  const IncidenceStructure& structure() const noexcept { return structure_; }
  const FrParams& params() const noexcept { return params_; }
  std::size_t n() const noexcept { return params_.n; }
  std::size_t alpha() const noexcept { return params_.alpha; }
  std::size_t theta() const noexcept { return params_.theta; }
  std::size_t rho() const noexcept { return params_.rho; }

  const Block& block(std::size_t i) const { return structure_.block(i); }
  const std::vector<Block>& blocks() const noexcept { return structure_.blocks(); }

  // Blocks (nodes) containing point p, in increasing order.
  const std::vector<std::size_t>& holders(std::size_t p) const { return holders_.at(p); }

  const PointSet& block_set(std::size_t i) const { return block_sets_.at(i); }
  IncidenceMatrix matrix() const { return structure_.matrix(); }

  friend bool operator==(const FrCode& a, const FrCode& b) { return a.structure_ == b.structure_; }

  friend FrCode validate_fr(IncidenceStructure structure);

 private:
  IncidenceStructure structure_;
  FrParams params_;
  std::vector<std::vector<std::size_t>> holders_;
  std::vector<PointSet> block_sets_;
};

inline FrCode validate_fr(IncidenceStructure structure) {
  using detail::require;
  const std::size_t n = structure.block_count();
  const std::size_t theta = structure.theta();
  const std::size_t alpha = structure.block(0).size();
  for (std::size_t i = 0; i < n; ++i)
    require(structure.block(i).size() == alpha,
            "not an FR code: non-constant block size (block 0 has " + std::to_string(alpha) +
                " points, block " + std::to_string(i) + " has " +
                std::to_string(structure.block(i).size()) + ")");

  std::vector<std::vector<std::size_t>> holders(theta);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p : structure.block(i)) holders[p].push_back(i);
  for (std::size_t p = 0; p < theta; ++p)
    require(!holders[p].empty(), "not an FR code: point " + std::to_string(p) + " lies in no block");
  const std::size_t rho = holders[0].size();
  for (std::size_t p = 0; p < theta; ++p)
    require(holders[p].size() == rho, "not an FR code: non-constant point degree (point 0 in " +
                                          std::to_string(rho) + " blocks, point " + std::to_string(p) +
                                          " in " + std::to_string(holders[p].size()) + ")");

  FrCode code;
  code.params_ = {n, alpha, theta, rho};
  if (!code.params_.consistent()) throw Error("internal: n*alpha != theta*rho after validation");
  code.block_sets_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) code.block_sets_.push_back(structure.block_set(i));
  code.holders_ = std::move(holders);
  code.structure_ = std::move(structure);
  return code;
}

// Transpose: block j of the dual is the set of original blocks containing point j.
inline FrCode dual(const FrCode& code) {
  std::vector<Block> blocks(code.theta());
  for (std::size_t p = 0; p < code.theta(); ++p) blocks[p] = code.holders(p);
  return validate_fr(from_blocks(code.n(), std::move(blocks)));
}

}  // namespace frc
