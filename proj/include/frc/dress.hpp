#pragma once

// Two-layer storage: an outer [theta, M] MDS code over GF(256), whose coded
// symbols are placed on nodes according to an FR code (node i stores the
// symbols indexed by block i).
//
// The outer code is systematic Reed-Solomon: the file is the evaluation of a
// polynomial of degree < M at 0..M-1 and coded symbol j is its value at j,
// for evaluation points 0..theta-1.

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "frc/error.hpp"
#include "frc/gf256.hpp"
#include "frc/incidence.hpp"

namespace frc {

struct StoredSymbol {
  std::size_t point = 0;
  Gf256 value;
  friend bool operator==(const StoredSymbol&, const StoredSymbol&) = default;
};

namespace detail {

// Value at z of the unique polynomial of degree < shares.size() through the shares.
inline Gf256 interpolate_at(std::span<const StoredSymbol> shares, Gf256 z) {
  Gf256 acc;
  for (std::size_t i = 0; i < shares.size(); ++i) {
    const Gf256 xi(static_cast<std::uint8_t>(shares[i].point));
    Gf256 num(1), den(1);
    for (std::size_t m = 0; m < shares.size(); ++m) {
      if (m == i) continue;
      const Gf256 xm(static_cast<std::uint8_t>(shares[m].point));
      num *= z - xm;
      den *= xi - xm;
    }
    acc += shares[i].value * num / den;
  }
  return acc;
}

}  // namespace detail

inline std::vector<Gf256> mds_encode(std::span<const Gf256> file, std::size_t theta) {
  using detail::require;
  require(!file.empty(), "file must contain at least one symbol");
  require(file.size() <= theta, "file size M exceeds code length theta");
  require(theta <= Gf256::kOrder, "theta exceeds the field size 256");
  std::vector<StoredSymbol> base;
  for (std::size_t i = 0; i < file.size(); ++i) base.push_back({i, file[i]});
  std::vector<Gf256> out(file.begin(), file.end());
  for (std::size_t j = file.size(); j < theta; ++j)
    out.push_back(detail::interpolate_at(base, Gf256(static_cast<std::uint8_t>(j))));
  return out;
}

// Recovers the M-symbol file from any M coded symbols with distinct points.
inline std::vector<Gf256> mds_decode(std::span<const StoredSymbol> shares, std::size_t file_size) {
  using detail::require;
  require(file_size >= 1 && shares.size() >= file_size, "need at least M coded symbols to decode");
  std::vector<StoredSymbol> used(shares.begin(), shares.begin() + static_cast<std::ptrdiff_t>(file_size));
  for (const auto& s : used) require(s.point < Gf256::kOrder, "share point outside the field");
  std::vector<Gf256> file;
  file.reserve(file_size);
  for (std::size_t i = 0; i < file_size; ++i) {
    auto it = std::find_if(used.begin(), used.end(), [&](const StoredSymbol& s) { return s.point == i; });
    file.push_back(it != used.end() ? it->value : detail::interpolate_at(used, Gf256(static_cast<std::uint8_t>(i))));
  }
  return file;
}

struct Transfer {
  std::size_t helper = 0;
  std::size_t point = 0;
  Gf256 value;
};

struct RepairReport {
  std::size_t failed = 0;
  std::vector<StoredSymbol> replacement;
  std::vector<Transfer> transfers;
  bool uncoded = true;  // every transfer is a symbol the helper stores verbatim
  std::size_t symbols_transferred() const noexcept { return transfers.size(); }
};

struct Reconstruction {
  std::optional<std::vector<Gf256>> file;
  std::size_t distinct_symbols = 0;
  std::size_t deficit = 0;  // M - distinct_symbols when short
  bool ok() const noexcept { return file.has_value(); }
};

// Node contents of a two-layer system. Mutated only by repair(); callers
// serialize repairs on a given instance.
class DressSystem {
 public:
  DressSystem(FrCode code, std::vector<Gf256> symbols, std::size_t file_size)
      : code_(std::move(code)), symbols_(std::move(symbols)), file_size_(file_size) {
    using detail::require;
    require(symbols_.size() == code_.theta(), "expected " + std::to_string(code_.theta()) + " coded symbols, got " +
                                                  std::to_string(symbols_.size()));
    require(file_size_ >= 1 && file_size_ <= code_.theta(), "file size M must be in 1..theta");
    nodes_.resize(code_.n());
    for (std::size_t i = 0; i < code_.n(); ++i)
      for (std::size_t p : code_.block(i)) nodes_[i].push_back({p, symbols_[p]});
  }

  const FrCode& code() const noexcept { return code_; }
  const std::vector<Gf256>& symbols() const noexcept { return symbols_; }
  std::size_t file_size() const noexcept { return file_size_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  const std::vector<StoredSymbol>& node(std::size_t i) const { return nodes_.at(i); }

  // Replaces node `failed` by copying each of its points from the
  // lowest-indexed other node that stores it. Throws Unrepairable when a
  // point has no other holder; the system is then left unchanged.
  RepairReport repair(std::size_t failed) {
    detail::require(failed < nodes_.size(), "node index " + std::to_string(failed) + " out of range");
    RepairReport rep;
    rep.failed = failed;
    for (std::size_t p : code_.block(failed)) {
      const auto& holders = code_.holders(p);
      auto helper = std::find_if(holders.begin(), holders.end(), [&](std::size_t h) { return h != failed; });
      if (helper == holders.end()) throw Unrepairable(failed, p);
      const auto& content = nodes_[*helper];
      auto it = std::find_if(content.begin(), content.end(), [&](const StoredSymbol& s) { return s.point == p; });
      rep.transfers.push_back({*helper, p, it->value});
      rep.uncoded = rep.uncoded && it->point == p;
      rep.replacement.push_back({p, it->value});
    }
    nodes_[failed] = rep.replacement;
    return rep;
  }

  // Decodes from the chosen nodes when they jointly hold at least M distinct
  // symbols, whatever their number.
  Reconstruction reconstruct(std::span<const std::size_t> chosen) const {
    std::vector<StoredSymbol> shares;
    std::vector<bool> seen(code_.theta(), false);
    for (std::size_t i : chosen) {
      detail::require(i < nodes_.size(), "node index " + std::to_string(i) + " out of range");
      for (const auto& s : nodes_[i])
        if (!seen[s.point]) seen[s.point] = true, shares.push_back(s);
    }
    std::sort(shares.begin(), shares.end(), [](const auto& a, const auto& b) { return a.point < b.point; });
    Reconstruction out;
    out.distinct_symbols = shares.size();
    if (shares.size() < file_size_) {
      out.deficit = file_size_ - shares.size();
      return out;
    }
    out.file = mds_decode(shares, file_size_);
    return out;
  }

 private:
  FrCode code_;
  std::vector<Gf256> symbols_;
  std::size_t file_size_;
  std::vector<std::vector<StoredSymbol>> nodes_;
};

inline DressSystem distribute(const FrCode& code, std::vector<Gf256> symbols, std::size_t file_size) {
  return DressSystem(code, std::move(symbols), file_size);
}

}  // namespace frc
