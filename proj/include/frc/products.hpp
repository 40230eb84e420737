#pragma once

// Tensor products, block repetition and GFR codes, with the max-convolution
// rule for the complementary-size chain of a product.

#include <algorithm>
#include <span>
#include <vector>

#include "frc/exact.hpp"
#include "frc/hierarchy.hpp"
#include "frc/incidence.hpp"

namespace frc {

// alpha/theta as an exact reduced fraction.
inline Rational storage_ratio(const FrCode& c) { return Rational(c.alpha(), c.theta()); }

// Points (p, p') are indexed p * theta2 + p'. Blocks B_i x P' come first, then P x B'_j.
inline FrCode tensor(const FrCode& c1, const FrCode& c2) {
  detail::require(storage_ratio(c1) == storage_ratio(c2),
                  "tensor product needs alpha1/theta1 == alpha2/theta2, got " + c1.params().to_string() +
                      " and " + c2.params().to_string());
  const std::size_t t1 = c1.theta(), t2 = c2.theta();
  detail::require(t1 * t2 <= kMaxPoints, "tensor product exceeds the supported point count");
  std::vector<Block> blocks;
  blocks.reserve(c1.n() + c2.n());
  for (const auto& b : c1.blocks()) {
    Block out;
    for (std::size_t p : b)
      for (std::size_t q = 0; q < t2; ++q) out.push_back(p * t2 + q);
    blocks.push_back(std::move(out));
  }
  for (const auto& b : c2.blocks()) {
    Block out;
    for (std::size_t p = 0; p < t1; ++p)
      for (std::size_t q : b) out.push_back(p * t2 + q);
    blocks.push_back(std::move(out));
  }
  return validate_fr(from_blocks(t1 * t2, std::move(blocks)));
}

// Each block repeated e times consecutively: (e n, alpha, theta, e rho).
inline FrCode repeat_blocks(const FrCode& code, std::size_t e) {
  detail::require(e >= 1, "fold e must be at least 1");
  std::vector<Block> blocks;
  blocks.reserve(code.n() * e);
  for (const auto& b : code.blocks())
    for (std::size_t i = 0; i < e; ++i) blocks.push_back(b);
  return validate_fr(from_blocks(code.theta(), std::move(blocks)));
}

namespace detail {

inline void check_chain(std::span<const std::size_t> chain, const char* name) {
  require(chain.size() >= 2, std::string(name) + " needs at least N_0 and N_1");
  require(chain.back() == 0, std::string(name) + " must end at 0");
  for (std::size_t i = 1; i < chain.size(); ++i)
    require(chain[i] <= chain[i - 1], std::string(name) + " must be non-increasing");
}

}  // namespace detail

// N_k(C1 x C2) = max over x + y = k of N_x(C1) N_y(C2), for k = 0..n1+n2.
inline std::vector<std::size_t> tensor_hierarchy(std::span<const std::size_t> chain1,
                                                 std::span<const std::size_t> chain2) {
  detail::check_chain(chain1, "first chain");
  detail::check_chain(chain2, "second chain");
  const std::size_t n1 = chain1.size() - 1, n2 = chain2.size() - 1;
  std::vector<std::size_t> out(n1 + n2 + 1, 0);
  for (std::size_t x = 0; x <= n1; ++x)
    for (std::size_t y = 0; y <= n2; ++y) out[x + y] = std::max(out[x + y], chain1[x] * chain2[y]);
  return out;
}

// Chain of the e-fold repetition: N_k(C^e) = N_ceil(k/e)(C).
inline std::vector<std::size_t> stretch_chain(std::span<const std::size_t> chain, std::size_t e) {
  detail::check_chain(chain, "chain");
  detail::require(e >= 1, "fold e must be at least 1");
  const std::size_t n = chain.size() - 1;
  std::vector<std::size_t> out(n * e + 1);
  for (std::size_t k = 0; k <= n * e; ++k) out[k] = chain[(k + e - 1) / e];
  return out;
}

struct ProductFactor {
  FrCode code;
  std::size_t fold = 1;
};

// Ordered factors C_1^{e_1} x ... x C_s^{e_s} sharing one storage ratio.
class ProductSpec {
 public:
  explicit ProductSpec(std::vector<ProductFactor> factors) : factors_(std::move(factors)) {
    detail::require(!factors_.empty(), "product needs at least one factor");
    ratio_ = storage_ratio(factors_.front().code);
    for (const auto& f : factors_) {
      detail::require(f.fold >= 1, "fold e must be at least 1");
      detail::require(storage_ratio(f.code) == ratio_, "all factors must share alpha/theta");
    }
  }

  const std::vector<ProductFactor>& factors() const noexcept { return factors_; }
  const Rational& ratio() const noexcept { return ratio_; }

  // (sum e_i n_i, c prod theta_i, prod theta_i, sum e_i rho_i)
  FrParams params() const {
    std::size_t n = 0, theta = 1, rho = 0;
    for (const auto& f : factors_) {
      n += f.fold * f.code.n();
      theta *= f.code.theta();
      rho += f.fold * f.code.rho();
    }
    const Rational alpha = ratio_ * theta;
    detail::require(denominator(alpha) == 1, "product block size is not integral");
    return {n, static_cast<std::size_t>(numerator(alpha)), theta, rho};
  }

  FrCode build() const {
    FrCode acc = repeat_blocks(factors_.front().code, factors_.front().fold);
    for (std::size_t i = 1; i < factors_.size(); ++i)
      acc = tensor(acc, repeat_blocks(factors_[i].code, factors_[i].fold));
    return acc;
  }

  // Product chain from the factor chains (one per factor, in order), by
  // pairwise max-convolution of the stretched chains.
  std::vector<std::size_t> chain(std::span<const std::vector<std::size_t>> factor_chains) const {
    detail::require(factor_chains.size() == factors_.size(), "one chain per factor is required");
    std::vector<std::size_t> acc = stretch_chain(factor_chains[0], factors_[0].fold);
    for (std::size_t i = 1; i < factors_.size(); ++i)
      acc = tensor_hierarchy(acc, stretch_chain(factor_chains[i], factors_[i].fold));
    return acc;
  }

  // Same, computing each factor's chain by enumeration first.
  std::vector<std::size_t> chain(const SearchOptions& opt = {}) const {
    std::vector<std::vector<std::size_t>> chains;
    for (const auto& f : factors_) chains.push_back(full_hierarchy(f.code, HierarchyMethod::automatic, opt).n_values);
    return chain(chains);
  }

 private:
  std::vector<ProductFactor> factors_;
  Rational ratio_;
};

// The trivial (g, 1, g, 1) code: identity incidence matrix.
inline FrCode trivial_code(std::size_t g) {
  detail::require(g >= 1, "trivial code needs g >= 1");
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < g; ++i) blocks.push_back({i});
  return validate_fr(from_blocks(g, std::move(blocks)));
}

inline ProductSpec gfr_product(std::size_t g, std::span<const std::size_t> alphas) {
  detail::require(g >= 1, "GFR code needs g >= 1");
  detail::require(!alphas.empty(), "GFR code needs at least one alpha");
  std::vector<ProductFactor> factors;
  for (std::size_t a : alphas) factors.push_back({trivial_code(g), a});
  return ProductSpec(std::move(factors));
}

// (g, alpha_1..alpha_s)-GFR code: transpose of G^{alpha_1} x ... x G^{alpha_s}.
// Parameters (g^s, sum alpha_i, g sum alpha_i, g^{s-1}).
inline FrCode gfr(std::size_t g, std::span<const std::size_t> alphas) { return dual(gfr_product(g, alphas).build()); }

// GFR hierarchy without enumeration: chain of the product, transferred to its transpose.
inline Hierarchy gfr_hierarchy(std::size_t g, std::span<const std::size_t> alphas) {
  const ProductSpec spec = gfr_product(g, alphas);
  std::vector<std::size_t> trivial_chain(g + 1);
  for (std::size_t x = 0; x <= g; ++x) trivial_chain[x] = g - x;
  const std::vector<std::vector<std::size_t>> chains(alphas.size(), trivial_chain);
  const std::vector<std::size_t> product_chain = spec.chain(chains);
  const FrParams p = spec.params();
  return hierarchy_from_dual(product_chain, p.n, p.theta);
}

}  // namespace frc
