#pragma once

// t-(v, m, lambda) designs: verification, the lambda^j_i block counts, and the
// FR codes they induce.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "frc/bounds.hpp"
#include "frc/exact.hpp"
#include "frc/hierarchy.hpp"
#include "frc/incidence.hpp"

namespace frc {

inline constexpr std::size_t kMaxDesignPoints = 64;
inline constexpr std::size_t kMaxDesignStrength = 4;

struct DesignParams {
  std::size_t t = 0;
  std::size_t v = 0;
  std::size_t m = 0;
  std::size_t lambda = 0;
};

namespace detail {

inline void check_design_params(const DesignParams& d) {
  require(d.t >= 1 && d.lambda >= 1, "design needs t >= 1 and lambda >= 1");
  require(d.t <= d.m && d.m < d.v, "design needs t <= m < v");
}

inline std::int64_t exact_quotient(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0 || num % den != 0) invalid(std::string(what) + " is not an integer: inconsistent design parameters");
  return to_i64(num / den);
}

}  // namespace detail

// Blocks containing i fixed points and avoiding j others: lambda C(v-i-j, m-i) / C(v-t, m-t).
inline std::int64_t lambda_i_j(const DesignParams& d, std::size_t i, std::size_t j) {
  detail::check_design_params(d);
  detail::require(i + j <= d.t, "lambda^j_i needs i + j <= t");
  const auto v = static_cast<std::int64_t>(d.v), m = static_cast<std::int64_t>(d.m),
             t = static_cast<std::int64_t>(d.t);
  const auto ii = static_cast<std::int64_t>(i), jj = static_cast<std::int64_t>(j);
  return detail::exact_quotient(BigInt(d.lambda) * binomial(v - ii - jj, m - ii), binomial(v - t, m - t),
                                "lambda^j_i");
}

// b = lambda C(v, t) / C(m, t).
inline std::int64_t block_count(const DesignParams& d) {
  detail::check_design_params(d);
  return detail::exact_quotient(
      BigInt(d.lambda) * binomial(static_cast<std::int64_t>(d.v), static_cast<std::int64_t>(d.t)),
      binomial(static_cast<std::int64_t>(d.m), static_cast<std::int64_t>(d.t)), "block count");
}

class TDesign {
 public:
  const DesignParams& params() const noexcept { return params_; }
  std::size_t t() const noexcept { return params_.t; }
  std::size_t v() const noexcept { return params_.v; }
  std::size_t m() const noexcept { return params_.m; }
  std::size_t lambda() const noexcept { return params_.lambda; }
  std::size_t b() const noexcept { return structure_.block_count(); }
  const IncidenceStructure& structure() const noexcept { return structure_; }

  friend TDesign verify_t_design(const IncidenceStructure& structure, std::size_t t);

 private:
  DesignParams params_;
  IncidenceStructure structure_;
};

// Exhaustive check that every t-subset of points lies in the same number of blocks.
inline TDesign verify_t_design(const IncidenceStructure& s, std::size_t t) {
  using detail::require;
  const std::size_t v = s.theta();
  require(t >= 1 && t <= kMaxDesignStrength, "design strength t must be in 1.." + std::to_string(kMaxDesignStrength));
  require(v <= kMaxDesignPoints, "design verification supports at most " + std::to_string(kMaxDesignPoints) + " points");
  require(is_simple(s), "not a design: repeated blocks");
  const std::size_t m = s.block(0).size();
  for (const auto& b : s.blocks()) require(b.size() == m, "not a design: non-constant block size");
  require(t <= m && m < v, "not a design: need t <= m < v");

  std::vector<std::uint64_t> masks;
  for (const auto& b : s.blocks()) {
    std::uint64_t mask = 0;
    for (std::size_t p : b) mask |= std::uint64_t{1} << p;
    masks.push_back(mask);
  }

  std::optional<std::size_t> lambda;
  std::vector<std::size_t> pick(t);
  for (std::size_t i = 0; i < t; ++i) pick[i] = i;
  while (true) {
    std::uint64_t subset = 0;
    for (std::size_t p : pick) subset |= std::uint64_t{1} << p;
    std::size_t count = 0;
    for (auto mask : masks) count += (mask & subset) == subset ? 1 : 0;
    if (!lambda) lambda = count;
    require(count == *lambda, "not a " + std::to_string(t) + "-design: point subsets lie in " +
                                  std::to_string(*lambda) + " and " + std::to_string(count) + " blocks");
    // next t-subset in lexicographic order
    std::size_t i = t;
    while (i > 0 && pick[i - 1] == v - t + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < t; ++j) pick[j] = pick[j - 1] + 1;
  }
  require(*lambda >= 1, "not a design: some t-subset lies in no block");

  TDesign d;
  d.params_ = {t, v, m, *lambda};
  d.structure_ = s;
  if (block_count(d.params_) != static_cast<std::int64_t>(s.block_count()))
    throw Error("internal: block count disagrees with lambda C(v,t)/C(m,t)");
  return d;
}

// The design read as an FR code: (n, alpha, theta, rho) = (b, m, v, lambda^0_1).
inline FrCode design_to_fr(const TDesign& d) {
  FrCode code = validate_fr(d.structure());
  if (code.rho() != static_cast<std::size_t>(lambda_i_j(d.params(), 1, 0)))
    throw Error("internal: design point degree differs from lambda^0_1");
  return code;
}

// M_k predicted by the stair-case N_l(C^t) = lambda^l_0, index k = 0..b.
// Entries with k <= lambda^t_0 carry no claim and are empty.
inline std::vector<std::optional<std::size_t>> design_hierarchy(const TDesign& d) {
  std::vector<std::optional<std::size_t>> out(d.b() + 1);
  for (std::size_t l = 1; l <= d.t(); ++l) {
    const auto lo = static_cast<std::size_t>(lambda_i_j(d.params(), 0, l));
    const auto hi = static_cast<std::size_t>(lambda_i_j(d.params(), 0, l - 1));
    for (std::size_t k = lo + 1; k <= hi && k <= d.b(); ++k) out[k] = d.v() - l + 1;
  }
  return out;
}

struct OptimalityRow {
  std::size_t file_size = 0;       // M
  std::size_t smallest_k = 0;      // brute force: min k with M_k >= M
  std::int64_t degree_bound = 0;   // ceil(b C(M-1, m) / C(v, m)) + 1
  std::int64_t lambda_prediction = 0;  // lambda^{v-M+1}_0 + 1
  bool optimal() const {
    return static_cast<std::int64_t>(smallest_k) == degree_bound && degree_bound == lambda_prediction;
  }
};

struct OptimalityReport {
  DesignParams params;
  std::size_t b = 0;
  Hierarchy hierarchy;
  std::vector<OptimalityRow> rows;  // M = v-t+1..v
  bool all_optimal() const {
    return std::all_of(rows.begin(), rows.end(), [](const OptimalityRow& r) { return r.optimal(); });
  }
};

// Checks that the design code meets the reconstruction-degree lower bound with
// equality for every file size v-t+1..v. Uses brute-force enumeration.
inline OptimalityReport check_design_optimality(const TDesign& d, const SearchOptions& opt = {}) {
  const FrCode code = design_to_fr(d);
  OptimalityReport rep{d.params(), d.b(), direct_hierarchy(code, opt), {}};
  for (std::size_t file = d.v() - d.t() + 1; file <= d.v(); ++file) {
    OptimalityRow row;
    row.file_size = file;
    row.smallest_k = min_degree_for(rep.hierarchy, file);
    row.degree_bound = min_reconstruction_degree(d.b(), d.m(), d.v(), file);
    row.lambda_prediction = lambda_i_j(d.params(), 0, d.v() - file + 1) + 1;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace frc
