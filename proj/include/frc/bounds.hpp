#pragma once

// Upper bounds on the supported file size of an (n, alpha, theta, rho)-FR code
// and a lower bound on the reconstruction degree. All arithmetic is exact;
// rounding happens once, at the end.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "frc/exact.hpp"
#include "frc/incidence.hpp"
#include "json.hpp"

namespace frc {

namespace detail {

inline void check_k(const FrParams& p, std::size_t k) {
  require(k >= 1 && k <= p.n, "k = " + std::to_string(k) + " outside 1.." + std::to_string(p.n));
}

}  // namespace detail

// g(1..n): g(1) = alpha, g(k+1) = g(k) + alpha - ceil((rho g(k) - k alpha) / (n - k)).
// The ceiling rounds toward +infinity, also for negative numerators.
inline std::vector<std::int64_t> recursive_sequence(const FrParams& p) {
  p.check();
  const auto n = static_cast<std::int64_t>(p.n);
  const auto alpha = static_cast<std::int64_t>(p.alpha);
  const auto rho = static_cast<std::int64_t>(p.rho);
  std::vector<std::int64_t> g{alpha};
  for (std::int64_t k = 1; k < n; ++k) {
    const std::int64_t gk = g.back();
    g.push_back(gk + alpha - ceil_div(rho * gk - k * alpha, n - k));
  }
  return g;
}

inline std::int64_t recursive_bound(const FrParams& p, std::size_t k) {
  detail::check_k(p, k);
  return recursive_sequence(p)[k - 1];
}

// g'(1..theta): the recursive sequence of the transposed parameters.
inline std::vector<std::int64_t> dual_g_sequence(const FrParams& p) {
  p.check();
  const auto theta = static_cast<std::int64_t>(p.theta);
  const auto alpha = static_cast<std::int64_t>(p.alpha);
  const auto rho = static_cast<std::int64_t>(p.rho);
  std::vector<std::int64_t> g{rho};
  for (std::int64_t l = 1; l < theta; ++l) {
    const std::int64_t gl = g.back();
    g.push_back(gl + rho - ceil_div(alpha * gl - l * rho, theta - l));
  }
  return g;
}

// #{ l in 1..theta : k > n - g'(l) }
inline std::int64_t dual_bound(const FrParams& p, std::size_t k) {
  detail::check_k(p, k);
  const auto gp = dual_g_sequence(p);
  const auto kk = static_cast<std::int64_t>(k);
  const auto n = static_cast<std::int64_t>(p.n);
  return std::count_if(gp.begin(), gp.end(), [&](std::int64_t g) { return kk > n - g; });
}

// floor(theta (1 - C(n-rho, k) / C(n, k))). Needs only n, theta, rho.
inline std::int64_t floor_bound(std::size_t n, std::size_t theta, std::size_t rho, std::size_t k) {
  using detail::require;
  require(n >= 1 && theta >= 1 && rho >= 1, "floor bound needs positive n, theta, rho");
  require(rho <= n, "floor bound needs rho <= n");
  require(k >= 1 && k <= n, "k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
  const auto ni = static_cast<std::int64_t>(n);
  const BigInt total = binomial(ni, static_cast<std::int64_t>(k));
  const BigInt missing = binomial(ni - static_cast<std::int64_t>(rho), static_cast<std::int64_t>(k));
  return to_i64(floor_div(BigInt(theta) * (total - missing), total));
}

inline std::int64_t floor_bound(const FrParams& p, std::size_t k) { return floor_bound(p.n, p.theta, p.rho, k); }

// ceil(n C(M-1, alpha) / C(theta, alpha)) + 1: the fewest nodes that can carry a file of size M.
inline std::int64_t min_reconstruction_degree(std::size_t n, std::size_t alpha, std::size_t theta,
                                              std::size_t file_size) {
  using detail::require;
  require(n >= 1 && alpha >= 1 && alpha <= theta, "need n >= 1 and 1 <= alpha <= theta");
  require(file_size >= 1 && file_size <= theta,
          "file size M = " + std::to_string(file_size) + " outside 1.." + std::to_string(theta));
  const BigInt num = BigInt(n) * binomial(static_cast<std::int64_t>(file_size) - 1, static_cast<std::int64_t>(alpha));
  const BigInt den = binomial(static_cast<std::int64_t>(theta), static_cast<std::int64_t>(alpha));
  return to_i64(ceil_div(num, den)) + 1;
}

// MBR storage capacity [k d - C(k, 2)] beta of an (n, k, d, alpha, beta) regenerating code.
inline std::int64_t mbr_capacity(std::size_t k, std::size_t d, std::size_t beta) {
  detail::require(k <= d, "MBR capacity needs k <= d");
  const auto kk = static_cast<std::int64_t>(k);
  return (kk * static_cast<std::int64_t>(d) - kk * (kk - 1) / 2) * static_cast<std::int64_t>(beta);
}

struct BoundRow {
  std::size_t k = 0;
  std::int64_t recursive = 0;
  std::int64_t dual = 0;
  std::int64_t floor = 0;
  std::int64_t tightest() const { return std::min({recursive, dual, floor}); }
};

struct BoundProfile {
  FrParams params;
  std::vector<std::int64_t> g;        // g(1)..g(n)
  std::vector<std::int64_t> g_prime;  // g'(1)..g'(theta)
  std::vector<BoundRow> rows;         // k = 1..n
};

inline BoundProfile bound_profile(const FrParams& p) {
  BoundProfile out{p, recursive_sequence(p), dual_g_sequence(p), {}};
  const auto n = static_cast<std::int64_t>(p.n);
  for (std::size_t k = 1; k <= p.n; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    const auto dual = std::count_if(out.g_prime.begin(), out.g_prime.end(), [&](std::int64_t g) { return kk > n - g; });
    out.rows.push_back({k, out.g[k - 1], dual, floor_bound(p, k)});
  }
  return out;
}

inline nlohmann::json to_json(const BoundRow& r) {
  return {{"k", r.k}, {"recursive", r.recursive}, {"dual", r.dual}, {"floor", r.floor}, {"tightest", r.tightest()}};
}

}  // namespace frc
