#pragma once

// Supported file size M_k(C) and complementary size N_k(C) = theta - M_k(C).
//
// M_k is the smallest union over all k-subsets of blocks. It is found by a
// depth-first branch-and-bound over block indices in increasing order, so the
// first optimal subset reached is the lexicographically smallest one.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "frc/error.hpp"
#include "frc/incidence.hpp"
#include "json.hpp"

namespace frc {

struct SearchOptions {
  // Budget on partial selections visited by a single search.
  std::uint64_t max_states = 100'000'000;
};

struct MinUnion {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // block indices, increasing
  std::uint64_t states = 0;
};

namespace detail {

class MinUnionSearch {
 public:
  using Word = PointSet::Word;

  MinUnionSearch(const FrCode& code, std::size_t k, const SearchOptions& opt, bool want_witness,
                 std::size_t lower_bound)
      : n_(code.n()),
        k_(k),
        words_(PointSet::word_count(code.theta())),
        want_witness_(want_witness),
        lower_bound_(lower_bound),
        max_states_(opt.max_states),
        blocks_(n_ * words_),
        unions_((k + 1) * words_, 0),
        current_(k, 0) {
    for (std::size_t i = 0; i < n_; ++i)
      std::copy_n(code.block_set(i).words().begin(), words_, blocks_.begin() + i * words_);
  }

  MinUnion run() {
    best_ = greedy_bound();
    if (!want_witness_ && best_ <= lower_bound_) return {best_, {}, states_};
    descend(0, 0);
    return {best_, witness_, states_};
  }

 private:
  std::size_t greedy_bound() const {
    std::vector<Word> u(words_, 0);
    std::vector<bool> used(n_, false);
    std::size_t total = 0;
    for (std::size_t step = 0; step < k_; ++step) {
      std::size_t pick = n_, pick_gain = SIZE_MAX;
      for (std::size_t b = 0; b < n_; ++b) {
        if (used[b]) continue;
        std::size_t gain = 0;
        for (std::size_t w = 0; w < words_; ++w)
          gain += static_cast<std::size_t>(std::popcount(blocks_[b * words_ + w] & ~u[w]));
        if (gain < pick_gain) pick = b, pick_gain = gain;
      }
      used[pick] = true;
      total += pick_gain;
      for (std::size_t w = 0; w < words_; ++w) u[w] |= blocks_[pick * words_ + w];
    }
    return total;
  }

  bool pruned(std::size_t bound) const {
    if (want_witness_) return bound > best_ || (bound == best_ && have_witness_);
    return bound >= best_;
  }

  void descend(std::size_t depth, std::size_t start) {
    const std::size_t remaining = k_ - depth;
    const Word* parent = unions_.data() + depth * words_;
    Word* child = unions_.data() + (depth + 1) * words_;
    for (std::size_t b = start; b + remaining <= n_; ++b) {
      if (done_) return;
      if (++states_ > max_states_)
        throw LimitExceeded("subset enumeration exceeded " + std::to_string(max_states_) +
                            " states (k = " + std::to_string(k_) + ", n = " + std::to_string(n_) + ")");
      const Word* blk = blocks_.data() + b * words_;
      std::size_t size = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        child[w] = parent[w] | blk[w];
        size += static_cast<std::size_t>(std::popcount(child[w]));
      }
      // the union only grows, so `size` bounds every completion from below
      if (pruned(size)) continue;
      current_[depth] = b;
      if (remaining == 1) {
        record(size);
      } else {
        descend(depth + 1, b + 1);
      }
    }
  }

  void record(std::size_t size) {
    if (size < best_ || (want_witness_ && !have_witness_ && size == best_)) {
      best_ = size;
      witness_ = current_;
      have_witness_ = true;
      if (!want_witness_ && best_ <= lower_bound_) done_ = true;
    }
  }

  std::size_t n_, k_, words_;
  bool want_witness_;
  std::size_t lower_bound_;
  std::uint64_t max_states_;
  std::vector<Word> blocks_;
  std::vector<Word> unions_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> witness_;
  std::size_t best_ = 0;
  bool have_witness_ = false;
  bool done_ = false;
  std::uint64_t states_ = 0;
};

inline void check_degree(const FrCode& code, std::size_t k, std::size_t lo) {
  require(k >= lo && k <= code.n(), "reconstruction degree k = " + std::to_string(k) + " outside " +
                                        std::to_string(lo) + ".." + std::to_string(code.n()));
}

inline std::size_t min_union_size(const FrCode& code, std::size_t k, const SearchOptions& opt,
                                  std::size_t lower_bound) {
  if (k == 0) return 0;
  return MinUnionSearch(code, k, opt, false, std::max(lower_bound, code.alpha())).run().size;
}

}  // namespace detail

// M_k(C) for 1 <= k <= n.
inline std::size_t supported_file_size(const FrCode& code, std::size_t k, const SearchOptions& opt = {}) {
  detail::check_degree(code, k, 1);
  return detail::min_union_size(code, k, opt, 0);
}

// M_k(C) together with the lexicographically smallest k-subset attaining it.
inline MinUnion min_union_witness(const FrCode& code, std::size_t k, const SearchOptions& opt = {}) {
  detail::check_degree(code, k, 1);
  return detail::MinUnionSearch(code, k, opt, true, 0).run();
}

// N_k(C): the widest all-zero k-row submatrix of the incidence matrix. N_0 = theta.
inline std::size_t complementary_size(const FrCode& code, std::size_t k, const SearchOptions& opt = {}) {
  detail::check_degree(code, k, 0);
  return k == 0 ? code.theta() : code.theta() - supported_file_size(code, k, opt);
}

struct Hierarchy {
  std::size_t n = 0;
  std::size_t theta = 0;
  std::vector<std::size_t> m_values;  // M_0..M_n, M_0 = 0
  std::vector<std::size_t> n_values;  // N_0..N_n, N_k = theta - M_k

  std::size_t M(std::size_t k) const { return m_values.at(k); }
  std::size_t N(std::size_t k) const { return n_values.at(k); }

  friend bool operator==(const Hierarchy&, const Hierarchy&) = default;
};

// Builds a Hierarchy from M_0..M_n and checks the monotone-chain invariants.
inline Hierarchy make_hierarchy(std::size_t theta, std::vector<std::size_t> m_values) {
  using detail::require;
  require(m_values.size() >= 2, "hierarchy needs at least M_0 and M_1");
  require(m_values.front() == 0, "M_0 must be 0");
  require(m_values.back() == theta, "M_n must equal theta");
  for (std::size_t k = 1; k < m_values.size(); ++k)
    require(m_values[k - 1] <= m_values[k], "M_k must be non-decreasing");
  Hierarchy h;
  h.n = m_values.size() - 1;
  h.theta = theta;
  h.n_values.reserve(m_values.size());
  for (std::size_t m : m_values) h.n_values.push_back(theta - m);
  h.m_values = std::move(m_values);
  return h;
}

// Direct enumeration on the code itself, one branch-and-bound per k.
inline Hierarchy direct_hierarchy(const FrCode& code, const SearchOptions& opt = {}) {
  std::vector<std::size_t> m(code.n() + 1, 0);
  for (std::size_t k = 1; k <= code.n(); ++k) m[k] = detail::min_union_size(code, k, opt, m[k - 1]);
  return make_hierarchy(code.theta(), std::move(m));
}

// M_k(C) = #{ i in 1..theta : k > N_i(C^t) }, from the dual's chain N_0..N_theta.
inline Hierarchy hierarchy_from_dual(std::span<const std::size_t> dual_n_values, std::size_t theta,
                                     std::size_t n) {
  using detail::require;
  require(dual_n_values.size() == theta + 1, "dual chain must have theta + 1 = " + std::to_string(theta + 1) +
                                                 " entries, got " + std::to_string(dual_n_values.size()));
  require(dual_n_values.front() == n, "dual chain must start at N_0 = n");
  require(dual_n_values.back() == 0, "dual chain must end at N_theta = 0");
  for (std::size_t i = 1; i <= theta; ++i)
    require(dual_n_values[i] <= dual_n_values[i - 1], "dual chain must be non-increasing");
  std::vector<std::size_t> m(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 1; i <= theta; ++i) m[k] += k > dual_n_values[i] ? 1 : 0;
  return make_hierarchy(theta, std::move(m));
}

// The dual's hierarchy, obtained from this one by the same transfer.
inline Hierarchy transfer_to_dual(const Hierarchy& h) { return hierarchy_from_dual(h.n_values, h.n, h.theta); }

enum class HierarchyMethod {
  automatic,  // enumerate on whichever orientation has fewer blocks
  direct,
};

inline Hierarchy full_hierarchy(const FrCode& code, HierarchyMethod method = HierarchyMethod::automatic,
                                const SearchOptions& opt = {}) {
  if (method == HierarchyMethod::automatic && code.theta() < code.n())
    return transfer_to_dual(direct_hierarchy(dual(code), opt));
  return direct_hierarchy(code, opt);
}

// Smallest k with M_k >= file_size, or n + 1 if none.
inline std::size_t min_degree_for(const Hierarchy& h, std::size_t file_size) {
  for (std::size_t k = 0; k <= h.n; ++k)
    if (h.M(k) >= file_size) return k;
  return h.n + 1;
}

struct ParetoPoint {
  std::size_t k0 = 0;
  std::size_t l0 = 0;
  friend bool operator==(const ParetoPoint&, const ParetoPoint&) = default;
};

// Vertices (k0, l0) with l0 = N_k0(C), k0 = N_l0(C^t), and strict decrease of
// both chains beyond them.
inline std::vector<ParetoPoint> pareto_points(const Hierarchy& h, const Hierarchy& dual_h) {
  detail::require(dual_h.n == h.theta && dual_h.theta == h.n, "hierarchies are not a code/dual pair");
  std::vector<ParetoPoint> out;
  for (std::size_t k0 = 0; k0 <= h.n; ++k0) {
    const std::size_t l0 = h.N(k0);
    if (dual_h.N(l0) != k0) continue;
    bool strict = true;
    for (std::size_t k = k0 + 1; k <= h.n && strict; ++k) strict = h.N(k) < l0;
    for (std::size_t l = l0 + 1; l <= dual_h.n && strict; ++l) strict = dual_h.N(l) < k0;
    if (strict) out.push_back({k0, l0});
  }
  return out;
}

inline std::vector<ParetoPoint> pareto_points(const FrCode& code, const SearchOptions& opt = {}) {
  const Hierarchy h = full_hierarchy(code, HierarchyMethod::automatic, opt);
  return pareto_points(h, transfer_to_dual(h));
}

inline nlohmann::json to_json(const Hierarchy& h) {
  return {{"n", h.n}, {"theta", h.theta}, {"M", h.m_values}, {"N", h.n_values}};
}

// Stair-case vertices (k, N_k) for plotting.
inline std::string staircase_csv(const Hierarchy& h) {
  std::ostringstream os;
  os << "k,N_k\n";
  for (std::size_t k = 0; k <= h.n; ++k) os << k << ',' << h.N(k) << '\n';
  return os.str();
}

}  // namespace frc
