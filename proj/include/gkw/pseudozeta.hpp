#ifndef GKW_PSEUDOZETA_HPP
#define GKW_PSEUDOZETA_HPP

#include <gkw/bigfloat.hpp>

#include <vector>

namespace gkw {

struct PseudoZetaOptions {
  long prec = 96;
  // Subtrees whose certified contribution bound falls below prune_eps
  // (scaled per level by the measured dominant ratio, so truncation biases
  // nearly cancel in the level-to-level ratios) are cut and accounted in
  // the tail bounds.
  double prune_eps = 1e-15;
  unsigned long long node_budget = 600000000ULL;
};

struct PseudoZetaSum {
  BigFloat sum;         // underestimates the true level sum
  BigFloat tail_bound;  // by at most this much
  unsigned long long nodes = 0;
};

struct PseudoZetaEstimate {
  std::vector<BigFloat> level_sums;      // [d-1] = sum over A(d), d = 1..kMax
  std::vector<BigFloat> tail_bounds;     // same indexing
  std::vector<BigFloat> root_estimates;  // level_sums[d-1]^(1/d)
  std::vector<BigFloat> ratio_estimates; // level_sums[d]/level_sums[d-1]
  unsigned long long nodes = 0;
};

// Sum of <a>^-s over tuples a in A(k) with entries <= max_entry, where <a>
// is the continuant q_k (q_j = a_j q_{j-1} + q_{j-2}). Entries beyond
// max_entry and pruned subtrees are covered by the certified tail bound
// (integral bound per node, times zeta(s)^(remaining depth) for deeper
// levels). Throws BudgetExceeded past options.node_budget nodes.
PseudoZetaSum pseudozeta_sum(const BigFloat& s, int k, long max_entry,
                             const PseudoZetaOptions& options = {});

// One enumeration accumulating every level d <= kMax; the ratio sequence
// is the primary estimator for lambda_1(s), the k-th root the paper's
// definition.
PseudoZetaEstimate pseudozeta_estimate(const BigFloat& s, int kMax, long max_entry,
                                       const PseudoZetaOptions& options = {});

}  // namespace gkw

#endif
