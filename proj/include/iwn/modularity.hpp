#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "iwn/interval.hpp"
#include "iwn/method.hpp"
#include "iwn/network.hpp"
#include "iwn/partition.hpp"

namespace iwn {

// Scalar routines (q_scalar, expected_scalar, ...) read the midpoints of the
// network's weights, so a degenerate network is a plain weighted network.

enum class ExpectedMode { Scalar, IntervalAdjusted };

/// Per-pair expected weights. Scalar tables hold degenerate intervals.
class ExpectedTable {
 public:
  ExpectedTable(ExpectedMode mode, std::size_t n, std::vector<Interval> cells);

  ExpectedMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return n_; }
  const Interval& at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

 private:
  ExpectedMode mode_;
  std::size_t n_;
  std::vector<Interval> cells_;
};

/// e_ij = s_i s_j / 2w. Throws Errc::ZeroTotalWeight.
ExpectedTable expected_scalar(const IWNetwork& net);

/// Adjusted totals for pair (i, j): the i/j strengths are pinned at one
/// endpoint while the other strengths stay intervals.
struct AdjustedTotal {
  double min_upper = 0.0;  ///< min 2w̄', denominator of the upper bound
  double max_lower = 0.0;  ///< max 2w̲', denominator of the lower bound
};
AdjustedTotal adjusted_total(const IWNetwork& net, std::size_t i, std::size_t j);

/// e'_ij = [s̲_i s̲_j / max 2w̲', s̄_i s̄_j / min 2w̄'].
/// Throws Errc::ZeroInAdjustedTotal, Errc::ZeroTotalWeight.
ExpectedTable expected_interval_adjusted(const IWNetwork& net);

/// Adjusted expectation of a community seen as a single merged vertex with
/// strength `s` while the remaining strengths sum to `rest`:
/// [s̲² / (s̲ + rest̄), s̄² / (s̄ + rest̲)].
Interval adjusted_self_expectation(const Interval& s, const Interval& rest);

/// o_rr: interval sum over ordered pairs inside each community.
std::vector<Interval> observed_blocks(const IWNetwork& net, const Partition& p);
/// e_rr for the interval modularity (see adjusted_self_expectation).
std::vector<Interval> expected_blocks_adjusted(const IWNetwork& net, const Partition& p);

// ---- scalar modularity ------------------------------------------------------

/// Q^N = Σ_C Σ_{i,j∈C} (o_ij − e_ij), without the 1/2w factor.
double q_scalar(const IWNetwork& net, const Partition& p);
/// Q^N after merging communities r and s minus Q^N before.
double dq_scalar_full(const IWNetwork& net, const Partition& p, std::size_t r, std::size_t s);
/// 2 (o_rs − e_rs) with community block sums.
double dq_scalar_reduced(const IWNetwork& net, const Partition& p, std::size_t r, std::size_t s);
/// 2w − Σ_C Σ_{i,j∈C} e_ij.
double q_max_scalar(const IWNetwork& net, const Partition& p);
/// Throws Errc::DegenerateDenominator when Q_max is 0.
double q_norm_scalar(const IWNetwork& net, const Partition& p);

// ---- interval modularity ----------------------------------------------------

/// Q^I = Σ_r D(o_rr, e_rr).
double q_interval(std::span<const Interval> observed, std::span<const Interval> expected);
/// Q^I of a partition with adjusted expectations.
double q_interval(const IWNetwork& net, const Partition& p);
inline double dq_interval(double q_new, double q_last) { return q_new - q_last; }
/// D([2w̲, 2w̄], Σ_r e_rr).
double q_max_interval(const IWNetwork& net, const Partition& p);

/// Modularity under the metric a strategy optimises: Q^I for Classic, Q^N of
/// the midpoints otherwise.
double modularity(const IWNetwork& net, const Partition& p, Method method);
double q_max(const IWNetwork& net, const Partition& p, Method method);
/// Q / Q_max. Throws Errc::DegenerateDenominator.
double q_norm(const IWNetwork& net, const Partition& p, Method method);

}  // namespace iwn
