#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "iwn/interval.hpp"
#include "iwn/partition.hpp"

namespace iwn {

/// Undirected interval-weighted network stored as a symmetric n×n
/// interval matrix (the observed contingency table). An absent edge is
/// exactly [0,0]; the diagonal holds self-loops of aggregated vertices.
class IWNetwork {
 public:
  IWNetwork() = default;
  /// `weights` is row-major n×n. Throws Errc::InvalidNetwork on size or
  /// symmetry mismatch and Errc::NegativeWeight when any lo < 0.
  IWNetwork(std::vector<std::string> labels, std::vector<Interval> weights);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const Interval& weight(std::size_t i, std::size_t j) const { return weights_[i * size() + j]; }
  bool has_edge(std::size_t i, std::size_t j) const { return !weight(i, j).is_zero(); }

  /// Row-major view of the matrix.
  std::span<const Interval> weights() const noexcept { return weights_; }

  /// Same topology with every weight replaced by its degenerate midpoint.
  IWNetwork midpoints() const;

  friend bool operator==(const IWNetwork&, const IWNetwork&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Interval> weights_;
};

/// Interval sum of row i, diagonal included.
Interval strength(const IWNetwork& net, std::size_t i);
/// Σ_i Σ_j weights, i.e. [2w_lo, 2w_hi].
Interval total_weight(const IWNetwork& net);

struct DirectedFlowRecord {
  std::string src;
  std::string dst;
  double lo = 0.0;
  double hi = 0.0;
};

struct IngestResult {
  IWNetwork network;
  std::size_t dropped_self_loops = 0;
  std::size_t dropped_below_threshold = 0;
};

/// Builds the undirected envelope o_ij = [min(lo_ij, lo_ji), max(hi_ij, hi_ji)]
/// from directed flows. Records with hi < threshold are discarded first;
/// self-loop records are dropped and counted. Vertices keep first-appearance
/// order over all records.
IngestResult symmetrize(std::span<const DirectedFlowRecord> records, double threshold);

/// Same as symmetrize() but each record is already an unordered pair; a
/// second record for the same pair in either orientation is DuplicateEdge.
IngestResult from_undirected(std::span<const DirectedFlowRecord> records, double threshold);

/// Super-vertex network whose weights are interval sums over member pairs.
IWNetwork aggregate_sum(const IWNetwork& net, const Partition& p);

/// Super-vertex network whose weights are [min lo, max hi] over the present
/// edges between the two communities; [0,0] when no edge connects them.
IWNetwork aggregate_minmax(const IWNetwork& net, const Partition& p);

/// Name of a community: member labels joined by commas, in vertex order.
std::string community_name(const IWNetwork& net, std::span<const std::size_t> members);

/// Reads the `src,dst,lo,hi` edge list. Throws Errc::ParseError with the
/// 1-based line number.
std::vector<DirectedFlowRecord> read_edge_csv(std::istream& in);
std::vector<DirectedFlowRecord> read_edge_csv_file(const std::string& path);

}  // namespace iwn
