#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "iwn/method.hpp"
#include "iwn/network.hpp"
#include "iwn/partition.hpp"

namespace iwn {

/// Pairs the phase-1 gain metric with the phase-2 aggregation rule.
class Strategy {
 public:
  constexpr explicit Strategy(Method m) noexcept : method_(m) {}

  static constexpr Strategy classic_interval() { return Strategy(Method::Classic); }
  static constexpr Strategy hybrid() { return Strategy(Method::Hybrid); }
  static constexpr Strategy midpoint() { return Strategy(Method::Midpoint); }

  Method method() const noexcept { return method_; }
  /// Network the run starts from (the midpoint baseline drops the widths).
  IWNetwork prepare(const IWNetwork& net) const;
  IWNetwork aggregate(const IWNetwork& net, const Partition& p) const;

 private:
  Method method_;
};

struct CandidateGain {
  std::size_t community = 0;
  double gain = 0.0;

  friend bool operator==(const CandidateGain&, const CandidateGain&) = default;
};

/// Gains of moving `vertex`, taken out of its community, into each candidate
/// community of `p`: communities holding a neighbour (a self-loop makes the
/// own community a neighbour) and the former community if it is non-empty
/// without the vertex. Sorted by community id.
std::vector<CandidateGain> evaluate_moves(const IWNetwork& net, const Partition& p,
                                          std::size_t vertex, Strategy strategy);

// ---- run record ---------------------------------------------------------------

struct TryEvent {
  std::string target;
  double gain = 0.0;
};

/// One vertex visit inside a sweep. Names are taken before the vertex is
/// removed from its community.
struct VisitEvent {
  std::string vertex;
  std::vector<TryEvent> tries;
  bool moved = false;
  std::string destination;  ///< target community when moved, else the kept one
};

struct Iteration {
  std::vector<VisitEvent> visits;
  double modularity = 0.0;
};

struct Pass {
  IWNetwork network;          ///< level the pass optimised
  std::vector<Iteration> iterations;
  Partition partition;        ///< communities of `network`
  bool changed = false;
  IWNetwork aggregated;       ///< next level (equals `network` when unchanged)
  double modularity = 0.0;    ///< on `aggregated` with singleton communities
};

struct LouvainRun {
  Method method = Method::Classic;
  IWNetwork initial;          ///< network the first pass ran on
  double initial_modularity = 0.0;
  std::vector<Pass> passes;
  Partition final_partition;  ///< on the original vertices
  IWNetwork final_network;    ///< super-vertices of the last level
  double final_q = 0.0;
  double final_q_max = 0.0;
  std::optional<double> final_q_norm;  ///< empty when q_max is 0
};

struct RunOptions {
  std::size_t max_sweeps = 100;
};

/// Multi-pass Louvain. Vertices are visited in index order; a vertex joins
/// the candidate with the largest gain when that gain is strictly positive
/// and strictly better than staying. Passes repeat until one merges nothing.
/// Throws Errc::EmptyNetwork, Errc::ZeroTotalWeight, Errc::IterationLimit.
LouvainRun run(const IWNetwork& net, Strategy strategy, RunOptions options = {});

/// Final communities expanded through every aggregation level.
Partition compose_partitions(const LouvainRun& run);

/// Line-oriented log of the run.
std::string emit_trace(const LouvainRun& run);

/// Matrix block used in traces and CLI output.
std::string format_matrix(const IWNetwork& net);

}  // namespace iwn
