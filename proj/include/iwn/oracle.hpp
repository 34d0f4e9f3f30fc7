#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "iwn/method.hpp"
#include "iwn/network.hpp"
#include "iwn/partition.hpp"

namespace iwn::oracle {

inline constexpr std::size_t max_vertices = 12;

struct Report {
  Partition best_partition;
  double best_q = 0.0;
  std::uint64_t partitions_evaluated = 0;
};

/// Modularity straight from the definitions, by double sums over vertex
/// pairs. Shares no code with the modularity module or the driver.
double q_definitional(const IWNetwork& net, const Partition& p, Method method);

/// Visits every set partition of {0..n-1} as a restricted-growth string,
/// in lexicographic order.
void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit);

std::uint64_t bell_number(std::size_t n);

/// Exhaustive maximisation of q_definitional. The first partition in
/// enumeration order wins ties. Throws Errc::TooLarge beyond max_vertices.
Report enumerate_best(const IWNetwork& net, Method method);

}  // namespace iwn::oracle
