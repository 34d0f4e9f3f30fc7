#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "iwn/interval.hpp"
#include "iwn/network.hpp"
#include "iwn/partition.hpp"

namespace iwn::test {

inline IWNetwork make_network(std::size_t n,
                              const std::vector<std::pair<std::pair<std::size_t, std::size_t>,
                                                          Interval>>& edges) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
  std::vector<Interval> w(n * n);
  for (const auto& [ij, x] : edges) {
    w[ij.first * n + ij.second] = x;
    w[ij.second * n + ij.first] = x;
  }
  return IWNetwork(std::move(labels), std::move(w));
}

// v1-v2 [1,3], v1-v3 [1,1], v2-v3 [1,1], v3-v4 [2,4]
inline IWNetwork toy() {
  return make_network(4, {{{0, 1}, Interval(1, 3)},
                          {{0, 2}, Interval(1, 1)},
                          {{1, 2}, Interval(1, 1)},
                          {{2, 3}, Interval(2, 4)}});
}

// Midpoint projection of toy(): 2, 1, 1, 3.
inline IWNetwork toy_midpoint() {
  return make_network(4, {{{0, 1}, Interval(2.0)},
                          {{0, 2}, Interval(1.0)},
                          {{1, 2}, Interval(1.0)},
                          {{2, 3}, Interval(3.0)}});
}

// v1-v2 2, v1-v3 1; 2w = 6.
inline IWNetwork triplet() {
  return make_network(3, {{{0, 1}, Interval(2.0)}, {{0, 2}, Interval(1.0)}});
}

inline Partition partition_of(std::vector<std::size_t> a) { return Partition(a); }

// Random connected-ish network: each pair gets an edge with probability
// `density`; midpoints in [0.5, 10], radii in [0, max_radius] clipped at lo >= 0.
inline IWNetwork random_network(std::mt19937_64& rng, std::size_t n, double max_radius,
                                double density = 0.6) {
  std::uniform_real_distribution<double> mid(0.5, 10.0);
  std::uniform_real_distribution<double> rad(0.0, max_radius);
  std::bernoulli_distribution present(density);
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Interval>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // keep a spanning path so the total weight is never zero
      if (j != i + 1 && !present(rng)) continue;
      const double m = mid(rng);
      const double r = std::min(rad(rng), m);
      edges.push_back({{i, j}, Interval(m - r, m + r)});
    }
  }
  return make_network(n, edges);
}

// Degenerate integer weights whose doubled total is a power of two, so every
// modularity quantity is an exactly representable dyadic rational.
inline IWNetwork random_dyadic_network(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> weight(1, 8);
  std::bernoulli_distribution present(0.5);
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Interval>> edges;
  long sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j != i + 1 && !present(rng)) continue;
      const int w = weight(rng);
      sum += w;
      edges.push_back({{i, j}, Interval(static_cast<double>(w))});
    }
  }
  long target = 1;
  while (target < sum) target *= 2;
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  auto& bumped = edges[pick(rng)].second;
  bumped = Interval(bumped.lo() + static_cast<double>(target - sum));
  return make_network(n, edges);
}

inline Interval random_interval(std::mt19937_64& rng, double span = 10.0) {
  std::uniform_real_distribution<double> d(-span, span);
  double a = d(rng);
  double b = d(rng);
  if (a > b) std::swap(a, b);
  return Interval(a, b);
}

inline double sample(std::mt19937_64& rng, const Interval& x) {
  std::uniform_real_distribution<double> t(0.0, 1.0);
  return std::min(x.hi(), x.lo() + t(rng) * (x.hi() - x.lo()));
}

}  // namespace iwn::test
