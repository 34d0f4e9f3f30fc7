#include "iwn/modularity.hpp"

#include <utility>

#include <fmt/format.h>

#include "iwn/error.hpp"

namespace iwn {

ExpectedTable::ExpectedTable(ExpectedMode mode, std::size_t n, std::vector<Interval> cells)
    : mode_(mode), n_(n), cells_(std::move(cells)) {
  if (cells_.size() != n_ * n_) {
    throw Error(Errc::InvalidNetwork, fmt::format("expected table of {} cells for n={}",
                                                  cells_.size(), n_));
  }
}

namespace {

void check_partition(const IWNetwork& net, const Partition& p) {
  if (p.vertex_count() != net.size()) {
    throw Error(Errc::InvalidPartition, fmt::format("partition of {} vertices for a network of {}",
                                                    p.vertex_count(), net.size()));
  }
}

std::vector<Interval> strengths(const IWNetwork& net) {
  std::vector<Interval> s(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) s[i] = strength(net, i);
  return s;
}

// num / den for adjusted expectations. 0/0 is 0: a vertex without edges
// expects nothing.
double adjusted_ratio(double num, double den) {
  if (num == 0.0) return 0.0;
  if (den <= 0.0) {
    throw Error(Errc::ZeroInAdjustedTotal, fmt::format("adjusted total {} for numerator {}", den, num));
  }
  return num / den;
}

// ---- scalar helpers (midpoints) ----

std::vector<double> scalar_strengths(const IWNetwork& net) {
  std::vector<double> s(net.size(), 0.0);
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = 0; j < net.size(); ++j) s[i] += midpoint(net.weight(i, j));
  }
  return s;
}

double scalar_total(const IWNetwork& net) {
  double t = 0.0;
  for (const auto& w : net.weights()) t += midpoint(w);
  if (t == 0.0) throw Error(Errc::ZeroTotalWeight, "midpoint total weight is 0");
  return t;
}

struct ScalarBlocks {
  std::vector<double> observed;  // o_C
  std::vector<double> strength;  // s_C
  double total = 0.0;            // 2w
};

ScalarBlocks scalar_blocks(const IWNetwork& net, const Partition& p) {
  check_partition(net, p);
  ScalarBlocks b;
  b.total = scalar_total(net);
  b.observed.assign(p.community_count(), 0.0);
  b.strength.assign(p.community_count(), 0.0);
  const auto s = scalar_strengths(net);
  for (std::size_t i = 0; i < net.size(); ++i) {
    const std::size_t ci = p.community_of(i);
    b.strength[ci] += s[i];
    for (std::size_t j = 0; j < net.size(); ++j) {
      if (p.community_of(j) == ci) b.observed[ci] += midpoint(net.weight(i, j));
    }
  }
  return b;
}

}  // namespace

ExpectedTable expected_scalar(const IWNetwork& net) {
  const double total = scalar_total(net);
  const auto s = scalar_strengths(net);
  const std::size_t n = net.size();
  std::vector<Interval> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e.emplace_back(s[i] * s[j] / total);
  }
  return ExpectedTable(ExpectedMode::Scalar, n, std::move(e));
}

AdjustedTotal adjusted_total(const IWNetwork& net, std::size_t i, std::size_t j) {
  const auto s = strengths(net);
  AdjustedTotal t;
  for (std::size_t l = 0; l < s.size(); ++l) {
    const bool pinned = l == i || l == j;
    t.max_lower += pinned ? s[l].lo() : s[l].hi();
    t.min_upper += pinned ? s[l].hi() : s[l].lo();
  }
  return t;
}

ExpectedTable expected_interval_adjusted(const IWNetwork& net) {
  if (total_weight(net).hi() == 0.0) throw Error(Errc::ZeroTotalWeight, "total weight is [0,0]");
  const auto s = strengths(net);
  const std::size_t n = net.size();
  std::vector<Interval> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto t = adjusted_total(net, i, j);
      e.emplace_back(adjusted_ratio(s[i].lo() * s[j].lo(), t.max_lower),
                     adjusted_ratio(s[i].hi() * s[j].hi(), t.min_upper));
    }
  }
  return ExpectedTable(ExpectedMode::IntervalAdjusted, n, std::move(e));
}

Interval adjusted_self_expectation(const Interval& s, const Interval& rest) {
  return {adjusted_ratio(s.lo() * s.lo(), s.lo() + rest.hi()),
          adjusted_ratio(s.hi() * s.hi(), s.hi() + rest.lo())};
}

std::vector<Interval> observed_blocks(const IWNetwork& net, const Partition& p) {
  check_partition(net, p);
  std::vector<Interval> o(p.community_count());
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = 0; j < net.size(); ++j) {
      if (p.community_of(i) == p.community_of(j)) o[p.community_of(i)] += net.weight(i, j);
    }
  }
  return o;
}

std::vector<Interval> expected_blocks_adjusted(const IWNetwork& net, const Partition& p) {
  check_partition(net, p);
  if (total_weight(net).hi() == 0.0) throw Error(Errc::ZeroTotalWeight, "total weight is [0,0]");
  const auto s = strengths(net);
  std::vector<Interval> e;
  e.reserve(p.community_count());
  for (std::size_t c = 0; c < p.community_count(); ++c) {
    Interval inside;
    Interval rest;
    for (std::size_t l = 0; l < s.size(); ++l) {
      (p.community_of(l) == c ? inside : rest) += s[l];
    }
    e.push_back(adjusted_self_expectation(inside, rest));
  }
  return e;
}

double q_scalar(const IWNetwork& net, const Partition& p) {
  const auto b = scalar_blocks(net, p);
  double q = 0.0;
  for (std::size_t c = 0; c < b.observed.size(); ++c) {
    q += b.observed[c] - b.strength[c] * b.strength[c] / b.total;
  }
  return q;
}

double dq_scalar_full(const IWNetwork& net, const Partition& p, std::size_t r, std::size_t s) {
  if (r == s) throw Error(Errc::SameCommunity, fmt::format("community {} merged with itself", r));
  return q_scalar(net, p.merged(r, s)) - q_scalar(net, p);
}

double dq_scalar_reduced(const IWNetwork& net, const Partition& p, std::size_t r, std::size_t s) {
  if (r == s) throw Error(Errc::SameCommunity, fmt::format("community {} merged with itself", r));
  const auto b = scalar_blocks(net, p);
  if (r >= b.strength.size() || s >= b.strength.size()) {
    throw Error(Errc::InvalidPartition, fmt::format("no community {} or {}", r, s));
  }
  double o_rs = 0.0;
  for (std::size_t i : p.members(r)) {
    for (std::size_t j : p.members(s)) o_rs += midpoint(net.weight(i, j));
  }
  const double e_rs = b.strength[r] * b.strength[s] / b.total;
  return 2.0 * (o_rs - e_rs);
}

double q_max_scalar(const IWNetwork& net, const Partition& p) {
  const auto b = scalar_blocks(net, p);
  double expected = 0.0;
  for (double sc : b.strength) expected += sc * sc / b.total;
  return b.total - expected;
}

double q_norm_scalar(const IWNetwork& net, const Partition& p) {
  const double qmax = q_max_scalar(net, p);
  if (qmax == 0.0) throw Error(Errc::DegenerateDenominator, "scalar Q_max is 0");
  return q_scalar(net, p) / qmax;
}

double q_interval(std::span<const Interval> observed, std::span<const Interval> expected) {
  if (observed.size() != expected.size()) {
    throw Error(Errc::InvalidPartition, fmt::format("{} observed blocks, {} expected blocks",
                                                    observed.size(), expected.size()));
  }
  double q = 0.0;
  for (std::size_t r = 0; r < observed.size(); ++r) q += signed_diff(observed[r], expected[r]);
  return q;
}

double q_interval(const IWNetwork& net, const Partition& p) {
  return q_interval(observed_blocks(net, p), expected_blocks_adjusted(net, p));
}

double q_max_interval(const IWNetwork& net, const Partition& p) {
  Interval expected;
  for (const auto& e : expected_blocks_adjusted(net, p)) expected += e;
  return signed_diff(total_weight(net), expected);
}

double modularity(const IWNetwork& net, const Partition& p, Method method) {
  return method == Method::Classic ? q_interval(net, p) : q_scalar(net, p);
}

double q_max(const IWNetwork& net, const Partition& p, Method method) {
  return method == Method::Classic ? q_max_interval(net, p) : q_max_scalar(net, p);
}

double q_norm(const IWNetwork& net, const Partition& p, Method method) {
  const double qmax = q_max(net, p, method);
  if (qmax == 0.0) throw Error(Errc::DegenerateDenominator, "Q_max is 0");
  return modularity(net, p, method) / qmax;
}

}  // namespace iwn
