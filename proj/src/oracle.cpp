#include "iwn/oracle.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "iwn/error.hpp"

namespace iwn::oracle {

namespace {

bool together(const Partition& p, std::size_t i, std::size_t j) {
  return p.community_of(i) == p.community_of(j);
}

// A zero numerator wins over a zero total: weightless vertices expect nothing.
double quotient(double num, double den) { return num == 0.0 ? 0.0 : num / den; }

// Q^N = Σ_i Σ_j (o_ij − s_i s_j / 2w) δ(c_i, c_j) on midpoints.
double q_pairwise(const IWNetwork& net, const Partition& p) {
  const std::size_t n = net.size();
  std::vector<double> s(n, 0.0);
  double two_w = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s[i] += midpoint(net.weight(i, j));
    two_w += s[i];
  }
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (together(p, i, j)) q += midpoint(net.weight(i, j)) - quotient(s[i] * s[j], two_w);
    }
  }
  return q;
}

// Q^I = Σ_r D(o_rr, e_rr). The adjusted totals pin the community's own
// strength at one endpoint: max([s̲_C] + Σ_{l∉C} s_l) and min([s̄_C] + Σ_{l∉C} s_l).
double q_interval_definitional(const IWNetwork& net, const Partition& p) {
  const std::size_t n = net.size();
  std::vector<Interval> s(n);
  Interval total;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s[i] = s[i] + net.weight(i, j);
    total = total + s[i];
  }
  double q = 0.0;
  for (std::size_t r = 0; r < p.community_count(); ++r) {
    const std::size_t anchor = p.members(r).front();
    Interval observed;
    Interval inside;
    Interval others;
    for (std::size_t i = 0; i < n; ++i) {
      if (!together(p, i, anchor)) {
        others = others + s[i];
        continue;
      }
      inside = inside + s[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (together(p, j, anchor)) observed = observed + net.weight(i, j);
      }
    }
    const double max_lower_total = (Interval(inside.lo()) + others).hi();
    const double min_upper_total = (Interval(inside.hi()) + others).lo();
    const Interval expected(quotient(inside.lo() * inside.lo(), max_lower_total),
                            quotient(inside.hi() * inside.hi(), min_upper_total));
    q += signed_diff(observed, expected);
  }
  return q;
}

}  // namespace

double q_definitional(const IWNetwork& net, const Partition& p, Method method) {
  if (p.vertex_count() != net.size()) {
    throw Error(Errc::InvalidPartition, "oracle: partition does not match the network");
  }
  return method == Method::Classic ? q_interval_definitional(net, p) : q_pairwise(net, p);
}

void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit) {
  // Restricted-growth string: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  for (;;) {
    visit(Partition(a));
    std::size_t i = n;
    while (i > 1 && a[i - 1] == prefix_max[i - 2] + 1) --i;
    if (i <= 1) return;
    ++a[i - 1];
    prefix_max[i - 1] = std::max(prefix_max[i - 2], a[i - 1]);
    for (std::size_t k = i; k < n; ++k) {
      a[k] = 0;
      prefix_max[k] = prefix_max[i - 1];
    }
  }
}

std::uint64_t bell_number(std::size_t n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

Report enumerate_best(const IWNetwork& net, Method method) {
  if (net.size() > max_vertices) {
    throw Error(Errc::TooLarge,
                fmt::format("{} vertices; exhaustive search is limited to {}", net.size(),
                            max_vertices));
  }
  if (net.empty()) throw Error(Errc::EmptyNetwork, "oracle: network has no vertices");
  Report report;
  report.best_q = -std::numeric_limits<double>::infinity();
  for_each_partition(net.size(), [&](const Partition& p) {
    ++report.partitions_evaluated;
    const double q = q_definitional(net, p, method);
    if (q > report.best_q) {
      report.best_q = q;
      report.best_partition = p;
    }
  });
  return report;
}

}  // namespace iwn::oracle
