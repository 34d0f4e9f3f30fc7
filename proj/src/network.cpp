#include "iwn/network.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>

#include <fmt/format.h>

#include "iwn/error.hpp"

namespace iwn {

IWNetwork::IWNetwork(std::vector<std::string> labels, std::vector<Interval> weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
  const std::size_t n = labels_.size();
  if (weights_.size() != n * n) {
    throw Error(Errc::InvalidNetwork,
                fmt::format("{} labels but {} matrix cells", n, weights_.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Interval& w = weight(i, j);
      if (w.lo() < 0.0) {
        throw Error(Errc::NegativeWeight,
                    fmt::format("{} between {} and {}", to_string(w), labels_[i], labels_[j]));
      }
      if (j > i && w != weight(j, i)) {
        throw Error(Errc::InvalidNetwork,
                    fmt::format("asymmetric weights between {} and {}", labels_[i], labels_[j]));
      }
    }
  }
}

IWNetwork IWNetwork::midpoints() const {
  std::vector<Interval> w;
  w.reserve(weights_.size());
  for (const auto& x : weights_) w.emplace_back(midpoint(x));
  return IWNetwork(labels_, std::move(w));
}

Interval strength(const IWNetwork& net, std::size_t i) {
  Interval s;
  for (std::size_t j = 0; j < net.size(); ++j) s += net.weight(i, j);
  return s;
}

Interval total_weight(const IWNetwork& net) {
  Interval t;
  for (const auto& w : net.weights()) t += w;
  return t;
}

namespace {

void check_record(const DirectedFlowRecord& r) {
  if (r.lo < 0.0) {
    throw Error(Errc::NegativeWeight, fmt::format("{} -> {} has lo {}", r.src, r.dst, r.lo));
  }
  if (!(r.lo <= r.hi)) {
    throw Error(Errc::InvalidInterval,
                fmt::format("{} -> {} has lo {} > hi {}", r.src, r.dst, r.lo, r.hi));
  }
  // Validates finiteness too.
  Interval(r.lo, r.hi);
}

class Builder {
 public:
  std::size_t index(const std::string& label) {
    auto [it, inserted] = index_.try_emplace(label, labels_.size());
    if (inserted) labels_.push_back(label);
    return it->second;
  }

  void merge(std::size_t i, std::size_t j, double lo, double hi) {
    auto key = std::minmax(i, j);
    auto [it, inserted] = edges_.try_emplace({key.first, key.second}, Interval(lo, hi));
    if (!inserted) {
      it->second = Interval(std::min(it->second.lo(), lo), std::max(it->second.hi(), hi));
    }
  }

  IWNetwork build() && {
    const std::size_t n = labels_.size();
    std::vector<Interval> w(n * n);
    for (const auto& [key, value] : edges_) {
      w[key.first * n + key.second] = value;
      w[key.second * n + key.first] = value;
    }
    return IWNetwork(std::move(labels_), std::move(w));
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::map<std::pair<std::size_t, std::size_t>, Interval> edges_;
};

template <typename Key>
IngestResult ingest(std::span<const DirectedFlowRecord> records, double threshold, Key key) {
  IngestResult result;
  Builder builder;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& r = records[k];
    check_record(r);
    const std::size_t i = builder.index(r.src);
    const std::size_t j = builder.index(r.dst);
    if (auto [it, inserted] = seen.try_emplace(key(i, j), k); !inserted) {
      throw Error(Errc::DuplicateEdge,
                  fmt::format("{} -> {} repeats record {}", r.src, r.dst, it->second + 1));
    }
    if (i == j) {
      ++result.dropped_self_loops;
      continue;
    }
    if (r.hi < threshold) {
      ++result.dropped_below_threshold;
      continue;
    }
    builder.merge(i, j, r.lo, r.hi);
  }
  result.network = std::move(builder).build();
  return result;
}

}  // namespace

IngestResult symmetrize(std::span<const DirectedFlowRecord> records, double threshold) {
  return ingest(records, threshold, [](std::size_t i, std::size_t j) { return std::pair(i, j); });
}

IngestResult from_undirected(std::span<const DirectedFlowRecord> records, double threshold) {
  return ingest(records, threshold, [](std::size_t i, std::size_t j) {
    auto [a, b] = std::minmax(i, j);
    return std::pair(a, b);
  });
}

namespace {

std::vector<std::string> community_labels(const IWNetwork& net, const Partition& p) {
  if (p.vertex_count() != net.size()) {
    throw Error(Errc::InvalidPartition,
                fmt::format("partition of {} vertices for a network of {}", p.vertex_count(),
                            net.size()));
  }
  std::vector<std::string> labels;
  labels.reserve(p.community_count());
  for (std::size_t c = 0; c < p.community_count(); ++c) {
    labels.push_back(community_name(net, p.members(c)));
  }
  return labels;
}

}  // namespace

IWNetwork aggregate_sum(const IWNetwork& net, const Partition& p) {
  auto labels = community_labels(net, p);
  const std::size_t q = p.community_count();
  std::vector<Interval> w(q * q);
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = 0; j < net.size(); ++j) {
      w[p.community_of(i) * q + p.community_of(j)] += net.weight(i, j);
    }
  }
  // (c,d) and (d,c) accumulate in different orders; keep one of them.
  for (std::size_t c = 0; c < q; ++c) {
    for (std::size_t d = 0; d < c; ++d) w[c * q + d] = w[d * q + c];
  }
  return IWNetwork(std::move(labels), std::move(w));
}

IWNetwork aggregate_minmax(const IWNetwork& net, const Partition& p) {
  auto labels = community_labels(net, p);
  const std::size_t q = p.community_count();
  std::vector<std::optional<Interval>> env(q * q);
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = 0; j < net.size(); ++j) {
      if (!net.has_edge(i, j)) continue;
      const Interval& x = net.weight(i, j);
      auto& cell = env[p.community_of(i) * q + p.community_of(j)];
      cell = cell ? Interval(std::min(cell->lo(), x.lo()), std::max(cell->hi(), x.hi())) : x;
    }
  }
  std::vector<Interval> w;
  w.reserve(env.size());
  for (const auto& cell : env) w.push_back(cell.value_or(Interval{}));
  return IWNetwork(std::move(labels), std::move(w));
}

std::string community_name(const IWNetwork& net, std::span<const std::size_t> members) {
  std::string name;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k > 0) name += ',';
    name += net.label(members[k]);
  }
  return name;
}

}  // namespace iwn
