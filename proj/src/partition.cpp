#include "iwn/partition.hpp"

#include <limits>

#include <fmt/format.h>

#include "iwn/error.hpp"

namespace iwn {

Partition::Partition(std::span<const std::size_t> assignment) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> relabel;
  assignment_.reserve(assignment.size());
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    const std::size_t raw = assignment[v];
    if (raw == unset) {
      throw Error(Errc::InvalidPartition, fmt::format("vertex {} has no community", v));
    }
    if (raw >= relabel.size()) relabel.resize(raw + 1, unset);
    if (relabel[raw] == unset) {
      relabel[raw] = members_.size();
      members_.emplace_back();
    }
    assignment_.push_back(relabel[raw]);
    members_[relabel[raw]].push_back(v);
  }
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::size_t> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = i;
  return Partition(a);
}

Partition Partition::all_in_one(std::size_t n) {
  const std::vector<std::size_t> a(n, 0);
  return Partition(a);
}

Partition Partition::merged(std::size_t r, std::size_t s) const {
  if (r >= community_count() || s >= community_count()) {
    throw Error(Errc::InvalidPartition, fmt::format("no community {} or {}", r, s));
  }
  std::vector<std::size_t> a = assignment_;
  for (auto& c : a) {
    if (c == s) c = r;
  }
  return Partition(a);
}

Partition Partition::moved(std::size_t v, std::size_t c) const {
  if (v >= vertex_count() || c >= community_count()) {
    throw Error(Errc::InvalidPartition, fmt::format("cannot move vertex {} to {}", v, c));
  }
  std::vector<std::size_t> a = assignment_;
  a[v] = c;
  return Partition(a);
}

}  // namespace iwn
