#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace iwn {

/// Assignment of vertices to communities. Community ids are dense and
/// numbered by first appearance in vertex order, so two partitions with
/// the same grouping compare equal.
class Partition {
 public:
  Partition() = default;
  /// Renumbers the given labels canonically. Any non-negative labels allowed.
  explicit Partition(std::span<const std::size_t> assignment);

  static Partition singletons(std::size_t n);
  static Partition all_in_one(std::size_t n);

  std::size_t vertex_count() const noexcept { return assignment_.size(); }
  std::size_t community_count() const noexcept { return members_.size(); }
  std::size_t community_of(std::size_t v) const { return assignment_.at(v); }
  const std::vector<std::size_t>& members(std::size_t c) const { return members_.at(c); }
  const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }

  /// Partition with communities r and s joined.
  Partition merged(std::size_t r, std::size_t s) const;
  /// Partition with vertex v moved into community c.
  Partition moved(std::size_t v, std::size_t c) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> assignment_;
  std::vector<std::vector<std::size_t>> members_;
};

}  // namespace iwn
