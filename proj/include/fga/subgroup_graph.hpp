#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fga/word.hpp"

namespace fga {

/// Stallings graph of a finitely generated subgroup of F_n.
///
/// Generators are added incrementally; the graph is kept folded after every
/// insertion, so `contains` is a deterministic walk from the basepoint.
class SubgroupGraph {
 public:
  explicit SubgroupGraph(std::size_t rank);

  /// Adds a generator loop at the basepoint and folds.
  void add_generator(const Word& w);
  /// True when w labels a closed walk at the basepoint.
  [[nodiscard]] bool contains(const Word& w) const;
  /// Rank of the subgroup generated so far: E - V + 1.
  [[nodiscard]] std::size_t subgroup_rank() const;

  [[nodiscard]] std::size_t vertex_count() const;
  [[nodiscard]] std::size_t edge_count() const;
  [[nodiscard]] bool is_folded() const;
  [[nodiscard]] std::size_t rank() const { return rank_; }

 private:
  static constexpr int kNone = -1;
  int find(int v) const;
  int new_vertex();
  void add_edge(int u, std::uint32_t slot, int v);
  void merge(int a, int b);
  [[nodiscard]] int target(int v, std::uint32_t slot) const;

  std::size_t rank_;
  std::size_t slots_;
  std::vector<int> out_;  // out_[v * slots_ + letter key]
  mutable std::vector<int> parent_;
  std::vector<int> size_;
  std::size_t alive_ = 0;
  int base_ = 0;
};

/// Rank of the subgroup generated by `generators` (empty list: 0).
std::size_t subgroup_rank(std::span<const Word> generators);

}  // namespace fga
