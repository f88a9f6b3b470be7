#include "fga/subgroup_graph.hpp"

#include <utility>

namespace fga {

namespace {
constexpr std::uint32_t reverse_slot(std::uint32_t s) { return s ^ 1u; }
}  // namespace

SubgroupGraph::SubgroupGraph(std::size_t rank) : rank_(rank), slots_(2 * rank) {
  base_ = new_vertex();
}

int SubgroupGraph::new_vertex() {
  const int v = static_cast<int>(parent_.size());
  parent_.push_back(v);
  size_.push_back(1);
  out_.resize(out_.size() + slots_, kNone);
  ++alive_;
  return v;
}

int SubgroupGraph::find(int v) const {
  while (parent_[static_cast<std::size_t>(v)] != v) {
    v = parent_[static_cast<std::size_t>(v)];
  }
  return v;
}

int SubgroupGraph::target(int v, std::uint32_t slot) const {
  const int t = out_[static_cast<std::size_t>(v) * slots_ + slot];
  return t == kNone ? kNone : find(t);
}

void SubgroupGraph::add_edge(int u, std::uint32_t slot, int v) {
  u = find(u);
  v = find(v);
  if (const int t = target(u, slot); t != kNone) {
    merge(t, v);
    return;
  }
  if (const int t = target(v, reverse_slot(slot)); t != kNone) {
    merge(t, u);
    return;
  }
  out_[static_cast<std::size_t>(u) * slots_ + slot] = v;
  out_[static_cast<std::size_t>(v) * slots_ + reverse_slot(slot)] = u;
}

void SubgroupGraph::merge(int a0, int b0) {
  std::vector<std::pair<int, int>> pending{{a0, b0}};
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    a = find(a);
    b = find(b);
    if (a == b) continue;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) {
      std::swap(a, b);
    }
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    --alive_;
    if (b == base_) base_ = a;
    for (std::uint32_t s = 0; s < slots_; ++s) {
      int& from_b = out_[static_cast<std::size_t>(b) * slots_ + s];
      if (from_b == kNone) continue;
      const int t = find(from_b);
      from_b = kNone;
      int& from_a = out_[static_cast<std::size_t>(a) * slots_ + s];
      if (from_a == kNone) {
        from_a = t;
      } else {
        // Two edges with the same label leave the merged vertex: fold them.
        pending.emplace_back(from_a, t);
      }
    }
  }
}

void SubgroupGraph::add_generator(const Word& w) {
  if (w.rank() != rank_) throw RankError("rank mismatch in subgroup graph");
  const auto letters = w.letters();
  const std::size_t len = letters.size();
  if (len == 0) return;

  int head = find(base_);
  std::size_t i = 0;
  while (i < len) {
    const int t = target(head, letters[i].key());
    if (t == kNone) break;
    head = t;
    ++i;
  }
  int tail = find(base_);
  std::size_t j = len;
  while (j > i) {
    const int t = target(tail, letters[j - 1].inverse().key());
    if (t == kNone) break;
    tail = t;
    --j;
  }
  if (i == j) {
    merge(head, tail);
    return;
  }
  int cur = head;
  for (std::size_t k = i; k + 1 < j; ++k) {
    const int v = new_vertex();
    add_edge(cur, letters[k].key(), v);
    cur = find(v);
  }
  add_edge(cur, letters[j - 1].key(), tail);
}

bool SubgroupGraph::contains(const Word& w) const {
  if (w.rank() != rank_) throw RankError("rank mismatch in subgroup graph");
  int v = find(base_);
  for (Letter l : w.letters()) {
    v = target(v, l.key());
    if (v == kNone) return false;
  }
  return v == find(base_);
}

std::size_t SubgroupGraph::vertex_count() const { return alive_; }

std::size_t SubgroupGraph::edge_count() const {
  std::size_t slots = 0;
  for (std::size_t v = 0; v < parent_.size(); ++v) {
    if (parent_[v] != static_cast<int>(v)) continue;
    for (std::size_t s = 0; s < slots_; ++s) {
      if (out_[v * slots_ + s] != kNone) ++slots;
    }
  }
  return slots / 2;
}

bool SubgroupGraph::is_folded() const {
  for (std::size_t v = 0; v < parent_.size(); ++v) {
    if (parent_[v] != static_cast<int>(v)) continue;
    for (std::uint32_t s = 0; s < slots_; ++s) {
      const int t = target(static_cast<int>(v), s);
      if (t == kNone) continue;
      if (target(t, reverse_slot(s)) != static_cast<int>(v)) return false;
    }
  }
  return true;
}

std::size_t SubgroupGraph::subgroup_rank() const {
  return edge_count() + 1 - vertex_count();
}

std::size_t subgroup_rank(std::span<const Word> generators) {
  if (generators.empty()) return 0;
  SubgroupGraph g(generators.front().rank());
  for (const Word& w : generators) g.add_generator(w);
  return g.subgroup_rank();
}

}  // namespace fga
