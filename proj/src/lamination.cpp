#include "fga/lamination.hpp"

#include <algorithm>
#include <functional>

namespace fga {

ExpansionFactor ExpansionFactor::numeric(long double v) {
  if (!(v > 1)) throw std::invalid_argument("expansion factor must exceed 1");
  ExpansionFactor f;
  f.approx = v;
  return f;
}

ExpansionFactor ExpansionFactor::largest_root(const IntPoly& poly) {
  auto r = largest_real_root(poly);
  if (!r) throw std::invalid_argument("polynomial " + poly.str() + " has no real root");
  reduce_to_minimal(*r);
  if (!(r->approx > 1)) throw std::invalid_argument("expansion factor must exceed 1");
  ExpansionFactor f;
  f.approx = r->approx;
  f.exact = std::move(r);
  return f;
}

GrowthType ExpansionFactor::as_growth(int m) const {
  GrowthType g;
  g.lambda = approx;
  g.lambda_exact = exact;
  g.m = m;
  g.provenance = Provenance::exact;
  return g;
}

std::size_t LaminationPoset::add_node(std::string label, ExpansionFactor lambda0) {
  if (!(lambda0.approx > 1)) throw std::invalid_argument("expansion factor must exceed 1");
  for (const auto& l : labels_) {
    if (l == label) throw std::invalid_argument("duplicate node label " + label);
  }
  labels_.push_back(std::move(label));
  factors_.push_back(std::move(lambda0));
  below_.emplace_back();
  return labels_.size() - 1;
}

void LaminationPoset::add_edge(std::size_t sub, std::size_t super) {
  if (sub >= size() || super >= size()) throw std::out_of_range("poset node index");
  if (sub == super) throw CycleError("node " + labels_[sub] + " below itself");
  auto& b = below_[super];
  if (std::find(b.begin(), b.end(), sub) == b.end()) b.push_back(sub);
}

void LaminationPoset::add_edge(const std::string& sub, const std::string& super) {
  add_edge(index_of(sub), index_of(super));
}

std::size_t LaminationPoset::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw std::invalid_argument("unknown poset node " + label);
}

std::vector<std::pair<std::size_t, std::size_t>> LaminationPoset::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t s = 0; s < size(); ++s) {
    for (std::size_t b : below_[s]) out.emplace_back(b, s);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.second != y.second ? x.second < y.second : x.first < y.first;
  });
  return out;
}

std::vector<std::size_t> LaminationPoset::topological_order() const {
  std::vector<int> state(size(), 0);  // 0 new, 1 open, 2 done
  std::vector<std::size_t> order;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    if (state[v] == 2) return;
    if (state[v] == 1) throw CycleError("inclusion cycle through " + labels_[v]);
    state[v] = 1;
    for (std::size_t b : below_[v]) visit(b);
    state[v] = 2;
    order.push_back(v);
  };
  for (std::size_t v = 0; v < size(); ++v) visit(v);
  return order;
}

std::vector<std::size_t> LaminationPoset::strictly_below(std::size_t i) const {
  std::vector<bool> seen(size(), false);
  std::vector<std::size_t> stack(below_[i].begin(), below_[i].end());
  std::vector<std::size_t> out;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    if (v == i) throw CycleError("inclusion cycle through " + labels_[i]);
    seen[v] = true;
    out.push_back(v);
    for (std::size_t b : below_[v]) stack.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// The three-way rule applied to an already known maximum below the node.
GrowthType apply_rule(const ExpansionFactor& lambda0, const std::optional<GrowthType>& max_below) {
  const GrowthType own = lambda0.as_growth(0);
  if (!max_below) return own;
  if (same_rate(*max_below, own)) return lambda0.as_growth(max_below->m + 1);
  if (max_below->lambda > own.lambda) return *max_below;
  return own;
}

void keep_max(std::optional<GrowthType>& acc, const GrowthType& g) {
  if (!acc || compare_growth(g, *acc) > 0) acc = g;
}

}  // namespace

std::vector<GrowthType> growth_types(const LaminationPoset& poset) {
  std::vector<GrowthType> c(poset.size());
  for (std::size_t v : poset.topological_order()) {
    std::optional<GrowthType> below;
    for (std::size_t b : poset.below(v)) keep_max(below, c[b]);
    c[v] = apply_rule(poset.lambda0(v), below);
  }
  return c;
}

GrowthType growth_type_of_node(const LaminationPoset& poset, std::size_t node) {
  if (node >= poset.size()) throw std::out_of_range("poset node index");
  return growth_types(poset)[node];
}

std::vector<GrowthType> growth_types_brute_force(const LaminationPoset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::vector<std::size_t>> below(n);
  for (std::size_t v = 0; v < n; ++v) below[v] = poset.strictly_below(v);
  // Induction on the number of contained laminations.
  std::vector<std::size_t> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return below[x].size() < below[y].size(); });
  std::vector<GrowthType> c(n);
  for (std::size_t v : order) {
    std::optional<GrowthType> max_below;
    for (std::size_t b : below[v]) keep_max(max_below, c[b]);
    c[v] = apply_rule(poset.lambda0(v), max_below);
  }
  return c;
}

std::size_t count_distinct_types(const std::vector<GrowthType>& types) {
  std::vector<GrowthType> distinct;
  for (const GrowthType& g : types) {
    bool found = false;
    for (const GrowthType& d : distinct) {
      if (same_type(g, d)) {
        found = true;
        break;
      }
    }
    if (!found) distinct.push_back(g);
  }
  return distinct.size();
}

PosetReport poset_invariants(const LaminationPoset& poset) {
  PosetReport r;
  r.types = growth_types(poset);
  r.e = poset.size();
  std::vector<std::size_t> depth(poset.size(), 0);
  for (std::size_t v : poset.topological_order()) {
    for (std::size_t b : poset.below(v)) depth[v] = std::max(depth[v], depth[b] + 1);
    r.s = std::max(r.s, depth[v]);
  }
  r.e_prime = count_distinct_types(r.types);
  return r;
}

bool check_m_le_s(const PosetReport& report) {
  return std::all_of(report.types.begin(), report.types.end(), [&](const GrowthType& g) {
    return g.m >= 0 && static_cast<std::size_t>(g.m) <= report.s;
  });
}

}  // namespace fga
