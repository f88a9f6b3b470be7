#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fga/growth.hpp"

namespace fga {

class CycleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Expansion factor of a lamination: a real > 1, exact when a defining
/// polynomial is known.
struct ExpansionFactor {
  long double approx = 0;
  std::optional<AlgebraicReal> exact;

  static ExpansionFactor numeric(long double v);
  /// Largest real root of `poly`.
  static ExpansionFactor largest_root(const IntPoly& poly);
  [[nodiscard]] GrowthType as_growth(int m) const;
};

/// Declared attracting laminations ordered by inclusion.
class LaminationPoset {
 public:
  std::size_t add_node(std::string label, ExpansionFactor lambda0);
  /// Records sub < super (sub strictly contained in super).
  void add_edge(std::size_t sub, std::size_t super);
  void add_edge(const std::string& sub, const std::string& super);

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_[i]; }
  [[nodiscard]] const ExpansionFactor& lambda0(std::size_t i) const { return factors_[i]; }
  /// Direct sub-laminations as declared.
  [[nodiscard]] const std::vector<std::size_t>& below(std::size_t i) const { return below_[i]; }
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  [[nodiscard]] std::size_t index_of(const std::string& label) const;

  /// Topological order, subs first; throws CycleError.
  [[nodiscard]] std::vector<std::size_t> topological_order() const;
  /// Every node strictly below i (transitive).
  [[nodiscard]] std::vector<std::size_t> strictly_below(std::size_t i) const;

 private:
  std::vector<std::string> labels_;
  std::vector<ExpansionFactor> factors_;
  std::vector<std::vector<std::size_t>> below_;
};

/// Growth type of one node by the inclusion recursion (memoized over the
/// whole poset).
GrowthType growth_type_of_node(const LaminationPoset& poset, std::size_t node);
/// All node growth types at once.
std::vector<GrowthType> growth_types(const LaminationPoset& poset);

/// Reference evaluation straight from the rules, taking the maximum over
/// the full transitive set of sub-laminations at every node.
std::vector<GrowthType> growth_types_brute_force(const LaminationPoset& poset);

struct PosetReport {
  std::vector<GrowthType> types;
  std::size_t e = 0;
  std::size_t s = 0;        ///< longest chain, in edges
  std::size_t e_prime = 0;  ///< distinct growth types
};

PosetReport poset_invariants(const LaminationPoset& poset);
bool check_m_le_s(const PosetReport& report);

/// Number of distinct (lambda, m) among `types`.
std::size_t count_distinct_types(const std::vector<GrowthType>& types);

}  // namespace fga
