#pragma once

#include <optional>
#include <vector>

#include "fga/bigint.hpp"
#include "fga/polynomial.hpp"

namespace fga {

/// v[t] = c[0] v[t-1] + ... + c[k-1] v[t-k] for every t >= start + k.
struct Recurrence {
  std::vector<BigInt> coeffs;
  std::size_t start = 0;
  /// x^k - c[0] x^(k-1) - ... - c[k-1]
  IntPoly charpoly;
  [[nodiscard]] std::size_t order() const { return coeffs.size(); }
};

struct RecurrenceOptions {
  std::size_t max_order = 0;      ///< 0: no limit
  std::size_t max_transient = 3;  ///< leading terms allowed to disagree
  std::size_t extra_checks = 4;   ///< terms beyond 2k that must also match
};

/// Shortest integer linear recurrence (Berlekamp-Massey over Q) that
/// reproduces the sequence after a short transient and is overdetermined
/// by at least `extra_checks` terms.
std::optional<Recurrence> find_recurrence(const std::vector<BigInt>& values,
                                          const RecurrenceOptions& opts = {});

/// Berlekamp-Massey over Q. Returns the connection polynomial
/// 1 + C1 x + ... + CL x^L as rationals, with L its linear complexity.
std::vector<BigRational> berlekamp_massey(const std::vector<BigInt>& values,
                                          std::size_t& complexity);

}  // namespace fga
