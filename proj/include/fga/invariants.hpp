#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fga/automorphism.hpp"
#include "fga/bigint.hpp"

namespace fga {

class InadmissibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One inequality lhs <= rhs.
struct Check {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  bool pass = false;
};

inline bool all_pass(const std::vector<Check>& checks) {
  for (const Check& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

/// e + d <= n-1, 4e + 2d <= 3n-2, and 4e + 2d <= 3n-3 when d > 0.
/// Accepts e' in place of e.
std::vector<Check> check_ed(long long n, long long e, long long d);
bool admissible(long long n, long long e, long long d);

struct RationalPoint {
  BigRational e;
  BigRational d;
};

/// (0,0), (0,n-1), ((n-1)/2,(n-1)/2), ((3n-2)/4,0), counter-clockwise.
std::array<RationalPoint, 4> quadrilateral_vertices(long long n);
/// Closed-polygon membership, exact.
bool in_quadrilateral(long long n, const BigRational& e, const BigRational& d);

/// The largest rk Fix allowed by the two fixed-rank bounds.
long long max_fixed_rank(long long n, long long e, long long d);

/// e + (d-1)^+ + fix <= n and 4e + 2d + 2 fix <= 3n+1 (3n when d = 0).
std::vector<Check> check_fix_rank(long long n, long long e, long long d, long long fix);

/// 2s + (d-1)^+ + r <= n-2 and 2s + d <= n-2; requires s >= 1.
std::vector<Check> check_chain_bound(long long n, long long s, long long d, long long r);

struct SearchOptions {
  int jobs = 0;                      ///< OpenMP threads (0: runtime default)
  bool serial = false;               ///< reference implementation
  std::size_t max_words = 50'000'000;
  std::size_t length_cap = 100'000;  ///< per-class length cap for period search
};

/// Rank of the subgroup generated by fixed words of length <= max_len;
/// a lower bound for rk Fix. Meet in the middle: w = uv is fixed iff
/// u^-1 a(u) = v a(v)^-1.
std::size_t fix_rank_lower_bound(const Automorphism& a, std::size_t max_len,
                                 const SearchOptions& opts = {});
/// The fixed words found, in shortlex order, before folding.
std::vector<Word> fixed_words(const Automorphism& a, std::size_t max_len,
                              const SearchOptions& opts = {});

struct PeriodicSearchStats {
  std::size_t classes = 0;
  std::size_t periodic = 0;
  std::size_t skipped = 0;  ///< lengths ran past the cap before deciding
};

/// Rank of the span in Z^n of abelianized periodic classes of length
/// <= max_len with period <= max_period; a lower bound for k.
std::size_t k_lower_bound(const Automorphism& a, std::size_t max_len,
                          std::size_t max_period, const SearchOptions& opts = {},
                          PeriodicSearchStats* stats = nullptr);

/// Rank of the integer span of the rows (fraction-free elimination).
std::size_t integer_span_rank(const std::vector<std::vector<long long>>& rows);

}  // namespace fga
