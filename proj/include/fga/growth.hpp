#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fga/automorphism.hpp"
#include "fga/bigint.hpp"
#include "fga/polynomial.hpp"
#include "fga/recurrence.hpp"

namespace fga {

class GrowthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Provenance { exact, fitted };

/// Relative tolerance under which two numerically known rates coincide.
inline constexpr long double kRateTolerance = 1e-6L;

/// Growth like lambda^p p^m.
struct GrowthType {
  long double lambda = 1;
  std::optional<AlgebraicReal> lambda_exact;
  int m = 0;
  Provenance provenance = Provenance::exact;
  double confidence = 1.0;
  long double lambda_error = 0;  ///< estimated absolute error (fitted only)
  bool conclusive = true;

  [[nodiscard]] bool exponential() const { return lambda > 1 + 1e-9L; }
  static GrowthType polynomial(int degree);
};

/// Same exponential rate: exact comparison when both rates are algebraic,
/// otherwise |lambda - lambda'| / lambda < kRateTolerance.
bool same_rate(const GrowthType& a, const GrowthType& b);
/// Lexicographic (lambda, m) comparison: -1, 0 or 1.
int compare_growth(const GrowthType& a, const GrowthType& b);
inline bool same_type(const GrowthType& a, const GrowthType& b) {
  return compare_growth(a, b) == 0;
}

struct LengthSequence {
  Word subject;
  bool cyclic = true;
  BigInt initial;               ///< |subject| (cyclic length for classes)
  std::vector<BigInt> values;   ///< L_1 .. L_P
  bool truncated = false;
};

using TransitionMatrix = std::vector<std::vector<BigInt>>;

/// entry[i][j] = occurrences of generator i (either sign) in the image of j.
TransitionMatrix transition_matrix(const Automorphism& a);

struct CancellationCertificate {
  bool valid = false;
  bool cyclic = true;
  /// Closed set of adjacent letter pairs; sorted.
  std::vector<std::pair<Letter, Letter>> turns;
  std::string failure;
};

/// Closes the turns of the subject (with its wrap-around turn for classes)
/// and of the generator images under the image map; valid when no junction
/// ever cancels.
CancellationCertificate certify_no_cancellation(const Automorphism& a,
                                                const Word& subject,
                                                bool cyclic);

/// Direct iteration. Classes are cyclically reduced after every step.
/// Stops with truncated=true when a length exceeds `cap`.
LengthSequence iterate_lengths(const Automorphism& a, const Word& subject,
                               bool cyclic, std::size_t steps, std::size_t cap);

/// L_p = |M^p v|_1 for a certified subject.
LengthSequence exact_lengths(const Automorphism& a, const Word& subject,
                             const CancellationCertificate& cert,
                             std::size_t steps);

struct PfResult {
  long double lambda = 0;
  long double error_bound = 0;
  std::vector<long double> eigenvector;
  long double residual = 0;  ///< |Mv - lambda v|_inf / |v|_inf
};

/// Dominant eigenvalue of a nonnegative matrix: the maximum over its
/// irreducible components, each bracketed by Collatz-Wielandt bounds.
PfResult pf_eigenvalue(const TransitionMatrix& m);

struct ClassifyOptions {
  std::size_t max_order = 0;  ///< recurrence order limit (0: none)
  std::size_t min_terms = 8;
};

/// Exact recurrence detection first, then a fitted estimate.
GrowthType classify_growth(const LengthSequence& seq, const ClassifyOptions& opts = {});

struct GrowthOptions {
  std::size_t max_iter = 40;
  std::size_t cap = 10'000'000;
  std::size_t exact_iter = 0;  ///< 0: max(max_iter, 2n + 8)
  bool prefer_exact = true;
  bool early_stop = true;
};

struct GrowthResult {
  GrowthType type;
  LengthSequence sequence;
  bool certified = false;
};

GrowthResult growth_of_class(const Automorphism& a, const Word& g,
                             const GrowthOptions& opts = {});
/// Element growth, measured as the class of t g under a extended by t -> t.
GrowthResult growth_of_element(const Automorphism& a, const Word& g,
                               const GrowthOptions& opts = {});

/// Every class measurement made in this process, with the rank it was made
/// in. Used to audit global bounds.
struct MeasurementLog {
  static void record(std::size_t rank, const GrowthType& type);
  static std::vector<std::pair<std::size_t, GrowthType>> snapshot();
  static void clear();
};

}  // namespace fga
