#pragma once

#include <string>
#include <vector>

#include "fga/growth.hpp"

namespace fga {

struct ClassResult {
  Word subject;
  bool ok = false;
  std::string error;
  GrowthResult result;
};

struct SweepOptions {
  GrowthOptions growth;
  std::size_t max_len = 2;
  int jobs = 0;  ///< OpenMP threads (0: runtime default)
  std::vector<Word> extra_classes;
};

/// Canonical classes of length <= max_len followed by the extra classes,
/// duplicates removed.
std::vector<Word> sweep_subjects(std::size_t rank, const SweepOptions& opts);

/// Class growth for every subject; results in subject order.
std::vector<ClassResult> sweep_classes_parallel(const Automorphism& a,
                                                const std::vector<Word>& subjects,
                                                const GrowthOptions& opts, int jobs = 0);
/// Reference implementation of the same map, one class after another.
std::vector<ClassResult> sweep_classes_serial(const Automorphism& a,
                                              const std::vector<Word>& subjects,
                                              const GrowthOptions& opts);

struct SweepSummary {
  std::size_t classes = 0;
  std::size_t failed = 0;        ///< errors, e.g. too few terms under the cap
  std::size_t inconclusive = 0;  ///< fitted without a reliable degree or rate
  int d = 0;                     ///< largest polynomial degree
  std::size_t e_prime = 0;       ///< distinct exponential growth types
  std::vector<GrowthType> exponential_types;
};

/// A fitted exponential rate counts toward e' only when its estimated
/// error is below the rate tolerance.
SweepSummary summarize(const std::vector<ClassResult>& results);

SweepSummary sweep(const Automorphism& a, const SweepOptions& opts,
                   std::vector<ClassResult>* results = nullptr);

}  // namespace fga
