#include "fga/sweep.hpp"

#include <set>

#include <omp.h>

#include "fga/enumerate.hpp"

namespace fga {

std::vector<Word> sweep_subjects(std::size_t rank, const SweepOptions& opts) {
  std::vector<Word> out = enumerate_classes(rank, opts.max_len);
  std::set<CyclicWord> seen;
  for (const Word& w : out) seen.insert(CyclicWord(w));
  for (const Word& w : opts.extra_classes) {
    if (w.rank() != rank) throw RankError("extra class has the wrong rank");
    const CyclicWord c(w);
    if (c.empty()) continue;
    if (seen.count(c) || seen.count(c.inverse())) continue;
    seen.insert(c);
    out.push_back(c.word());
  }
  return out;
}

namespace {

ClassResult measure(const Automorphism& a, const Word& subject, const GrowthOptions& opts) {
  ClassResult r;
  r.subject = subject;
  try {
    r.result = growth_of_class(a, subject, opts);
    r.ok = true;
  } catch (const GrowthError& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace

std::vector<ClassResult> sweep_classes_parallel(const Automorphism& a,
                                                const std::vector<Word>& subjects,
                                                const GrowthOptions& opts, int jobs) {
  std::vector<ClassResult> out(subjects.size());
  if (jobs > 0) omp_set_num_threads(jobs);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < subjects.size(); ++i) out[i] = measure(a, subjects[i], opts);
  return out;
}

std::vector<ClassResult> sweep_classes_serial(const Automorphism& a,
                                              const std::vector<Word>& subjects,
                                              const GrowthOptions& opts) {
  std::vector<ClassResult> out;
  out.reserve(subjects.size());
  for (const Word& s : subjects) out.push_back(measure(a, s, opts));
  return out;
}

SweepSummary summarize(const std::vector<ClassResult>& results) {
  SweepSummary s;
  s.classes = results.size();
  for (const ClassResult& r : results) {
    if (!r.ok) {
      ++s.failed;
      continue;
    }
    const GrowthType& g = r.result.type;
    const bool reliable_rate =
        g.provenance == Provenance::exact || g.lambda_error < kRateTolerance * g.lambda;
    if (!g.conclusive || (g.exponential() && !reliable_rate)) {
      ++s.inconclusive;
      continue;
    }
    if (!g.exponential()) {
      s.d = std::max(s.d, g.m);
      continue;
    }
    bool known = false;
    for (const GrowthType& t : s.exponential_types) {
      if (same_type(t, g)) {
        known = true;
        break;
      }
    }
    if (!known) s.exponential_types.push_back(g);
  }
  s.e_prime = s.exponential_types.size();
  return s;
}

SweepSummary sweep(const Automorphism& a, const SweepOptions& opts,
                   std::vector<ClassResult>* results) {
  const std::vector<Word> subjects = sweep_subjects(a.rank(), opts);
  std::vector<ClassResult> r = sweep_classes_parallel(a, subjects, opts.growth, opts.jobs);
  SweepSummary s = summarize(r);
  if (results) *results = std::move(r);
  return s;
}

}  // namespace fga
