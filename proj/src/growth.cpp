#include "fga/growth.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <set>

namespace fga {

GrowthType GrowthType::polynomial(int degree) {
  GrowthType g;
  g.lambda = 1;
  g.lambda_exact = AlgebraicReal::from_integer(1);
  g.m = degree;
  return g;
}

bool same_rate(const GrowthType& a, const GrowthType& b) {
  if (a.lambda_exact && b.lambda_exact) return algebraic_equal(*a.lambda_exact, *b.lambda_exact);
  const long double scale = std::max(a.lambda, b.lambda);
  return std::fabs(a.lambda - b.lambda) < kRateTolerance * scale;
}

int compare_growth(const GrowthType& a, const GrowthType& b) {
  if (!same_rate(a, b)) return a.lambda < b.lambda ? -1 : 1;
  if (a.m != b.m) return a.m < b.m ? -1 : 1;
  return 0;
}

TransitionMatrix transition_matrix(const Automorphism& a) {
  const std::size_t n = a.rank();
  TransitionMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (Letter l : a.image(j).letters()) m[l.index()][j] += 1;
  }
  return m;
}

CancellationCertificate certify_no_cancellation(const Automorphism& a,
                                                const Word& subject, bool cyclic) {
  CancellationCertificate cert;
  cert.cyclic = cyclic;
  if (subject.rank() != a.rank()) throw RankError("rank mismatch in certificate");
  auto letters = subject.letters();
  if (cyclic && letters.size() >= 2 && letters.front().cancels(letters.back())) {
    cert.failure = "subject is not cyclically reduced";
    return cert;
  }

  std::set<std::pair<std::uint32_t, std::uint32_t>> turns;
  std::vector<std::pair<Letter, Letter>> work;
  std::vector<bool> seen_letter(2 * a.rank(), false);
  std::vector<Letter> letter_work;
  auto add_turn = [&](Letter x, Letter y) {
    if (turns.emplace(x.key(), y.key()).second) work.emplace_back(x, y);
  };
  auto add_letter = [&](Letter x) {
    if (!seen_letter[x.key()]) {
      seen_letter[x.key()] = true;
      letter_work.push_back(x);
    }
  };

  for (Letter x : letters) add_letter(x);
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) add_turn(letters[i], letters[i + 1]);
  if (cyclic && !letters.empty()) add_turn(letters.back(), letters.front());

  while (!work.empty() || !letter_work.empty()) {
    while (!letter_work.empty()) {
      const Letter x = letter_work.back();
      letter_work.pop_back();
      auto img = a.image_of(x);
      for (Letter y : img) add_letter(y);
      for (std::size_t i = 0; i + 1 < img.size(); ++i) add_turn(img[i], img[i + 1]);
    }
    if (work.empty()) break;
    const auto [x, y] = work.back();
    work.pop_back();
    const Letter last = a.image_of(x).back();
    const Letter first = a.image_of(y).front();
    if (last.cancels(first)) {
      cert.failure = "junction cancels";
      return cert;
    }
    add_turn(last, first);
  }
  cert.valid = true;
  for (const auto& [x, y] : turns) cert.turns.emplace_back(Letter::from_key(x), Letter::from_key(y));
  return cert;
}

namespace {

class Iteration {
 public:
  // Buffers are reused per thread: long iterations would otherwise pay for
  // fresh pages on every class.
  Iteration(const Automorphism& a, const Word& subject, bool cyclic)
      : a_(a), cyclic_(cyclic), cur_(buffer(0)), next_(buffer(1)) {
    cur_.assign(subject.letters().begin(), subject.letters().end());
    if (cyclic_) cyclically_reduce_in_place(cur_);
  }
  [[nodiscard]] std::size_t length() const { return cur_.size(); }
  /// One step; returns false without committing when the image exceeds cap.
  bool step(std::size_t cap) {
    next_.clear();
    a_.apply_append(cur_, next_);
    if (cyclic_) cyclically_reduce_in_place(next_);
    if (next_.size() > cap) return false;
    std::swap(cur_, next_);
    return true;
  }

 private:
  static std::vector<Letter>& buffer(int which) {
    thread_local std::vector<Letter> buffers[2];
    return buffers[which];
  }

  const Automorphism& a_;
  bool cyclic_;
  std::vector<Letter>& cur_;
  std::vector<Letter>& next_;
};

void check_subject(const Automorphism& a, const Word& subject, bool cyclic) {
  if (subject.rank() != a.rank()) {
    throw RankError("rank mismatch: subject of rank " + std::to_string(subject.rank()) +
                    " for automorphism of rank " + std::to_string(a.rank()));
  }
  const std::size_t len = cyclic ? subject.cyclic_length() : subject.length();
  if (len == 0) throw GrowthError("trivial subject");
}

}  // namespace

LengthSequence iterate_lengths(const Automorphism& a, const Word& subject, bool cyclic,
                               std::size_t steps, std::size_t cap) {
  check_subject(a, subject, cyclic);
  LengthSequence seq;
  seq.subject = subject;
  seq.cyclic = cyclic;
  Iteration it(a, subject, cyclic);
  seq.initial = it.length();
  for (std::size_t p = 0; p < steps; ++p) {
    if (!it.step(cap)) {
      seq.truncated = true;
      break;
    }
    seq.values.emplace_back(it.length());
  }
  return seq;
}

LengthSequence exact_lengths(const Automorphism& a, const Word& subject,
                             const CancellationCertificate& cert, std::size_t steps) {
  if (!cert.valid) throw GrowthError("exact lengths need a valid certificate");
  check_subject(a, subject, cert.cyclic);
  const std::size_t n = a.rank();
  const TransitionMatrix m = transition_matrix(a);
  std::vector<BigInt> v(n, 0);
  for (Letter l : subject.letters()) v[l.index()] += 1;
  LengthSequence seq;
  seq.subject = subject;
  seq.cyclic = cert.cyclic;
  seq.initial = subject.length();
  std::vector<BigInt> next(n);
  for (std::size_t p = 0; p < steps; ++p) {
    BigInt total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (m[i][j] != 0 && v[j] != 0) acc += m[i][j] * v[j];
      }
      next[i] = std::move(acc);
      total += next[i];
    }
    std::swap(v, next);
    seq.values.push_back(std::move(total));
  }
  return seq;
}

namespace {

// Tarjan's strongly connected components on the support of m (edge i -> j
// when m[i][j] > 0).
std::vector<std::vector<std::size_t>> components(const std::vector<std::vector<long double>>& m) {
  const std::size_t n = m.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  int counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (m[v][w] <= 0) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  return out;
}

// Collatz-Wielandt bracket for an irreducible block, iterating on B = A + I
// (primitive, same Perron vector).
std::pair<long double, long double> block_radius(const std::vector<std::vector<long double>>& a) {
  const std::size_t k = a.size();
  std::vector<long double> x(k, 1), y(k);
  long double lo = 0, hi = std::numeric_limits<long double>::max();
  for (int iter = 0; iter < 200000; ++iter) {
    long double norm = 0;
    lo = std::numeric_limits<long double>::max();
    hi = 0;
    for (std::size_t i = 0; i < k; ++i) {
      long double s = x[i];
      for (std::size_t j = 0; j < k; ++j) s += a[i][j] * x[j];
      y[i] = s;
      lo = std::min(lo, s / x[i]);
      hi = std::max(hi, s / x[i]);
      norm = std::max(norm, s);
    }
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / norm;
    if (hi - lo <= 1e-17L * hi) break;
  }
  return {lo - 1, hi - 1};
}

std::vector<long double> solve(std::vector<std::vector<long double>> a, std::vector<long double> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    }
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    if (a[c][c] == 0) a[c][c] = 1e-300L;
    for (std::size_t r = c + 1; r < n; ++r) {
      const long double f = a[r][c] / a[c][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<long double> x(n);
  for (std::size_t r = n; r-- > 0;) {
    long double s = b[r];
    for (std::size_t j = r + 1; j < n; ++j) s -= a[r][j] * x[j];
    x[r] = s / a[r][r];
  }
  return x;
}

}  // namespace

PfResult pf_eigenvalue(const TransitionMatrix& input) {
  const std::size_t n = input.size();
  std::vector<std::vector<long double>> m(n, std::vector<long double>(n));
  bool nonzero = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (input[i].size() != n) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (input[i][j] < 0) throw std::invalid_argument("matrix has a negative entry");
      m[i][j] = input[i][j].convert_to<long double>();
      nonzero = nonzero || input[i][j] != 0;
    }
  }
  if (!nonzero) throw std::invalid_argument("zero matrix has no Perron-Frobenius eigenvalue");

  PfResult r;
  for (const auto& comp : components(m)) {
    const std::size_t k = comp.size();
    if (k == 1 && m[comp[0]][comp[0]] == 0) continue;
    std::vector<std::vector<long double>> a(k, std::vector<long double>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) a[i][j] = m[comp[i]][comp[j]];
    }
    const auto [lo, hi] = block_radius(a);
    const long double mid = (lo + hi) / 2;
    if (mid > r.lambda) {
      r.lambda = mid;
      r.error_bound = (hi - lo) / 2;
    }
  }

  // Eigenvector by shifted inverse iteration; the shift sits just above the
  // eigenvalue so the solve stays nonsingular.
  const long double shift = r.lambda * (1 + 1e-13L) + 1e-15L;
  std::vector<std::vector<long double>> shifted = m;
  for (std::size_t i = 0; i < n; ++i) shifted[i][i] -= shift;
  std::vector<long double> x(n, 1);
  for (int iter = 0; iter < 6; ++iter) {
    std::vector<long double> y = solve(shifted, x);
    long double norm = 0;
    for (long double v : y) norm = std::max(norm, std::fabs(v));
    if (norm == 0 || !std::isfinite(norm)) break;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  long double worst = 0, scale = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long double s = -r.lambda * x[i];
    for (std::size_t j = 0; j < n; ++j) s += m[i][j] * x[j];
    worst = std::max(worst, std::fabs(s));
    scale = std::max(scale, std::fabs(x[i]));
  }
  // A nonnegative eigenvector is only defined up to sign.
  long double sum = 0;
  for (long double v : x) sum += v;
  if (sum < 0) {
    for (long double& v : x) v = -v;
  }
  r.eigenvector = std::move(x);
  r.residual = scale > 0 ? worst / scale : 0;
  return r;
}

namespace {

std::optional<GrowthType> exact_from_recurrence(const Recurrence& rec) {
  IntPoly cp = rec.charpoly;
  // Zero roots only describe transients.
  std::size_t zeros = 0;
  while (zeros < cp.coeffs().size() && cp[zeros] == 0) ++zeros;
  if (zeros > 0) {
    std::vector<BigInt> c(cp.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros),
                          cp.coeffs().end());
    cp = IntPoly(std::move(c));
  }
  if (cp.degree() <= 0) return std::nullopt;
  std::optional<AlgebraicReal> lam = largest_real_root(cp);
  if (!lam) return std::nullopt;
  if (lam->approx < 1 - 1e-12L) return std::nullopt;

  // The real root must dominate every complex root.
  long double radius = 0;
  for (const auto& z : complex_roots(lam->poly)) radius = std::max(radius, std::abs(z));
  if (radius > lam->approx * (1 + 1e-9L) + 1e-12L) return std::nullopt;

  GrowthType g;
  g.m = root_multiplicity(cp, *lam) - 1;
  if (g.m < 0) return std::nullopt;
  reduce_to_minimal(*lam);
  g.lambda = lam->approx;
  if (lam->poly.degree() == 1 && lam->poly[0] == -lam->poly[1]) g.lambda = 1;
  g.lambda_exact = std::move(lam);
  g.provenance = Provenance::exact;
  g.confidence = 1.0;
  return g;
}

long double aitken(long double x0, long double x1, long double x2) {
  const long double d1 = x1 - x0;
  const long double d2 = x2 - x1;
  const long double denom = d2 - d1;
  if (std::fabs(denom) < 1e-30L) return x2;
  return x2 - d2 * d2 / denom;
}

GrowthType fitted(const std::vector<BigInt>& all) {
  const std::size_t t = all.size();  // all[p] = L_p, p = 0..t-1
  std::vector<long double> lg(t);
  for (std::size_t p = 0; p < t; ++p) lg[p] = log_big(all[p]);

  GrowthType g;
  g.provenance = Provenance::fitted;

  // Local log-log slopes; nearly constant for polynomial growth, linear in p
  // for exponential growth.
  auto slope = [&](std::size_t p) {
    return (lg[p + 1] - lg[p]) / (std::log(static_cast<long double>(p + 1)) -
                                  std::log(static_cast<long double>(p)));
  };
  const std::size_t last = t - 2;
  const std::size_t half = std::max<std::size_t>(1, last / 2);
  const long double s_last = slope(last);
  const long double s_half = slope(half);
  if (std::fabs(s_last - s_half) < 0.5L) {
    // Richardson on the 1/p error of the local slope.
    const long double ratio = static_cast<long double>(last) / static_cast<long double>(half);
    const long double est = (ratio * s_last - s_half) / (ratio - 1);
    const long double rounded = std::max<long double>(0, std::round(est));
    const long double resid = std::fabs(est - rounded);
    g.lambda = 1;
    g.lambda_exact = AlgebraicReal::from_integer(1);
    g.m = static_cast<int>(rounded);
    g.confidence = std::max(0.0, 1.0 - static_cast<double>(resid) / 0.5);
    g.conclusive = resid < 0.15L;
    return g;
  }

  // For each candidate degree, correct the ratios by (p/(p+1))^m and
  // accelerate; keep the degree whose corrected ratios settle best.
  const int max_m = 16;
  long double best_err = std::numeric_limits<long double>::max();
  long double second_err = best_err;
  for (int m = 0; m <= max_m; ++m) {
    auto ratio = [&](std::size_t p) {
      const long double pp = static_cast<long double>(std::max<std::size_t>(p, 1));
      return std::exp(lg[p + 1] - lg[p] + m * (std::log(pp) - std::log(pp + 1)));
    };
    const long double a_last = aitken(ratio(t - 4), ratio(t - 3), ratio(t - 2));
    const long double a_prev = aitken(ratio(t - 5), ratio(t - 4), ratio(t - 3));
    const long double err = std::fabs(a_last - a_prev);
    if (err < best_err) {
      second_err = best_err;
      best_err = err;
      g.m = m;
      g.lambda = a_last;
    } else if (err < second_err) {
      second_err = err;
    }
  }
  g.lambda_error = best_err;
  const long double separation = second_err > 0 ? best_err / second_err : 1;
  g.confidence = std::clamp(1.0 - static_cast<double>(separation), 0.01, 1.0);
  g.conclusive = separation < 0.1L;
  return g;
}

}  // namespace

GrowthType classify_growth(const LengthSequence& seq, const ClassifyOptions& opts) {
  std::vector<BigInt> all;
  all.reserve(seq.values.size() + 1);
  all.push_back(seq.initial);
  all.insert(all.end(), seq.values.begin(), seq.values.end());
  for (const BigInt& v : all) {
    if (v <= 0) throw GrowthError("non-positive length in sequence");
  }
  RecurrenceOptions ro;
  ro.max_order = opts.max_order;
  if (const auto rec = find_recurrence(all, ro)) {
    if (auto g = exact_from_recurrence(*rec)) return *g;
  }
  if (seq.values.size() < opts.min_terms) {
    throw GrowthError("insufficient data: " + std::to_string(seq.values.size()) +
                      " usable terms");
  }
  return fitted(all);
}

GrowthResult growth_of_class(const Automorphism& a, const Word& g, const GrowthOptions& opts) {
  check_subject(a, g, true);
  const Word subject = CyclicWord(g).word();
  const std::size_t n = a.rank();
  GrowthResult out;
  if (opts.prefer_exact) {
    const CancellationCertificate cert = certify_no_cancellation(a, subject, true);
    if (cert.valid) {
      const std::size_t steps = opts.exact_iter != 0 ? opts.exact_iter
                                                     : std::max(opts.max_iter, 2 * n + 8);
      out.sequence = exact_lengths(a, subject, cert, steps);
      out.certified = true;
      ClassifyOptions co;
      co.max_order = n;
      out.type = classify_growth(out.sequence, co);
      MeasurementLog::record(n, out.type);
      return out;
    }
  }

  LengthSequence seq;
  seq.subject = subject;
  seq.cyclic = true;
  Iteration it(a, subject, true);
  seq.initial = it.length();
  std::vector<BigInt> all{seq.initial};
  RecurrenceOptions early;
  early.extra_checks = 8;
  for (std::size_t p = 0; p < opts.max_iter; ++p) {
    if (!it.step(opts.cap)) {
      seq.truncated = true;
      break;
    }
    seq.values.emplace_back(it.length());
    all.emplace_back(it.length());
    if (opts.early_stop && all.size() >= 12 && all.size() % 4 == 0) {
      if (find_recurrence(all, early)) break;
    }
  }
  out.sequence = std::move(seq);
  out.type = classify_growth(out.sequence);
  MeasurementLog::record(n, out.type);
  return out;
}

GrowthResult growth_of_element(const Automorphism& a, const Word& g, const GrowthOptions& opts) {
  if (g.rank() != a.rank()) throw RankError("rank mismatch in element growth");
  if (g.empty()) throw GrowthError("trivial subject");
  const Automorphism ext = a.with_fixed_generator();
  const std::size_t n = ext.rank();
  const Word tg = Word::generator(static_cast<std::uint32_t>(n - 1), n) * g.promoted(n);
  GrowthResult r = growth_of_class(ext, tg, opts);
  return r;
}

namespace {
std::mutex& log_mutex() {
  static std::mutex m;
  return m;
}
std::vector<std::pair<std::size_t, GrowthType>>& log_store() {
  static std::vector<std::pair<std::size_t, GrowthType>> v;
  return v;
}
}  // namespace

void MeasurementLog::record(std::size_t rank, const GrowthType& type) {
  std::lock_guard<std::mutex> lock(log_mutex());
  log_store().emplace_back(rank, type);
}

std::vector<std::pair<std::size_t, GrowthType>> MeasurementLog::snapshot() {
  std::lock_guard<std::mutex> lock(log_mutex());
  return log_store();
}

void MeasurementLog::clear() {
  std::lock_guard<std::mutex> lock(log_mutex());
  log_store().clear();
}

}  // namespace fga
