#include "fga/invariants.hpp"

#include <algorithm>
#include <unordered_map>

#include <omp.h>

#include "fga/enumerate.hpp"
#include "fga/subgroup_graph.hpp"

namespace fga {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Check make_check(std::string name, long long lhs, long long rhs) {
  return Check{std::move(name), lhs, rhs, lhs <= rhs};
}

}  // namespace

std::vector<Check> check_ed(long long n, long long e, long long d) {
  std::vector<Check> out;
  out.push_back(make_check("e+d <= n-1", e + d, n - 1));
  out.push_back(make_check("4e+2d <= 3n-2", 4 * e + 2 * d, 3 * n - 2));
  out.push_back(make_check("4e+2d <= 3n-3 if d>0", 4 * e + 2 * d, d > 0 ? 3 * n - 3 : 3 * n - 2));
  return out;
}

bool admissible(long long n, long long e, long long d) {
  return n >= 1 && e >= 0 && d >= 0 && all_pass(check_ed(n, e, d));
}

std::array<RationalPoint, 4> quadrilateral_vertices(long long n) {
  if (n < 1) throw std::invalid_argument("quadrilateral needs n >= 1");
  return {RationalPoint{BigRational(0), BigRational(0)},
          RationalPoint{BigRational(0), BigRational(n - 1)},
          RationalPoint{BigRational(n - 1, 2), BigRational(n - 1, 2)},
          RationalPoint{BigRational(3 * n - 2, 4), BigRational(0)}};
}

bool in_quadrilateral(long long n, const BigRational& e, const BigRational& d) {
  const auto v = quadrilateral_vertices(n);
  // The box test matters only when the polygon degenerates to a segment (n = 1).
  BigRational emax = 0, dmax = 0;
  for (const RationalPoint& p : v) {
    emax = std::max(emax, p.e);
    dmax = std::max(dmax, p.d);
  }
  if (e < 0 || d < 0 || e > emax || d > dmax) return false;
  bool pos = false;
  bool neg = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RationalPoint& p = v[i];
    const RationalPoint& q = v[(i + 1) % v.size()];
    const BigRational cross = (q.e - p.e) * (d - p.d) - (q.d - p.d) * (e - p.e);
    if (cross > 0) pos = true;
    if (cross < 0) neg = true;
  }
  return !(pos && neg);
}

long long max_fixed_rank(long long n, long long e, long long d) {
  if (!admissible(n, e, d)) {
    throw InadmissibleError("(e, d) = (" + std::to_string(e) + ", " + std::to_string(d) +
                            ") is not admissible for n = " + std::to_string(n));
  }
  const long long first = n - e - std::max(d - 1, 0LL);
  const long long second = d == 0 ? floor_div(3 * n - 4 * e, 2) : floor_div(3 * n + 1 - 4 * e - 2 * d, 2);
  return std::max(0LL, std::min(first, second));
}

std::vector<Check> check_fix_rank(long long n, long long e, long long d, long long fix) {
  std::vector<Check> out;
  out.push_back(make_check("e+(d-1)^+ +fix <= n", e + std::max(d - 1, 0LL) + fix, n));
  if (d == 0) {
    out.push_back(make_check("4e+2d+2fix <= 3n if d=0", 4 * e + 2 * d + 2 * fix, 3 * n));
  } else {
    out.push_back(make_check("4e+2d+2fix <= 3n+1", 4 * e + 2 * d + 2 * fix, 3 * n + 1));
  }
  return out;
}

std::vector<Check> check_chain_bound(long long n, long long s, long long d, long long r) {
  if (s < 1) throw std::invalid_argument("chain bound needs s >= 1 (not polynomially growing)");
  std::vector<Check> out;
  out.push_back(make_check("2s+p+r <= n-2", 2 * s + std::max(d - 1, 0LL) + r, n - 2));
  out.push_back(make_check("2s+d <= n-2", 2 * s + d, n - 2));
  return out;
}

namespace {

void set_threads(const SearchOptions& opts) {
  if (opts.jobs > 0) omp_set_num_threads(opts.jobs);
}

// Calls `emit` on every fixed word of length 1..max_len in shortlex order.
template <typename Emit>
void for_each_fixed(const Automorphism& a, std::size_t max_len, const SearchOptions& opts,
                    Emit&& emit) {
  const std::size_t n = a.rank();
  if (max_len == 0) throw std::invalid_argument("max_len must be >= 1");
  const std::size_t half = (max_len + 1) / 2;
  if (reduced_word_count(n, half) > opts.max_words) {
    throw ResourceCapError("fixed-word search over " + std::to_string(reduced_word_count(n, half)) +
                           " half words exceeds the cap");
  }
  set_threads(opts);
  const bool parallel = !opts.serial;

  std::vector<std::vector<Word>> shells(half + 1);
  std::vector<std::vector<Word>> left_keys(half + 1);   // u^-1 a(u)
  std::vector<std::vector<Word>> right_keys(half + 1);  // v a(v)^-1
  for (std::size_t h = 0; h <= half; ++h) {
    shells[h] = reduced_words(n, h);
    const std::size_t count = shells[h].size();
    left_keys[h].resize(count);
    right_keys[h].resize(count);
    const auto& shell = shells[h];
    auto& lk = left_keys[h];
    auto& rk = right_keys[h];
#pragma omp parallel for schedule(static) if (parallel)
    for (std::size_t i = 0; i < count; ++i) {
      const Word img = a.apply(shell[i]);
      lk[i] = shell[i].inverse() * img;
      rk[i] = shell[i] * img.inverse();
    }
  }

  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t h1 = (len + 1) / 2;
    const std::size_t h2 = len - h1;
    std::unordered_map<Word, std::vector<std::uint32_t>, WordHash> index;
    for (std::size_t j = 0; j < shells[h2].size(); ++j) {
      index[right_keys[h2][j]].push_back(static_cast<std::uint32_t>(j));
    }
    const auto& us = shells[h1];
    const auto& vs = shells[h2];
    const std::size_t count = us.size();
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> buffers;
#pragma omp parallel if (parallel)
    {
#pragma omp single
      buffers.resize(static_cast<std::size_t>(omp_get_num_threads()));
      auto& local = buffers[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (std::size_t i = 0; i < count; ++i) {
        const auto it = index.find(left_keys[h1][i]);
        if (it == index.end()) continue;
        for (std::uint32_t j : it->second) {
          if (!vs[j].empty() && us[i].back().cancels(vs[j].front())) continue;
          local.emplace_back(static_cast<std::uint32_t>(i), j);
        }
      }
    }
    // Static schedules hand out contiguous chunks in thread order, so the
    // concatenation is already sorted; sort anyway to stay independent of it.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> matches;
    for (auto& b : buffers) matches.insert(matches.end(), b.begin(), b.end());
    std::sort(matches.begin(), matches.end());
    for (const auto& [i, j] : matches) emit(us[i] * vs[j]);
  }
}

}  // namespace

std::vector<Word> fixed_words(const Automorphism& a, std::size_t max_len, const SearchOptions& opts) {
  std::vector<Word> out;
  for_each_fixed(a, max_len, opts, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::size_t fix_rank_lower_bound(const Automorphism& a, std::size_t max_len,
                                 const SearchOptions& opts) {
  SubgroupGraph graph(a.rank());
  for_each_fixed(a, max_len, opts, [&](const Word& w) {
    if (!graph.contains(w)) graph.add_generator(w);
  });
  return graph.subgroup_rank();
}

std::size_t integer_span_rank(const std::vector<std::vector<long long>>& input) {
  if (input.empty()) return 0;
  const std::size_t cols = input.front().size();
  std::vector<std::vector<BigInt>> m;
  for (const auto& row : input) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    m.emplace_back(row.begin(), row.end());
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const BigInt g = boost::multiprecision::gcd(m[rank][c], m[r][c]);
      const BigInt fr = m[rank][c] / g;
      const BigInt fp = m[r][c] / g;
      BigInt content = 0;
      for (std::size_t j = c; j < cols; ++j) {
        m[r][j] = m[r][j] * fr - m[rank][j] * fp;
        content = boost::multiprecision::gcd(content, m[r][j]);
      }
      if (content > 1) {
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= content;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t k_lower_bound(const Automorphism& a, std::size_t max_len, std::size_t max_period,
                          const SearchOptions& opts, PeriodicSearchStats* stats) {
  if (max_len == 0 || max_period == 0) throw std::invalid_argument("max_len and max_period must be >= 1");
  const std::size_t n = a.rank();
  if (reduced_word_count(n, max_len) > opts.max_words) {
    throw ResourceCapError("periodic-class search over length " + std::to_string(max_len) +
                           " exceeds the cap");
  }
  const std::vector<Word> classes = enumerate_classes(n, max_len);
  // Cyclic length is K'-Lipschitz under the inverse, so a class longer than
  // K'^(steps left) |c| cannot come back in time.
  const std::size_t inv_lip = a.has_inverse() ? a.inverse().max_image_length() : 0;
  std::vector<signed char> status(classes.size(), 0);  // 1 periodic, 2 skipped
  set_threads(opts);
  const bool parallel = !opts.serial;
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const CyclicWord start(classes[i]);
    std::vector<Letter> cur(start.letters().begin(), start.letters().end());
    std::vector<Letter> next;
    for (std::size_t p = 1; p <= max_period; ++p) {
      next.clear();
      a.apply_append(cur, next);
      cyclically_reduce_in_place(next);
      if (next.size() > opts.length_cap) {
        status[i] = 2;
        break;
      }
      if (next.size() == start.length() && CyclicWord(Word::reduce(next, n)) == start) {
        status[i] = 1;
        break;
      }
      if (inv_lip > 0) {
        long double room = static_cast<long double>(start.length());
        for (std::size_t s = p; s < max_period; ++s) room *= static_cast<long double>(inv_lip);
        if (static_cast<long double>(next.size()) > room) break;
      }
      std::swap(cur, next);
    }
  }
  std::vector<std::vector<long long>> rows;
  PeriodicSearchStats local;
  local.classes = classes.size();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (status[i] == 2) ++local.skipped;
    if (status[i] != 1) continue;
    ++local.periodic;
    std::vector<long long> v(n, 0);
    for (Letter l : classes[i].letters()) v[l.index()] += l.sign();
    rows.push_back(std::move(v));
  }
  if (stats) *stats = local;
  return integer_span_rank(rows);
}

}  // namespace fga
