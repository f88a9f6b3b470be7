#include "fga/recurrence.hpp"

namespace fga {

std::vector<BigRational> berlekamp_massey(const std::vector<BigInt>& s,
                                          std::size_t& complexity) {
  std::vector<BigRational> c{BigRational(1)};
  std::vector<BigRational> b{BigRational(1)};
  std::size_t len = 0;
  std::size_t shift = 1;
  BigRational last = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    BigRational d = s[n];
    for (std::size_t i = 1; i <= len && i < c.size(); ++i) d += c[i] * s[n - i];
    if (d == 0) {
      ++shift;
      continue;
    }
    const BigRational factor = d / last;
    std::vector<BigRational> next = c;
    if (next.size() < b.size() + shift) next.resize(b.size() + shift, BigRational(0));
    for (std::size_t i = 0; i < b.size(); ++i) next[i + shift] -= factor * b[i];
    if (2 * len <= n) {
      b = std::move(c);
      len = n + 1 - len;
      last = d;
      shift = 1;
    } else {
      ++shift;
    }
    c = std::move(next);
  }
  c.resize(len + 1, BigRational(0));
  complexity = len;
  return c;
}

std::optional<Recurrence> find_recurrence(const std::vector<BigInt>& values,
                                          const RecurrenceOptions& opts) {
  std::optional<Recurrence> best;
  for (std::size_t s = 0; s <= opts.max_transient && s < values.size(); ++s) {
    const std::vector<BigInt> tail(values.begin() + static_cast<std::ptrdiff_t>(s),
                                   values.end());
    std::size_t len = 0;
    const std::vector<BigRational> conn = berlekamp_massey(tail, len);
    if (len == 0) continue;
    if (opts.max_order != 0 && len > opts.max_order) continue;
    if (tail.size() < 2 * len + opts.extra_checks) continue;
    if (best && best->order() <= len) continue;

    bool integral = true;
    for (const BigRational& q : conn) {
      if (boost::multiprecision::denominator(q) != 1) {
        integral = false;
        break;
      }
    }
    if (!integral) continue;

    Recurrence r;
    r.start = s;
    std::vector<BigInt> poly(len + 1);
    for (std::size_t i = 0; i <= len; ++i) {
      const BigInt ci = boost::multiprecision::numerator(conn[i]);
      poly[len - i] = ci;
      if (i > 0) r.coeffs.push_back(-ci);
    }
    r.charpoly = IntPoly(std::move(poly));
    best = std::move(r);
  }
  return best;
}

}  // namespace fga
