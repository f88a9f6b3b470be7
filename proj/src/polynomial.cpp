#include "fga/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

namespace fga {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::from_leading(const std::vector<long long>& coeffs) {
  std::vector<BigInt> c(coeffs.rbegin(), coeffs.rend());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial_minus(const BigInt& c) { return IntPoly({-c, BigInt(1)}); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long long>(i);
  return IntPoly(std::move(d));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const BigInt& c : c_) g = boost::multiprecision::gcd(g, c);
  return g;
}

IntPoly IntPoly::primitive() const {
  if (c_.empty()) return IntPoly();
  BigInt g = content();
  if (c_.back() < 0) g = -g;
  std::vector<BigInt> d = c_;
  for (BigInt& c : d) c /= g;
  return IntPoly(std::move(d));
}

int IntPoly::sign_at(const BigRational& x) const {
  if (c_.empty()) return 0;
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  BigInt acc = c_.back();
  BigInt den_pow = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc = acc * num + c_[i] * den_pow;
  }
  return acc.sign();
}

long double IntPoly::eval(long double x) const {
  long double acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + c_[i].convert_to<long double>();
  }
  return acc;
}

std::complex<long double> IntPoly::eval(std::complex<long double> z) const {
  std::complex<long double> acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * z + c_[i].convert_to<long double>();
  }
  return acc;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPoly(std::move(c));
}

std::string IntPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (c < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    if (mag != 1 || i == 0) os << mag.str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::vector<std::string> IntPoly::leading_coeff_strings() const {
  std::vector<std::string> out;
  for (std::size_t i = c_.size(); i-- > 0;) out.push_back(c_[i].str());
  return out;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  int steps = 0;
  const int delta = a.degree() - db;
  int dr = static_cast<int>(r.size()) - 1;
  while (dr >= db) {
    const BigInt lr = r[static_cast<std::size_t>(dr)];
    for (BigInt& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) {
      r[static_cast<std::size_t>(dr - db + i)] -= lr * b[static_cast<std::size_t>(i)];
    }
    ++steps;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
    r.resize(static_cast<std::size_t>(dr + 1));
  }
  BigInt scale = 1;
  for (int i = steps; i < delta + 1; ++i) scale *= lb;
  for (BigInt& c : r) c *= scale;
  return IntPoly(std::move(r));
}

bool exact_divide(const IntPoly& a, const IntPoly& b, IntPoly& quotient) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) {
    quotient = IntPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const BigInt& top = r[static_cast<std::size_t>(k + db)];
    if (top % b.leading() != 0) return false;
    const BigInt t = top / b.leading();
    q[static_cast<std::size_t>(k)] = t;
    if (t == 0) continue;
    for (int i = 0; i <= db; ++i) {
      r[static_cast<std::size_t>(k + i)] -= t * b[static_cast<std::size_t>(i)];
    }
  }
  for (const BigInt& c : r) {
    if (c != 0) return false;
  }
  quotient = IntPoly(std::move(q));
  return true;
}

IntPoly gcd(const IntPoly& a0, const IntPoly& b0) {
  if (a0.is_zero()) return b0.primitive();
  if (b0.is_zero()) return a0.primitive();
  IntPoly a = a0.primitive();
  IntPoly b = b0.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? IntPoly() : r.primitive();
  }
  return a.primitive();
}

namespace {

IntPoly divide_or_throw(const IntPoly& a, const IntPoly& b) {
  IntPoly q;
  if (!exact_divide(a, b, q)) throw std::logic_error("inexact polynomial division");
  return q;
}

}  // namespace

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
  std::vector<IntPoly> out;
  if (p.degree() <= 0) return out;
  const IntPoly f = p.primitive();
  const IntPoly df = f.derivative();
  const IntPoly a0 = gcd(f, df);
  IntPoly b = divide_or_throw(f, a0);
  IntPoly c = divide_or_throw(df, a0);
  IntPoly d = c - b.derivative();
  while (b.degree() > 0) {
    const IntPoly a = gcd(b, d);
    out.push_back(a);
    b = divide_or_throw(b, a);
    c = divide_or_throw(d, a);
    d = c - b.derivative();
  }
  return out;
}

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of zero polynomial");
  chain_.push_back(p);
  IntPoly d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d);
  while (true) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    if (b.degree() <= 0) break;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^(delta+1) * rem; we want a positive multiple of -rem.
    const int delta = a.degree() - b.degree();
    const bool negative_scale = b.leading() < 0 && ((delta + 1) % 2 == 1);
    BigInt g = r.content();
    std::vector<BigInt> cs = r.coeffs();
    for (BigInt& c : cs) {
      c /= g;
      if (!negative_scale) c = -c;
    }
    chain_.emplace_back(std::move(cs));
  }
}

int SturmChain::variations(const BigRational& x) const {
  int count = 0;
  int last = 0;
  for (const IntPoly& q : chain_) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmChain::count(const BigRational& lo, const BigRational& hi) const {
  if (!(lo < hi)) return 0;
  return variations(lo) - variations(hi);
}

BigRational root_bound(const IntPoly& p) {
  if (p.degree() <= 0) return BigRational(1);
  const BigInt lead = abs(p.leading());
  BigInt best = 0;
  for (int i = 0; i < p.degree(); ++i) best = std::max(best, BigInt(abs(p[static_cast<std::size_t>(i)])));
  return BigRational(1) + BigRational(best, lead);
}

std::vector<std::complex<long double>> complex_roots(const IntPoly& p) {
  using C = std::complex<long double>;
  const int d = p.degree();
  std::vector<C> z;
  if (d <= 0) return z;
  const IntPoly dp = p.derivative();
  const long double radius = root_bound(p).convert_to<long double>();
  for (int k = 0; k < d; ++k) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * k / d + 0.4L;
    z.emplace_back(radius * 0.5L * std::cos(angle), radius * 0.5L * std::sin(angle));
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (int k = 0; k < d; ++k) {
      const C pv = p.eval(z[static_cast<std::size_t>(k)]);
      const C dv = dp.eval(z[static_cast<std::size_t>(k)]);
      if (pv == C(0)) continue;
      const C ratio = pv / dv;
      C sum = 0;
      for (int j = 0; j < d; ++j) {
        if (j != k) sum += C(1) / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
      }
      const C w = ratio / (C(1) - ratio * sum);
      z[static_cast<std::size_t>(k)] -= w;
      worst = std::max(worst, std::abs(w) / std::max<long double>(1, std::abs(z[static_cast<std::size_t>(k)])));
    }
    if (worst < 1e-18L) break;
  }
  return z;
}

void AlgebraicReal::refine(const BigRational& width) {
  const SturmChain chain(poly);
  while (hi - lo > width) {
    const BigRational mid = (lo + hi) / 2;
    if (chain.count(lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  approx = ((lo + hi) / 2).convert_to<long double>();
}

AlgebraicReal AlgebraicReal::from_integer(long long v) {
  AlgebraicReal r;
  r.poly = IntPoly::monomial_minus(BigInt(v));
  r.lo = BigRational(v) - BigRational(1, 2);
  r.hi = BigRational(v);
  r.minimal = true;
  r.approx = static_cast<long double>(v);
  return r;
}

namespace {

IntPoly squarefree_part(const IntPoly& p) {
  const IntPoly f = p.primitive();
  return divide_or_throw(f, gcd(f, f.derivative())).primitive();
}

const BigRational& refine_width() {
  static const BigRational w(BigInt(1), BigInt(1) << 80);
  return w;
}

}  // namespace

std::optional<AlgebraicReal> largest_real_root(const IntPoly& p) {
  if (p.degree() <= 0) return std::nullopt;
  const IntPoly sf = squarefree_part(p);
  const SturmChain chain(sf);
  const BigRational bound = root_bound(sf);
  BigRational lo = -bound;
  BigRational hi = bound;
  if (chain.count(lo, hi) == 0) return std::nullopt;
  while (chain.count(lo, hi) > 1) {
    const BigRational mid = (lo + hi) / 2;
    if (chain.count(mid, hi) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  AlgebraicReal r;
  r.poly = sf;
  r.lo = lo;
  r.hi = hi;
  r.minimal = sf.degree() == 1;
  r.refine(refine_width());
  return r;
}

int root_multiplicity(const IntPoly& p, const AlgebraicReal& r) {
  const std::vector<IntPoly> parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const IntPoly g = gcd(parts[i], r.poly);
    if (g.degree() <= 0) continue;
    if (SturmChain(g).count(r.lo, r.hi) > 0) return static_cast<int>(i) + 1;
  }
  return 0;
}

bool algebraic_equal(const AlgebraicReal& a, const AlgebraicReal& b) {
  const IntPoly g = gcd(a.poly, b.poly);
  if (g.degree() <= 0) return false;
  const BigRational lo = std::max(a.lo, b.lo);
  const BigRational hi = std::min(a.hi, b.hi);
  if (!(lo < hi)) return false;
  return SturmChain(g).count(lo, hi) > 0;
}

void reduce_to_minimal(AlgebraicReal& r) {
  if (r.minimal) return;
  const int d = r.poly.degree();
  if (d <= 1) {
    r.minimal = true;
    return;
  }
  if (d > 16) return;
  using C = std::complex<long double>;
  const std::vector<C> roots = complex_roots(r.poly);
  std::size_t self = 0;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (std::abs(roots[i] - C(r.approx, 0)) < std::abs(roots[self] - C(r.approx, 0))) self = i;
  }
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i != self) others.push_back(i);
  }
  const long double lead = r.poly.leading().convert_to<long double>();
  // Smallest subset of conjugates whose product has integer coefficients and
  // divides the defining polynomial.
  for (int size = 1; size <= d; ++size) {
    std::vector<bool> pick(others.size(), false);
    std::fill(pick.begin(), pick.begin() + (size - 1), true);
    do {
      std::vector<C> prod{C(1)};
      auto mul = [&prod](C root) {
        std::vector<C> next(prod.size() + 1, C(0));
        for (std::size_t i = 0; i < prod.size(); ++i) {
          next[i + 1] += prod[i];
          next[i] -= prod[i] * root;
        }
        prod = std::move(next);
      };
      mul(roots[self]);
      for (std::size_t i = 0; i < others.size(); ++i) {
        if (pick[i]) mul(roots[others[i]]);
      }
      bool ok = true;
      std::vector<BigInt> coeffs;
      for (const C& c : prod) {
        const C scaled = c * lead;
        if (std::abs(scaled.imag()) > 1e-6L || std::abs(scaled.real()) > 1e17L) {
          ok = false;
          break;
        }
        const long double rounded = std::round(scaled.real());
        if (std::abs(rounded - scaled.real()) > 1e-6L * std::max<long double>(1, std::abs(rounded))) {
          ok = false;
          break;
        }
        coeffs.emplace_back(static_cast<long long>(rounded));
      }
      if (ok) {
        const IntPoly q = IntPoly(std::move(coeffs)).primitive();
        IntPoly quotient;
        if (q.degree() >= 1 && exact_divide(r.poly, q, quotient) &&
            SturmChain(q).count(r.lo, r.hi) == 1) {
          r.poly = q;
          r.minimal = true;
          return;
        }
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
}

IntPoly characteristic_polynomial(const std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<BigInt>> mk(n, std::vector<BigInt>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * mk[l][j];
      }
      next[i][i] += c[n - k + 1];
    }
    mk = std::move(next);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * mk[l][i];
    }
    c[n - k] = -trace / static_cast<long long>(k);
  }
  return IntPoly(std::move(c));
}

long double log_big(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log of non-positive integer");
  const std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits < 12000) return std::log(v.convert_to<long double>());
  const std::size_t shift = bits - 64;
  const BigInt top = v >> shift;
  return std::log(top.convert_to<long double>()) +
         static_cast<long double>(shift) * std::numbers::ln2_v<long double>;
}

}  // namespace fga
