#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "fga/bigint.hpp"

namespace fga {

/// Dense integer polynomial, coefficients from the constant term upward.
/// The zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  /// Coefficients from the leading term down, e.g. {1, -3, 1} = x^2 - 3x + 1.
  static IntPoly from_leading(const std::vector<long long>& coeffs);
  static IntPoly monomial_minus(const BigInt& c);  // x - c

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const BigInt& operator[](std::size_t i) const { return c_[i]; }
  [[nodiscard]] const std::vector<BigInt>& coeffs() const { return c_; }
  [[nodiscard]] const BigInt& leading() const { return c_.back(); }

  [[nodiscard]] IntPoly derivative() const;
  [[nodiscard]] BigInt content() const;
  /// Divided by content, leading coefficient made positive.
  [[nodiscard]] IntPoly primitive() const;
  [[nodiscard]] int sign_at(const BigRational& x) const;
  [[nodiscard]] long double eval(long double x) const;
  [[nodiscard]] std::complex<long double> eval(std::complex<long double> z) const;

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  /// Human form, e.g. "x^2-3x+1".
  [[nodiscard]] std::string str() const;
  /// Coefficients from the leading term down, as decimal strings.
  [[nodiscard]] std::vector<std::string> leading_coeff_strings() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Exact quotient a / b over Q; returns false when b does not divide a in Z[x].
bool exact_divide(const IntPoly& a, const IntPoly& b, IntPoly& quotient);
/// Primitive greatest common divisor (positive leading coefficient).
IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// Yun decomposition: result[i] is the product of the irreducible factors of
/// multiplicity i + 1 (primitive; possibly constant 1).
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

/// Sturm chain of a squarefree polynomial.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);
  /// Number of distinct real roots in (lo, hi].
  [[nodiscard]] int count(const BigRational& lo, const BigRational& hi) const;

 private:
  [[nodiscard]] int variations(const BigRational& x) const;
  std::vector<IntPoly> chain_;
};

/// Rational upper bound on the modulus of every root (Cauchy).
BigRational root_bound(const IntPoly& p);

/// Complex roots (Aberth iteration), for polynomials of modest degree.
std::vector<std::complex<long double>> complex_roots(const IntPoly& p);

/// A real algebraic number: the unique root of `poly` in (lo, hi].
struct AlgebraicReal {
  IntPoly poly;  ///< squarefree, primitive
  BigRational lo;
  BigRational hi;
  bool minimal = false;  ///< poly proven irreducible
  long double approx = 0;

  /// Narrows the interval until its width is below `width`.
  void refine(const BigRational& width);
  [[nodiscard]] static AlgebraicReal from_integer(long long v);
};

/// Largest real root of p, or nullopt when p has no real root.
std::optional<AlgebraicReal> largest_real_root(const IntPoly& p);
/// Multiplicity of the root `r` in p (0 if not a root).
int root_multiplicity(const IntPoly& p, const AlgebraicReal& r);
/// Replaces r.poly by the minimal polynomial of r when it can be certified.
void reduce_to_minimal(AlgebraicReal& r);
/// Exact equality of algebraic numbers.
bool algebraic_equal(const AlgebraicReal& a, const AlgebraicReal& b);

/// Integer characteristic polynomial (Faddeev-LeVerrier over Q), monic.
IntPoly characteristic_polynomial(const std::vector<std::vector<BigInt>>& m);

/// Natural log of a positive big integer.
long double log_big(const BigInt& v);

}  // namespace fga
