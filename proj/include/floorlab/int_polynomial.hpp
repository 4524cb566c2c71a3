#pragma once

#include <string>
#include <vector>

#include "floorlab/numeric.hpp"

namespace floorlab {

/// Polynomial with arbitrary-precision integer coefficients, constant term
/// first. The zero polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  static IntPolynomial monomial(unsigned degree, Int coefficient = Int(1));
  /// x^(l+k) - m*x^l - M, the defining shape of the characterized numbers.
  static IntPolynomial characteristic(unsigned l, unsigned k, const Int& m, const Int& M);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& leading() const;
  Int coeff(unsigned i) const;

  Rational eval(const Rational& x) const;
  Int eval(const Int& x) const;
  int sign_at(const Rational& x) const;

  IntPolynomial derivative() const;
  Int content() const;  // gcd of coefficients, 0 for the zero polynomial
  IntPolynomial primitive_part() const;
  /// Primitive squarefree polynomial with the same set of real roots.
  IntPolynomial squarefree_part() const;

  /// All rational roots, exact, ascending (rational root theorem).
  std::vector<Rational> rational_roots() const;
  /// Divides by (q*x - p) for a known root p/q; exact.
  IntPolynomial deflate_rational_root(const Rational& root) const;

  /// Every real root x satisfies |x| < bound.
  Rational cauchy_root_bound() const;

  bool operator==(const IntPolynomial&) const = default;
  /// "[c0,c1,...,cd]"
  std::string to_string() const;

 private:
  std::vector<Int> coeffs_;
  void strip();
};

/// Number of distinct real roots of the squarefree polynomial in the open
/// interval (lo, hi). Endpoints must not be roots.
int sturm_count_roots(const IntPolynomial& squarefree, const Rational& lo, const Rational& hi);

}  // namespace floorlab
