#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floorlab/algebraic_real.hpp"
#include "floorlab/numeric.hpp"

namespace floorlab {

/// An exact element of Q[alpha]: c0 + c1*alpha + ... + c_{d-1}*alpha^{d-1},
/// reduced modulo the base's defining polynomial. Elements bind to one base;
/// combining elements over different bases throws MixedBase.
class FieldElement {
 public:
  /// Coordinates longer than the base degree are reduced.
  FieldElement(AlgebraicReal base, std::vector<Rational> coords);
  static FieldElement generator(const AlgebraicReal& base);  // alpha itself
  static FieldElement constant(const AlgebraicReal& base, const Rational& c);

  const AlgebraicReal& base() const { return base_; }
  const std::vector<Rational>& coords() const { return coords_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator+(const Rational& c) const;
  FieldElement operator-(const Rational& c) const;
  FieldElement operator*(const Rational& c) const;
  FieldElement operator/(const Rational& c) const;
  FieldElement pow(unsigned long e) const;
  /// Multiplicative inverse in Q[alpha]; throws on zero.
  FieldElement inverse() const;
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

  /// Exact zero test. Decides C(alpha) = 0 through gcd(defining poly, C),
  /// which stays correct even when the defining polynomial is not minimal.
  bool is_zero() const;
  /// Exact sign: zero test first, then interval refinement.
  int sign() const;
  /// The rational value when all coordinates beyond c0 vanish, else empty.
  std::optional<Rational> rational_value() const;

  /// Rational enclosure of the value, width at most max_width.
  Interval enclosure(const Rational& max_width) const;
  double to_double() const;
  std::string to_string() const;

 private:
  AlgebraicReal base_;
  std::vector<Rational> coords_;  // size = max(1, degree of base)
  void reduce(std::vector<Rational>& raw) const;
};

/// Exact canonical representation of a^e in Q[a].
FieldElement power_in_field(const AlgebraicReal& a, unsigned long e);

/// Spec-facing aliases for the member operations.
std::optional<Rational> rationality_of(const FieldElement& x);
int sign_of(const FieldElement& x);

}  // namespace floorlab
