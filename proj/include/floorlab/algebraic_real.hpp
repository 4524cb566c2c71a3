#pragma once

#include <memory>
#include <string>
#include <vector>

#include "floorlab/int_polynomial.hpp"
#include "floorlab/numeric.hpp"

namespace floorlab {

struct Interval {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// A real algebraic number: the unique root of a defining polynomial inside
/// an isolating rational interval.
///
/// Normalization at construction: the polynomial is made primitive and
/// squarefree; every rational root is split off, so a stored polynomial of
/// degree >= 2 has no rational roots at all. Rational numbers are stored with
/// a degree-1 polynomial q*x - p and a degenerate interval [p/q, p/q].
///
/// Values are immutable; the isolating interval only ever narrows (a cache
/// shared by copies, guarded by a mutex), so concurrent use is safe.
class AlgebraicReal {
 public:
  static AlgebraicReal from_rational(const Rational& value);

  /// Validates that [lo, hi] isolates exactly one root (Sturm count), and
  /// normalizes. Throws ZeroPolynomial / InvalidInterval.
  AlgebraicReal(const IntPolynomial& poly, const Rational& lo, const Rational& hi);

  int degree() const;
  const IntPolynomial& defining_poly() const;
  bool is_rational() const;
  const Rational& rational_value() const;  // requires is_rational()

  /// Current isolating interval (degenerate for rationals).
  Interval interval() const;
  /// Narrows the isolating interval to at most target_width and returns it.
  Interval refine(const Rational& target_width) const;
  /// Bumped every time the cached interval narrows.
  std::uint64_t generation() const;

  /// Sign of the number minus a rational, exact.
  int compare(const Rational& q) const;

  double to_double() const;
  /// Canonical textual form: "p/q" or "root([c0,...,cd],lo,hi)".
  std::string to_string() const;

  bool same_number_object(const AlgebraicReal& o) const { return rep_ == o.rep_; }

  // Internal: power-basis reduction rows x^d .. x^(2d-2) mod defining_poly.
  const std::vector<std::vector<Rational>>& reduction_rows() const;

  struct Rep;  // defined in the implementation file

 private:
  explicit AlgebraicReal(std::shared_ptr<Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<Rep> rep_;

  friend std::vector<AlgebraicReal> isolate_positive_roots(const IntPolynomial&);
};

/// All distinct positive real roots of poly, ascending, each certified by an
/// isolating interval; rational roots come back with degree-1 polynomials.
std::vector<AlgebraicReal> isolate_positive_roots(const IntPolynomial& poly);

/// The unique positive root of x^(l+k) - m*x^l - M, for integers
/// 1 <= M with M^k < (m+1)^l; certified to satisfy m < alpha^k < m+1 exactly.
AlgebraicReal construct_characteristic_alpha(unsigned l, unsigned k, const Int& m, const Int& M);

struct SameDenomReport {
  Int gcd;       // gcd(q, q') of the two denominators
  bool verdict;  // gcd != 1 unless q = q' = 1
};

/// For alpha^l = pq and alpha^k = pq2 (consistency pq^k = pq2^l required),
/// checks the denominators' gcd property. Throws InconsistentPair.
SameDenomReport lemma_samedenom_check(const Rational& pq, const Rational& pq2, unsigned l,
                                      unsigned k);

}  // namespace floorlab
