#pragma once

// Internal rational-coefficient polynomial helpers: Euclidean remainders,
// gcds, Sturm chains. Not part of the public API.

#include <utility>
#include <vector>

#include "floorlab/int_polynomial.hpp"
#include "floorlab/numeric.hpp"

namespace floorlab::detail {

using QPoly = std::vector<Rational>;  // constant term first, no trailing zeros

inline void qstrip(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int qdeg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly from_int_poly(const IntPolynomial& p) {
  QPoly q;
  q.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) q.emplace_back(c);
  return q;
}

IntPolynomial to_primitive_int_poly(const QPoly& p);

QPoly qderivative(const QPoly& p);
Rational qeval(const QPoly& p, const Rational& x);
QPoly qadd(const QPoly& a, const QPoly& b);
QPoly qsub(const QPoly& a, const QPoly& b);
QPoly qmul(const QPoly& a, const QPoly& b);
QPoly qscale(const QPoly& a, const Rational& c);

/// Euclidean remainder a mod b, deg(b) >= 0.
QPoly qrem(const QPoly& a, const QPoly& b);
/// Quotient and remainder.
std::pair<QPoly, QPoly> qdivmod(const QPoly& a, const QPoly& b);

/// Monic gcd over Q[x]; gcd(0,0) = 0.
QPoly qgcd(QPoly a, QPoly b);

/// Extended gcd: returns (g, u, v) monic g with u*a + v*b = g.
struct ExtGcd {
  QPoly g, u, v;
};
ExtGcd qext_gcd(const QPoly& a, const QPoly& b);

/// Sturm chain of a squarefree polynomial.
struct SturmChain {
  std::vector<QPoly> seq;
  explicit SturmChain(const IntPolynomial& squarefree);
  int variations(const Rational& x) const;
  /// Distinct roots in (lo, hi); endpoints must not be roots.
  int count_roots(const Rational& lo, const Rational& hi) const;
};

}  // namespace floorlab::detail
