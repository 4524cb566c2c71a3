#pragma once

// Decimal-approximation oracle used by the test suites. Deliberately
// independent of the library's certified path: roots are refined by plain
// bisection in 220-digit MPFR arithmetic and floors are taken on the decimal
// values, with a flag for values suspiciously close to an integer.

#include <mpfr.h>

#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>
#include <vector>

#include "floorlab/algebraic_real.hpp"
#include "floorlab/int_polynomial.hpp"
#include "floorlab/numeric.hpp"

namespace floorlab::oracle {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<220>>;

inline Real to_real(const Rational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

inline Real eval(const IntPolynomial& p, const Real& x) {
  Real acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Real(it->get_str());
  return acc;
}

/// Bisection to ~205 decimal digits inside a bracketing interval.
inline Real root(const IntPolynomial& p, const Rational& qlo, const Rational& qhi) {
  Real lo = to_real(qlo), hi = to_real(qhi);
  Real flo = eval(p, lo);
  if (flo == 0) return lo;
  if (eval(p, hi) == 0) return hi;
  if (flo * eval(p, hi) > 0) throw std::invalid_argument("oracle: interval does not bracket");
  const Real eps = Real("1e-205");
  while (hi - lo > eps) {
    Real mid = (lo + hi) / 2;
    Real fm = eval(p, mid);
    if (fm == 0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

inline Real value_of(const AlgebraicReal& a) {
  if (a.is_rational()) return to_real(a.rational_value());
  Interval iv = a.interval();
  return root(a.defining_poly(), iv.lo, iv.hi);
}

struct FloorOutcome {
  Int value;
  bool near_integer;  // decimal within 1e-150 of an integer: excluded upstream
};

inline FloorOutcome floor_of(const Real& v) {
  Int z;
  mpfr_get_z(z.get_mpz_t(), v.backend().data(), MPFR_RNDD);
  Real frac = v - Real(z.get_str());
  static const Real tol("1e-150");
  return {z, frac < tol || Real(1) - frac < tol};
}

/// floor(n * a^e + shift) on the decimal path.
inline FloorOutcome floor_linear(const Int& n, const Real& a, unsigned e, const Rational& shift) {
  Real pw = 1;
  for (unsigned i = 0; i < e; ++i) pw *= a;
  return floor_of(Real(n.get_str()) * pw + to_real(shift));
}

}  // namespace floorlab::oracle
