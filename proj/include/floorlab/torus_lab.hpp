#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "floorlab/algebraic_real.hpp"
#include "floorlab/field_element.hpp"
#include "floorlab/int_polynomial.hpp"

namespace floorlab {

/// Orbit point ({n alpha^l}, {n alpha^(l+k)}) with exact coordinates.
struct TorusPoint {
  Int n;
  FieldElement x, y;
};

TorusPoint orbit_point(const Int& n, const AlgebraicReal& alpha, unsigned l, unsigned k);

/// Band region -m <= y - coefficient*x < 0 on the unit square, split into
/// bands S_j: -j <= y - coefficient*x < -(j-1).
struct RegionSpec {
  FieldElement coefficient;
  unsigned band_count = 1;
};

inline constexpr int kOutside = 0;

/// Band index j in {1..m}, or kOutside; decided by exact signs.
int region_membership(const TorusPoint& pt, const RegionSpec& region);

/// Same test for a coefficient living in a different field than the orbit
/// (the mismatched-slope figure panels). Comparisons stay exact: interval
/// refinement decides strict signs, and the tie y = c*x is decided by
/// evaluating c's defining polynomial at y/x inside the orbit's own field.
int region_membership(const TorusPoint& pt, const AlgebraicReal& coefficient,
                      unsigned band_count);

struct DistributionResult {
  unsigned m = 1;
  std::uint64_t N = 0;
  std::vector<std::uint64_t> counts;  // counts[j-1] = #{0 < n <= N : r(n) = j}
  std::vector<double> frequencies;
  std::vector<double> deviations;  // frequency - 1/m
};

DistributionResult empirical_distribution(const AlgebraicReal& alpha, unsigned m, std::uint64_t N,
                                          unsigned workers = 0);

using RealSpec = std::variant<Rational, AlgebraicReal>;

/// x(n) = sum_j coeffs[j] * n^j, each coefficient a d-dimensional vector of
/// exact reals, reduced mod 1 per coordinate.
struct WeylSequence {
  std::vector<std::vector<RealSpec>> coeffs;  // coeffs[j][dim]
  static WeylSequence linear(std::vector<RealSpec> theta);             // x(n) = n*theta
  static WeylSequence power(unsigned degree, std::vector<RealSpec> top);  // x(n) = n^degree*top
  unsigned dimension() const;
};

struct WeylSumResult {
  std::vector<long long> frequency;
  std::uint64_t N = 0;
  double magnitude = 0.0;  // |(1/(2N+1)) sum_{|n|<=N} e^{2 pi i k.x(n)}|
  int phase_bits = 0;      // precision of the rational phase approximation
};

/// Two-sided exponential average; a floating-point diagnostic (phases are
/// exact rationals at phase_bits precision, the summation is not certified).
WeylSumResult weyl_sum(const WeylSequence& seq, const std::vector<long long>& frequency,
                       std::uint64_t N);

struct LineFit {
  Rational slope;                    // s in alpha^(l+k) = s*alpha^l + r
  Rational offset;                   // r
  std::vector<Rational> intercepts;  // realized t of y = s x + t, ascending
  bool exact = true;                 // intercept set derived algebraically
};

struct LineSupportResult {
  std::optional<LineFit> fit;  // empty = NoRationalRelation
  std::string note;
};

/// Exact search for the rational relation alpha^(l+k) = s*alpha^l + r with
/// height-bounded s, r; intercepts come from the residue classes mod den(r).
LineSupportResult detect_line_support(const AlgebraicReal& alpha, unsigned l, unsigned k,
                                      const Int& s_bound, const Int& q_bound);

/// Orbit points at indices P(n) for n in [n_lo, n_hi]; roots of P skipped.
std::vector<TorusPoint> polynomial_orbit(const AlgebraicReal& alpha, unsigned l, unsigned k,
                                         const IntPolynomial& P, const Int& n_lo, const Int& n_hi);

struct OrbitRecord {
  Int n;
  std::string x, y;  // decimal at the dump precision
  int band;          // exact membership; kOutside when outside or no region
};

std::vector<OrbitRecord> dump_records(std::span<const TorusPoint> points, const RegionSpec* region,
                                      int significant_digits = 12);

/// Dump with a foreign-field region coefficient.
std::vector<OrbitRecord> dump_records(std::span<const TorusPoint> points,
                                      const AlgebraicReal& coefficient, unsigned band_count,
                                      int significant_digits = 12);

std::vector<OrbitRecord> orbit_dump(const AlgebraicReal& alpha, unsigned l, unsigned k,
                                    const Int& n_lo, const Int& n_hi,
                                    const RegionSpec* region = nullptr,
                                    int significant_digits = 12);

/// Comma-separated records "n,x,y,band" with a header line.
void write_orbit_csv(std::ostream& out, std::span<const OrbitRecord> records);

}  // namespace floorlab
