#include "floorlab/torus_lab.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "floorlab/certified_floor.hpp"
#include "floorlab/errors.hpp"
#include "floorlab/identity_engine.hpp"
#include "floorlab/parallel.hpp"

namespace floorlab {

TorusPoint orbit_point(const Int& n, const AlgebraicReal& alpha, unsigned l, unsigned k) {
  if (l < 1 || k < 1) throw std::invalid_argument("l and k must be positive");
  FieldElement al = power_in_field(alpha, l);
  FieldElement alk = power_in_field(alpha, l + k);
  return {n, certified_frac({n, al}).frac, certified_frac({n, alk}).frac};
}

int region_membership(const TorusPoint& pt, const RegionSpec& region) {
  FieldElement t = pt.y - region.coefficient * pt.x;
  if (t.sign() >= 0) return kOutside;
  // -j <= t < -(j-1)  <=>  j = -floor(t) for non-integer t, and t = -j lands
  // in band j as well since floor(-j) = -j.
  Int f = certified_floor({Int(1), t}).value;
  Int band = -f;
  if (band > region.band_count) return kOutside;
  return static_cast<int>(band.get_si());
}

namespace {

// Exact sign of A - c*B where A, B share a base and c lives in its own field.
int sign_minus_scaled(const FieldElement& A, const AlgebraicReal& c, const FieldElement& B) {
  if (c.is_rational()) return (A - B * c.rational_value()).sign();
  if (B.is_zero()) return A.sign();
  // Tie detection: A - c*B = 0 iff c equals A/B, i.e. c's defining polynomial
  // vanishes at A/B and A/B lies in c's isolating interval.
  FieldElement q = A / B;
  const auto& cp = c.defining_poly();
  FieldElement acc = FieldElement::constant(q.base(), Rational(0));
  for (int i = cp.degree(); i >= 0; --i) acc = acc * q + Rational(cp.coeff(i));
  if (acc.is_zero()) {
    Interval ci = c.interval();
    if (sign_of(q - ci.lo) > 0 && sign_of(-(q - ci.hi)) > 0) return 0;
  }
  // Nonzero: interval refinement terminates.
  Rational width = make_rational(1, Int(1) << 32);
  while (true) {
    Interval ia = A.enclosure(width);
    Interval ib = B.enclosure(width);
    Interval ic = c.refine(width);
    Rational p1 = ic.lo * ib.lo, p2 = ic.lo * ib.hi, p3 = ic.hi * ib.lo, p4 = ic.hi * ib.hi;
    Rational lo = ia.lo - std::max(std::max(p1, p2), std::max(p3, p4));
    Rational hi = ia.hi - std::min(std::min(p1, p2), std::min(p3, p4));
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    width = width * width;
  }
}

}  // namespace

int region_membership(const TorusPoint& pt, const AlgebraicReal& coefficient,
                      unsigned band_count) {
  // t = y - c*x; Outside unless some j in {1..m} has -j <= t < -(j-1).
  if (sign_minus_scaled(pt.y, coefficient, pt.x) >= 0) return kOutside;
  for (unsigned j = 1; j <= band_count; ++j) {
    if (sign_minus_scaled(pt.y + Rational(j), coefficient, pt.x) >= 0) return static_cast<int>(j);
  }
  return kOutside;
}

DistributionResult empirical_distribution(const AlgebraicReal& alpha, unsigned m, std::uint64_t N,
                                          unsigned workers) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (alpha.is_rational()) throw RationalAlpha("distribution statistics require irrational alpha");
  DistributionResult res;
  res.m = m;
  res.N = N;
  res.counts.assign(m, 0);
  if (N == 0) return res;

  const unsigned w = workers ? workers : default_workers();
  const auto chunks = split_range(Int(1), Int(N), w);
  std::vector<std::vector<std::uint64_t>> partial(chunks.size(),
                                                  std::vector<std::uint64_t>(m, 0));
  parallel_for_index(chunks.size(), w, [&](size_t idx) {
    FieldElement gen = FieldElement::generator(alpha);
    auto& counts = partial[idx];
    for (Int n = chunks[idx].first; n <= chunks[idx].second; ++n) {
      Int r = certified_floor({n * m, gen}).value + 1 - m * certified_floor({n, gen}).value;
      if (r < 1 || r > m) throw Error("r(n) left its guaranteed range {1..m}");
      ++counts[r.get_ui() - 1];
    }
  });
  for (const auto& p : partial)
    for (unsigned j = 0; j < m; ++j) res.counts[j] += p[j];

  res.frequencies.resize(m);
  res.deviations.resize(m);
  for (unsigned j = 0; j < m; ++j) {
    res.frequencies[j] = static_cast<double>(res.counts[j]) / static_cast<double>(N);
    res.deviations[j] = res.frequencies[j] - 1.0 / m;
  }
  return res;
}

WeylSequence WeylSequence::linear(std::vector<RealSpec> theta) {
  WeylSequence s;
  s.coeffs.resize(2);
  s.coeffs[0].assign(theta.size(), RealSpec(Rational(0)));
  s.coeffs[1] = std::move(theta);
  return s;
}

WeylSequence WeylSequence::power(unsigned degree, std::vector<RealSpec> top) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  WeylSequence s;
  s.coeffs.resize(degree + 1);
  for (unsigned j = 0; j < degree; ++j) s.coeffs[j].assign(top.size(), RealSpec(Rational(0)));
  s.coeffs[degree] = std::move(top);
  return s;
}

unsigned WeylSequence::dimension() const {
  unsigned d = 0;
  for (const auto& c : coeffs) d = std::max(d, static_cast<unsigned>(c.size()));
  return d;
}

WeylSumResult weyl_sum(const WeylSequence& seq, const std::vector<long long>& frequency,
                       std::uint64_t N) {
  const unsigned d = seq.dimension();
  if (frequency.size() != d)
    throw std::invalid_argument("frequency dimension does not match the sequence");
  bool nonzero = false;
  for (long long k : frequency)
    if (k != 0) nonzero = true;
  if (!nonzero) throw ZeroFrequency();

  constexpr int kPhaseBits = 192;
  const Rational width = make_rational(1, Int(1) << kPhaseBits);
  auto approx = [&](const RealSpec& s) -> Rational {
    if (std::holds_alternative<Rational>(s)) return std::get<Rational>(s);
    return std::get<AlgebraicReal>(s).refine(width).midpoint();
  };

  // Collapse dimensions: phase polynomial Q(n) = sum_j (k . coeffs[j]) n^j.
  std::vector<Rational> q(seq.coeffs.size(), Rational(0));
  for (size_t j = 0; j < seq.coeffs.size(); ++j)
    for (size_t dim = 0; dim < seq.coeffs[j].size(); ++dim)
      if (frequency[dim] != 0)
        q[j] += approx(seq.coeffs[j][dim]) * Rational(static_cast<long>(frequency[dim]));

  long double re = 0.0L, im = 0.0L;
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (Int n = -Int(N); n <= Int(N); ++n) {
    Rational value(0);
    for (auto it = q.rbegin(); it != q.rend(); ++it) value = value * n + *it;
    Rational frac = value - Rational(floor_rational(value));
    const long double phase = two_pi * static_cast<long double>(frac.get_d());
    re += cosl(phase);
    im += sinl(phase);
  }
  const long double total = 2.0L * static_cast<long double>(N) + 1.0L;
  WeylSumResult res;
  res.frequency = frequency;
  res.N = N;
  res.magnitude = static_cast<double>(sqrtl(re * re + im * im) / total);
  res.phase_bits = kPhaseBits;
  return res;
}

namespace {

Int height(const Rational& q) {
  Int num = abs(Int(q.get_num()));
  Int den = q.get_den();
  return num > den ? num : den;
}

// Realized intercepts of y = s x + t for integer slope s >= 0 and rational
// offset r = p/q: offsets frac(i*r) over the residue classes, each shifted by
// the integers j that keep the segment inside the unit square.
std::vector<Rational> realized_intercepts(const Int& s, const Rational& r) {
  std::vector<Rational> out;
  const Int q = r.get_den();
  for (Int i = 0; i < q; ++i) {
    Rational o = r * i;
    o -= floor_rational(o);
    const Int j_max = (o == 0 && s > 0) ? Int(s - 1) : Int(s);
    for (Int j = 0; j <= j_max; ++j) out.push_back(o - j);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

LineSupportResult detect_line_support(const AlgebraicReal& alpha, unsigned l, unsigned k,
                                      const Int& s_bound, const Int& q_bound) {
  if (l < 1 || k < 1) throw std::invalid_argument("l and k must be positive");
  FieldElement A = power_in_field(alpha, l);
  FieldElement B = power_in_field(alpha, l + k);

  Rational s, r;
  if (auto ra = A.rational_value()) {
    auto rb = B.rational_value();
    if (!rb)
      return {std::nullopt,
              "x-coordinates are rational but y-coordinates are not: vertical line "
              "support, no y = s x + t relation"};
    // Both powers rational: the orbit is a finite grid, and lives on the
    // horizontal lines y = 0*x + frac(n r).
    s = 0;
    r = *rb;
  } else {
    // alpha^l irrational: the relation, if any, is unique. The coordinates
    // beyond c0 force s, the constant coordinate then yields r.
    const auto& ca = A.coords();
    const auto& cb = B.coords();
    size_t pivot = 0;
    for (size_t i = 1; i < ca.size(); ++i)
      if (ca[i] != 0) {
        pivot = i;
        break;
      }
    assert(pivot > 0);
    s = cb[pivot] / ca[pivot];
    for (size_t i = 1; i < ca.size(); ++i)
      if (cb[i] != ca[i] * s)
        return {std::nullopt, "{1, alpha^l, alpha^(l+k)} admits no rational relation"};
    r = cb[0] - ca[0] * s;
  }

  if (height(s) > s_bound || height(r) > q_bound)
    return {std::nullopt, "rational relation exists but exceeds the height bounds"};

  LineFit fit;
  fit.slope = s;
  fit.offset = r;
  if (is_integer(s) && s >= 0) {
    fit.intercepts = realized_intercepts(s.get_num(), r);
    fit.exact = true;
  } else {
    fit.exact = false;
  }
  return {fit, ""};
}

std::vector<TorusPoint> polynomial_orbit(const AlgebraicReal& alpha, unsigned l, unsigned k,
                                         const IntPolynomial& P, const Int& n_lo,
                                         const Int& n_hi) {
  if (P.degree() < 1) throw ConstantPolynomial();
  FieldElement al = power_in_field(alpha, l);
  FieldElement alk = power_in_field(alpha, l + k);
  std::vector<TorusPoint> pts;
  for (Int n = n_lo; n <= n_hi; ++n) {
    Int v = P.eval(n);
    if (v == 0) continue;  // roots of P excluded
    pts.push_back({v, certified_frac({v, al}).frac, certified_frac({v, alk}).frac});
  }
  return pts;
}

std::vector<OrbitRecord> dump_records(std::span<const TorusPoint> points, const RegionSpec* region,
                                      int significant_digits) {
  Rational width = make_rational(1, pow_int(Int(10), significant_digits + 2));
  std::vector<OrbitRecord> out;
  out.reserve(points.size());
  for (const auto& pt : points) {
    OrbitRecord rec;
    rec.n = pt.n;
    rec.x = decimal_string(pt.x.enclosure(width).midpoint(), significant_digits);
    rec.y = decimal_string(pt.y.enclosure(width).midpoint(), significant_digits);
    rec.band = region ? region_membership(pt, *region) : kOutside;
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<OrbitRecord> dump_records(std::span<const TorusPoint> points,
                                      const AlgebraicReal& coefficient, unsigned band_count,
                                      int significant_digits) {
  Rational width = make_rational(1, pow_int(Int(10), significant_digits + 2));
  std::vector<OrbitRecord> out;
  out.reserve(points.size());
  for (const auto& pt : points) {
    OrbitRecord rec;
    rec.n = pt.n;
    rec.x = decimal_string(pt.x.enclosure(width).midpoint(), significant_digits);
    rec.y = decimal_string(pt.y.enclosure(width).midpoint(), significant_digits);
    rec.band = region_membership(pt, coefficient, band_count);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<OrbitRecord> orbit_dump(const AlgebraicReal& alpha, unsigned l, unsigned k,
                                    const Int& n_lo, const Int& n_hi, const RegionSpec* region,
                                    int significant_digits) {
  FieldElement al = power_in_field(alpha, l);
  FieldElement alk = power_in_field(alpha, l + k);
  std::vector<TorusPoint> pts;
  for (Int n = n_lo; n <= n_hi; ++n)
    pts.push_back({n, certified_frac({n, al}).frac, certified_frac({n, alk}).frac});
  return dump_records(pts, region, significant_digits);
}

void write_orbit_csv(std::ostream& out, std::span<const OrbitRecord> records) {
  out << "n,x,y,band\n";
  for (const auto& rec : records)
    out << rec.n.get_str() << "," << rec.x << "," << rec.y << "," << rec.band << "\n";
}

}  // namespace floorlab
