#include "floorlab/field_element.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

#include "floorlab/errors.hpp"
#include "qpoly.hpp"

namespace floorlab {

namespace {

void check_same_base(const FieldElement& a, const FieldElement& b) {
  if (!a.base().same_number_object(b.base())) throw MixedBase();
}

detail::QPoly coords_to_qpoly(const std::vector<Rational>& c) {
  detail::QPoly p(c.begin(), c.end());
  detail::qstrip(p);
  return p;
}

// Interval Horner evaluation of the coordinate polynomial over [lo, hi].
Interval interval_eval(const std::vector<Rational>& coords, const Interval& x) {
  Rational u(0), v(0);
  for (auto it = coords.rbegin(); it != coords.rend(); ++it) {
    // [u,v] * [x.lo, x.hi] + c
    Rational p1 = u * x.lo, p2 = u * x.hi, p3 = v * x.lo, p4 = v * x.hi;
    Rational mn = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational mx = std::max(std::max(p1, p2), std::max(p3, p4));
    u = mn + *it;
    v = mx + *it;
  }
  return {u, v};
}

}  // namespace

FieldElement::FieldElement(AlgebraicReal base, std::vector<Rational> coords)
    : base_(std::move(base)) {
  const size_t d = static_cast<size_t>(std::max(base_.degree(), 1));
  if (coords.size() > d) reduce(coords);
  coords.resize(d, Rational(0));
  coords_ = std::move(coords);
}

void FieldElement::reduce(std::vector<Rational>& raw) const {
  const size_t d = static_cast<size_t>(std::max(base_.degree(), 1));
  if (d == 1) {
    // alpha is rational: substitute powers of the value directly.
    const Rational& v = base_.rational_value();
    Rational acc(0);
    for (auto it = raw.rbegin(); it != raw.rend(); ++it) acc = acc * v + *it;
    raw.assign(1, std::move(acc));
    return;
  }
  const auto& rows = base_.reduction_rows();
  if (raw.size() > d + rows.size()) {
    // Degrees beyond a single product: plain polynomial remainder.
    detail::QPoly p(raw.begin(), raw.end());
    detail::qstrip(p);
    detail::QPoly r = detail::qrem(p, detail::from_int_poly(base_.defining_poly()));
    r.resize(d, Rational(0));
    raw = std::move(r);
    return;
  }
  std::vector<Rational> out(d, Rational(0));
  for (size_t i = 0; i < raw.size() && i < d; ++i) out[i] = raw[i];
  for (size_t i = d; i < raw.size(); ++i) {
    if (raw[i] == 0) continue;
    const auto& row = rows[i - d];
    for (size_t j = 0; j < d; ++j) out[j] += raw[i] * row[j];
  }
  raw = std::move(out);
}

FieldElement FieldElement::generator(const AlgebraicReal& base) {
  const size_t d = static_cast<size_t>(std::max(base.degree(), 1));
  std::vector<Rational> c(d, Rational(0));
  if (d == 1)
    c[0] = base.rational_value();
  else
    c[1] = 1;
  return FieldElement(base, std::move(c));
}

FieldElement FieldElement::constant(const AlgebraicReal& base, const Rational& c) {
  const size_t d = static_cast<size_t>(std::max(base.degree(), 1));
  std::vector<Rational> v(d, Rational(0));
  v[0] = c;
  return FieldElement(base, std::move(v));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_base(*this, o);
  std::vector<Rational> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return FieldElement(base_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_base(*this, o);
  std::vector<Rational> c(coords_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return FieldElement(base_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c(coords_);
  for (auto& x : c) x = -x;
  return FieldElement(base_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_base(*this, o);
  const size_t d = coords_.size();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (size_t i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (o.coords_[j] == 0) continue;
      prod[i + j] += coords_[i] * o.coords_[j];
    }
  }
  return FieldElement(base_, std::move(prod));
}

FieldElement FieldElement::operator+(const Rational& c) const {
  std::vector<Rational> v(coords_);
  v[0] += c;
  return FieldElement(base_, std::move(v));
}

FieldElement FieldElement::operator-(const Rational& c) const { return *this + Rational(-c); }

FieldElement FieldElement::operator*(const Rational& c) const {
  std::vector<Rational> v(coords_);
  for (auto& x : v) x *= c;
  return FieldElement(base_, std::move(v));
}

FieldElement FieldElement::operator/(const Rational& c) const {
  if (c == 0) throw std::domain_error("division by zero");
  return *this * Rational(Rational(1) / c);
}

FieldElement FieldElement::pow(unsigned long e) const {
  FieldElement result = constant(base_, Rational(1));
  FieldElement square = *this;
  while (e > 0) {
    if (e & 1) result = result * square;
    e >>= 1;
    if (e) square = square * square;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  if (coords_.size() == 1) return constant(base_, Rational(1) / coords_[0]);
  detail::QPoly c = coords_to_qpoly(coords_);
  detail::QPoly p = detail::from_int_poly(base_.defining_poly());
  auto eg = detail::qext_gcd(c, p);
  if (detail::qdeg(eg.g) != 0)
    throw Error("defining polynomial is not minimal for this element; cannot invert");
  // u*c + v*p = 1  =>  c^{-1} = u (mod p)
  std::vector<Rational> u(eg.u.begin(), eg.u.end());
  return FieldElement(base_, std::move(u));
}

bool FieldElement::is_zero() const {
  bool all_zero = true;
  for (const auto& c : coords_)
    if (c != 0) {
      all_zero = false;
      break;
    }
  if (all_zero) return true;
  if (coords_.size() == 1) return false;
  detail::QPoly c = coords_to_qpoly(coords_);
  detail::QPoly p = detail::from_int_poly(base_.defining_poly());
  detail::QPoly g = detail::qgcd(p, c);
  if (detail::qdeg(g) < 1) return false;
  // g divides the defining polynomial, whose only root in the isolating
  // interval is alpha; so C(alpha) = 0 iff g changes sign across it.
  Interval iv = base_.interval();
  return sgn(detail::qeval(g, iv.lo)) != sgn(detail::qeval(g, iv.hi));
}

int FieldElement::sign() const {
  if (is_zero()) return 0;
  if (coords_.size() == 1) return sgn(coords_[0]);
  Interval x = base_.interval();
  while (true) {
    Interval v = interval_eval(coords_, x);
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    x = base_.refine(x.width() / 16);
  }
}

std::optional<Rational> FieldElement::rational_value() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return std::nullopt;
  return coords_[0];
}

Interval FieldElement::enclosure(const Rational& max_width) const {
  if (auto r = rational_value()) return {*r, *r};
  Interval x = base_.interval();
  while (true) {
    Interval v = interval_eval(coords_, x);
    if (v.width() <= max_width) return v;
    x = base_.refine(x.width() / 16);
  }
}

double FieldElement::to_double() const {
  Interval v = enclosure(make_rational(1, Int(1) << 60));
  return floorlab::to_double(v.midpoint());
}

std::string FieldElement::to_string() const {
  std::string s;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += " + ";
    s += rational_to_string(coords_[i]);
    if (i == 1) s += "*a";
    if (i > 1) s += "*a^" + std::to_string(i);
  }
  return s;
}

FieldElement power_in_field(const AlgebraicReal& a, unsigned long e) {
  return FieldElement::generator(a).pow(e);
}

std::optional<Rational> rationality_of(const FieldElement& x) { return x.rational_value(); }

int sign_of(const FieldElement& x) { return x.sign(); }

AlgebraicReal construct_characteristic_alpha(unsigned l, unsigned k, const Int& m, const Int& M) {
  if (l < 1 || k < 1 || m < 1) throw std::invalid_argument("l, k, m must be positive");
  if (M < 1)
    throw MOutOfRange("M = " + M.get_str() + " is below 1");
  if (pow_int(M, k) >= pow_int(m + 1, l))
    throw MOutOfRange("M = " + M.get_str() + " fails M^k < (m+1)^l for (l,k,m) = (" +
                      std::to_string(l) + "," + std::to_string(k) + "," + m.get_str() + ")");
  IntPolynomial p = IntPolynomial::characteristic(l, k, m, M);
  auto roots = isolate_positive_roots(p);
  if (roots.size() != 1)
    throw NonUniqueRoot("characteristic polynomial has " + std::to_string(roots.size()) +
                        " positive roots");
  const AlgebraicReal& alpha = roots.front();
  // Certify m < alpha^k < m+1 and the defining relation, all by exact signs.
  FieldElement ak = power_in_field(alpha, k);
  FieldElement al = power_in_field(alpha, l);
  FieldElement relation = ak * al - al * Rational(m) - Rational(M);
  if (!relation.is_zero() || sign_of(ak - Rational(m)) <= 0 ||
      sign_of(ak - Rational(m + 1)) >= 0)
    throw NonUniqueRoot("characteristic root failed its range certification");
  return alpha;
}

}  // namespace floorlab
