#include "floorlab/int_polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "floorlab/errors.hpp"
#include "qpoly.hpp"

namespace floorlab {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

void IntPolynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(unsigned degree, Int coefficient) {
  std::vector<Int> c(degree + 1, Int(0));
  c[degree] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::characteristic(unsigned l, unsigned k, const Int& m, const Int& M) {
  std::vector<Int> c(l + k + 1, Int(0));
  c[l + k] = 1;
  c[l] = -m;
  c[0] -= M;
  return IntPolynomial(std::move(c));
}

const Int& IntPolynomial::leading() const {
  static const Int zero(0);
  return coeffs_.empty() ? zero : coeffs_.back();
}

Int IntPolynomial::coeff(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : Int(0);
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

Int IntPolynomial::eval(const Int& x) const {
  Int acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const { return sgn(eval(x)); }

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return IntPolynomial();
  std::vector<Int> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

Int IntPolynomial::content() const {
  Int g(0);
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Int g = content();
  if (leading() < 0) g = -g;
  std::vector<Int> c(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] / g;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::squarefree_part() const {
  if (is_zero()) return {};
  if (degree() == 0) return IntPolynomial({Int(1)});
  detail::QPoly p = detail::from_int_poly(*this);
  detail::QPoly g = detail::qgcd(p, detail::qderivative(p));
  if (detail::qdeg(g) == 0) return primitive_part();
  auto [q, r] = detail::qdivmod(p, g);
  assert(r.empty());
  return detail::to_primitive_int_poly(q);
}

std::vector<Rational> IntPolynomial::rational_roots() const {
  std::vector<Rational> roots;
  if (is_zero() || degree() == 0) return roots;
  IntPolynomial p = *this;
  // Factor out x^v: root 0.
  size_t v = 0;
  while (v < p.coeffs_.size() && p.coeffs_[v] == 0) ++v;
  if (v > 0) {
    roots.emplace_back(0);
    p = IntPolynomial(std::vector<Int>(p.coeffs_.begin() + v, p.coeffs_.end()));
  }
  if (p.degree() < 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  // Candidates p/q with p | constant term, q | leading coefficient.
  auto divisors = [](Int n) {
    n = abs(n);
    std::vector<Int> d;
    for (Int i = 1; i * i <= n; ++i) {
      if (n % i == 0) {
        d.push_back(i);
        if (i != n / i) d.push_back(n / i);
      }
    }
    return d;
  };
  const auto nums = divisors(p.coeffs_.front());
  const auto dens = divisors(p.leading());
  for (const auto& a : nums) {
    for (const auto& b : dens) {
      Int g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      if (g != 1) continue;
      for (int s : {1, -1}) {
        Rational cand = make_rational(s * a, b);
        if (p.eval(cand) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

IntPolynomial IntPolynomial::deflate_rational_root(const Rational& root) const {
  // Synthetic division by (den*x - num); the quotient over Q is then scaled
  // back to a primitive integer polynomial.
  assert(eval(root) == 0);
  detail::QPoly p = detail::from_int_poly(*this);
  detail::QPoly lin{-Rational(root.get_num()), Rational(root.get_den())};
  auto [q, r] = detail::qdivmod(p, lin);
  assert(r.empty());
  return detail::to_primitive_int_poly(q);
}

Rational IntPolynomial::cauchy_root_bound() const {
  if (degree() < 1) return Rational(1);
  Int mx(0);
  for (size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    Int a = abs(coeffs_[i]);
    if (a > mx) mx = a;
  }
  return Rational(1) + make_rational(mx, abs(leading()));
}

std::string IntPolynomial::to_string() const {
  std::string s = "[";
  if (coeffs_.empty()) s += "0";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ",";
    s += coeffs_[i].get_str();
  }
  return s + "]";
}

int sturm_count_roots(const IntPolynomial& squarefree, const Rational& lo, const Rational& hi) {
  detail::SturmChain chain(squarefree);
  return chain.count_roots(lo, hi);
}

namespace detail {

IntPolynomial to_primitive_int_poly(const QPoly& p) {
  if (p.empty()) return {};
  Int l(1);
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> c(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    Rational scaled = p[i] * Rational(l);
    assert(is_integer(scaled));
    c[i] = scaled.get_num();
  }
  return IntPolynomial(std::move(c)).primitive_part();
}

QPoly qderivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rational(static_cast<unsigned long>(i));
  return d;
}

Rational qeval(const QPoly& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly qadd(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  qstrip(r);
  return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  qstrip(r);
  return r;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qstrip(r);
  return r;
}

QPoly qscale(const QPoly& a, const Rational& c) {
  if (c == 0) return {};
  QPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

std::pair<QPoly, QPoly> qdivmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  QPoly rem = a;
  if (qdeg(rem) < qdeg(b)) return {{}, rem};
  QPoly quot(rem.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (int i = qdeg(rem); i >= qdeg(b); --i) {
    if (rem.size() <= static_cast<size_t>(i) || rem[i] == 0) continue;
    Rational f = rem[i] / lead;
    quot[i - qdeg(b)] = f;
    for (size_t j = 0; j < b.size(); ++j) rem[i - qdeg(b) + j] -= f * b[j];
  }
  qstrip(rem);
  qstrip(quot);
  return {quot, rem};
}

QPoly qrem(const QPoly& a, const QPoly& b) { return qdivmod(a, b).second; }

QPoly qgcd(QPoly a, QPoly b) {
  qstrip(a);
  qstrip(b);
  while (!b.empty()) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) a = qscale(a, Rational(1) / a.back());
  return a;
}

ExtGcd qext_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  qstrip(r0);
  qstrip(r1);
  QPoly u0{Rational(1)}, u1{};
  QPoly v0{}, v1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = qdivmod(r0, r1);
    QPoly u2 = qsub(u0, qmul(q, u1));
    QPoly v2 = qsub(v0, qmul(q, v1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (!r0.empty() && r0.back() != 1) {
    Rational inv = Rational(1) / r0.back();
    r0 = qscale(r0, inv);
    u0 = qscale(u0, inv);
    v0 = qscale(v0, inv);
  }
  return {r0, u0, v0};
}

SturmChain::SturmChain(const IntPolynomial& squarefree) {
  QPoly p = from_int_poly(squarefree);
  qstrip(p);
  if (p.empty()) return;
  seq.push_back(p);
  QPoly d = qderivative(p);
  if (d.empty()) return;
  seq.push_back(d);
  while (true) {
    QPoly r = qrem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
}

int SturmChain::variations(const Rational& x) const {
  int count = 0, prev = 0;
  for (const auto& p : seq) {
    int s = sgn(qeval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int SturmChain::count_roots(const Rational& lo, const Rational& hi) const {
  if (seq.empty() || lo >= hi) return 0;
  return variations(lo) - variations(hi);
}

}  // namespace detail
}  // namespace floorlab
