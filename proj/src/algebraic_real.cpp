#include "floorlab/algebraic_real.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>

#include "floorlab/errors.hpp"
#include "qpoly.hpp"

namespace floorlab {

struct AlgebraicReal::Rep {
  IntPolynomial poly;  // primitive; degree >= 2 implies squarefree, no rational roots
  bool rational = false;
  Rational value;  // set iff rational

  mutable std::mutex mu;
  mutable Rational lo, hi;
  mutable int sign_lo = 0;  // sign of poly at lo (fixed under bisection)
  mutable std::uint64_t gen = 0;

  Rational orig_lo, orig_hi;  // construction-time interval, for display

  std::vector<std::vector<Rational>> reduction;  // x^d .. x^(2d-2) mod poly
};

namespace {

std::vector<std::vector<Rational>> build_reduction_rows(const IntPolynomial& p) {
  const int d = p.degree();
  std::vector<std::vector<Rational>> rows;
  if (d < 2) return rows;
  // x^d = -(a_0 + ... + a_{d-1} x^{d-1}) / a_d
  std::vector<Rational> row(d);
  for (int i = 0; i < d; ++i) row[i] = make_rational(-p.coeff(i), p.leading());
  rows.push_back(row);
  for (int j = d + 1; j <= 2 * d - 2; ++j) {
    const auto& prev = rows.back();
    std::vector<Rational> next(d, Rational(0));
    // multiply by x: shift, then substitute the x^d row
    for (int i = 0; i + 1 < d; ++i) next[i + 1] = prev[i];
    const Rational& top = prev[d - 1];
    if (top != 0)
      for (int i = 0; i < d; ++i) next[i] += top * rows.front()[i];
    rows.push_back(std::move(next));
  }
  return rows;
}

std::shared_ptr<AlgebraicReal::Rep> make_rational_rep(const Rational& v) {
  auto rep = std::make_shared<AlgebraicReal::Rep>();
  rep->poly = IntPolynomial({-v.get_num(), v.get_den()});
  rep->rational = true;
  rep->value = v;
  rep->lo = v;
  rep->hi = v;
  return rep;
}

// poly: primitive squarefree with no rational roots; (lo, hi) isolates one
// simple root with a sign change.
std::shared_ptr<AlgebraicReal::Rep> make_irrational_rep(IntPolynomial poly, Rational lo,
                                                        Rational hi) {
  auto rep = std::make_shared<AlgebraicReal::Rep>();
  rep->reduction = build_reduction_rows(poly);
  rep->poly = std::move(poly);
  rep->sign_lo = rep->poly.sign_at(lo);
  assert(rep->sign_lo != 0 && rep->poly.sign_at(hi) == -rep->sign_lo);
  rep->orig_lo = lo;
  rep->orig_hi = hi;
  rep->lo = std::move(lo);
  rep->hi = std::move(hi);
  return rep;
}

}  // namespace

AlgebraicReal AlgebraicReal::from_rational(const Rational& value) {
  return AlgebraicReal(make_rational_rep(value));
}

AlgebraicReal::AlgebraicReal(const IntPolynomial& poly, const Rational& lo, const Rational& hi) {
  if (poly.is_zero()) throw ZeroPolynomial();
  if (poly.degree() < 1) throw InvalidInterval("constant polynomial has no roots");
  if (lo > hi) throw InvalidInterval("interval endpoints out of order");

  IntPolynomial sf = poly.squarefree_part();
  const auto rroots = sf.rational_roots();
  std::vector<Rational> inside;
  for (const auto& r : rroots)
    if (lo <= r && r <= hi) inside.push_back(r);

  IntPolynomial rest = sf;
  for (const auto& r : rroots) rest = rest.deflate_rational_root(r);

  int interior = 0;
  if (rest.degree() >= 1 && lo < hi) interior = sturm_count_roots(rest, lo, hi);

  const int total = static_cast<int>(inside.size()) + interior;
  if (total != 1)
    throw InvalidInterval("interval [" + rational_to_string(lo) + "," + rational_to_string(hi) +
                          "] contains " + std::to_string(total) + " roots, expected exactly 1");

  if (!inside.empty()) {
    rep_ = make_rational_rep(inside.front());
  } else {
    rep_ = make_irrational_rep(std::move(rest), lo, hi);
  }
}

int AlgebraicReal::degree() const { return rep_->poly.degree(); }
const IntPolynomial& AlgebraicReal::defining_poly() const { return rep_->poly; }
bool AlgebraicReal::is_rational() const { return rep_->rational; }

const Rational& AlgebraicReal::rational_value() const {
  assert(rep_->rational);
  return rep_->value;
}

Interval AlgebraicReal::interval() const {
  if (rep_->rational) return {rep_->value, rep_->value};
  std::lock_guard lock(rep_->mu);
  return {rep_->lo, rep_->hi};
}

Interval AlgebraicReal::refine(const Rational& target_width) const {
  if (rep_->rational) return {rep_->value, rep_->value};
  std::lock_guard lock(rep_->mu);
  bool narrowed = false;
  while (rep_->hi - rep_->lo > target_width) {
    Rational mid = (rep_->lo + rep_->hi) / 2;
    // No rational roots in the defining polynomial, so the sign is nonzero.
    if (rep_->poly.sign_at(mid) == rep_->sign_lo)
      rep_->lo = std::move(mid);
    else
      rep_->hi = std::move(mid);
    narrowed = true;
  }
  if (narrowed) ++rep_->gen;
  return {rep_->lo, rep_->hi};
}

std::uint64_t AlgebraicReal::generation() const {
  if (rep_->rational) return 0;
  std::lock_guard lock(rep_->mu);
  return rep_->gen;
}

int AlgebraicReal::compare(const Rational& q) const {
  if (rep_->rational) return sgn(Rational(rep_->value - q));
  Interval iv = interval();
  if (iv.lo > q) return 1;
  if (iv.hi < q) return -1;
  // q is inside the isolating interval and is not a root (the polynomial has
  // none rational), so it sits strictly on one side of the sign change.
  return rep_->poly.sign_at(q) == rep_->sign_lo ? 1 : -1;
}

double AlgebraicReal::to_double() const {
  if (rep_->rational) return floorlab::to_double(rep_->value);
  Interval iv = refine(make_rational(1, Int(1) << 60));
  return floorlab::to_double(iv.midpoint());
}

std::string AlgebraicReal::to_string() const {
  if (rep_->rational) return rational_to_string(rep_->value);
  // Display a short isolating interval derived from the construction-time
  // one, independent of how far the working cache has been refined.
  Rational lo = rep_->orig_lo, hi = rep_->orig_hi;
  const Rational sixteenth(1, 16);
  while (hi - lo > sixteenth) {
    Rational mid = (lo + hi) / 2;
    if (rep_->poly.sign_at(mid) == rep_->sign_lo)
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }
  return "root(" + rep_->poly.to_string() + "," + rational_to_string(lo) + "," +
         rational_to_string(hi) + ")";
}

const std::vector<std::vector<Rational>>& AlgebraicReal::reduction_rows() const {
  return rep_->reduction;
}

std::vector<AlgebraicReal> isolate_positive_roots(const IntPolynomial& poly) {
  if (poly.is_zero()) throw ZeroPolynomial();
  std::vector<AlgebraicReal> out;
  if (poly.degree() < 1) return out;

  IntPolynomial sf = poly.squarefree_part();
  const auto rroots = sf.rational_roots();
  for (const auto& r : rroots)
    if (r > 0) out.push_back(AlgebraicReal::from_rational(r));

  IntPolynomial rest = sf;
  for (const auto& r : rroots) rest = rest.deflate_rational_root(r);

  std::vector<Interval> found;
  if (rest.degree() >= 1) {
    detail::SturmChain chain(rest);
    const Rational bound = rest.cauchy_root_bound();
    std::vector<Interval> stack{{Rational(0), bound}};
    while (!stack.empty()) {
      Interval iv = stack.back();
      stack.pop_back();
      const int count = chain.count_roots(iv.lo, iv.hi);
      if (count == 0) continue;
      if (count == 1) {
        found.push_back(std::move(iv));
        continue;
      }
      Rational mid = iv.midpoint();
      stack.push_back({iv.lo, mid});
      stack.push_back({mid, iv.hi});
    }
  }

  // Narrow until intervals are pairwise disjoint and avoid the rational roots,
  // so that sorting by left endpoint is the true numeric order.
  auto shrink = [&](Interval& iv) {
    Rational mid = iv.midpoint();
    if (rest.sign_at(mid) == rest.sign_at(iv.lo))
      iv.lo = std::move(mid);
    else
      iv.hi = std::move(mid);
  };
  bool conflict = true;
  while (conflict) {
    conflict = false;
    for (size_t i = 0; i < found.size(); ++i) {
      for (size_t j = i + 1; j < found.size(); ++j) {
        if (found[i].hi > found[j].lo && found[j].hi > found[i].lo) {
          shrink(found[i]);
          shrink(found[j]);
          conflict = true;
        }
      }
      for (const auto& r : out) {
        const Rational& v = r.rational_value();
        if (found[i].lo < v && v < found[i].hi) {
          shrink(found[i]);
          conflict = true;
        }
      }
    }
  }
  for (auto& iv : found)
    out.push_back(AlgebraicReal(make_irrational_rep(rest, std::move(iv.lo), std::move(iv.hi))));

  std::sort(out.begin(), out.end(), [](const AlgebraicReal& a, const AlgebraicReal& b) {
    return a.interval().lo < b.interval().lo;
  });
  return out;
}

SameDenomReport lemma_samedenom_check(const Rational& pq, const Rational& pq2, unsigned l,
                                      unsigned k) {
  if (l < 1 || k < 1) throw std::invalid_argument("l and k must be positive");
  if (pow_rational(pq, k) != pow_rational(pq2, l))
    throw InconsistentPair("pq^k != pq2^l: the pair is not a consistent power pair");
  Int g;
  mpz_gcd(g.get_mpz_t(), pq.get_den_mpz_t(), pq2.get_den_mpz_t());
  const bool both_one = pq.get_den() == 1 && pq2.get_den() == 1;
  return {g, g != 1 || both_one};
}

}  // namespace floorlab
