#include "floorlab/identity_engine.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "floorlab/errors.hpp"
#include "floorlab/parallel.hpp"

namespace floorlab {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Z1: return "z1";
    case Variant::Z2: return "z2";
    case Variant::Main: return "main";
    case Variant::Delta: return "delta";
    case Variant::MVar: return "mvar";
    case Variant::Pair: return "pair";
    case Variant::Poly: return "poly";
    case Variant::Triple: return "triple";
  }
  return "?";
}

std::optional<Variant> variant_from_name(const std::string& name) {
  for (Variant v : {Variant::Z1, Variant::Z2, Variant::Main, Variant::Delta, Variant::MVar,
                    Variant::Pair, Variant::Poly, Variant::Triple})
    if (variant_name(v) == name) return v;
  return std::nullopt;
}

IdentityCase IdentityCase::z1(AlgebraicReal a) { return {Variant::Z1, std::move(a)}; }
IdentityCase IdentityCase::z2(AlgebraicReal a) { return {Variant::Z2, std::move(a)}; }

IdentityCase IdentityCase::main_variant(AlgebraicReal a, unsigned l, unsigned k) {
  IdentityCase c{Variant::Main, std::move(a)};
  c.l = l;
  c.k = k;
  return c;
}

IdentityCase IdentityCase::delta_variant(AlgebraicReal a, unsigned l, unsigned k, Rational delta) {
  IdentityCase c{Variant::Delta, std::move(a)};
  c.l = l;
  c.k = k;
  c.delta = std::move(delta);
  return c;
}

IdentityCase IdentityCase::m_variant(AlgebraicReal a, unsigned l, unsigned k, unsigned m) {
  IdentityCase c{Variant::MVar, std::move(a)};
  c.l = l;
  c.k = k;
  c.m = m;
  return c;
}

IdentityCase IdentityCase::pair_variant(AlgebraicReal a, AlgebraicReal b, unsigned m) {
  IdentityCase c{Variant::Pair, std::move(a)};
  c.m = m;
  c.beta = std::move(b);
  return c;
}

IdentityCase IdentityCase::pair_in_field(AlgebraicReal a, FieldElement b, unsigned m) {
  IdentityCase c{Variant::Pair, std::move(a)};
  c.m = m;
  c.beta_elem = std::move(b);
  return c;
}

IdentityCase IdentityCase::poly_variant(AlgebraicReal a, unsigned l, unsigned k, IntPolynomial p) {
  if (p.degree() < 1) throw ConstantPolynomial();
  IdentityCase c{Variant::Poly, std::move(a)};
  c.l = l;
  c.k = k;
  c.poly = std::move(p);
  return c;
}

IdentityCase IdentityCase::triple(AlgebraicReal a) { return {Variant::Triple, std::move(a)}; }

namespace {

// Per-case evaluation context: powers of alpha are built once and reused
// across the n sweep.
class Checker {
 public:
  explicit Checker(const IdentityCase& c) : c_(c), gen_(FieldElement::generator(c.alpha)) {
    if (c_.l < 1 || c_.k < 1 || c_.m < 1)
      throw std::invalid_argument("l, k, m must be positive");
    switch (c_.variant) {
      case Variant::Z1:
      case Variant::Z2:
        al_ = gen_;
        alk_ = gen_.pow(2);
        break;
      case Variant::Main:
      case Variant::Delta:
      case Variant::MVar:
      case Variant::Poly:
        al_ = gen_.pow(c_.l);
        ak_ = gen_.pow(c_.k);
        alk_ = gen_.pow(c_.l + c_.k);
        break;
      case Variant::Triple:
        al_ = gen_;
        alk_ = gen_.pow(3);
        break;
      case Variant::Pair: {
        if (c_.beta_elem) {
          beta_ = c_.beta_elem;
        } else if (c_.beta) {
          beta_ = express_in_field(c_.alpha, *c_.beta, c_.relation_height_bound);
          if (!beta_)
            throw Error("beta is not representable in Q*alpha + Q within the height bound");
        } else {
          throw BetaMissing();
        }
        beta_over_alpha_ = *beta_ * gen_.inverse();
        break;
      }
    }
    if (c_.variant == Variant::Delta && (c_.delta < 0 || c_.delta >= 1))
      throw BadDelta("delta = " + rational_to_string(c_.delta) + " is outside [0,1)");
    if (c_.variant == Variant::Poly && c_.poly.degree() < 1) throw ConstantPolynomial();
  }

  ResidualReport check(const Int& n) const {
    switch (c_.variant) {
      case Variant::Z1: {
        Int b1 = certified_floor({n, *al_}).value;
        Int lhs = certified_floor({b1 + 1, *al_}).value;
        Int rhs = certified_floor({n, *alk_}).value + 1;
        return report(n, lhs, rhs);
      }
      case Variant::Z2: {
        if (n == 0) return skipped(n);
        Int b1 = certified_floor({n, *al_}).value;
        Int lhs = certified_floor({b1, *al_}).value + 1;
        Int rhs = certified_floor({n, *alk_}).value;
        return report(n, lhs, rhs);
      }
      case Variant::Main:
        if (n == 0) return skipped(n);
        return main_at(n, n);
      case Variant::Poly: {
        Int v = c_.poly.eval(n);
        if (v == 0) return skipped(n);
        return main_at(n, v);
      }
      case Variant::Delta: {
        Int b1 = certified_floor({n, *al_}).value;
        Int lhs = certified_floor({b1, *ak_, c_.delta}).value;
        Int rhs = certified_floor({n, *alk_}).value;
        return report(n, lhs, rhs);
      }
      case Variant::MVar: {
        if (n == 0) return skipped(n);
        Int b1 = certified_floor({n, *al_}).value;
        Int lhs = certified_floor({b1, *ak_}).value + certified_floor({n * c_.m, *al_}).value + 1 -
                  c_.m * b1;
        Int rhs = certified_floor({n, *alk_}).value;
        return report(n, lhs, rhs);
      }
      case Variant::Pair: {
        if (n == 0) return skipped(n);
        Int b1 = certified_floor({n, gen_}).value;
        Int lhs = certified_floor({n, *beta_}).value - certified_floor({b1, *beta_over_alpha_}).value;
        Int rhs = certified_floor({n * c_.m, gen_}).value + 1 - c_.m * b1;
        return report(n, lhs, rhs);
      }
      case Variant::Triple: {
        if (n == 0) return skipped(n);
        Int b = n;
        for (int i = 0; i < 3; ++i) b = certified_floor({b, gen_}).value;
        Int lhs = b + 1;
        Int rhs = certified_floor({n, *alk_}).value;
        return report(n, lhs, rhs);
      }
    }
    throw std::logic_error("unknown variant");
  }

 private:
  ResidualReport main_at(const Int& n, const Int& index) const {
    Int b1 = certified_floor({index, *al_}).value;
    Int lhs = certified_floor({b1, *ak_}).value + 1;
    Int rhs = certified_floor({index, *alk_}).value;
    return report(n, lhs, rhs);
  }

  static ResidualReport skipped(const Int& n) { return {n, Int(0), Int(0), Int(0), true}; }

  ResidualReport report(const Int& n, Int lhs, Int rhs) const {
    Int residual = lhs - rhs;
    return {n, std::move(lhs), std::move(rhs), std::move(residual), false};
  }

  const IdentityCase& c_;
  FieldElement gen_;
  std::optional<FieldElement> al_, ak_, alk_;
  std::optional<FieldElement> beta_, beta_over_alpha_;
};

// True when `a` comes before `b` in the first-violation order: smaller |n|
// first, positive preferred on ties.
bool first_order(const Int& a, const Int& b) {
  const Int aa = abs(a), ab = abs(b);
  if (aa != ab) return aa < ab;
  return a > b;
}

}  // namespace

ResidualReport check_identity(const IdentityCase& c, const Int& n) {
  Checker checker(c);
  return checker.check(n);
}

ScanSummary scan_identity(const IdentityCase& c, const Int& n_lo, const Int& n_hi,
                          const ScanOptions& opt) {
  if (n_lo > n_hi) throw std::invalid_argument("scan range out of order");
  Checker validate(c);  // surface BadDelta/BetaMissing once, up front
  (void)validate;

  struct ChunkResult {
    std::uint64_t checked = 0, skipped = 0, violations_total = 0;
    std::vector<ResidualReport> violations;
    std::optional<Int> first;
  };

  const unsigned workers = opt.workers ? opt.workers : default_workers();
  const auto chunks = split_range(n_lo, n_hi, workers);
  std::vector<ChunkResult> results(chunks.size());

  parallel_for_index(chunks.size(), workers, [&](size_t idx) {
    Checker checker(c);
    ChunkResult& r = results[idx];
    for (Int n = chunks[idx].first; n <= chunks[idx].second; ++n) {
      ResidualReport rep = checker.check(n);
      if (rep.skipped) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      if (rep.residual != 0) {
        ++r.violations_total;
        if (r.violations.size() < opt.violation_cap) r.violations.push_back(rep);
        if (!r.first || first_order(rep.n, *r.first)) r.first = rep.n;
      }
    }
  });

  ScanSummary s;
  s.n_lo = n_lo;
  s.n_hi = n_hi;
  for (const auto& r : results) {
    s.checked += r.checked;
    s.skipped += r.skipped;
    s.violations_total += r.violations_total;
    for (const auto& v : r.violations) {
      if (s.violations.size() < opt.violation_cap)
        s.violations.push_back(v);
      else
        s.capped = true;
    }
    if (r.first && (!s.first_violation || first_order(*r.first, *s.first_violation)))
      s.first_violation = r.first;
  }
  if (s.violations_total > opt.violation_cap) s.capped = true;
  return s;
}

std::optional<ResidualReport> first_violation_search(const IdentityCase& c, const Int& n_max,
                                                     const ScanOptions&) {
  Checker checker(c);
  for (Int a = 1; a <= n_max; ++a) {
    for (int sign : {1, -1}) {
      Int n = sign > 0 ? a : Int(-a);
      ResidualReport rep = checker.check(n);
      if (!rep.skipped && rep.residual != 0) return rep;
    }
  }
  return std::nullopt;
}

ConditionReport check_condition(const AlgebraicReal& alpha, unsigned l, unsigned k, unsigned m) {
  if (l < 1 || k < 1 || m < 1) throw std::invalid_argument("l, k, m must be positive");
  ConditionReport rep;
  rep.alpha_irrational = !alpha.is_rational();
  FieldElement value = power_in_field(alpha, l + k) - power_in_field(alpha, l) * Rational(m);
  rep.range_text = "Z intersect [1, (" + std::to_string(m + 1) + ")^(" + std::to_string(l) + "/" +
                   std::to_string(k) + "))";
  if (auto r = rationality_of(value); r && is_integer(*r)) {
    rep.is_integer = true;
    rep.M = r->get_num();
    rep.in_range = *rep.M >= 1 && pow_int(*rep.M, k) < pow_int(Int(m) + 1, l);
  }
  rep.value = std::move(value);
  rep.satisfied = rep.is_integer && rep.in_range;
  return rep;
}

std::optional<FieldElement> express_in_field(const AlgebraicReal& alpha, const AlgebraicReal& beta,
                                             unsigned height_bound) {
  if (beta.is_rational())
    return FieldElement::constant(alpha, beta.rational_value());
  if (alpha.is_rational()) return std::nullopt;  // Q*alpha + Q = Q, beta irrational

  // Numeric pass: integer relations u + v*alpha + w*beta ~ 0 with heights up
  // to the bound, each candidate verified exactly afterwards.
  const Rational width = make_rational(1, Int(1) << 160);
  const Rational qa = alpha.refine(width).midpoint();
  const Rational qb = beta.refine(width).midpoint();
  const Rational tol = make_rational(1, Int(1) << 100);
  const FieldElement gen = FieldElement::generator(alpha);
  const Interval beta_iv = beta.interval();

  const long H = static_cast<long>(height_bound);
  for (long w = 1; w <= H; ++w) {
    for (long v = -H; v <= H; ++v) {
      Rational t = qa * v + qb * w;
      Int u = floor_rational(t + Rational(1, 2));  // nearest integer to t
      Rational err = t - u;
      if (err < 0) err = -err;
      if (err > tol) continue;
      // u is the nearest integer to v*alpha + w*beta, so the candidate
      // relation is -u + v*alpha + w*beta = 0, i.e. beta = (u - v*alpha)/w.
      Rational s = make_rational(Int(-v), Int(w));
      Rational r = make_rational(u, Int(w));
      FieldElement cand = gen * s + r;
      // cand equals beta iff beta's polynomial vanishes on it and cand lies
      // in beta's isolating interval.
      const auto& bp = beta.defining_poly();
      FieldElement eval = FieldElement::constant(alpha, Rational(0));
      for (int i = bp.degree(); i >= 0; --i) eval = eval * cand + Rational(bp.coeff(i));
      if (!eval.is_zero()) continue;
      if (sign_of(cand - beta_iv.lo) > 0 && sign_of(-(cand - beta_iv.hi)) > 0) return cand;
    }
  }
  return std::nullopt;
}

ConditionReport check_condition_pair(const AlgebraicReal& alpha, const AlgebraicReal& beta,
                                     unsigned m, unsigned height_bound) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  ConditionReport rep;
  rep.alpha_irrational = !alpha.is_rational();
  rep.range_text = "Z intersect [1, alpha)";
  auto beta_elem = express_in_field(alpha, beta, height_bound);
  if (!beta_elem) {
    rep.beta_in_field = false;  // NotInField: the condition fails by definition
    rep.satisfied = false;
    return rep;
  }
  FieldElement value = *beta_elem - FieldElement::generator(alpha) * Rational(m);
  if (auto r = rationality_of(value); r && is_integer(*r)) {
    rep.is_integer = true;
    rep.M = r->get_num();
    rep.in_range = *rep.M >= 1 && alpha.compare(Rational(*rep.M)) > 0;
  }
  rep.value = std::move(value);
  rep.satisfied = rep.alpha_irrational && rep.is_integer && rep.in_range;
  return rep;
}

bool DeltaWindow::contains(const Rational& delta) const {
  if (delta >= 1) return false;
  return sign_of(lower - delta) <= 0;
}

DeltaWindow admissible_delta_interval(const AlgebraicReal& alpha, unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  FieldElement ak = power_in_field(alpha, k);
  const int pos = sign_of(FieldElement::generator(alpha));
  const int at_one = alpha.compare(Rational(1));
  const int below_two = sign_of(ak - Rational(2));
  if (pos <= 0 || at_one == 0 || below_two >= 0)
    throw AlphaOutOfHypothesis("alpha must lie in (0,1) or (1,2^(1/k))");
  return DeltaWindow{ak - Rational(1)};
}

Int r_of(const Int& n, const AlgebraicReal& alpha, unsigned m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (n == 0) throw ZeroN();
  if (alpha.is_rational()) throw RationalAlpha("r(n) requires irrational alpha");
  FieldElement gen = FieldElement::generator(alpha);
  Int r = certified_floor({n * m, gen}).value + 1 - m * certified_floor({n, gen}).value;
  if (r < 1 || r > m) throw Error("r(n) left its guaranteed range {1..m}");
  return r;
}

ConditionReport condition_for_case(const IdentityCase& c) {
  switch (c.variant) {
    case Variant::Z1:
    case Variant::Z2:
    case Variant::Triple:
      return check_condition(c.alpha, 1, 1, 1);
    case Variant::Main:
    case Variant::Poly:
      return check_condition(c.alpha, c.l, c.k, 1);
    case Variant::MVar:
      return check_condition(c.alpha, c.l, c.k, c.m);
    case Variant::Delta: {
      ConditionReport rep = check_condition(c.alpha, c.l, c.k, 1);
      if (rep.satisfied) {
        DeltaWindow window = admissible_delta_interval(c.alpha, c.k);
        rep.satisfied = window.contains(c.delta);
        rep.range_text += "; delta in [alpha^k - 1, 1)";
      }
      return rep;
    }
    case Variant::Pair: {
      if (c.beta_elem) {
        // Wrap the in-field beta back into the pair condition directly.
        ConditionReport rep;
        rep.alpha_irrational = !c.alpha.is_rational();
        rep.range_text = "Z intersect [1, alpha)";
        FieldElement value = *c.beta_elem - FieldElement::generator(c.alpha) * Rational(c.m);
        if (auto r = rationality_of(value); r && is_integer(*r)) {
          rep.is_integer = true;
          rep.M = r->get_num();
          rep.in_range = *rep.M >= 1 && c.alpha.compare(Rational(*rep.M)) > 0;
        }
        rep.value = std::move(value);
        rep.satisfied = rep.alpha_irrational && rep.is_integer && rep.in_range;
        return rep;
      }
      if (!c.beta) throw BetaMissing();
      return check_condition_pair(c.alpha, *c.beta, c.m, c.relation_height_bound);
    }
  }
  throw std::logic_error("unknown variant");
}

Agreement classify_agreement(bool has_condition, bool condition_satisfied,
                             std::uint64_t violations) {
  if (!has_condition) return Agreement::IdentityOnly;
  if (condition_satisfied && violations > 0) return Agreement::HardDisagreement;
  if (!condition_satisfied && violations == 0) return Agreement::Undistinguished;
  return Agreement::Consistent;
}

std::string agreement_name(Agreement a) {
  switch (a) {
    case Agreement::IdentityOnly: return "identity-only";
    case Agreement::Consistent: return "consistent";
    case Agreement::HardDisagreement: return "hard_disagreement";
    case Agreement::Undistinguished: return "undistinguished";
  }
  return "?";
}

std::vector<CrossRow> cross_validate(const IdentityCase& family,
                                     std::span<const AlgebraicReal> grid, const Int& n_lo,
                                     const Int& n_hi, const ScanOptions& opt) {
  std::vector<CrossRow> rows;
  rows.reserve(grid.size());
  for (const auto& alpha : grid) {
    IdentityCase c = family;
    c.alpha = alpha;
    CrossRow row;
    row.alpha_text = alpha.to_string();
    if (family.variant == Variant::Delta && alpha.is_rational() &&
        alpha.rational_value() == 1) {
      // alpha = 1 sits outside the Delta hypothesis: report without verdict.
      ScanSummary s = scan_identity(c, n_lo, n_hi, opt);
      row.violations_total = s.violations_total;
      row.first_violation = s.first_violation;
      row.flag = CrossRow::Flag::NoVerdict;
      rows.push_back(std::move(row));
      continue;
    }
    ConditionReport cond = condition_for_case(c);
    ScanSummary s = scan_identity(c, n_lo, n_hi, opt);
    row.condition = cond.satisfied;
    row.violations_total = s.violations_total;
    row.first_violation = s.first_violation;
    if (cond.satisfied && s.violations_total > 0)
      row.flag = CrossRow::Flag::HardFailure;
    else if (!cond.satisfied && s.violations_total == 0)
      row.flag = CrossRow::Flag::Undistinguished;
    else
      row.flag = CrossRow::Flag::Consistent;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace floorlab
