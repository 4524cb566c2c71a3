#include "floorlab/certified_floor.hpp"

#include <stdexcept>

namespace floorlab {

FloorResult certified_floor(const LinearForm& f) {
  if (auto r = f.elem.rational_value()) {
    Rational v = *r * f.n + f.shift;
    return {floor_rational(v), Exactness::ExactRational, Rational(0)};
  }
  if (f.n == 0) return {floor_rational(f.shift), Exactness::ExactRational, Rational(0)};

  const Int abs_n = abs(f.n);
  Rational target = make_rational(1, (Int(1) << 64) * abs_n);
  int rounds = 0;
  while (true) {
    Interval e = f.elem.enclosure(target);
    Rational lo = e.lo * f.n + f.shift;
    Rational hi = e.hi * f.n + f.shift;
    if (f.n < 0) std::swap(lo, hi);
    Int fl = floor_rational(lo);
    Int fh = floor_rational(hi);
    if (fl == fh) return {fl, Exactness::IntervalCertified, hi - lo};
    if (++rounds >= 3 && fh - fl == 1) {
      // The straddled integer may be the exact value; decide it exactly.
      Rational c = (Rational(fh) - f.shift) / Rational(f.n);
      if ((f.elem - c).is_zero()) return {fh, Exactness::ExactRational, Rational(0)};
    }
    target = target * target;
  }
}

FracResult certified_frac(const LinearForm& f) {
  FloorResult fr = certified_floor(f);
  FieldElement frac = f.elem * Rational(f.n) + Rational(f.shift - fr.value);
  return {std::move(fr), std::move(frac)};
}

Int eval_bracket_chain(const Int& n, std::span<const FieldElement> multipliers,
                       std::span<const Rational> shifts) {
  if (multipliers.empty()) throw std::invalid_argument("bracket chain needs multipliers");
  if (multipliers.size() != shifts.size())
    throw std::invalid_argument("bracket chain shifts must match multipliers");
  Int b = n;
  for (size_t i = 0; i < multipliers.size(); ++i)
    b = certified_floor({b, multipliers[i], shifts[i]}).value;
  return b;
}

Int eval_bracket_chain(const Int& n, std::span<const FieldElement> multipliers) {
  std::vector<Rational> shifts(multipliers.size(), Rational(0));
  return eval_bracket_chain(n, multipliers, shifts);
}

}  // namespace floorlab
