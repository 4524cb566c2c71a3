#pragma once

#include <span>
#include <vector>

#include "floorlab/field_element.hpp"
#include "floorlab/numeric.hpp"

namespace floorlab {

/// The exact real number n*elem + shift.
struct LinearForm {
  Int n;
  FieldElement elem;
  Rational shift{0};
};

enum class Exactness { ExactRational, IntervalCertified };

struct FloorResult {
  Int value;
  Exactness exactness;
  Rational final_width;  // 0 for the exact-rational branch
};

/// Exact floor of a linear form. Rational values go through exact rational
/// arithmetic; irrational values are certified by refining the base interval
/// until it contains no integer. Width escalation starts at 2^-64 (scaled by
/// n) and doubles the refinement depth each round, uncapped.
FloorResult certified_floor(const LinearForm& f);

struct FracResult {
  FloorResult floor_part;
  /// The fractional part, kept symbolic: n*elem + shift - floor.
  FieldElement frac;
};

FracResult certified_frac(const LinearForm& f);

/// b0 = n, then b_i = floor(b_{i-1} * multipliers[i] + shifts[i]); returns the
/// final b. Shifts are added inside each bracket before flooring.
Int eval_bracket_chain(const Int& n, std::span<const FieldElement> multipliers,
                       std::span<const Rational> shifts);
Int eval_bracket_chain(const Int& n, std::span<const FieldElement> multipliers);

}  // namespace floorlab
