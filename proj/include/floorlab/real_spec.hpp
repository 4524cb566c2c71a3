#pragma once

#include <string>

#include "floorlab/algebraic_real.hpp"

namespace floorlab {

/// Parses the canonical textual forms:
///   "root([c0,c1,...,cd],lo,hi)"  -- the root of the integer polynomial
///                                    isolated by [lo,hi] (Sturm-validated)
///   "p/q" or "p"                  -- an exact rational
/// Throws std::invalid_argument on malformed text, InvalidInterval when the
/// interval does not isolate exactly one root.
AlgebraicReal parse_algebraic(const std::string& text);

}  // namespace floorlab
