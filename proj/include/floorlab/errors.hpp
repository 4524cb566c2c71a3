#pragma once

#include <stdexcept>
#include <string>

namespace floorlab {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("zero polynomial has no roots to isolate") {}
};

class MOutOfRange : public Error {
 public:
  explicit MOutOfRange(const std::string& what) : Error(what) {}
};

class NonUniqueRoot : public Error {
 public:
  explicit NonUniqueRoot(const std::string& what) : Error(what) {}
};

class InconsistentPair : public Error {
 public:
  explicit InconsistentPair(const std::string& what) : Error(what) {}
};

class InvalidInterval : public Error {
 public:
  explicit InvalidInterval(const std::string& what) : Error(what) {}
};

class MixedBase : public Error {
 public:
  MixedBase() : Error("field elements over different base numbers cannot be combined") {}
};

class BetaMissing : public Error {
 public:
  BetaMissing() : Error("pair variant requires beta") {}
};

class BadDelta : public Error {
 public:
  explicit BadDelta(const std::string& what) : Error(what) {}
};

class RationalAlpha : public Error {
 public:
  explicit RationalAlpha(const std::string& what) : Error(what) {}
};

class ZeroN : public Error {
 public:
  ZeroN() : Error("n must be nonzero") {}
};

class AlphaOutOfHypothesis : public Error {
 public:
  explicit AlphaOutOfHypothesis(const std::string& what) : Error(what) {}
};

class ConstantPolynomial : public Error {
 public:
  ConstantPolynomial() : Error("polynomial orbit requires a non-constant polynomial") {}
};

class ZeroFrequency : public Error {
 public:
  ZeroFrequency() : Error("frequency vector must be nonzero") {}
};

class UnknownFigure : public Error {
 public:
  explicit UnknownFigure(const std::string& name) : Error("unknown figure: " + name) {}
};

}  // namespace floorlab
