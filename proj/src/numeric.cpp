#include "floorlab/numeric.hpp"

#include <stdexcept>

namespace floorlab {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Int floor_rational(const Rational& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ceil_rational(const Rational& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational pow_rational(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;  // powers of a canonical rational stay canonical
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string rational_to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(text);
      return Rational(n);
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

std::string decimal_string(const Rational& value, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (value == 0) return "0";
  const bool negative = value < 0;
  Rational a = negative ? Rational(-value) : value;

  // Scale so that the first significant digit sits in the integer part,
  // then round the remaining digits to nearest.
  int exp10 = 0;
  while (a < 1) {
    a *= 10;
    --exp10;
  }
  while (a >= 10) {
    a /= 10;
    ++exp10;
  }
  // a in [1, 10): produce significant_digits digits of it.
  Rational scaled = a * pow_rational(Rational(10), significant_digits - 1);
  Int digits = floor_rational(scaled + Rational(1, 2));
  std::string ds = digits.get_str();
  if (static_cast<int>(ds.size()) > significant_digits) {
    // 9.99... rounded up to 10.0...
    ++exp10;
    ds.pop_back();
  }

  std::string out;
  if (exp10 >= 0) {
    if (exp10 + 1 >= static_cast<int>(ds.size())) {
      out = ds + std::string(exp10 + 1 - ds.size(), '0');
    } else {
      out = ds.substr(0, exp10 + 1) + "." + ds.substr(exp10 + 1);
    }
  } else {
    out = "0." + std::string(-exp10 - 1, '0') + ds;
  }
  // Trim trailing zeros of a fractional part (keep at least one digit).
  if (out.find('.') != std::string::npos) {
    auto last = out.find_last_not_of('0');
    if (out[last] == '.') --last;
    out.erase(last + 1);
  }
  return negative ? "-" + out : out;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace floorlab
