#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "floorlab/algebraic_real.hpp"
#include "floorlab/errors.hpp"
#include "floorlab/field_element.hpp"
#include "floorlab/int_polynomial.hpp"
#include "oracle.hpp"

using namespace floorlab;

namespace {

IntPolynomial poly(std::initializer_list<long> coeffs) {
  std::vector<Int> c;
  for (long x : coeffs) c.emplace_back(x);
  return IntPolynomial(std::move(c));
}

bool interval_within(const Interval& iv, double lo, double hi) {
  return to_double(iv.lo) >= lo && to_double(iv.hi) <= hi;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(floor_rational(parse_rational("-7/2")) == -4);
  CHECK(floor_rational(parse_rational("7/2")) == 3);
  CHECK(rational_to_string(make_rational(Int(4), Int(-6))) == "-2/3");
  CHECK(decimal_string(parse_rational("1/3"), 5) == "0.33333");
  CHECK(decimal_string(parse_rational("-1999/1000"), 3) == "-2");
  CHECK(decimal_string(Rational(0), 8) == "0");
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("polynomial basics") {
  IntPolynomial p = poly({-1, -1, 1});  // x^2 - x - 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rational(2)) == 1);
  CHECK(p.derivative() == poly({-1, 2}));
  CHECK(poly({2, 4, 6}).primitive_part() == poly({1, 2, 3}));
  // (x-1)^2 (x+2) = x^3 - 3x + 2 has squarefree part (x-1)(x+2)
  CHECK(poly({2, -3, 0, 1}).squarefree_part() == poly({-2, 1, 1}));
  auto roots = poly({2, -3, 0, 1}).rational_roots();
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == -2);
  CHECK(roots[1] == 1);
}

TEST_CASE("isolate_positive_roots: golden ratio") {
  auto roots = isolate_positive_roots(poly({-1, -1, 1}));
  REQUIRE(roots.size() == 1);
  const auto& a = roots[0];
  CHECK(a.degree() == 2);
  CHECK_FALSE(a.is_rational());
  // frozen from the 220-digit bisection oracle
  auto iv = a.refine(parse_rational("1/10000000000000"));
  CHECK(interval_within(iv, 1.6180339887, 1.6180339888));
  oracle::Real root = oracle::value_of(a);
  CHECK(root > oracle::Real("1.61803398874989484820458683436563"));
  CHECK(root < oracle::Real("1.61803398874989484820458683436564"));
}

TEST_CASE("isolate_positive_roots: perfect square demotes to a rational") {
  auto roots = isolate_positive_roots(poly({-4, 0, 1}));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].is_rational());
  CHECK(roots[0].rational_value() == 2);
  CHECK(roots[0].degree() == 1);
}

TEST_CASE("isolate_positive_roots: x^3 - x^2 - 1") {
  auto roots = isolate_positive_roots(poly({-1, 0, -1, 1}));
  REQUIRE(roots.size() == 1);
  auto iv = roots[0].refine(parse_rational("1/100000000000"));
  CHECK(interval_within(iv, 1.4655712318, 1.4655712320));
}

TEST_CASE("isolate_positive_roots: several roots sorted") {
  // (x^2-2)(x^2-3)(x-1): positive roots 1, sqrt(2), sqrt(3)
  IntPolynomial p = poly({-2, 0, 1});
  IntPolynomial q = poly({-3, 0, 1});
  IntPolynomial lin = poly({-1, 1});
  // multiply out with the field-free helper: 6 terms is fine by hand
  // (x^2-2)(x^2-3) = x^4 -5x^2 + 6
  IntPolynomial quart = poly({6, 0, -5, 0, 1});
  std::vector<Int> prod(quart.coeffs().size() + 1, Int(0));
  for (size_t i = 0; i < quart.coeffs().size(); ++i) {
    prod[i] += quart.coeffs()[i] * -1;
    prod[i + 1] += quart.coeffs()[i];
  }
  auto roots = isolate_positive_roots(IntPolynomial(prod));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].is_rational());
  CHECK(roots[0].rational_value() == 1);
  CHECK(to_double(roots[1].refine(parse_rational("1/100000")).midpoint()) ==
        doctest::Approx(1.41421356).epsilon(1e-5));
  CHECK(to_double(roots[2].refine(parse_rational("1/100000")).midpoint()) ==
        doctest::Approx(1.73205081).epsilon(1e-5));
  CHECK_THROWS_AS(isolate_positive_roots(IntPolynomial()), ZeroPolynomial);
}

TEST_CASE("construct_characteristic_alpha examples") {
  AlgebraicReal golden = construct_characteristic_alpha(1, 1, 1, 1);
  CHECK(golden.defining_poly() == poly({-1, -1, 1}));

  AlgebraicReal silver = construct_characteristic_alpha(1, 1, 2, 1);
  CHECK(silver.defining_poly() == poly({-1, -2, 1}));
  CHECK(to_double(silver.refine(parse_rational("1/10000000000")).midpoint()) ==
        doctest::Approx(2.4142135624).epsilon(1e-9));

  CHECK_THROWS_AS(construct_characteristic_alpha(2, 1, 1, 4), MOutOfRange);
  CHECK_THROWS_AS(construct_characteristic_alpha(1, 1, 1, 0), MOutOfRange);
}

TEST_CASE("construct_characteristic_alpha certification sweep") {
  // sign_of(alpha^(l+k) - m alpha^l - M) = 0 and m < alpha^k < m+1, exactly,
  // plus irrationality of alpha^l and alpha^k for every admissible family.
  for (unsigned l = 1; l <= 3; ++l) {
    for (unsigned k = 1; k <= 3; ++k) {
      for (unsigned m = 1; m <= 3; ++m) {
        for (Int M = 1; pow_int(M, k) < pow_int(Int(m) + 1, l); ++M) {
          AlgebraicReal a = construct_characteristic_alpha(l, k, m, M);
          FieldElement al = power_in_field(a, l);
          FieldElement ak = power_in_field(a, k);
          CHECK((ak * al - al * Rational(m) - Rational(M)).is_zero());
          CHECK(sign_of(ak - Rational(m)) > 0);
          CHECK(sign_of(ak - Rational(m + 1)) < 0);
          CHECK_FALSE(rationality_of(al).has_value());
          CHECK_FALSE(rationality_of(ak).has_value());
        }
      }
    }
  }
}

TEST_CASE("power_in_field examples") {
  AlgebraicReal golden = construct_characteristic_alpha(1, 1, 1, 1);
  FieldElement g2 = power_in_field(golden, 2);
  CHECK(g2.coords() == std::vector<Rational>{Rational(1), Rational(1)});

  AlgebraicReal silver = construct_characteristic_alpha(1, 1, 2, 1);
  FieldElement s2 = power_in_field(silver, 2);
  CHECK(s2.coords() == std::vector<Rational>{Rational(1), Rational(2)});

  FieldElement s1 = power_in_field(silver, 1);
  CHECK(s1.coords() == std::vector<Rational>{Rational(0), Rational(1)});
}

TEST_CASE("rationality_of examples") {
  AlgebraicReal golden = construct_characteristic_alpha(1, 1, 1, 1);
  FieldElement g = FieldElement::generator(golden);
  auto r = rationality_of(g.pow(2) - g);
  REQUIRE(r.has_value());
  CHECK(*r == 1);
  CHECK_FALSE(rationality_of(g).has_value());

  AlgebraicReal silver = construct_characteristic_alpha(1, 1, 2, 1);
  FieldElement s = FieldElement::generator(silver);
  auto r2 = rationality_of(s.pow(2) - s * Rational(2));
  REQUIRE(r2.has_value());
  CHECK(*r2 == 1);
}

TEST_CASE("refine examples") {
  AlgebraicReal golden = construct_characteristic_alpha(1, 1, 1, 1);
  auto iv = golden.refine(parse_rational("1/1000"));
  CHECK(iv.width() <= parse_rational("1/1000"));
  CHECK(interval_within(iv, 1.617, 1.619));

  AlgebraicReal rat = AlgebraicReal::from_rational(parse_rational("3/2"));
  auto div = rat.refine(parse_rational("1/1000000"));
  CHECK(div.lo == div.hi);
  CHECK(div.lo == parse_rational("3/2"));

  AlgebraicReal c = isolate_positive_roots(poly({-1, 0, -1, 1}))[0];
  auto civ = c.refine(parse_rational("1/1000000"));
  CHECK(interval_within(civ, 1.465570, 1.465572));
}

TEST_CASE("sign_of examples") {
  AlgebraicReal golden = construct_characteristic_alpha(1, 1, 1, 1);
  FieldElement g = FieldElement::generator(golden);
  CHECK(sign_of(g.pow(2) - g - Rational(1)) == 0);
  CHECK(sign_of(g - Rational(1)) == 1);
  CHECK(sign_of(g - Rational(2)) == -1);
}

TEST_CASE("field arithmetic: inverse and division") {
  AlgebraicReal silver = construct_characteristic_alpha(1, 1, 2, 1);
  FieldElement s = FieldElement::generator(silver);
  FieldElement inv = s.inverse();
  CHECK((s * inv - Rational(1)).is_zero());
  // beta / alpha with beta = alpha^2 is alpha again
  CHECK(((s.pow(2) / s) - s).is_zero());
  CHECK_THROWS_AS(FieldElement::constant(silver, Rational(0)).inverse(), std::domain_error);
}

TEST_CASE("high-degree coordinate vectors reduce on construction") {
  AlgebraicReal g = construct_characteristic_alpha(1, 1, 1, 1);
  // alpha^5 handed in as a raw degree-5 coordinate vector
  std::vector<Rational> raw(6, Rational(0));
  raw[5] = 1;
  FieldElement a5(g, std::move(raw));
  CHECK((a5 - power_in_field(g, 5)).is_zero());
  CHECK(a5.coords() == std::vector<Rational>{Rational(3), Rational(5)});  // 3 + 5a
}

TEST_CASE("mixed bases are rejected") {
  AlgebraicReal golden = construct_characteristic_alpha(1, 1, 1, 1);
  AlgebraicReal silver = construct_characteristic_alpha(1, 1, 2, 1);
  CHECK_THROWS_AS(FieldElement::generator(golden) + FieldElement::generator(silver), MixedBase);
}

TEST_CASE("validated construction and Sturm counts") {
  CHECK_THROWS_AS(AlgebraicReal(poly({-2, 0, 1}), Rational(-2), Rational(2)), InvalidInterval);
  CHECK_THROWS_AS(AlgebraicReal(poly({-2, 0, 1}), Rational(2), Rational(3)), InvalidInterval);
  AlgebraicReal r2(poly({-2, 0, 1}), Rational(1), Rational(2));
  CHECK(r2.degree() == 2);
  // root certification: the stored interval keeps Sturm count 1
  CHECK(sturm_count_roots(r2.defining_poly(), r2.interval().lo, r2.interval().hi) == 1);
  // an interval pinned on a rational root demotes
  AlgebraicReal two(poly({-4, 0, 1}), Rational(2), Rational(2));
  CHECK(two.is_rational());
}

TEST_CASE("field arithmetic soundness vs decimal oracle") {
  // power_in_field coordinates, evaluated at the oracle's 220-digit
  // approximation of alpha, match the oracle's power to 1e-80.
  std::mt19937_64 rng(20240817);
  std::vector<AlgebraicReal> pool;
  for (unsigned l = 1; l <= 3; ++l)
    for (unsigned k = 1; k <= 2; ++k)
      for (unsigned m = 1; m <= 3; ++m)
        pool.push_back(construct_characteristic_alpha(l, k, m, 1));
  pool.push_back(isolate_positive_roots(poly({-1, 0, -1, 1}))[0]);

  const oracle::Real tol("1e-80");
  for (int trial = 0; trial < 60; ++trial) {
    const auto& a = pool[rng() % pool.size()];
    const unsigned e = static_cast<unsigned>(rng() % 9);
    oracle::Real av = oracle::value_of(a);
    FieldElement pw = power_in_field(a, e);
    oracle::Real lhs = 0;
    const auto& coords = pw.coords();
    for (auto it = coords.rbegin(); it != coords.rend(); ++it)
      lhs = lhs * av + oracle::to_real(*it);
    oracle::Real rhs = 1;
    for (unsigned i = 0; i < e; ++i) rhs *= av;
    CHECK(abs(lhs - rhs) < tol);
  }
}

TEST_CASE("canonical textual form round-trips") {
  // Parsing requires the real_spec module; exercised here through the same
  // grammar the CLI uses.
  AlgebraicReal g = construct_characteristic_alpha(1, 1, 1, 1);
  g.refine(make_rational(1, Int(1) << 200));  // display must not leak the cache
  std::string text = g.to_string();
  CHECK(text.size() < 60);
  AlgebraicReal back(IntPolynomial({Int(-1), Int(-1), Int(1)}), Rational(1), Rational(2));
  CHECK(back.to_string() == AlgebraicReal(back.defining_poly(), back.interval().lo,
                                          back.interval().hi)
                                .to_string());
  CHECK(AlgebraicReal::from_rational(parse_rational("-7/3")).to_string() == "-7/3");
}

TEST_CASE("refine narrows idempotently") {
  AlgebraicReal g = construct_characteristic_alpha(1, 1, 1, 1);
  Rational w = parse_rational("1/4096");
  Interval a = g.refine(w);
  Interval b = g.refine(w);
  CHECK(a.lo == b.lo);
  CHECK(a.hi == b.hi);
  CHECK(a.width() <= w);
}

TEST_CASE("lemma_samedenom_check examples") {
  auto rep = lemma_samedenom_check(parse_rational("3/2"), parse_rational("9/4"), 1, 2);
  CHECK(rep.gcd == 2);
  CHECK(rep.verdict);

  auto rep2 = lemma_samedenom_check(Rational(2), Rational(8), 1, 3);
  CHECK(rep2.gcd == 1);
  CHECK(rep2.verdict);  // q = q' = 1

  CHECK_THROWS_AS(lemma_samedenom_check(parse_rational("3/2"), parse_rational("7/4"), 1, 2),
                  InconsistentPair);
}

TEST_CASE("lemma_samedenom_check property over random consistent pairs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    Int p = Int(static_cast<long>(rng() % 50 + 1));
    Int q = Int(static_cast<long>(rng() % 50 + 1));
    unsigned l = 1 + rng() % 4, k = 1 + rng() % 4;
    Rational alpha = make_rational(p, q);
    auto rep = lemma_samedenom_check(pow_rational(alpha, l), pow_rational(alpha, k), l, k);
    CHECK(rep.verdict);
  }
}
