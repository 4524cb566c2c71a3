#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "floorlab/errors.hpp"
#include "floorlab/identity_engine.hpp"
#include "floorlab/real_spec.hpp"
#include "floorlab/torus_lab.hpp"

using namespace floorlab;

namespace {

AlgebraicReal golden() { return construct_characteristic_alpha(1, 1, 1, 1); }
AlgebraicReal silver() { return construct_characteristic_alpha(1, 1, 2, 1); }
AlgebraicReal sqrt2() { return parse_algebraic("root([-2,0,1],1,2)"); }

}  // namespace

TEST_CASE("orbit_point examples") {
  auto pt = orbit_point(Int(1), golden(), 1, 1);
  // ({alpha}, {alpha^2}) = (alpha - 1, alpha^2 - 2), equal coordinates
  CHECK((pt.x - pt.y).is_zero());
  CHECK(pt.x.coords() == std::vector<Rational>{Rational(-1), Rational(1)});

  auto origin = orbit_point(Int(0), golden(), 1, 1);
  CHECK(origin.x.is_zero());
  CHECK(origin.y.is_zero());

  auto sp = orbit_point(Int(1), silver(), 1, 1);
  // on y = 2x: {alpha^2} = 2 {alpha}
  CHECK((sp.y - sp.x * Rational(2)).is_zero());
}

TEST_CASE("region_membership examples") {
  AlgebraicReal g = golden();
  RegionSpec region{power_in_field(g, 1), 1};
  CHECK(region_membership(orbit_point(Int(1), g, 1, 1), region) == 1);

  AlgebraicReal r2 = sqrt2();
  RegionSpec region2{power_in_field(r2, 1), 1};
  CHECK(region_membership(orbit_point(Int(2), r2, 1, 1), region2) == kOutside);

  // (0,0) fails the strict upper bound
  CHECK(region_membership(orbit_point(Int(0), g, 1, 1), region) == kOutside);
}

TEST_CASE("region bands partition the strip") {
  AlgebraicReal s = silver();
  RegionSpec region{FieldElement::generator(s), 2};
  int inside = 0;
  for (Int n = 1; n <= 200; ++n) {
    int band = region_membership(orbit_point(Int(n), s, 1, 1), region);
    CHECK(band != kOutside);
    CHECK(band <= 2);
    ++inside;
  }
  CHECK(inside == 200);
}

TEST_CASE("identity <=> region equivalence") {
  std::mt19937_64 rng(4242);
  std::vector<AlgebraicReal> pool{golden(), silver(), sqrt2(),
                                  AlgebraicReal::from_rational(parse_rational("3/2")),
                                  construct_characteristic_alpha(2, 1, 2, 3)};
  for (int trial = 0; trial < 400; ++trial) {
    const auto& a = pool[rng() % pool.size()];
    unsigned l = 1 + rng() % 2, k = 1 + rng() % 2;
    Int n = Int(static_cast<long>(rng() % 2000)) - 1000;
    if (n == 0) n = 7;
    auto rep = check_identity(IdentityCase::main_variant(a, l, k), n);
    TorusPoint pt = orbit_point(n, a, l, k);
    RegionSpec region{power_in_field(a, k), 1};
    const bool in_band = region_membership(pt, region) == 1;
    CHECK((rep.residual == 0) == in_band);
  }
}

TEST_CASE("r(n) <=> band index for the pair orbit") {
  AlgebraicReal s = silver();
  // beta = alpha^2 = 2 alpha + 1, so beta/alpha = alpha and m = 2.
  RegionSpec region{FieldElement::generator(s), 2};
  for (Int n = 1; n <= 300; ++n) {
    Int r = r_of(n, s, 2);
    int band = region_membership(orbit_point(n, s, 1, 1), region);
    CHECK(Int(band) == r);
  }
}

TEST_CASE("empirical_distribution examples") {
  auto one = empirical_distribution(golden(), 1, 500);
  CHECK(one.counts[0] == 500);
  CHECK(one.frequencies[0] == 1.0);

  auto three = empirical_distribution(golden(), 3, 10000);
  for (double dev : three.deviations) CHECK(std::abs(dev) <= 0.02);

  CHECK_THROWS_AS(empirical_distribution(AlgebraicReal::from_rational(parse_rational("3/2")), 2, 10),
                  RationalAlpha);
}

TEST_CASE("distribution counts conserve and match worker counts") {
  auto a = empirical_distribution(silver(), 2, 5000, 1);
  auto b = empirical_distribution(silver(), 2, 5000, 4);
  CHECK(a.counts == b.counts);
  CHECK(a.counts[0] + a.counts[1] == 5000);
}

TEST_CASE("weyl_sum examples") {
  auto lin = WeylSequence::linear({RealSpec(sqrt2())});
  auto r = weyl_sum(lin, {1}, 10000);
  CHECK(r.magnitude <= 0.01);

  auto rat = WeylSequence::linear({RealSpec(parse_rational("3/2"))});
  auto r2 = weyl_sum(rat, {2}, 500);
  CHECK(r2.magnitude == doctest::Approx(1.0).epsilon(1e-12));

  auto sq = WeylSequence::power(2, {RealSpec(sqrt2())});
  auto r3 = weyl_sum(sq, {1}, 20000);
  CHECK(r3.magnitude <= 0.05);

  CHECK_THROWS_AS(weyl_sum(lin, {0}, 100), ZeroFrequency);
}

TEST_CASE("weyl decay bound for a quadratic irrational") {
  // |sum| <= (1/|sin pi theta|)/N for the two-sided geometric sum.
  const double C = 1.0 / std::abs(std::sin(M_PI * std::sqrt(2.0)));
  for (std::uint64_t N : {1000ULL, 10000ULL}) {
    auto r = weyl_sum(WeylSequence::linear({RealSpec(sqrt2())}), {1}, N);
    CHECK(r.magnitude <= C / static_cast<double>(N));
  }
}

TEST_CASE("two-dimensional weyl frequencies") {
  // k = (1, -1) against theta = (sqrt2, sqrt2) collapses to the zero phase.
  auto seq = WeylSequence::linear({RealSpec(sqrt2()), RealSpec(sqrt2())});
  auto r = weyl_sum(seq, {1, -1}, 300);
  CHECK(r.magnitude == doctest::Approx(1.0).epsilon(1e-12));
  auto r2 = weyl_sum(seq, {1, 1}, 2000);
  CHECK(r2.magnitude <= 0.05);
}

TEST_CASE("detect_line_support examples") {
  auto g = detect_line_support(golden(), 1, 1, Int(50), Int(50));
  REQUIRE(g.fit.has_value());
  CHECK(g.fit->slope == 1);
  CHECK(g.fit->offset == 1);
  REQUIRE(g.fit->intercepts.size() == 1);
  CHECK(g.fit->intercepts[0] == 0);

  auto s = detect_line_support(silver(), 1, 1, Int(50), Int(50));
  REQUIRE(s.fit.has_value());
  CHECK(s.fit->slope == 2);
  REQUIRE(s.fit->intercepts.size() == 2);
  CHECK(s.fit->intercepts[0] == -1);
  CHECK(s.fit->intercepts[1] == 0);

  AlgebraicReal cbrt2 = parse_algebraic("root([-2,0,0,1],1,2)");
  auto c = detect_line_support(cbrt2, 1, 1, Int(50), Int(50));
  CHECK_FALSE(c.fit.has_value());
}

TEST_CASE("line support sampled points satisfy the fit exactly") {
  for (const auto& a : {golden(), silver()}) {
    auto fit = detect_line_support(a, 1, 1, Int(50), Int(50));
    REQUIRE(fit.fit.has_value());
    for (Int n = 1; n <= 100; ++n) {
      TorusPoint pt = orbit_point(n, a, 1, 1);
      bool on_some_line = false;
      for (const auto& t : fit.fit->intercepts) {
        FieldElement residual = pt.y - pt.x * fit.fit->slope - t;
        if (residual.is_zero()) {
          on_some_line = true;
          break;
        }
      }
      CHECK(on_some_line);
    }
  }
}

TEST_CASE("exact line support for the m = 1 families") {
  // alpha^(l+k) - alpha^l = M makes {n alpha^l} = {n alpha^(l+k)} exactly.
  for (unsigned l = 1; l <= 2; ++l)
    for (unsigned k = 1; k <= 2; ++k)
      for (Int M = 1; pow_int(M, k) < pow_int(Int(2), l); ++M) {
        AlgebraicReal a = construct_characteristic_alpha(l, k, 1, M);
        for (Int n : {Int(1), Int(17), Int(-23)}) {
          TorusPoint pt = orbit_point(n, a, l, k);
          CHECK((pt.y - pt.x).is_zero());
        }
      }
}

TEST_CASE("rational alpha gives horizontal line support") {
  AlgebraicReal rat = AlgebraicReal::from_rational(parse_rational("3/2"));
  auto r = detect_line_support(rat, 1, 1, Int(50), Int(50));
  REQUIRE(r.fit.has_value());
  CHECK(r.fit->slope == 0);
  CHECK(r.fit->offset == parse_rational("9/4"));
  CHECK(r.fit->intercepts.size() == 4);  // {0, 1/4, 1/2, 3/4}
}

TEST_CASE("polynomial_orbit examples") {
  AlgebraicReal rat = AlgebraicReal::from_rational(parse_rational("3/2"));
  auto pts = polynomial_orbit(rat, 1, 1, IntPolynomial({Int(1), Int(4)}), Int(1), Int(1));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].n == 5);
  CHECK(*pts[0].x.rational_value() == parse_rational("1/2"));
  CHECK(*pts[0].y.rational_value() == parse_rational("1/4"));

  // P = X reproduces the plain orbit
  AlgebraicReal g = golden();
  auto id = polynomial_orbit(g, 1, 1, IntPolynomial({Int(0), Int(1)}), Int(1), Int(5));
  for (const auto& pt : id) {
    TorusPoint direct = orbit_point(pt.n, g, 1, 1);
    CHECK((pt.x - direct.x).is_zero());
    CHECK((pt.y - direct.y).is_zero());
  }

  // P = X^2 with alpha = sqrt2: at n = 3, y = {9*2} = 0 exactly
  auto sq = polynomial_orbit(sqrt2(), 1, 1, IntPolynomial({Int(0), Int(0), Int(1)}), Int(3), Int(3));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].n == 9);
  CHECK(sq[0].y.is_zero());

  CHECK_THROWS_AS(polynomial_orbit(golden(), 1, 1, IntPolynomial({Int(3)}), Int(0), Int(1)),
                  ConstantPolynomial);
}

TEST_CASE("orbit_dump examples and csv shape") {
  AlgebraicReal g = golden();
  RegionSpec region{FieldElement::generator(g), 1};
  auto recs = orbit_dump(g, 1, 1, Int(1), Int(250), &region);
  CHECK(recs.size() == 250);
  for (const auto& rec : recs) {
    CHECK(rec.band == 1);
    CHECK(rec.x == rec.y);  // the golden orbit sits on the diagonal
  }

  std::ostringstream os;
  write_orbit_csv(os, recs);
  std::string text = os.str();
  CHECK(text.rfind("n,x,y,band\n", 0) == 0);
}

TEST_CASE("foreign-coefficient membership: silver orbit vs golden band") {
  AlgebraicReal g = golden();
  AlgebraicReal s = silver();
  std::vector<TorusPoint> pts;
  for (Int n = 1; n <= 100; ++n) pts.push_back(orbit_point(n, s, 1, 1));
  auto recs = dump_records(pts, g, 1);
  int outside = 0;
  for (const auto& rec : recs)
    if (rec.band == kOutside) ++outside;
  CHECK(outside > 0);
  CHECK(outside < 100);

  // the (0,0) corner fails the strict upper bound here too
  TorusPoint origin = orbit_point(Int(0), s, 1, 1);
  CHECK(region_membership(origin, g, 1) == kOutside);
}

TEST_CASE("orbit coordinates stay in [0,1), decided exactly") {
  std::mt19937_64 rng(555);
  std::vector<AlgebraicReal> pool{golden(), silver(), sqrt2(),
                                  AlgebraicReal::from_rational(parse_rational("3/2"))};
  for (int trial = 0; trial < 100; ++trial) {
    const auto& a = pool[rng() % pool.size()];
    Int n = Int(static_cast<long>(rng() % 4000)) - 2000;
    TorusPoint pt = orbit_point(n, a, 1 + rng() % 2, 1 + rng() % 2);
    for (const auto* c : {&pt.x, &pt.y}) {
      CHECK(c->sign() >= 0);
      CHECK(sign_of(*c - Rational(1)) < 0);
    }
  }
}

TEST_CASE("weyl magnitude stays within [0,1]") {
  for (long long k : {1LL, 3LL, -2LL}) {
    auto r = weyl_sum(WeylSequence::linear({RealSpec(golden())}), {k}, 500);
    CHECK(r.magnitude >= 0.0);
    CHECK(r.magnitude <= 1.0 + 1e-12);
  }
}

TEST_CASE("band counts conserve across a scan") {
  AlgebraicReal s = silver();
  RegionSpec region{FieldElement::generator(s), 2};
  std::uint64_t in_band = 0, outside = 0, total = 0;
  for (Int n = 1; n <= 500; ++n) {
    ++total;
    int band = region_membership(orbit_point(n, s, 1, 1), region);
    if (band == kOutside)
      ++outside;
    else
      ++in_band;
  }
  CHECK(in_band + outside == total);
  CHECK(outside == 0);  // condition-true family
}
