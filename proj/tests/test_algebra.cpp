#include "doctest.h"

#include "latwalk/eval.hpp"
#include "latwalk/multipoly.hpp"
#include "latwalk/qlaurent.hpp"
#include "latwalk/real.hpp"

#include <random>

using namespace latwalk;

namespace {

std::mt19937 rng(20240817);

Rational random_rational() {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

MultiPoly random_poly(int max_terms = 4, int max_deg = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms), deg(0, max_deg), pick(0, 5);
  MultiPoly p;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    ExpVec e = exp_zero();
    e[pick(rng)] = static_cast<int16_t>(deg(rng));
    p += MultiPoly::monomial(e, random_rational());
  }
  return p;
}

QLaurent<Rational> random_qlaurent() {
  std::uniform_int_distribution<int> nterms(1, 5), dexp(-6, 6);
  QLaurent<Rational> l;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) l.add_term(dexp(rng), random_rational());
  return l;
}

} // namespace

TEST_CASE("rational parsing keeps canonical form") {
  Rational q = rational_from_string("6/8");
  CHECK(q == Rational(3, 4));
  CHECK(rational_to_string(q) == "3/4");
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("multipoly arithmetic is commutative and associative") {
  for (int trial = 0; trial < 30; ++trial) {
    MultiPoly p = random_poly(), q = random_poly(), r = random_poly();
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("qlaurent arithmetic is commutative and associative") {
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_qlaurent(), q = random_qlaurent(), r = random_qlaurent();
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("multipoly monomial inverse and division") {
  MultiPoly m = MultiPoly::generator(Gen::B, 2);
  m.scale(Rational(3, 2));
  MultiPoly inv = m.inverse();
  CHECK(m * inv == MultiPoly(1));
  MultiPoly p = random_poly();
  CHECK(p.div_exact(m) * m == p);
  MultiPoly two_terms = MultiPoly::generator(Gen::A) + MultiPoly(1);
  CHECK_THROWS_AS(two_terms.inverse(), std::domain_error);
}

TEST_CASE("eval_at_root_of_unity basics") {
  // Q^(1/2) + Q^(-1/2) at p=1, q=2 is 2cos(pi/2) = 0
  QLaurent<MultiPoly> l;
  l.add_term(1, MultiPoly(1));
  l.add_term(-1, MultiPoly(1));
  Complex v = eval_at_root_of_unity(l, RootOfUnity(1, 2), assign_all_ones());
  CHECK(abs(v).to_double() == doctest::Approx(0.0).epsilon(1e-12));

  // Q + Q^(-1) at p=1, q=3 is 2cos(2pi/3) = -1
  QLaurent<MultiPoly> l2;
  l2.add_term(2, MultiPoly(1));
  l2.add_term(-2, MultiPoly(1));
  Complex v2 = eval_at_root_of_unity(l2, RootOfUnity(1, 3), assign_all_ones());
  CHECK(v2.re.to_double() == doctest::Approx(-1.0));
  CHECK(v2.im.to_double() == doctest::Approx(0.0));
}

TEST_CASE("eval_at_root_of_unity rejects unassigned generators") {
  QLaurent<MultiPoly> l;
  l.add_term(0, MultiPoly::generator(Gen::M1));
  GenAssign none{};
  CHECK_THROWS_AS(eval_at_root_of_unity(l, RootOfUnity(1, 3), none), std::invalid_argument);
}

TEST_CASE("eval involution matches conjugation for real assignments") {
  for (int trial = 0; trial < 10; ++trial) {
    QLaurent<Rational> l = random_qlaurent();
    RootOfUnity root(1, 7);
    Complex direct = eval_at_root_of_unity(l, root);
    Complex inverted = eval_at_root_of_unity(l.invert_q(), root);
    CHECK(abs(direct - conj(inverted)).to_double() == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("QMod canonical equality and lift") {
  // 5*1 and (constant 4 - Q - Q^2 - Q^-1 - Q^-2) agree in the quotient at q=5
  QLaurent<Rational> five(Rational(5));
  QLaurent<Rational> spread(Rational(4));
  spread.add_term(2, Rational(-1));
  spread.add_term(4, Rational(-1));
  spread.add_term(-2, Rational(-1));
  spread.add_term(-4, Rational(-1));
  auto a = QMod<Rational>::from_laurent(5, five);
  auto b = QMod<Rational>::from_laurent(5, spread);
  CHECK(a == b);

  // Lifting 'spread' with a window containing only the constant recovers 5.
  QLaurent<Rational> lifted = b.to_laurent(0);
  CHECK(lifted == five);
}

TEST_CASE("QMod multiplication respects exponent wrap") {
  auto q3 = QMod<Rational>::from_laurent(3, QLaurent<Rational>::qpow(4)); // Q^2
  auto q3b = QMod<Rational>::from_laurent(3, QLaurent<Rational>::qpow(2)); // Q^1
  auto prod = q3 * q3b; // Q^3 = 1 at q=3
  CHECK(prod == QMod<Rational>::unit(3));
}

TEST_CASE("inverse_dft_area recovers small spectra") {
  // Constant trace 4 at q=5 (square N=2): C(0) = 4.
  long q = 5;
  std::vector<Complex> samples(2 * q, Complex(Real(4.0)));
  auto gf = inverse_dft_area(samples, q);
  REQUIRE(gf.size() == 1);
  CHECK(gf.at(0).to_double() == doctest::Approx(4.0));

  // 6(Q^(1/2) + Q^(-1/2)) sampled on the half lattice: C(1) = C(-1) = 6.
  std::vector<Complex> tri(2 * q);
  Real pi = Real::pi();
  for (long j = 0; j < 2 * q; ++j) {
    Real theta = pi * Real(j) / Real(q);
    Complex w = Complex::from_polar_angle(theta);
    Complex winv = Complex::from_polar_angle(-theta);
    tri[j] = Real(6.0) * (w + winv);
  }
  auto gf2 = inverse_dft_area(tri, q);
  REQUIRE(gf2.size() == 2);
  CHECK(gf2.at(1).to_double() == doctest::Approx(6.0));
  CHECK(gf2.at(-1).to_double() == doctest::Approx(6.0));

  // All-zero traces give the empty generating function.
  std::vector<Complex> zero(2 * q, Complex());
  CHECK(inverse_dft_area(zero, q).empty());
}

TEST_CASE("inverse_dft_area reports aliasing") {
  // Content at |2A| = 4 > q/2 for q = 5 must be flagged.
  long q = 5;
  std::vector<Complex> samples(2 * q);
  Real pi = Real::pi();
  for (long j = 0; j < 2 * q; ++j)
    samples[j] = Complex::from_polar_angle(pi * Real(4 * j) / Real(q));
  CHECK_THROWS_AS(inverse_dft_area(samples, q), std::domain_error);
}

TEST_CASE("complex sqrt and precision control") {
  CHECK(csqrt(Complex(Real(-4.0), Real(0.0001))).im.to_double() == doctest::Approx(2.0).epsilon(1e-3));
  CHECK_THROWS_AS(csqrt(Complex(Real(-1.0))), std::domain_error);
  {
    PrecisionGuard guard(160);
    Real x(2L);
    Real s = sqrt(x);
    // 160-bit sqrt(2) squared returns to 2 much tighter than double epsilon
    CHECK(abs(s * s - x) < Real(1e-40));
  }
  CHECK(default_precision_bits() == 53);
}
