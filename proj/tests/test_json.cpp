#include "doctest.h"

#include "latwalk/json_io.hpp"

using namespace latwalk;

TEST_CASE("multipoly json round trip") {
  MultiPoly p = MultiPoly::generator(Gen::A) * MultiPoly::generator(Gen::Bp) +
                MultiPoly::generator(Gen::M3, -2);
  p.scale(Rational(7, 3));
  Json j = to_json(p);
  CHECK(multipoly_from_json(j) == p);
  // canonical order: serializing twice gives identical text
  CHECK(Json(to_json(p)).dump() == j.dump());
}

TEST_CASE("area gf json round trip") {
  AreaGF gf = closed_gf(Lattice::Triangular, 4);
  Json j = to_json(gf);
  AreaGF back = areagf_from_json(j);
  CHECK(back == gf);
}

TEST_CASE("qlaurent json round trip") {
  auto l = trace_symbolic_laurent(Lattice::Triangular, 5);
  Json j = to_json(l);
  CHECK(qlaurent_from_json(j) == l);
}

TEST_CASE("symbolic period json round trip") {
  CurveParams params;
  params.geometry = Geometry::B3;
  params.order = 3;
  params.symbolic = true;
  auto t = quantum_a_period_symbolic(params);
  Json j = to_json(t);
  auto back = period_sym_from_json(j);
  CHECK(back.coeffs == t.coeffs);
}

TEST_CASE("numeric period json round trip is exact via hex floats") {
  PrecisionGuard guard(96);
  CurveParams params;
  params.geometry = Geometry::F0;
  params.order = 4;
  params.symbolic = false;
  params.p = 1;
  params.q = 7;
  params.r = Rational(3, 2);
  auto t = quantum_a_period_numeric(params);
  Json j = to_json(t);
  auto back = period_num_from_json(j);
  for (int n = 0; n <= 4; ++n) {
    CHECK(back.coeffs[n].re == t.coeffs[n].re);
    CHECK(back.coeffs[n].im == t.coeffs[n].im);
  }
}
