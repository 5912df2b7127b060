#pragma once

#include "latwalk/qlaurent.hpp"

#include <map>
#include <numeric>
#include <vector>

namespace latwalk {

/// Numeric evaluation point Q = e^(2*pi*i*p/q). Half-integer powers use the
/// principal branch Q^(1/2) = e^(i*pi*p/q) consistently.
class RootOfUnity {
  long p_, q_;
  Complex half_; // e^(i*pi*p/q)

public:
  RootOfUnity(long p, long q) : p_(p), q_(q) {
    if (q < 1) throw std::invalid_argument("RootOfUnity: q must be positive");
    if (std::gcd(std::abs(p), q) != 1)
      throw std::invalid_argument("RootOfUnity: p and q must be coprime");
    Real theta = Real::pi() * Real(p) / Real(q);
    half_ = Complex::from_polar_angle(theta);
  }

  long p() const { return p_; }
  long q() const { return q_; }

  /// Q^(d/2) for doubled exponent d.
  Complex qpow(long d) const {
    Real theta = Real::pi() * Real(p_ * d) / Real(q_);
    return Complex::from_polar_angle(theta);
  }

  Complex qhalf() const { return half_; }
};

inline Complex eval_multipoly(const MultiPoly& m, const GenAssign& assign) {
  return Complex(m.eval(assign));
}

/// Substitute the root of unity for Q and rationals for the generators.
inline Complex eval_at_root_of_unity(const QLaurent<MultiPoly>& l, const RootOfUnity& root,
                                     const GenAssign& assign) {
  Complex acc;
  for (const auto& [d, c] : l.terms()) acc += Complex(c.eval(assign)) * root.qpow(d);
  return acc;
}

inline Complex eval_at_root_of_unity(const QLaurent<Rational>& l, const RootOfUnity& root) {
  Complex acc;
  for (const auto& [d, c] : l.terms()) acc += Complex(c) * root.qpow(d);
  return acc;
}

/// Numeric signed-area generating function: doubled area -> coefficient.
using NumericAreaGF = std::map<int, Real>;

/// Recover C_N(A) from trace samples on the half-integer area lattice.
///
/// samples[j] must hold the trace evaluated at Q^(1/2) = e^(i*pi*j/q) for
/// j = 0 .. 2q-1 (a full period in Q^(1/2)-space). The inverse DFT then
/// resolves doubled areas in (-q, q]; the mode q itself is reported at +q.
/// If significant coefficient mass sits in the outer half of that window the
/// input is declared aliased (q too small for the walk length).
inline NumericAreaGF inverse_dft_area(const std::vector<Complex>& samples, long q,
                                      double zero_tol = 1e-9) {
  if (samples.size() != static_cast<std::size_t>(2 * q))
    throw std::invalid_argument("inverse_dft_area: need exactly 2q samples");
  Real tol(zero_tol);
  Real pi = Real::pi();
  NumericAreaGF out;
  Real outer_mass(0L), inner_mass(0L);
  for (long d = -q + 1; d <= q; ++d) {
    Complex acc;
    for (long j = 0; j < 2 * q; ++j) {
      Real theta = -pi * Real(j * d) / Real(q);
      acc += samples[j] * Complex::from_polar_angle(theta);
    }
    acc = Complex(acc.re / Real(2 * q), acc.im / Real(2 * q));
    if (abs(acc.im) > tol)
      throw std::domain_error("inverse_dft_area: non-real coefficient recovered");
    Real mag = abs(acc.re);
    if (2 * std::abs(d) > q)
      outer_mass += mag;
    else
      inner_mass += mag;
    if (mag > tol) out[static_cast<int>(d)] = acc.re;
  }
  if (outer_mass > tol && outer_mass > Real(1e-12) * inner_mass)
    throw std::domain_error(
        "inverse_dft_area: area modes detected beyond q/2; q is too small (aliasing)");
  return out;
}

} // namespace latwalk
