#pragma once

#include "latwalk/exclusion.hpp"
#include "latwalk/series.hpp"

#include <optional>
#include <vector>

namespace latwalk {

enum class Geometry { B3, F0 };

inline const char* geometry_name(Geometry g) { return g == Geometry::B3 ? "B3" : "F0"; }

/// Parameters for the quantized mirror curve computations. Symbolic mode
/// keeps the moduli (m1, m2, m3 or R) and Q as formal generators; numeric
/// mode evaluates at rational moduli and Q = e^(2*pi*i*p/q) (q = 0 means
/// the classical point Q = 1).
struct CurveParams {
  Geometry geometry = Geometry::B3;
  int order = 4;
  bool symbolic = true;
  long p = 1, q = 0;
  Rational m1 = 0, m2 = 0, m3 = 0;
  Rational r = 1;
  int xwindow = 0; // 0: auto (order + 2)

  int window() const { return xwindow > 0 ? xwindow : order + 2; }
};

/// t(z) = -log z + sum_{n>=2} coeff[n] z^n.
template <class C>
struct PeriodSeries {
  bool leading_neg_log = true;
  ZSeries<C> coeffs;

  int order() const { return coeffs.order(); }
};

using PeriodSeriesSym = PeriodSeries<QLaurent<MultiPoly>>;
using PeriodSeriesNum = PeriodSeries<Complex>;

/// Solved V(X) = v_{-1}(X)/z + v_0(X) + v_1(X) z + ... together with the
/// z-expansion of 1/V(QX) and the achieved back-substitution residual.
template <class C>
struct VSeriesResult {
  std::vector<XSeries<C>> v; // v[i] holds v_{i-1}
  std::vector<XSeries<C>> y; // y[n] = [z^n] 1/V(QX); y[0] = 0
  int wmin = 0, wmax = 0;
};

VSeriesResult<QLaurent<MultiPoly>> solve_v_series_symbolic(const CurveParams& params);
VSeriesResult<Complex> solve_v_series_numeric(const CurveParams& params);

PeriodSeriesSym quantum_a_period_symbolic(const CurveParams& params);
PeriodSeriesNum quantum_a_period_numeric(const CurveParams& params);

/// -log z - sum z^N/N Tr H^N with the geometry's amplitude map; the cluster
/// route is cross-checked against the walk recurrence internally.
PeriodSeriesSym rhs_from_walks_symbolic(const CurveParams& params);
PeriodSeriesNum rhs_from_walks_numeric(const CurveParams& params);

/// Classical A-period (Q -> 1): -log z - sum z^N/N [x^0 y^0] W(x,y)^N with
/// W the geometry's Newton polynomial; exact in the moduli.
PeriodSeries<MultiPoly> classical_period(const CurveParams& params);

struct ConjectureReport {
  Geometry geometry;
  int order;
  bool symbolic;
  bool pass;
  double tolerance;                  // numeric mode
  std::vector<double> max_diff;      // per order 0..order (numeric)
  std::vector<bool> exact_zero;      // per order 0..order (symbolic)
};

ConjectureReport verify_conjecture(const CurveParams& params, double tolerance = 1e-9);

// ---------------------------------------------------------------------------
// Strong-weak duality.
// ---------------------------------------------------------------------------

struct DualityResult {
  double energy;
  double dual_energy;
  double stability;   // max eigenvalue drift under dimension doubling
  double lhs, rhs;    // det(E - H_2) and det(E~ - H~_2), real parts
  double residual;
  int fock_dim;
  int precision_bits;
};

class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Compare det(E_n - H_2) against det(E~_n - H~_2) where E_n comes from the
/// Fock-truncated operator e^x + e^{-x} + R^2(e^y + e^{-y}) at hbar = 2 pi p/q
/// and E~_n from its strong-weak dual at hbar~ = 2 pi q/p. Throws
/// ConvergenceError when the fockDim doubling test moves the eigenvalue by
/// more than stability_tol.
DualityResult duality_check(long p, long q, const Rational& r, int level, int fock_dim,
                            double stability_tol = 1e-8);

} // namespace latwalk
