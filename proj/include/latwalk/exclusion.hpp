#pragma once

#include "latwalk/eval.hpp"
#include "latwalk/series.hpp"
#include "latwalk/tridiagonal.hpp"
#include "latwalk/walks.hpp"

#include <array>
#include <vector>

namespace latwalk {

using Amplitudes = std::array<Rational, 6>; // a, a', b, b', c, c'

inline Amplitudes amplitudes_all_ones() { return {1, 1, 1, 1, 1, 1}; }

// scalar helpers shared by the spectral environments
inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const MultiPoly& x) { return x.is_zero(); }
inline bool scalar_is_zero(const Complex& x) { return x.is_zero(); }

inline Rational scalar_div(const Rational& a, const Rational& b) {
  if (b == 0) throw std::invalid_argument("spectral gauge undefined: division by zero amplitude");
  return a / b;
}
inline MultiPoly scalar_div(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero())
    throw std::invalid_argument("spectral gauge undefined: division by zero amplitude");
  return a.div_exact(b);
}
inline Complex scalar_div(const Complex& a, const Complex& b) {
  if (b.is_zero())
    throw std::invalid_argument("spectral gauge undefined: division by zero amplitude");
  return a / b;
}

// ---------------------------------------------------------------------------
// Spectral environments. Each provides the coefficient ring R, the hopping
// amplitudes in a scalar ring, and term(coeff, d) building coeff * Q^(d/2).
// ---------------------------------------------------------------------------

/// Exact environment over the root-of-unity quotient ring; amplitudes live in
/// S = Rational or MultiPoly. Identities proved here hold at every evaluation
/// point e^(2*pi*i*p/q) with gcd(p, q) = 1.
template <class S>
struct SymbolicEnv {
  using Scalar = S;
  using R = QMod<S>;
  int q;
  S a, ap, b, bp, c, cp;

  R term(const S& coeff, int d) const {
    R m(q);
    m.add(d, coeff);
    return m;
  }
  R one() const { return R::unit(q); }
  R zero() const { return R(q); }
};

using SymbolicEnvRat = SymbolicEnv<Rational>;
using SymbolicEnvPoly = SymbolicEnv<MultiPoly>;

/// Numeric environment at a concrete root of unity.
struct NumericEnv {
  using Scalar = Complex;
  using R = Complex;
  int q;
  RootOfUnity root;
  Complex a, ap, b, bp, c, cp;

  NumericEnv(long p_, long q_, const Amplitudes& amp)
      : q(static_cast<int>(q_)), root(p_, q_), a(amp[0]), ap(amp[1]), b(amp[2]), bp(amp[3]),
        c(amp[4]), cp(amp[5]) {}

  NumericEnv(long p_, long q_, const std::array<Complex, 6>& amp)
      : q(static_cast<int>(q_)), root(p_, q_), a(amp[0]), ap(amp[1]), b(amp[2]), bp(amp[3]),
        c(amp[4]), cp(amp[5]) {}

  Complex term(const Complex& coeff, int d) const { return coeff * root.qpow(d); }
  Complex one() const { return Complex(1L); }
  Complex zero() const { return Complex(); }
};

inline SymbolicEnvRat make_symbolic_env(int q, const Amplitudes& amp) {
  return SymbolicEnvRat{q, amp[0], amp[1], amp[2], amp[3], amp[4], amp[5]};
}

/// Fully symbolic amplitudes a..c' as generators.
inline SymbolicEnvPoly make_symbolic_env_generic(int q) {
  return SymbolicEnvPoly{q,
                         MultiPoly::generator(Gen::A),
                         MultiPoly::generator(Gen::Ap),
                         MultiPoly::generator(Gen::B),
                         MultiPoly::generator(Gen::Bp),
                         MultiPoly::generator(Gen::C),
                         MultiPoly::generator(Gen::Cp)};
}

/// Amplitude maps for the two geometries of the period conjecture.
inline SymbolicEnvPoly make_symbolic_env_b3(int q) {
  return SymbolicEnvPoly{q,
                         MultiPoly(1),
                         MultiPoly::generator(Gen::M1),
                         MultiPoly(1),
                         MultiPoly::generator(Gen::M2),
                         MultiPoly(1),
                         MultiPoly::generator(Gen::M3)};
}
inline SymbolicEnvPoly make_symbolic_env_f0(int q) {
  MultiPoly r2 = MultiPoly::generator(Gen::R, 2);
  return SymbolicEnvPoly{q, MultiPoly(), MultiPoly(), MultiPoly(1), MultiPoly(1), r2, r2};
}

// ---------------------------------------------------------------------------
// Spectral functions.
// ---------------------------------------------------------------------------

/// s_k = (1 - Q^(-k)) (cc' - bb' Q^k)
template <class Env>
typename Env::R spectral_s(const Env& e, int k) {
  typename Env::Scalar ccp = e.c * e.cp;
  typename Env::Scalar bbp = e.b * e.bp;
  typename Env::Scalar both = ccp + bbp;
  return e.term(both, 0) - e.term(bbp, 2 * k) - e.term(ccp, -2 * k);
}

/// s~_k = -(ab/c') Q^(k-1/2) - (a'c'/b) Q^(1/2-k)
template <class Env>
typename Env::R spectral_stilde(const Env& e, int k) {
  typename Env::Scalar r1 = scalar_div(e.a * e.b, e.cp);
  typename Env::Scalar r2 = scalar_div(e.ap * e.cp, e.b);
  return -(e.term(r1, 2 * k - 1) + e.term(r2, 1 - 2 * k));
}

/// chiral s_k = 4abc sin(k pi p/q) sin((k+1) pi p/q)
///            = abc (Q^(1/2) + Q^(-1/2) - Q^(k+1/2) - Q^(-k-1/2))
template <class Env>
typename Env::R spectral_chiral(const Env& e, int k) {
  typename Env::Scalar abc = e.a * e.b * e.c;
  return e.term(abc, 1) + e.term(abc, -1) - e.term(abc, 2 * k + 1) - e.term(abc, -2 * k - 1);
}

// ---------------------------------------------------------------------------
// Effective Hamiltonians (corner-free gauge).
// ---------------------------------------------------------------------------

/// Square-lattice chain: zero diagonal, f_k = b(1 - Q^k), g_k = b' - (cc'/b) Q^(-k).
template <class Env>
Tridiag<typename Env::R> build_h2(const Env& e) {
  using R = typename Env::R;
  if (scalar_is_zero(e.b) || scalar_is_zero(e.cp))
    throw std::invalid_argument("build_h2: gauge needs b != 0 and c' != 0");
  Tridiag<R> t;
  int q = e.q;
  t.diag.assign(q, e.zero());
  typename Env::Scalar ratio = scalar_div(e.c * e.cp, e.b);
  for (int k = 1; k <= q - 1; ++k) {
    t.super.push_back(e.term(e.b, 0) - e.term(e.b, 2 * k));
    t.sub.push_back(e.term(e.bp, 0) - e.term(ratio, -2 * k));
  }
  return t;
}

/// Triangular chain: as build_h2 plus the diagonal s~_k, k = 1..q.
template <class Env>
Tridiag<typename Env::R> build_h12(const Env& e) {
  auto t = build_h2(e);
  for (int k = 1; k <= e.q; ++k) t.diag[k - 1] = spectral_stilde(e, k);
  return t;
}

// ---------------------------------------------------------------------------
// Kreft coefficients.
// ---------------------------------------------------------------------------

/// g=2: Z_n = sum over k_1 >= 1, k_{i+1} - k_i >= 2, k_n <= q-1 of s_{k_1}..s_{k_n}.
template <class Env>
std::vector<typename Env::R> kreft_g2(const Env& e) {
  using R = typename Env::R;
  int q = e.q;
  int nmax = q / 2;
  std::vector<R> s(q);
  for (int k = 1; k <= q - 1; ++k) s[k] = spectral_s(e, k);
  R one = e.one();
  // P[n][kmax]: n particles within levels 1..kmax, gap >= 2
  std::vector<std::vector<R>> P(nmax + 1, std::vector<R>(q));
  for (int kmax = 0; kmax <= q - 1; ++kmax) P[0][kmax] = one;
  for (int n = 1; n <= nmax; ++n) {
    for (int kmax = 1; kmax <= q - 1; ++kmax) {
      R acc = P[n][kmax - 1];
      R below = (kmax >= 2) ? P[n - 1][kmax - 2] : (n == 1 ? one : R{});
      if (!ring_is_zero(below)) acc += s[kmax] * below;
      P[n][kmax] = std::move(acc);
    }
  }
  std::vector<R> z(nmax + 1);
  z[0] = one;
  for (int n = 1; n <= nmax; ++n) z[n] = P[n][q - 1];
  return z;
}

/// Mixed g=1,2: fermion factors s~_k on levels 1..q, paired-excluson factors
/// -s_k occupying levels k, k+1 for k = 1..q-1.
template <class Env>
std::vector<typename Env::R> kreft_mixed(const Env& e) {
  using R = typename Env::R;
  int q = e.q;
  std::vector<R> st(q + 1), s(q);
  for (int k = 1; k <= q; ++k) st[k] = spectral_stilde(e, k);
  for (int k = 1; k <= q - 1; ++k) s[k] = spectral_s(e, k);
  R one = e.one();
  // D[n][m]: statistic weight n placed on levels >= m (m ranges 1..q+2)
  std::vector<std::vector<R>> D(q + 1, std::vector<R>(q + 3));
  for (int m = 1; m <= q + 2; ++m) D[0][m] = one;
  for (int n = 1; n <= q; ++n) {
    for (int m = q + 2; m >= 1; --m) {
      R acc{};
      if (m <= q + 1) acc = D[n][m + 1];
      if (m <= q) acc += st[m] * D[n - 1][m + 1];
      if (m <= q - 1 && n >= 2) acc -= s[m] * D[n - 2][m + 2];
      D[n][m] = std::move(acc);
    }
  }
  std::vector<R> z(q + 1);
  z[0] = one;
  for (int n = 1; n <= q; ++n) z[n] = D[n][1];
  return z;
}

/// Chiral g=3: gaps of three on levels 1..q-2 with the chiral spectral function.
template <class Env>
std::vector<typename Env::R> kreft_g3_chiral(const Env& e) {
  using R = typename Env::R;
  int q = e.q;
  if (q < 3) throw std::invalid_argument("kreft_g3_chiral: q must be >= 3");
  int nmax = q / 3;
  std::vector<R> s(q);
  for (int k = 1; k <= q - 2; ++k) s[k] = spectral_chiral(e, k);
  R one = e.one();
  std::vector<std::vector<R>> P(nmax + 1, std::vector<R>(q));
  for (int kmax = 0; kmax <= q - 2; ++kmax) P[0][kmax] = one;
  for (int n = 1; n <= nmax; ++n) {
    for (int kmax = 1; kmax <= q - 2; ++kmax) {
      R acc = P[n][kmax - 1];
      R below = (kmax >= 3) ? P[n - 1][kmax - 3] : (n == 1 ? one : R{});
      if (!ring_is_zero(below)) acc += s[kmax] * below;
      P[n][kmax] = std::move(acc);
    }
  }
  std::vector<R> z(nmax + 1);
  z[0] = one;
  for (int n = 1; n <= nmax; ++n) z[n] = P[n][q - 2];
  return z;
}

// ---------------------------------------------------------------------------
// Cluster route to the full trace.
// ---------------------------------------------------------------------------

/// det(I - zH) as a z-series of length `order`, assembled from the Kreft
/// coefficients of the lattice's exclusion statistics.
template <class Env>
ZSeries<typename Env::R> secular_series(Lattice lat, const Env& e, int order) {
  using R = typename Env::R;
  ZSeries<R> d(order);
  for (int n = 0; n <= order; ++n) d[n] = e.zero();
  d[0] = e.one();
  switch (lat) {
    case Lattice::Square: {
      auto z = kreft_g2(e);
      for (int n = 1; n < static_cast<int>(z.size()) && 2 * n <= order; ++n) {
        d[2 * n] = std::move(z[n]);
        if (n % 2 == 1) d[2 * n] = -d[2 * n];
      }
      break;
    }
    case Lattice::Triangular: {
      auto z = kreft_mixed(e);
      for (int n = 1; n < static_cast<int>(z.size()) && n <= order; ++n) {
        d[n] = std::move(z[n]);
        if (n % 2 == 1) d[n] = -d[n];
      }
      break;
    }
    case Lattice::ChiralTriangular: {
      auto z = kreft_g3_chiral(e);
      for (int n = 1; n < static_cast<int>(z.size()) && 3 * n <= order; ++n) {
        d[3 * n] = std::move(z[n]);
        if (n % 2 == 1) d[3 * n] = -d[3 * n];
      }
      break;
    }
  }
  return d;
}

/// Full trace Tr H^N = (1/q) tr H_eff^N via cluster coefficients, i.e. the
/// z^N coefficient of -log det(I - zH) times N/q. Valid for N < q only;
/// beyond that the chain trace picks up open walks closed by q-periodicity.
template <class Env>
typename Env::R trace_via_cluster(Lattice lat, int N, const Env& e) {
  using R = typename Env::R;
  if (N < 1) throw std::invalid_argument("trace_via_cluster: N must be >= 1");
  if (N >= e.q)
    throw std::domain_error(
        "trace_via_cluster: N >= q (open walks closed by q-periodicity contaminate the trace)");
  auto det = secular_series(lat, e, N);
  auto beta = series_log(det);
  R r = beta[N];
  ring_mul_int(r, N);
  r = -r;
  ring_div_int(r, e.q);
  return r;
}

/// (1/q) tr H_eff^N by direct banded matrix powers (matrix route; square and
/// triangular chains only).
template <class Env>
typename Env::R trace_via_matrix(Lattice lat, int N, const Env& e) {
  if (lat == Lattice::ChiralTriangular)
    throw std::invalid_argument("trace_via_matrix: no tridiagonal gauge for chiral walks");
  auto h = (lat == Lattice::Square) ? build_h2(e) : build_h12(e);
  auto tr = tridiag_power_trace(h, N);
  ring_div_int(tr, e.q);
  return tr;
}

/// Fully symbolic trace as a true Laurent polynomial in Q^(1/2) and the six
/// amplitudes. Picks an internal modulus large enough to lift the quotient
/// representative back onto the area window.
QLaurent<MultiPoly> trace_symbolic_laurent(Lattice lat, int N);

/// Numeric full trace at a root of unity for rational amplitudes.
Complex trace_numeric(Lattice lat, int N, long p, long q, const Amplitudes& amp);

// ---------------------------------------------------------------------------
// Elliptic-integral generating function (square lattice).
// ---------------------------------------------------------------------------

enum class EllipticConvention { Modulus, Parameter };

/// Complete elliptic integral of the first kind by the arithmetic-geometric
/// mean; K(0) = pi/2.
Complex elliptic_k(const Complex& argument, EllipticConvention conv);

/// G(z) = sum_N z^N sum_A C_N(A) Q^A for square-lattice walks, evaluated via
/// the secular determinant and the complete elliptic integral. The elliptic
/// argument 1/f enters as the parameter m of K (modulus squared); the series
/// oracle at q = 2 separates the two readings and confirms this one.
Complex gz_elliptic(const Complex& z, const Amplitudes& amp, long p, long q,
                    EllipticConvention conv = EllipticConvention::Parameter);

} // namespace latwalk
