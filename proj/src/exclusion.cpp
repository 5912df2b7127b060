#include "latwalk/exclusion.hpp"

namespace latwalk {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest odd prime >= n. The internal modulus must be prime: the quotient
// ring then splits into components at primitive roots only, where the
// chain-trace identity holds; composite moduli pick up components at
// non-primitive roots where it does not.
int next_odd_prime(int n) {
  int c = std::max(n, 3);
  if (c % 2 == 0) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

} // namespace

QLaurent<MultiPoly> trace_symbolic_laurent(Lattice lat, int N) {
  Lattice support = lat == Lattice::ChiralTriangular ? Lattice::Triangular : lat;
  int bound = area_bound_doubled(support, N);
  int q = next_odd_prime(std::max(N + 1, bound + 2));
  auto env = make_symbolic_env_generic(q);
  auto mod = trace_via_cluster(lat, N, env);
  return mod.canonical().to_laurent(bound);
}

Complex trace_numeric(Lattice lat, int N, long p, long q, const Amplitudes& amp) {
  NumericEnv env(p, q, amp);
  return trace_via_cluster(lat, N, env);
}

Complex elliptic_k(const Complex& argument, EllipticConvention conv) {
  // K = pi / (2 agm(1, sqrt(1 - k^2))) with k the modulus; the parameter
  // convention replaces k^2 by the argument itself.
  Complex one(1L);
  Complex comp = (conv == EllipticConvention::Modulus)
                     ? one - argument * argument
                     : one - argument;
  Complex a = one;
  Complex b = csqrt(comp);
  Real eps = pow(Real(2L), Real(-(default_precision_bits() - 4)));
  for (int iter = 0; iter < 200; ++iter) {
    Complex an = (a + b) / Complex(Real(2L));
    Complex bn = csqrt(a * b);
    a = an;
    b = bn;
    if (abs(a - b) <= eps * abs(a)) break;
  }
  return Complex(Real::pi()) / (Complex(Real(2L)) * a);
}

Complex gz_elliptic(const Complex& z, const Amplitudes& amp, long p, long q,
                    EllipticConvention conv) {
  NumericEnv env(p, q, amp);
  auto zk = kreft_g2(env);

  // det(1/z - H_2) = sum_n (-1)^n Z_n z^(2n - q) and its z d/dz derivative
  Complex det, zddet;
  Complex zc = z;
  for (int n = 0; n < static_cast<int>(zk.size()); ++n) {
    int e = 2 * n - static_cast<int>(q);
    // z^e for possibly negative e
    Complex zpow(1L);
    for (int i = 0; i < std::abs(e); ++i) zpow *= zc;
    if (e < 0) zpow = Complex(1L) / zpow;
    Complex term = zk[n] * zpow;
    if (n % 2 == 1) term = -term;
    det += term;
    zddet += Complex(Real(e)) * term;
  }

  Rational bbp = amp[2] * amp[3], ccp = amp[4] * amp[5];
  if (bbp <= 0 || ccp <= 0)
    throw std::invalid_argument("gz_elliptic: needs positive bb' and cc'");
  Real bbp_r(bbp), ccp_r(ccp), qr(static_cast<long>(q));
  Real quarter_pow = pow(bbp_r * ccp_r, qr / Real(4L));
  Real half_pow = pow(bbp_r * ccp_r, qr / Real(2L));
  Real asym = pow(bbp_r, qr / Real(2L)) - pow(ccp_r, qr / Real(2L));

  Complex f = (det * det - Complex(Real(4L) * asym * asym)) / Complex(Real(16L) * half_pow);
  Complex sqrtf;
  try {
    sqrtf = csqrt(f);
  } catch (const std::domain_error&) {
    throw std::domain_error("gz_elliptic: f(z) lies on the branch cut of the square root");
  }
  Complex karg = Complex(1L) / f;
  Complex kval = elliptic_k(karg, conv);

  Complex numer = -zddet;
  Complex denom = Complex(Real(2L) * Real::pi() * qr * quarter_pow);
  return (numer / denom) * (kval / sqrtf);
}

} // namespace latwalk
