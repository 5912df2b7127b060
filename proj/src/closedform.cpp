#include "latwalk/closedform.hpp"

#include <cmath>
#include <numeric>

namespace latwalk {

namespace {

// sum_m binom(l,m) binom(l, l+shift-m) (bb')^m (cc')^(l-m), written with
// paired exponents b^m b'^m c^(l-m) c'^(l-m). Zero unless |shift| <= l.
MultiPoly pair_bracket(long l, long shift) {
  MultiPoly out;
  if (shift > l || shift < -l) return out;
  long lo = std::max(0L, shift), hi = std::min(l, l + shift);
  for (long m = lo; m <= hi; ++m) {
    Integer coeff = binomial(l, m) * binomial(l, l + shift - m);
    if (coeff == 0) continue;
    ExpVec e = exp_zero();
    e[static_cast<int>(Gen::B)] = static_cast<int16_t>(m);
    e[static_cast<int>(Gen::Bp)] = static_cast<int16_t>(m);
    e[static_cast<int>(Gen::C)] = static_cast<int16_t>(l - m);
    e[static_cast<int>(Gen::Cp)] = static_cast<int16_t>(l - m);
    out.add_term(e, Rational(coeff));
  }
  return out;
}

MultiPoly poly_pow(const MultiPoly& base, long e) {
  if (e == 0) return MultiPoly(1);
  if (base.is_zero()) return MultiPoly();
  MultiPoly r(1);
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

} // namespace

MultiPoly cn_square(int N, int A) {
  if (N < 0 || N % 2 != 0) throw std::invalid_argument("cn_square: N must be even and >= 0");
  if (N == 0) return A == 0 ? MultiPoly(1) : MultiPoly();
  long n = N / 2;
  if (std::abs(A) > (N * N) / 16) return MultiPoly();

  MultiPoly total;
  for_each_composition(n, [&](const Composition& parts) {
    long j = static_cast<long>(parts.size());
    Rational pref = Rational(N) * coeff_c2(parts);
    long l1 = parts[0];
    long l2 = j >= 2 ? parts[1] : 0;

    // residual reach of the k_i sums, for pruning the area binomials
    std::vector<long> reach1(j + 1, 0), reach2(j + 1, 0);
    for (long i = j; i >= 3; --i) {
      reach1[i - 1] = reach1[i] + (i - 2) * parts[i - 1];
      reach2[i - 1] = reach2[i] + (i - 1) * parts[i - 1];
    }

    std::function<void(long, long, long, const MultiPoly&)> sum_k =
        [&](long i, long s1, long s2, const MultiPoly& prod) {
          long rem1 = (i <= j) ? reach1[i - 1] : 0;
          long rem2 = (i <= j) ? reach2[i - 1] : 0;
          if (std::abs(A + s1) - rem1 > l1) return;
          if (std::abs(A + s2) - rem2 > l2) return;
          if (i > j) {
            MultiPoly term = pair_bracket(l1, A + s1) * pair_bracket(l2, -A - s2);
            if (term.is_zero()) return;
            term *= prod;
            term.scale(pref);
            total += term;
            return;
          }
          long li = parts[i - 1];
          for (long k = -li; k <= li; ++k) {
            MultiPoly next = prod * pair_bracket(li, k);
            if (next.is_zero()) continue;
            sum_k(i + 1, s1 + (i - 2) * k, s2 + (i - 1) * k, next);
          }
        };
    sum_k(3, 0, 0, MultiPoly(1));
  });
  return total;
}

MultiPoly cn_triangular_lambda(int N, int two_a, const MultiPoly& lam1, const MultiPoly& lam2) {
  if (N < 2) throw std::invalid_argument("cn_triangular_lambda: N must be >= 2");

  MultiPoly total;
  // n = 0 contributes the convention term (-2)^N lam1^N at area zero.
  if (two_a == 0) {
    MultiPoly t = poly_pow(lam1, N);
    t.scale(pow_rational(Rational(-2), N));
    total += t;
  }

  for (long n = 1; n <= N; ++n) {
    for_each_one_two_composition(n, [&](const OneTwoComposition& comp) {
      long j = comp.j();
      long sum_l = comp.sum_parts();
      // interleaved spectral exponents: tilde_1, l_1, tilde_2, l_2, ..., tilde_{j+1}
      std::vector<long> L(2 * j + 1);
      for (long i = 0; i <= j; ++i) L[2 * i] = comp.tilde[i];
      for (long i = 1; i <= j; ++i) L[2 * i - 1] = comp.parts[i - 1];
      long L1 = L[0];
      long L2 = (2 * j + 1 >= 2) ? L[1] : 0;

      Rational pref = Rational(N) * coeff_c12(comp) * pow_rational(Rational(-2), N - n) *
                      Rational(binomial(N - 1, n - 1));
      if (pref == 0) return;
      MultiPoly lam = poly_pow(lam1, N - 2 * sum_l) * poly_pow(lam2, sum_l);
      if (lam.is_zero()) return;

      std::vector<long> reach1(L.size() + 2, 0), reach2(L.size() + 2, 0);
      for (long i = static_cast<long>(L.size()); i >= 3; --i) {
        reach1[i - 1] = reach1[i] + (i - 2) * L[i - 1];
        reach2[i - 1] = reach2[i] + (i - 1) * L[i - 1];
      }

      Integer acc = 0;
      std::function<void(long, long, long, const Integer&)> sum_k =
          [&](long i, long s1, long s2, const Integer& prod) {
            long total_pos = static_cast<long>(L.size());
            long rem1 = (i <= total_pos) ? reach1[i - 1] : 0;
            long rem2 = (i <= total_pos) ? reach2[i - 1] : 0;
            if (std::abs(two_a + s1) - rem1 > L1) return;
            if (std::abs(two_a + s2) - rem2 > L2) return;
            if (i > total_pos) {
              Integer b1 = binomial(2 * L1, L1 + two_a + s1);
              Integer b2 = binomial(2 * L2, L2 - two_a - s2);
              acc += prod * b1 * b2;
              return;
            }
            long li = L[i - 1];
            for (long k = -li; k <= li; ++k) {
              Integer next = prod * binomial(2 * li, li + k);
              if (next == 0) continue;
              sum_k(i + 1, s1 + (i - 2) * k, s2 + (i - 1) * k, next);
            }
          };
      sum_k(3, 0, 0, Integer(1));
      if (acc == 0) return;

      MultiPoly term = lam;
      term.scale(pref * Rational(acc));
      total += term;
    });
  }
  return total;
}

std::pair<Rational, Rational> lambda_from_amplitudes(const Rational& a, const Rational& ap,
                                                     const Rational& b, const Rational& bp,
                                                     const Rational& c, const Rational& cp) {
  if (b == 0 || cp == 0)
    throw std::invalid_argument("lambda specialization needs b != 0 and c' != 0");
  if (ap * cp * cp != a * b * b)
    throw std::invalid_argument("amplitudes violate a' = a b^2 / c'^2");
  if (bp * b != c * cp)
    throw std::invalid_argument("amplitudes violate b' = c c' / b");
  return {a * b / cp, b * bp};
}

TrigSumResult trig_sum(long p, long q, const std::vector<long>& exponents, bool keep_exact) {
  if (q < 2 || std::gcd(std::abs(p), q) != 1)
    throw std::invalid_argument("trig_sum: need coprime p, q with q >= 2");
  long j = static_cast<long>(exponents.size());
  long total_l = 0;
  for (long l : exponents) {
    if (l < 0) throw std::invalid_argument("trig_sum: negative exponent");
    total_l += l;
  }
  if (q <= j + total_l)
    throw std::invalid_argument("trig_sum: q too small to resolve the exponent pattern");

  TrigSumResult res;

  // direct route
  Real pi = Real::pi();
  Real direct(0L);
  for (long k = 1; k <= q - j; ++k) {
    Real prod(1L);
    for (long i = 0; i < j; ++i) {
      Real s = sin(pi * Real((k + i) * p) / Real(q));
      Real sk = Real(4L) * s * s;
      for (long e = 0; e < exponents[i]; ++e) prod *= sk;
    }
    direct += prod;
  }
  res.direct = direct / Real(q);

  // binomial expansion: S_{k+i-1}^{l_i} = sum_m (-1)^m binom(2l_i, l_i+m) Q^{(k+i-1)m}
  RootOfUnity root(p, q);
  Complex eval_acc;
  QLaurent<Rational> exact;
  std::vector<long> m(j, 0);
  std::function<void(long, long, long, const Rational&)> tuples =
      [&](long i, long mshift, long msum, const Rational& coeff) {
        if (i == j) {
          // sum over k of Q^(k*msum + mshift), k = 1..q-j
          if (keep_exact) {
            for (long k = 1; k <= q - j; ++k)
              exact.add_term(static_cast<int>(2 * (k * msum + mshift)), coeff / q);
          }
          Complex ksum;
          if (msum % q == 0) {
            ksum = Complex(Rational(q - j));
          } else {
            // geometric: Q^msum (1 - Q^{(q-j) msum}) / (1 - Q^msum)
            Complex w = root.qpow(2 * msum);
            Complex num = w * (Complex(1L) - root.qpow(2 * (q - j) * msum));
            ksum = num / (Complex(1L) - w);
          }
          eval_acc += Complex(coeff / q) * ksum * root.qpow(2 * mshift);
          return;
        }
        long l = exponents[i];
        for (long mi = -l; mi <= l; ++mi) {
          Rational c = coeff * Rational(binomial(2 * l, l + mi));
          if (mi % 2 != 0) c = -c;
          if (c == 0) continue;
          tuples(i + 1, mshift + i * mi, msum + mi, c);
        }
      };
  tuples(0, 0, 0, Rational(1));
  res.binomial_eval = eval_acc;
  if (keep_exact) {
    res.qform = exact;
    res.exact_kept = true;
  }
  return res;
}

} // namespace latwalk
