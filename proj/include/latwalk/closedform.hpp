#pragma once

#include "latwalk/compositions.hpp"
#include "latwalk/eval.hpp"
#include "latwalk/multipoly.hpp"
#include "latwalk/qlaurent.hpp"

#include <vector>

namespace latwalk {

/// Closed-form refined count of N-step closed square-lattice walks with
/// signed area A (integer, in unit cells). The result is a polynomial in the
/// paired products bb' and cc', returned with paired exponents in b,b',c,c'.
/// Out-of-range A gives the zero polynomial; N must be even and >= 0.
MultiPoly cn_square(int N, int A);

/// Closed-form count of N-step closed triangular-lattice walks with doubled
/// signed area 2A, on the specialization a' = a b^2/c'^2, b' = c c'/b, in
/// terms of lambda1 = ab/c' and lambda2 = bb'. The lambda arguments may be
/// symbolic monomials or rational constants.
MultiPoly cn_triangular_lambda(int N, int two_a, const MultiPoly& lam1, const MultiPoly& lam2);

/// Check the triangular specialization and derive (lambda1, lambda2).
/// Throws std::invalid_argument when (a..c') violates a' = ab^2/c'^2 or
/// b' = cc'/b.
std::pair<Rational, Rational> lambda_from_amplitudes(const Rational& a, const Rational& ap,
                                                     const Rational& b, const Rational& bp,
                                                     const Rational& c, const Rational& cp);

/// (1/q) sum_{k=1}^{q-j} S_k^{l1} S_{k+1}^{l2} ... with S_k = 4 sin^2(k pi p / q),
/// evaluated two ways: the direct trigonometric sum and the binomial
/// expansion in powers of Q (summed over k by geometric series). The two
/// agree at the root of unity; the exact Q-form is kept for modest q.
struct TrigSumResult {
  Real direct;             // direct trigonometric sum
  Complex binomial_eval;   // binomial-expansion form at the same root
  QLaurent<Rational> qform; // exact form (populated when keep_exact)
  bool exact_kept = false;
};

TrigSumResult trig_sum(long p, long q, const std::vector<long>& exponents,
                       bool keep_exact = true);

} // namespace latwalk
