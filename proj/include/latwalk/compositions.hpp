#pragma once

#include "latwalk/rational.hpp"

#include <functional>
#include <vector>

namespace latwalk {

/// Ordered partition of a positive integer into positive parts.
using Composition = std::vector<long>;

/// Visit all 2^(n-1) compositions of n in lexicographic order.
/// The callback receives a reusable buffer; copy if you keep it.
inline void for_each_composition(long n, const std::function<void(const Composition&)>& fn) {
  if (n < 1) throw std::invalid_argument("for_each_composition: n must be >= 1");
  Composition parts;
  std::function<void(long)> rec = [&](long rest) {
    if (rest == 0) {
      fn(parts);
      return;
    }
    for (long first = 1; first <= rest; ++first) {
      parts.push_back(first);
      rec(rest - first);
      parts.pop_back();
    }
  };
  rec(n);
}

/// A (1,2)-composition of n: nonnegative weight-1 parts tilde[0..j] around
/// positive weight-2 parts parts[0..j-1], with sum(tilde) + 2*sum(parts) = n.
/// j = 0 gives the trivial composition tilde = (n).
struct OneTwoComposition {
  std::vector<long> tilde; // size j+1, entries >= 0
  std::vector<long> parts; // size j, entries >= 1

  long j() const { return static_cast<long>(parts.size()); }

  long sum_parts() const {
    long s = 0;
    for (long v : parts) s += v;
    return s;
  }
  long total() const {
    long s = 0;
    for (long v : tilde) s += v;
    return s + 2 * sum_parts();
  }
};

/// Visit every (1,2)-composition of n exactly once (n = 0 gives the single
/// trivial one with tilde = (0)).
inline void for_each_one_two_composition(long n,
                                         const std::function<void(const OneTwoComposition&)>& fn) {
  if (n < 0) throw std::invalid_argument("one_two_compositions: n must be >= 0");
  OneTwoComposition c;
  // Extend with alternating (weight-2 part, trailing tilde entry) blocks; a
  // composition is emitted exactly when the budget is used up.
  std::function<void(long)> extend = [&](long rest) {
    if (rest == 0) fn(c);
    for (long part = 1; 2 * part <= rest; ++part) {
      for (long t = 0; t <= rest - 2 * part; ++t) {
        c.parts.push_back(part);
        c.tilde.push_back(t);
        extend(rest - 2 * part - t);
        c.tilde.pop_back();
        c.parts.pop_back();
      }
    }
  };
  for (long t0 = 0; t0 <= n; ++t0) {
    c.tilde.assign(1, t0);
    c.parts.clear();
    extend(n - t0);
  }
}

/// c_2(l_1,...,l_j) = (1/l_1) * prod_{i>=2} binom(l_{i-1}+l_i-1, l_i).
inline Rational coeff_c2(const Composition& parts) {
  if (parts.empty()) throw std::invalid_argument("coeff_c2: empty composition");
  Rational r(1, parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i)
    r *= Rational(binomial(parts[i - 1] + parts[i] - 1, parts[i]));
  return r;
}

/// c_{1,2}(tilde; parts) =
///   (tilde_1 + l_1 - 1)! / (tilde_1! l_1!)
///   * prod_{k=2}^{j+1} multinomial(l_{k-1} + tilde_k + l_k - 1;
///                                  l_{k-1} - 1, tilde_k, l_k)
/// with the convention l_k = 0 for k > j.
inline Rational coeff_c12(const OneTwoComposition& c) {
  if (c.tilde.empty()) throw std::invalid_argument("coeff_c12: malformed composition");
  auto part_at = [&](long k) -> long { // 1-based, 0 beyond j
    return (k >= 1 && k <= c.j()) ? c.parts[k - 1] : 0;
  };
  long t1 = c.tilde[0], l1 = part_at(1);
  if (t1 + l1 == 0)
    throw std::domain_error("coeff_c12: the empty composition has no standalone coefficient");
  Rational r(factorial(t1 + l1 - 1));
  r /= Rational(factorial(t1) * factorial(l1));
  for (long k = 2; k <= c.j() + 1; ++k) {
    long lkm1 = part_at(k - 1), tk = c.tilde[k - 1], lk = part_at(k);
    long top = lkm1 + tk + lk - 1;
    r *= Rational(factorial(top)) /
         Rational(factorial(lkm1 - 1) * factorial(tk) * factorial(lk));
  }
  return r;
}

} // namespace latwalk
