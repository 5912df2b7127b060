#pragma once

#include "latwalk/series.hpp"

#include <vector>

namespace latwalk {

/// Tridiagonal matrix data: diag has size n, sub/super size n-1.
/// sub[k] sits at (k+1, k), super[k] at (k, k+1), zero-based.
template <class R>
struct Tridiag {
  std::vector<R> diag, sub, super;

  int size() const { return static_cast<int>(diag.size()); }

  void validate() const {
    if (sub.size() + 1 != diag.size() || super.size() + 1 != diag.size())
      throw std::invalid_argument("Tridiag: dimension mismatch (need |sub| = |super| = |diag|-1)");
  }
};

/// Coefficients of det(I - z*H) for tridiagonal H, by the three-term
/// recursion on leading principal minors:
///   P_k = P_{k-1} - z*d_k*P_{k-1} - z^2*sub_{k-1}*super_{k-1}*P_{k-2}.
template <class R>
ZSeries<R> charpoly_tridiagonal(const Tridiag<R>& h) {
  h.validate();
  int n = h.size();
  if (n == 0) throw std::invalid_argument("charpoly_tridiagonal: empty matrix");
  R one = ring_one_like(h.diag[0]);
  ZSeries<R> prev2(n), prev1(n);
  prev2[0] = one; // P_0 = 1
  // P_1 = 1 - z*d_1
  prev1[0] = one;
  prev1[1] = -h.diag[0];
  if (n == 1) return prev1;
  for (int k = 2; k <= n; ++k) {
    ZSeries<R> cur(n);
    const R& d = h.diag[k - 1];
    R off = h.sub[k - 2] * h.super[k - 2];
    for (int m = 0; m <= n; ++m) {
      R acc = prev1[m];
      if (m >= 1 && !ring_is_zero(d)) acc -= d * prev1[m - 1];
      if (m >= 2 && !ring_is_zero(off)) acc -= off * prev2[m - 2];
      cur[m] = acc;
    }
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

/// tr(H^N) for tridiagonal H via banded powers (band grows by one per step).
template <class R>
R tridiag_power_trace(const Tridiag<R>& h, int N) {
  h.validate();
  int n = h.size();
  if (n == 0) throw std::invalid_argument("tridiag_power_trace: empty matrix");
  if (N == 0) {
    R r{};
    for (int i = 0; i < n; ++i) r += ring_one_like(h.diag[0]);
    return r;
  }
  // band[i][j+bw] holds (H^m)_{i, i+j} for |j| <= bw
  auto entry = [&](const std::vector<std::vector<R>>& band, int bw, int i, int j) -> R {
    if (i < 0 || j < 0 || i >= n || j >= n) return R{};
    int off = j - i;
    if (off < -bw || off > bw) return R{};
    return band[i][off + bw];
  };
  auto hentry = [&](int i, int j) -> R {
    if (i < 0 || j < 0 || i >= n || j >= n) return R{};
    if (i == j) return h.diag[i];
    if (j == i + 1) return h.super[i];
    if (j == i - 1) return h.sub[j];
    return R{};
  };

  std::vector<std::vector<R>> cur(n, std::vector<R>(3));
  for (int i = 0; i < n; ++i)
    for (int off = -1; off <= 1; ++off) cur[i][off + 1] = hentry(i, i + off);
  int bw = 1;

  for (int m = 2; m <= N; ++m) {
    int nbw = bw + 1;
    std::vector<std::vector<R>> next(n, std::vector<R>(2 * nbw + 1));
    for (int i = 0; i < n; ++i) {
      for (int off = -nbw; off <= nbw; ++off) {
        int j = i + off;
        if (j < 0 || j >= n) continue;
        R acc{};
        for (int k = j - 1; k <= j + 1; ++k) {
          if (k < 0 || k >= n) continue;
          R a = entry(cur, bw, i, k);
          if (ring_is_zero(a)) continue;
          R b = hentry(k, j);
          if (ring_is_zero(b)) continue;
          acc += a * b;
        }
        next[i][off + nbw] = std::move(acc);
      }
    }
    cur = std::move(next);
    bw = nbw;
  }

  R tr{};
  for (int i = 0; i < n; ++i) tr += entry(cur, bw, i, i);
  return tr;
}

} // namespace latwalk
