#pragma once

#include "latwalk/qlaurent.hpp"

#include <functional>
#include <vector>

namespace latwalk::testing {

/// Cofactor expansion of det(I - z*M) for a dense matrix of ring elements.
/// Exponential cost; test oracle only.
template <class R>
std::vector<R> dense_char_series(const std::vector<std::vector<R>>& m) {
  int n = static_cast<int>(m.size());
  std::function<std::vector<R>(std::vector<int>, std::vector<int>)> go =
      [&](std::vector<int> rs, std::vector<int> cs) -> std::vector<R> {
    if (rs.empty()) return {R(1)};
    int row = rs.front();
    std::vector<int> rest(rs.begin() + 1, rs.end());
    std::vector<R> acc(static_cast<std::size_t>(n + 1), R{});
    for (std::size_t ci = 0; ci < cs.size(); ++ci) {
      int col = cs[ci];
      if (row != col && ring_is_zero(m[row][col])) continue; // entire entry vanishes
      std::vector<int> subcols;
      for (std::size_t cj = 0; cj < cs.size(); ++cj)
        if (cj != ci) subcols.push_back(cs[cj]);
      auto sub = go(rest, subcols);
      R sign = (ci % 2 == 0) ? R(1) : R(-1);
      for (std::size_t d = 0; d < sub.size() && d <= static_cast<std::size_t>(n); ++d) {
        if (ring_is_zero(sub[d])) continue;
        if (row == col) acc[d] += sign * sub[d];
        if (d + 1 <= static_cast<std::size_t>(n)) acc[d + 1] -= sign * (m[row][col] * sub[d]);
      }
    }
    return acc;
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  auto r = go(all, all);
  r.resize(n + 1, R{});
  return r;
}

/// Dense power trace, for the chiral matrix oracle.
template <class R>
R dense_power_trace(const std::vector<std::vector<R>>& m, int power) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<R>> acc = m;
  for (int s = 2; s <= power; ++s) {
    std::vector<std::vector<R>> next(n, std::vector<R>(n, R{}));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (ring_is_zero(acc[i][k])) continue;
        for (int j = 0; j < n; ++j) {
          if (ring_is_zero(m[k][j])) continue;
          next[i][j] += acc[i][k] * m[k][j];
        }
      }
    acc = std::move(next);
  }
  R tr{};
  for (int i = 0; i < n; ++i) tr += acc[i][i];
  return tr;
}

} // namespace latwalk::testing
