#include "doctest.h"

#include "latwalk/compositions.hpp"
#include "latwalk/series.hpp"
#include "latwalk/tridiagonal.hpp"

#include <random>
#include <set>

using namespace latwalk;

namespace {
std::mt19937 rng(7);
Rational rnd_q() {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 6);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}
} // namespace

TEST_CASE("series_log identities") {
  // log(1) = 0
  ZSeries<Rational> one(4);
  one[0] = 1;
  auto b = series_log(one);
  for (int n = 0; n <= 4; ++n) CHECK(b[n] == 0);

  // log(1+x): 1, -1/2, 1/3, -1/4
  ZSeries<Rational> z(4);
  z[0] = 1;
  z[1] = 1;
  auto l = series_log(z);
  CHECK(l[1] == Rational(1));
  CHECK(l[2] == Rational(-1, 2));
  CHECK(l[3] == Rational(1, 3));
  CHECK(l[4] == Rational(-1, 4));

  ZSeries<Rational> bad(2);
  bad[0] = 2;
  CHECK_THROWS_AS(series_log(bad), std::invalid_argument);
}

TEST_CASE("series_log of a two-level g=2 grand partition") {
  // Z = 1 + (s1+s2)x, no two-particle term: b2 = -(s1+s2)^2/2.
  MultiPoly s1 = MultiPoly::generator(Gen::M1), s2 = MultiPoly::generator(Gen::M2);
  ZSeries<MultiPoly> z(3);
  z[0] = MultiPoly(1);
  z[1] = s1 + s2;
  auto b = series_log(z);
  MultiPoly sum = s1 + s2;
  MultiPoly expect2 = sum * sum;
  expect2.scale(Rational(-1, 2));
  CHECK(b[1] == sum);
  CHECK(b[2] == expect2);
  MultiPoly expect3 = sum * sum * sum;
  expect3.scale(Rational(1, 3));
  CHECK(b[3] == expect3);
}

TEST_CASE("series_log and series_exp invert each other") {
  for (int trial = 0; trial < 20; ++trial) {
    ZSeries<Rational> b(6);
    for (int n = 1; n <= 6; ++n) b[n] = rnd_q();
    auto z = series_exp(b);
    auto back = series_log(z);
    CHECK(back == b);
  }
}

TEST_CASE("charpoly_tridiagonal small cases") {
  // diag (d): 1 - d z
  Tridiag<Rational> one{{Rational(5)}, {}, {}};
  auto p1 = charpoly_tridiagonal(one);
  CHECK(p1[0] == 1);
  CHECK(p1[1] == -5);

  // 2x2, zero diagonal: 1 - f g z^2
  Tridiag<Rational> two{{0, 0}, {Rational(3)}, {Rational(7)}};
  auto p2 = charpoly_tridiagonal(two);
  CHECK(p2[0] == 1);
  CHECK(p2[1] == 0);
  CHECK(p2[2] == -21);

  Tridiag<Rational> bad{{0, 0}, {Rational(1)}, {}};
  CHECK_THROWS_AS(charpoly_tridiagonal(bad), std::invalid_argument);
}

namespace {

// Cofactor expansion of det(I - z*M) for a dense matrix of ring elements,
// used as an independent oracle against the three-term recursion.
template <class R>
std::vector<R> dense_char_series(const std::vector<std::vector<R>>& m) {
  int n = static_cast<int>(m.size());
  // Laplace expansion along the first remaining row; every entry of I - zM
  // is delta(row,col) - z*m[row][col], tracked as a degree-<=n z-polynomial.
  std::function<std::vector<R>(std::vector<int>, std::vector<int>)> go =
      [&](std::vector<int> rs, std::vector<int> cs) -> std::vector<R> {
    if (rs.empty()) return {R(1)};
    int row = rs.front();
    std::vector<int> rest(rs.begin() + 1, rs.end());
    std::vector<R> acc(static_cast<std::size_t>(n + 1), R{});
    for (std::size_t ci = 0; ci < cs.size(); ++ci) {
      int col = cs[ci];
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

} // namespace

TEST_CASE("charpoly_tridiagonal agrees with cofactor determinant (n <= 5)") {
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      Tridiag<Rational> t;
      t.diag.resize(n);
      t.sub.resize(n - 1);
      t.super.resize(n - 1);
      for (int i = 0; i < n; ++i) t.diag[i] = rnd_q();
      for (int i = 0; i < n - 1; ++i) {
        t.sub[i] = rnd_q();
        t.super[i] = rnd_q();
      }
      std::vector<std::vector<Rational>> dense(n, std::vector<Rational>(n, 0));
      for (int i = 0; i < n; ++i) dense[i][i] = t.diag[i];
      for (int i = 0; i + 1 < n; ++i) {
        dense[i + 1][i] = t.sub[i];
        dense[i][i + 1] = t.super[i];
      }
      auto fast = charpoly_tridiagonal(t);
      auto slow = dense_char_series(dense);
      for (int d = 0; d <= n; ++d) CHECK(fast[d] == slow[d]);
    }
  }
}

TEST_CASE("tridiag_power_trace matches dense powers") {
  Tridiag<Rational> t{{1, 2, 3, 4}, {Rational(1), Rational(2), Rational(1)},
                      {Rational(5), Rational(1), Rational(3)}};
  // dense multiply oracle
  int n = 4;
  std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n, 0)), acc;
  for (int i = 0; i < n; ++i) h[i][i] = t.diag[i];
  for (int i = 0; i + 1 < n; ++i) {
    h[i + 1][i] = t.sub[i];
    h[i][i + 1] = t.super[i];
  }
  acc = h;
  for (int power = 1; power <= 6; ++power) {
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += acc[i][i];
    CHECK(tridiag_power_trace(t, power) == tr);
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) next[i][j] += acc[i][k] * h[k][j];
    acc = next;
  }
}

TEST_CASE("composition streams") {
  std::set<Composition> seen;
  long count = 0;
  for_each_composition(4, [&](const Composition& c) {
    ++count;
    seen.insert(c);
    long s = 0;
    for (long v : c) s += v;
    CHECK(s == 4);
  });
  CHECK(count == 8);
  CHECK(seen.size() == 8);

  count = 0;
  for_each_composition(1, [&](const Composition& c) {
    ++count;
    CHECK(c == Composition{1});
  });
  CHECK(count == 1);
}

TEST_CASE("one-two composition stream matches brute force") {
  // n = 4 has exactly the six compositions listed by hand.
  std::vector<std::pair<std::vector<long>, std::vector<long>>> got;
  for_each_one_two_composition(4, [&](const OneTwoComposition& c) {
    got.emplace_back(c.tilde, c.parts);
    CHECK(c.total() == 4);
  });
  CHECK(got.size() == 6);

  // counts for n <= 12 against direct stars-and-bars tallies:
  // j weight-2 parts summing to s (binom(s-1, j-1) compositions) and j+1
  // nonnegative tilde entries summing to n - 2s (binom(n-2s+j, j) ways).
  auto brute_count = [](long n) {
    Integer count = 0;
    for (long j = 0; 2 * j <= n; ++j) {
      for (long s = j; 2 * s <= n; ++s) {
        Integer pc = (j == 0) ? Integer(s == 0 ? 1 : 0) : binomial(s - 1, j - 1);
        Integer tc = binomial((n - 2 * s) + j, j);
        count += pc * tc;
      }
    }
    return count.get_si();
  };
  for (long n = 0; n <= 12; ++n) {
    long stream = 0;
    for_each_one_two_composition(n, [&](const OneTwoComposition&) { ++stream; });
    CHECK(stream == brute_count(n));
  }
}

TEST_CASE("coefficient c2") {
  CHECK(coeff_c2({5}) == Rational(1, 5));
  CHECK(coeff_c2({1, 1, 1, 1}) == Rational(1));
  // N * sum over compositions of N/2 of c2 = binom(N, N/2) at N = 8
  Rational sum = 0;
  for_each_composition(4, [&](const Composition& c) { sum += coeff_c2(c); });
  CHECK(Rational(8) * sum == Rational(binomial(8, 4)));
}

TEST_CASE("coefficient c12") {
  // trivial composition (n): 1/n
  OneTwoComposition triv;
  triv.tilde = {5};
  CHECK(coeff_c12(triv) == Rational(1, 5));

  // identity: n * sum_{(1,2)-comp of n, sum(l)=n'} c12 = binom(n,2n') binom(2n',n')
  long n = 5;
  std::map<long, Rational> by_np;
  for_each_one_two_composition(n, [&](const OneTwoComposition& c) {
    by_np[c.sum_parts()] += coeff_c12(c);
  });
  for (long np = 0; 2 * np <= n; ++np) {
    Rational expect = Rational(binomial(n, 2 * np) * binomial(2 * np, np));
    CHECK(Rational(n) * by_np[np] == expect);
  }
}
