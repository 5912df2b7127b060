#include "latwalk/walks.hpp"

#include "latwalk/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace latwalk {

namespace {

struct Step {
  int dm1, dm2, dl1, dl2, dr1, dr2; // count increments
  int dx, dy;                       // deformed-lattice displacement
};

// Order matches the hopping amplitudes a, a', b, b', c, c'.
constexpr Step kSteps[6] = {
    {1, 0, 0, 0, 0, 0, +1, 0},  // right (a)
    {0, 1, 0, 0, 0, 0, -1, 0},  // left (a')
    {0, 0, 1, 0, 0, 0, 0, +1},  // up (b)
    {0, 0, 0, 1, 0, 0, 0, -1},  // down (b')
    {0, 0, 0, 0, 1, 0, -1, -1}, // down-left (c)
    {0, 0, 0, 0, 0, 1, +1, +1}, // up-right (c')
};

bool step_allowed(Lattice lattice, int dir) {
  switch (lattice) {
    case Lattice::Square: return dir >= 2;            // no a / a' moves
    case Lattice::Triangular: return true;
    case Lattice::ChiralTriangular: return dir % 2 == 0; // a, b, c only
  }
  return false;
}

// Doubled Q-exponent picked up when appending one step of the given
// direction to a walk in class v (components taken after the increment).
int step_area_doubled(const DirectionCounts& v, int dir) {
  switch (dir) {
    case 0: return v.l2 + v.r1 - v.l1 - v.r2; // a
    case 1: return v.l1 + v.r2 - v.l2 - v.r1; // a'
    case 2: return v.m1 + v.r2 - v.m2 - v.r1; // b
    case 3: return v.m2 + v.r1 - v.m1 - v.r2; // b'
    case 4: return v.m2 - v.m1 + v.l1 - v.l2; // c
    case 5: return v.m1 - v.m2 + v.l2 - v.l1; // c'
  }
  throw std::logic_error("bad direction");
}

void enumerate_counts(Lattice lattice, int total, const std::function<void(DirectionCounts&)>& fn) {
  int lim[6];
  for (int d = 0; d < 6; ++d) lim[d] = step_allowed(lattice, d) ? total : 0;
  DirectionCounts v;
  for (v.m1 = 0; v.m1 <= lim[0]; ++v.m1)
    for (v.m2 = 0; v.m2 <= std::min(lim[1], total - v.m1); ++v.m2)
      for (v.l1 = 0; v.l1 <= std::min(lim[2], total - v.m1 - v.m2); ++v.l1)
        for (v.l2 = 0; v.l2 <= std::min(lim[3], total - v.m1 - v.m2 - v.l1); ++v.l2)
          for (v.r1 = 0; v.r1 <= std::min(lim[4], total - v.m1 - v.m2 - v.l1 - v.l2); ++v.r1) {
            v.r2 = total - (v.m1 + v.m2 + v.l1 + v.l2 + v.r1);
            if (v.r2 > lim[5]) continue;
            fn(v);
          }
}

} // namespace

int area_bound_doubled(Lattice lattice, int steps) {
  if (lattice == Lattice::Square) return 2 * ((steps * steps) / 16);
  // round(N^2/6) with half-to-even, minus 1 unless N is a multiple of 6
  double x = steps * steps / 6.0;
  double r = std::nearbyint(x); // default rounding mode: half to even
  int bound = static_cast<int>(r);
  if (steps % 6 != 0) bound -= 1;
  return std::max(bound, 0);
}

std::map<DirectionCounts, QLaurent<Rational>> recurrence_gf(Lattice lattice, int steps,
                                                            int threads) {
  if (steps < 0) throw std::invalid_argument("recurrence_gf: negative step count");
  std::map<DirectionCounts, QLaurent<Rational>> prev;
  prev[DirectionCounts{}] = QLaurent<Rational>(Rational(1));
  for (int n = 1; n <= steps; ++n) {
    // Collect this layer's count vectors, then fill entries independently.
    std::vector<DirectionCounts> layer;
    enumerate_counts(lattice, n, [&](DirectionCounts& v) { layer.push_back(v); });
    std::vector<QLaurent<Rational>> values(layer.size());
    parallel_for(layer.size(), threads, [&](std::size_t i) {
      const DirectionCounts& v = layer[i];
      QLaurent<Rational> acc;
      for (int dir = 0; dir < 6; ++dir) {
        const Step& s = kSteps[dir];
        DirectionCounts u{v.m1 - s.dm1, v.m2 - s.dm2, v.l1 - s.dl1,
                          v.l2 - s.dl2, v.r1 - s.dr1, v.r2 - s.dr2};
        if (u.m1 < 0 || u.m2 < 0 || u.l1 < 0 || u.l2 < 0 || u.r1 < 0 || u.r2 < 0) continue;
        auto it = prev.find(u);
        if (it == prev.end()) continue;
        int shift = step_area_doubled(v, dir);
        for (const auto& [d, c] : it->second.terms()) acc.add_term(d + shift, c);
      }
      values[i] = std::move(acc);
    });
    std::map<DirectionCounts, QLaurent<Rational>> cur;
    for (std::size_t i = 0; i < layer.size(); ++i)
      if (!values[i].is_zero()) cur.emplace(layer[i], std::move(values[i]));
    prev = std::move(cur);
  }
  return prev;
}

AreaGF closed_gf(Lattice lattice, int steps, int threads) {
  auto classes = recurrence_gf(lattice, steps, threads);
  AreaGF gf;
  gf.lattice = lattice;
  for (const auto& [counts, zq] : classes) {
    if (!counts.closed()) continue;
    MultiPoly mono = counts.monomial();
    for (const auto& [d, c] : zq.terms()) {
      MultiPoly m = mono;
      m.scale(c);
      gf.add(d, m);
    }
  }
  return gf;
}

AreaGF dfs_oracle(Lattice lattice, int steps) {
  if (steps < 0) throw std::invalid_argument("dfs_oracle: negative step count");
  if (steps > 10)
    throw std::invalid_argument("dfs_oracle: refusing N > 10 (6^N step sequences)");

  AreaGF gf;
  gf.lattice = lattice;
  std::map<std::pair<DirectionCounts, int>, Integer> acc;

  DirectionCounts counts;
  int x = 0, y = 0, cross = 0; // cross accumulates sum(x*dy - y*dx) = 2A

  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      if (x == 0 && y == 0) acc[{counts, cross}] += 1;
      return;
    }
    // Cheapest return needs max(|x|,|y|) steps when signs allow a diagonal,
    // |x|+|y| otherwise; both are bounded below by max(|x|, |y|).
    if (std::max(std::abs(x), std::abs(y)) > remaining) return;
    for (int dir = 0; dir < 6; ++dir) {
      if (!step_allowed(lattice, dir)) continue;
      const Step& s = kSteps[dir];
      cross += x * s.dy - y * s.dx;
      x += s.dx;
      y += s.dy;
      counts.m1 += s.dm1; counts.m2 += s.dm2;
      counts.l1 += s.dl1; counts.l2 += s.dl2;
      counts.r1 += s.dr1; counts.r2 += s.dr2;
      rec(remaining - 1);
      counts.m1 -= s.dm1; counts.m2 -= s.dm2;
      counts.l1 -= s.dl1; counts.l2 -= s.dl2;
      counts.r1 -= s.dr1; counts.r2 -= s.dr2;
      x -= s.dx;
      y -= s.dy;
      cross -= (x * s.dy - y * s.dx);
    }
  };
  rec(steps);

  for (const auto& [key, count] : acc) {
    MultiPoly m = key.first.monomial();
    m.scale(Rational(count));
    gf.add(key.second, m);
  }
  return gf;
}

Integer total_closed(Lattice lattice, int steps) {
  if (steps < 0) throw std::invalid_argument("total_closed: negative step count");
  if (lattice == Lattice::Square) {
    if (steps % 2 != 0) return 0;
    Integer b = binomial(steps, steps / 2);
    return b * b;
  }
  if (lattice == Lattice::ChiralTriangular) {
    if (steps % 3 != 0) return 0;
    long k = steps / 3;
    return multinomial(steps, {k, k}); // N! / (k! k! k!)
  }
  Integer total = 0;
  for (long n = 0; n <= steps; ++n) {
    Integer inner = 0;
    for (long k = 0; k <= n; ++k) inner += pow_integer(binomial(n, k), 3);
    Integer sign_pow = pow_integer(Integer(-2), steps - n);
    total += sign_pow * binomial(steps, n) * inner;
  }
  return total;
}

AreaGF chiral_gf(int steps) {
  AreaGF gf = closed_gf(Lattice::ChiralTriangular, steps);
  gf.lattice = Lattice::ChiralTriangular;
  return gf;
}

AreaGF AreaGF::reversed_steps() const {
  GenSubst swap;
  swap[static_cast<int>(Gen::A)] = MultiPoly::generator(Gen::Ap);
  swap[static_cast<int>(Gen::Ap)] = MultiPoly::generator(Gen::A);
  swap[static_cast<int>(Gen::B)] = MultiPoly::generator(Gen::Bp);
  swap[static_cast<int>(Gen::Bp)] = MultiPoly::generator(Gen::B);
  swap[static_cast<int>(Gen::C)] = MultiPoly::generator(Gen::Cp);
  swap[static_cast<int>(Gen::Cp)] = MultiPoly::generator(Gen::C);
  AreaGF out;
  out.lattice = lattice;
  for (const auto& [d, poly] : entries) out.add(d, poly.substitute(swap));
  return out;
}

} // namespace latwalk
