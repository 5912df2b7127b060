#pragma once

#include "latwalk/eval.hpp"
#include "latwalk/qlaurent.hpp"

#include <map>
#include <vector>

namespace latwalk {

enum class Lattice { Square, Triangular, ChiralTriangular };

inline const char* lattice_name(Lattice l) {
  switch (l) {
    case Lattice::Square: return "square";
    case Lattice::Triangular: return "triangular";
    case Lattice::ChiralTriangular: return "chiral-triangular";
  }
  return "?";
}

/// Per-direction step counts on the deformed triangular lattice:
/// m1/m2 right/left, l1/l2 up/down, r1/r2 down-left/up-right.
struct DirectionCounts {
  int m1 = 0, m2 = 0, l1 = 0, l2 = 0, r1 = 0, r2 = 0;

  int total() const { return m1 + m2 + l1 + l2 + r1 + r2; }
  bool closed() const { return m1 + r2 == m2 + r1 && l1 + r2 == l2 + r1; }

  auto operator<=>(const DirectionCounts&) const = default;

  /// a^m1 a'^m2 b^l1 b'^l2 c^r1 c'^r2
  MultiPoly monomial() const {
    ExpVec e = exp_zero();
    e[static_cast<int>(Gen::A)] = static_cast<int16_t>(m1);
    e[static_cast<int>(Gen::Ap)] = static_cast<int16_t>(m2);
    e[static_cast<int>(Gen::B)] = static_cast<int16_t>(l1);
    e[static_cast<int>(Gen::Bp)] = static_cast<int16_t>(l2);
    e[static_cast<int>(Gen::C)] = static_cast<int16_t>(r1);
    e[static_cast<int>(Gen::Cp)] = static_cast<int16_t>(r2);
    return MultiPoly::monomial(e, 1);
  }
};

/// Refined signed-area generating function: doubled area 2A -> polynomial in
/// the six step variables. Square-lattice entries carry even 2A only.
struct AreaGF {
  Lattice lattice = Lattice::Triangular;
  std::map<int, MultiPoly> entries;

  bool operator==(const AreaGF& o) const {
    return lattice == o.lattice && entries == o.entries;
  }

  void add(int doubled_area, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = entries.emplace(doubled_area, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) entries.erase(it);
    }
  }

  /// Specialize the step variables; drops areas with vanishing counts.
  std::map<int, Rational> specialize(const GenAssign& assign) const {
    std::map<int, Rational> out;
    for (const auto& [d, poly] : entries) {
      Rational v = poly.eval(assign);
      if (v != 0) out[d] = v;
    }
    return out;
  }

  /// Collapse to a Q-Laurent polynomial with polynomial coefficients.
  QLaurent<MultiPoly> as_qlaurent() const {
    QLaurent<MultiPoly> l;
    for (const auto& [d, poly] : entries) l.add_term(d, poly);
    return l;
  }

  /// Specialize and collapse to a rational-coefficient Laurent polynomial.
  QLaurent<Rational> specialized_qlaurent(const GenAssign& assign) const {
    QLaurent<Rational> l;
    for (const auto& [d, v] : specialize(assign)) l.add_term(d, v);
    return l;
  }

  /// Swap a<->a', b<->b', c<->c' in every coefficient (walk reversal).
  AreaGF reversed_steps() const;
};

/// Z_{m1,m2,l1,l2,r1,r2}(Q) for every count vector with total N, with the
/// common monomial factored out (entries are pure Q-Laurent with integer
/// coefficients; the per-class monomial is reattached by closed_gf).
std::map<DirectionCounts, QLaurent<Rational>> recurrence_gf(Lattice lattice, int steps,
                                                            int threads = 1);

/// Refined generating function for closed walks of length N.
AreaGF closed_gf(Lattice lattice, int steps, int threads = 1);

/// Exhaustive step-sequence oracle (shoelace area on the deformed
/// embedding). Refuses N > 10.
AreaGF dfs_oracle(Lattice lattice, int steps);

/// Total number of closed walks of length N (binomial formulas).
Integer total_closed(Lattice lattice, int steps);

/// closed_gf(triangular) with a', b', c' set to zero.
AreaGF chiral_gf(int steps);

/// Largest admissible |2A| for an N-step walk.
int area_bound_doubled(Lattice lattice, int steps);

} // namespace latwalk
