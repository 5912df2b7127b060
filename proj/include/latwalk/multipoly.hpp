#pragma once

#include "latwalk/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace latwalk {

/// Named generators of the polynomial ring. Six hopping amplitudes, three
/// moduli, the F0 mass parameter and the two triangular specialization
/// parameters. The set is fixed; exponents may be negative (Laurent).
enum class Gen : int {
  A = 0, Ap, B, Bp, C, Cp, M1, M2, M3, R, Lam1, Lam2,
};

inline constexpr int kGenCount = 12;

inline const char* gen_name(Gen g) {
  static const char* names[kGenCount] = {"a", "a'", "b", "b'", "c", "c'",
                                         "m1", "m2", "m3", "R", "lam1", "lam2"};
  return names[static_cast<int>(g)];
}

inline std::optional<Gen> gen_from_name(const std::string& s) {
  for (int i = 0; i < kGenCount; ++i)
    if (s == gen_name(static_cast<Gen>(i))) return static_cast<Gen>(i);
  return std::nullopt;
}

/// Dense exponent vector over the fixed generator set.
using ExpVec = std::array<int16_t, kGenCount>;

inline ExpVec exp_zero() { ExpVec e{}; e.fill(0); return e; }

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  for (int i = 0; i < kGenCount; ++i) r[i] = static_cast<int16_t>(a[i] + b[i]);
  return r;
}

/// Multivariate Laurent polynomial over Rational with the fixed generator set.
/// No zero coefficients are stored; the term map keeps a canonical order.
class MultiPoly {
  std::map<ExpVec, Rational> terms_;

public:
  MultiPoly() = default;
  MultiPoly(const Rational& c) {
    if (c != 0) terms_[exp_zero()] = c;
  }
  MultiPoly(long c) : MultiPoly(Rational(c)) {}

  static MultiPoly generator(Gen g, int power = 1) {
    MultiPoly p;
    if (power == 0) return MultiPoly(1);
    ExpVec e = exp_zero();
    e[static_cast<int>(g)] = static_cast<int16_t>(power);
    p.terms_[e] = 1;
    return p;
  }

  static MultiPoly monomial(const ExpVec& e, const Rational& c) {
    MultiPoly p;
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  const std::map<ExpVec, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == exp_zero());
  }

  Rational constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::domain_error("MultiPoly: not a constant");
    return terms_.begin()->second;
  }

  void add_term(const ExpVec& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

  MultiPoly& scale(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend MultiPoly operator*(const Rational& c, MultiPoly p) { p.scale(c); return p; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Multiplicative inverse, defined for single-term polynomials only.
  MultiPoly inverse() const {
    if (terms_.size() != 1) throw std::domain_error("MultiPoly::inverse: not a unit (monomial) ");
    const auto& [e, c] = *terms_.begin();
    ExpVec ne;
    for (int i = 0; i < kGenCount; ++i) ne[i] = static_cast<int16_t>(-e[i]);
    return monomial(ne, 1 / c);
  }

  /// Exact division by a monomial or rational constant.
  MultiPoly div_exact(const MultiPoly& d) const { return *this * d.inverse(); }

  /// Substitute polynomials for a subset of generators (powers must be >= 0
  /// for substituted generators).
  MultiPoly substitute(const std::array<std::optional<MultiPoly>, kGenCount>& map) const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
      MultiPoly t(c);
      ExpVec rest = exp_zero();
      for (int i = 0; i < kGenCount; ++i) {
        if (e[i] == 0) continue;
        if (map[i].has_value()) {
          if (e[i] < 0) {
            MultiPoly inv = map[i]->inverse();
            for (int k = 0; k < -e[i]; ++k) t *= inv;
          } else {
            for (int k = 0; k < e[i]; ++k) t *= *map[i];
          }
        } else {
          rest[i] = e[i];
        }
      }
      out += t * monomial(rest, 1);
    }
    return out;
  }

  /// Full numeric evaluation. Every generator that appears must be assigned.
  Rational eval(const std::array<std::optional<Rational>, kGenCount>& assign) const {
    Rational out = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < kGenCount; ++i) {
        if (e[i] == 0) continue;
        if (!assign[i].has_value())
          throw std::invalid_argument(std::string("MultiPoly::eval: generator '") +
                                      gen_name(static_cast<Gen>(i)) + "' unassigned");
        t *= pow_rational(*assign[i], e[i]);
      }
      out += t;
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.get_str();
      for (int i = 0; i < kGenCount; ++i) {
        if (e[i] == 0) continue;
        os << "*" << gen_name(static_cast<Gen>(i));
        if (e[i] != 1) os << "^" << e[i];
      }
    }
    return os.str();
  }
};

/// Assignment helpers shared by evaluation paths.
using GenAssign = std::array<std::optional<Rational>, kGenCount>;
using GenSubst = std::array<std::optional<MultiPoly>, kGenCount>;

inline GenAssign assign_all_ones() {
  GenAssign a;
  for (auto& v : a) v = Rational(1);
  return a;
}

inline GenAssign assign_amplitudes(const Rational& a, const Rational& ap, const Rational& b,
                                   const Rational& bp, const Rational& c, const Rational& cp) {
  GenAssign m;
  m[static_cast<int>(Gen::A)] = a;
  m[static_cast<int>(Gen::Ap)] = ap;
  m[static_cast<int>(Gen::B)] = b;
  m[static_cast<int>(Gen::Bp)] = bp;
  m[static_cast<int>(Gen::C)] = c;
  m[static_cast<int>(Gen::Cp)] = cp;
  for (int i = 6; i < kGenCount; ++i) m[i] = Rational(1);
  return m;
}

} // namespace latwalk
