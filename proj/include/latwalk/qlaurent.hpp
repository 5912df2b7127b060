#pragma once

#include "latwalk/multipoly.hpp"
#include "latwalk/real.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace latwalk {

// ---------------------------------------------------------------------------
// Small ring helpers so the series / Laurent machinery can stay generic.
// ---------------------------------------------------------------------------

inline bool ring_is_zero(const Rational& x) { return x == 0; }
inline bool ring_is_zero(const MultiPoly& x) { return x.is_zero(); }
inline bool ring_is_zero(const Complex& x) { return x.is_zero(); }

inline void ring_div_int(Rational& x, long n) { x /= n; }
inline void ring_div_int(MultiPoly& x, long n) { x.scale(Rational(1, n)); }
inline void ring_div_int(Complex& x, long n) { x /= Complex(Real(n)); }

inline Rational ring_inverse(const Rational& x) {
  if (x == 0) throw std::domain_error("inverse of zero");
  return 1 / x;
}
inline MultiPoly ring_inverse(const MultiPoly& x) { return x.inverse(); }
inline Complex ring_inverse(const Complex& x) { return Complex(Real(1L)) / x; }

// ---------------------------------------------------------------------------
// Laurent polynomial in Q^(1/2).
// ---------------------------------------------------------------------------

/// Laurent polynomial in Q^(1/2) over a coefficient ring R. Exponents are
/// stored doubled so half-integer powers stay integral: key d means Q^(d/2).
template <class R>
class QLaurent {
  std::map<int, R> terms_;

public:
  QLaurent() = default;
  QLaurent(const R& c) {
    if (!ring_is_zero(c)) terms_[0] = c;
  }

  static QLaurent qpow(int doubled_exp, const R& c = R(1L)) {
    QLaurent l;
    if (!ring_is_zero(c)) l.terms_[doubled_exp] = c;
    return l;
  }

  const std::map<int, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  R coeff(int doubled_exp) const {
    auto it = terms_.find(doubled_exp);
    return it == terms_.end() ? R{} : it->second;
  }

  int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  void add_term(int d, const R& c) {
    if (ring_is_zero(c)) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_.emplace(d, c);
    } else {
      it->second += c;
      if (ring_is_zero(it->second)) terms_.erase(it);
    }
  }

  QLaurent operator-() const {
    QLaurent r(*this);
    for (auto& [d, c] : r.terms_) c = -c;
    return r;
  }

  QLaurent& operator+=(const QLaurent& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }
  QLaurent& operator-=(const QLaurent& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
  }
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { a += b; return a; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { a -= b; return a; }

  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
    return r;
  }
  QLaurent& operator*=(const QLaurent& o) { *this = *this * o; return *this; }

  QLaurent& scale(const R& c) {
    if (ring_is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [d, v] : terms_) v = v * c;
    return *this;
  }

  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

  /// The involution Q -> Q^(-1).
  QLaurent invert_q() const {
    QLaurent r;
    for (const auto& [d, c] : terms_) r.terms_[-d] = c;
    return r;
  }

  /// Multiplicative inverse for single-term values.
  QLaurent inverse() const {
    if (terms_.size() != 1) throw std::domain_error("QLaurent::inverse: not a unit");
    const auto& [d, c] = *terms_.begin();
    return qpow(-d, ring_inverse(c));
  }

  /// Substitute Q = 1 (sum all coefficients).
  R at_q_one() const {
    R s{};
    for (const auto& [d, c] : terms_) s += c;
    return s;
  }

  template <class F>
  auto map_coeffs(F&& f) const -> QLaurent<decltype(f(std::declval<R>()))> {
    QLaurent<decltype(f(std::declval<R>()))> out;
    for (const auto& [d, c] : terms_) out.add_term(d, f(c));
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
      if (!first) os << "  +  ";
      first = false;
      if constexpr (std::is_same_v<R, Rational>) {
        os << c.get_str();
      } else {
        os << "(" << c.str() << ")";
      }
      if (d != 0) {
        os << "*Q^";
        if (d % 2 == 0) {
          os << d / 2;
        } else {
          os << "(" << d << "/2)";
        }
      }
    }
    return os.str();
  }
};

inline void ring_div_int(QLaurent<Rational>& x, long n) {
  QLaurent<Rational> r;
  for (const auto& [d, c] : x.terms()) r.add_term(d, c / n);
  x = r;
}
inline void ring_div_int(QLaurent<MultiPoly>& x, long n) {
  QLaurent<MultiPoly> r;
  for (const auto& [d, c] : x.terms()) {
    MultiPoly m = c;
    m.scale(Rational(1, n));
    r.add_term(d, m);
  }
  x = r;
}
template <class R>
bool ring_is_zero(const QLaurent<R>& x) { return x.is_zero(); }
template <class R>
QLaurent<R> ring_inverse(const QLaurent<R>& x) { return x.inverse(); }

// ---------------------------------------------------------------------------
// Quotient ring for exact root-of-unity work.
// ---------------------------------------------------------------------------

/// Exact quotient of the Q^(1/2)-Laurent ring by the two relations every
/// primitive evaluation point Q = e^(2*pi*i*p/q) satisfies:
///   Q^q = 1          (doubled exponents live mod 2q)
///   1 + Q + ... + Q^(q-1) = 0
/// Equality is decided on canonical representatives (per-parity mean removed).
/// Trace identities for walks shorter than q hold exactly in this ring.
template <class R>
class QMod {
  int q_ = 0;
  std::vector<R> slots_; // index = doubled exponent mod 2q

public:
  /// Default-constructed value acts as a modulus-free additive zero, so the
  /// generic series code can use R{} for zero.
  QMod() = default;
  explicit QMod(int q) : q_(q), slots_(2 * q, R{}) {
    if (q < 2) throw std::invalid_argument("QMod: q must be >= 2");
  }

  static QMod unit(int q) {
    QMod m(q);
    m.add(0, R(1L));
    return m;
  }

  int modulus() const { return q_; }
  const std::vector<R>& slots() const { return slots_; }

  static QMod from_laurent(int q, const QLaurent<R>& l) {
    QMod m(q);
    for (const auto& [d, c] : l.terms()) m.add(d, c);
    return m;
  }

  void add(int doubled_exp, const R& c) {
    int n = 2 * q_;
    int i = ((doubled_exp % n) + n) % n;
    slots_[i] += c;
  }

  QMod& operator+=(const QMod& o) {
    if (o.q_ == 0) return *this;
    if (q_ == 0) { *this = o; return *this; }
    check_same(o);
    for (int i = 0; i < 2 * q_; ++i) slots_[i] += o.slots_[i];
    return *this;
  }
  QMod& operator-=(const QMod& o) {
    if (o.q_ == 0) return *this;
    if (q_ == 0) { *this = -o; return *this; }
    check_same(o);
    for (int i = 0; i < 2 * q_; ++i) slots_[i] -= o.slots_[i];
    return *this;
  }
  friend QMod operator+(QMod a, const QMod& b) { a += b; return a; }
  friend QMod operator-(QMod a, const QMod& b) { a -= b; return a; }

  QMod operator-() const {
    QMod r(*this);
    for (auto& s : r.slots_) s = -s;
    return r;
  }

  friend QMod operator*(const QMod& a, const QMod& b) {
    if (a.q_ == 0 || b.q_ == 0) return QMod{};
    a.check_same(b);
    QMod r(a.q_);
    int n = 2 * a.q_;
    for (int i = 0; i < n; ++i) {
      if (ring_is_zero(a.slots_[i])) continue;
      for (int j = 0; j < n; ++j) {
        if (ring_is_zero(b.slots_[j])) continue;
        int k = i + j;
        if (k >= n) k -= n;
        r.slots_[k] += a.slots_[i] * b.slots_[j];
      }
    }
    return r;
  }
  QMod& operator*=(const QMod& o) { *this = *this * o; return *this; }

  QMod& scale(const R& c) {
    for (auto& s : slots_) s = s * c;
    return *this;
  }

  QMod& scale_rational(const Rational& c) {
    for (auto& s : slots_) scale_one(s, c);
    return *this;
  }

  /// Canonical representative: subtract the mean of each parity class
  /// (the defining relation makes the all-ones vector of a class vanish).
  QMod canonical() const {
    if (q_ == 0) return *this;
    QMod r(*this);
    for (int par = 0; par < 2; ++par) {
      R mean{};
      for (int i = par; i < 2 * q_; i += 2) mean += r.slots_[i];
      scale_one(mean, Rational(1, q_));
      for (int i = par; i < 2 * q_; i += 2) r.slots_[i] -= mean;
    }
    return r;
  }

  bool canonically_zero() const {
    QMod c = canonical();
    for (const auto& s : c.slots_)
      if (!ring_is_zero(s)) return false;
    return true;
  }

  friend bool operator==(const QMod& a, const QMod& b) {
    if (a.q_ == 0) return b.canonically_zero();
    if (b.q_ == 0) return a.canonically_zero();
    a.check_same(b);
    QMod ca = a.canonical(), cb = b.canonical();
    return ca.slots_ == cb.slots_;
  }
  friend bool operator!=(const QMod& a, const QMod& b) { return !(a == b); }

  /// Lift back to the unique Laurent polynomial supported on doubled
  /// exponents |d| <= max_abs_doubled. Requires q >= max_abs_doubled + 2 so
  /// both parity classes have an exponent outside the window; throws if the
  /// class contents are inconsistent with such a lift.
  QLaurent<R> to_laurent(int max_abs_doubled) const {
    int n = 2 * q_;
    if (q_ < max_abs_doubled + 2)
      throw std::domain_error("QMod::to_laurent: q too small to resolve the area window");
    // Out-of-window slots of each parity must share one value (the lift gauge).
    std::array<R, 2> gauge = {R{}, R{}};
    std::array<bool, 2> found = {false, false};
    auto symmetric = [&](int i) { return i <= q_ ? i : i - n; };
    for (int i = 0; i < n; ++i) {
      int rep = symmetric(i);
      if (rep > max_abs_doubled || rep < -max_abs_doubled) {
        int par = i & 1;
        if (!found[par]) {
          gauge[par] = slots_[i];
          found[par] = true;
        }
      }
    }
    QLaurent<R> out;
    for (int i = 0; i < n; ++i) {
      int rep = symmetric(i);
      int par = i & 1;
      R c = slots_[i] - gauge[par];
      if (rep > max_abs_doubled || rep < -max_abs_doubled) {
        if (!ring_is_zero(c))
          throw std::domain_error("QMod::to_laurent: content outside the stated window");
      } else {
        out.add_term(rep, c);
      }
    }
    return out;
  }

private:
  static void scale_one(Rational& x, const Rational& c) { x *= c; }
  static void scale_one(MultiPoly& x, const Rational& c) { x.scale(c); }

  void check_same(const QMod& o) const {
    if (q_ != o.q_) throw std::invalid_argument("QMod: modulus mismatch");
  }
};

template <class R>
bool ring_is_zero(const QMod<R>& x) {
  return x.canonically_zero();
}

template <class R>
void ring_div_int(QMod<R>& x, long n) { x.scale_rational(Rational(1, n)); }

} // namespace latwalk
