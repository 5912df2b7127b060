#pragma once

#include "latwalk/qlaurent.hpp"

#include <vector>

namespace latwalk {

// one/scaling helpers for the ring types used as series coefficients
inline Rational ring_one_like(const Rational&) { return 1; }
inline MultiPoly ring_one_like(const MultiPoly&) { return MultiPoly(1); }
inline Complex ring_one_like(const Complex&) { return Complex(1L); }
template <class R>
QLaurent<R> ring_one_like(const QLaurent<R>&) { return QLaurent<R>(R(1L)); }
template <class R>
QMod<R> ring_one_like(const QMod<R>& x) { return QMod<R>::unit(x.modulus()); }

inline void ring_mul_int(Rational& x, long n) { x *= n; }
inline void ring_mul_int(MultiPoly& x, long n) { x.scale(Rational(n)); }
inline void ring_mul_int(Complex& x, long n) { x = Real(n) * x; }
template <class R>
void ring_mul_int(QLaurent<R>& x, long n) {
  QLaurent<R> r;
  for (const auto& [d, c] : x.terms()) {
    R t = c;
    ring_mul_int(t, n);
    r.add_term(d, t);
  }
  x = r;
}
template <class R>
void ring_mul_int(QMod<R>& x, long n) { x.scale_rational(Rational(n)); }

/// Truncated power series in z over a ring R, coefficients 0..order.
template <class R>
class ZSeries {
  std::vector<R> c_;

public:
  ZSeries() : c_(1) {}
  explicit ZSeries(int order) : c_(order + 1) {
    if (order < 0) throw std::invalid_argument("ZSeries: negative order");
  }
  explicit ZSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.resize(1);
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int n) const { return c_[n]; }
  R& operator[](int n) { return c_[n]; }
  const std::vector<R>& coeffs() const { return c_; }

  ZSeries truncated(int order) const {
    ZSeries r(order);
    for (int n = 0; n <= order && n <= this->order(); ++n) r[n] = c_[n];
    return r;
  }

  ZSeries& operator+=(const ZSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("ZSeries: order mismatch");
    for (int n = 0; n <= order(); ++n) c_[n] += o[n];
    return *this;
  }
  ZSeries& operator-=(const ZSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("ZSeries: order mismatch");
    for (int n = 0; n <= order(); ++n) c_[n] -= o[n];
    return *this;
  }
  friend ZSeries operator+(ZSeries a, const ZSeries& b) { a += b; return a; }
  friend ZSeries operator-(ZSeries a, const ZSeries& b) { a -= b; return a; }

  friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    int ord = std::min(a.order(), b.order());
    ZSeries r(ord);
    for (int i = 0; i <= ord; ++i) {
      if (ring_is_zero(a[i])) continue;
      for (int j = 0; i + j <= ord; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  }

  friend bool operator==(const ZSeries& a, const ZSeries& b) { return a.c_ == b.c_; }
};

/// log of a series with unit constant term, via the coefficient recursion
///   n*b_n = n*Z_n - sum_{k=1}^{n-1} k*b_k*Z_{n-k}.
template <class R>
ZSeries<R> series_log(const ZSeries<R>& z) {
  if (!ring_is_zero(z[0] - ring_one_like(z[0])))
    throw std::invalid_argument("series_log: constant term is not 1");
  int ord = z.order();
  ZSeries<R> b(ord);
  for (int n = 1; n <= ord; ++n) {
    R acc = z[n];
    for (int k = 1; k < n; ++k) {
      R t = b[k] * z[n - k];
      ring_mul_int(t, k);
      ring_div_int(t, n);
      acc -= t;
    }
    b[n] = acc;
  }
  return b;
}

/// exp of a series with zero constant term: n*Z_n = sum_{k=1}^{n} k*B_k*Z_{n-k}.
template <class R>
ZSeries<R> series_exp(const ZSeries<R>& b) {
  if (!ring_is_zero(b[0])) throw std::invalid_argument("series_exp: constant term is not 0");
  int ord = b.order();
  ZSeries<R> z(ord);
  z[0] = ring_one_like(b[0]);
  for (int n = 1; n <= ord; ++n) {
    R acc{};
    for (int k = 1; k <= n; ++k) {
      R t = b[k] * z[n - k];
      ring_mul_int(t, k);
      acc += t;
    }
    ring_div_int(acc, n);
    z[n] = acc;
  }
  return z;
}

/// Truncated Laurent series in X over a ring R. Coefficients live on a fixed
/// exponent window [wmin, wmax]; products landing outside are dropped. The
/// mirror-curve solver validates its window choice with residual checks.
template <class R>
class XSeries {
  int wmin_ = 0, wmax_ = -1;
  std::vector<R> c_; // exponent k stored at c_[k - wmin_]

public:
  XSeries() = default;
  XSeries(int wmin, int wmax) : wmin_(wmin), wmax_(wmax), c_(wmax - wmin + 1) {
    if (wmax < wmin) throw std::invalid_argument("XSeries: bad window");
  }

  int wmin() const { return wmin_; }
  int wmax() const { return wmax_; }

  const R& coeff(int k) const {
    static const R zero{};
    if (k < wmin_ || k > wmax_) return zero;
    return c_[k - wmin_];
  }

  void set_coeff(int k, R v) {
    if (k < wmin_ || k > wmax_) return;
    c_[k - wmin_] = std::move(v);
  }

  void add_coeff(int k, const R& v) {
    if (k < wmin_ || k > wmax_) return;
    c_[k - wmin_] += v;
  }

  static XSeries constant(int wmin, int wmax, const R& v) {
    XSeries s(wmin, wmax);
    s.set_coeff(0, v);
    return s;
  }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!ring_is_zero(v)) return false;
    return true;
  }

  /// Lowest exponent with a nonzero coefficient (wmax+1 when empty).
  int min_nonzero_exp() const {
    for (int k = wmin_; k <= wmax_; ++k)
      if (!ring_is_zero(coeff(k))) return k;
    return wmax_ + 1;
  }

  XSeries operator-() const {
    XSeries r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
  }

  XSeries& operator+=(const XSeries& o) {
    check_window(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  XSeries& operator-=(const XSeries& o) {
    check_window(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend XSeries operator+(XSeries a, const XSeries& b) { a += b; return a; }
  friend XSeries operator-(XSeries a, const XSeries& b) { a -= b; return a; }

  friend XSeries operator*(const XSeries& a, const XSeries& b) {
    a.check_window(b);
    XSeries r(a.wmin_, a.wmax_);
    for (int i = a.wmin_; i <= a.wmax_; ++i) {
      if (ring_is_zero(a.coeff(i))) continue;
      for (int j = b.wmin_; j <= b.wmax_; ++j) {
        int k = i + j;
        if (k < a.wmin_ || k > a.wmax_) continue;
        if (ring_is_zero(b.coeff(j))) continue;
        r.c_[k - a.wmin_] += a.coeff(i) * b.coeff(j);
      }
    }
    return r;
  }

  XSeries& scale(const R& v) {
    for (auto& x : c_) x = x * v;
    return *this;
  }

  /// Multiply by X^s (shift exponents; content leaving the window is dropped).
  XSeries shifted(int s) const {
    XSeries r(wmin_, wmax_);
    for (int k = wmin_; k <= wmax_; ++k) {
      int t = k + s;
      if (t >= wmin_ && t <= wmax_) r.set_coeff(t, coeff(k));
    }
    return r;
  }

  /// X -> (scale * X): the coefficient at X^k picks up a factor scale_pow(k).
  template <class F>
  XSeries rescaled(F&& scale_pow) const {
    XSeries r(wmin_, wmax_);
    for (int k = wmin_; k <= wmax_; ++k) {
      if (ring_is_zero(coeff(k))) continue;
      r.set_coeff(k, coeff(k) * scale_pow(k));
    }
    return r;
  }

  /// Multiplicative inverse; the lowest nonzero coefficient must be a unit.
  XSeries inverse() const {
    int m = min_nonzero_exp();
    if (m > wmax_) throw std::domain_error("XSeries::inverse: zero series");
    R lead_inv = ring_inverse(coeff(m));
    XSeries r(wmin_, wmax_);
    std::vector<R> u(wmax_ - wmin_ + 1); // inverse of the unit part, powers 0..
    int len = static_cast<int>(u.size());
    u[0] = lead_inv;
    for (int n = 1; n < len; ++n) {
      R acc{};
      for (int j = 1; j <= n; ++j) {
        if (m + j > wmax_) break;
        acc += coeff(m + j) * u[n - j];
      }
      u[n] = -(lead_inv * acc);
    }
    for (int n = 0; n < len; ++n) r.add_coeff(n - m, u[n]);
    return r;
  }

private:
  void check_window(const XSeries& o) const {
    if (wmin_ != o.wmin_ || wmax_ != o.wmax_)
      throw std::invalid_argument("XSeries: window mismatch");
  }
};

template <class R>
bool ring_is_zero(const XSeries<R>& x) { return x.is_zero(); }
template <class R>
XSeries<R> ring_one_like(const XSeries<R>& x) {
  return XSeries<R>::constant(x.wmin(), x.wmax(), ring_one_like(R{}));
}
template <class R>
void ring_div_int(XSeries<R>& x, long n) {
  for (int k = x.wmin(); k <= x.wmax(); ++k) {
    R v = x.coeff(k);
    ring_div_int(v, n);
    x.set_coeff(k, std::move(v));
  }
}
template <class R>
void ring_mul_int(XSeries<R>& x, long n) {
  for (int k = x.wmin(); k <= x.wmax(); ++k) {
    R v = x.coeff(k);
    ring_mul_int(v, n);
    x.set_coeff(k, std::move(v));
  }
}
template <class R>
XSeries<R> ring_inverse(const XSeries<R>& x) { return x.inverse(); }

} // namespace latwalk
