#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace latwalk {

/// Working precision (bits) used for newly constructed Real values.
/// 53 bits reproduces IEEE double; conjecture and duality checks raise it.
int default_precision_bits();
void set_default_precision_bits(int bits);

/// RAII guard that restores the previous precision on scope exit.
class PrecisionGuard {
  int saved_;

public:
  explicit PrecisionGuard(int bits) : saved_(default_precision_bits()) {
    set_default_precision_bits(bits);
  }
  ~PrecisionGuard() { set_default_precision_bits(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;
};

/// Arbitrary-precision real number (MPFR backed, value semantics).
class Real {
  mpfr_t v_;

public:
  Real() { mpfr_init2(v_, default_precision_bits()); mpfr_set_zero(v_, 1); }
  Real(long x) { mpfr_init2(v_, default_precision_bits()); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(int x) : Real(static_cast<long>(x)) {}
  Real(double x) { mpfr_init2(v_, default_precision_bits()); mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(const mpq_class& q) {
    mpfr_init2(v_, default_precision_bits());
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(const mpz_class& z) {
    mpfr_init2(v_, default_precision_bits());
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real parse(const std::string& s) {
    Real r;
    if (mpfr_set_str(r.v_, s.c_str(), 0, MPFR_RNDN) != 0 && s != "0")
      throw std::invalid_argument("Real::parse: bad literal '" + s + "'");
    return r;
  }

  static Real pi() {
    Real r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real operator-() const { Real r(*this); mpfr_neg(r.v_, r.v_, MPFR_RNDN); return r; }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend Real operator+(Real a, const Real& b) { a += b; return a; }
  friend Real operator-(Real a, const Real& b) { a -= b; return a; }
  friend Real operator*(Real a, const Real& b) { a *= b; return a; }
  friend Real operator/(Real a, const Real& b) { a /= b; return a; }

  /// this += a*b without an intermediate temporary.
  void add_mul(const Real& a, const Real& b) { mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN); }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  friend Real abs(const Real& a) { Real r(a); mpfr_abs(r.v_, r.v_, MPFR_RNDN); return r; }
  friend Real sqrt(const Real& a) { Real r(a); mpfr_sqrt(r.v_, r.v_, MPFR_RNDN); return r; }
  friend Real exp(const Real& a) { Real r(a); mpfr_exp(r.v_, r.v_, MPFR_RNDN); return r; }
  friend Real log(const Real& a) { Real r(a); mpfr_log(r.v_, r.v_, MPFR_RNDN); return r; }
  friend Real sin(const Real& a) { Real r(a); mpfr_sin(r.v_, r.v_, MPFR_RNDN); return r; }
  friend Real cos(const Real& a) { Real r(a); mpfr_cos(r.v_, r.v_, MPFR_RNDN); return r; }
  friend Real cosh(const Real& a) { Real r(a); mpfr_cosh(r.v_, r.v_, MPFR_RNDN); return r; }
  friend Real pow(const Real& a, const Real& b) {
    Real r;
    mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  /// Decimal string with roughly full precision (for display).
  std::string str(int digits = 0) const {
    if (digits <= 0) digits = static_cast<int>(mpfr_get_prec(v_) * 0.3010) + 2;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  /// Hex-float string, round-trips exactly through parse().
  std::string hex_str() const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%Ra", v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }
};

/// Complex number over Real. Used wherever exact arithmetic meets a root of unity.
struct Complex {
  Real re, im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0L) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(long r) : re(r), im(0L) {}
  Complex(double r) : re(r), im(0L) {}
  Complex(const mpq_class& q) : re(q), im(0L) {}

  static Complex from_polar_angle(const Real& theta) {
    Complex c;
    mpfr_sin_cos(c.im.raw(), c.re.raw(), theta.raw(), MPFR_RNDN);
    return c;
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Complex operator-() const { return Complex(-re, -im); }

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }
  Complex& operator/=(const Complex& o) { *this = *this / o; return *this; }

  friend Complex operator+(Complex a, const Complex& b) { a.re += b.re; a.im += b.im; return a; }
  friend Complex operator-(Complex a, const Complex& b) { a.re -= b.re; a.im -= b.im; return a; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    Complex r;
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    if (d.is_zero()) throw std::domain_error("Complex: division by zero");
    Complex r;
    r.re = (a.re * b.re + a.im * b.im) / d;
    r.im = (a.im * b.re - a.re * b.im) / d;
    return r;
  }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  friend Complex conj(const Complex& a) { return Complex(a.re, -a.im); }
  friend Real abs(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }

  /// Principal square root. Throws on the branch cut (negative real axis).
  friend Complex csqrt(const Complex& a) {
    if (a.im.is_zero()) {
      if (a.re.sign() < 0)
        throw std::domain_error("csqrt: argument on the negative real axis (branch cut)");
      return Complex(sqrt(a.re));
    }
    Real r = abs(a);
    Real u = sqrt((r + a.re) / Real(2L));
    Real w = sqrt((r - a.re) / Real(2L));
    if (a.im.sign() < 0) w = -w;
    return Complex(u, w);
  }

  std::string str(int digits = 0) const {
    return "(" + re.str(digits) + (im.sign() < 0 ? "" : "+") + im.str(digits) + "i)";
  }
};

inline Complex operator*(const Real& a, const Complex& b) { return Complex(a * b.re, a * b.im); }

} // namespace latwalk
