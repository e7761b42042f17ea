#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace orthoposet {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Gaussian rational a + b*i, the exact scalar field for all symbolic work.
// Every catalog object has rational entries, so this field decides all
// symbolic claims without tolerances.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() = default;
  Scalar(int v) : re(v) {}  // implicit: 0, 1, -1 literals read naturally
  Scalar(long v) : re(v) {}
  Scalar(Rational r) : re(std::move(r)) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  Scalar operator-() const { return {-re, -im}; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    Rational n = b.norm2();
    if (n == 0) throw std::domain_error("Scalar: division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
  Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

inline Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

// Text format: "a/b" for rationals, "a/b+c/d*i" for complex values.
std::string format_rational(const Rational& r);
Rational parse_rational(const std::string& text);

std::string format_scalar(const Scalar& s);
Scalar parse_scalar(const std::string& text);

double to_double(const Rational& r);

}  // namespace orthoposet
