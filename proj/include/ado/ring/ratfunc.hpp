#pragma once

#include <complex>
#include <ostream>
#include <utility>

#include "ado/ring/laurent.hpp"

namespace ado {

/// Element num/den of the field F(t).
///
/// Canonical form: gcd(num, den) = 1 in F[t, t^-1], den has lowest exponent
/// 0 and lowest coefficient 1. With that, value equality is representation
/// equality.
template <class F>
class RationalFunction {
 public:
  using Poly = Laurent<F>;

  RationalFunction() : den_(F(1)) {}
  RationalFunction(F c) : num_(std::move(c)), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(int c) : RationalFunction(F(c)) {}        // NOLINT(google-explicit-constructor)
  explicit RationalFunction(Poly num) : num_(std::move(num)), den_(F(1)) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RationalFunction monomial(int exponent, F c = F(1)) { return RationalFunction(Poly(std::move(c), exponent)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RationalFunction inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RationalFunction(den_, num_);
  }

  /// t ↦ t^factor.
  RationalFunction substitute_power(int factor) const {
    return RationalFunction(num_.substitute_power(factor), den_.substitute_power(factor));
  }

  template <class Fn>
  auto map_coeffs(Fn&& fn) const {
    using G = decltype(fn(std::declval<const F&>()));
    return RationalFunction<G>(num_.map_coeffs(fn), den_.map_coeffs(fn));
  }

  std::complex<double> evaluate(std::complex<double> t) const { return num_.evaluate(t) / den_.evaluate(t); }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  RationalFunction& operator+=(const RationalFunction& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (den_ == rhs.den_) {
      num_ += rhs.num_;
      if (!den_.is_one()) normalize();
      else if (num_.is_zero()) den_ = Poly(F(1));
      return *this;
    }
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    normalize();
    return *this;
  }
  RationalFunction& operator-=(const RationalFunction& rhs) { return *this += -rhs; }

  RationalFunction& operator*=(const RationalFunction& rhs) {
    if (is_zero()) return *this;
    if (rhs.is_zero()) return *this = RationalFunction();
    num_ = num_ * rhs.num_;
    if (rhs.den_.is_one()) {
      if (!den_.is_one()) normalize();
      return *this;
    }
    den_ = den_ * rhs.den_;
    normalize();
    return *this;
  }
  RationalFunction& operator/=(const RationalFunction& rhs) { return *this *= rhs.inverse(); }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = Poly(F(1));
      return;
    }
    if (!den_.is_monomial()) {
      Poly g = poly_gcd(num_, den_);
      if (g.term_count() > 1) {
        num_ = poly_divmod(num_, g).first.shifted(num_.low());
        den_ = poly_divmod(den_, g).first.shifted(den_.low());
      }
    }
    const int shift = den_.low();
    const F scale = ado::inverse(den_.lowest_coeff());
    num_ = (num_ * scale).shifted(-shift);
    den_ = (den_ * scale).shifted(-shift);
  }

  Poly num_;
  Poly den_;
};

template <class F>
bool is_zero(const RationalFunction<F>& r) {
  return r.is_zero();
}

template <class F>
std::ostream& operator<<(std::ostream& os, const RationalFunction<F>& r) {
  if (r.is_laurent()) return os << r.num();
  return os << "[" << r.num() << "] / [" << r.den() << "]";
}

template <class F>
RationalFunction<F> inverse(const RationalFunction<F>& r) {
  return r.inverse();
}

/// Explicit canonicalization of a (num, den) pair; idempotent.
template <class F>
RationalFunction<F> normalize(const Laurent<F>& num, const Laurent<F>& den) {
  return RationalFunction<F>(num, den);
}

/// Element of Q(ζ_{2N})(t), t = ζ^λ.
using WeightLaurent = Laurent<CycNum>;
using WeightRat = RationalFunction<CycNum>;

/// Element of Q(x), used for the classical Burau side.
using XLaurent = Laurent<Rational>;
using XRat = RationalFunction<Rational>;

}  // namespace ado
