#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ado/errors.hpp"

namespace ado {

using Rational = mpq_class;

/// Integer polynomial, coefficient of z^k at position k.
using IntPoly = std::vector<std::int64_t>;

namespace detail {

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
inline IntPoly exact_divide_monic(IntPoly num, const IntPoly& den) {
  assert(!den.empty() && den.back() == 1);
  trim(num);
  if (num.size() < den.size()) {
    throw std::logic_error("exact_divide_monic: degree too small");
  }
  IntPoly quot(num.size() - den.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::int64_t c = num[k + den.size() - 1];
    quot[k] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw std::logic_error("exact_divide_monic: nonzero remainder");
  return quot;
}

inline void trim(std::vector<Rational>& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

}  // namespace detail

/// Φ_M, computed as (z^M - 1) / ∏_{d | M, d < M} Φ_d.
inline IntPoly cyclotomic_polynomial(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
  static std::mutex mutex;
  static std::map<int, IntPoly> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(order); it != memo.end()) return it->second;
  }
  IntPoly p(static_cast<std::size_t>(order) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(order)] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) p = detail::exact_divide_monic(p, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  memo.emplace(order, p);
  return p;
}

/// The field Q(ζ) with ζ a primitive 2N-th root of unity, presented as
/// Q[z] / Φ_{2N}(z).
class CyclotomicField {
 public:
  explicit CyclotomicField(int color)
      : color_(color), modulus_(cyclotomic_polynomial(2 * color)) {}

  int color() const { return color_; }
  int order() const { return 2 * color_; }
  std::size_t degree() const { return modulus_.size() - 1; }
  const IntPoly& modulus() const { return modulus_; }

 private:
  int color_;
  IntPoly modulus_;
};

/// Interned field for color N; the returned reference lives for the program.
inline const CyclotomicField& cyclotomic_field(int color) {
  if (color < 1) throw std::invalid_argument("cyclotomic_field: color must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const CyclotomicField>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[color];
  if (!slot) slot = std::make_unique<const CyclotomicField>(color);
  return *slot;
}

/// Exact element of Q(ζ_{2N}).
///
/// Stored as the reduced polynomial in ζ with trailing zeros trimmed, so that
/// equality is coefficient-wise. Rational constants carry no field and mix
/// freely with elements of any field; two non-constant elements must come
/// from the same field.
class CycNum {
 public:
  CycNum() = default;
  CycNum(long value) : CycNum(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  CycNum(int value) : CycNum(Rational(value)) {}   // NOLINT(google-explicit-constructor)
  CycNum(Rational value) {                         // NOLINT(google-explicit-constructor)
    value.canonicalize();
    if (sgn(value) != 0) coeffs_.push_back(std::move(value));
  }

  /// Builds Σ coeffs[k] ζ^k and reduces it.
  CycNum(const CyclotomicField& field, std::vector<Rational> coeffs)
      : field_(&field), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    reduce();
  }

  /// ζ^k for any integer k; period 2N.
  static CycNum zeta_pow(int color, long k) {
    const CyclotomicField& f = cyclotomic_field(color);
    const long order = f.order();
    long r = k % order;
    if (r < 0) r += order;
    std::vector<Rational> c(static_cast<std::size_t>(r) + 1);
    c[static_cast<std::size_t>(r)] = 1;
    return CycNum(f, std::move(c));
  }

  const CyclotomicField* field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  /// Coefficient of ζ^k in the reduced representation (zero past the end).
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  /// Coordinate vector of length φ(2N) in the power basis of ζ.
  std::vector<Rational> coords(const CyclotomicField& field) const {
    std::vector<Rational> out(field.degree());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = coeffs_[k];
    return out;
  }

  /// The image under the Galois automorphism ζ ↦ ζ^{-1}.
  CycNum conjugate() const {
    if (is_rational()) return *this;
    const auto order = static_cast<std::size_t>(field_->order());
    std::vector<Rational> c(order);
    c[0] = coeffs_[0];
    for (std::size_t k = 1; k < coeffs_.size(); ++k) c[order - k] = coeffs_[k];
    return CycNum(*field_, std::move(c));
  }

  std::complex<double> to_complex() const {
    std::complex<double> acc = 0;
    if (coeffs_.empty()) return acc;
    const double step = field_ ? std::numbers::pi / field_->color() : 0.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      acc += coeffs_[k].get_d() * std::polar(1.0, step * static_cast<double>(k));
    }
    return acc;
  }

  CycNum inverse() const;

  CycNum operator-() const {
    CycNum r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  CycNum& operator+=(const CycNum& rhs) {
    adopt_field(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    detail::trim(coeffs_);
    return *this;
  }
  CycNum& operator-=(const CycNum& rhs) {
    adopt_field(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    detail::trim(coeffs_);
    return *this;
  }
  CycNum& operator*=(const CycNum& rhs) {
    adopt_field(rhs);
    if (is_zero() || rhs.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    if (rhs.coeffs_.size() == 1) {
      for (auto& c : coeffs_) c *= rhs.coeffs_[0];
      return *this;
    }
    if (coeffs_.size() == 1) {
      Rational s = coeffs_[0];
      coeffs_ = rhs.coeffs_;
      for (auto& c : coeffs_) c *= s;
      return *this;
    }
    std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1);
    Rational tmp;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (sgn(coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        mpq_mul(tmp.get_mpq_t(), coeffs_[i].get_mpq_t(), rhs.coeffs_[j].get_mpq_t());
        prod[i + j] += tmp;
      }
    }
    coeffs_ = std::move(prod);
    reduce();
    return *this;
  }
  CycNum& operator/=(const CycNum& rhs) { return *this *= rhs.inverse(); }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  friend bool operator==(const CycNum& a, const CycNum& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const CycNum& x) {
    if (x.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = 0; k < x.coeffs_.size(); ++k) {
      const Rational& c = x.coeffs_[k];
      if (sgn(c) == 0) continue;
      if (!first) os << (sgn(c) < 0 ? " - " : " + ");
      else if (sgn(c) < 0) os << "-";
      Rational a = abs(c);
      if (k == 0) os << a;
      else {
        if (a != 1) os << a << "*";
        os << "z";
        if (k > 1) os << "^" << k;
      }
      first = false;
    }
    return os;
  }

 private:
  void adopt_field(const CycNum& rhs) {
    if (rhs.field_ == nullptr) return;
    if (field_ == nullptr) field_ = rhs.field_;
    else if (field_ != rhs.field_) throw std::logic_error("CycNum: mixing different cyclotomic fields");
  }

  void reduce() {
    detail::trim(coeffs_);
    if (field_ == nullptr) {
      if (coeffs_.size() > 1) throw std::logic_error("CycNum: non-constant value without a field");
      return;
    }
    const IntPoly& m = field_->modulus();
    const std::size_t deg = m.size() - 1;
    Rational tmp;
    for (std::size_t k = coeffs_.size(); k-- > deg;) {
      if (sgn(coeffs_[k]) == 0) continue;
      const Rational c = coeffs_[k];
      for (std::size_t j = 0; j <= deg; ++j) {
        if (m[j] == 0) continue;
        tmp = c * Rational(static_cast<long>(m[j]));
        coeffs_[k - deg + j] -= tmp;
      }
    }
    if (coeffs_.size() > deg) coeffs_.resize(deg);
    detail::trim(coeffs_);
  }

  const CyclotomicField* field_ = nullptr;
  std::vector<Rational> coeffs_;
};

namespace detail {

using QPoly = std::vector<Rational>;

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline QPoly qpoly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}

inline std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b) {
  assert(!b.empty());
  if (a.size() < b.size()) return {{}, a};
  QPoly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

}  // namespace detail

inline CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (coeffs_.size() == 1) return CycNum(Rational(1) / coeffs_[0]);
  // Extended Euclid: find s with s * x ≡ 1 mod Φ_{2N}.
  using detail::QPoly;
  QPoly r0;
  for (auto c : field_->modulus()) r0.emplace_back(static_cast<long>(c));
  QPoly r1 = coeffs_;
  QPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = detail::qpoly_divmod(r0, r1);
    QPoly s = detail::qpoly_sub(s0, detail::qpoly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw std::logic_error("CycNum::inverse: modulus is not irreducible");
  const Rational scale = Rational(1) / r1[0];
  for (auto& c : s1) c *= scale;
  return CycNum(*field_, std::move(s1));
}

inline CycNum zeta_pow(int color, long k) { return CycNum::zeta_pow(color, k); }

inline bool is_zero(const CycNum& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

}  // namespace ado
