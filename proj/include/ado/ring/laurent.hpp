#pragma once

#include <algorithm>
#include <cassert>
#include <complex>
#include <ostream>
#include <utility>
#include <vector>

#include "ado/ring/cyclotomic.hpp"

namespace ado {

inline Rational inverse(const Rational& x) {
  if (sgn(x) == 0) throw DivisionByZero();
  return Rational(1) / x;
}
inline CycNum inverse(const CycNum& x) { return x.inverse(); }

inline std::complex<double> to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
inline std::complex<double> to_complex(const CycNum& x) { return x.to_complex(); }

/// Laurent polynomial Σ c_k t^k over a field F.
///
/// Dense storage starting at the lowest exponent; both ends are trimmed so
/// that zero is the empty polynomial and equality is term-wise.
template <class F>
class Laurent {
 public:
  using Coeff = F;

  Laurent() = default;
  explicit Laurent(F c, int exponent = 0) {
    if (!ado::is_zero(c)) {
      low_ = exponent;
      coeffs_.push_back(std::move(c));
    }
  }
  Laurent(int low, std::vector<F> coeffs) : low_(low), coeffs_(std::move(coeffs)) { trim(); }

  static Laurent monomial(int exponent) { return Laurent(F(1), exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == F(1); }
  bool is_monomial() const { return coeffs_.size() == 1; }

  int low() const { return low_; }
  /// Highest exponent; only meaningful for nonzero values.
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const { return coeffs_.size(); }
  const std::vector<F>& dense() const { return coeffs_; }

  F coeff(int exponent) const {
    const int k = exponent - low_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return F(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }
  const F& lowest_coeff() const { return coeffs_.front(); }
  const F& leading_coeff() const { return coeffs_.back(); }

  /// Nonzero terms as (exponent, coefficient), ascending.
  std::vector<std::pair<int, F>> terms() const {
    std::vector<std::pair<int, F>> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (!ado::is_zero(coeffs_[k])) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
    return out;
  }

  Laurent shifted(int by) const {
    Laurent r = *this;
    if (!r.is_zero()) r.low_ += by;
    return r;
  }

  /// t ↦ t^factor (factor may be negative).
  Laurent substitute_power(int factor) const {
    if (is_zero()) return {};
    assert(factor != 0);
    const int a = low_ * factor, b = high() * factor;
    const int lo = std::min(a, b), hi = std::max(a, b);
    std::vector<F> c(static_cast<std::size_t>(hi - lo + 1), F(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      c[static_cast<std::size_t>((low_ + static_cast<int>(k)) * factor - lo)] = coeffs_[k];
    return Laurent(lo, std::move(c));
  }

  template <class Fn>
  auto map_coeffs(Fn&& fn) const -> Laurent<decltype(fn(std::declval<const F&>()))> {
    using G = decltype(fn(std::declval<const F&>()));
    std::vector<G> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(fn(x));
    return Laurent<G>(low_, std::move(c));
  }

  std::complex<double> evaluate(std::complex<double> t) const {
    std::complex<double> acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + to_complex(coeffs_[k]);
    return acc * std::pow(t, low_);
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Laurent& operator+=(const Laurent& rhs) { return accumulate(rhs, false); }
  Laurent& operator-=(const Laurent& rhs) { return accumulate(rhs, true); }

  Laurent& operator*=(const F& s) {
    if (ado::is_zero(s)) {
      coeffs_.clear();
      low_ = 0;
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const F& s) { return a *= s; }
  friend Laurent operator*(const F& s, Laurent a) { return a *= s; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_monomial()) return (a * b.coeffs_[0]).shifted(b.low_);
    if (a.is_monomial()) return (b * a.coeffs_[0]).shifted(a.low_);
    std::vector<F> c(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (ado::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (ado::is_zero(b.coeffs_[j])) continue;
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Laurent(a.low_ + b.low_, std::move(c));
  }
  Laurent& operator*=(const Laurent& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.coeffs_.size() == b.coeffs_.size() && (a.coeffs_.empty() || a.low_ == b.low_) &&
           a.coeffs_ == b.coeffs_;
  }

  /// Quotient and remainder treating both sides as polynomials in t after
  /// shifting each to lowest exponent 0. Used by gcd and exact division.
  friend std::pair<Laurent, Laurent> poly_divmod(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw DivisionByZero();
    std::vector<F> rem = a.coeffs_;
    const std::vector<F>& d = b.coeffs_;
    if (rem.size() < d.size()) return {Laurent(), Laurent(0, std::move(rem))};
    const F lead_inv = inverse(d.back());
    std::vector<F> quot(rem.size() - d.size() + 1, F(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
      const F& top = rem[k + d.size() - 1];
      if (ado::is_zero(top)) continue;
      F c = top * lead_inv;
      for (std::size_t j = 0; j < d.size(); ++j)
        if (!ado::is_zero(d[j])) rem[k + j] -= c * d[j];
      quot[k] = std::move(c);
    }
    return {Laurent(0, std::move(quot)), Laurent(0, std::move(rem))};
  }

 private:
  Laurent& accumulate(const Laurent& rhs, bool subtract) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) {
      *this = subtract ? -rhs : rhs;
      return *this;
    }
    const int lo = std::min(low_, rhs.low_);
    const int hi = std::max(high(), rhs.high());
    if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), F(0));
    low_ = lo;
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), F(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
      auto& dst = coeffs_[static_cast<std::size_t>(rhs.low_ - lo) + k];
      if (subtract) dst -= rhs.coeffs_[k];
      else dst += rhs.coeffs_[k];
    }
    trim();
    return *this;
  }

  void trim() {
    while (!coeffs_.empty() && ado::is_zero(coeffs_.back())) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && ado::is_zero(coeffs_[lead])) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
  }

  int low_ = 0;
  std::vector<F> coeffs_;
};

template <class F>
bool is_zero(const Laurent<F>& p) {
  return p.is_zero();
}

/// Plain "(c)*t^e + ..." form, lowest power first; for diagnostics.
template <class F>
std::ostream& operator<<(std::ostream& os, const Laurent<F>& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    os << (first ? "" : " + ") << "(" << c << ")";
    if (e != 0) os << "*t^" << e;
    first = false;
  }
  return os;
}

/// Monic gcd in F[t] of two Laurent polynomials, both shifted to low 0.
template <class F>
Laurent<F> poly_gcd(Laurent<F> a, Laurent<F> b) {
  a = a.shifted(-a.low());
  b = b.shifted(-b.low());
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.shifted(-r.low());
  }
  if (a.is_zero()) return a;
  return a * inverse(a.leading_coeff());
}

}  // namespace ado
