#pragma once

#include <map>
#include <mutex>
#include <tuple>

#include "ado/ring/ratfunc.hpp"

namespace ado {

/// 1 / (ζ - ζ^{-1}) in Q(ζ_{2N}).
inline CycNum inverse_zeta_gap(int color) {
  return (zeta_pow(color, 1) - zeta_pow(color, -1)).inverse();
}

/// Quantum integer [a]_ζ.
inline CycNum qint_zeta(int color, long a) {
  return (zeta_pow(color, a) - zeta_pow(color, -a)) * inverse_zeta_gap(color);
}

/// Symmetric quantum binomial at q = ζ, by the q-Pascal rule
/// [a b] = q^{-b} [a-1 b] + q^{a-b} [a-1 b-1], which stays valid at roots
/// of unity where the factorial quotient is 0/0.
inline CycNum qbinomial_zeta(int color, int a, int b) {
  if (b < 0 || a < 0 || b > a) return CycNum();
  if (b == 0 || b == a) return CycNum(1);
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, CycNum> memo;
  const auto key = std::make_tuple(color, a, b);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  CycNum r = zeta_pow(color, -b) * qbinomial_zeta(color, a - 1, b) +
             zeta_pow(color, a - b) * qbinomial_zeta(color, a - 1, b - 1);
  std::lock_guard lock(mutex);
  memo.emplace(key, r);
  return r;
}

/// [aλ + b]_ζ = (t^a ζ^b - t^{-a} ζ^{-b}) / (ζ - ζ^{-1}) with t = ζ^λ.
inline WeightRat weight_qint(int color, int a, int b) {
  const CycNum gap_inv = inverse_zeta_gap(color);
  WeightLaurent p(zeta_pow(color, b) * gap_inv, a);
  p -= WeightLaurent(zeta_pow(color, -b) * gap_inv, -a);
  return WeightRat(std::move(p));
}

/// Falling product [aλ+b; i]_ζ = [aλ+b][aλ+b-1]…[aλ+b+1-i].
inline WeightRat weight_qfact(int color, int a, int b, int i) {
  WeightRat r(1);
  for (int s = 0; s < i; ++s) r *= weight_qint(color, a, b - s);
  return r;
}

}  // namespace ado
