#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ado/braid.hpp"
#include "ado/lawrence.hpp"
#include "ado/qrep.hpp"

namespace ado {

enum class Pipeline { Direct, Lawrence };

inline std::string_view to_string(Pipeline p) { return p == Pipeline::Direct ? "direct" : "lawrence"; }

/// Φ^N_K(λ) as a normalized element of Q(ζ_{2N})(t), t = ζ^λ.
struct InvariantResult {
  WeightRat value;
  int color = 2;
  BraidWord braid;
  Pipeline pipeline = Pipeline::Direct;

  int strands() const { return braid.strands(); }
};

/// tr_{2..n}: (M)_{a,b} ↦ Σ_c M_{(a,c),(b,c)}, contracting every factor but
/// the first.
template <class T>
Matrix<T> partial_trace_tail(const Matrix<T>& m, std::size_t factor_dim, int factors) {
  const std::size_t tail = int_pow(factor_dim, factors - 1);
  if (m.rows() != factor_dim * tail || !m.is_square()) throw std::invalid_argument("partial_trace_tail: size mismatch");
  Matrix<T> out(factor_dim, factor_dim);
  for (std::size_t a = 0; a < factor_dim; ++a)
    for (std::size_t b = 0; b < factor_dim; ++b) {
      T acc(0);
      for (std::size_t c = 0; c < tail; ++c) {
        const T& x = m(a * tail + c, b * tail + c);
        if (!is_zero(x)) acc += x;
      }
      out(a, b) = std::move(acc);
    }
  return out;
}

/// Returns the scalar c when m = c·id exactly, otherwise throws NonScalarError.
inline WeightRat scalar_part(const Matrix<WeightRat>& m) {
  const WeightRat c = m(0, 0);
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b) {
      const bool ok = a == b ? m(a, b) == c : m(a, b).is_zero();
      if (!ok) throw NonScalarError("partial trace is not a scalar operator");
    }
  return c;
}

inline void require_knot(const BraidWord& w) {
  if (closure_is_knot(w)) return;
  std::string cycles;
  for (int len : cycle_type(closure_permutation(w))) cycles += (cycles.empty() ? "" : ",") + std::to_string(len);
  throw NotAKnotError("braid closure is not a knot (permutation cycle type " + cycles + ")");
}

/// tr_{2..n}((id ⊗ h^{⊗(n-1)}) φ_{U_N}(w)) without the framing factor.
inline Matrix<WeightRat> twisted_partial_trace(const Matrix<WeightRat>& op, int color, int strands) {
  const auto h = h_matrix(color);
  const auto n_sz = static_cast<std::size_t>(color);
  Matrix<WeightRat> twisted = op;
  for (std::size_t r = 0; r < twisted.rows(); ++r) {
    WeightRat factor(1);
    const auto idx = tensor_index(r, color, strands);
    for (std::size_t k = 1; k < idx.size(); ++k)
      factor *= h(static_cast<std::size_t>(idx[k]), static_cast<std::size_t>(idx[k]));
    for (std::size_t c = 0; c < twisted.cols(); ++c)
      if (!twisted(r, c).is_zero()) twisted(r, c) *= factor;
  }
  return partial_trace_tail(twisted, n_sz, strands);
}

/// Φ^N_K from the operator invariant of the (1,1)-tangle obtained by cutting
/// the first strand: t^{(N-1)e(w)} times the scalar of the twisted partial trace.
inline InvariantResult direct_invariant(const BraidWord& w, int color) {
  require_knot(w);
  const auto traced = twisted_partial_trace(braid_operator(w, color), color, w.strands());
  const WeightRat c = scalar_part(traced);
  return {c * WeightRat::monomial((color - 1) * exponent_sum(w)), color, w, Pipeline::Direct};
}

/// [λ;N-1]_ζ / [(a-1)λ + λ + shift - 2i; N-1]_ζ, i.e. C^N_i(λ, μ) at
/// μ = (a-1)λ + shift. The index i is taken mod N implicitly (ζ^{2N} = 1).
inline WeightRat coefficient_C_shifted(int color, int lambda_mult, int shift, int i) {
  return weight_qfact(color, 1, 0, color - 1) / weight_qfact(color, lambda_mult, shift - 2 * i, color - 1);
}

/// C^N_i at μ = (a-1)λ: [λ;N-1]_ζ / [aλ - 2i; N-1]_ζ.
inline WeightRat coefficient_C(int color, int lambda_mult, int i) {
  return coefficient_C_shifted(color, lambda_mult, 0, i);
}

/// C_0, …, C_{N-1} for an n-strand closure.
inline std::vector<WeightRat> coefficient_table(int color, int strands) {
  std::vector<WeightRat> table;
  for (int i = 0; i < color; ++i) table.push_back(coefficient_C(color, strands, i));
  return table;
}

/// Σ_{i<N} [μ;i]_ζ/[λ+μ;i]_ζ ζ^{-iλ} ζ^{-(N-1)μ-2i} at μ = kλ.
inline WeightRat coefficient_C0_sum_form(int color, int k) {
  WeightRat sum;
  for (int i = 0; i < color; ++i) {
    sum += weight_qfact(color, k, 0, i) / weight_qfact(color, k + 1, 0, i) *
           WeightRat::monomial(-i - (color - 1) * k, zeta_pow(color, -2L * i));
  }
  return sum;
}

/// Φ^N_K as t^{(N-1)e} Σ_i C_i Σ_{m ≡ i mod N} tr l^N_{n,m}(w), the traces of
/// truncated Lawrence representations taken on highest-weight spaces.
inline InvariantResult lawrence_invariant(const BraidWord& w, int color) {
  require_knot(w);
  const int n = w.strands();
  const auto traces = trace_Y_all(w, color);
  WeightRat total;
  for (int i = 0; i < color; ++i) {
    WeightRat inner;
    for (std::size_t m = static_cast<std::size_t>(i); m < traces.size(); m += static_cast<std::size_t>(color))
      inner += traces[m];
    if (!inner.is_zero()) total += coefficient_C(color, n, i) * inner;
  }
  return {total * WeightRat::monomial((color - 1) * exponent_sum(w)), color, w, Pipeline::Lawrence};
}

inline InvariantResult compute_invariant(const BraidWord& w, int color, Pipeline p) {
  return p == Pipeline::Direct ? direct_invariant(w, color) : lawrence_invariant(w, color);
}

/// Checks tr_2 (id ⊗ h) f = (Σ_i C_i f_i) id for f = φ_{U_N}(w2), w2 ∈ B_2,
/// where f_i is the eigenvalue of f on the highest-weight line of weight i.
inline bool two_strand_trace_check(int color, const BraidWord& w2) {
  if (w2.strands() != 2) throw std::invalid_argument("two_strand_trace_check expects a 2-strand braid");
  const auto f = braid_operator(w2, color);
  const auto lhs = twisted_partial_trace(f, color, 2);
  WeightRat rhs_scalar;
  for (int i = 0; i < color; ++i) {
    const auto fi = truncated_lawrence_matrix(f, color, 2, i);
    if (fi.rows() != 1) return false;
    rhs_scalar += coefficient_C(color, 2, i) * fi(0, 0);
  }
  return lhs == Matrix<WeightRat>::identity(static_cast<std::size_t>(color)) * rhs_scalar;
}

}  // namespace ado
