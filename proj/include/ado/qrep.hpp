#pragma once

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ado/braid.hpp"
#include "ado/errors.hpp"
#include "ado/linalg/matrix.hpp"
#include "ado/ring/qnumbers.hpp"

namespace ado {

/// Multi-index (e_1, …, e_n) of v_{e_1} ⊗ … ⊗ v_{e_n}, each e_k in 0..N-1.
using TensorIndex = std::vector<int>;

inline int weight(const TensorIndex& e) { return std::accumulate(e.begin(), e.end(), 0); }

inline std::size_t int_pow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

/// Lexicographic position of e in {0..N-1}^n (e_1 most significant).
inline std::size_t flat_index(const TensorIndex& e, int color) {
  std::size_t idx = 0;
  for (int d : e) idx = idx * static_cast<std::size_t>(color) + static_cast<std::size_t>(d);
  return idx;
}

inline TensorIndex tensor_index(std::size_t flat, int color, int strands) {
  TensorIndex e(static_cast<std::size_t>(strands));
  for (int k = strands; k-- > 0;) {
    e[static_cast<std::size_t>(k)] = static_cast<int>(flat % static_cast<std::size_t>(color));
    flat /= static_cast<std::size_t>(color);
  }
  return e;
}

/// All of {0..N-1}^n in lexicographic order.
inline std::vector<TensorIndex> tensor_basis(int color, int strands) {
  const std::size_t dim = int_pow(static_cast<std::size_t>(color), strands);
  std::vector<TensorIndex> basis;
  basis.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(tensor_index(i, color, strands));
  return basis;
}

/// Flat indices of the basis of X^N_{n,m}, ascending (hence lexicographic).
inline std::vector<std::size_t> weight_indices(int color, int strands, int m) {
  std::vector<std::size_t> ids;
  const std::size_t dim = int_pow(static_cast<std::size_t>(color), strands);
  for (std::size_t i = 0; i < dim; ++i)
    if (weight(tensor_index(i, color, strands)) == m) ids.push_back(i);
  return ids;
}

inline std::vector<TensorIndex> weight_basis(int color, int strands, int m) {
  std::vector<TensorIndex> out;
  for (auto i : weight_indices(color, strands, m)) out.push_back(tensor_index(i, color, strands));
  return out;
}

/// Matrix over Q(ζ)(t) together with its row and column labels.
struct RepMatrix {
  int color = 2;
  std::vector<TensorIndex> rows;
  std::vector<TensorIndex> cols;
  Matrix<WeightRat> entries;
};

/// Which coproduct extends the U_ζ(sl_2) action to tensor products.
///   A: Δ(E) = E⊗K + 1⊗E,  Δ(F) = F⊗1 + K^{-1}⊗F
///   B: the opposite coproduct, Δ(E) = E⊗1 + K⊗E, Δ(F) = 1⊗F + F⊗K^{-1}
/// Only A is compatible with the R-operator; see equivariance_holds().
enum class Coproduct { A, B };

namespace detail {

// R on the hat basis, ordered as flat_index((a, b)).
//   R(v̂_i ⊗ v̂_j) = t^{-(i+j)} Σ_n ζ^{2(i-n)(j+n)} ζ^{n(n-1)/2} [n+j choose j]_ζ
//                   [λ-j; n]_ζ (ζ-ζ^{-1})^n  v̂_{j+n} ⊗ v̂_{i-n}
// Terms with j+n >= N vanish at ζ (the binomial is zero) and are dropped.
inline Matrix<WeightRat> build_r_hat(int color) {
  const auto dim = static_cast<std::size_t>(color * color);
  Matrix<WeightRat> r(dim, dim);
  const CycNum gap = zeta_pow(color, 1) - zeta_pow(color, -1);
  for (int i = 0; i < color; ++i)
    for (int j = 0; j < color; ++j) {
      CycNum gap_pow(1);
      for (int n = 0; n <= i; ++n, gap_pow *= gap) {
        if (j + n >= color) break;
        const CycNum scalar = zeta_pow(color, 2L * (i - n) * (j + n) + n * (n - 1) / 2) *
                              qbinomial_zeta(color, n + j, j) * gap_pow;
        if (scalar.is_zero()) continue;
        WeightRat c = weight_qfact(color, 1, -j, n) * WeightRat::monomial(-(i + j), scalar);
        r(flat_index({j + n, i - n}, color), flat_index({i, j}, color)) = std::move(c);
      }
    }
  return r;
}

// v_j = [λ; j] v̂_j, so R_v = D^{-1} R_hat D with D = diag([λ;a][λ;b]).
inline Matrix<WeightRat> hat_to_v(const Matrix<WeightRat>& r_hat, int color) {
  std::vector<WeightRat> d(static_cast<std::size_t>(color * color));
  for (int a = 0; a < color; ++a)
    for (int b = 0; b < color; ++b)
      d[flat_index({a, b}, color)] = weight_qfact(color, 1, 0, a) * weight_qfact(color, 1, 0, b);
  Matrix<WeightRat> r = r_hat;
  for (std::size_t row = 0; row < r.rows(); ++row)
    for (std::size_t col = 0; col < r.cols(); ++col)
      if (!r(row, col).is_zero()) r(row, col) = r(row, col) * d[col] / d[row];
  return r;
}

// Inverts R block by block over the total weight a + b.
inline Matrix<WeightRat> invert_by_weight(const Matrix<WeightRat>& r, int color) {
  Matrix<WeightRat> inv(r.rows(), r.cols());
  for (int w = 0; w <= 2 * (color - 1); ++w) {
    auto ids = weight_indices(color, 2, w);
    for (std::size_t row = 0; row < r.rows(); ++row)
      for (auto col : ids) {
        const bool inside = weight(tensor_index(row, color, 2)) == w;
        if (!inside && !r(row, col).is_zero())
          throw WeightMixingError("R-operator mixes weights");
      }
    auto block = inverse(r.submatrix(ids, ids));  // throws SingularBlockError
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = 0; b < ids.size(); ++b) inv(ids[a], ids[b]) = block(a, b);
  }
  return inv;
}

struct SparseEntry {
  std::size_t target;
  WeightRat value;
};

struct RData {
  Matrix<WeightRat> r_hat;
  Matrix<WeightRat> r;
  Matrix<WeightRat> r_inv;
  // columns of r / r_inv as sparse lists, indexed by flat source (a, b)
  std::vector<std::vector<SparseEntry>> r_cols;
  std::vector<std::vector<SparseEntry>> r_inv_cols;
};

inline std::vector<std::vector<SparseEntry>> sparse_columns(const Matrix<WeightRat>& m) {
  std::vector<std::vector<SparseEntry>> cols(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) cols[c].push_back({r, m(r, c)});
  return cols;
}

inline const RData& r_data(int color) {
  if (color < 2) throw std::invalid_argument("color N must be >= 2");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const RData>> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(color); it != memo.end()) return *it->second;
  }
  auto data = std::make_shared<RData>();
  data->r_hat = build_r_hat(color);
  data->r = hat_to_v(data->r_hat, color);
  data->r_inv = invert_by_weight(data->r, color);
  data->r_cols = sparse_columns(data->r);
  data->r_inv_cols = sparse_columns(data->r_inv);
  std::lock_guard lock(mutex);
  // a concurrent fill may have won; both values are identical
  return *memo.emplace(color, std::move(data)).first->second;
}

inline RepMatrix label(Matrix<WeightRat> m, int color, int strands) {
  auto basis = tensor_basis(color, strands);
  return RepMatrix{color, basis, basis, std::move(m)};
}

}  // namespace detail

/// R-operator on U_N(λ)⊗U_N(λ) in the hat basis.
inline RepMatrix r_matrix_hat(int color) { return detail::label(detail::r_data(color).r_hat, color, 2); }

/// R-operator in the basis v_j = [λ;j] v̂_j.
inline RepMatrix r_matrix(int color) { return detail::label(detail::r_data(color).r, color, 2); }

inline RepMatrix r_matrix_inverse(int color) { return detail::label(detail::r_data(color).r_inv, color, 2); }

/// Left-multiplies m by id^{⊗(i-1)} ⊗ R^{±1} ⊗ id^{⊗(n-1-i)} for letter = ±i.
inline void apply_generator(Matrix<WeightRat>& m, int letter, int color, int strands) {
  const auto& data = detail::r_data(color);
  const auto& cols = letter > 0 ? data.r_cols : data.r_inv_cols;
  const int i = std::abs(letter);
  const auto n_sz = static_cast<std::size_t>(color);
  const std::size_t low_stride = int_pow(n_sz, strands - i - 1);  // stride of slot i+1
  const std::size_t high_stride = low_stride * n_sz;              // stride of slot i
  Matrix<WeightRat> out(m.rows(), m.cols());
  for (std::size_t src = 0; src < m.rows(); ++src) {
    const std::size_t a = (src / high_stride) % n_sz;
    const std::size_t b = (src / low_stride) % n_sz;
    const std::size_t base = src - a * high_stride - b * low_stride;
    for (const auto& [pair, coeff] : cols[a * n_sz + b]) {
      const std::size_t dst = base + (pair / n_sz) * high_stride + (pair % n_sz) * low_stride;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const WeightRat& x = m(src, c);
        if (!x.is_zero()) out(dst, c) += coeff * x;
      }
    }
  }
  m = std::move(out);
}

/// φ_{U_N}(w) = φ(letter_1) φ(letter_2) ⋯ on U_N(λ)^{⊗n}, as a bare matrix.
inline Matrix<WeightRat> braid_operator(const BraidWord& w, int color) {
  auto m = Matrix<WeightRat>::identity(int_pow(static_cast<std::size_t>(color), w.strands()));
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) apply_generator(m, *it, color, w.strands());
  return m;
}

inline RepMatrix braid_matrix(const BraidWord& w, int color) {
  return detail::label(braid_operator(w, color), color, w.strands());
}

/// Restriction of a weight-preserving operator to X^N_{n,m}.
inline Matrix<WeightRat> weight_block(const Matrix<WeightRat>& m, int color, int strands, int wt) {
  auto ids = weight_indices(color, strands, wt);
  std::vector<bool> inside(m.rows(), false);
  for (auto i : ids) inside[i] = true;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (auto c : ids)
      if (!inside[r] && !m(r, c).is_zero()) throw WeightMixingError("operator does not preserve weight " + std::to_string(wt));
  for (auto r : ids)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!inside[c] && !m(r, c).is_zero()) throw WeightMixingError("operator does not preserve weight " + std::to_string(wt));
  return m.submatrix(ids, ids);
}

inline RepMatrix weight_block(const RepMatrix& m, int wt) {
  const int strands = m.rows.empty() ? 0 : static_cast<int>(m.rows.front().size());
  auto basis = weight_basis(m.color, strands, wt);
  return RepMatrix{m.color, basis, basis, weight_block(m.entries, m.color, strands, wt)};
}

// Single-factor operators on U_N(λ) in the v basis.

inline Matrix<WeightRat> k_single(int color, int power = 1) {
  Matrix<WeightRat> k(static_cast<std::size_t>(color), static_cast<std::size_t>(color));
  for (int i = 0; i < color; ++i)
    k(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = WeightRat::monomial(power, zeta_pow(color, -2L * i * power));
  return k;
}

/// E v_i = [λ+1-i]_ζ v_{i-1}.
inline Matrix<WeightRat> e_single(int color) {
  Matrix<WeightRat> e(static_cast<std::size_t>(color), static_cast<std::size_t>(color));
  for (int i = 1; i < color; ++i)
    e(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) = weight_qint(color, 1, 1 - i);
  return e;
}

/// F v_i = [i+1]_ζ v_{i+1}; F v_{N-1} = 0.
inline Matrix<WeightRat> f_single(int color) {
  Matrix<WeightRat> f(static_cast<std::size_t>(color), static_cast<std::size_t>(color));
  for (int i = 0; i + 1 < color; ++i)
    f(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(i)) = WeightRat(qint_zeta(color, i + 1));
  return f;
}

/// h = K^{1-N}: h(v_i) = t^{-(N-1)} ζ^{2(N-1)i} v_i.
inline Matrix<WeightRat> h_matrix(int color) { return k_single(color, 1 - color); }

namespace detail {

inline Matrix<WeightRat> kron_chain(const std::vector<Matrix<WeightRat>>& factors) {
  Matrix<WeightRat> acc = Matrix<WeightRat>::identity(1);
  for (const auto& f : factors) acc = kron(acc, f);
  return acc;
}

// Σ_k left^{⊗(k-1)} ⊗ x ⊗ right^{⊗(n-k)}
inline Matrix<WeightRat> iterated_coproduct(const Matrix<WeightRat>& left, const Matrix<WeightRat>& x,
                                            const Matrix<WeightRat>& right, int strands) {
  const std::size_t dim = int_pow(x.rows(), strands);
  Matrix<WeightRat> sum(dim, dim);
  for (int k = 0; k < strands; ++k) {
    std::vector<Matrix<WeightRat>> factors;
    for (int s = 0; s < strands; ++s) factors.push_back(s < k ? left : (s == k ? x : right));
    sum += kron_chain(factors);
  }
  return sum;
}

}  // namespace detail

inline Matrix<WeightRat> k_action(int color, int strands) {
  return detail::kron_chain(std::vector<Matrix<WeightRat>>(static_cast<std::size_t>(strands), k_single(color)));
}

inline Matrix<WeightRat> e_action(int color, int strands, Coproduct conv = Coproduct::A) {
  const auto id = Matrix<WeightRat>::identity(static_cast<std::size_t>(color));
  if (conv == Coproduct::A) return detail::iterated_coproduct(id, e_single(color), k_single(color), strands);
  return detail::iterated_coproduct(k_single(color), e_single(color), id, strands);
}

inline Matrix<WeightRat> f_action(int color, int strands, Coproduct conv = Coproduct::A) {
  const auto id = Matrix<WeightRat>::identity(static_cast<std::size_t>(color));
  if (conv == Coproduct::A) return detail::iterated_coproduct(k_single(color, -1), f_single(color), id, strands);
  return detail::iterated_coproduct(id, f_single(color), k_single(color, -1), strands);
}

/// Index set of (e_1, …, e_{n-1}) with 0 ≤ e_i ≤ N-1 and Σ e_i = m, lexicographic.
inline std::vector<TensorIndex> truncated_index_set(int color, int strands, int m) {
  std::vector<TensorIndex> out;
  if (strands < 1) return out;
  for (auto& e : weight_basis(color, strands - 1, m)) out.push_back(std::move(e));
  return out;
}

/// d^N_{n,m}.
inline std::size_t lawrence_dimension(int color, int strands, int m) {
  return truncated_index_set(color, strands, m).size();
}

namespace detail {

// E restricted to X_m -> X_{m-1}.
inline Matrix<WeightRat> e_block(const Matrix<WeightRat>& e_full, int color, int strands, int m) {
  return e_full.submatrix(weight_indices(color, strands, m - 1), weight_indices(color, strands, m));
}

inline Matrix<WeightRat> solve_highest_weight(int color, int strands, int m, Coproduct conv) {
  const auto rows = weight_indices(color, strands, m);
  const auto leads = truncated_index_set(color, strands, m);
  Matrix<WeightRat> basis(rows.size(), leads.size());
  if (leads.empty()) return basis;
  const auto e = e_block(e_action(color, strands, conv), color, strands, m);

  // split X_m coordinates into leading ones (first slot 0) and the rest
  const auto slot_stride = int_pow(static_cast<std::size_t>(color), strands - 1);
  std::vector<std::size_t> lead_pos, free_pos;
  for (std::size_t k = 0; k < rows.size(); ++k) (rows[k] < slot_stride ? lead_pos : free_pos).push_back(k);

  const auto e_free = e.submatrix(
      [&] {
        std::vector<std::size_t> all(e.rows());
        std::iota(all.begin(), all.end(), 0);
        return all;
      }(),
      free_pos);
  Matrix<WeightRat> rhs(e.rows(), leads.size());
  for (std::size_t j = 0; j < leads.size(); ++j)
    for (std::size_t r = 0; r < e.rows(); ++r) rhs(r, j) = -e(r, lead_pos[j]);

  auto sol = solve_unique(e_free, rhs);
  if (!sol) {
    throw RankDeficiencyError("highest-weight solve failed for N=" + std::to_string(color) +
                              " n=" + std::to_string(strands) + " m=" + std::to_string(m));
  }
  for (std::size_t j = 0; j < leads.size(); ++j) {
    basis(lead_pos[j], j) = WeightRat(1);
    for (std::size_t f = 0; f < free_pos.size(); ++f) basis(free_pos[f], j) = (*sol)(f, j);
  }
  return basis;
}

}  // namespace detail

/// Basis of Y^N_{n,m} = ker E ∩ X^N_{n,m}: column ē is the unique vector in
/// ker E whose coordinates on v_0 ⊗ v_{ē'} are δ_{ē,ē'}. Rows follow
/// weight_basis(N, n, m).
inline const Matrix<WeightRat>& highest_weight_operator(int color, int strands, int m, Coproduct conv = Coproduct::A) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, int>, std::shared_ptr<const Matrix<WeightRat>>> memo;
  const auto key = std::make_tuple(color, strands, m, static_cast<int>(conv));
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return *it->second;
  }
  auto basis = std::make_shared<const Matrix<WeightRat>>(detail::solve_highest_weight(color, strands, m, conv));
  std::lock_guard lock(mutex);
  return *memo.emplace(key, std::move(basis)).first->second;
}

inline RepMatrix highest_weight_basis(int color, int strands, int m, Coproduct conv = Coproduct::A) {
  return RepMatrix{color, weight_basis(color, strands, m), truncated_index_set(color, strands, m),
                   highest_weight_operator(color, strands, m, conv)};
}

/// True when ker E ∩ X_m is preserved by every σ_i, for every weight m.
inline bool equivariance_holds(int color, int strands, Coproduct conv) {
  const auto e_full = e_action(color, strands, conv);
  std::vector<Matrix<WeightRat>> gens;
  for (int i = 1; i < strands; ++i) gens.push_back(braid_operator(BraidWord(strands, {i}), color));
  for (int m = 1; m <= strands * (color - 1); ++m) {
    const auto e = detail::e_block(e_full, color, strands, m);
    const auto kernel = null_space(e);
    if (kernel.cols() == 0) continue;
    for (const auto& g : gens) {
      const auto image = weight_block(g, color, strands, m) * kernel;
      if (!(e * image).is_zero_matrix()) return false;
    }
  }
  return true;
}

}  // namespace ado
