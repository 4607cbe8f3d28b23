#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "ado/braid.hpp"
#include "ado/qrep.hpp"

namespace ado {

/// Highest weight admitting a nonzero Y^N_{n,m}: (n-1)(N-1).
inline int top_lawrence_weight(int color, int strands) { return (strands - 1) * (color - 1); }

/// Matrix of the braid action on Y^N_{n,m} in the basis {y_ē}. Entries are
/// functions of t = ζ^λ; the homological variables read x = t^{-2}, d = -ζ².
///
/// Since y_ē has coordinate δ_{ē,ē'} on v_0 ⊗ v_{ē'}, the left inverse of the
/// basis matrix is the projection onto those coordinates.
inline Matrix<WeightRat> truncated_lawrence_matrix(const Matrix<WeightRat>& braid_op, int color, int strands, int m) {
  const auto& basis = highest_weight_operator(color, strands, m);
  if (basis.cols() == 0) return {};
  const auto image = weight_block(braid_op, color, strands, m) * basis;
  const auto rows = weight_indices(color, strands, m);
  const auto slot_stride = int_pow(static_cast<std::size_t>(color), strands - 1);
  std::vector<std::size_t> lead_pos;
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (rows[k] < slot_stride) lead_pos.push_back(k);
  std::vector<std::size_t> all_cols(basis.cols());
  for (std::size_t c = 0; c < all_cols.size(); ++c) all_cols[c] = c;
  auto coords = image.submatrix(lead_pos, all_cols);
  if (!(basis * coords == image))
    throw BasisInconsistencyError("braid image leaves the highest-weight space at m=" + std::to_string(m));
  return coords;
}

inline Matrix<WeightRat> truncated_lawrence_matrix(const BraidWord& w, int color, int m) {
  return truncated_lawrence_matrix(braid_operator(w, color), color, w.strands(), m);
}

namespace detail {

// tr Y_m = tr X_m - Σ_{k=1}^{N-1} tr Y_{m-k}, from X_m = ⊕_k F^k Y_{m-k}.
inline std::vector<WeightRat> traces_from_operator(const Matrix<WeightRat>& op, int color, int strands) {
  const int top = top_lawrence_weight(color, strands);
  std::vector<WeightRat> tr_y(static_cast<std::size_t>(top + 1));
  for (int m = 0; m <= top; ++m) {
    WeightRat tr_x;
    for (auto i : weight_indices(color, strands, m)) tr_x += op(i, i);
    for (int k = 1; k < color && m - k >= 0; ++k) tr_x -= tr_y[static_cast<std::size_t>(m - k)];
    tr_y[static_cast<std::size_t>(m)] = std::move(tr_x);
  }
  return tr_y;
}

}  // namespace detail

/// tr φ^Y_{n,m}(w) for m = 0..(n-1)(N-1), computed from weight-block traces
/// of the braid operator only. Memoized per (N, braid).
inline std::vector<WeightRat> trace_Y_all(const BraidWord& w, int color) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, std::vector<int>>, std::shared_ptr<const std::vector<WeightRat>>> memo;
  const auto key = std::make_tuple(color, w.strands(), w.letters());
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return *it->second;
  }
  auto traces = std::make_shared<const std::vector<WeightRat>>(
      detail::traces_from_operator(braid_operator(w, color), color, w.strands()));
  std::lock_guard lock(mutex);
  return *memo.emplace(key, std::move(traces)).first->second;
}

inline WeightRat trace_Y(const BraidWord& w, int color, int m) {
  if (m < 0 || m > top_lawrence_weight(color, w.strands())) return WeightRat();
  return trace_Y_all(w, color)[static_cast<std::size_t>(m)];
}

/// Reduced Burau matrix of σ_i^{±1} in B_n over Q(x). Row i-1 of σ_i is
/// (…, x, -x, 1, …) around the diagonal; rows are truncated at the borders.
inline Matrix<XRat> burau_generator(int strands, int letter) {
  const auto dim = static_cast<std::size_t>(strands - 1);
  const auto k = static_cast<std::size_t>(std::abs(letter) - 1);
  auto g = Matrix<XRat>::identity(dim);
  const XRat x = XRat::monomial(1);
  g(k, k) = -x;
  if (k > 0) g(k, k - 1) = x;
  if (k + 1 < dim) g(k, k + 1) = XRat(1);
  return letter > 0 ? g : inverse(g);
}

/// Reduced Burau representation, L_{n,1}(w) = L(letter_1) L(letter_2) ⋯.
inline Matrix<XRat> burau_reduced(const BraidWord& w) {
  if (w.strands() < 2) throw std::invalid_argument("burau_reduced needs at least two strands");
  auto m = Matrix<XRat>::identity(static_cast<std::size_t>(w.strands() - 1));
  for (int k : w.letters()) m = m * burau_generator(w.strands(), k);
  return m;
}

/// k-element subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Λ^k M: entry (I, J) is the minor det M[I, J].
template <class T>
Matrix<T> exterior_power(const Matrix<T>& m, std::size_t k) {
  if (!m.is_square() || k > m.rows()) throw std::invalid_argument("exterior_power: need square matrix and k <= dim");
  const auto subsets = index_subsets(m.rows(), k);
  Matrix<T> out(subsets.size(), subsets.size());
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = 0; b < subsets.size(); ++b) out(a, b) = determinant(m.submatrix(subsets[a], subsets[b]));
  return out;
}

/// Reads a function of x as a function of t through x = t^{-2}.
inline WeightRat x_to_weight(const XRat& f) {
  return f.map_coeffs([](const Rational& c) { return CycNum(c); }).substitute_power(-2);
}

/// x^{-e/2} (x^{1/2} - x^{-1/2}) / (x^{n/2} - x^{-n/2}) det(I - L_{n,1}(w)),
/// returned in t with x^{1/2} = t^{-1}.
inline WeightRat alexander_via_burau(const BraidWord& w) {
  if (!closure_is_knot(w)) throw NotAKnotError("braid closure is not a knot");
  const int n = w.strands();
  if (n == 1) return WeightRat(1);
  const auto burau = burau_reduced(w);
  const auto det = determinant(Matrix<XRat>::identity(burau.rows()) - burau);
  const WeightRat prefactor =
      WeightRat(WeightLaurent(CycNum(1), -1) - WeightLaurent(CycNum(1), 1),
                WeightLaurent(CycNum(1), -n) - WeightLaurent(CycNum(1), n)) *
      WeightRat::monomial(exponent_sum(w));
  return prefactor * x_to_weight(det);
}

}  // namespace ado
