#include <complex>
#include <future>
#include <numbers>

#include <gtest/gtest.h>

#include "ado/qrep.hpp"

using namespace ado;

namespace {

using cd = std::complex<double>;

WeightRat t_pow(int e, CycNum c = CycNum(1)) { return WeightRat::monomial(e, std::move(c)); }

// Floating-point R on the hat basis, written straight from the defining sum
// with q = ζ = e^{πi/N} and q^λ = t.
struct FloatR {
  int color;
  double lambda;
  cd q() const { return std::polar(1.0, std::numbers::pi / color); }
  cd qpow(double x) const { return std::polar(1.0, std::numbers::pi * x / color); }
  cd qint(double x) const { return (qpow(x) - qpow(-x)) / (q() - 1.0 / q()); }
  cd qbinom(int a, int b) const {
    cd num = 1, den = 1;
    for (int s = 0; s < b; ++s) {
      num *= qint(a - s);
      den *= qint(s + 1);
    }
    return num / den;
  }
  // coefficient of v̂_{j+n} ⊗ v̂_{i-n} in R(v̂_i ⊗ v̂_j)
  cd coeff(int i, int j, int n) const {
    cd falling = 1;
    for (int s = 0; s < n; ++s) falling *= qint(lambda - j - s);
    return qpow(-lambda * (i + j)) * qpow(2.0 * (i - n) * (j + n)) * qpow(n * (n - 1) / 2.0) * qbinom(n + j, j) *
           falling * std::pow(q() - 1.0 / q(), n);
  }
};

Matrix<WeightRat> diagonal_inverse(const Matrix<WeightRat>& d) {
  Matrix<WeightRat> out(d.rows(), d.cols());
  for (std::size_t k = 0; k < d.rows(); ++k) out(k, k) = d(k, k).inverse();
  return out;
}

Matrix<WeightRat> matrix_power(const Matrix<WeightRat>& m, int p) {
  auto acc = Matrix<WeightRat>::identity(m.rows());
  for (int k = 0; k < p; ++k) acc = acc * m;
  return acc;
}

}  // namespace

TEST(RMatrix, HatBasisEntries) {
  for (int color : {2, 3, 4}) {
    const auto r = r_matrix_hat(color).entries;
    EXPECT_EQ(r(0, 0), WeightRat(1));
    const auto src = flat_index({1, 0}, color);
    EXPECT_EQ(r(flat_index({0, 1}, color), src), t_pow(-1));
    EXPECT_EQ(r(flat_index({1, 0}, color), src), WeightRat(1) - t_pow(-2));
  }
}

TEST(RMatrix, AgreesWithFloatingPointFormula) {
  for (int color : {2, 3, 4}) {
    const double lambda = 0.3137;
    const FloatR fr{color, lambda};
    const cd t = std::polar(1.0, std::numbers::pi * lambda / color);
    const auto r = r_matrix_hat(color).entries;
    for (int i = 0; i < color; ++i)
      for (int j = 0; j < color; ++j)
        for (int a = 0; a < color; ++a)
          for (int b = 0; b < color; ++b) {
            cd expected = 0;
            const int n = a - j;
            if (n >= 0 && n <= i && b == i - n) expected = fr.coeff(i, j, n);
            const cd got = r(flat_index({a, b}, color), flat_index({i, j}, color)).evaluate(t);
            EXPECT_NEAR(std::abs(got - expected), 0.0, 1e-9) << "N=" << color << " (" << i << j << ")->(" << a << b << ")";
          }
  }
}

TEST(RMatrix, WeightPreservedAndInverse) {
  for (int color : {2, 3, 4}) {
    const auto r = r_matrix(color), rinv = r_matrix_inverse(color), rhat = r_matrix_hat(color);
    EXPECT_EQ(r.entries(0, 0), WeightRat(1));
    EXPECT_EQ(r.entries * rinv.entries, Matrix<WeightRat>::identity(r.entries.rows()));
    EXPECT_EQ(rinv.entries * r.entries, Matrix<WeightRat>::identity(r.entries.rows()));
    for (std::size_t a = 0; a < r.rows.size(); ++a)
      for (std::size_t b = 0; b < r.cols.size(); ++b) {
        if (weight(r.rows[a]) != weight(r.cols[b])) {
          EXPECT_TRUE(r.entries(a, b).is_zero());
          EXPECT_TRUE(rhat.entries(a, b).is_zero());
        }
        EXPECT_EQ(r.entries(a, b).is_zero(), rhat.entries(a, b).is_zero());
        EXPECT_TRUE(r.entries(a, b).is_laurent());
      }
  }
}

TEST(RMatrix, ConcurrentFirstUseIsConsistent) {
  std::vector<std::future<Matrix<WeightRat>>> fs;
  for (int k = 0; k < 4; ++k) fs.push_back(std::async(std::launch::async, [] { return r_matrix(5).entries; }));
  const auto first = fs[0].get();
  for (std::size_t k = 1; k < fs.size(); ++k) EXPECT_EQ(fs[k].get(), first);
}

TEST(BraidMatrix, IdentityAndInverse) {
  for (int color : {2, 3}) {
    EXPECT_EQ(braid_operator(BraidWord(3), color), Matrix<WeightRat>::identity(int_pow(color, 3)));
    EXPECT_EQ(braid_operator(BraidWord(2, {1, -1}), color), Matrix<WeightRat>::identity(int_pow(color, 2)));
    EXPECT_EQ(braid_operator(BraidWord(3, {-2, 2}), color), Matrix<WeightRat>::identity(int_pow(color, 3)));
  }
}

TEST(BraidMatrix, GeneratorIsKroneckerEmbedding) {
  const int color = 3;
  const auto id = Matrix<WeightRat>::identity(3);
  const auto r = r_matrix(color).entries;
  EXPECT_EQ(braid_operator(BraidWord(3, {1}), color), kron(r, id));
  EXPECT_EQ(braid_operator(BraidWord(3, {-2}), color), kron(id, r_matrix_inverse(color).entries));
  // word order: φ(σ1 σ2) = φ(σ1) φ(σ2)
  EXPECT_EQ(braid_operator(BraidWord(3, {1, 2}), color), kron(r, id) * kron(id, r));
}

TEST(BraidMatrix, BraidRelations) {
  for (int color : {2, 3}) {
    for (int n : {3, 4}) {
      for (int i = 1; i + 1 < n; ++i)
        EXPECT_EQ(braid_operator(BraidWord(n, {i, i + 1, i}), color), braid_operator(BraidWord(n, {i + 1, i, i + 1}), color))
            << "N=" << color << " n=" << n << " i=" << i;
    }
    EXPECT_EQ(braid_operator(BraidWord(4, {1, 3}), color), braid_operator(BraidWord(4, {3, 1}), color));
    EXPECT_EQ(braid_operator(BraidWord(4, {-1, 3}), color), braid_operator(BraidWord(4, {3, -1}), color));
  }
}

TEST(WeightBlocks, DimensionsAndStructure) {
  EXPECT_EQ(weight_indices(2, 3, 1).size(), 3u);
  for (int color : {2, 3})
    for (int n : {2, 3}) {
      std::size_t total = 0;
      const auto op = braid_matrix(BraidWord(n, n == 2 ? std::vector<int>{1, 1, -1} : std::vector<int>{1, -2, 1}), color);
      for (int m = 0; m <= n * (color - 1); ++m) {
        const auto block = weight_block(op, m);
        EXPECT_EQ(block.rows.size(), weight_indices(color, n, m).size());
        total += block.rows.size();
      }
      EXPECT_EQ(total, int_pow(color, n));
      EXPECT_EQ(weight_block(op, 0).entries, Matrix<WeightRat>::identity(1));
    }
  EXPECT_THROW(weight_block(e_action(2, 2), 2, 2, 1), WeightMixingError);
}

TEST(Ladder, SingleFactor) {
  for (int color : {2, 3, 4}) {
    const auto e = e_single(color), f = f_single(color);
    EXPECT_EQ(e(0, 1), weight_qint(color, 1, 0));
    EXPECT_TRUE(matrix_power(f, color).is_zero_matrix());
    EXPECT_FALSE(matrix_power(f, color - 1).is_zero_matrix());
  }
  const auto e3 = e_action(3, 3);
  for (std::size_t r = 0; r < e3.rows(); ++r) EXPECT_TRUE(e3(r, 0).is_zero());
}

TEST(Ladder, QuantumGroupRelationsOnTensors) {
  for (int color : {2, 3})
    for (int n : {1, 2, 3}) {
      const auto e = e_action(color, n), f = f_action(color, n), k = k_action(color, n);
      const auto kinv = diagonal_inverse(k);
      const WeightRat gap_inv(inverse_zeta_gap(color));
      EXPECT_EQ(e * f - f * e, (k - kinv) * gap_inv) << "N=" << color << " n=" << n;
      EXPECT_EQ(k * e * kinv, e * WeightRat(zeta_pow(color, 2)));
      EXPECT_EQ(k * f * kinv, f * WeightRat(zeta_pow(color, -2)));
    }
}

TEST(Ladder, HMatrix) {
  const auto h2 = h_matrix(2);
  EXPECT_EQ(h2(0, 0), t_pow(-1));
  EXPECT_EQ(h2(1, 1), -t_pow(-1));
  EXPECT_EQ(h_matrix(3)(2, 2), t_pow(-2, zeta_pow(3, 2)));
  for (int color : {2, 3, 4}) EXPECT_EQ(h_matrix(color), diagonal_inverse(matrix_power(k_single(color), color - 1)));
}

TEST(HighestWeight, SmallCases) {
  for (int color : {2, 3})
    for (int n : {1, 2, 3}) {
      const auto b = highest_weight_basis(color, n, 0);
      ASSERT_EQ(b.entries.cols(), 1u);
      EXPECT_EQ(b.entries(0, 0), WeightRat(1));
    }
  // n=2, N=2, m=1: y = v0⊗v1 - t^{-1} v1⊗v0, rows ordered (0,1), (1,0)
  const auto y = highest_weight_basis(2, 2, 1);
  ASSERT_EQ(y.entries.rows(), 2u);
  ASSERT_EQ(y.entries.cols(), 1u);
  EXPECT_EQ(y.rows[0], (TensorIndex{0, 1}));
  EXPECT_EQ(y.entries(0, 0), WeightRat(1));
  EXPECT_EQ(y.entries(1, 0), -t_pow(-1));
  EXPECT_EQ(lawrence_dimension(3, 3, 2), 3u);
}

TEST(HighestWeight, ColumnsSpanKernelOfE) {
  for (int color : {2, 3})
    for (int n : {2, 3}) {
      const auto e_full = e_action(color, n);
      for (int m = 1; m <= n * (color - 1); ++m) {
        const auto basis = highest_weight_operator(color, n, m);
        const auto e_block = e_full.submatrix(weight_indices(color, n, m - 1), weight_indices(color, n, m));
        EXPECT_TRUE((e_block * basis).is_zero_matrix());
        EXPECT_EQ(basis.cols(), null_space(e_block).cols()) << "N=" << color << " n=" << n << " m=" << m;
        EXPECT_EQ(rank(basis), basis.cols());
      }
    }
}

TEST(HighestWeight, DimensionIdentity) {
  for (int color = 2; color <= 4; ++color)
    for (int n = 1; n <= 5; ++n)
      for (int m = 0; m <= n * (color - 1); ++m) {
        std::size_t sum = 0;
        for (int k = 0; k < color; ++k)
          if (m - k >= 0) sum += lawrence_dimension(color, n, m - k);
        EXPECT_EQ(weight_indices(color, n, m).size(), sum) << color << " " << n << " " << m;
      }
}

TEST(Equivariance, SelectsCoproductA) {
  for (int color : {2, 3})
    for (int n : {2, 3}) {
      EXPECT_TRUE(equivariance_holds(color, n, Coproduct::A)) << color << " " << n;
      EXPECT_FALSE(equivariance_holds(color, n, Coproduct::B)) << color << " " << n;
    }
}
