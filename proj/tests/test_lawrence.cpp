#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "ado/lawrence.hpp"

using namespace ado;

namespace {

WeightRat t_pow(int e) { return WeightRat::monomial(e); }

// x as an element of Q(x)
XRat xv(int e = 1) { return XRat::monomial(e); }

// Leibniz expansion of det over Q, used as an oracle for the Burau side.
Rational leibniz_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) inversions += p[a] > p[b];
    Rational prod = inversions % 2 ? -1 : 1;
    for (std::size_t a = 0; a < n; ++a) prod *= m[a][p[a]];
    total += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

Rational eval_x(const XRat& f, const Rational& x) {
  auto ev = [&](const XLaurent& p) {
    Rational acc = 0;
    for (const auto& [e, c] : p.terms()) {
      Rational pw = 1;
      for (int k = 0; k < std::abs(e); ++k) pw *= x;
      acc += c * (e >= 0 ? pw : 1 / pw);
    }
    return acc;
  };
  return ev(f.num()) / ev(f.den());
}

std::vector<BraidWord> sample_words() {
  return {BraidWord(2, {1}),           BraidWord(2, {1, 1, 1}),    BraidWord(3, {1, -2, 1, -2}),
          BraidWord(3, {1, 1, 1, 2, -1, 2}), BraidWord(3, {2, 2, -1}), BraidWord(4, {1, -2, 3, 2, -1})};
}

}  // namespace

TEST(TruncatedLawrence, WeightZeroAndIdentity) {
  for (int color : {2, 3}) {
    EXPECT_EQ(truncated_lawrence_matrix(BraidWord(3, {1, -2, 2}), color, 0), Matrix<WeightRat>::identity(1));
    for (int m = 0; m <= top_lawrence_weight(color, 3); ++m) {
      const auto id = truncated_lawrence_matrix(BraidWord(3), color, m);
      EXPECT_EQ(id, Matrix<WeightRat>::identity(lawrence_dimension(color, 3, m)));
      EXPECT_EQ(trace_Y(BraidWord(3), color, m), WeightRat(static_cast<int>(lawrence_dimension(color, 3, m))));
    }
    EXPECT_TRUE(trace_Y(BraidWord(3), color, top_lawrence_weight(color, 3) + 1).is_zero());
    EXPECT_TRUE(trace_Y(BraidWord(3), color, -1).is_zero());
  }
}

TEST(TruncatedLawrence, Functoriality) {
  const auto l1 = truncated_lawrence_matrix(BraidWord(2, {1}), 2, 1);
  ASSERT_EQ(l1.rows(), 1u);
  EXPECT_EQ(l1 * l1, truncated_lawrence_matrix(BraidWord(2, {1, 1}), 2, 1));
  EXPECT_EQ(l1(0, 0), -t_pow(-2));  // -x with x = t^{-2}
  for (int color : {2, 3})
    for (int m = 0; m <= top_lawrence_weight(color, 3); ++m) {
      const auto a = truncated_lawrence_matrix(BraidWord(3, {1, -2}), color, m);
      const auto b = truncated_lawrence_matrix(BraidWord(3, {2, 1}), color, m);
      EXPECT_EQ(a * b, truncated_lawrence_matrix(BraidWord(3, {1, -2, 2, 1}), color, m));
    }
}

TEST(TruncatedLawrence, BraidRelations) {
  for (int color : {2, 3})
    for (int m = 0; m <= top_lawrence_weight(color, 4); ++m) {
      EXPECT_EQ(truncated_lawrence_matrix(BraidWord(4, {1, 2, 1}), color, m),
                truncated_lawrence_matrix(BraidWord(4, {2, 1, 2}), color, m));
      EXPECT_EQ(truncated_lawrence_matrix(BraidWord(4, {1, 3}), color, m),
                truncated_lawrence_matrix(BraidWord(4, {3, 1}), color, m));
    }
}

TEST(TruncatedLawrence, TraceRoutesAgree) {
  std::mt19937 rng(5);
  for (int color : {2, 3})
    for (int n : {2, 3}) {
      std::vector<BraidWord> ws;
      for (int g = 1; g < n; ++g) {
        ws.emplace_back(n, std::vector<int>{g});
        ws.emplace_back(n, std::vector<int>{-g});
      }
      for (int k = 0; k < 2; ++k) {
        std::vector<int> letters;
        for (int s = 0; s < 5; ++s) letters.push_back(static_cast<int>(1 + rng() % (n - 1)) * (rng() % 2 ? 1 : -1));
        ws.emplace_back(n, letters);
      }
      for (const auto& w : ws)
        for (int m = 0; m <= top_lawrence_weight(color, n); ++m)
          EXPECT_EQ(truncated_lawrence_matrix(w, color, m).trace(), trace_Y(w, color, m))
              << "N=" << color << " [" << w.to_string() << "] m=" << m;
    }
}

TEST(TruncatedLawrence, WeightTracesSumToFullTrace) {
  for (int color : {2, 3})
    for (const auto& w : sample_words()) {
      const auto op = braid_operator(w, color);
      WeightRat sum_x;
      for (int m = 0; m <= w.strands() * (color - 1); ++m) {
        WeightRat tr_x = weight_block(op, color, w.strands(), m).trace();
        WeightRat from_y;
        for (int k = 0; k < color; ++k) from_y += trace_Y(w, color, m - k);
        EXPECT_EQ(tr_x, from_y);
        sum_x += tr_x;
      }
      EXPECT_EQ(sum_x, op.trace());
    }
}

TEST(Burau, Generators) {
  EXPECT_EQ(burau_reduced(BraidWord(2, {1})), Matrix<XRat>::identity(1) * (-xv()));
  EXPECT_EQ(burau_reduced(BraidWord(3)), Matrix<XRat>::identity(2));
  const auto d = determinant(burau_reduced(BraidWord(3, {1, 2})));
  EXPECT_TRUE(d == xv(2) || d == -xv(2));
  EXPECT_THROW(burau_reduced(BraidWord(1)), std::invalid_argument);
  for (int n : {3, 4, 5}) {
    EXPECT_EQ(burau_reduced(BraidWord(n, {1, 2, 1})), burau_reduced(BraidWord(n, {2, 1, 2})));
    EXPECT_EQ(burau_reduced(BraidWord(n, {1, -1})), Matrix<XRat>::identity(static_cast<std::size_t>(n - 1)));
  }
  EXPECT_EQ(burau_reduced(BraidWord(4, {1, 3})), burau_reduced(BraidWord(4, {3, 1})));
}

TEST(Burau, CalibratedAgainstQuantumSide) {
  // tr L_{n,1}(w) must equal trace_Y(w, 2, 1) under x = t^{-2}; other
  // conventions (transpose with x ↦ x^{-1}, inverse) fail this on some word.
  for (const auto& w : sample_words())
    EXPECT_EQ(x_to_weight(burau_reduced(w).trace()), trace_Y(w, 2, 1)) << w.to_string();
  const BraidWord w(3, {1, 1, -2});
  const auto swapped = burau_reduced(w).transpose().map([](const XRat& f) { return f.substitute_power(-1); });
  EXPECT_NE(x_to_weight(swapped.trace()), trace_Y(w, 2, 1));
}

TEST(Burau, DeterminantMatchesLeibnizOracle) {
  for (const auto& w : sample_words()) {
    const auto b = burau_reduced(w);
    const auto i_minus = Matrix<XRat>::identity(b.rows()) - b;
    const auto det = determinant(i_minus);
    for (const Rational x : {Rational(2), Rational(-3, 5), Rational(7, 2)}) {
      std::vector<std::vector<Rational>> num(b.rows(), std::vector<Rational>(b.cols()));
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) num[r][c] = eval_x(i_minus(r, c), x);
      EXPECT_EQ(eval_x(det, x), leibniz_det(num)) << w.to_string();
    }
  }
}

TEST(ExteriorPower, EdgeCases) {
  const auto b = burau_reduced(BraidWord(4, {1, -2, 3}));
  EXPECT_EQ(exterior_power(b, 0), Matrix<XRat>::identity(1));
  const auto top = exterior_power(b, 3);
  ASSERT_EQ(top.rows(), 1u);
  EXPECT_EQ(top(0, 0), determinant(b));
  EXPECT_EQ(exterior_power(b, 1), b);
  EXPECT_EQ(exterior_power(b, 2).rows(), 3u);
}

TEST(ExteriorPower, TracesMatchTruncatedLawrenceAtN2) {
  for (const auto& w : sample_words())
    for (int k = 0; k < w.strands(); ++k)
      EXPECT_EQ(x_to_weight(exterior_power(burau_reduced(w), static_cast<std::size_t>(k)).trace()), trace_Y(w, 2, k))
          << w.to_string() << " k=" << k;
  const BraidWord w(3, {1, -2});
  EXPECT_EQ(x_to_weight(exterior_power(burau_reduced(w), 2).trace()), trace_Y(w, 2, 2));
}

TEST(Alexander, KnownKnots) {
  const WeightRat x = t_pow(-2), xinv = t_pow(2), one(1);
  EXPECT_EQ(alexander_via_burau(BraidWord(2, {1})), one);
  EXPECT_EQ(alexander_via_burau(BraidWord(3, {1, 2})), one);
  EXPECT_EQ(alexander_via_burau(BraidWord(2, {1, 1, 1})), x - one + xinv);
  EXPECT_EQ(alexander_via_burau(BraidWord(3, {1, 2, 1, 2})), x - one + xinv);
  EXPECT_EQ(alexander_via_burau(BraidWord(3, {1, -2, 1, -2})), -x + WeightRat(3) - xinv);
  EXPECT_EQ(alexander_via_burau(BraidWord(2, {1, 1, 1, 1, 1})), x * x - x + one - xinv + xinv * xinv);
  EXPECT_EQ(alexander_via_burau(BraidWord(3, {1, 1, 1, 2, -1, 2})), WeightRat(2) * x - WeightRat(3) + WeightRat(2) * xinv);
  EXPECT_EQ(alexander_via_burau(BraidWord(1)), one);
  EXPECT_THROW(alexander_via_burau(BraidWord(2)), NotAKnotError);
}
