// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>

#include "ado/selfcheck.hpp"

using namespace ado;

namespace {

struct Criterion {
  std::string failure;
  std::size_t checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failure.empty()) failure = what;
  }
};

std::vector<BraidWord> table_braids() {
  std::vector<BraidWord> ws;
  for (auto& [name, w] : builtin_knots()) ws.push_back(w);
  return ws;
}

std::string tag(int color, const BraidWord& w) { return "N=" + std::to_string(color) + " [" + w.to_string() + "]"; }

void pipeline_equivalence(Criterion& c) {
  for (int color : {2, 3})
    for (const auto& w : table_braids())
      c.expect(direct_invariant(w, color).value == lawrence_invariant(w, color).value, tag(color, w) + " pipelines differ");
}

void n2_reduction(Criterion& c) {
  for (const auto& w : table_braids())
    c.expect(lawrence_invariant(w, 2).value == alexander_via_burau(w), tag(2, w) + " differs from the Burau determinant");
  const WeightRat x = WeightRat::monomial(-2), xinv = WeightRat::monomial(2);
  c.expect(alexander_via_burau(BraidWord(2, {1, 1, 1})) == x - WeightRat(1) + xinv, "trefoil oracle value");
  c.expect(alexander_via_burau(BraidWord(3, {1, -2, 1, -2})) == -x + WeightRat(3) - xinv, "figure-eight oracle value");
  c.expect(lawrence_invariant(BraidWord(2, {1, 1, 1}), 2).value == x - WeightRat(1) + xinv, "trefoil value");
  c.expect(lawrence_invariant(BraidWord(3, {1, -2, 1, -2}), 2).value == -x + WeightRat(3) - xinv, "figure-eight value");
}

void markov(Criterion& c) {
  std::mt19937 rng(31337);
  for (int color : {2, 3})
    for (const auto& w : table_braids()) {
      const auto base = direct_invariant(w, color).value;
      std::uniform_int_distribution<int> gen(1, w.strands() - 1);
      for (int k = 0; k < 5; ++k) {
        const int g = gen(rng) * (rng() % 2 ? 1 : -1);
        c.expect(direct_invariant(conjugate(w, g), color).value == base, tag(color, w) + " conjugation by " + std::to_string(g));
      }
      for (int sign : {1, -1})
        c.expect(direct_invariant(stabilize(w, sign), color).value == base, tag(color, w) + " stabilization");
    }
}

void scalarity(Criterion& c) {
  std::mt19937 rng(8);
  auto ws = table_braids();
  for (int n = 2; n <= 4; ++n) ws.push_back(random_knot_braid(rng, n, 6));
  for (int color : {2, 3})
    for (const auto& w : ws) {
      const auto traced = twisted_partial_trace(braid_operator(w, color), color, w.strands());
      bool scalar = true;
      for (std::size_t a = 0; a < traced.rows(); ++a)
        for (std::size_t b = 0; b < traced.cols(); ++b)
          scalar = scalar && (a == b ? traced(a, b) == traced(0, 0) : traced(a, b).is_zero());
      c.expect(scalar, tag(color, w) + " partial trace is not scalar");
      try {
        direct_invariant(w, color);
        c.expect(true, "");
      } catch (const NonScalarError&) {
        c.expect(false, tag(color, w) + " direct_invariant raised the scalarity assertion");
      }
    }
}

void two_strand(Criterion& c) {
  for (int color : {2, 3})
    for (const auto& w : {BraidWord(2), BraidWord(2, {1, 1}), BraidWord(2, {1, 1, 1, 1})})
      c.expect(two_strand_trace_check(color, w), tag(color, w) + " two-strand trace identity");
  for (auto [color, k] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}})
    c.expect(coefficient_C0_sum_form(color, k) == coefficient_C(color, k + 1, 0),
             "C_0 sum form, N=" + std::to_string(color) + " k=" + std::to_string(k));
}

void key_consistency(Criterion& c) {
  std::mt19937 rng(12);
  for (int color : {2, 3})
    for (int n : {2, 3}) {
      std::vector<BraidWord> ws;
      for (int g = 1; g < n; ++g) {
        ws.emplace_back(n, std::vector<int>{g});
        ws.emplace_back(n, std::vector<int>{-g});
      }
      for (int k = 0; k < 2; ++k) {
        std::vector<int> letters;
        for (int s = 0; s < 6; ++s) letters.push_back(static_cast<int>(1 + rng() % (n - 1)) * (rng() % 2 ? 1 : -1));
        ws.emplace_back(n, letters);
      }
      for (const auto& w : ws)
        for (int m = 0; m <= top_lawrence_weight(color, n); ++m)
          c.expect(truncated_lawrence_matrix(w, color, m).trace() == trace_Y(w, color, m),
                   tag(color, w) + " m=" + std::to_string(m) + " trace routes differ");
      c.expect(equivariance_holds(color, n, Coproduct::A), "selected coproduct fails equivariance");
      c.expect(!equivariance_holds(color, n, Coproduct::B), "opposite coproduct passes equivariance");
    }
}

void exterior_traces(Criterion& c) {
  auto ws = table_braids();
  for (const auto& w : table_braids())
    if (w.strands() == 3) ws.push_back(stabilize(w, 1));
  for (const auto& w : ws) {
    if (w.strands() > 4) continue;
    const auto burau = burau_reduced(w);
    for (int k = 0; k < w.strands(); ++k)
      c.expect(x_to_weight(exterior_power(burau, static_cast<std::size_t>(k)).trace()) == trace_Y(w, 2, k),
               "[" + w.to_string() + "] k=" + std::to_string(k));
  }
}

void structural(Criterion& c) {
  for (int color : {2, 3})
    for (int n = 2; n <= 4; ++n) {
      for (int i = 1; i + 1 < n; ++i)
        c.expect(braid_operator(BraidWord(n, {i, i + 1, i}), color) == braid_operator(BraidWord(n, {i + 1, i, i + 1}), color),
                 "braid relation N=" + std::to_string(color) + " n=" + std::to_string(n));
      for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
          c.expect(braid_operator(BraidWord(n, {i, j}), color) == braid_operator(BraidWord(n, {j, i}), color), "far commutation");
      const auto op = braid_operator(BraidWord(n, n == 2 ? std::vector<int>{1, -1, 1} : std::vector<int>{1, -2, n - 1}), color);
      for (int m = 0; m <= n * (color - 1); ++m) {
        try {
          weight_block(op, color, n, m);
          c.expect(true, "");
        } catch (const WeightMixingError&) {
          c.expect(false, "weight mixing N=" + std::to_string(color) + " n=" + std::to_string(n));
        }
      }
    }
  for (int color = 2; color <= 4; ++color)
    for (int n = 1; n <= 5; ++n)
      for (int m = 0; m <= n * (color - 1); ++m) {
        std::size_t sum = 0;
        for (int k = 0; k < color; ++k)
          if (m >= k) sum += lawrence_dimension(color, n, m - k);
        c.expect(weight_indices(color, n, m).size() == sum, "dimension identity");
      }
}

void cross_presentation(Criterion& c) {
  for (int color : {2, 3}) {
    c.expect(direct_invariant(BraidWord(2, {1, 1, 1}), color).value == direct_invariant(BraidWord(3, {1, 2, 1, 2}), color).value,
             "trefoil presentations, N=" + std::to_string(color));
    c.expect(lawrence_invariant(BraidWord(2, {1, 1, 1}), color).value ==
                 lawrence_invariant(BraidWord(3, {1, 2, 1, 2}), color).value,
             "trefoil presentations (lawrence), N=" + std::to_string(color));
    for (const auto& w : {BraidWord(2, {1}), BraidWord(3, {1, 2}), BraidWord(2, {-1})}) {
      c.expect(direct_invariant(w, color).value == WeightRat(1), tag(color, w) + " unknot");
      c.expect(lawrence_invariant(w, color).value == WeightRat(1), tag(color, w) + " unknot (lawrence)");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"pipeline equivalence on the built-in table, N in {2,3}", pipeline_equivalence},
      {"N=2 reduction to the Burau Alexander polynomial", n2_reduction},
      {"Markov invariance (5 conjugations, 2 stabilizations)", markov},
      {"scalarity of the twisted partial trace", scalarity},
      {"two-strand coefficient lemma and C_0 sum form", two_strand},
      {"highest-weight traces and coproduct selection", key_consistency},
      {"exterior powers of Burau vs N=2 traces", exterior_traces},
      {"braid relations, weight blocks, dimension identity", structural},
      {"cross-presentation of trefoil and unknot", cross_presentation},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(c);
    } catch (const std::exception& ex) {
      if (c.failure.empty()) c.failure = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failure.empty();
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " (" << c.checks
              << " checks, " << secs << "s)";
    if (!ok) std::cout << " -- " << c.failure;
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
