#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ado/format.hpp"

namespace ado {

enum class CheckLevel { Fast, Full };

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;
};

struct CheckLimits {
  int max_strands = 3;
  int max_color = 3;
  std::size_t max_length = 6;
  bool spot_color4 = false;  // one N = 4 run on top of max_color
};

inline CheckLimits limits_for(CheckLevel level) {
  if (level == CheckLevel::Fast) return {3, 3, 6, false};
  return {4, 3, 6, true};
}

/// Random word in B_n whose closure is a knot. An n-cycle has the parity of
/// n-1, so a length of the other parity is shortened by one.
inline BraidWord random_knot_braid(std::mt19937& rng, int strands, std::size_t length) {
  if (strands == 1) return BraidWord(1);
  if (length % 2 != static_cast<std::size_t>(strands - 1) % 2) length = length == 0 ? 1 : length - 1;
  std::uniform_int_distribution<int> gen(1, strands - 1), sign(0, 1);
  for (;;) {
    std::vector<int> letters;
    for (std::size_t k = 0; k < length; ++k) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    BraidWord w(strands, std::move(letters));
    if (closure_is_knot(w)) return w;
  }
}

/// Rows of the built-in table as braid words, filtered to n ≤ max_strands.
inline std::vector<std::pair<std::string, BraidWord>> builtin_knots(int max_strands = 99) {
  std::vector<std::pair<std::string, BraidWord>> out;
  for (const auto& row : parse_table(builtin_table_text()).rows) {
    if (row.color != 2 || row.strands > max_strands) continue;
    out.emplace_back(row.name, BraidWord::parse(row.word, row.strands));
  }
  return out;
}

namespace detail {

class SuiteRecorder {
 public:
  explicit SuiteRecorder(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) {
      r_.passed = false;
      r_.failures.push_back(what);
    }
  }

 private:
  SuiteResult& r_;
};

inline std::vector<int> colors_for(const CheckLimits& lim) {
  std::vector<int> cs;
  for (int c = 2; c <= lim.max_color; ++c) cs.push_back(c);
  return cs;
}

inline void suite_braid_relations(const CheckLimits& lim, SuiteRecorder& rec) {
  auto check_eq = [&](const BraidWord& a, const BraidWord& b, int color) {
    rec.check(braid_operator(a, color) == braid_operator(b, color),
              "N=" + std::to_string(color) + ": [" + a.to_string() + "] != [" + b.to_string() + "] in B_" +
                  std::to_string(a.strands()));
  };
  auto run = [&](int color, int n) {
    check_eq(BraidWord(n, {1, -1}), BraidWord(n), color);
    for (int i = 1; i + 1 < n; ++i) check_eq(BraidWord(n, {i, i + 1, i}), BraidWord(n, {i + 1, i, i + 1}), color);
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j) check_eq(BraidWord(n, {i, j}), BraidWord(n, {j, i}), color);
  };
  for (int color : colors_for(lim))
    for (int n = 2; n <= lim.max_strands; ++n) run(color, n);
  if (lim.spot_color4) run(4, 3);
}

inline void suite_equivariance(const CheckLimits& lim, SuiteRecorder& rec) {
  auto run = [&](int color, int n) {
    const std::string tag = "N=" + std::to_string(color) + " n=" + std::to_string(n);
    rec.check(equivariance_holds(color, n, Coproduct::A), tag + ": selected coproduct not equivariant");
    rec.check(!equivariance_holds(color, n, Coproduct::B), tag + ": opposite coproduct unexpectedly equivariant");
  };
  for (int color : colors_for(lim))
    for (int n = 2; n <= std::min(lim.max_strands, 3); ++n) run(color, n);
  if (lim.spot_color4) run(4, 2);
}

inline std::vector<BraidWord> sample_knots(const CheckLimits& lim, std::mt19937& rng) {
  std::vector<BraidWord> ws;
  for (auto& [name, w] : builtin_knots(lim.max_strands))
    if (w.length() <= lim.max_length) ws.push_back(w);
  for (int n = 2; n <= lim.max_strands; ++n) ws.push_back(random_knot_braid(rng, n, std::min<std::size_t>(lim.max_length, 5)));
  return ws;
}

inline void suite_pipelines(const CheckLimits& lim, SuiteRecorder& rec) {
  std::mt19937 rng(1729);
  const auto ws = sample_knots(lim, rng);
  for (int color : colors_for(lim))
    for (const auto& w : ws)
      rec.check(direct_invariant(w, color).value == lawrence_invariant(w, color).value,
                "N=" + std::to_string(color) + " [" + w.to_string() + "]: pipelines differ");
  if (lim.spot_color4) {
    const BraidWord trefoil(2, {1, 1, 1});
    rec.check(direct_invariant(trefoil, 4).value == lawrence_invariant(trefoil, 4).value, "N=4 trefoil: pipelines differ");
  }
}

inline void suite_markov(const CheckLimits& lim, SuiteRecorder& rec) {
  std::mt19937 rng(4242);
  for (int color : colors_for(lim))
    for (auto& [name, w] : builtin_knots(lim.max_strands - 1)) {
      if (w.length() > lim.max_length) continue;
      const auto base = direct_invariant(w, color).value;
      const std::string tag = "N=" + std::to_string(color) + " " + name;
      if (w.strands() > 1) {
        std::uniform_int_distribution<int> gen(1, w.strands() - 1);
        const int g = gen(rng) * (rng() % 2 ? 1 : -1);
        rec.check(direct_invariant(conjugate(w, g), color).value == base, tag + ": conjugation by " + std::to_string(g));
      }
      for (int sign : {1, -1})
        rec.check(direct_invariant(stabilize(w, sign), color).value == base,
                  tag + ": stabilization " + (sign > 0 ? "+" : "-"));
    }
}

inline void suite_two_strand(const CheckLimits& lim, SuiteRecorder& rec) {
  for (int color : colors_for(lim)) {
    for (const auto& w : {BraidWord(2), BraidWord(2, {1, 1}), BraidWord(2, {1, 1, 1, 1})})
      rec.check(two_strand_trace_check(color, w),
                "N=" + std::to_string(color) + " [" + w.to_string() + "]: two-strand trace identity");
    for (int k = 1; k <= 2; ++k)
      rec.check(coefficient_C0_sum_form(color, k) == coefficient_C(color, k + 1, 0),
                "N=" + std::to_string(color) + " k=" + std::to_string(k) + ": C_0 sum form");
  }
}

inline void suite_n2_oracle(const CheckLimits& lim, SuiteRecorder& rec) {
  std::mt19937 rng(99);
  auto ws = sample_knots(lim, rng);
  for (const auto& w : ws) {
    rec.check(lawrence_invariant(w, 2).value == alexander_via_burau(w), "[" + w.to_string() + "]: N=2 vs Burau");
    if (w.strands() < 2) continue;
    const auto burau = burau_reduced(w);
    for (int k = 1; k < w.strands(); ++k)
      rec.check(x_to_weight(exterior_power(burau, static_cast<std::size_t>(k)).trace()) == trace_Y(w, 2, k),
                "[" + w.to_string() + "] k=" + std::to_string(k) + ": exterior power trace");
  }
}

}  // namespace detail

inline std::vector<std::pair<std::string, std::function<void(const CheckLimits&, detail::SuiteRecorder&)>>>
selfcheck_suites() {
  return {
      {"braid-relation", detail::suite_braid_relations}, {"equivariance", detail::suite_equivariance},
      {"pipeline-equivalence", detail::suite_pipelines}, {"markov", detail::suite_markov},
      {"two-strand-trace", detail::suite_two_strand},                  {"n2-oracle", detail::suite_n2_oracle},
  };
}

/// Runs every suite; exceptions inside a suite count as a failure of that suite.
inline std::vector<SuiteResult> run_selfcheck(CheckLevel level) {
  const auto lim = limits_for(level);
  std::vector<SuiteResult> results;
  for (const auto& [name, fn] : selfcheck_suites()) {
    SuiteResult r;
    r.name = name;
    detail::SuiteRecorder rec(r);
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(lim, rec);
    } catch (const std::exception& ex) {
      rec.check(false, std::string("exception: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace ado
