#pragma once

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <optional>
#include <ostream>
#include <thread>

#include "ado/format.hpp"
#include "ado/selfcheck.hpp"

namespace ado::cli {

enum ExitCode : int { Ok = 0, Usage = 1, ComputationError = 2, SelfcheckFailure = 3 };

enum class PipelineChoice { Direct, Lawrence, Both };

struct JobSpec {
  std::string braid;
  int strands = 1;
  int color = 2;
  PipelineChoice pipeline = PipelineChoice::Both;
  bool json = false;
  Variable var = Variable::X;
  std::vector<double> lambdas;
  std::size_t cap = 4096;
};

/// N^n, saturating so a huge request cannot wrap around under the cap.
inline std::size_t state_count(int color, int strands) {
  std::size_t total = 1;
  for (int k = 0; k < strands; ++k) {
    if (total > (std::size_t{1} << 40)) return total;
    total *= static_cast<std::size_t>(color);
  }
  return total;
}

inline std::string format_complex(std::complex<double> z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

inline nlohmann::json sample_json(const NumericSample& s) {
  nlohmann::json j = {{"lambda", s.lambda}, {"condition", s.condition}, {"pole", s.pole}};
  if (!s.pole) {
    j["re"] = s.value.real();
    j["im"] = s.value.imag();
  }
  if (!s.warning.empty()) j["warning"] = s.warning;
  return j;
}

inline int cmd_compute(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  if (spec.color < 2 || spec.strands < 1) {
    err << "error: need n >= 1 and N >= 2\n";
    return Usage;
  }
  BraidWord w;
  try {
    w = BraidWord::parse(spec.braid, spec.strands);
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return Usage;
  }
  if (const auto states = state_count(spec.color, spec.strands); states > spec.cap) {
    err << "warning: unsupported size, N^n = " << states << " basis states exceeds the cap " << spec.cap
        << " (raise --cap to run anyway)\n";
    return ComputationError;
  }
  std::vector<InvariantResult> results;
  try {
    if (spec.pipeline != PipelineChoice::Lawrence) results.push_back(direct_invariant(w, spec.color));
    if (spec.pipeline != PipelineChoice::Direct) results.push_back(lawrence_invariant(w, spec.color));
  } catch (const NotAKnotError& ex) {
    err << "not a knot: " << ex.what() << "\n";
    return ComputationError;
  } catch (const Error& ex) {
    err << "computation error: " << ex.what() << "\n";
    return ComputationError;
  }
  const bool both = results.size() == 2;
  const bool agree = !both || results[0].value == results[1].value;

  std::vector<NumericSample> samples;
  for (double l : spec.lambdas) samples.push_back(evaluate_at(results.front().value, spec.color, l));

  if (spec.json) {
    auto arr = nlohmann::json::array();
    for (const auto& r : results) {
      auto j = to_json(r, "", spec.var);
      j.erase("name");
      if (both) j["pipelines_agree"] = agree;
      if (!samples.empty()) {
        j["samples"] = nlohmann::json::array();
        for (const auto& s : samples) j["samples"].push_back(sample_json(s));
      }
      arr.push_back(std::move(j));
    }
    out << (both ? arr : arr[0]).dump(2) << "\n";
  } else {
    const std::string var = spec.var == Variable::X ? "x" : "t";
    for (const auto& r : results)
      out << "Phi^" << spec.color << " [" << to_string(r.pipeline) << "] = " << format_value(r.value, spec.var) << "\n";
    if (both) out << "pipelines agree: " << (agree ? "yes" : "NO") << "\n";
    for (const auto& s : samples) {
      out << "lambda = " << s.lambda << ": ";
      if (s.pole) out << "pole";
      else out << format_complex(s.value);
      if (!s.warning.empty()) out << "  [" << s.warning << "]";
      out << "\n";
    }
  }
  return agree ? Ok : ComputationError;
}

inline int cmd_selfcheck(CheckLevel level, std::ostream& out) {
  bool all = true;
  for (const auto& r : run_selfcheck(level)) {
    out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(22) << r.name << std::right << std::setw(5)
        << r.checks << " checks  " << std::fixed << std::setprecision(3) << r.seconds << "s\n";
    out.unsetf(std::ios::fixed);
    for (const auto& f : r.failures) out << "    " << f << "\n";
    all = all && r.passed;
  }
  return all ? Ok : SelfcheckFailure;
}

/// Computes one table row with both pipelines; the record carries the direct
/// value, an agreement flag, or an "error" field.
inline nlohmann::json table_row_record(const TableRow& row, std::size_t cap) {
  nlohmann::json j;
  try {
    const auto w = BraidWord::parse(row.word, row.strands);
    if (state_count(row.color, row.strands) > cap) throw Error("unsupported size: N^n exceeds the cap");
    const auto direct = direct_invariant(w, row.color);
    const auto lawrence = lawrence_invariant(w, row.color);
    j = to_json(direct, row.name);
    j["pipeline"] = "both";
    j["pipelines_agree"] = direct.value == lawrence.value;
  } catch (const std::exception& ex) {
    j = {{"name", row.name}, {"n", row.strands}, {"N", row.color}, {"error", ex.what()}};
  }
  j["line"] = row.line;
  return j;
}

/// Runs every row (in parallel when jobs > 1) and returns records in input order.
inline nlohmann::json run_table(const TableParse& parsed, std::size_t cap, unsigned jobs) {
  std::vector<nlohmann::json> records(parsed.rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < parsed.rows.size();) records[k] = table_row_record(parsed.rows[k], cap);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(parsed.rows.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& e : parsed.errors)
    records.push_back({{"name", e.name}, {"line", e.line}, {"error", e.message}});
  std::stable_sort(records.begin(), records.end(),
                   [](const auto& a, const auto& b) { return a["line"].template get<std::size_t>() < b["line"].template get<std::size_t>(); });
  return nlohmann::json(records);
}

inline int cmd_table(const std::string& text, std::size_t cap, unsigned jobs, std::ostream& out) {
  const auto records = run_table(parse_table(text), cap, jobs);
  out << records.dump(2) << "\n";
  const bool ok = std::all_of(records.begin(), records.end(), [](const auto& r) {
    return !r.contains("error") && r.value("pipelines_agree", false);
  });
  return ok ? Ok : ComputationError;
}

}  // namespace ado::cli
