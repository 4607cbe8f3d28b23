#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ado/invariant.hpp"

namespace ado {

enum class Variable { T, X };

inline std::string format_rational(const Rational& q) { return q.get_str(); }

namespace detail {

// Monomial t^e rendered in t, or in x through x = t^{-2} (x^{1/2} = t^{-1}).
inline std::string monomial_text(int e, Variable var) {
  if (var == Variable::T) {
    if (e == 0) return "";
    return e == 1 ? "t" : "t^" + std::to_string(e);
  }
  if (e % 2 == 0) {
    const int k = -e / 2;
    if (k == 0) return "";
    return k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return "x^(" + std::to_string(-e) + "/2)";
}

// x-display sorts by the x exponent, which reverses the t order.
inline int display_key(int e, Variable var) { return var == Variable::T ? e : -e; }

}  // namespace detail

/// Laurent polynomial in t shown in t or x, highest displayed power first.
inline std::string format_laurent(const WeightLaurent& p, Variable var = Variable::T) {
  if (p.is_zero()) return "0";
  auto terms = p.terms();
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return detail::display_key(a.first, var) > detail::display_key(b.first, var);
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    const std::string mono = detail::monomial_text(e, var);
    std::string body;
    bool negative = false;
    if (c.is_rational()) {
      const Rational q = c.coeff(0);
      negative = sgn(q) < 0;
      const Rational a = abs(q);
      if (mono.empty()) body = format_rational(a);
      else body = (a == 1 ? "" : format_rational(a)) + mono;
    } else {
      std::ostringstream os;
      os << "(" << c << ")";
      body = os.str() + (mono.empty() ? "" : "*" + mono);
    }
    if (out.empty()) out = negative ? "-" + body : body;
    else out += (negative ? " - " : " + ") + body;
  }
  return out;
}

inline std::string format_value(const WeightRat& v, Variable var = Variable::T) {
  if (v.is_laurent()) return format_laurent(v.num(), var);
  return "(" + format_laurent(v.num(), var) + ") / (" + format_laurent(v.den(), var) + ")";
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

inline nlohmann::json laurent_to_json(const WeightLaurent& p, const CyclotomicField& field) {
  auto arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    auto coords = nlohmann::json::array();
    for (const auto& q : c.coords(field)) coords.push_back(format_rational(q));
    arr.push_back(nlohmann::json::array({coords, e}));
  }
  return arr;
}

inline WeightLaurent laurent_from_json(const nlohmann::json& arr, const CyclotomicField& field) {
  if (!arr.is_array()) throw ParseError("expected an array of [coefficients, exponent] terms");
  WeightLaurent p;
  for (const auto& term : arr) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_array() || !term[1].is_number_integer())
      throw ParseError("malformed term " + term.dump());
    std::vector<Rational> coeffs;
    for (const auto& s : term[0]) {
      if (!s.is_string()) throw ParseError("coefficient must be a string \"p/q\"");
      Rational q;
      if (q.set_str(s.get<std::string>(), 10) != 0) throw ParseError("bad rational '" + s.get<std::string>() + "'");
      q.canonicalize();
      coeffs.push_back(std::move(q));
    }
    if (coeffs.size() > field.degree()) throw ParseError("coefficient vector longer than the field degree");
    p = p + WeightLaurent(CycNum(field, std::move(coeffs)), term[1].get<int>());
  }
  return p;
}

}  // namespace detail

/// Serializes one result. The value is exact; "display" is informational.
inline nlohmann::json to_json(const InvariantResult& r, const std::string& name, Variable display = Variable::X) {
  const auto& field = cyclotomic_field(r.color);
  return {
      {"name", name},
      {"n", r.strands()},
      {"N", r.color},
      {"e", exponent_sum(r.braid)},
      {"pipeline", std::string(to_string(r.pipeline))},
      {"variable", "t"},
      {"num", detail::laurent_to_json(r.value.num(), field)},
      {"den", detail::laurent_to_json(r.value.den(), field)},
      {"braid", r.braid.to_string()},
      {"display", format_value(r.value, display)},
  };
}

/// Rebuilds the exact value from a record produced by to_json.
inline WeightRat value_from_json(const nlohmann::json& j) {
  if (!j.contains("N") || !j.contains("num") || !j.contains("den")) throw ParseError("record lacks N, num or den");
  const auto& field = cyclotomic_field(j.at("N").get<int>());
  const auto num = detail::laurent_from_json(j.at("num"), field);
  const auto den = detail::laurent_from_json(j.at("den"), field);
  if (den.is_zero()) throw DivisionByZero();
  return WeightRat(num, den);
}

// ---------------------------------------------------------------------------
// Floating-point evaluation at t = exp(πiλ/N)

struct NumericSample {
  double lambda = 0;
  std::complex<double> value;
  double condition = 0;  // Σ|terms of den| / |den|
  bool pole = false;
  std::string warning;
};

namespace detail {

inline double abs_term_sum(const WeightLaurent& p, std::complex<double> t) {
  double s = 0;
  for (const auto& [e, c] : p.terms()) s += std::abs(c.to_complex() * std::pow(t, e));
  return s;
}

}  // namespace detail

inline NumericSample evaluate_at(const WeightRat& v, int color, double lambda) {
  NumericSample out;
  out.lambda = lambda;
  const auto t = std::polar(1.0, std::numbers::pi * lambda / color);
  const auto den = v.den().evaluate(t);
  const double scale = detail::abs_term_sum(v.den(), t);
  out.condition = std::abs(den) > 0 ? scale / std::abs(den) : INFINITY;
  if (out.condition > 1e12) {
    out.pole = true;
    out.value = {NAN, NAN};
    out.warning = "pole: denominator vanishes at this lambda";
    return out;
  }
  out.value = v.num().evaluate(t) / den;
  if (out.condition > 1e6) out.warning = "ill-conditioned: close to a denominator zero";
  return out;
}

// ---------------------------------------------------------------------------
// Table files: one `name; n; N; braid-word` per line, '#' starts a comment.

struct TableRow {
  std::size_t line = 0;
  std::string name;
  int strands = 0;
  int color = 0;
  std::string word;
};

struct TableRowError {
  std::size_t line = 0;
  std::string name;
  std::string message;
};

struct TableParse {
  std::vector<TableRow> rows;
  std::vector<TableRowError> errors;
};

namespace detail {

inline std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::optional<int> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t used = 0;
  try {
    const int v = std::stoi(s, &used);
    if (used != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace detail

inline TableParse parse_table(std::istream& in) {
  TableParse out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (detail::trim(raw).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(raw);
    for (std::string f; std::getline(ss, f, ';');) fields.push_back(detail::trim(f));
    if (raw.back() == ';') fields.emplace_back();
    const std::string name = fields.empty() ? "" : fields[0];
    if (fields.size() != 4) {
      out.errors.push_back({line, name, "expected 4 ';'-separated fields, got " + std::to_string(fields.size())});
      continue;
    }
    const auto n = detail::parse_int(fields[1]);
    const auto color = detail::parse_int(fields[2]);
    if (!n || *n < 1) {
      out.errors.push_back({line, name, "strand count '" + fields[1] + "' is not a positive integer"});
      continue;
    }
    if (!color || *color < 2) {
      out.errors.push_back({line, name, "color '" + fields[2] + "' is not an integer >= 2"});
      continue;
    }
    out.rows.push_back({line, name, *n, *color, fields[3]});
  }
  return out;
}

inline TableParse parse_table(const std::string& text) {
  std::istringstream in(text);
  return parse_table(in);
}

/// Knots shipped with the CLI, each listed for N = 2 and N = 3.
inline std::string builtin_table_text() {
  static const char* const knots[][3] = {
      {"unknot_b2", "2", "1"},
      {"unknot_b3", "3", "1 2"},
      {"unknot_b2_neg", "2", "-1"},
      {"trefoil_b2", "2", "1 1 1"},
      {"trefoil_b3", "3", "1 2 1 2"},
      {"figure_eight", "3", "1 -2 1 -2"},
      {"knot_5_1", "2", "1 1 1 1 1"},
      {"knot_5_2", "3", "1 1 1 2 -1 2"},
  };
  std::string text;
  for (int color : {2, 3})
    for (const auto& k : knots)
      text += std::string(k[0]) + "; " + k[1] + "; " + std::to_string(color) + "; " + k[2] + "\n";
  return text;
}

}  // namespace ado
