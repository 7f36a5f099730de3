#pragma once

#include <nlohmann/json.hpp>

#include <initializer_list>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "posgen/error.hpp"
#include "posgen/levy.hpp"
#include "posgen/matrix.hpp"
#include "posgen/measures.hpp"
#include "posgen/moments.hpp"
#include "posgen/multi_index.hpp"
#include "posgen/rational.hpp"
#include "posgen/series.hpp"

namespace posgen::io {

using nlohmann::json;

/// Parse text to JSON, mapping syntax errors to ParseError.
inline json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return j;
}

/// Canonical serialization: two-space indent, alphabetical keys (the
/// library's object order), trailing newline.  Byte-identical for equal
/// values.
inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

inline void expect_keys(const json& j, const char* what,
                        std::initializer_list<const char*> required,
                        std::initializer_list<const char*> optional = {}) {
  if (!j.is_object())
    throw ParseError(std::string(what) + ": expected a JSON object");
  for (const char* key : required)
    if (!j.contains(key))
      throw ParseError(std::string(what) + ": missing key '" + key + "'");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : required) known = known || item.key() == key;
    for (const char* key : optional) known = known || item.key() == key;
    if (!known)
      throw ParseError(std::string(what) + ": unknown key '" + item.key() + "'");
  }
}

inline int int_from_json(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + ": expected an integer");
  return j.get<int>();
}

/// Rationals travel as canonical strings ("3", "-1/2"); integer JSON
/// numbers are accepted on input, floats never are.
inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("expected a rational string");
}

template <typename Tag>
struct series_kind;
template <>
struct series_kind<series_tag> {
  static constexpr const char* name = "series";
};
template <>
struct series_kind<poly_tag> {
  static constexpr const char* name = "poly";
};
template <>
struct series_kind<moment_tag> {
  static constexpr const char* name = "moments";
};

template <typename Tag>
json to_json(const BasicSeries<Tag>& s) {
  json terms = json::array();
  for (const auto& [alpha, c] : s.terms())
    terms.push_back(json{{"alpha", alpha}, {"coeff", to_string(c)}});
  return json{{"kind", series_kind<Tag>::name},
              {"n", s.n()},
              {"d", s.d()},
              {"terms", std::move(terms)}};
}

template <typename Tag>
BasicSeries<Tag> series_from_json(const json& j) {
  const char* what = series_kind<Tag>::name;
  expect_keys(j, what, {"kind", "n", "d", "terms"});
  if (!j["kind"].is_string() || j["kind"].get<std::string>() != what)
    throw ParseError(std::string(what) + ": wrong or missing kind");
  try {
    BasicSeries<Tag> s(int_from_json(j["n"], what), int_from_json(j["d"], what));
    if (!j["terms"].is_array())
      throw ParseError(std::string(what) + ": 'terms' must be an array");
    for (const json& term : j["terms"]) {
      expect_keys(term, what, {"alpha", "coeff"});
      if (!term["alpha"].is_array())
        throw ParseError(std::string(what) + ": 'alpha' must be an array");
      MultiIndex alpha;
      for (const json& e : term["alpha"])
        alpha.push_back(int_from_json(e, what));
      if (s.coeff(alpha) != 0)
        throw ParseError(std::string(what) + ": duplicate multi-index");
      s.set(alpha, rational_from_json(term["coeff"]));
    }
    return s;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

inline json to_json(const measures::AtomicMeasure& m) {
  json atoms = json::array();
  json weights = json::array();
  for (const auto& [y, w] : m.atoms()) {
    json point = json::array();
    for (const Rational& c : y) point.push_back(to_string(c));
    atoms.push_back(std::move(point));
    weights.push_back(to_string(w));
  }
  return json{{"n", m.n()}, {"atoms", std::move(atoms)},
              {"weights", std::move(weights)}};
}

inline measures::AtomicMeasure measure_from_json(const json& j) {
  expect_keys(j, "measure", {"n", "atoms", "weights"});
  if (!j["atoms"].is_array() || !j["weights"].is_array())
    throw ParseError("measure: 'atoms' and 'weights' must be arrays");
  if (j["atoms"].size() != j["weights"].size())
    throw ParseError("measure: atom and weight counts differ");
  try {
    measures::AtomicMeasure m(int_from_json(j["n"], "measure"));
    for (std::size_t i = 0; i < j["atoms"].size(); ++i) {
      const json& point = j["atoms"][i];
      if (!point.is_array())
        throw ParseError("measure: each atom must be an array");
      Point y;
      for (const json& c : point) y.push_back(rational_from_json(c));
      m.add_atom(y, rational_from_json(j["weights"][i]));
    }
    return m;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("measure: ") + e.what());
  }
}

inline json to_json(const levy::LevyTriplet& t) {
  json b = json::array();
  for (const Rational& c : t.b()) b.push_back(to_string(c));
  json sigma = json::array();
  for (std::size_t i = 0; i < t.sigma().rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < t.sigma().cols(); ++k)
      row.push_back(to_string(t.sigma().at(i, k)));
    sigma.push_back(std::move(row));
  }
  return json{{"b", std::move(b)}, {"sigma", std::move(sigma)},
              {"nu", to_json(t.nu())}};
}

/// Parses the triplet fields strictly; the domain invariants (symmetric PSD
/// sigma, nonnegative nu away from the origin) stay domain errors from the
/// LevyTriplet constructor, not parse errors.
inline levy::LevyTriplet triplet_from_json(const json& j) {
  expect_keys(j, "triplet", {"b", "sigma", "nu"});
  if (!j["b"].is_array() || j["b"].empty())
    throw ParseError("triplet: 'b' must be a nonempty array");
  Point b;
  for (const json& c : j["b"]) b.push_back(rational_from_json(c));
  const std::size_t n = b.size();
  if (!j["sigma"].is_array() || j["sigma"].size() != n)
    throw ParseError("triplet: 'sigma' must be an n x n array");
  RationalMatrix sigma(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = j["sigma"][i];
    if (!row.is_array() || row.size() != n)
      throw ParseError("triplet: 'sigma' must be an n x n array");
    for (std::size_t k = 0; k < n; ++k)
      sigma.at(i, k) = rational_from_json(row[k]);
  }
  return levy::LevyTriplet(std::move(b), std::move(sigma),
                           measure_from_json(j["nu"]));
}

inline json to_json(const moments::PsdVerdict& v) {
  json out{{"verdict", v.violated ? "violated" : "consistent"},
           {"level", v.level}};
  if (v.violated) {
    json witness = json::array();
    for (const Rational& c : v.witness) witness.push_back(to_string(c));
    out["witness"] = std::move(witness);
  }
  return out;
}

inline moments::PsdVerdict verdict_from_json(const json& j) {
  expect_keys(j, "verdict", {"verdict", "level"}, {"witness"});
  moments::PsdVerdict v;
  if (!j["verdict"].is_string())
    throw ParseError("verdict: 'verdict' must be a string");
  const std::string tag = j["verdict"].get<std::string>();
  if (tag != "violated" && tag != "consistent")
    throw ParseError("verdict: unknown verdict '" + tag + "'");
  v.violated = tag == "violated";
  v.level = int_from_json(j["level"], "verdict");
  if (j.contains("witness")) {
    if (!v.violated)
      throw ParseError("verdict: witness on a consistent verdict");
    for (const json& c : j["witness"])
      v.witness.push_back(rational_from_json(c));
  }
  return v;
}

/// Row-major rational strings plus explicit shape.
inline json to_json(const RationalMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k)
      entries.push_back(to_string(m.at(i, k)));
  return json{{"rows", m.rows()}, {"cols", m.cols()},
              {"entries", std::move(entries)}};
}

/// Human-readable monomial name: "1", "x1", "x1^2*x3", ...
inline std::string monomial_label(const MultiIndex& alpha) {
  std::string out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (alpha[i] > 1) out += "^" + std::to_string(alpha[i]);
  }
  return out.empty() ? "1" : out;
}

/// CSV with a monomial header and one row per time: the time, then every
/// graded-lex coefficient of the snapshot (zeros included).
inline std::string trajectory_csv(const std::vector<Rational>& ts,
                                  const std::vector<Polynomial>& snapshots) {
  if (ts.size() != snapshots.size())
    throw Error("invalid_argument", "time and snapshot counts differ");
  if (snapshots.empty()) return "t\n";
  const int n = snapshots.front().n();
  const int d = snapshots.front().d();
  const std::vector<MultiIndex> basis = indices_up_to(n, d);
  std::ostringstream out;
  out << "t";
  for (const MultiIndex& alpha : basis) out << "," << monomial_label(alpha);
  out << "\n";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out << to_string(ts[i]);
    for (const MultiIndex& alpha : basis)
      out << "," << to_string(snapshots[i].coeff(alpha));
    out << "\n";
  }
  return out.str();
}

}  // namespace posgen::io
