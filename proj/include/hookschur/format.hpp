#pragma once

// Text, JSON and CSV renderings. JSON coefficients are decimal strings so
// arbitrary-precision values survive any consumer.

#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "hilbert.hpp"
#include "partitions.hpp"
#include "qseries.hpp"
#include "symfun.hpp"

namespace hookschur {

using Json = nlohmann::ordered_json;

// {"order":N,"coeffs":["c0","c1",...]}
inline Json to_json(const TruncSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
  return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

// Inverse of to_json(TruncSeries). Throws std::invalid_argument on schema errors.
inline TruncSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") || !j["order"].is_number_unsigned() ||
      !j["coeffs"].is_array())
    throw std::invalid_argument("series JSON must be {\"order\": N, \"coeffs\": [...]}");
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw std::invalid_argument("series JSON coefficients must be decimal strings");
    try {
      coeffs.emplace_back(c.get<std::string>());
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("series JSON coefficient is not a decimal integer");
    }
  }
  return TruncSeries(j["order"].get<std::size_t>(), std::move(coeffs));
}

// Header-free "exponent,coefficient" rows, one per line.
inline std::string to_csv(const TruncSeries& s) {
  std::string out;
  for (std::size_t i = 0; i <= s.order(); ++i) out += std::to_string(i) + "," + s[i].str() + "\n";
  return out;
}

inline Json to_json(const Partition& p) { return Json(p.parts()); }

// [{"coeff":"1","x":[2,0],"y":[1]}, ...] in graded lexicographic order.
inline Json to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : sorted_terms(p)) {
    std::vector<int> x(e.begin(), e.begin() + p.num_x());
    std::vector<int> y(e.begin() + p.num_x(), e.end());
    out.push_back(Json{{"coeff", c.str()}, {"x", std::move(x)}, {"y", std::move(y)}});
  }
  return out;
}

// One row per term: coeff, then the x exponents, then the y exponents.
inline std::string to_csv(const MultiPoly& p) {
  std::string out;
  for (const auto& [e, c] : sorted_terms(p)) {
    out += c.str();
    for (int v : e) out += "," + std::to_string(v);
    out += "\n";
  }
  return out;
}

namespace detail {

inline Json mismatch_json(const std::optional<Mismatch>& m) {
  if (!m) return nullptr;
  return Json{{"exponent", m->exponent}, {"lhs", m->lhs.str()}, {"rhs", m->rhs.str()}};
}

inline std::string params_text(const Report& r, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < r.params.size(); ++i) {
    if (i) s += sep;
    s += r.params[i].first + "=" + std::to_string(r.params[i].second);
  }
  return s;
}

inline std::string mismatch_text(const Mismatch& m) {
  return "t^" + std::to_string(m.exponent) + " lhs=" + m.lhs.str() + " rhs=" + m.rhs.str();
}

}  // namespace detail

inline Json to_json(const Report& r) {
  Json params = Json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  Json j{{"identity", r.identity},
         {"params", std::move(params)},
         {"pass", r.pass},
         {"first_mismatch", detail::mismatch_json(r.first_mismatch)}};
  if (r.display)
    j["display"] = Json{{"pass", r.display->pass}, {"first_mismatch", detail::mismatch_json(r.display->first_mismatch)}};
  return j;
}

// "PASS lemma k=1 l=2" or "FAIL ... first mismatch at t^e lhs=.. rhs=..".
inline std::string to_plain(const Report& r) {
  std::string s = std::string(r.pass ? "PASS " : "FAIL ") + r.identity + " " + detail::params_text(r, " ");
  if (r.first_mismatch) s += " first mismatch at " + detail::mismatch_text(*r.first_mismatch);
  if (r.display) {
    s += r.display->pass ? " display=match" : " display=mismatch";
    if (r.display->first_mismatch) s += " at " + detail::mismatch_text(*r.display->first_mismatch);
  }
  return s;
}

// identity,params,pass,exponent,lhs,rhs[,display_pass]
inline std::string to_csv(const Report& r) {
  std::string s = r.identity + "," + detail::params_text(r, ";") + "," + (r.pass ? "true" : "false") + ",";
  if (r.first_mismatch)
    s += std::to_string(r.first_mismatch->exponent) + "," + r.first_mismatch->lhs.str() + "," +
         r.first_mismatch->rhs.str();
  else
    s += ",,";
  if (r.display) s += std::string(",") + (r.display->pass ? "true" : "false");
  return s;
}

}  // namespace hookschur
