#pragma once

// JSON documents for diagrams, certificates and validation reports.
//
// Diagram document:
//   { "dimension": d,
//     "intersection": [d bit-strings of length d],   row i, char j = e_i . e_j
//     "form": [d integers in 0..3],                   g(e_i) in half-units
//     "a_curves": [bit-strings], "b_curves": [bit-strings],
//     "metadata": { ... }                             optional }
// Certificate document:
//   { "epsilon": bit-string of length n, "twists": [ascending indices],
//     "transcript": [g(h(b_0)) .. g(h(b_{n-1})), g(h(a_0)) .. g(h(a_{n-1}))],
//     "solution_family": [bit-strings], "policy": "first" | "minimal_weight" }
// Bit-string character i is the coefficient of basis vector i.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "twistframe/solver.hpp"

namespace twistframe::doc {

using Json = nlohmann::ordered_json;

/// Pretty-printed with two-space indentation and a trailing newline; the
/// output depends only on the document's contents.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

inline const Json& require(const Json& root, const char* field) {
  if (!root.is_object()) {
    throw ParseError("document root must be an object");
  }
  const auto it = root.find(field);
  if (it == root.end()) {
    throw ParseError(std::string("missing field \"") + field + "\"");
  }
  return *it;
}

inline BitVector bit_string(const Json& value, std::size_t length, const std::string& where) {
  if (!value.is_string()) {
    throw ParseError(where + ": expected a bit-string");
  }
  const auto& s = value.get_ref<const std::string&>();
  if (s.size() != length) {
    throw ParseError(where + ": bit-string has length " + std::to_string(s.size()) + ", expected " +
                     std::to_string(length));
  }
  try {
    return BitVector::from_string(s);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline std::vector<BitVector> bit_strings(const Json& value, std::size_t length, const std::string& field) {
  if (!value.is_array()) {
    throw ParseError("field \"" + field + "\" must be an array");
  }
  std::vector<BitVector> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(bit_string(value[i], length, field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline std::string label_text(const Json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

}  // namespace detail

/// Structural parse only; the algebraic invariants are left to
/// validate_diagram. Throws ParseError naming the offending field.
inline HeegaardDiagram parse_diagram(std::string_view text) {
  const Json root = detail::parse_text(text);
  const Json& dim = detail::require(root, "dimension");
  if (!dim.is_number_unsigned()) {
    throw ParseError("field \"dimension\" must be a non-negative integer");
  }
  const auto d = dim.get<std::size_t>();

  const Json& rows = detail::require(root, "intersection");
  if (!rows.is_array() || rows.size() != d) {
    throw ParseError("field \"intersection\" must be an array of " + std::to_string(d) + " bit-strings");
  }
  const auto pairing_rows = detail::bit_strings(rows, d, "intersection");

  const Json& form = detail::require(root, "form");
  if (!form.is_array() || form.size() != d) {
    throw ParseError("field \"form\" must be an array of " + std::to_string(d) + " integers");
  }
  std::vector<HValue> values;
  values.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!form[i].is_number_integer() || form[i].get<long long>() < 0 || form[i].get<long long>() > 3) {
      throw ParseError("form[" + std::to_string(i) + "]: expected an integer in 0..3");
    }
    values.push_back(HValue::from_q(form[i].get<long long>()));
  }

  HeegaardDiagram dia;
  dia.form = QuadraticRefinement(InnerSpace(BitMatrix::from_rows(pairing_rows, d)), std::move(values));
  dia.a_curves = detail::bit_strings(detail::require(root, "a_curves"), d, "a_curves");
  dia.b_curves = detail::bit_strings(detail::require(root, "b_curves"), d, "b_curves");
  if (const auto it = root.find("metadata"); it != root.end()) {
    if (!it->is_object()) {
      throw ParseError("field \"metadata\" must be an object");
    }
    for (const auto& [key, value] : it->items()) {
      dia.metadata[key] = detail::label_text(value);
    }
  }
  return dia;
}

inline Json diagram_to_json(const HeegaardDiagram& dia) {
  const std::size_t d = dia.dimension();
  Json j;
  j["dimension"] = d;
  Json rows = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    rows.push_back(dia.space().pairing().row(i).to_string());
  }
  j["intersection"] = std::move(rows);
  Json form = Json::array();
  for (const HValue v : dia.form.basis_values()) {
    form.push_back(v.q());
  }
  j["form"] = std::move(form);
  Json a = Json::array();
  for (const auto& c : dia.a_curves) a.push_back(c.to_string());
  Json b = Json::array();
  for (const auto& c : dia.b_curves) b.push_back(c.to_string());
  j["a_curves"] = std::move(a);
  j["b_curves"] = std::move(b);
  if (!dia.metadata.empty()) {
    Json meta = Json::object();
    for (const auto& [k, v] : dia.metadata) {
      meta[k] = v;
    }
    j["metadata"] = std::move(meta);
  }
  return j;
}

struct CertificateDocument {
  BitVector epsilon;
  std::vector<std::size_t> twists;
  std::vector<HValue> transcript;  // n b-curve values, then n a-curve values
  std::vector<BitVector> solution_family;
  std::string policy = "first";
};

inline CertificateDocument to_document(const TwistCertificate& cert, SolvePolicy policy) {
  CertificateDocument out;
  out.epsilon = cert.epsilon;
  cert.epsilon.for_each_set([&](std::size_t j) { out.twists.push_back(j); });
  out.transcript = cert.transcript.b_values;
  out.transcript.insert(out.transcript.end(), cert.transcript.a_values.begin(), cert.transcript.a_values.end());
  out.solution_family = cert.solution_family;
  out.policy = policy == SolvePolicy::minimal_weight ? "minimal_weight" : "first";
  return out;
}

inline Json certificate_to_json(const CertificateDocument& cert) {
  Json j;
  j["epsilon"] = cert.epsilon.to_string();
  j["twists"] = cert.twists;
  Json tr = Json::array();
  for (const HValue v : cert.transcript) {
    tr.push_back(v.q());
  }
  j["transcript"] = std::move(tr);
  Json fam = Json::array();
  for (const auto& k : cert.solution_family) {
    fam.push_back(k.to_string());
  }
  j["solution_family"] = std::move(fam);
  j["policy"] = cert.policy;
  return j;
}

/// Parses a certificate for a diagram with n curve pairs. Throws ParseError
/// on any structural problem, including a length that does not match n or a
/// twist list that disagrees with epsilon.
inline CertificateDocument parse_certificate(std::string_view text, std::size_t n) {
  const Json root = detail::parse_text(text);
  CertificateDocument cert;
  const Json& eps = detail::require(root, "epsilon");
  if (!eps.is_string()) {
    throw ParseError("field \"epsilon\" must be a bit-string");
  }
  cert.epsilon = detail::bit_string(eps, n, "epsilon");

  const Json& twists = detail::require(root, "twists");
  if (!twists.is_array()) {
    throw ParseError("field \"twists\" must be an array");
  }
  for (const auto& t : twists) {
    if (!t.is_number_unsigned()) {
      throw ParseError("field \"twists\" must hold non-negative integers");
    }
    cert.twists.push_back(t.get<std::size_t>());
  }
  std::vector<std::size_t> expected;
  cert.epsilon.for_each_set([&](std::size_t j) { expected.push_back(j); });
  if (cert.twists != expected) {
    throw ParseError("field \"twists\" does not list the 1-positions of epsilon in ascending order");
  }

  const Json& transcript = detail::require(root, "transcript");
  if (!transcript.is_array() || transcript.size() != 2 * n) {
    throw ParseError("field \"transcript\" must be an array of " + std::to_string(2 * n) + " integers");
  }
  for (const auto& v : transcript) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 3) {
      throw ParseError("field \"transcript\" must hold integers in 0..3");
    }
    cert.transcript.push_back(HValue::from_q(v.get<long long>()));
  }
  if (const auto it = root.find("solution_family"); it != root.end()) {
    cert.solution_family = detail::bit_strings(*it, n, "solution_family");
  }
  if (const auto it = root.find("policy"); it != root.end() && it->is_string()) {
    cert.policy = it->get<std::string>();
  }
  return cert;
}

inline Json report_to_json(const ValidationReport& report) {
  Json j;
  j["pass"] = report.passed();
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json w = Json::array();
    for (const auto& x : v.witnesses) {
      w.push_back(x.to_string());
    }
    violations.push_back(Json{{"invariant", v.invariant}, {"detail", v.detail}, {"witnesses", std::move(w)}});
  }
  j["violations"] = std::move(violations);
  Json info = Json::object();
  for (const auto& [k, v] : report.info) {
    info[k] = v;
  }
  j["info"] = std::move(info);
  return j;
}

}  // namespace twistframe::doc
