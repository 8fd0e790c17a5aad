#pragma once

// Command implementations behind the `twistframe` executable. Each command
// writes to the given streams and returns the process exit code.

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "twistframe/document.hpp"

namespace twistframe::cli {

enum ExitCode : int {
  kSuccess = 0,     // valid / solvable / verified
  kNegative = 1,    // unsolvable / verification failed
  kUsage = 2,       // unreadable file, malformed document, bad arguments
  kInvalid = 3,     // document parsed but the diagram fails validation
  kCapacity = 4,    // input beyond an exhaustive-routine cap
};

inline constexpr std::size_t kInvariantDimensionLimit = 24;

namespace detail {

inline std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::optional<HeegaardDiagram> load_diagram(const std::string& path, std::ostream& err) {
  const auto text = read_file(path, err);
  if (!text) {
    return std::nullopt;
  }
  try {
    return doc::parse_diagram(*text);
  } catch (const Error& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

inline void print_report(const ValidationReport& report, std::ostream& out) {
  out << "status: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& [k, v] : report.info) {
    out << k << ": " << v << "\n";
  }
  for (const auto& v : report.violations) {
    out << "violation [" << v.invariant << "]: " << v.detail;
    for (const auto& w : v.witnesses) {
      out << " " << w.to_string();
    }
    out << "\n";
  }
}

}  // namespace detail

inline int cmd_validate(const std::string& path, bool json, std::ostream& out, std::ostream& err) {
  const auto dia = detail::load_diagram(path, err);
  if (!dia) {
    return kUsage;
  }
  const ValidationReport report = validate_diagram(*dia);
  if (json) {
    out << doc::dump(doc::report_to_json(report));
  } else {
    out << "dimension: " << dia->dimension() << "\n"
        << "curves: " << dia->a_curves.size() << " a, " << dia->b_curves.size() << " b\n";
    detail::print_report(report, out);
  }
  return report.passed() ? kSuccess : kInvalid;
}

struct SolveOptions {
  bool minimal = false;
  bool json = false;
  std::optional<std::string> out_path;
};

inline int cmd_solve(const std::string& path, const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  const auto dia = detail::load_diagram(path, err);
  if (!dia) {
    return kUsage;
  }
  const ValidationReport report = validate_diagram(*dia);
  if (!report.passed()) {
    err << "error: " << path << " fails validation\n";
    detail::print_report(report, err);
    return kInvalid;
  }
  const SolvePolicy policy = opts.minimal ? SolvePolicy::minimal_weight : SolvePolicy::first;
  TwistOutcome outcome;
  try {
    outcome = solve_twists(*dia, policy);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacity;
  }
  if (const auto* bad = std::get_if<UnsolvableTwists>(&outcome)) {
    if (opts.json) {
      out << doc::dump(doc::Json{{"solvable", false}, {"witness", bad->witness.to_string()}});
    } else {
      out << "solvable: no\n"
          << "witness: " << bad->witness.to_string()
          << " (these b-curve rows sum to zero while their targets sum to 1)\n";
    }
    return kNegative;
  }
  const auto& cert = std::get<TwistCertificate>(outcome);
  const doc::CertificateDocument document = doc::to_document(cert, policy);
  const std::string text = doc::dump(doc::certificate_to_json(document));
  if (opts.out_path) {
    std::ofstream file(*opts.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << *opts.out_path << "\n";
      return kUsage;
    }
    file << text;
  }
  if (opts.json) {
    out << text;
  } else {
    out << "solvable: yes\n"
        << "epsilon: " << cert.epsilon.to_string() << "\n"
        << "twists: " << document.twists.size() << "\n"
        << "alternatives: " << cert.solution_family.size() << " kernel vectors\n"
        << "transcript: " << (cert.transcript.all_zero() ? "all zero" : "NONZERO") << "\n";
  }
  return kSuccess;
}

inline int cmd_verify(const std::string& path, const std::string& cert_path, std::ostream& out, std::ostream& err) {
  const auto dia = detail::load_diagram(path, err);
  if (!dia) {
    return kUsage;
  }
  const auto cert_text = detail::read_file(cert_path, err);
  if (!cert_text) {
    return kUsage;
  }
  doc::CertificateDocument cert;
  try {
    cert = doc::parse_certificate(*cert_text, dia->curve_count());
  } catch (const Error& e) {
    err << "error: " << cert_path << ": " << e.what() << "\n";
    return kUsage;
  }
  const ValidationReport diagram_report = validate_diagram(*dia);
  if (!diagram_report.passed()) {
    err << "error: " << path << " fails validation\n";
    detail::print_report(diagram_report, err);
    return kInvalid;
  }
  ValidationReport report = verify_certificate(*dia, cert.epsilon);
  const Transcript recomputed = compute_transcript(*dia, twist_word_for(*dia, cert.epsilon));
  const std::size_t n = dia->curve_count();
  for (std::size_t k = 0; k < 2 * n; ++k) {
    const HValue actual = k < n ? recomputed.b_values[k] : recomputed.a_values[k - n];
    if (cert.transcript[k] != actual) {
      report.fail("transcript", "entry " + std::to_string(k) + " records " + cert.transcript[k].to_string() +
                                    " but recomputes to " + actual.to_string());
    }
  }
  detail::print_report(report, out);
  return report.passed() ? kSuccess : kNegative;
}

inline int cmd_invariant(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto dia = detail::load_diagram(path, err);
  if (!dia) {
    return kUsage;
  }
  const ValidationReport report = validate_diagram(*dia);
  if (!report.passed()) {
    err << "error: " << path << " fails validation\n";
    detail::print_report(report, err);
    return kInvalid;
  }
  if (dia->dimension() > kInvariantDimensionLimit) {
    err << "error: dimension " << dia->dimension() << " exceeds the exhaustive limit " << kInvariantDimensionLimit
        << "\n";
    return kCapacity;
  }
  int beta = 0;
  try {
    beta = gauss_invariant(dia->form, kInvariantDimensionLimit);
  } catch (const InvalidFormError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  out << "dimension: " << dia->dimension() << "\n"
      << "gauss_invariant: " << beta << "\n"
      << "lagrangian: " << *report.info_value("lagrangian") << "\n";
  return kSuccess;
}

struct GenerateOptions {
  long long genus = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> scramble;
  bool nonzero_targets = false;
};

inline int cmd_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.genus < 1) {
    err << "error: --genus must be at least 1\n";
    return kUsage;
  }
  const auto genus = static_cast<std::size_t>(opts.genus);
  const std::size_t length = opts.scramble.value_or(4 * genus);
  out << doc::dump(doc::diagram_to_json(random_diagram(opts.seed, genus, opts.nonzero_targets, length)));
  return kSuccess;
}

}  // namespace twistframe::cli
