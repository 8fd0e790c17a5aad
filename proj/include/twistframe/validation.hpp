#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twistframe/gf2.hpp"

namespace twistframe {

struct Violation {
  std::string invariant;  // short machine name, e.g. "symmetry", "b_isotropy"
  std::string detail;
  std::vector<gf2::BitVector> witnesses;
};

/// Outcome of a validation pass. Fails iff at least one violation was
/// recorded; `info` carries informational key/value findings that never
/// affect the verdict.
struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::pair<std::string, std::string>> info;

  bool passed() const { return violations.empty(); }
  explicit operator bool() const { return passed(); }

  void fail(std::string invariant, std::string detail, std::vector<gf2::BitVector> witnesses = {}) {
    violations.push_back({std::move(invariant), std::move(detail), std::move(witnesses)});
  }
  void note(std::string key, std::string value) { info.emplace_back(std::move(key), std::move(value)); }

  void absorb(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    info.insert(info.end(), other.info.begin(), other.info.end());
  }

  bool mentions(const std::string& invariant) const {
    for (const auto& v : violations) {
      if (v.invariant == invariant) {
        return true;
      }
    }
    return false;
  }

  const std::string* info_value(const std::string& key) const {
    for (const auto& [k, v] : info) {
      if (k == key) {
        return &v;
      }
    }
    return nullptr;
  }
};

}  // namespace twistframe
