#pragma once

// Heegaard diagrams as homological data: a-curves bounding discs in one
// handlebody, b-curves in the other, and the refinement g induced by a
// reference immersion of the splitting surface.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twistframe/mapping_class.hpp"
#include "twistframe/rng.hpp"

namespace twistframe {

struct HeegaardDiagram {
  QuadraticRefinement form;
  std::vector<BitVector> a_curves;
  std::vector<BitVector> b_curves;
  std::map<std::string, std::string> metadata;

  const InnerSpace& space() const { return form.space(); }
  std::size_t dimension() const { return form.dimension(); }
  std::size_t curve_count() const { return a_curves.size(); }

  friend bool operator==(const HeegaardDiagram&, const HeegaardDiagram&) = default;
};

/// Error carrying the validation report that caused it.
class ReportError : public Error {
 public:
  ReportError(const std::string& what, ValidationReport report) : Error(describe(what, report)), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  static std::string describe(const std::string& what, const ValidationReport& report) {
    std::string msg = what;
    for (const auto& v : report.violations) {
      msg += "; " + v.invariant + ": " + v.detail;
    }
    return msg;
  }
  ValidationReport report_;
};

class ConstructionError : public ReportError {
 public:
  using ReportError::ReportError;
};

class ValidationError : public ReportError {
 public:
  using ReportError::ReportError;
};

/// Whether span(curves) is Lagrangian: isotropic and equal to its own
/// orthogonal complement.
inline bool is_lagrangian(const InnerSpace& space, const std::vector<BitVector>& curves) {
  const std::size_t d = space.dimension();
  for (const auto& c : curves) {
    if (c.size() != d) {
      return false;
    }
  }
  const BitMatrix span = BitMatrix::from_rows(curves, d);
  const BitMatrix qt = space.pairing().transpose();
  std::vector<BitVector> functionals;
  functionals.reserve(curves.size());
  for (const auto& c : curves) {
    functionals.push_back(gf2::mat_apply(qt, c));
  }
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = 0; j < curves.size(); ++j) {
      if (gf2::dot(functionals[i], curves[j])) {
        return false;
      }
    }
  }
  const std::size_t complement_dim = d - gf2::rank(BitMatrix::from_rows(functionals, d));
  return gf2::rank(span) == complement_dim;
}

namespace detail {

inline void check_isotropy(const HeegaardDiagram& dia, const std::vector<BitVector>& curves, const char* invariant,
                           const char* label, ValidationReport& report) {
  constexpr std::size_t kMaxWitnesses = 8;
  std::size_t found = 0;
  std::vector<BitVector> duals;
  duals.reserve(curves.size());
  for (const auto& c : curves) {
    duals.push_back(dia.space().pair_with(c));
  }
  for (std::size_t i = 0; i < curves.size() && found < kMaxWitnesses; ++i) {
    for (std::size_t j = i; j < curves.size() && found < kMaxWitnesses; ++j) {
      // c_i^T Q c_j
      if (gf2::dot(curves[i], duals[j])) {
        ++found;
        report.fail(invariant,
                    std::string(label) + "_" + std::to_string(i) + " . " + label + "_" + std::to_string(j) + " = 1",
                    {curves[i], curves[j]});
      }
    }
  }
}

}  // namespace detail

/// Checks every algebraic hypothesis the twist solver consumes: a valid
/// space and form, matching curve counts and lengths, isotropy of both curve
/// systems, g = 0 on the a-curves and g integral on the b-curves. Lagrangian
/// status of the a-system is reported under info "lagrangian" ("yes"/"no").
inline ValidationReport validate_diagram(const HeegaardDiagram& dia) {
  ValidationReport report = validate_space(dia.space());
  const std::size_t d = dia.dimension();
  bool shapes_ok = true;
  auto check_lengths = [&](const std::vector<BitVector>& curves, const char* label) {
    for (std::size_t k = 0; k < curves.size(); ++k) {
      if (curves[k].size() != d) {
        shapes_ok = false;
        report.fail("dimension", std::string(label) + "_" + std::to_string(k) + " has length " +
                                     std::to_string(curves[k].size()) + ", expected " + std::to_string(d));
      }
    }
  };
  check_lengths(dia.a_curves, "a");
  check_lengths(dia.b_curves, "b");
  if (dia.a_curves.size() != dia.b_curves.size()) {
    report.fail("curve_count", std::to_string(dia.a_curves.size()) + " a-curves but " +
                                   std::to_string(dia.b_curves.size()) + " b-curves");
  }
  report.absorb(validate_form(dia.form));
  if (!shapes_ok) {
    return report;
  }
  detail::check_isotropy(dia, dia.a_curves, "a_isotropy", "a", report);
  detail::check_isotropy(dia, dia.b_curves, "b_isotropy", "b", report);
  for (std::size_t k = 0; k < dia.a_curves.size(); ++k) {
    const HValue v = eval_form(dia.form, dia.a_curves[k]);
    if (v != HValue{}) {
      report.fail("a_form_zero", "g(a_" + std::to_string(k) + ") = " + v.to_string(), {dia.a_curves[k]});
    }
  }
  for (std::size_t k = 0; k < dia.b_curves.size(); ++k) {
    const HValue v = eval_form(dia.form, dia.b_curves[k]);
    if (!v.integral()) {
      report.fail("b_form_integral", "g(b_" + std::to_string(k) + ") = " + v.to_string(), {dia.b_curves[k]});
    }
  }
  report.note("lagrangian", is_lagrangian(dia.space(), dia.a_curves) ? "yes" : "no");
  return report;
}

/// Genus-n orientable normal form: Q has n symplectic blocks, a_k = e_{2k},
/// b_k = e_{2k+1} (0-based), g vanishes on the a-positions and takes the given
/// integral values on the b-positions.
inline HeegaardDiagram standard_orientable(std::size_t genus, const std::vector<HValue>& b_values) {
  if (b_values.size() != genus) {
    throw DimensionError("standard_orientable: " + std::to_string(genus) + " b-values expected, got " +
                         std::to_string(b_values.size()));
  }
  const std::size_t d = 2 * genus;
  std::vector<HValue> values(d);
  HeegaardDiagram dia;
  for (std::size_t k = 0; k < genus; ++k) {
    if (!b_values[k].integral()) {
      throw ParityError("standard_orientable: b-value " + std::to_string(k) + " is " + b_values[k].to_string() +
                        ", annulus classes need an integral value");
    }
    values[2 * k + 1] = b_values[k];
    dia.a_curves.push_back(BitVector::unit(d, 2 * k));
    dia.b_curves.push_back(BitVector::unit(d, 2 * k + 1));
  }
  dia.form = QuadraticRefinement(InnerSpace::standard_symplectic(genus), std::move(values));
  dia.metadata = {{"orientable", "true"}, {"genus", std::to_string(genus)}, {"description", "standard orientable"}};
  return dia;
}

/// Diagonal pairing on k one-sided basis classes with caller-supplied odd
/// values and curves. Throws ConstructionError unless the result validates.
inline HeegaardDiagram diagonal_diagram(std::size_t k, const std::vector<int>& form_q, std::vector<BitVector> a_curves,
                                        std::vector<BitVector> b_curves) {
  if (form_q.size() != k) {
    throw DimensionError("diagonal_diagram: " + std::to_string(k) + " values expected, got " +
                         std::to_string(form_q.size()));
  }
  std::vector<HValue> values;
  values.reserve(k);
  for (int q : form_q) {
    if (q != 1 && q != 3) {
      throw ParityError("diagonal_diagram: one-sided classes take q in {1,3}, got " + std::to_string(q));
    }
    values.push_back(HValue::from_q(q));
  }
  HeegaardDiagram dia{QuadraticRefinement(InnerSpace::diagonal(k), std::move(values)), std::move(a_curves),
                      std::move(b_curves), {{"orientable", "false"}, {"description", "diagonal"}}};
  ValidationReport report = validate_diagram(dia);
  if (!report.passed()) {
    throw ConstructionError("diagonal_diagram: invalid diagram", std::move(report));
  }
  return dia;
}

/// Transports the diagram along a twist word: curves are pushed forward by
/// the word and the form is pulled back by its inverse (the reversed word,
/// since every twist is an involution on mod-2 homology).
inline HeegaardDiagram scramble(const HeegaardDiagram& dia, const TwistWord& word) {
  if (!(dia.space() == word.space())) {
    throw DimensionError("scramble: word acts on a different space");
  }
  if (!word.two_sided()) {
    throw PreconditionError("scramble: every twist must be along a two-sided class (a.a = 0)");
  }
  HeegaardDiagram out;
  out.form = pullback(dia.form, word.reversed());
  out.a_curves.reserve(dia.a_curves.size());
  out.b_curves.reserve(dia.b_curves.size());
  for (const auto& a : dia.a_curves) {
    out.a_curves.push_back(word_apply(word, a));
  }
  for (const auto& b : dia.b_curves) {
    out.b_curves.push_back(word_apply(word, b));
  }
  out.metadata = dia.metadata;
  return out;
}

/// Nonzero class of the given dimension drawn 32 coordinates per LCG output
/// (low bit first); all-zero draws are redrawn.
inline BitVector random_class(Lcg64& rng, std::size_t d) {
  BitVector v(d);
  do {
    for (std::size_t base = 0; base < d; base += 32) {
      const std::uint32_t bits = rng.next_u32();
      for (std::size_t b = 0; b < 32 && base + b < d; ++b) {
        v.set(base + b, (bits >> b) & 1U);
      }
    }
  } while (d > 0 && v.none());
  return v;
}

/// Deterministic test instance: standard_orientable(genus, targets) scrambled
/// by `scramble_length` twists along random nonzero classes. Without
/// `targets_nonzero` every b-value is 0; with it the b-values are random
/// in {0, 1} with at least one equal to 1.
inline HeegaardDiagram random_diagram(std::uint64_t seed, std::size_t genus, bool targets_nonzero,
                                      std::size_t scramble_length) {
  if (genus < 1) {
    throw PreconditionError("random_diagram: genus must be at least 1");
  }
  Lcg64 rng(seed);
  std::vector<HValue> targets(genus);
  if (targets_nonzero) {
    bool any = false;
    for (auto& t : targets) {
      t = HValue::embed(rng.coin());
      any = any || t != HValue{};
    }
    if (!any) {
      targets[rng.below(static_cast<std::uint32_t>(genus))] = HValue::embed(true);
    }
  }
  const HeegaardDiagram base = standard_orientable(genus, targets);
  TwistWord word(base.space());
  for (std::size_t i = 0; i < scramble_length; ++i) {
    word.append(random_class(rng, base.dimension()));
  }
  HeegaardDiagram out = scramble(base, word);
  out.metadata["description"] = "random scrambled standard orientable";
  out.metadata["seed"] = std::to_string(seed);
  out.metadata["scramble_length"] = std::to_string(scramble_length);
  out.metadata["targets_nonzero"] = targets_nonzero ? "true" : "false";
  return out;
}

inline HeegaardDiagram random_diagram(std::uint64_t seed, std::size_t genus, bool targets_nonzero) {
  return random_diagram(seed, genus, targets_nonzero, 4 * genus);
}

}  // namespace twistframe
