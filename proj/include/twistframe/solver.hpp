#pragma once

// Twist solver: find a subset of the a-curves whose twists make the form
// vanish on every b-curve.
//
// With g(a_j) = 0 and the a-curves pairwise orthogonal, twisting along a_j
// changes g by the functional x -> x . a_j. Choosing the subset epsilon thus
// reduces to the Z/2 system
//
//   sum_j (b_k . a_j) epsilon_j = g(b_k)      for every k,
//
// after which g(h(b_k)) = g(b_k) + g(b_k) = 0 and g(h(a_k)) = g(a_k) = 0.

#include <algorithm>
#include <bit>
#include <variant>
#include <vector>

#include "twistframe/heegaard.hpp"

namespace twistframe {

struct TwistSystem {
  BitMatrix matrix;  // matrix(k, j) = b_k . a_j
  BitVector target;  // target[k] = g(b_k) read in Z/2
};

enum class SolvePolicy { first, minimal_weight };

/// Form values after applying the chosen twists, one per b-curve and one per
/// a-curve.
struct Transcript {
  std::vector<HValue> b_values;
  std::vector<HValue> a_values;

  bool all_zero() const {
    auto zero = [](HValue v) { return v == HValue{}; };
    return std::ranges::all_of(b_values, zero) && std::ranges::all_of(a_values, zero);
  }
};

struct TwistCertificate {
  BitVector epsilon;                        // epsilon[j] = 1 iff T_{a_j} is used
  std::vector<BitVector> solution_family;   // every solution is epsilon + span(solution_family)
  Transcript transcript;
};

/// No subset of a-curves works; `witness` selects b-curves whose rows of the
/// system sum to zero while their targets sum to 1.
struct UnsolvableTwists {
  BitVector witness;
};

using TwistOutcome = std::variant<TwistCertificate, UnsolvableTwists>;

inline constexpr std::size_t kMinimalWeightKernelCap = 20;

inline TwistSystem build_system(const HeegaardDiagram& dia) {
  ValidationReport report = validate_diagram(dia);
  if (!report.passed()) {
    throw ValidationError("build_system: invalid diagram", std::move(report));
  }
  const std::size_t n = dia.curve_count();
  std::vector<BitVector> functionals;
  functionals.reserve(n);
  for (const auto& a : dia.a_curves) {
    functionals.push_back(twist_functional(dia.form, a));
  }
  TwistSystem sys{BitMatrix(n, n), BitVector(n)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (gf2::dot(functionals[j], dia.b_curves[k])) {
        sys.matrix.set(k, j);
      }
    }
    sys.target.set(k, eval_form(dia.form, dia.b_curves[k]).as_bit());
  }
  return sys;
}

/// The composition of twists along the a-curves selected by epsilon, in
/// increasing index order.
inline TwistWord twist_word_for(const HeegaardDiagram& dia, const BitVector& epsilon) {
  if (epsilon.size() != dia.curve_count()) {
    throw DimensionError("epsilon has length " + std::to_string(epsilon.size()) + " for " +
                         std::to_string(dia.curve_count()) + " a-curves");
  }
  TwistWord word(dia.space());
  epsilon.for_each_set([&](std::size_t j) { word.append(dia.a_curves[j]); });
  return word;
}

/// Evaluates g on every twisted curve, going through the twist word itself.
inline Transcript compute_transcript(const HeegaardDiagram& dia, const TwistWord& word) {
  Transcript tr;
  tr.b_values.reserve(dia.b_curves.size());
  tr.a_values.reserve(dia.a_curves.size());
  for (const auto& b : dia.b_curves) {
    tr.b_values.push_back(eval_form(dia.form, word_apply(word, b)));
  }
  for (const auto& a : dia.a_curves) {
    tr.a_values.push_back(eval_form(dia.form, word_apply(word, a)));
  }
  return tr;
}

namespace detail {

// Minimum-weight member of particular + span(kernel), ties broken towards the
// lexicographically smallest bit-string. Walks the coset in Gray-code order.
inline BitVector minimal_weight_member(const BitVector& particular, const std::vector<BitVector>& kernel) {
  if (kernel.size() > kMinimalWeightKernelCap) {
    throw CapacityError("minimal_weight: kernel dimension " + std::to_string(kernel.size()) + " exceeds " +
                        std::to_string(kMinimalWeightKernelCap));
  }
  BitVector current = particular;
  BitVector best = particular;
  std::size_t best_weight = best.count();
  const std::uint64_t count = std::uint64_t{1} << kernel.size();
  for (std::uint64_t step = 1; step < count; ++step) {
    current ^= kernel[static_cast<std::size_t>(std::countr_zero(step))];
    const std::size_t weight = current.count();
    if (weight < best_weight || (weight == best_weight && lex_less(current, best))) {
      best = current;
      best_weight = weight;
    }
  }
  return best;
}

}  // namespace detail

/// Solves for a twist subset. Policy `first` returns the elimination solution
/// with every free variable 0; `minimal_weight` searches the whole solution
/// coset (kernel dimension at most 20). The transcript is computed by
/// actually applying the chosen twists.
inline TwistOutcome solve_twists(const HeegaardDiagram& dia, SolvePolicy policy = SolvePolicy::first) {
  const TwistSystem sys = build_system(dia);
  gf2::SolveResult result = gf2::solve(sys.matrix, sys.target);
  if (auto* bad = std::get_if<gf2::Unsolvable>(&result)) {
    return UnsolvableTwists{std::move(bad->witness)};
  }
  auto& sol = std::get<gf2::Solution>(result);
  TwistCertificate cert;
  cert.epsilon = policy == SolvePolicy::minimal_weight ? detail::minimal_weight_member(sol.particular, sol.kernel_basis)
                                                       : std::move(sol.particular);
  cert.solution_family = std::move(sol.kernel_basis);
  cert.transcript = compute_transcript(dia, twist_word_for(dia, cert.epsilon));
  return cert;
}

/// Recomputes g on every twisted a- and b-curve from epsilon alone and passes
/// iff all of them vanish. Does not consult the linear system.
inline ValidationReport verify_certificate(const HeegaardDiagram& dia, const BitVector& epsilon) {
  const TwistWord word = twist_word_for(dia, epsilon);
  const Transcript tr = compute_transcript(dia, word);
  ValidationReport report;
  for (std::size_t k = 0; k < tr.b_values.size(); ++k) {
    if (tr.b_values[k] != HValue{}) {
      report.fail("b_target", "g(h(b_" + std::to_string(k) + ")) = " + tr.b_values[k].to_string(),
                  {word_apply(word, dia.b_curves[k])});
    }
  }
  for (std::size_t k = 0; k < tr.a_values.size(); ++k) {
    if (tr.a_values[k] != HValue{}) {
      report.fail("a_target", "g(h(a_" + std::to_string(k) + ")) = " + tr.a_values[k].to_string(),
                  {word_apply(word, dia.a_curves[k])});
    }
  }
  return report;
}

inline ValidationReport verify_certificate(const HeegaardDiagram& dia, const TwistCertificate& cert) {
  return verify_certificate(dia, cert.epsilon);
}

/// Changes the gluing by the certified twist word: b-curves are replaced by
/// their images, a-curves and the form stay as they are.
inline HeegaardDiagram reglue(const HeegaardDiagram& dia, const TwistCertificate& cert) {
  ValidationReport report = verify_certificate(dia, cert);
  if (!report.passed()) {
    throw PreconditionError("reglue: certificate does not verify (" + report.violations.front().detail + ")");
  }
  const TwistWord word = twist_word_for(dia, cert.epsilon);
  HeegaardDiagram out = dia;
  for (auto& b : out.b_curves) {
    b = word_apply(word, b);
  }
  return out;
}

}  // namespace twistframe
