#pragma once

// Dehn twists acting on mod-2 homology as transvections x -> x + (x.a) a,
// words of twists, and their pullback action on quadratic refinements.

#include <algorithm>
#include <vector>

#include "twistframe/quad_form.hpp"

namespace twistframe {

/// Twist along a nonzero homology class a. Caches Q a so that applying the
/// twist costs one dot product.
///
/// Dehn twists live on two-sided curves (a.a = 0); only then is the map an
/// isometric involution. One-sided classes are accepted and follow the same
/// formula, but words containing them cannot be inverted by reversal.
class Twist {
 public:
  Twist(const InnerSpace& space, BitVector curve_class)
      : curve_(std::move(curve_class)) {
    space.require_vector(curve_, "Twist");
    if (curve_.none()) {
      throw PreconditionError("Twist: curve class must be nonzero");
    }
    dual_ = space.pair_with(curve_);
  }

  const BitVector& curve_class() const { return curve_; }
  bool two_sided() const { return !gf2::dot(dual_, curve_); }
  /// Q a, so that dot(dual(), x) == x . a.
  const BitVector& dual() const { return dual_; }
  std::size_t dimension() const { return curve_.size(); }

 private:
  BitVector curve_;
  BitVector dual_;
};

/// x + (x . a) a.
inline BitVector twist_apply(const Twist& t, BitVector x) {
  if (x.size() != t.dimension()) {
    throw DimensionError("twist_apply: vector length " + std::to_string(x.size()) + ", twist acts on dimension " +
                         std::to_string(t.dimension()));
  }
  if (gf2::dot(t.dual(), x)) {
    x ^= t.curve_class();
  }
  return x;
}

/// Ordered sequence of twists on one space. Words act left to right: the
/// first twist is applied first.
class TwistWord {
 public:
  explicit TwistWord(InnerSpace space) : space_(std::move(space)) {}

  const InnerSpace& space() const { return space_; }
  const std::vector<Twist>& twists() const { return twists_; }
  std::size_t size() const { return twists_.size(); }
  bool empty() const { return twists_.empty(); }

  TwistWord& append(const BitVector& curve_class) {
    space_.require_vector(curve_class, "TwistWord::append");
    // Twisting along the null class is the identity.
    if (curve_class.any()) {
      twists_.emplace_back(space_, curve_class);
    }
    return *this;
  }

  bool two_sided() const {
    return std::ranges::all_of(twists_, [](const Twist& t) { return t.two_sided(); });
  }

  TwistWord reversed() const {
    TwistWord r(space_);
    r.twists_.assign(twists_.rbegin(), twists_.rend());
    return r;
  }

 private:
  InnerSpace space_;
  std::vector<Twist> twists_;
};

inline BitVector word_apply(const TwistWord& w, BitVector x) {
  w.space().require_vector(x, "word_apply");
  for (const Twist& t : w.twists()) {
    if (gf2::dot(t.dual(), x)) {
      x ^= t.curve_class();
    }
  }
  return x;
}

/// The form x -> g(w(x)), given by v_i' = g(w(e_i)).
inline QuadraticRefinement pullback(const QuadraticRefinement& g, const TwistWord& w) {
  if (!(g.space() == w.space())) {
    throw DimensionError("pullback: form and word live on different spaces");
  }
  const std::size_t d = g.dimension();
  std::vector<HValue> values(d);
  for (std::size_t i = 0; i < d; ++i) {
    values[i] = eval_form(g, word_apply(w, BitVector::unit(d, i)));
  }
  return {g.space(), std::move(values)};
}

/// The functional x -> (g o T_a)(x) - g(x), which equals x . a when g(a) = 0,
/// returned as its pairing vector Q a.
inline BitVector twist_functional(const QuadraticRefinement& g, const BitVector& a) {
  g.space().require_vector(a, "twist_functional");
  if (eval_form(g, a) != HValue{}) {
    throw PreconditionError("twist_functional: g(a) = " + eval_form(g, a).to_string() + ", expected 0");
  }
  return g.space().pair_with(a);
}

}  // namespace twistframe
