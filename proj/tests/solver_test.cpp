#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "test_util.hpp"
#include "twistframe/oracle.hpp"
#include "twistframe/solver.hpp"

namespace {

using namespace twistframe;
using twistframe::testing::bits;
using twistframe::testing::Rng;

HValue q(int v) { return HValue::from_q(v); }

// Genus-2 space, a_1 = e1, b_1 = e4 with g(b_1) = 1: b_1 . a_1 = 0.
HeegaardDiagram non_lagrangian() {
  HeegaardDiagram d = standard_orientable(2, {q(0), q(2)});
  d.a_curves = {bits("1000")};
  d.b_curves = {bits("0001")};
  return d;
}

std::set<std::string> coset(const TwistCertificate& c) {
  std::set<std::string> out;
  const std::size_t k = c.solution_family.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    BitVector x = c.epsilon;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) x ^= c.solution_family[i];
    }
    out.insert(x.to_string());
  }
  return out;
}

TEST(BuildSystem, Examples) {
  const auto one = build_system(standard_orientable(1, {q(2)}));
  EXPECT_EQ(one.matrix, BitMatrix::identity(1));
  EXPECT_EQ(one.target, bits("1"));

  const auto two = build_system(standard_orientable(2, {q(0), q(0)}));
  EXPECT_EQ(two.matrix, BitMatrix::identity(2));
  EXPECT_EQ(two.target, bits("00"));

  const auto nl = build_system(non_lagrangian());
  EXPECT_EQ(nl.matrix, BitMatrix(1, 1));
  EXPECT_EQ(nl.target, bits("1"));

  auto invalid = standard_orientable(1, {q(0)});
  invalid.b_curves = {bits("10"), bits("01")};
  EXPECT_THROW(build_system(invalid), ValidationError);
}

TEST(BuildSystem, EntriesMatchPairings) {
  Rng rng(51);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto d = random_diagram(seed, 1 + seed % 5, true);
    const auto sys = build_system(d);
    for (std::size_t k = 0; k < d.curve_count(); ++k) {
      for (std::size_t j = 0; j < d.curve_count(); ++j) {
        EXPECT_EQ(sys.matrix.get(k, j), intersection(d.space(), d.b_curves[k], d.a_curves[j]));
      }
      EXPECT_EQ(sys.target.get(k), eval_form(d.form, d.b_curves[k]) == HValue::embed(true));
    }
  }
}

TEST(SolveTwists, Examples) {
  const auto d = standard_orientable(1, {q(2)});
  // Oracle: of the two subsets only {a_1} works.
  const auto truth = oracle::brute_force_twists(d);
  ASSERT_EQ(truth.size(), 1u);
  EXPECT_EQ(truth[0], bits("1"));

  const auto out = solve_twists(d);
  ASSERT_TRUE(std::holds_alternative<TwistCertificate>(out));
  const auto& cert = std::get<TwistCertificate>(out);
  EXPECT_EQ(cert.epsilon, bits("1"));
  EXPECT_TRUE(cert.solution_family.empty());
  EXPECT_TRUE(cert.transcript.all_zero());
  // g(e1 + e2) with v = (0, 1): 0 + 2 + 2 = 4 = 0 in half-units.
  EXPECT_EQ(eval_form(d.form, bits("11")), HValue{});

  const auto zero = solve_twists(standard_orientable(3, {q(0), q(0), q(0)}));
  ASSERT_TRUE(std::holds_alternative<TwistCertificate>(zero));
  EXPECT_TRUE(std::get<TwistCertificate>(zero).epsilon.none());

  const auto nl = non_lagrangian();
  EXPECT_TRUE(oracle::brute_force_twists(nl).empty());
  const auto bad = solve_twists(nl);
  ASSERT_TRUE(std::holds_alternative<UnsolvableTwists>(bad));
  EXPECT_EQ(std::get<UnsolvableTwists>(bad).witness, bits("1"));
}

TEST(SolveTwists, EmptyDiagram) {
  const auto out = solve_twists(standard_orientable(0, {}));
  ASSERT_TRUE(std::holds_alternative<TwistCertificate>(out));
  EXPECT_EQ(std::get<TwistCertificate>(out).epsilon.size(), 0u);
}

TEST(SolveTwists, UnsolvableWitnessCertifies) {
  Rng rng(52);
  int seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t genus = 2 + rng() % 4;
    std::vector<HValue> b(genus);
    for (auto& v : b) v = HValue::embed(rng() & 1U);
    HeegaardDiagram d = standard_orientable(genus, b);
    d.a_curves.erase(d.a_curves.begin());
    d.b_curves.pop_back();
    d = scramble(d, twistframe::testing::random_word(rng, d.space(), 6));
    const auto out = solve_twists(d);
    EXPECT_EQ(std::holds_alternative<TwistCertificate>(out), !oracle::brute_force_twists(d).empty());
    if (const auto* bad = std::get_if<UnsolvableTwists>(&out)) {
      ++seen;
      const auto sys = build_system(d);
      EXPECT_TRUE(gf2::certifies_inconsistency(sys.matrix, sys.target, gf2::Unsolvable{bad->witness}));
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(SolveTwists, MinimalWeight) {
  // a_1 = a_2 = e1 and b_1 = b_2 = e2: M = [[1,1],[1,1]], t = 11, so the
  // solutions are exactly {10, 01}.
  HeegaardDiagram d = standard_orientable(2, {q(2), q(0)});
  d.a_curves = {bits("1000"), bits("1000")};
  d.b_curves = {bits("0100"), bits("0100")};
  ASSERT_TRUE(validate_diagram(d).passed());
  const auto truth = oracle::brute_force_twists(d);
  ASSERT_EQ(truth, (std::vector<BitVector>{bits("01"), bits("10")}));

  const auto first = solve_twists(d, SolvePolicy::first);
  EXPECT_EQ(std::get<TwistCertificate>(first).epsilon, bits("10"));
  const auto out = solve_twists(d, SolvePolicy::minimal_weight);
  ASSERT_TRUE(std::holds_alternative<TwistCertificate>(out));
  const auto& cert = std::get<TwistCertificate>(out);
  EXPECT_EQ(cert.epsilon, bits("01"));
  EXPECT_TRUE(cert.transcript.all_zero());
  EXPECT_TRUE(verify_certificate(d, cert).passed());
}

TEST(SolveTwists, MinimalWeightAgreesWithOracleOnRandomInstances) {
  Rng rng(53);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto d = random_diagram(seed, 1 + seed % 4, true);
    const auto truth = oracle::brute_force_twists(d);
    const auto out = solve_twists(d, SolvePolicy::minimal_weight);
    ASSERT_TRUE(std::holds_alternative<TwistCertificate>(out));
    const auto& eps = std::get<TwistCertificate>(out).epsilon;
    const auto best = std::ranges::min_element(truth, [](const BitVector& l, const BitVector& r) {
      return l.count() != r.count() ? l.count() < r.count() : lex_less(l, r);
    });
    EXPECT_EQ(eps, *best);
  }
}

TEST(SolveTwists, MinimalWeightCapacity) {
  // 21 a-curves with all-zero b-pairings leave a 21-dimensional kernel.
  HeegaardDiagram d = standard_orientable(21, std::vector<HValue>(21));
  d.b_curves = d.a_curves;
  ASSERT_TRUE(validate_diagram(d).passed());
  EXPECT_THROW(solve_twists(d, SolvePolicy::minimal_weight), CapacityError);
  EXPECT_TRUE(std::holds_alternative<TwistCertificate>(solve_twists(d)));
}

TEST(VerifyCertificate, Examples) {
  const auto d = standard_orientable(1, {q(2)});
  const auto cert = std::get<TwistCertificate>(solve_twists(d));
  EXPECT_TRUE(verify_certificate(d, cert).passed());

  const auto zeroed = verify_certificate(d, bits("0"));
  EXPECT_FALSE(zeroed.passed());
  EXPECT_TRUE(zeroed.mentions("b_target"));
  ASSERT_EQ(zeroed.violations.front().witnesses.size(), 1u);
  EXPECT_EQ(zeroed.violations.front().witnesses[0], bits("01"));

  EXPECT_THROW(verify_certificate(d, bits("10")), DimensionError);
}

TEST(VerifyCertificate, TamperedEpsilonFails) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_diagram(seed, 1 + seed % 4, true);
    const auto cert = std::get<TwistCertificate>(solve_twists(d));
    const auto solutions = coset(cert);
    for (std::size_t j = 0; j < d.curve_count(); ++j) {
      BitVector tampered = cert.epsilon;
      tampered.flip(j);
      EXPECT_EQ(verify_certificate(d, tampered).passed(), solutions.contains(tampered.to_string()));
    }
  }
}

TEST(VerifyCertificate, OrderOfCommutingTwistsIsIrrelevant) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto d = random_diagram(seed, 2 + seed % 4, true);
    const auto cert = std::get<TwistCertificate>(solve_twists(d));
    const TwistWord forward = twist_word_for(d, cert.epsilon);
    const Transcript a = compute_transcript(d, forward);
    const Transcript b = compute_transcript(d, forward.reversed());
    EXPECT_EQ(a.b_values, b.b_values);
    EXPECT_EQ(a.a_values, b.a_values);
  }
}

TEST(Reglue, Examples) {
  const auto d = standard_orientable(1, {q(2)});
  const auto cert = std::get<TwistCertificate>(solve_twists(d));
  const auto r = reglue(d, cert);
  EXPECT_EQ(r.b_curves[0], bits("11"));
  EXPECT_EQ(r.a_curves, d.a_curves);
  EXPECT_EQ(r.form, d.form);
  EXPECT_EQ(eval_form(r.form, r.b_curves[0]), HValue{});
  EXPECT_EQ(eval_form(r.form, r.a_curves[0]), HValue{});

  const auto zero = standard_orientable(2, {q(0), q(0)});
  EXPECT_EQ(reglue(zero, std::get<TwistCertificate>(solve_twists(zero))), zero);

  TwistCertificate forged = cert;
  forged.epsilon = bits("0");
  EXPECT_THROW(reglue(d, forged), PreconditionError);
}

TEST(Reglue, SolvingAgainYieldsEmptyWord) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d = random_diagram(seed, 1 + seed % 6, true);
    const auto r = reglue(d, std::get<TwistCertificate>(solve_twists(d)));
    ASSERT_TRUE(validate_diagram(r).passed());
    const auto again = solve_twists(r);
    ASSERT_TRUE(std::holds_alternative<TwistCertificate>(again));
    EXPECT_TRUE(std::get<TwistCertificate>(again).epsilon.none());
  }
}

}  // namespace
