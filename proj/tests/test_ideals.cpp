#include <gtest/gtest.h>

#include <numeric>

#include "locprime/corpus.hpp"
#include "oracles.hpp"

using namespace locprime;

namespace {

std::vector<RingPtr> rings_up_to(int cap) {
  CorpusConfig cfg;
  cfg.order_cap = cap;
  std::vector<RingPtr> out;
  for (const auto& in : build_corpus(cfg))
    if (in.ring) out.push_back(in.ring);
  return out;
}

std::vector<std::uint64_t> bits(const std::vector<Ideal>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& i : v) out.push_back(i.members.bits());
  std::sort(out.begin(), out.end());
  return out;
}

bool squarefree(int n) {
  for (int p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

}  // namespace

TEST(Generated, Examples) {
  auto z12 = make_zmod(12);
  EXPECT_TRUE(ideal_generated_by(z12, ElementSet(12, {0})).is_zero());
  EXPECT_EQ(ideal_generated_by(z12, ElementSet(12, {8})).members, ElementSet(12, {0, 4, 8}));
  auto m = make_matrix_ring(2, *make_gf(2));
  const Elem e11 = oracle::by_name(*m, "[1 0;0 0]");
  EXPECT_TRUE(ideal_generated_by(m, ElementSet::single(16, e11)).is_whole());
  EXPECT_EQ(ideal_generated_by(m, ElementSet::single(16, e11), Side::left).members.size(), 4);
}

TEST(Lattice, MatchesSubsetScan) {
  for (const auto& r : rings_up_to(12)) EXPECT_EQ(bits(all_ideals(r).ideals), [&] {
      auto v = oracle::ideals(*r);
      std::sort(v.begin(), v.end());
      return v;
    }()) << r->label();
}

TEST(Lattice, SimpleMatrixRingHasTwoIdeals) { EXPECT_EQ(all_ideals(make_matrix_ring(2, *make_gf(2))).size(), 2u); }

TEST(Lattice, CapIsEnforced) {
  try {
    all_ideals(make_zmod(16), 12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::size_limit);
  }
}

TEST(Primes, ElementwiseLatticeAndBruteForceAgree) {
  for (const auto& r : rings_up_to(12)) {
    const auto lat = all_ideals(r);
    for (const auto& i : lat.ideals) {
      const bool brute = oracle::prime(*r, i.members.bits());
      EXPECT_EQ(is_prime_ideal(i), brute) << r->label() << " " << i.members.to_string();
      if (r->order() <= 8 && !i.is_whole()) { EXPECT_EQ(is_prime_by_lattice(lat, i), brute); }
    }
    auto expected = oracle::min_primes(*r);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(bits(min_primes(lat)), expected) << r->label();
    if (r->order() <= 8) { EXPECT_EQ(bits(min_primes_by_lattice(lat)), expected) << r->label(); }
  }
}

TEST(Primes, ZmodMinimalPrimesArePrimeDivisors) {
  for (int n = 2; n <= 16; ++n) {
    auto r = make_zmod(n);
    std::vector<std::uint64_t> expected;
    for (int p = 2; p <= n; ++p) {
      bool is_p = true;
      for (int d = 2; d * d <= p; ++d) is_p = is_p && p % d != 0;
      if (is_p && n % p == 0) expected.push_back(ideal_generated_by(r, ElementSet(n, {static_cast<Elem>(p % n)})).members.bits());
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(bits(min_primes(r)), expected) << n;
  }
}

TEST(Primes, CompletelyPrimeImpliesPrime) {
  for (const auto& r : rings_up_to(16))
    for (const auto& i : all_ideals(r).ideals) {
      if (i.is_whole()) continue;
      auto rep = classify_ideal(i);
      if (rep.is_completely_prime) { EXPECT_TRUE(rep.is_prime); }
      if (rep.is_prime) { EXPECT_TRUE(rep.is_semiprime_ideal); }
    }
}

TEST(Primes, ZeroOfMatrixRingIsPrimeNotCompletelyPrime) {
  auto m = make_matrix_ring(2, *make_gf(2));
  auto rep = classify_ideal(zero_ideal(m));
  EXPECT_TRUE(rep.is_prime);
  EXPECT_FALSE(rep.is_completely_prime);
}

TEST(Primes, ImproperIdealIsRejected) {
  auto r = make_zmod(6);
  try {
    classify_ideal(whole_ring(r));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::improper_ideal);
  }
}

TEST(MinOver, DirectAgreesWithQuotientBijection) {
  for (const auto& r : rings_up_to(12)) {
    const auto lat = all_ideals(r);
    for (const auto& a : lat.ideals) {
      if (a.is_whole() || a.is_zero()) continue;
      auto q = make_quotient(r, a);
      std::vector<std::uint64_t> lifted;
      for (const auto& p : min_primes(q.ring)) lifted.push_back(q.pi.preimage(p.members).bits());
      std::sort(lifted.begin(), lifted.end());
      EXPECT_EQ(bits(min_primes_over(lat, a)), lifted);
    }
  }
}

TEST(Radical, EqualsStronglyNilpotentAndIntersection) {
  for (const auto& r : rings_up_to(16)) {
    const auto lat = all_ideals(r);
    const Ideal rad = prime_radical(lat);
    EXPECT_EQ(rad.members, strongly_nilpotent_elements(*r)) << r->label();
    EXPECT_EQ(rad, intersection_of(r, min_primes(lat))) << r->label();
  }
}

TEST(Radical, ZmodSemiprimeIffSquarefree) {
  for (int n = 2; n <= 16; ++n) EXPECT_EQ(is_semiprime_ring(make_zmod(n)), squarefree(n)) << n;
}

TEST(Radical, TriangularRadicalIsStrictlyUpper) {
  auto t = make_upper_triangular(2, *make_gf(2));
  const auto rad = prime_radical(t);
  EXPECT_EQ(rad.members.size(), 2);
  EXPECT_TRUE(is_nilpotent_ideal(rad));
  EXPECT_EQ(nilpotency_exponent(rad), 2);
}

TEST(Algebra, ProductIntersectionAndErrors) {
  auto r = make_zmod(12);
  auto two = ideal_generated_by(r, ElementSet(12, {2}));
  auto three = ideal_generated_by(r, ElementSet(12, {3}));
  EXPECT_EQ(ideal_product(two, three).members, ElementSet(12, {0, 6}));
  EXPECT_TRUE(ideal_product(ideal_power(two, 2), three).is_zero());
  EXPECT_TRUE(ideal_intersection(two, three).members == ElementSet(12, {0, 6}));
  EXPECT_TRUE(ideal_sum(two, three).is_whole());
  EXPECT_EQ(ideal_power(two, 2).members, ElementSet(12, {0, 4, 8}));
  auto other = make_zmod(6);
  try {
    ideal_product(two, zero_ideal(other));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ring_mismatch);
  }
}

TEST(Annihilators, DefinitionAndEmptySet) {
  auto t = make_upper_triangular(2, *make_gf(2));
  for (Elem x = 0; x < 8; ++x) {
    ElementSet l(8), rr(8);
    for (Elem y = 0; y < 8; ++y) {
      if (t->mul(y, x) == t->zero()) l.insert(y);
      if (t->mul(x, y) == t->zero()) rr.insert(y);
    }
    EXPECT_EQ(left_ann(t, ElementSet::single(8, x)).members, l);
    EXPECT_EQ(right_ann(t, ElementSet::single(8, x)).members, rr);
  }
  try {
    left_ann(t, ElementSet(8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::empty_set);
  }
}

TEST(PrimeRich, ThreeConditionsAgreeOnEveryRing) {
  for (const auto& r : rings_up_to(16)) {
    auto rep = is_prime_rich(all_ideals(r));
    EXPECT_TRUE(rep.prime_rich) << r->label();
    EXPECT_TRUE(rep.conditions_agree) << r->label();
    for (const auto& e : rep.entries)
      if (e.exponent) { EXPECT_LE(*e.exponent, r->order()); }
  }
}

TEST(Irredundant, MinimalPrimesOfSemiprimeRings) {
  for (const auto& r : rings_up_to(16)) {
    const auto lat = all_ideals(r);
    if (!is_semiprime_ring(lat)) continue;
    EXPECT_TRUE(is_irredundant(min_primes(lat))) << r->label();
  }
  auto z6 = make_zmod(6);
  std::vector<Ideal> with_extra = min_primes(z6);
  with_extra.push_back(zero_ideal(z6));
  EXPECT_FALSE(is_irredundant(with_extra));
  try {
    is_irredundant({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::empty_set);
  }
}

TEST(Describe, GeneratorRendering) {
  auto r = make_zmod(12);
  EXPECT_EQ(describe_ideal(ideal_generated_by(r, ElementSet(12, {8}))), "(4)");
  EXPECT_EQ(describe_ideal(zero_ideal(r)), "(0)");
}
