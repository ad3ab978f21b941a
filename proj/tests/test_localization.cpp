#include <gtest/gtest.h>

#include "locprime/corpus.hpp"
#include "locprime/localization.hpp"
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

MultSet closure(const RingPtr& r, std::initializer_list<Elem> gens) {
  return close_multiplicative(r, ElementSet(r->order(), gens));
}

Ideal principal(const RingPtr& r, Elem g) { return ideal_generated_by(r, ElementSet::single(r->order(), g)); }

}  // namespace

TEST(Closure, Examples) {
  auto z6 = make_zmod(6);
  EXPECT_EQ(closure(z6, {2}).members, ElementSet(6, {1, 2, 4}));
  EXPECT_EQ(closure(z6, {}).members, ElementSet(6, {1}));
  EXPECT_EQ(closure(z6, {3}).members, ElementSet(6, {1, 3}));
}

TEST(Closure, ZeroAbsorbed) {
  auto z6 = make_zmod(6);
  try {
    closure(z6, {2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::zero_absorbed);
    EXPECT_NE(std::string(e.what()).find("= 0"), std::string::npos);
  }
}

TEST(Enumeration, ExhaustiveMatchesSubsetScan) {
  for (const auto& r : rings_up_to(12)) {
    std::vector<std::uint64_t> got;
    for (const auto& s : enumerate_mult_sets(r)) got.push_back(s.members.bits());
    std::sort(got.begin(), got.end());
    auto expected = oracle::mult_sets(*r);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected) << r->label();
  }
}

TEST(Enumeration, FieldsGiveSubmonoidsOfTheUnitGroup) {
  // F_4^x is cyclic of order 3: {1} and the whole group.
  EXPECT_EQ(enumerate_mult_sets(make_gf(4)).size(), 2u);
  EXPECT_EQ(enumerate_mult_sets(make_gf(3)).size(), 2u);
}

TEST(Enumeration, AboveThresholdStillContainsOneAndGenerators) {
  auto r = make_zmod(16);
  auto sets = enumerate_mult_sets(r);
  EXPECT_EQ(sets.front().members, ElementSet(16, {1}));
  for (Elem x = 1; x < 16; ++x) {
    if (x % 2 == 0 && x != 0) continue;  // even elements are nilpotent mod 16
    auto c = closure(r, {x});
    EXPECT_NE(std::find(sets.begin(), sets.end(), c), sets.end()) << x;
  }
}

TEST(Classify, CommutativeSetsAreDenominatorSets) {
  for (const auto& r : rings_up_to(12)) {
    if (!r->is_commutative()) continue;
    for (const auto& s : enumerate_mult_sets(r)) EXPECT_TRUE(classify_set(s).two_sided_den()) << r->label();
  }
}

TEST(Classify, Zmod6Examples) {
  auto z6 = make_zmod(6);
  auto a = classify_set(closure(z6, {2}));
  EXPECT_TRUE(a.two_sided_den());
  EXPECT_EQ(a.ass_l, ElementSet(6, {0, 3}));
  auto b = classify_set(closure(z6, {3}));
  EXPECT_EQ(b.ass_l, ElementSet(6, {0, 2, 4}));
}

TEST(Classify, AssMatchesDefinition) {
  for (const auto& r : rings_up_to(10))
    for (const auto& s : enumerate_mult_sets(r)) {
      auto c = classify_set(s);
      ElementSet l(r->order()), rr(r->order());
      for (Elem x = 0; x < r->order(); ++x)
        s.members.for_each([&](Elem u) {
          if (r->mul(u, x) == r->zero()) l.insert(x);
          if (r->mul(x, u) == r->zero()) rr.insert(x);
        });
      EXPECT_EQ(c.ass_l, l);
      EXPECT_EQ(c.ass_r, rr);
    }
}

TEST(Classify, LeftOreMatchesBruteForce) {
  for (const auto& r : rings_up_to(8))
    for (const auto& s : enumerate_mult_sets(r)) {
      bool ore = true;
      for (Elem x = 0; x < r->order() && ore; ++x)
        s.members.for_each([&](Elem u) {
          bool found = false;
          for (Elem y = 0; y < r->order() && !found; ++y)
            s.members.for_each([&](Elem v) { found = found || r->mul(v, x) == r->mul(y, u); });
          ore = ore && found;
        });
      EXPECT_EQ(classify_set(s).left_ore, ore) << r->label() << " " << s.members.to_string();
    }
}

TEST(Classify, NoncommutativeRingHasNonDenominatorSet) {
  bool found = false;
  for (auto r : {make_upper_triangular(2, *make_gf(2)), make_matrix_ring(2, *make_gf(2))})
    for (const auto& s : enumerate_mult_sets(r)) {
      auto c = classify_set(s);
      if (c.left_den) continue;
      found = true;
      EXPECT_FALSE(c.left_violation.empty());
      try {
        localize(s);
        ADD_FAILURE();
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::classification);
      }
    }
  EXPECT_TRUE(found);
}

TEST(Localize, Zmod6Examples) {
  auto z6 = make_zmod(6);
  auto l = localize(closure(z6, {2}));
  EXPECT_EQ(l.target->order(), 3);
  EXPECT_TRUE(oracle::isomorphic(*l.target, *make_zmod(3)));
  EXPECT_TRUE(inverse(*l.target, l.sigma(2)).has_value());
  EXPECT_EQ(localize(closure(z6, {3})).target->order(), 2);
  auto u = localize(closure(z6, {5}));
  EXPECT_EQ(u.target.get(), z6.get());
}

TEST(Localize, SigmaInvariantsOnCorpus) {
  for (const auto& r : rings_up_to(12))
    for (const auto& s : enumerate_mult_sets(r)) {
      auto c = classify_set(s);
      if (!c.left_den) continue;
      auto l = localize(s);
      EXPECT_TRUE(l.unit_witness.subset_of(units(*l.target)));
      EXPECT_EQ(l.sigma.kernel(), c.ass_l);
      EXPECT_TRUE(is_ring_hom(l.sigma));
    }
}

TEST(LocalizeIdeal, Examples) {
  auto z6 = make_zmod(6);
  auto l = localize(closure(z6, {2}));
  auto zero = localize_left_ideal(l, zero_ideal(z6));
  EXPECT_TRUE(zero.two_sided);
  EXPECT_EQ(zero.target.size(), 1);
  EXPECT_EQ(localize_left_ideal(l, principal(z6, 3)).target.size(), 1);
  auto l3 = localize(closure(z6, {3}));
  EXPECT_EQ(localize_left_ideal(l3, principal(z6, 2)).target.size(), 1);
}

TEST(A11, CommutativeAllTrue) {
  for (const auto& r : rings_up_to(12)) {
    if (!r->is_commutative()) continue;
    const auto lat = all_ideals(r);
    for (const auto& s : enumerate_mult_sets(r)) {
      auto l = localize(s);
      for (const auto& b : lat.ideals) {
        auto v = check_A11_equivalence(l, b);
        EXPECT_TRUE(v.c1 && v.c2 && v.c3 && v.c4 && v.c5);
      }
    }
  }
}

TEST(A11, TriangularFiveWayAgreement) {
  auto t = make_upper_triangular(2, *make_gf(2));
  const auto lat = all_ideals(t);
  int triples = 0;
  for (const auto& s : enumerate_mult_sets(t)) {
    if (!classify_set(s).left_den) continue;
    auto l = localize(s);
    for (const auto& b : lat.ideals) {
      ++triples;
      auto v = check_A11_equivalence(l, b);
      EXPECT_TRUE(v.agree) << v.witness;
      if (b.is_whole()) { EXPECT_TRUE(v.by_convention); }
    }
  }
  EXPECT_GT(triples, 0);
}

TEST(MinRS, Examples) {
  auto z6 = make_zmod(6);
  const auto mins = min_primes(z6);
  auto a = min_RS(mins, closure(z6, {2}));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].members, ElementSet(6, {0, 3}));
  auto b = min_RS(mins, closure(z6, {3}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].members, ElementSet(6, {0, 2, 4}));
}

TEST(MinRS, ContainedInIdealVersion) {
  for (const auto& r : rings_up_to(12)) {
    const auto lat = all_ideals(r);
    const auto mins = min_primes(lat);
    for (const auto& s : enumerate_mult_sets(r)) {
      if (!classify_set(s).left_den) continue;
      auto l = localize(s);
      const auto id = min_RS_id(l, mins);
      for (const auto& p : min_RS(mins, s)) EXPECT_NE(std::find(id.begin(), id.end(), p), id.end());
      if (r->is_commutative()) { EXPECT_TRUE(respects_prime_structure(l, prime_ideals(lat))); }
    }
  }
}

TEST(Normal, Zmod12Generator2) {
  auto r = make_zmod(12);
  auto l = localize_normal(r, ElementSet(12, {2}));
  EXPECT_EQ(l.set.members, ElementSet(12, {1, 2, 4, 8}));
  EXPECT_EQ(l.ass.members, ElementSet(12, {0, 3, 6, 9}));
  EXPECT_EQ(l.kind, LocKind::normal_localizable);
}

TEST(Normal, UnitGeneratorGivesZeroIdeal) {
  auto t = make_upper_triangular(2, *make_gf(2));
  const Elem u = oracle::by_name(*t, "[1 1;0 1]");
  auto l = localize_normal(t, ElementSet::single(8, u));
  EXPECT_TRUE(l.ass.is_zero());
  EXPECT_EQ(l.target->order(), 8);
}

TEST(Normal, CentralGeneratorsReduceToAss) {
  for (const auto& r : rings_up_to(12)) {
    const ElementSet z = centre_set(*r);
    for (Elem g = 0; g < r->order(); ++g) {
      if (!z.contains(g)) continue;
      std::optional<Localization> l;
      try {
        l = localize_normal(r, ElementSet::single(r->order(), g));
      } catch (const Error& e) {
        continue;  // closure reaches 0 or the ideal is everything
      }
      EXPECT_EQ(l->ass.members, classify_set(l->set).ass_l);
    }
  }
}

TEST(Normal, NonNormalGeneratorIsRejected) {
  auto t = make_upper_triangular(2, *make_gf(2));
  bool checked = false;
  for (Elem x = 0; x < 8; ++x) {
    if (is_normal_element(*t, x)) continue;
    checked = true;
    try {
      localize_normal(t, ElementSet::single(8, x));
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::not_normal);
    }
  }
  EXPECT_TRUE(checked);
}

TEST(Largest, RegularSetAndTl) {
  EXPECT_EQ(largest_regular_set(make_zmod(12)).members, ElementSet(12, {1, 5, 7, 11}));
  auto z6 = make_zmod(6);
  auto t = T_l(z6, principal(z6, 2));
  EXPECT_EQ(t.set.members, ElementSet(6, {1, 3, 5}));
  EXPECT_EQ(t.a_l, ElementSet(6, {0, 2, 4}));
  auto f = make_gf(4);
  EXPECT_EQ(T_l(f, zero_ideal(f)).set.members, units(*f));
}

TEST(Largest, AssocRequiresRealizableIdeal) {
  auto r = make_zmod(12);
  EXPECT_EQ(largest_set_assoc(r, principal(r, 3)).members.size(), 8);  // preimage of the units of Z/3
  try {
    largest_set_assoc(r, principal(r, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_in_ass);
  }
}

TEST(Epimorphic, Zmod12Example) {
  auto r = make_zmod(12);
  auto l = localize(close_multiplicative(r, ElementSet(12, {5, 7, 11})));
  auto v = check_epimorphic_den(l, principal(r, 4));
  EXPECT_TRUE(v.b14_applicable);
  EXPECT_TRUE(v.b14_lhs);
  EXPECT_TRUE(v.agree());
}

TEST(Epimorphic, AgreementSweep) {
  for (const auto& r : rings_up_to(12)) {
    const auto lat = all_ideals(r);
    for (const auto& s : enumerate_mult_sets(r)) {
      if (!classify_set(s).left_den) continue;
      auto l = localize(s);
      auto at_ass = check_epimorphic_den(l, l.ass);
      EXPECT_TRUE(at_ass.b14_applicable && at_ass.b14_lhs);
      for (const auto& b : lat.ideals) EXPECT_TRUE(check_epimorphic_den(l, b).agree());
    }
  }
}
