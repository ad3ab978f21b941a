#include <gtest/gtest.h>

#include "locprime/centre.hpp"
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

Ideal centre_prime(const CentreData& cd, std::initializer_list<Elem> ambient_gens) {
  ElementSet g(cd.ambient->order(), ambient_gens);
  return ideal_generated_by(cd.centre, cd.restrict(g));
}

}  // namespace

TEST(CentreRing, Examples) {
  auto z6 = make_zmod(6);
  EXPECT_TRUE(centre_ring(z6).centre->same_tables(*z6));
  auto m = make_matrix_ring(2, *make_gf(2));
  EXPECT_EQ(centre_ring(m).centre->order(), 2);
}

TEST(CentreRing, ProductOfCentres) {
  auto a = make_upper_triangular(2, *make_gf(2));
  auto b = make_zmod(2);
  auto p = make_product(*a, *b, 16);
  auto zp = centre_ring(p).centre;
  auto za = centre_ring(a).centre;
  EXPECT_TRUE(oracle::isomorphic(*zp, *make_product(*za, *b)));
}

TEST(CentreRing, IsCommutativeSubring) {
  for (const auto& r : rings_up_to(16)) {
    auto cd = centre_ring(r);
    EXPECT_TRUE(cd.centre->is_commutative());
    EXPECT_TRUE(is_ring_hom(cd.embedding));
    EXPECT_EQ(cd.lift(cd.centre->all()), centre_set(*r));
  }
}

TEST(Rho, CommutativeIsIdentity) {
  for (const auto& r : rings_up_to(12)) {
    if (!r->is_commutative()) continue;
    auto m = rho(r);
    EXPECT_TRUE(m.well_defined);
    EXPECT_TRUE(m.surjective_onto_min);
    for (const auto& row : m.table) EXPECT_EQ(m.centre.lift(row.centre), row.prime.members);
  }
}

TEST(Rho, MatrixAndTriangular) {
  auto m = rho(make_matrix_ring(2, *make_gf(2)));
  ASSERT_EQ(m.table.size(), 1u);
  EXPECT_TRUE(m.table[0].prime.is_zero());
  EXPECT_EQ(m.table[0].centre.size(), 1);
  auto t = rho(make_upper_triangular(2, *make_gf(2)));
  ASSERT_EQ(t.table.size(), 2u);
  for (const auto& row : t.table) {
    EXPECT_TRUE(row.minimal_in_R);
    EXPECT_EQ(row.centre.size(), 1);
    EXPECT_TRUE(row.minimal_in_Z);
  }
}

TEST(Rho, PrimesRestrictToPrimes) {
  // rho() itself throws on a violation; every corpus ring must go through.
  for (const auto& r : rings_up_to(16)) EXPECT_NO_THROW(rho(r)) << r->label();
}

TEST(RhoCriteria, Examples) {
  auto a = check_rho_criteria(make_zmod(6));
  EXPECT_TRUE(a.applicable && a.c1 && a.c2 && a.c3 && a.c4);
  auto b = check_rho_criteria(make_matrix_ring(2, *make_gf(2)));
  EXPECT_TRUE(b.applicable && b.c1 && b.c2 && b.c3 && b.c4);
  EXPECT_FALSE(check_rho_criteria(make_zmod(4)).applicable);
}

TEST(RhoCriteria, FourWayAgreementOnCorpus) {
  for (const auto& r : rings_up_to(16)) EXPECT_TRUE(check_rho_criteria(r).agree()) << r->label();
}

TEST(CentralLocalize, Zmod6AtTwo) {
  auto r = make_zmod(6);
  auto lat = all_ideals(r);
  auto cd = centre_ring(r);
  auto cl = central_localize(r, lat, cd, centre_prime(cd, {2}));
  EXPECT_EQ(cl.loc.set.members, ElementSet(6, {1, 3, 5}));
  EXPECT_EQ(cl.loc.target->order(), 2);
  EXPECT_TRUE(cl.in_image);
  EXPECT_TRUE(cl.proper);
  EXPECT_TRUE(cl.fiber_bijective);
}

TEST(CentralLocalize, FieldAndMatrixRing) {
  auto f = make_gf(4);
  auto cdf = centre_ring(f);
  auto cl = central_localize(f, all_ideals(f), cdf, zero_ideal(cdf.centre));
  EXPECT_EQ(cl.loc.target->order(), 4);
  auto m = make_matrix_ring(2, *make_gf(2));
  auto cdm = centre_ring(m);
  auto clm = central_localize(m, all_ideals(m), cdm, zero_ideal(cdm.centre));
  EXPECT_EQ(clm.loc.target->order(), 16);
  ASSERT_EQ(clm.fiber.size(), 1u);
  EXPECT_TRUE(clm.fiber[0].is_zero());
}

TEST(CentralLocalize, NonPrimeIsRejected) {
  auto r = make_zmod(6);
  auto cd = centre_ring(r);
  try {
    central_localize(r, all_ideals(r), cd, zero_ideal(cd.centre));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_prime);
  }
}

TEST(CentralLocalize, ImageCriterionOnCorpus) {
  for (const auto& r : rings_up_to(16)) {
    const auto lat = all_ideals(r);
    const auto cd = centre_ring(r);
    for (const auto& q : prime_ideals(all_ideals(cd.centre))) {
      auto cl = central_localize(r, lat, cd, q);
      EXPECT_EQ(cl.in_image, cl.proper) << r->label();
      EXPECT_TRUE(cl.fiber_bijective) << r->label();
    }
  }
}

TEST(Pierce, CrtDecomposition) {
  auto v = check_pierce(make_zmod(6));
  EXPECT_TRUE(v.applicable);
  EXPECT_EQ(v.factors, 2);
  EXPECT_TRUE(v.isomorphism);
  auto w = check_pierce(make_product(*make_gf(2), *make_gf(3)));
  EXPECT_EQ(w.factors, 2);
  EXPECT_TRUE(w.isomorphism);
  auto p = check_pierce(make_matrix_ring(2, *make_gf(2)));
  EXPECT_EQ(p.factors, 1);
  EXPECT_TRUE(p.isomorphism);
  EXPECT_FALSE(check_pierce(make_zmod(8)).applicable);
}

TEST(Pierce, SemiprimeCorpus) {
  for (const auto& r : rings_up_to(16)) {
    auto v = check_pierce(r);
    if (!v.applicable) continue;
    EXPECT_TRUE(v.embedding && v.centres_match && v.factor_min_primes) << r->label();
    if (r->is_commutative()) { EXPECT_TRUE(v.isomorphism) << r->label(); }
  }
}

TEST(CentreSemiprime, SemiprimeRingsHaveSemiprimeCentre) {
  for (const auto& r : rings_up_to(16))
    if (is_semiprime_ring(r)) { EXPECT_TRUE(is_semiprime_ring(centre_ring(r).centre)) << r->label(); }
}
