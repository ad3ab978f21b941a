#pragma once

// The centre as a ring, restriction of primes to it, and central localization.

#include <algorithm>
#include <string>
#include <vector>

#include "localization.hpp"

namespace locprime {

struct CentreData {
  RingPtr ambient;
  RingPtr centre;
  RingHom embedding;  // centre -> ambient

  /// Centre-ring ids of the central elements lying in `s`.
  ElementSet restrict(const ElementSet& s) const { return embedding.preimage(s); }
  /// Ambient ids of a set of centre-ring ids.
  ElementSet lift(const ElementSet& s) const { return embedding.image(s); }
};

/// Induced ring on centre_set(r), re-indexed ascending.
inline CentreData centre_ring(const RingPtr& r) {
  const RingTable& t = *r;
  const std::vector<Elem> z = centre_set(t).members();
  const int m = static_cast<int>(z.size());
  std::vector<int> index(static_cast<std::size_t>(t.order()), -1);
  for (int i = 0; i < m; ++i) index[static_cast<std::size_t>(z[static_cast<std::size_t>(i)])] = i;
  auto at = [&](Elem e) { return static_cast<std::uint8_t>(index[static_cast<std::size_t>(e)]); };
  std::vector<std::uint8_t> add(static_cast<std::size_t>(m * m)), mul(static_cast<std::size_t>(m * m));
  std::vector<std::string> names;
  for (int a = 0; a < m; ++a) {
    names.push_back(t.name(z[static_cast<std::size_t>(a)]));
    for (int b = 0; b < m; ++b) {
      add[static_cast<std::size_t>(a * m + b)] = at(t.add(z[static_cast<std::size_t>(a)], z[static_cast<std::size_t>(b)]));
      mul[static_cast<std::size_t>(a * m + b)] = at(t.mul(z[static_cast<std::size_t>(a)], z[static_cast<std::size_t>(b)]));
    }
  }
  auto c = finalize(RingTable::unchecked(m, std::move(add), std::move(mul), index[static_cast<std::size_t>(t.zero())],
                                         index[static_cast<std::size_t>(t.one())], "Z(" + t.label() + ")",
                                         std::move(names)));
  if (!c->is_commutative()) fail_internal("centre of " + t.label() + " is not commutative");
  RingHom emb{c, r, z};
  if (!is_ring_hom(emb) || !emb.injective()) fail_internal("centre embedding is not an injective homomorphism");
  return {r, c, emb};
}

struct RestrictionRow {
  Ideal prime;          // prime of R
  ElementSet centre;    // p cap Z(R), centre-ring ids
  bool minimal_in_R = false;
  bool minimal_in_Z = false;
};

struct RestrictionMap {
  RingPtr ambient;
  CentreData centre;
  std::vector<RestrictionRow> table;  // over Spec(R)
  std::vector<Ideal> min_centre;      // min(Z(R))
  bool well_defined = false;          // rho_min lands in min(Z)
  bool surjective_onto_min = false;   // every q in min(Z) is hit from min(R)
};

inline RestrictionMap rho(const RingPtr& r, const IdealLattice& lat) {
  RestrictionMap m{r, centre_ring(r), {}, {}, false, false};
  const auto zlat = all_ideals(m.centre.centre);
  m.min_centre = min_primes(zlat);
  const auto mins = min_primes(lat);
  m.well_defined = true;
  std::vector<ElementSet> hit;
  for (const auto& p : prime_ideals(lat)) {
    RestrictionRow row{p, m.centre.restrict(p.members)};
    Ideal q{m.centre.centre, row.centre, Side::two_sided};
    if (!is_ideal_set(*m.centre.centre, row.centre, Side::two_sided) || !is_prime_ideal(q))
      fail_internal("p cap Z(R) is not a prime of the centre for p=" + p.members.to_string());
    row.minimal_in_R = std::find(mins.begin(), mins.end(), p) != mins.end();
    row.minimal_in_Z = std::find(m.min_centre.begin(), m.min_centre.end(), q) != m.min_centre.end();
    if (row.minimal_in_R) {
      m.well_defined = m.well_defined && row.minimal_in_Z;
      hit.push_back(row.centre);
    }
    m.table.push_back(row);
  }
  m.surjective_onto_min = true;
  for (const auto& q : m.min_centre)
    if (std::find(hit.begin(), hit.end(), q.members) == hit.end()) m.surjective_onto_min = false;
  return m;
}

inline RestrictionMap rho(const RingPtr& r) { return rho(r, all_ideals(r)); }

struct RhoVerdict {
  bool applicable = false;
  bool c1 = false;  // C_Z subset of C_R
  bool c2 = false;  // C_Z avoids every minimal prime
  bool c3 = false;  // rho_min well defined
  bool c4 = false;  // rho_min surjective
  bool agree() const { return !applicable || (c1 == c2 && c2 == c3 && c3 == c4); }
};

inline RhoVerdict check_rho_criteria(const RingPtr& r, const IdealLattice& lat) {
  RhoVerdict v;
  if (!is_semiprime_ring(lat)) return v;
  v.applicable = true;
  auto m = rho(r, lat);
  const ElementSet cz = m.centre.lift(regular_elements(*m.centre.centre));
  v.c1 = cz.subset_of(regular_elements(*r));
  v.c2 = true;
  for (const auto& p : min_primes(lat)) v.c2 = v.c2 && !p.members.intersects(cz);
  v.c3 = m.well_defined;
  v.c4 = m.surjective_onto_min;
  return v;
}

inline RhoVerdict check_rho_criteria(const RingPtr& r) { return check_rho_criteria(r, all_ideals(r)); }

struct CentralLocalization {
  Localization loc;
  Ideal q;                      // prime of the centre ring
  bool in_image = false;        // q in im(rho_R)
  bool proper = false;          // R_q != R_q q
  bool fiber_bijective = false; // {P : P cap Z = q} <-> V(R_q q)
  std::vector<Ideal> fiber;     // primes of R over q
  std::vector<ElementSet> fiber_images;
  bool minimal_in_fiber = false;  // some minimal prime of R restricts to q
};

/// Localize at S = Z(R) \ q (central, hence a denominator set).
inline CentralLocalization central_localize(const RingPtr& r, const IdealLattice& lat, const CentreData& cd,
                                            const Ideal& q) {
  if (!is_ideal_set(*cd.centre, q.members, Side::two_sided) || !is_prime_ideal(q))
    throw Error(ErrorCode::not_prime, q.members.to_string() + " is not a prime of the centre");
  const ElementSet s = cd.lift(q.members.complement());
  CentralLocalization out{localize(MultSet{r, s}), q};
  const Localization& l = out.loc;
  const ElementSet sq = cd.lift(q.members);
  const Ideal rqq = ideal_generated_by(l.target, l.sigma.image(sq), Side::two_sided);
  out.proper = !rqq.is_whole();

  const auto mins = min_primes(lat);
  for (const auto& p : prime_ideals(lat))
    if (cd.restrict(p.members) == q.members) {
      out.fiber.push_back(p);
      out.minimal_in_fiber = out.minimal_in_fiber || std::find(mins.begin(), mins.end(), p) != mins.end();
    }
  out.in_image = !out.fiber.empty();

  std::vector<ElementSet> over;
  for (const auto& pt : prime_ideals(all_ideals(l.target)))
    if (rqq.subset_of(pt)) over.push_back(pt.members);
  bool ok = true;
  for (const auto& p : out.fiber) {
    const ElementSet img = localize_left_ideal(l, p).target;
    if (std::find(out.fiber_images.begin(), out.fiber_images.end(), img) != out.fiber_images.end()) ok = false;
    if (std::find(over.begin(), over.end(), img) == over.end()) ok = false;
    out.fiber_images.push_back(img);
  }
  out.fiber_bijective = ok && out.fiber_images.size() == over.size();
  return out;
}

struct PierceVerdict {
  bool applicable = false;
  bool embedding = false;        // R -> prod R_q injective
  bool isomorphism = false;      // bijective (required when R is commutative)
  bool centres_match = false;    // Z(R_q) = image of Z(R), a field
  bool factor_min_primes = false;
  int factors = 0;
};

inline PierceVerdict check_pierce(const RingPtr& r, const IdealLattice& lat) {
  PierceVerdict v;
  if (!is_semiprime_ring(lat)) return v;
  const CentreData cd = centre_ring(r);
  const ElementSet cz = cd.lift(regular_elements(*cd.centre));
  if (!cz.subset_of(regular_elements(*r))) return v;
  v.applicable = true;
  const auto zmins = min_primes(all_ideals(cd.centre));
  const auto mins = min_primes(lat);
  v.factors = static_cast<int>(zmins.size());
  std::vector<std::vector<Elem>> tuples(static_cast<std::size_t>(r->order()));
  long long product_order = 1;
  v.centres_match = v.factor_min_primes = true;
  for (const auto& q : zmins) {
    auto cl = central_localize(r, lat, cd, q);
    const Localization& l = cl.loc;
    product_order *= l.target->order();
    for (Elem x = 0; x < r->order(); ++x) tuples[static_cast<std::size_t>(x)].push_back(l.sigma(x));
    const ElementSet zq = centre_set(*l.target);
    if (zq != l.sigma.image(cd.lift(cd.centre->all()))) v.centres_match = false;
    bool field = true;
    zq.for_each([&](Elem e) {
      if (e != l.target->zero() && !inverse(*l.target, e)) field = false;
    });
    v.centres_match = v.centres_match && field;
    auto tl = all_ideals(l.target);
    if (!is_semiprime_ring(tl)) v.factor_min_primes = false;
    std::vector<ElementSet> expected;
    for (const auto& p : mins) {
      const ElementSet img = localize_left_ideal(l, p).target;
      if (!img.is_full() && std::find(expected.begin(), expected.end(), img) == expected.end()) expected.push_back(img);
    }
    const auto tmins = min_primes(tl);
    if (tmins.size() != expected.size()) v.factor_min_primes = false;
    for (const auto& p : tmins)
      if (std::find(expected.begin(), expected.end(), p.members) == expected.end()) v.factor_min_primes = false;
  }
  std::vector<std::vector<Elem>> sorted = tuples;
  std::sort(sorted.begin(), sorted.end());
  v.embedding = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  v.isomorphism = v.embedding && product_order == r->order();
  return v;
}

inline PierceVerdict check_pierce(const RingPtr& r) { return check_pierce(r, all_ideals(r)); }

}  // namespace locprime
