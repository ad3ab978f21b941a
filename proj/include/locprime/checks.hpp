#pragma once

// Executable statements. Each check filters instances by its hypotheses and
// evaluates the conclusion clauses; an instance with no applicable case is
// "not applicable", never "passed".

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "centre.hpp"
#include "corpus.hpp"
#include "monomial.hpp"

namespace locprime {

struct Failure {
  std::string clause;
  std::string detail;
};

struct Outcome {
  bool applicable = false;
  long long cases = 0;
  std::vector<Failure> failures;

  void require(bool ok, const std::string& clause, const std::string& detail) {
    if (!ok) failures.push_back({clause, detail});
  }
  void merge(Outcome o) {
    applicable = applicable || o.applicable;
    cases += o.cases;
    for (auto& f : o.failures) failures.push_back(std::move(f));
  }
};

// ---------------------------------------------------------------------------
// Per-instance data shared by the finite checks

struct LocData {
  Localization loc;
  OreClass cls;
  IdealLattice target_lattice;
  std::vector<Ideal> target_mins;
  bool target_semiprime = false;
};

struct FiniteData {
  RingPtr ring;
  IdealLattice lat;
  std::vector<Ideal> primes;
  std::vector<Ideal> mins;
  bool semiprime = false;
  bool exhaustive = false;
  std::vector<MultSet> sets;
  std::vector<OreClass> classes;
  std::vector<LocData> locs;  // one per left denominator set
  ElementSet normal;
};

inline FiniteData prepare_finite(const RingPtr& r) {
  FiniteData d{r, all_ideals(r)};
  d.primes = prime_ideals(d.lat);
  d.mins = min_primes(d.lat);
  d.semiprime = is_semiprime_ring(d.lat);
  d.exhaustive = r->order() <= kExhaustiveMultSetOrder;
  d.sets = enumerate_mult_sets(r);
  d.normal = normal_elements(*r);
  for (const auto& s : d.sets) {
    d.classes.push_back(classify_set(s));
    const OreClass& c = d.classes.back();
    if (!c.left_den) continue;
    Localization l = localize(s);
    IdealLattice tl = all_ideals(l.target);
    auto tm = min_primes(tl);
    const bool sp = is_semiprime_ring(tl);
    d.locs.push_back({std::move(l), c, std::move(tl), std::move(tm), sp});
  }
  return d;
}

namespace detail {

inline std::string ideals_str(const std::vector<Ideal>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].members.to_string();
  return s + "]";
}

inline std::string sets_str(const std::vector<ElementSet>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].to_string();
  return s + "]";
}

inline std::string loc_str(const LocData& ld) {
  return "S=" + ld.loc.set.members.to_string() + " ass=" + ld.loc.ass.members.to_string() +
         " target=" + ld.loc.target->label() + " min(target)=" + ideals_str(ld.target_mins);
}

inline std::vector<ElementSet> dedup(std::vector<ElementSet> v) {
  std::vector<ElementSet> out;
  for (auto& x : v)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

inline bool same_set(const std::vector<ElementSet>& a, const std::vector<Ideal>& b) {
  auto da = dedup(a);
  std::vector<ElementSet> bb;
  for (const auto& i : b) bb.push_back(i.members);
  auto db = dedup(bb);
  if (da.size() != db.size()) return false;
  for (const auto& x : da)
    if (std::find(db.begin(), db.end(), x) == db.end()) return false;
  return true;
}

inline bool pairwise_distinct(const std::vector<ElementSet>& v) { return dedup(v).size() == v.size(); }

inline bool incomparable(const std::vector<ElementSet>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (i != j && v[i].subset_of(v[j])) return false;
  return true;
}

inline std::vector<ElementSet> minimal_sets(const std::vector<ElementSet>& v) {
  std::vector<ElementSet> out;
  for (const auto& x : v) {
    bool minimal = true;
    for (const auto& y : v)
      if (y != x && y.subset_of(x)) minimal = false;
    if (minimal && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

inline std::vector<ElementSet> images(const Localization& l, const std::vector<Ideal>& v) {
  std::vector<ElementSet> out;
  for (const auto& p : v) out.push_back(localize_left_ideal(l, p).target);
  return out;
}

/// S^-1 p lies in Spec of the target.
inline bool in_spec(const RingPtr& target, const ElementSet& s) {
  if (s.is_full() || !is_ideal_set(*target, s, Side::two_sided)) return false;
  return is_prime_ideal(Ideal{target, s, Side::two_sided});
}

inline bool is_prime_ring(const RingPtr& r) { return is_prime_ideal(zero_ideal(r)); }

inline RingPtr quotient_ring(const RingPtr& r, const Ideal& i) {
  return i.is_zero() ? r : make_quotient(r, i).ring;
}

inline ElementSet image_in_quotient(const RingPtr& r, const Ideal& i, const ElementSet& s, RingPtr* out) {
  if (i.is_zero()) {
    *out = r;
    return s;
  }
  auto q = make_quotient(r, i);
  *out = q.ring;
  return q.pi.image(s);
}

/// Set in Den(ring, 0): two-sided denominator set with trivial annihilators, avoiding 0.
inline bool is_regular_den(const RingPtr& ring, const ElementSet& s) {
  if (s.contains(ring->zero())) return false;
  OreClass c = classify_set(MultSet{ring, s});
  return c.two_sided_den() && c.ass_l.size() == 1 && c.ass_r.size() == 1;
}

/// S equals the monoid generated by its normal elements.
inline bool generated_by_normal(const FiniteData& d, const ElementSet& s) {
  auto closed = try_close(*d.ring, (s & d.normal) | ElementSet::single(d.ring->order(), d.ring->one()));
  return closed && *closed == s;
}

/// For each s there is t in S with ts normal.
inline bool normal_multiples(const FiniteData& d, const ElementSet& s) {
  bool all = true;
  s.for_each([&](Elem x) {
    bool found = false;
    s.for_each([&](Elem t) { found = found || d.normal.contains(d.ring->mul(t, x)); });
    all = all && found;
  });
  return all;
}

inline std::string yn(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Finite-track checks

namespace checks {

using detail::dedup;
using detail::ideals_str;
using detail::images;
using detail::loc_str;
using detail::sets_str;

inline Outcome A11Sep23(const FiniteData& d) {
  Outcome o;
  for (const auto& ld : d.locs)
    for (const auto& b : d.lat.ideals) {
      ++o.cases;
      A11Verdict v = check_A11_equivalence(ld.loc, b);
      o.require(v.agree, "conditions (1)-(5) are equivalent", v.witness + " ass=" + ld.loc.ass.members.to_string());
    }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome aA11Sep23(const FiniteData& d) {
  Outcome o;
  for (const auto& ld : d.locs) {
    const Localization& l = ld.loc;
    for (const auto& b : d.lat.ideals) {
      ++o.cases;
      auto sb = localize_left_ideal(l, b);
      bool grows = false;
      l.set.members.for_each([&](Elem s) {
        const Elem sinv = l.inverse_of(s);
        ElementSet cur = sb.target;
        for (int i = 0; i < l.target->order(); ++i) {
          ElementSet add = cur;
          cur.for_each([&](Elem x) { add.insert(l.target->mul(x, sinv)); });
          ElementSet next = ideal_generated_by(l.target, add, Side::left).members;
          if (next == cur) break;
          grows = true;
          cur = next;
        }
      });
      o.require(sb.two_sided, "S^-1 b is an ideal (no strictly increasing chain in a finite ring)",
                loc_str(ld) + " b=" + b.members.to_string() + " S^-1 b=" + sb.target.to_string());
      o.require(sb.two_sided == !grows, "S^-1 b is an ideal iff every chain b'_i is constant",
                loc_str(ld) + " b=" + b.members.to_string());
    }
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome a10Sep23(const FiniteData& d) {
  Outcome o;
  if (!detail::is_prime_ring(d.ring)) return o;
  for (const auto& ld : d.locs) {
    if (!ld.loc.ass.is_zero()) continue;
    ++o.cases;
    o.require(detail::is_prime_ring(ld.loc.target), "S^-1 R is a prime ring", loc_str(ld));
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome a6Oct23(const FiniteData& d) {
  Outcome o;
  for (const auto& ld : d.locs) {
    if (!ld.loc.ass.is_zero()) continue;
    for (const auto& p : d.primes) {
      auto sp = localize_left_ideal(ld.loc, p);
      const bool spec = detail::in_spec(ld.loc.target, sp.target);
      const std::string w = loc_str(ld) + " p=" + p.members.to_string() + " S^-1 p=" + sp.target.to_string();
      if (sp.contraction == p.members) {
        ++o.cases;
        o.require(spec == sp.two_sided, "(1) S^-1 p in Spec iff S^-1 p is an ideal", w);
      }
      if (!sp.contraction.is_full() && is_ideal_set(*d.ring, sp.contraction, Side::two_sided) &&
          is_prime_ideal(Ideal{d.ring, sp.contraction, Side::two_sided})) {
        ++o.cases;
        o.require(spec == sp.two_sided, "(2) S^-1 p in Spec iff S^-1 p is an ideal", w);
      }
    }
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome Aa6Oct23(const FiniteData& d) {
  Outcome o;
  for (const auto& ld : d.locs)
    for (const auto& p : d.primes) {
      if (p.members.intersects(ld.loc.set.members)) continue;
      ++o.cases;
      auto sp = localize_left_ideal(ld.loc, p);
      o.require(sp.contraction == p.members, "sigma^-1(S^-1 p) = p",
                loc_str(ld) + " p=" + p.members.to_string() + " contraction=" + sp.contraction.to_string());
    }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome Xa10Sep23(const FiniteData& d) {
  Outcome o;
  for (const auto& ld : d.locs) {
    if (std::find(d.primes.begin(), d.primes.end(), ld.loc.ass) == d.primes.end()) continue;
    ++o.cases;
    o.require(detail::is_prime_ring(ld.loc.target), "S^-1 R is a prime ring", loc_str(ld));
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome b14Oct23(const FiniteData& d) {
  Outcome o;
  for (const auto& ld : d.locs)
    for (const auto& b : d.lat.ideals) {
      EpiVerdict v = check_epimorphic_den(ld.loc, b);
      if (!v.b14_applicable) continue;
      ++o.cases;
      o.require(v.b14_lhs == v.b14_rhs, "image of S in Den_l(R/b, 0) iff image regular",
                loc_str(ld) + " b=" + b.members.to_string() + " lhs=" + detail::yn(v.b14_lhs) +
                    " rhs=" + detail::yn(v.b14_rhs));
    }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome c14Oct23(const FiniteData& d) {
  Outcome o;
  for (const auto& ld : d.locs)
    for (const auto& b : d.lat.ideals) {
      EpiVerdict v = check_epimorphic_den(ld.loc, b);
      if (!v.c14_applicable) continue;
      ++o.cases;
      o.require(v.c14_lhs == v.c14_rhs, "image of S in Den_l(Rbar/c, 0) iff tor_r vanishes",
                loc_str(ld) + " b=" + b.members.to_string() + " lhs=" + detail::yn(v.c14_lhs) +
                    " rhs=" + detail::yn(v.c14_rhs));
    }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome A29Sep23(const FiniteData& d) {
  Outcome o;
  const std::size_t k = d.primes.size();
  if (k <= 12) {
    for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << k); ++pick) {
      std::vector<Ideal> t;
      for (std::size_t i = 0; i < k; ++i)
        if (pick & (std::uint32_t{1} << i)) t.push_back(d.primes[i]);
      Ideal prod = t.front();
      for (std::size_t i = 1; i < t.size(); ++i) prod = ideal_product(prod, t[i]);
      Ideal y = prod;
      int e = 1;
      while (!y.is_zero() && e <= d.ring->order()) {
        y = ideal_product(y, prod);
        ++e;
      }
      if (!y.is_zero()) continue;
      ++o.cases;
      const auto mt = minimal_members(t);
      bool inside = true;
      for (const auto& p : d.mins) inside = inside && std::find(mt.begin(), mt.end(), p) != mt.end();
      o.require(inside && d.mins.size() <= t.size() * static_cast<std::size_t>(e),
                "(1) min(R) inside min{p_i} and |min(R)| <= n",
                "product of " + std::to_string(t.size() * static_cast<std::size_t>(e)) + " primes from " +
                    ideals_str(t) + " is 0; min(R)=" + ideals_str(d.mins));
    }
  }
  for (const auto& a : d.lat.ideals) {
    if (a.is_whole()) continue;
    ++o.cases;
    o.require(!min_primes_over(d.lat, a).empty(), "(2) every ideal has finitely many (and some) minimal primes",
              "a=" + a.members.to_string());
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome aA29Sep23(const FiniteData& d) {
  Outcome o;
  PrimeRichReport rep = is_prime_rich(d.lat);
  o.cases = static_cast<long long>(rep.entries.size());
  o.applicable = true;
  std::string w;
  for (const auto& e : rep.entries)
    if (!(e.contains_prime_product == e.exponent.has_value() && e.exponent.has_value() == e.radical_nilpotent))
      w += " a=" + e.ideal.members.to_string();
  o.require(rep.conditions_agree, "(1), (2), (3) are equivalent", "disagreement at" + w);
  return o;
}

inline Outcome B29Sep23(const FiniteData& d) {
  Outcome o;
  for (const auto& ld : d.locs) {
    ++o.cases;
    std::string bad;
    for (const auto& b : d.lat.ideals)
      if (!localize_left_ideal(ld.loc, b).two_sided) bad += " " + b.members.to_string();
    o.require(bad.empty(), "S respects the ideal structure of R", loc_str(ld) + " non-ideal S^-1 b for b in" + bad);
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome P29Sep23(const FiniteData& d) {
  Outcome o;
  for (const auto& ld : d.locs) {
    const Localization& l = ld.loc;
    if (!ld.cls.two_sided_den() || ld.cls.ass_l != ld.cls.ass_r) continue;
    if (!respects_prime_structure(l, d.primes)) continue;
    const auto rs = min_RS(d.mins, l.set);
    const auto imgs = images(l, rs);
    bool hyp = true;
    for (const auto& x : imgs) hyp = hyp && detail::in_spec(l.target, x);
    if (!hyp) continue;
    ++o.cases;
    const auto distinct = dedup(imgs);
    const std::string w = loc_str(ld) + " min(R,S)=" + ideals_str(rs) + " S^-1 p=" + sets_str(imgs);
    o.require(!rs.empty() && rs.size() <= d.mins.size(), "(1) 1 <= |min(R,S)| <= |min(R)|", w);
    o.require(detail::same_set(detail::minimal_sets(distinct), ld.target_mins),
              "(1) min(S^-1 R) = min{S^-1 p : p in min(R,S)}", w);
    o.require(ld.target_mins.size() <= rs.size(), "(1) |min(S^-1 R)| <= |min(R,S)|", w);
    const bool eq = detail::same_set(distinct, ld.target_mins);
    o.require(eq == detail::incomparable(distinct), "(2) equality iff the S^-1 p are incomparable", w);
    o.require(eq, "(3) min(S^-1 R) = {S^-1 p : p in min(R,S)}", w);
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome a29Sep23(const FiniteData& d) {
  Outcome o;
  for (const auto& ld : d.locs) {
    if (!ld.cls.two_sided_den() || ld.cls.ass_l.size() != 1 || ld.cls.ass_r.size() != 1) continue;
    ++o.cases;
    const auto rs = min_RS(d.mins, ld.loc.set);
    const auto imgs = images(ld.loc, rs);
    const std::string w = loc_str(ld) + " min(R,S)=" + ideals_str(rs);
    o.require(detail::same_set(imgs, ld.target_mins), "min(S^-1 R) = {S^-1 p : p in min(R,S)}", w);
    o.require(!rs.empty(), "min(R,S) is non-empty", w);
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome b10Sep23(const FiniteData& d) {
  Outcome o;
  if (!d.semiprime || d.primes.size() > 12) return o;
  const std::size_t k = d.primes.size();
  for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << k); ++pick) {
    std::vector<Ideal> t;
    for (std::size_t i = 0; i < k; ++i)
      if (pick & (std::uint32_t{1} << i)) t.push_back(d.primes[i]);
    ++o.cases;
    std::vector<ElementSet> ts;
    for (const auto& p : t) ts.push_back(p.members);
    const bool is_min = detail::same_set(ts, d.mins);
    o.require(is_irredundant(t) == is_min, "min(R) is the only irredundant set of primes",
              "set " + ideals_str(t) + " irredundant=" + detail::yn(is_irredundant(t)) + " min(R)=" + ideals_str(d.mins));
  }
  o.applicable = true;
  return o;
}

inline Outcome A10Sep23(const FiniteData& d) {
  Outcome o;
  if (!d.semiprime) return o;
  for (const auto& ld : d.locs) {
    const Localization& l = ld.loc;
    if (!l.ass.is_zero()) continue;
    ++o.cases;
    const auto imgs = images(l, d.mins);
    const std::string w = loc_str(ld) + " S^-1 p=" + sets_str(imgs);
    o.require(ld.target_semiprime, "(1) S^-1 R is semiprime", w);
    o.require(detail::pairwise_distinct(imgs) && detail::same_set(imgs, ld.target_mins) &&
                  ld.target_mins.size() == d.mins.size(),
              "(2) p -> S^-1 p is a bijection min(R) -> min(S^-1 R)", w);
    for (std::size_t i = 0; i < d.mins.size(); ++i) {
      RingPtr rp;
      const ElementSet sp = detail::image_in_quotient(d.ring, d.mins[i], l.set.members, &rp);
      o.require(detail::is_regular_left_den(rp, sp), "(3) pi_p(S) in Den_l(R/p, 0)", w + " p=" + d.mins[i].members.to_string());
      o.require(l.target->order() / imgs[i].size() == rp->order(), "(3) S^-1 R / S^-1 p ~ pi_p(S)^-1 (R/p)",
                w + " p=" + d.mins[i].members.to_string());
    }
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome c10Sep23(const FiniteData& d) {
  Outcome o;
  if (!d.semiprime) return o;
  o.applicable = true;
  ++o.cases;
  MultSet sl = largest_regular_set(d.ring);
  Localization l = localize(sl);
  IdealLattice tl = all_ideals(l.target);
  const auto imgs = images(l, d.mins);
  const std::string w = "S_l(R)=" + sl.members.to_string() + " S^-1 p=" + sets_str(imgs);
  o.require(is_semiprime_ring(tl), "(1) Q_l(R) is semiprime", w);
  o.require(detail::same_set(imgs, min_primes(tl)), "(2a) min(Q_l(R)) = {S_l^-1 p}", w);
  for (const auto& p : d.mins) {
    RingPtr rp;
    const ElementSet sp = detail::image_in_quotient(d.ring, p, sl.members, &rp);
    o.require(detail::is_regular_left_den(rp, sp), "(2b) pi_p(S_l(R)) in Den_l(R/p, 0)", w + " p=" + p.members.to_string());
    o.require(sp.subset_of(units(*rp)), "(2c) pi_p(S_l(R)) inside S_l(R/p)", w + " p=" + p.members.to_string());
  }
  return o;
}

inline Outcome aA10Sep23(const FiniteData& d) {
  Outcome o;
  for (const auto& ld : d.locs) {
    const Localization& l = ld.loc;
    const auto over = min_primes_over(d.lat, l.ass);
    if (intersection_of(d.ring, over) != l.ass) continue;  // a semiprime
    ++o.cases;
    const auto imgs = images(l, over);
    const std::string w = loc_str(ld) + " min(a)=" + ideals_str(over) + " images=" + sets_str(imgs);
    o.require(ld.target_semiprime, "(1) S^-1 R is semiprime", w);
    o.require(detail::pairwise_distinct(imgs) && detail::same_set(imgs, ld.target_mins) &&
                  ld.target_mins.size() == over.size(),
              "(2) min(Rbar) -> min(S^-1 R) is a bijection", w);
    for (const auto& p : over) {
      RingPtr rp;
      const ElementSet sp = detail::image_in_quotient(d.ring, p, l.set.members, &rp);
      o.require(detail::is_regular_left_den(rp, sp), "(3) pi_p(Sbar) in Den_l(Rbar/p, 0)", w + " p=" + p.members.to_string());
    }
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome A15Sep23(const FiniteData& d) {
  Outcome o;
  if (!d.semiprime) return o;
  o.applicable = true;
  const ElementSet u = largest_regular_set(d.ring).members;
  std::vector<std::vector<Elem>> tuples(static_cast<std::size_t>(d.ring->order()));
  ElementSet inside = d.ring->all();
  for (const auto& p : d.mins) {
    auto q = make_quotient(d.ring, p);
    inside = inside & q.pi.preimage(units(*q.ring));
    for (Elem x = 0; x < d.ring->order(); ++x) tuples[static_cast<std::size_t>(x)].push_back(q.pi(x));
  }
  for (const char* star : {"l", "r", "two-sided"}) {
    ++o.cases;
    o.require(u.subset_of(inside), std::string("(1) S_") + star + "(R) inside the preimages of S_" + star + "(R/p)",
              "S=" + u.to_string() + " intersection=" + inside.to_string());
  }
  ++o.cases;
  auto sorted = tuples;
  std::sort(sorted.begin(), sorted.end());
  o.require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "(2) R -> prod R/p is a monomorphism",
            "min(R)=" + ideals_str(d.mins));
  return o;
}

inline Outcome a20Sep23(const FiniteData& d) {
  Outcome o;
  std::vector<ElementSet> asses;
  for (const auto& ld : d.locs) asses.push_back(ld.loc.ass.members);
  for (const auto& a : dedup(asses)) {
    ++o.cases;
    const Ideal ai{d.ring, a, Side::two_sided};
    const MultSet big = largest_set_assoc(d.ring, ai, d.sets);
    RingPtr rq = detail::quotient_ring(d.ring, ai);
    RingPtr img_ring;
    const ElementSet img = detail::image_in_quotient(d.ring, ai, big.members, &img_ring);
    const std::string w = "a=" + a.to_string() + " S_{l,a}=" + big.members.to_string();
    o.require(img == units(*img_ring), "pi(S_{l,a}(R)) = S_l(R/a)", w);
    ElementSet uni(d.ring->order());
    bool contained = true;
    for (const auto& ld : d.locs)
      if (ld.loc.ass.members == a) {
        contained = contained && ld.loc.set.members.subset_of(big.members);
        uni = uni | ld.loc.set.members;
      }
    o.require(contained, "every S in Den_l(R, a) lies in pi^-1(S_l(R/a))", w);
    if (d.exhaustive) o.require(uni == big.members, "pi^-1(S_l(R/a)) = S_{l,a}(R)", w + " union=" + uni.to_string());
    o.require(localize(big).target->order() == rq->order(), "Q_{l,a}(R) = Q_l(R/a)", w);
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome P19Sep23(const FiniteData& d) {
  Outcome o;
  if (!d.semiprime) return o;
  o.applicable = true;
  ElementSet all_l = d.ring->all(), all_r = d.ring->all();
  for (const auto& p : d.mins) {
    ++o.cases;
    TlReport t = T_l(d.ring, p);
    all_l = all_l & t.a_l;
    all_r = all_r & t.a_r;
    const std::string w = "p=" + p.members.to_string() + " T_l(p)=" + t.set.members.to_string() +
                          " a_l=" + t.a_l.to_string() + " a_r=" + t.a_r.to_string();
    o.require(t.a_l.subset_of(p.members) && t.a_r.subset_of(p.members), "(1) a_l(p), a_r(p) inside p", w);
    o.require(t.left_ore == t.criterion, "(2) T_l(p) left Ore iff the pair criterion holds", w);
    if (!t.left_den) continue;
    Localization l = localize(t.set);
    auto sp = localize_left_ideal(l, p);
    o.require(sp.two_sided, "(3a) T_l(p)^-1 p is an ideal", w);
    RingPtr rp = make_quotient(d.ring, p).ring;
    o.require(l.target->order() / sp.target.size() == rp->order(), "(3b) T^-1 R / T^-1 p ~ Q_l(R/p)", w);
    if (t.a_l == p.members) {
      const MultSet big = largest_set_assoc(d.ring, p, d.sets.empty() ? enumerate_mult_sets(d.ring) : d.sets);
      o.require(big.members == t.set.members, "(3c) S_{l,p}(R) = T_l(p)", w + " S_{l,p}=" + big.members.to_string());
      o.require(l.target->order() == rp->order(), "(3c) Q_{l,p}(R) ~ Q_l(R/p) ~ T_l(p)^-1 R", w);
    }
  }
  ++o.cases;
  o.require(all_l.size() == 1 && all_r.size() == 1, "(1) the intersections of a_l(p) and a_r(p) are 0",
            "cap a_l=" + all_l.to_string() + " cap a_r=" + all_r.to_string());
  return o;
}

inline Outcome P28Sep23(const FiniteData& d) {
  Outcome o;
  if (!d.semiprime) return o;
  for (const auto& ld : d.locs) {
    const Localization& l = ld.loc;
    ++o.cases;
    const auto rs = min_RS(d.mins, l.set);
    const auto imgs = images(l, rs);
    const std::string w = loc_str(ld) + " min(R,S)=" + ideals_str(rs) + " S^-1 p=" + sets_str(imgs);
    o.require(!rs.empty(), "min(R,S) is non-empty", w);
    const bool c1 = ld.target_semiprime && detail::same_set(imgs, ld.target_mins);
    bool c2 = true;
    for (const auto& x : imgs) c2 = c2 && detail::in_spec(l.target, x);
    o.require(c1 == c2, "(1) iff (2)", w + " (1)=" + detail::yn(c1) + " (2)=" + detail::yn(c2));
    if (!c1) continue;
    if (detail::generated_by_normal(d, l.set.members))
      o.require(ld.target_mins.size() == rs.size(), "(3a) normal generators give distinct S^-1 p", w);
    if (detail::normal_multiples(d, l.set.members))
      o.require(ld.target_mins.size() == rs.size(), "(3b) normal multiples give distinct S^-1 p", w);
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome a28Sep23(const FiniteData& d) {
  Outcome o;
  if (!d.semiprime || !d.ring->is_commutative()) return o;
  for (const auto& ld : d.locs) {
    if (!ld.cls.two_sided_den()) continue;
    ++o.cases;
    const auto rs = min_RS(d.mins, ld.loc.set);
    const auto imgs = images(ld.loc, rs);
    const std::string w = loc_str(ld) + " S^-1 p=" + sets_str(imgs);
    o.require(ld.target_semiprime && detail::same_set(imgs, ld.target_mins),
              "(1) S^-1 R semiprime with min = {S^-1 p : p in min(R,S)}", w);
    o.require(detail::pairwise_distinct(imgs), "(2) the S^-1 p are distinct", w);
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome b28Sep23(const FiniteData& d) {
  Outcome o;
  if (!d.semiprime) return o;
  for (const auto& ld : d.locs) {
    const Localization& l = ld.loc;
    if (!ld.cls.two_sided_den() || ld.cls.ass_l != ld.cls.ass_r) continue;
    const auto rs = min_RS(d.mins, l.set);
    bool hyp = true;
    for (const auto& p : rs) hyp = hyp && classify_ideal(p).is_completely_prime && localize_left_ideal(l, p).two_sided;
    if (!hyp) continue;
    ++o.cases;
    const auto imgs = images(l, rs);
    const std::string w = loc_str(ld) + " S^-1 p=" + sets_str(imgs);
    o.require(ld.target_semiprime && detail::same_set(imgs, ld.target_mins),
              "(1) S^-1 R semiprime with min = {S^-1 p : p in min(R,S)}", w);
    bool cp = true;
    for (const auto& q : ld.target_mins) cp = cp && classify_ideal(q).is_completely_prime;
    o.require(cp, "(1) min(S^-1 R) inside Spec_c(S^-1 R)", w);
    o.require(detail::pairwise_distinct(imgs) && ld.target_mins.size() == rs.size(), "(2) the S^-1 p are distinct", w);
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome J10Jan19(const FiniteData& d) {
  Outcome o;
  const RingTable& t = *d.ring;
  for (std::size_t i = 0; i < d.sets.size(); ++i) {
    const ElementSet& s = d.sets[i].members;
    if (!detail::generated_by_normal(d, s)) continue;
    ++o.cases;
    const std::string w = "S=" + s.to_string();
    o.require(d.classes[i].left_ore && d.classes[i].right_ore, "S is an Ore set", w);
    ElementSet a(t.order());
    for (Elem x = 0; x < t.order(); ++x)
      s.for_each([&](Elem u) {
        s.for_each([&](Elem v) {
          if (t.mul(t.mul(u, x), v) == t.zero()) a.insert(x);
        });
      });
    const bool ideal = is_ideal_set(t, a, Side::two_sided);
    o.require(ideal && !a.is_full(), "(1) a = {r : srt = 0} is a proper ideal", w + " a=" + a.to_string());
    if (!ideal || a.is_full()) continue;
    RingPtr rb;
    const ElementSet sb = detail::image_in_quotient(d.ring, Ideal{d.ring, a, Side::two_sided}, s, &rb);
    o.require(detail::is_regular_den(rb, sb), "(2) image of S in Den(R/a, 0)", w + " a=" + a.to_string());
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome A2Oct23(const FiniteData& d) {
  Outcome o;
  for (std::size_t i = 0; i < d.sets.size(); ++i) {
    const ElementSet& s = d.sets[i].members;
    if (!detail::generated_by_normal(d, s)) continue;
    ++o.cases;
    Localization l = localize_normal(d.ring, s & d.normal);
    const auto over = min_primes_over(d.lat, l.ass);
    const auto imgs = images(l, over);
    const IdealLattice tl = all_ideals(l.target);
    const auto tmins = min_primes(tl);
    const std::string w = "S=" + s.to_string() + " a=" + l.ass.members.to_string() + " min(a)=" + ideals_str(over) +
                          " images=" + sets_str(imgs) + " min(target)=" + ideals_str(tmins);
    bool spec = true;
    for (const auto& x : imgs) spec = spec && detail::in_spec(l.target, x);
    o.require(spec && detail::pairwise_distinct(imgs), "(1) min(a) -> Spec(R<S^-1>) is an injection", w);
    const Ideal nr = prime_radical(tl);
    o.require(nr.members.subset_of(ideal_generated_by(l.target, nr.members, Side::left).members),
              "(1) radical of S^-1 Rbar inside S^-1 of the radical of Rbar", w);
    // (2) pass to Rtilde = target / radical
    RingPtr rt;
    const ElementSet st = detail::image_in_quotient(l.target, nr, l.unit_witness, &rt);
    o.require(detail::is_regular_den(rt, st), "(2) image of S in Den(Rtilde, 0)", w);
    std::vector<ElementSet> tim;
    {
      std::vector<ElementSet> v;
      if (nr.is_zero()) {
        v = imgs;
      } else {
        auto q = make_quotient(l.target, nr);
        for (const auto& x : imgs) v.push_back(q.pi.image(x));
      }
      tim = v;
    }
    o.require(detail::pairwise_distinct(tim) && detail::same_set(tim, min_primes(all_ideals(rt))),
              "(2) min(a) -> min(Stilde^-1 Rtilde) is a bijection", w);
    for (const auto& p : over) {
      RingPtr rp;
      const ElementSet sp = detail::image_in_quotient(d.ring, p, s, &rp);
      o.require(detail::is_regular_den(rp, sp), "(3) pi_p(S) in Den(R/p, 0)", w + " p=" + p.members.to_string());
    }
    if (is_nilpotent_ideal(nr))
      o.require(detail::pairwise_distinct(imgs) && detail::same_set(imgs, tmins),
                "(4a) min(a) -> min(R<S^-1>) is a bijection", w);
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome a5Oct23(const FiniteData& d) {
  Outcome o;
  for (const auto& ld : d.locs) {
    const ElementSet& sp = ld.loc.set.members;
    if (!detail::normal_multiples(d, sp)) continue;
    ++o.cases;
    const ElementSet s = sp & d.normal;
    const std::string w = loc_str(ld) + " normal part=" + s.to_string();
    auto closed = detail::try_close(*d.ring, s);
    o.require(closed && *closed == s, "(1) the normal elements of S' form a multiplicative set", w);
    if (!closed || *closed != s) continue;
    OreClass c = classify_set(MultSet{d.ring, s});
    o.require(c.left_den && c.ass_l == ld.loc.ass.members, "(1) S in Den_l(R, a) and S^-1 R ~ S'^-1 R", w);
    const auto over = min_primes_over(d.lat, ld.loc.ass);
    const auto imgs = images(ld.loc, over);
    o.require(detail::pairwise_distinct(imgs) && detail::same_set(imgs, ld.target_mins),
              "(2) min(a) -> min(S'^-1 R) is a bijection", w + " min(a)=" + ideals_str(over));
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome A25Sep23(const FiniteData& d) {
  Outcome o;
  o.applicable = true;
  const CentreData cd = centre_ring(d.ring);
  for (const auto& q : prime_ideals(all_ideals(cd.centre))) {
    ++o.cases;
    CentralLocalization cl = central_localize(d.ring, d.lat, cd, q);
    const std::string w = "q=" + q.members.to_string() + " (centre ids) fiber=" + ideals_str(cl.fiber) +
                          " R_q order=" + std::to_string(cl.loc.target->order());
    o.require(cl.in_image == cl.proper, "(1) q in im(rho) iff R_q != R_q q", w);
    o.require(cl.fiber_bijective, "(2) fiber over q <-> V(R_q q)", w + " images=" + sets_str(cl.fiber_images));
    o.require(!cl.in_image || cl.minimal_in_fiber, "(3) some minimal prime restricts to q", w);
  }
  return o;
}

inline Outcome a25Sep23(const FiniteData& d) {
  Outcome o;
  if (!d.semiprime) return o;
  o.applicable = true;
  ++o.cases;
  RestrictionMap m = rho(d.ring, d.lat);
  std::size_t hit = 0;
  for (const auto& q : m.min_centre) {
    bool in_image = false;
    for (const auto& row : m.table) in_image = in_image || row.centre == q.members;
    hit += in_image ? 1 : 0;
  }
  o.require(is_semiprime_ring(m.centre.centre), "Z(R) is semiprime", "Z=" + m.centre.centre->label());
  o.require(hit <= d.mins.size(), "|min(Z) cap im(rho)| <= |min(R)|",
            std::to_string(hit) + " > " + std::to_string(d.mins.size()));
  return o;
}

inline Outcome C25Sep23(const FiniteData& d) {
  Outcome o;
  RhoVerdict v = check_rho_criteria(d.ring, d.lat);
  if (!v.applicable) return o;
  o.applicable = true;
  ++o.cases;
  o.require(v.c1 == v.c2 && v.c2 == v.c3, "(1), (2), (3) are equivalent",
            "C_Z in C_R=" + detail::yn(v.c1) + " C_Z avoids min(R)=" + detail::yn(v.c2) +
                " rho_min well defined=" + detail::yn(v.c3));
  return o;
}

inline Outcome B25Sep23(const FiniteData& d) {
  Outcome o;
  RhoVerdict v = check_rho_criteria(d.ring, d.lat);
  if (!v.applicable) return o;
  o.applicable = true;
  ++o.cases;
  o.require(v.agree(), "(1), (2), (3), (4) are equivalent",
            "(1)=" + detail::yn(v.c1) + " (2)=" + detail::yn(v.c2) + " (3)=" + detail::yn(v.c3) +
                " (4)=" + detail::yn(v.c4));
  return o;
}

inline Outcome aC25Sep23(const FiniteData& d) {
  Outcome o;
  PierceVerdict v = check_pierce(d.ring, d.lat);
  if (!v.applicable) return o;
  o.applicable = true;
  ++o.cases;
  const std::string w = std::to_string(v.factors) + " factors";
  o.require(v.embedding, "(1) R embeds in prod R_q", w);
  if (d.ring->is_commutative()) o.require(v.isomorphism, "(1) R ~ prod R_q (commutative)", w);
  o.require(v.centres_match, "(2)/(4) Z(R_q) = Z(R)_q is a field", w);
  o.require(v.factor_min_primes, "(3) R_q semiprime with min(R_q) = {p_q}", w);
  return o;
}

inline Outcome J4Jul10(const FiniteData& d) {
  Outcome o;
  o.applicable = true;
  const ElementSet u = units(*d.ring);
  ElementSet sl = u;
  if (d.exhaustive) {
    sl = ElementSet(d.ring->order());
    for (const auto& ld : d.locs)
      if (ld.loc.ass.is_zero()) sl = sl | ld.loc.set.members;
  }
  ++o.cases;
  o.require(sl == u, "(1) S_l(Q_l(R)) = Q_l(R)^x and S_l(Q_l(R)) cap R = S_l(R)",
            "S_l=" + sl.to_string() + " units=" + u.to_string());
  ++o.cases;
  ElementSet fractions(d.ring->order());
  sl.for_each([&](Elem s) {
    auto inv = inverse(*d.ring, s);
    if (inv) sl.for_each([&](Elem t) { fractions.insert(d.ring->mul(*inv, t)); });
  });
  o.require(fractions == u, "(3) Q_l(R)^x = {s^-1 t}", "fractions=" + fractions.to_string());
  ++o.cases;
  o.require(localize(MultSet{d.ring, u}).target->order() == d.ring->order(), "(4) Q_l(Q_l(R)) = Q_l(R)", "");
  return o;
}

// ---------------------------------------------------------------------------
// Monomial-track checks

inline std::vector<mono::Mask> subsets(int n) {
  std::vector<mono::Mask> v;
  for (mono::Mask m = 1; m < (mono::Mask{1} << n); ++m) v.push_back(m);
  return v;
}

inline std::string mono_loc_str(const mono::MonoLocalization& lm) {
  auto list = [&](const std::vector<mono::MonomialPrime>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + mono::mask_to_string(v[i].vars, lm.ring.names);
    return s + "]";
  };
  return "I=" + lm.ring.to_string() + " V=" + mono::mask_to_string(lm.v, lm.ring.names) + " sat=" +
         lm.saturated.to_string() + " min(R)=" + list(lm.min_R) + " min(a)=" + list(lm.min_ass) +
         " min(S^-1 R)=" + list(lm.min_loc);
}

inline Outcome A10Sep23_mono(const mono::CommMonomialRing& r) {
  Outcome o;
  if (!mono::is_squarefree(r) || r.is_unit_ideal()) return o;
  const mono::Mask reg = mono::regular_variables(r);
  for (mono::Mask v : subsets(r.n)) {
    if ((v & ~reg) != 0) continue;
    ++o.cases;
    auto lm = mono::localize_monomial(r, v);
    o.require(lm.min_loc == lm.min_R && lm.count_preserved, "(2) min(R) -> min(S^-1 R) is a bijection", mono_loc_str(lm));
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome a28Sep23_mono(const mono::CommMonomialRing& r) {
  Outcome o;
  if (!mono::is_squarefree(r) || r.is_unit_ideal()) return o;
  for (mono::Mask v : subsets(r.n)) {
    std::optional<mono::MonoLocalization> lm;
    try {
      lm = mono::localize_monomial(r, v);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::collapsed_localization) throw;
      continue;
    }
    ++o.cases;
    o.require(lm->bijection && mono::is_radical_by_scan(lm->saturated, r.degree),
              "(1) S^-1 R semiprime with min = {S^-1 p : p in min(R,S)}", mono_loc_str(*lm));
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome A2Oct23_mono(const mono::CommMonomialRing& r) {
  Outcome o;
  if (r.is_unit_ideal()) return o;
  for (mono::Mask v : subsets(r.n)) {
    std::optional<mono::MonoLocalization> lm;
    try {
      lm = mono::localize_monomial(r, v);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::collapsed_localization) throw;
      continue;
    }
    ++o.cases;
    o.require(lm->bijection, "(4a) min(a) -> min(R<S^-1>) is a bijection", mono_loc_str(*lm));
    const auto a = mono::min_primes_monomial(mono::saturate_monomial(mono::radical_monomial(r), v));
    const auto b = mono::min_primes_monomial(mono::radical_monomial(lm->saturated));
    o.require(a == b, "(2) localized-then-reduced equals reduced-then-localized", mono_loc_str(*lm));
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome A2Oct23_an(const mono::AnAlgebra& a) {
  Outcome o;
  for (mono::Mask v : subsets(a.n)) {
    ++o.cases;
    auto rep = mono::an_localize_normal(a, v);
    o.require(rep.ok(), "(4a) min(a) -> min(R<S^-1>) is a bijection (verified to degree d)",
              "V=" + mono::subset_to_string(v, a.n) + " expected " + std::to_string(rep.expected) + " got " +
                  std::to_string(rep.min_ass) + (rep.witness.empty() ? "" : " " + rep.witness));
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome J10Jan19_an(const mono::AnAlgebra& a) {
  Outcome o;
  for (mono::Mask v : subsets(a.n)) {
    ++o.cases;
    auto rep = mono::an_localize_normal(a, v);
    o.require(rep.ass_matches && rep.proper, "(1) a = {r : srt = 0} = (x_v : v in V) is proper",
              "V=" + mono::subset_to_string(v, a.n));
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome a5Oct23_an(const mono::AnAlgebra& a) {
  Outcome o;
  for (mono::Mask v : subsets(a.n)) {
    ++o.cases;
    auto rep = mono::an_localize_normal(a, v);
    o.require(rep.ass_sides_agree, "(1) S' and its normal part give the same a (central case)",
              "V=" + mono::subset_to_string(v, a.n));
  }
  o.applicable = o.cases > 0;
  return o;
}

inline Outcome b29Sep23_an(const mono::AnAlgebra& a, std::uint64_t seed) {
  Outcome o;
  o.applicable = true;
  o.cases = 1;
  auto rep = mono::an_verify(a, seed);
  std::string bad_domains;
  for (const auto& row : rep.primes)
    if (!row.domain) bad_domains += " " + mono::subset_to_string(row.subset, a.n) + ": " + row.domain_witness;
  o.require(rep.domains_ok(), "(2) A_n/p_I is a domain (verified to degree d)", bad_domains);
  o.require(rep.incomparable, "(1) the p_I are pairwise incomparable", rep.incomparable_witness);
  o.require(rep.intersection_zero, "(1) the intersection of the p_I has no nonzero monomial of degree <= d",
            rep.intersection_witness);
  o.require(rep.centre_is_Pn, "(4) Z(A_n) = P_n (degree <= d)",
            "centre dim " + std::to_string(rep.centre_dim) + " vs " + std::to_string(rep.z_monomials) +
                " z-monomials; extra central element " + rep.extra_central);
  std::string bad;
  for (const auto& row : rep.primes)
    if (!row.restriction_ok)
      bad += " I=" + mono::subset_to_string(row.subset, a.n) + " dim " + std::to_string(row.centre_cap_dim) +
             " expected " + std::to_string(row.expected_cap_dim);
  o.require(rep.restrictions_ok(), "(5) p_I cap Z(A_n) = (z_j : j notin I)", bad);
  o.require(rep.rho_ok(), "rho_min ill-defined exactly off I = [n], witness z1*x1 = 0",
            rep.rho_evaluated ? rep.criterion_text : "not evaluated: centre differs from P_n");
  return o;
}

}  // namespace checks

// ---------------------------------------------------------------------------
// Registry

enum class Track { finite, monomial, both };

inline const char* to_string(Track t) {
  switch (t) {
    case Track::finite: return "finite";
    case Track::monomial: return "monomial";
    case Track::both: return "both";
  }
  return "?";
}

struct TheoremCheck {
  std::string id;
  std::string kind;       // Theorem, Proposition, ...
  std::string statement;  // one-line summary
  Track track = Track::finite;
  std::string coverage;   // where the check is substantive
  std::function<Outcome(const FiniteData&)> finite;
  std::function<Outcome(const mono::CommMonomialRing&)> comm;
  std::function<Outcome(const mono::AnAlgebra&, std::uint64_t)> an;
  std::vector<std::string> aliases;
};

/// Every statement the suite must cover; the registry is diffed against this list.
inline const std::vector<std::string>& in_scope_labels() {
  static const std::vector<std::string> labels{
      "A11Sep23", "aA11Sep23", "a10Sep23", "a6Oct23",  "Aa6Oct23",  "Xa10Sep23", "b14Oct23", "c14Oct23",
      "A29Sep23", "aA29Sep23", "B29Sep23", "29Sep23",  "a29Sep23",  "b10Sep23",  "A10Sep23", "c10Sep23",
      "aA10Sep23", "A15Sep23", "a20Sep23", "19Sep23",  "28Sep23",   "a28Sep23",  "b28Sep23", "10Jan19",
      "A2Oct23",  "a5Oct23",   "A25Sep23", "a25Sep23", "aB25Sep23", "C25Sep23",  "B25Sep23", "aC25Sep23",
      "b29Sep23", "4Jul10"};
  return labels;
}

inline std::vector<TheoremCheck> build_registry() {
  using namespace checks;
  std::vector<TheoremCheck> r;
  auto fin = [&](std::string id, std::string kind, std::string st, std::function<Outcome(const FiniteData&)> f,
                 std::string cov = "finite") {
    TheoremCheck c{std::move(id), std::move(kind), std::move(st), Track::finite, std::move(cov), std::move(f)};
    r.push_back(std::move(c));
    return &r.back();
  };
  fin("A11Sep23", "Proposition", "S^-1 b is an ideal iff conditions (2)-(5); (6) is vacuous on finite rings", A11Sep23);
  fin("aA11Sep23", "Corollary", "S^-1 b fails to be an ideal iff some chain b'_i grows forever", aA11Sep23,
      "finite: conclusion reduces to every S^-1 b being an ideal");
  fin("a10Sep23", "Lemma", "R prime, S in Den_l(R,0) => S^-1 R prime", a10Sep23);
  fin("a6Oct23", "Corollary", "S in Den_l(R,0): S^-1 p in Spec iff S^-1 p is an ideal", a6Oct23);
  fin("Aa6Oct23", "Proposition", "S cap p empty => sigma^-1(S^-1 p) = p", Aa6Oct23);
  fin("Xa10Sep23", "Proposition", "S in Den_l(R,q), q prime => S^-1 R prime", Xa10Sep23);
  fin("b14Oct23", "Lemma", "a in b: image of S in Den_l(R/b,0) iff it is regular", b14Oct23);
  fin("c14Oct23", "Lemma", "S cap (a+b) empty: image in Den_l(Rbar/c,0) iff tor_r vanishes", c14Oct23);
  fin("A29Sep23", "Proposition", "a product of primes is 0 => min(R) among them", A29Sep23);
  fin("aA29Sep23", "Proposition", "prime rich iff products of minimal primes iff nilpotent radicals", aA29Sep23);
  fin("B29Sep23", "Proposition", "S^-1 R left Noetherian => S respects the ideal structure", B29Sep23);
  fin("29Sep23", "Proposition", "prime rich, S respects primes => min(S^-1 R) from min(R,S)", P29Sep23);
  fin("a29Sep23", "Corollary", "S in Den(R,0) => min(S^-1 R) = {S^-1 p : p in min(R,S)}", a29Sep23,
      "finite: coincides with A10Sep23");
  fin("b10Sep23", "Lemma", "R semiprime => min(R) is the only irredundant set of primes", b10Sep23);
  auto* a10 = fin("A10Sep23", "Theorem", "R semiprime, S in Den_l(R,0) => min bijection", A10Sep23,
                  "finite: S consists of units (identity); monomial: substantive");
  a10->track = Track::both;
  a10->comm = A10Sep23_mono;
  fin("c10Sep23", "Corollary", "min(Q_l(R)) from min(R)", c10Sep23, "finite: Q_l(R) = R; no monomial analogue");
  fin("aA10Sep23", "Corollary", "a semiprime, S in Den_l(R,a) => min bijection with min(R/a)", aA10Sep23);
  fin("A15Sep23", "Proposition", "R semiprime: S_*(R) maps into S_*(R/p); R embeds in prod Q(R/p)", A15Sep23);
  fin("a20Sep23", "Lemma", "pi^-1(S_l(R/a)) = S_{l,a}(R)", a20Sep23);
  fin("19Sep23", "Proposition", "a_l(p), a_r(p) in p; Ore criterion for T_l(p)", P19Sep23);
  fin("28Sep23", "Theorem", "R semiprime, S in Den_l(R,a): min(R,S) nonempty and (1) iff (2)", P28Sep23);
  auto* a28 = fin("a28Sep23", "Corollary", "commutative semiprime: min(S^-1 R) from min(R,S), distinct", a28Sep23,
                  "finite and monomial");
  a28->track = Track::both;
  a28->comm = a28Sep23_mono;
  fin("b28Sep23", "Proposition", "completely prime min(R,S) => semiprime localization, distinct images", b28Sep23);
  auto* j10 = fin("10Jan19", "Theorem", "S normal-generated: a = {srt = 0} proper, image in Den(R/a,0)", J10Jan19,
                  "finite and A_n");
  j10->track = Track::both;
  j10->an = [](const mono::AnAlgebra& a, std::uint64_t) { return J10Jan19_an(a); };
  auto* a2 = fin("A2Oct23", "Theorem", "S normal-generated: min(a) -> min(R<S^-1>) bijection", A2Oct23,
                 "finite, commutative monomial and A_n");
  a2->track = Track::both;
  a2->comm = A2Oct23_mono;
  a2->an = [](const mono::AnAlgebra& a, std::uint64_t) { return A2Oct23_an(a); };
  auto* a5 = fin("a5Oct23", "Lemma", "ts normal => normal part of S' is a denominator set with the same a", a5Oct23,
                 "finite; A_n degenerate (central)");
  a5->track = Track::both;
  a5->an = [](const mono::AnAlgebra& a, std::uint64_t) { return a5Oct23_an(a); };
  fin("A25Sep23", "Proposition", "q in im(rho) iff R_q != R_q q; fibers; minimal lifts", A25Sep23);
  fin("a25Sep23", "Lemma", "R semiprime => Z(R) semiprime, |min(Z) cap im rho| <= |min R|", a25Sep23);
  auto* c25 = fin("C25Sep23", "Proposition", "C_Z not in C_R iff C_Z meets a minimal prime iff rho_min ill-defined",
                  C25Sep23, "finite: agreement only (finite semiprime rings are semisimple)");
  c25->aliases = {"aB25Sep23"};
  fin("B25Sep23", "Proposition", "(1)-(3) iff rho_min is a surjection", B25Sep23);
  fin("aC25Sep23", "Corollary", "R inside C_Z^-1 R ~ prod R_q over min(Z)", aC25Sep23);
  TheoremCheck b29{"b29Sep23", "Lemma", "min(A_n), domain quotients, Z(A_n) = P_n, p_I cap Z", Track::monomial,
                   "A_n only (verified to degree d)"};
  b29.an = b29Sep23_an;
  r.push_back(std::move(b29));
  fin("4Jul10", "Theorem", "S_l(Q_l(R)) = Q_l(R)^x, units are fractions", J4Jul10, "finite: Q_l(R) = R");
  return r;
}

/// Labels missing from the registry (empty when coverage is complete).
inline std::vector<std::string> coverage_gaps(const std::vector<TheoremCheck>& reg) {
  std::vector<std::string> missing;
  for (const auto& label : in_scope_labels()) {
    bool found = false;
    for (const auto& c : reg) {
      found = found || c.id == label;
      for (const auto& a : c.aliases) found = found || a == label;
    }
    if (!found) missing.push_back(label);
  }
  return missing;
}

}  // namespace locprime
