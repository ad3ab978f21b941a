#pragma once

// Ideals of finite rings: generation, lattice, primality, radicals.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finring.hpp"

namespace locprime {

enum class Side { left, right, two_sided };

inline const char* to_string(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::two_sided: return "two-sided";
  }
  return "?";
}

struct Ideal {
  RingPtr ring;
  ElementSet members;
  Side side = Side::two_sided;

  bool contains(Elem e) const { return members.contains(e); }
  bool is_zero() const { return members.size() == 1; }
  bool is_whole() const { return members.is_full(); }
  bool subset_of(const Ideal& o) const { return members.subset_of(o.members); }
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.members == b.members; }
};

inline bool closed_left(const RingTable& r, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](Elem x) {
    for (Elem y = 0; y < r.order() && ok; ++y) ok = s.contains(r.mul(y, x));
  });
  return ok;
}

inline bool closed_right(const RingTable& r, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](Elem x) {
    for (Elem y = 0; y < r.order() && ok; ++y) ok = s.contains(r.mul(x, y));
  });
  return ok;
}

inline bool is_ideal_set(const RingTable& r, const ElementSet& s, Side side) {
  if (!is_additive_subgroup(r, s)) return false;
  if (side != Side::right && !closed_left(r, s)) return false;
  if (side != Side::left && !closed_right(r, s)) return false;
  return true;
}

/// Wraps a set that must already be an ideal of the stated side.
inline Ideal make_ideal(const RingPtr& r, const ElementSet& s, Side side = Side::two_sided) {
  if (s.order() != r->order()) throw Error(ErrorCode::ring_mismatch, "element set bound to another ring");
  if (!is_ideal_set(*r, s, side))
    throw Error(ErrorCode::sidedness, s.to_string() + " is not a " + to_string(side) + " ideal of " + r->label());
  return Ideal{r, s, side};
}

inline Ideal zero_ideal(const RingPtr& r) { return Ideal{r, ElementSet::single(r->order(), r->zero()), Side::two_sided}; }
inline Ideal whole_ring(const RingPtr& r) { return Ideal{r, r->all(), Side::two_sided}; }

/// Least ideal of the given side containing gens (closure fixpoint).
inline Ideal ideal_generated_by(const RingPtr& r, const ElementSet& gens, Side side = Side::two_sided) {
  const RingTable& t = *r;
  ElementSet s = gens;
  s.insert(t.zero());
  for (;;) {
    ElementSet next = additive_closure(t, s);
    next.for_each([&](Elem x) {
      for (Elem y = 0; y < t.order(); ++y) {
        if (side != Side::right) next.insert(t.mul(y, x));
        if (side != Side::left) next.insert(t.mul(x, y));
      }
    });
    if (next == s) break;
    s = next;
  }
  return Ideal{r, s, side};
}

inline void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring.get() != b.ring.get() && !a.ring->same_tables(*b.ring))
    throw Error(ErrorCode::ring_mismatch, "ideals belong to different rings");
}

inline void require_two_sided(const Ideal& a, const char* what) {
  if (a.side != Side::two_sided) throw Error(ErrorCode::sidedness, std::string(what) + " needs a two-sided ideal");
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return ideal_generated_by(a.ring, a.members | b.members, Side::two_sided);
}

inline Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  require_two_sided(a, "intersection");
  require_two_sided(b, "intersection");
  return Ideal{a.ring, a.members & b.members, Side::two_sided};
}

/// Ideal generated by {xy : x in a, y in b}.
inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  require_two_sided(a, "product");
  require_two_sided(b, "product");
  const RingTable& t = *a.ring;
  ElementSet gens(t.order());
  a.members.for_each([&](Elem x) { b.members.for_each([&](Elem y) { gens.insert(t.mul(x, y)); }); });
  return ideal_generated_by(a.ring, gens, Side::two_sided);
}

inline Ideal ideal_power(const Ideal& a, int k) {
  Ideal p = whole_ring(a.ring);
  for (int i = 0; i < k; ++i) p = ideal_product(p, a);
  return p;
}

/// {x : x T = 0}, a left ideal.
inline Ideal left_ann(const RingPtr& r, const ElementSet& t) {
  if (t.empty()) throw Error(ErrorCode::empty_set, "annihilator of the empty set");
  ElementSet out(r->order());
  for (Elem x = 0; x < r->order(); ++x) {
    bool kills = true;
    t.for_each([&](Elem y) { kills = kills && r->mul(x, y) == r->zero(); });
    if (kills) out.insert(x);
  }
  return Ideal{r, out, Side::left};
}

/// {x : T x = 0}, a right ideal.
inline Ideal right_ann(const RingPtr& r, const ElementSet& t) {
  if (t.empty()) throw Error(ErrorCode::empty_set, "annihilator of the empty set");
  ElementSet out(r->order());
  for (Elem x = 0; x < r->order(); ++x) {
    bool kills = true;
    t.for_each([&](Elem y) { kills = kills && r->mul(y, x) == r->zero(); });
    if (kills) out.insert(x);
  }
  return Ideal{r, out, Side::right};
}

// ---------------------------------------------------------------------------
// Quotients

struct Quotient {
  RingPtr ring;
  RingHom pi;
};

/// R / i with coset representatives the least id of each coset, cosets ordered by representative.
inline Quotient make_quotient(const RingPtr& r, const Ideal& i) {
  if (i.side != Side::two_sided) throw Error(ErrorCode::sidedness, "quotient needs a two-sided ideal");
  if (i.is_whole()) throw Error(ErrorCode::improper_ideal, "quotient by the whole ring");
  if (!is_ideal_set(*r, i.members, Side::two_sided))
    throw Error(ErrorCode::sidedness, i.members.to_string() + " is not a two-sided ideal");
  const RingTable& t = *r;
  const int n = t.order();
  std::vector<Elem> coset(static_cast<std::size_t>(n), -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[static_cast<std::size_t>(x)] >= 0) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    i.members.for_each([&](Elem y) { coset[static_cast<std::size_t>(t.add(x, y))] = id; });
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::uint8_t> add(static_cast<std::size_t>(m * m)), mul(static_cast<std::size_t>(m * m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const Elem x = reps[static_cast<std::size_t>(a)], y = reps[static_cast<std::size_t>(b)];
      add[static_cast<std::size_t>(a * m + b)] = static_cast<std::uint8_t>(coset[static_cast<std::size_t>(t.add(x, y))]);
      mul[static_cast<std::size_t>(a * m + b)] = static_cast<std::uint8_t>(coset[static_cast<std::size_t>(t.mul(x, y))]);
    }
  std::vector<std::string> names;
  for (Elem x : reps) names.push_back("[" + t.name(x) + "]");
  auto q = finalize(RingTable::unchecked(m, std::move(add), std::move(mul), coset[static_cast<std::size_t>(t.zero())],
                                         coset[static_cast<std::size_t>(t.one())],
                                         "quot(" + t.label() + "," + i.members.to_string() + ")", std::move(names)));
  RingHom pi{r, q, coset};
  return {q, pi};
}

// ---------------------------------------------------------------------------
// Lattice of two-sided ideals

struct IdealLattice {
  RingPtr ring;
  std::vector<Ideal> ideals;                 // sorted by (size, bits)
  std::vector<std::vector<bool>> inclusion;  // inclusion[i][j] <=> ideals[i] subset of ideals[j]

  std::optional<std::size_t> index_of(const ElementSet& s) const {
    for (std::size_t i = 0; i < ideals.size(); ++i)
      if (ideals[i].members == s) return i;
    return std::nullopt;
  }
  std::size_t size() const { return ideals.size(); }
};

/// Every two-sided ideal is a sum of principal ones, so join-closing the principal ideals finds them all.
inline IdealLattice all_ideals(const RingPtr& r, int cap = kMaxSupportedOrder) {
  if (r->order() > cap)
    throw Error(ErrorCode::size_limit, "ideal lattice of " + r->label() + " exceeds the order cap");
  std::vector<ElementSet> sets;
  auto add = [&](const ElementSet& s) {
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
  };
  add(ElementSet::single(r->order(), r->zero()));
  for (Elem x = 0; x < r->order(); ++x) add(ideal_generated_by(r, ElementSet::single(r->order(), x)).members);
  for (std::size_t done = 0; done < sets.size(); ++done)
    for (std::size_t j = 0; j < done; ++j) add(ideal_generated_by(r, sets[done] | sets[j]).members);
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  IdealLattice lat;
  lat.ring = r;
  for (const auto& s : sets) lat.ideals.push_back(Ideal{r, s, Side::two_sided});
  const std::size_t n = sets.size();
  lat.inclusion.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lat.inclusion[i][j] = sets[i].subset_of(sets[j]);
  return lat;
}

// ---------------------------------------------------------------------------
// Primality

struct PrimeReport {
  Ideal ideal;
  bool is_prime = false;
  bool is_completely_prime = false;
  bool is_semiprime_ideal = false;
};

/// Elementwise tests: aRb in P, ab in P, aRa in P.
inline PrimeReport classify_ideal(const Ideal& p) {
  require_two_sided(p, "classify_ideal");
  if (p.is_whole()) throw Error(ErrorCode::improper_ideal, "the whole ring is not a proper ideal");
  const RingTable& t = *p.ring;
  const int n = t.order();
  auto aRb_in_p = [&](Elem a, Elem b) {
    for (Elem x = 0; x < n; ++x)
      if (!p.contains(t.mul(t.mul(a, x), b))) return false;
    return true;
  };
  PrimeReport rep{p};
  rep.is_prime = rep.is_completely_prime = rep.is_semiprime_ideal = true;
  for (Elem a = 0; a < n; ++a) {
    if (p.contains(a)) continue;
    if (aRb_in_p(a, a)) rep.is_semiprime_ideal = false;
    for (Elem b = 0; b < n; ++b) {
      if (p.contains(b)) continue;
      if (p.contains(t.mul(a, b))) rep.is_completely_prime = false;
      if (rep.is_prime && aRb_in_p(a, b)) rep.is_prime = false;
    }
  }
  if (rep.is_completely_prime && !rep.is_prime) fail_internal("completely prime but not prime: " + p.members.to_string());
  if (rep.is_prime && !rep.is_semiprime_ideal) fail_internal("prime but not semiprime: " + p.members.to_string());
  return rep;
}

inline bool is_prime_ideal(const Ideal& p) { return !p.is_whole() && classify_ideal(p).is_prime; }

/// Ideal-pair criterion over the lattice: AB in P implies A in P or B in P.
inline bool is_prime_by_lattice(const IdealLattice& lat, const Ideal& p) {
  if (p.is_whole()) return false;
  for (const auto& a : lat.ideals)
    for (const auto& b : lat.ideals)
      if (ideal_product(a, b).subset_of(p) && !a.subset_of(p) && !b.subset_of(p)) return false;
  return true;
}

inline std::vector<Ideal> prime_ideals(const IdealLattice& lat) {
  std::vector<Ideal> out;
  for (const auto& i : lat.ideals)
    if (is_prime_ideal(i)) out.push_back(i);
  return out;
}

/// Inclusion-minimal members of a list; order preserved.
inline std::vector<Ideal> minimal_members(const std::vector<Ideal>& v) {
  std::vector<Ideal> out;
  for (const auto& a : v) {
    bool minimal = true;
    for (const auto& b : v)
      if (b.members != a.members && b.subset_of(a)) minimal = false;
    if (minimal && std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  return out;
}

namespace detail {
inline std::vector<Ideal> min_primes_direct(const IdealLattice& lat, const Ideal& a) {
  std::vector<Ideal> over;
  for (const auto& p : prime_ideals(lat))
    if (a.subset_of(p)) over.push_back(p);
  return minimal_members(over);
}
}  // namespace detail

/// Minimal primes over a, computed in R and again through R/a; the two routes must agree.
inline std::vector<Ideal> min_primes_over(const IdealLattice& lat, const Ideal& a) {
  require_two_sided(a, "min_primes_over");
  if (a.is_whole()) throw Error(ErrorCode::improper_ideal, "no primes over the whole ring");
  auto direct = detail::min_primes_direct(lat, a);
  if (!a.is_zero()) {
    auto q = make_quotient(lat.ring, a);
    auto qlat = all_ideals(q.ring);
    auto via = detail::min_primes_direct(qlat, zero_ideal(q.ring));
    std::vector<Ideal> lifted;
    for (const auto& p : via) lifted.push_back(Ideal{lat.ring, q.pi.preimage(p.members), Side::two_sided});
    bool agree = lifted.size() == direct.size();
    for (const auto& p : lifted) agree = agree && std::find(direct.begin(), direct.end(), p) != direct.end();
    if (!agree) fail_internal("min primes over " + a.members.to_string() + " disagree with the quotient route");
  }
  return direct;
}

inline std::vector<Ideal> min_primes_over(const RingPtr& r, const Ideal& a) { return min_primes_over(all_ideals(r), a); }
inline std::vector<Ideal> min_primes(const IdealLattice& lat) {
  return detail::min_primes_direct(lat, zero_ideal(lat.ring));
}
inline std::vector<Ideal> min_primes(const RingPtr& r) { return min_primes(all_ideals(r)); }

/// Minimal primes using the lattice prime test instead of the elementwise one.
inline std::vector<Ideal> min_primes_by_lattice(const IdealLattice& lat) {
  std::vector<Ideal> primes;
  for (const auto& i : lat.ideals)
    if (is_prime_by_lattice(lat, i)) primes.push_back(i);
  return minimal_members(primes);
}

// ---------------------------------------------------------------------------
// Radicals and nilpotency

inline Ideal intersection_of(const RingPtr& r, const std::vector<Ideal>& v) {
  ElementSet s = r->all();
  for (const auto& i : v) s = s & i.members;
  return Ideal{r, s, Side::two_sided};
}

/// a is strongly nilpotent iff no infinite walk a -> a1 -> ... with a_{i+1} in a_i R a_i \ {0} exists.
inline ElementSet strongly_nilpotent_elements(const RingTable& t) {
  const int n = t.order();
  std::vector<ElementSet> succ(static_cast<std::size_t>(n), ElementSet(n));
  for (Elem x = 0; x < n; ++x) {
    if (x == t.zero()) continue;
    for (Elem y = 0; y < n; ++y) {
      const Elem v = t.mul(t.mul(x, y), x);
      if (v != t.zero()) succ[static_cast<std::size_t>(x)].insert(v);
    }
  }
  // 0 = unvisited, 1 = on stack, 2 = done; escapes[x] = an infinite nonzero walk starts at x
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  std::vector<bool> escapes(static_cast<std::size_t>(n), false);
  auto dfs = [&](auto&& self, Elem x) -> void {
    state[static_cast<std::size_t>(x)] = 1;
    bool esc = false;
    succ[static_cast<std::size_t>(x)].for_each([&](Elem y) {
      const auto sy = static_cast<std::size_t>(y);
      if (state[sy] == 1) esc = true;
      else {
        if (state[sy] == 0) self(self, y);
        esc = esc || escapes[sy];
      }
    });
    escapes[static_cast<std::size_t>(x)] = esc;
    state[static_cast<std::size_t>(x)] = 2;
  };
  for (Elem x = 0; x < n; ++x)
    if (state[static_cast<std::size_t>(x)] == 0) dfs(dfs, x);
  // A node on a cycle discovered later than its first visit is fixed up by propagating escape to a fixpoint.
  for (bool changed = true; changed;) {
    changed = false;
    for (Elem x = 0; x < n; ++x) {
      if (escapes[static_cast<std::size_t>(x)]) continue;
      bool e = false;
      succ[static_cast<std::size_t>(x)].for_each([&](Elem y) { e = e || escapes[static_cast<std::size_t>(y)]; });
      if (e) escapes[static_cast<std::size_t>(x)] = changed = true;
    }
  }
  ElementSet out(n);
  for (Elem x = 0; x < n; ++x)
    if (!escapes[static_cast<std::size_t>(x)]) out.insert(x);
  return out;
}

/// Intersection of the minimal primes; must coincide with the strongly nilpotent elements.
inline Ideal prime_radical(const IdealLattice& lat) {
  Ideal rad = intersection_of(lat.ring, min_primes(lat));
  if (rad.members != strongly_nilpotent_elements(*lat.ring))
    fail_internal("prime radical routes disagree on " + lat.ring->label());
  return rad;
}
inline Ideal prime_radical(const RingPtr& r) { return prime_radical(all_ideals(r)); }

inline bool is_semiprime_ring(const IdealLattice& lat) { return prime_radical(lat).is_zero(); }
inline bool is_semiprime_ring(const RingPtr& r) { return is_semiprime_ring(all_ideals(r)); }

/// Least k >= 1 with a^k = 0, or nullopt when the power chain stabilises above 0.
inline std::optional<int> nilpotency_exponent(const Ideal& a) {
  Ideal p = a;
  for (int k = 1; k <= a.ring->order() + 1; ++k) {
    if (p.is_zero()) return k;
    Ideal next = ideal_product(p, a);
    if (next == p) return std::nullopt;
    p = next;
  }
  return std::nullopt;
}

inline bool is_nilpotent_ideal(const Ideal& a) { return nilpotency_exponent(a).has_value(); }

// ---------------------------------------------------------------------------
// Prime richness

struct PrimeRichEntry {
  Ideal ideal;
  bool contains_prime_product = false;   // (1) some product of primes over a lies in a
  std::optional<int> exponent;           // (2) least k with (prod min(a))^k in a
  bool radical_nilpotent = false;        // (3) n_{R/a} nilpotent
};

struct PrimeRichReport {
  bool prime_rich = true;
  bool conditions_agree = true;
  std::vector<PrimeRichEntry> entries;
};

inline PrimeRichReport is_prime_rich(const IdealLattice& lat) {
  PrimeRichReport rep;
  const auto primes = prime_ideals(lat);
  for (const auto& a : lat.ideals) {
    if (a.is_whole()) continue;
    PrimeRichEntry e{a};
    std::vector<Ideal> over;
    for (const auto& p : primes)
      if (a.subset_of(p)) over.push_back(p);

    // (1): close {primes over a} under products and look for one inside a
    std::vector<ElementSet> seen;
    std::vector<Ideal> frontier = over;
    for (const auto& p : over) seen.push_back(p.members);
    for (std::size_t i = 0; i < frontier.size() && !e.contains_prime_product; ++i) {
      if (frontier[i].subset_of(a)) e.contains_prime_product = true;
      for (const auto& p : over) {
        Ideal prod = ideal_product(frontier[i], p);
        if (std::find(seen.begin(), seen.end(), prod.members) == seen.end()) {
          seen.push_back(prod.members);
          frontier.push_back(prod);
        }
      }
    }

    // (2)
    const auto mins = min_primes_over(lat, a);
    Ideal prod = whole_ring(lat.ring);
    for (const auto& p : mins) prod = ideal_product(prod, p);
    Ideal pw = prod;
    for (int k = 1; k <= lat.ring->order(); ++k) {
      if (pw.subset_of(a)) {
        e.exponent = k;
        break;
      }
      pw = ideal_product(pw, prod);
    }

    // (3)
    if (a.is_zero()) {
      e.radical_nilpotent = is_nilpotent_ideal(prime_radical(lat));
    } else {
      auto q = make_quotient(lat.ring, a);
      e.radical_nilpotent = is_nilpotent_ideal(prime_radical(q.ring));
    }

    const bool c2 = e.exponent.has_value();
    if (e.contains_prime_product != c2 || c2 != e.radical_nilpotent) rep.conditions_agree = false;
    rep.prime_rich = rep.prime_rich && e.contains_prime_product;
    rep.entries.push_back(e);
  }
  return rep;
}

/// Zero intersection, and dropping any single member leaves a nonzero intersection.
inline bool is_irredundant(const std::vector<Ideal>& v) {
  if (v.empty()) throw Error(ErrorCode::empty_set, "irredundancy of an empty family");
  const RingPtr& r = v.front().ring;
  if (!intersection_of(r, v).is_zero()) return false;
  for (std::size_t skip = 0; skip < v.size(); ++skip) {
    std::vector<Ideal> rest;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != skip) rest.push_back(v[i]);
    if (intersection_of(r, rest).is_zero()) return false;
  }
  return true;
}

/// Greedy generating set: ascending members not already in the ideal generated so far.
inline std::vector<Elem> ideal_generators(const Ideal& i) {
  std::vector<Elem> gens;
  ElementSet have = ElementSet::single(i.ring->order(), i.ring->zero());
  for (Elem e : i.members.members()) {
    if (have.contains(e)) continue;
    gens.push_back(e);
    have = ideal_generated_by(i.ring, ElementSet::from(i.ring->order(), gens), i.side).members;
  }
  return gens;
}

/// "(g1, g2)" using element names; the zero ideal renders as "(0)".
inline std::string describe_ideal(const Ideal& i) {
  const auto gens = ideal_generators(i);
  if (gens.empty()) return "(" + i.ring->name(i.ring->zero()) + ")";
  std::string s = "(";
  for (std::size_t k = 0; k < gens.size(); ++k) s += (k ? ", " : "") + i.ring->name(gens[k]);
  return s + ")";
}

}  // namespace locprime
