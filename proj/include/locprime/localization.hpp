#pragma once

// Multiplicative sets, Ore / denominator classification and finite localizations.

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "ideals.hpp"

namespace locprime {

struct MultSet {
  RingPtr ring;
  ElementSet members;

  bool contains(Elem e) const { return members.contains(e); }
  friend bool operator==(const MultSet& a, const MultSet& b) { return a.members == b.members; }
};

/// Multiplicative closure of gens and 1. Throws zero-absorbed with the product that reached 0.
inline MultSet close_multiplicative(const RingPtr& r, const ElementSet& gens) {
  const RingTable& t = *r;
  ElementSet s = gens;
  s.insert(t.one());
  if (s.contains(t.zero())) throw Error(ErrorCode::zero_absorbed, "0 is among the generators");
  const std::vector<Elem> start = s.members();
  std::deque<Elem> work(start.begin(), start.end());
  while (!work.empty()) {
    const Elem a = work.front();
    work.pop_front();
    for (Elem b : s.members()) {
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        const Elem p = t.mul(x, y);
        if (p == t.zero())
          throw Error(ErrorCode::zero_absorbed,
                      "closure reaches 0: " + std::to_string(x) + "*" + std::to_string(y) + " = 0");
        if (!s.contains(p)) {
          s.insert(p);
          work.push_back(p);
        }
      }
    }
  }
  return MultSet{r, s};
}

namespace detail {
inline std::optional<ElementSet> try_close(const RingTable& t, ElementSet s) {
  for (;;) {
    ElementSet next = s;
    s.for_each([&](Elem a) { s.for_each([&](Elem b) { next.insert(t.mul(a, b)); }); });
    if (next.contains(t.zero())) return std::nullopt;
    if (next == s) return s;
    s = next;
  }
}
}  // namespace detail

inline constexpr int kExhaustiveMultSetOrder = 12;

/// All submonoids avoiding 0 for order <= 12; closures of singletons and pairs above that.
inline std::vector<MultSet> enumerate_mult_sets(const RingPtr& r, int exhaustive_limit = kExhaustiveMultSetOrder) {
  const RingTable& t = *r;
  std::vector<ElementSet> found;
  auto seen = [&](const ElementSet& s) { return std::find(found.begin(), found.end(), s) != found.end(); };
  const ElementSet unit = ElementSet::single(t.order(), t.one());
  found.push_back(unit);
  if (t.order() <= exhaustive_limit) {
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (Elem x = 0; x < t.order(); ++x) {
        if (x == t.zero() || found[i].contains(x)) continue;
        ElementSet g = found[i];
        g.insert(x);
        if (auto c = detail::try_close(t, g); c && !seen(*c)) found.push_back(*c);
      }
    }
  } else {
    for (Elem x = 0; x < t.order(); ++x)
      for (Elem y = x; y < t.order(); ++y) {
        if (x == t.zero() || y == t.zero()) continue;
        ElementSet g(t.order(), {t.one(), x, y});
        if (auto c = detail::try_close(t, g); c && !seen(*c)) found.push_back(*c);
      }
  }
  std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  std::vector<MultSet> out;
  for (const auto& s : found) out.push_back(MultSet{r, s});
  return out;
}

// ---------------------------------------------------------------------------
// Classification

struct OreClass {
  MultSet set;
  bool left_ore = false;
  bool right_ore = false;
  bool left_den = false;
  bool right_den = false;
  ElementSet ass_l;
  ElementSet ass_r;
  std::string left_violation;  // empty when left_den

  bool two_sided_den() const { return left_den && right_den; }
};

inline ElementSet ass_l_set(const RingTable& t, const ElementSet& s) {
  ElementSet out(t.order());
  for (Elem r = 0; r < t.order(); ++r)
    s.for_each([&](Elem x) {
      if (t.mul(x, r) == t.zero()) out.insert(r);
    });
  return out;
}

inline ElementSet ass_r_set(const RingTable& t, const ElementSet& s) {
  ElementSet out(t.order());
  for (Elem r = 0; r < t.order(); ++r)
    s.for_each([&](Elem x) {
      if (t.mul(r, x) == t.zero()) out.insert(r);
    });
  return out;
}

namespace detail {

/// First (r, s) with Sr and Rs disjoint, if any.
inline std::optional<std::pair<Elem, Elem>> left_ore_failure(const RingTable& t, const ElementSet& s) {
  for (Elem r = 0; r < t.order(); ++r)
    for (Elem x : s.members()) {
      ElementSet sr(t.order());
      s.for_each([&](Elem y) { sr.insert(t.mul(y, r)); });
      if (!sr.intersects(left_multiples(t, x))) return std::pair{r, x};
    }
  return std::nullopt;
}

inline std::optional<std::pair<Elem, Elem>> right_ore_failure(const RingTable& t, const ElementSet& s) {
  for (Elem r = 0; r < t.order(); ++r)
    for (Elem x : s.members()) {
      ElementSet rs(t.order());
      s.for_each([&](Elem y) { rs.insert(t.mul(r, y)); });
      if (!rs.intersects(right_multiples(t, x))) return std::pair{r, x};
    }
  return std::nullopt;
}

}  // namespace detail

inline OreClass classify_set(const MultSet& s) {
  const RingTable& t = *s.ring;
  OreClass c{s};
  c.ass_l = ass_l_set(t, s.members);
  c.ass_r = ass_r_set(t, s.members);
  auto lf = detail::left_ore_failure(t, s.members);
  auto rf = detail::right_ore_failure(t, s.members);
  c.left_ore = !lf;
  c.right_ore = !rf;
  // rs = 0 must force r in ass_l; sr = 0 must force r in ass_r
  std::optional<std::pair<Elem, Elem>> ltor, rtol;
  for (Elem r = 0; r < t.order(); ++r)
    s.members.for_each([&](Elem x) {
      if (!ltor && t.mul(r, x) == t.zero() && !c.ass_l.contains(r)) ltor = std::pair{r, x};
      if (!rtol && t.mul(x, r) == t.zero() && !c.ass_r.contains(r)) rtol = std::pair{r, x};
    });
  c.left_den = c.left_ore && !ltor;
  c.right_den = c.right_ore && !rtol;
  if (lf)
    c.left_violation = "left Ore fails at r=" + std::to_string(lf->first) + ", s=" + std::to_string(lf->second);
  else if (ltor)
    c.left_violation = "r=" + std::to_string(ltor->first) + ", s=" + std::to_string(ltor->second) +
                       ": rs=0 but no t in S with tr=0";
  if (c.left_ore && !is_ideal_set(t, c.ass_l, Side::two_sided))
    fail_internal("ass_l of a left Ore set is not an ideal: " + s.members.to_string());
  if (c.right_ore && !is_ideal_set(t, c.ass_r, Side::two_sided))
    fail_internal("ass_r of a right Ore set is not an ideal: " + s.members.to_string());
  return c;
}

// ---------------------------------------------------------------------------
// Localizations

enum class LocKind { denominator, normal_localizable };

struct Localization {
  RingPtr source;
  MultSet set;
  LocKind kind = LocKind::denominator;
  Ideal ass;
  RingPtr target;
  RingHom sigma;
  ElementSet unit_witness;  // sigma(S), all units of target

  /// sigma(s)^-1 in the target.
  Elem inverse_of(Elem s) const {
    auto inv = inverse(*target, sigma(s));
    if (!inv) fail_internal("image of " + std::to_string(s) + " is not a unit");
    return *inv;
  }
};

namespace detail {
inline Localization finish_localization(const RingPtr& r, const MultSet& s, LocKind kind, const ElementSet& ass) {
  Localization l{r, s, kind, Ideal{r, ass, Side::two_sided}, nullptr, {}, {}};
  if (ass.is_full()) throw Error(ErrorCode::collapsed_localization, "ass ideal is the whole ring");
  if (ass.size() == 1) {
    l.target = r;
    l.sigma = identity_hom(r);
  } else {
    auto q = make_quotient(r, l.ass);
    l.target = q.ring;
    l.sigma = q.pi;
  }
  l.unit_witness = l.sigma.image(s.members);
  if (!l.unit_witness.subset_of(units(*l.target)))
    fail_internal("an element of S does not become a unit in R/ass for " + s.members.to_string());
  if (l.sigma.kernel() != ass) fail_internal("kernel of sigma differs from ass");
  return l;
}
}  // namespace detail

/// S^-1 R realised as R / ass_l(S); requires S to be a left denominator set.
inline Localization localize(const MultSet& s) {
  OreClass c = classify_set(s);
  if (!c.left_den)
    throw Error(ErrorCode::classification, s.members.to_string() + " is not a left denominator set: " + c.left_violation);
  return detail::finish_localization(s.ring, s, LocKind::denominator, c.ass_l);
}

inline Localization localize(const RingPtr& r, const ElementSet& gens) { return localize(close_multiplicative(r, gens)); }

/// R<S^-1> for S generated by normal elements: a = {r : srt = 0 for some s, t in S}.
inline Localization localize_normal(const RingPtr& r, const ElementSet& gens) {
  const RingTable& t = *r;
  gens.for_each([&](Elem g) {
    if (!is_normal_element(t, g))
      throw Error(ErrorCode::not_normal, "generator " + std::to_string(g) + " is not normal");
  });
  MultSet s = close_multiplicative(r, gens);
  ElementSet a(t.order());
  for (Elem x = 0; x < t.order(); ++x)
    s.members.for_each([&](Elem u) {
      s.members.for_each([&](Elem v) {
        if (t.mul(t.mul(u, x), v) == t.zero()) a.insert(x);
      });
    });
  if (!is_ideal_set(t, a, Side::two_sided)) fail_internal("srt-annihilator is not an ideal for " + gens.to_string());
  Localization l = detail::finish_localization(r, s, LocKind::normal_localizable, a);
  OreClass img = classify_set(MultSet{l.target, l.unit_witness});
  if (!img.two_sided_den() || img.ass_l.size() != 1 || img.ass_r.size() != 1)
    fail_internal("image of a normal set is not in Den(R/a, 0)");
  return l;
}

struct LocalizedLeftIdeal {
  Ideal source;
  ElementSet target;       // S^-1 I inside the target ring
  bool two_sided = false;
  ElementSet contraction;  // sigma^-1(S^-1 I)
};

inline LocalizedLeftIdeal localize_left_ideal(const Localization& l, const Ideal& i) {
  if (i.side == Side::right) throw Error(ErrorCode::sidedness, "localization needs a left or two-sided ideal");
  Ideal img = ideal_generated_by(l.target, l.sigma.image(i.members), Side::left);
  LocalizedLeftIdeal out{i, img.members, closed_right(*l.target, img.members), l.sigma.preimage(img.members)};
  if (!i.members.subset_of(out.contraction)) fail_internal("contraction does not contain the ideal");
  return out;
}

// ---------------------------------------------------------------------------
// Prop. A11Sep23 criterion

struct A11Verdict {
  bool c1 = true, c2 = true, c3 = true, c4 = true, c5 = true;
  bool agree = true;
  bool by_convention = false;  // b = R
  std::string witness;
};

inline A11Verdict check_A11_equivalence(const Localization& l, const Ideal& b) {
  require_two_sided(b, "A11 criterion");
  A11Verdict v;
  if (b.is_whole()) {
    v.by_convention = true;
    return v;
  }
  const RingTable& t = *l.source;
  const RingTable& tt = *l.target;
  const auto& S = l.set.members;

  auto sb = localize_left_ideal(l, b);
  v.c1 = sb.two_sided;

  S.for_each([&](Elem s) {
    const Elem sinv = l.inverse_of(s);
    b.members.for_each([&](Elem x) {
      if (!sb.target.contains(tt.mul(l.sigma(x), sinv))) v.c2 = false;
    });
  });

  auto tor_condition = [&](const ElementSet& ideal) {
    for (Elem r = 0; r < t.order(); ++r) {
      bool right_torsion = false, left_torsion = false;
      S.for_each([&](Elem s) {
        right_torsion = right_torsion || ideal.contains(t.mul(r, s));
        left_torsion = left_torsion || ideal.contains(t.mul(s, r));
      });
      if (right_torsion && !left_torsion) return false;
    }
    return true;
  };
  v.c3 = tor_condition(b.members);
  const Ideal ab = ideal_sum(l.ass, b);
  v.c4 = tor_condition(ab.members);

  // (5) inside the module Rbar / pi(b) = R / (a + b) with the image of S
  if (!ab.is_whole()) {
    auto q = make_quotient(l.source, ab);
    const RingTable& m = *q.ring;
    const ElementSet sbar = q.pi.image(S);
    for (Elem x = 0; x < m.order() && v.c5; ++x) {
      bool rt = false, lt = false;
      sbar.for_each([&](Elem s) {
        rt = rt || m.mul(x, s) == m.zero();
        lt = lt || m.mul(s, x) == m.zero();
      });
      if (rt && !lt) v.c5 = false;
    }
  }
  v.agree = v.c1 == v.c2 && v.c2 == v.c3 && v.c3 == v.c4 && v.c4 == v.c5;
  if (!v.agree)
    v.witness = std::string("conditions (1..5) = ") + (v.c1 ? "T" : "F") + (v.c2 ? "T" : "F") + (v.c3 ? "T" : "F") +
                (v.c4 ? "T" : "F") + (v.c5 ? "T" : "F") + " for S=" + S.to_string() + ", b=" + b.members.to_string();
  return v;
}

// ---------------------------------------------------------------------------
// Primes and localizations

/// S^-1 p is two-sided for every prime p.
inline bool respects_prime_structure(const Localization& l, const std::vector<Ideal>& primes) {
  for (const auto& p : primes)
    if (!localize_left_ideal(l, p).two_sided) return false;
  return true;
}

/// min(R, S): minimal primes disjoint from S.
inline std::vector<Ideal> min_RS(const std::vector<Ideal>& mins, const MultSet& s) {
  std::vector<Ideal> out;
  for (const auto& p : mins)
    if (!p.members.intersects(s.members)) out.push_back(p);
  return out;
}

/// min(R, S, id): minimal primes with S^-1 p S^-1 R proper.
inline std::vector<Ideal> min_RS_id(const Localization& l, const std::vector<Ideal>& mins) {
  std::vector<Ideal> out;
  for (const auto& p : mins) {
    auto sp = localize_left_ideal(l, p);
    if (!ideal_generated_by(l.target, sp.target, Side::two_sided).is_whole()) out.push_back(p);
  }
  auto rs = min_RS(mins, l.set);
  for (const auto& p : rs)
    if (std::find(out.begin(), out.end(), p) == out.end()) fail_internal("min(R,S) not contained in min(R,S,id)");
  return out;
}

// ---------------------------------------------------------------------------
// Largest sets

inline MultSet largest_regular_set(const RingPtr& r) {
  MultSet u{r, units(*r)};
  if (u.members != regular_elements(*r)) fail_internal("regular elements differ from units on " + r->label());
  if (!classify_set(u).two_sided_den()) fail_internal("unit group is not a denominator set");
  return u;
}

/// S_{l,a}(R) = pi^-1(units(R/a)); a must be ass_l of some left denominator set.
inline MultSet largest_set_assoc(const RingPtr& r, const Ideal& a, const std::vector<MultSet>& candidates) {
  bool realised = false;
  for (const auto& s : candidates) {
    OreClass c = classify_set(s);
    if (c.left_den && c.ass_l == a.members) {
      realised = true;
      break;
    }
  }
  if (!realised) throw Error(ErrorCode::not_in_ass, a.members.to_string() + " is not ass_l of a left denominator set");
  MultSet out{r, {}};
  if (a.is_zero()) {
    out.members = units(*r);
  } else {
    auto q = make_quotient(r, a);
    out.members = q.pi.preimage(units(*q.ring));
  }
  OreClass c = classify_set(out);
  if (!c.left_den || c.ass_l != a.members) fail_internal("S_{l,a} is not in Den_l(R, a) for a=" + a.members.to_string());
  return out;
}

inline MultSet largest_set_assoc(const RingPtr& r, const Ideal& a) {
  return largest_set_assoc(r, a, enumerate_mult_sets(r));
}

struct TlReport {
  MultSet set;
  ElementSet a_l;
  ElementSet a_r;
  bool left_ore = false;
  bool left_den = false;
  bool criterion = false;  // the pair criterion for the left Ore property
};

/// T_l(p) = pi_p^-1(units(R/p)) for a prime p.
inline TlReport T_l(const RingPtr& r, const Ideal& p) {
  if (!is_prime_ideal(p)) throw Error(ErrorCode::not_prime, p.members.to_string() + " is not prime");
  const RingTable& t = *r;
  TlReport rep{MultSet{r, {}}, {}, {}};
  if (p.is_zero()) {
    rep.set.members = units(t);
  } else {
    auto q = make_quotient(r, p);
    rep.set.members = q.pi.preimage(units(*q.ring));
  }
  const ElementSet& T = rep.set.members;
  rep.a_l = ass_l_set(t, T);
  rep.a_r = ass_r_set(t, T);
  OreClass c = classify_set(rep.set);
  rep.left_ore = c.left_ore;
  rep.left_den = c.left_den;
  rep.criterion = true;
  T.for_each([&](Elem s) {
    p.members.for_each([&](Elem x) {
      bool found = false;
      T.for_each([&](Elem s2) {
        for (Elem r2 = 0; r2 < t.order() && !found; ++r2)
          if (rep.a_l.contains(t.sub(t.mul(s2, x), t.mul(r2, s)))) found = true;
      });
      if (!found) rep.criterion = false;
    });
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Epimorphic images of denominator sets

struct EpiVerdict {
  bool b14_applicable = false;
  bool b14_lhs = false, b14_rhs = false;
  bool c14_applicable = false;
  bool c14_lhs = false, c14_rhs = false;
  bool agree() const {
    return (!b14_applicable || b14_lhs == b14_rhs) && (!c14_applicable || c14_lhs == c14_rhs);
  }
};

namespace detail {
/// Image set in Den_l(ring, 0): left denominator, avoids 0, trivial ass_l.
inline bool is_regular_left_den(const RingPtr& ring, const ElementSet& s) {
  if (s.contains(ring->zero())) return false;
  OreClass c = classify_set(MultSet{ring, s});
  return c.left_den && c.ass_l.size() == 1;
}
}  // namespace detail

inline EpiVerdict check_epimorphic_den(const Localization& l, const Ideal& b) {
  require_two_sided(b, "epimorphic image check");
  EpiVerdict v;
  const auto& S = l.set.members;
  if (l.ass.subset_of(b) && !b.is_whole()) {
    v.b14_applicable = true;
    auto q = make_quotient(l.source, b);
    const ElementSet sbar = q.pi.image(S);
    v.b14_lhs = detail::is_regular_left_den(q.ring, sbar);
    v.b14_rhs = sbar.subset_of(regular_elements(*q.ring));
  }
  const Ideal ab = ideal_sum(l.ass, b);
  if (!S.intersects(ab.members)) {
    v.c14_applicable = true;
    auto q = make_quotient(l.source, ab);
    const RingTable& m = *q.ring;
    const ElementSet sbar = q.pi.image(S);
    const ElementSet c = ass_l_set(m, sbar);
    if (c.is_full()) fail_internal("ass_l of the image set is the whole ring");
    if (c.size() == 1) {
      v.c14_lhs = detail::is_regular_left_den(q.ring, sbar);
    } else {
      auto q2 = make_quotient(q.ring, Ideal{q.ring, c, Side::two_sided});
      v.c14_lhs = detail::is_regular_left_den(q2.ring, q2.pi.image(sbar));
    }
    v.c14_rhs = true;
    for (Elem x = 0; x < m.order(); ++x)
      sbar.for_each([&](Elem s) {
        if (c.contains(m.mul(x, s)) && !c.contains(x)) v.c14_rhs = false;
      });
  }
  return v;
}

}  // namespace locprime
