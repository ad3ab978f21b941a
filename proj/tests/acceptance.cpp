// Acceptance run: one PASS/FAIL line per criterion, with counts and timings.
//
// Exit status is 0 when every criterion passes or fails only where a failure is
// already documented (see kKnownFailures); any other failure exits 1.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "locprime/harness.hpp"
#include "oracles.hpp"

using namespace locprime;

namespace {

// Criterion 5 reads A_n with m = n free generators; its centre is then larger than P_n.
const std::set<int> kKnownFailures{5};

struct Verdict {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Instance> corpus() {
  static const std::vector<Instance> c = build_corpus({});
  return c;
}

std::vector<RingPtr> finite_up_to(int cap) {
  std::vector<RingPtr> out;
  for (const auto& in : corpus())
    if (in.ring && in.ring->order() <= cap) out.push_back(in.ring);
  return out;
}

std::vector<mono::Mask> brute_covers(const mono::CommMonomialRing& r) {
  std::vector<mono::Mask> covers, out;
  for (mono::Mask s = 0; s < (mono::Mask{1} << r.n); ++s) {
    bool ok = true;
    for (const auto& g : r.gens) ok = ok && (mono::support(g) & s) != 0;
    if (ok) covers.push_back(s);
  }
  for (auto c : covers) {
    bool minimal = true;
    for (auto d : covers) minimal = minimal && !(d != c && (d & c) == d);
    if (minimal) out.push_back(c);
  }
  return out;
}

std::vector<mono::Mask> masks(const std::vector<mono::MonomialPrime>& v) {
  std::vector<mono::Mask> out;
  for (const auto& p : v) out.push_back(p.vars);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<mono::CommMonomialRing> squarefree_rings(int n) {
  std::vector<mono::Exponents> atoms;
  for (mono::Mask s = 1; s < (mono::Mask{1} << n); ++s) {
    mono::Exponents e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = (s >> i) & 1;
    atoms.push_back(e);
  }
  std::vector<mono::CommMonomialRing> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << atoms.size()); ++pick) {
    std::vector<mono::Exponents> gens;
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if ((pick >> k) & 1) gens.push_back(atoms[k]);
    out.push_back(mono::make_comm_monomial(n, gens));
  }
  return out;
}

void outcome_ok(Verdict& v, const Outcome& o, const std::string& what) {
  v.require(o.failures.empty(), what + (o.failures.empty() ? "" : ": " + o.failures.front().clause + " " +
                                                                   o.failures.front().detail));
}

// ---------------------------------------------------------------------------

void c1(Verdict& v) {
  long long triples = 0, disagreements = 0;
  for (const auto& r : finite_up_to(12)) {
    const auto d = prepare_finite(r);
    for (const auto& l : d.locs)
      for (const auto& b : d.lat.ideals) {
        const auto a = check_A11_equivalence(l.loc, b);
        const bool c1_direct = localize_left_ideal(l.loc, b).two_sided;
        ++triples;
        if (!a.agree || a.c1 != c1_direct) {
          ++disagreements;
          v.require(false, r->label() + " S=" + l.loc.set.members.to_string() + " b=" + b.members.to_string());
        }
      }
  }
  v.require(triples >= 1000, "fewer than 1000 triples");
  v.note << triples << " triples, " << disagreements << " disagreements";
}

void c2(Verdict& v) {
  long long rings = 0, cases = 0;
  for (int n = 1; n <= 3; ++n)
    for (const auto& r : squarefree_rings(n)) {
      ++rings;
      const auto covers = brute_covers(r);
      mono::Mask used = 0;
      for (auto c : covers) used |= c;
      const mono::Mask regular = ((mono::Mask{1} << n) - 1) & ~used;
      for (mono::Mask vset = 0; vset < (mono::Mask{1} << n); ++vset) {
        if (vset & ~regular) continue;
        ++cases;
        const auto l = mono::localize_monomial(r, vset);
        auto expect = covers;
        std::sort(expect.begin(), expect.end());
        v.require(l.regular && l.ok(), r.to_string() + " report");
        v.require(masks(l.min_R) == expect, r.to_string() + " min(R) vs cover oracle");
        v.require(masks(l.min_loc) == expect && masks(l.min_ass) == expect,
                  r.to_string() + " min(S^-1 R) vs cover oracle");
      }
    }
  v.note << rings << " squarefree ideals, " << cases << " (ideal, V) pairs";
}

void c3(Verdict& v) {
  long long rings = 0, sets = 0;
  for (const auto& r : finite_up_to(12)) {
    const auto d = prepare_finite(r);
    if (!d.semiprime) continue;
    ++rings;
    outcome_ok(v, checks::P28Sep23(d), r->label() + " 28Sep23");
    outcome_ok(v, checks::b28Sep23(d), r->label() + " b28Sep23");
    for (const auto& l : d.locs) {
      ++sets;
      v.require(!min_RS(d.mins, l.loc.set).empty(), r->label() + " min(R,S) empty");
    }
  }
  v.note << rings << " semiprime rings, " << sets << " denominator sets";
}

void c4(Verdict& v) {
  long long an_cases = 0, comm = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto a = mono::an_build(n);
    for (mono::Mask vset = 1; vset < (mono::Mask{1} << n); ++vset) {
      ++an_cases;
      const auto rep = mono::an_localize_normal(a, vset);
      const std::size_t expected = std::size_t{1} << (n - std::popcount(vset));
      v.require(rep.min_ass == expected, "A_" + std::to_string(n) + " |min(a)|");
      v.require(rep.ok(), "A_" + std::to_string(n) + " V=" + mono::subset_to_string(vset, n) + " " + rep.witness);
    }
    outcome_ok(v, checks::A2Oct23_an(a), "A_" + std::to_string(n));
  }
  for (const auto& in : corpus())
    if (in.comm && in.comm->n <= 3) {
      ++comm;
      outcome_ok(v, checks::A2Oct23_mono(*in.comm), in.recipe);
    }
  v.note << an_cases << " (A_n, V) pairs, " << comm << " commutative monomial instances";
}

std::string an_summary(const mono::AnReport& r) {
  std::ostringstream os;
  os << "n=" << r.algebra.n << " m=" << r.algebra.m << " d=" << r.algebra.d << ": domains " << r.domains_ok()
     << ", incomparable " << r.incomparable << ", intersection " << r.intersection_zero << ", Z=P_n "
     << r.centre_is_Pn << " (dim " << r.centre_dim << " vs " << r.z_monomials << ")"
     << ", p_I cap Z " << r.restrictions_ok() << ", rho " << r.rho_ok();
  if (!r.extra_central.empty()) os << ", extra central " << r.extra_central;
  return os.str();
}

void c5(Verdict& v, std::vector<std::string>& extra) {
  for (int n = 1; n <= 3; ++n) {
    const auto rep = mono::an_verify(mono::an_build(n));
    extra.push_back("  A_n as written: " + an_summary(rep));
    v.require(rep.ok(), "A_" + std::to_string(n) + " with m = n");
  }
  for (int n = 1; n <= 3; ++n) {
    const auto rep = mono::an_verify(mono::an_build(n, 0, n + 2));
    extra.push_back("  supplement:     " + an_summary(rep) + (rep.ok() ? "  [all clauses hold]" : "  [FAILS]"));
  }
  v.note << "literal presentation m = n";
}

void c6(Verdict& v) {
  long long semiprime = 0, comm = 0;
  for (const auto& r : finite_up_to(16)) {
    const auto d = prepare_finite(r);
    if (d.semiprime) {
      ++semiprime;
      v.require(check_rho_criteria(r, d.lat).agree(), r->label() + " four-way agreement");
      outcome_ok(v, checks::C25Sep23(d), r->label() + " C25Sep23");
      outcome_ok(v, checks::B25Sep23(d), r->label() + " B25Sep23");
    }
    if (r->is_commutative()) {
      ++comm;
      outcome_ok(v, checks::A25Sep23(d), r->label() + " A25Sep23");
      if (d.semiprime) {
        const auto p = check_pierce(r, d.lat);
        v.require(p.applicable && p.isomorphism, r->label() + " product decomposition");
      }
    }
    if (d.semiprime) outcome_ok(v, checks::aC25Sep23(d), r->label() + " aC25Sep23");
  }
  v.note << semiprime << " semiprime rings, " << comm << " commutative rings";
}

void c7(Verdict& v) {
  long long radicals = 0, mins = 0;
  for (const auto& r : finite_up_to(12)) {
    const auto lat = all_ideals(r);
    const auto m = min_primes(lat);
    ++radicals;
    v.require(intersection_of(r, m).members == strongly_nilpotent_elements(*r), r->label() + " radical");
    if (r->order() > 8) continue;
    ++mins;
    std::vector<std::uint64_t> a, b, c;
    for (const auto& p : m) a.push_back(p.members.bits());
    for (const auto& p : min_primes_by_lattice(lat)) b.push_back(p.members.bits());
    c = oracle::min_primes(*r);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::sort(c.begin(), c.end());
    v.require(a == b && a == c, r->label() + " min primes");
  }
  v.note << radicals << " radical comparisons, " << mins << " min-prime comparisons";
}

void c8(Verdict& v) {
  long long rings = 0, sets = 0;
  for (const auto& r : finite_up_to(16)) {
    ++rings;
    v.require(units(*r) == regular_elements(*r), r->label() + " units = regular");
    const auto d = prepare_finite(r);
    for (const auto& l : d.locs) {
      ++sets;
      v.require(l.loc.sigma.image(l.loc.set.members).subset_of(units(*l.loc.target)), r->label() + " sigma(S)");
    }
    const auto pr = is_prime_rich(d.lat);
    v.require(pr.prime_rich, r->label() + " prime rich");
    for (const auto& e : pr.entries)
      v.require(e.exponent && *e.exponent <= r->order(), r->label() + " exponent bound");
  }
  v.note << rings << " rings, " << sets << " denominator sets";
}

void c9(Verdict& v) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteOptions one, two;
  two.jobs = 2;
  const auto a = run_suite(corpus(), one);
  const double secs = seconds_since(t0);
  const auto b = run_suite(corpus(), two);
  v.require(secs < 600, "suite over 10 min");
  v.require(to_json(a).dump() == to_json(b).dump(), "machine output differs between 1 and 2 jobs");
  v.require(a.errors.empty(), "engine errors");

  int roundtrips = 0;
  const auto c = corpus();
  for (std::size_t k = 0; k < c.size() && roundtrips < 50; k += c.size() / 50 + 1, ++roundtrips) {
    const auto e = dsl::parse_ring_expr(c[k].recipe);
    v.require(dsl::parse_ring_expr(dsl::render(e)) == e && dsl::render(e) == c[k].recipe, c[k].recipe + " round trip");
  }
  for (const char* s : {"prod( zmod(2) , gf(3) )", "quot(prod(gf(2), gf(2)), gens=[1])", "tri(2, gf(2))",
                        "mat(2, gf(2))", "mono(vars=[y, z], gens=[y^2*z, y*z^2])", "an(n=2, m=4, d=5)"})
    if (roundtrips < 50) {
      ++roundtrips;
      const auto e = dsl::parse_ring_expr(s);
      v.require(dsl::parse_ring_expr(dsl::render(e)) == e, std::string(s) + " round trip");
    }
  v.require(roundtrips == 50, "round-trip corpus size");

  const auto st = fault_selftest();
  v.require(st.ok(), "fault self-test");
  v.note << "suite " << secs << " s over " << a.instances << " instances (" << a.counterexample_count()
         << " counterexamples), " << roundtrips << " round trips, self-test " << st.result.counterexample_count()
         << " counterexample";
}

}  // namespace

int main() {
  struct Item {
    int id;
    const char* title;
    std::function<void(Verdict&, std::vector<std::string>&)> run;
  };
  const std::vector<Item> items{
      {1, "A11Sep23 five-way equivalence, order <= 12", [](Verdict& v, auto&) { c1(v); }},
      {2, "A10Sep23.(2) on squarefree monomial ideals", [](Verdict& v, auto&) { c2(v); }},
      {3, "28Sep23 and b28Sep23 on semiprime rings, order <= 12", [](Verdict& v, auto&) { c3(v); }},
      {4, "A2Oct23.(4a) on A_n and monomial rings", [](Verdict& v, auto&) { c4(v); }},
      {5, "b29Sep23 at bounded degree", [](Verdict& v, auto& e) { c5(v, e); }},
      {6, "C25Sep23/B25Sep23/A25Sep23/aC25Sep23, order <= 16", [](Verdict& v, auto&) { c6(v); }},
      {7, "radical and minimal-prime oracles", [](Verdict& v, auto&) { c7(v); }},
      {8, "units, sigma(S), prime richness", [](Verdict& v, auto&) { c8(v); }},
      {9, "suite runtime, determinism, round trip, self-test", [](Verdict& v, auto&) { c9(v); }},
  };
  const double limits[] = {0, 300, 60, 0, 120, 0, 0, 0, 0, 600};
  int unexpected = 0;
  for (const auto& it : items) {
    Verdict v;
    std::vector<std::string> extra;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      it.run(v, extra);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    if (limits[it.id] > 0) v.require(secs < limits[it.id], "time limit");
    std::printf("%s criterion %d: %s (%s; %.2f s)\n", v.pass ? "PASS" : "FAIL", it.id, it.title,
                v.note.str().c_str(), secs);
    for (const auto& line : extra) std::printf("%s\n", line.c_str());
    if (!v.pass && !kKnownFailures.count(it.id)) ++unexpected;
    std::fflush(stdout);
  }
  return unexpected ? 1 : 0;
}
