// locprime: command-line front end for the engine.
//
// Exit codes: 0 clean, 1 counterexample or engine error during verify,
// 2 usage/parse/evaluation error, 3 verify budget exceeded.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "locprime/harness.hpp"

using namespace locprime;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

/// Ideals ordered by their generator lists.
std::string list_ideals(std::vector<Ideal> v) {
  std::sort(v.begin(), v.end(), [](const Ideal& a, const Ideal& b) { return ideal_generators(a) < ideal_generators(b); });
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + describe_ideal(v[i]);
  return s.empty() ? "(none)" : s;
}

std::string named(const RingTable& t, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem e) {
    out += (first ? "" : ", ") + t.name(e);
    first = false;
  });
  return out + "}";
}

RingPtr finite_ring(const std::string& expr, int cap) {
  auto e = dsl::evaluate(expr, cap);
  if (!e.finite) throw Error(ErrorCode::invalid_argument, expr + " is not a finite ring; use the mono or an commands");
  return e.finite;
}

ElementSet parse_gens(const RingPtr& r, const std::vector<int>& gens) {
  ElementSet s(r->order());
  for (int g : gens) {
    if (g < 0 || g >= r->order())
      throw Error(ErrorCode::index_out_of_range, "element id " + std::to_string(g) + " outside 0.." +
                                                     std::to_string(r->order() - 1));
    s.insert(static_cast<Elem>(g));
  }
  return s;
}

void print_describe(const RingPtr& r) {
  const RingTable& t = *r;
  const auto lat = all_ideals(r);
  std::cout << "ring: " << t.label() << "\n";
  std::cout << "order: " << t.order() << "\n";
  std::cout << "commutative: " << (t.is_commutative() ? "yes" : "no") << "\n";
  std::cout << "units: " << named(t, units(t)) << "\n";
  std::cout << "centre: " << named(t, centre_set(t)) << "\n";
  std::cout << "semiprime: " << (is_semiprime_ring(lat) ? "yes" : "no") << "\n";
  std::cout << "elements:\n";
  for (Elem e = 0; e < t.order(); ++e) std::cout << "  " << e << " = " << t.name(e) << "\n";
}

void print_localization(const Localization& l) {
  const auto lat = all_ideals(l.source);
  const auto mins = min_primes(lat);
  const auto rs = min_RS(mins, l.set);
  const auto tmins = min_primes(all_ideals(l.target));
  std::cout << "S: " << named(*l.source, l.set.members) << "\n";
  std::cout << "ass: " << describe_ideal(l.ass) << "\n";
  std::cout << "target order: " << l.target->order() << "\n";
  std::cout << "min_RS: {" << list_ideals(rs) << "}\n";
  std::cout << "localized primes:";
  for (const auto& p : rs) {
    auto sp = localize_left_ideal(l, p);
    std::cout << " " << describe_ideal(p) << " -> " << named(*l.target, sp.target)
              << (sp.two_sided ? "" : " (left ideal only)");
  }
  std::cout << "\nmin primes of target: " << list_ideals(tmins) << "\n";
}

mono::Mask parse_vars(const mono::CommMonomialRing& r, const std::vector<std::string>& vars) {
  mono::Mask m = 0;
  for (const auto& v : vars) {
    auto it = std::find(r.names.begin(), r.names.end(), v);
    if (it == r.names.end()) throw Error(ErrorCode::invalid_argument, "unknown variable '" + v + "'");
    m |= mono::Mask{1} << (it - r.names.begin());
  }
  return m;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal primes of localizations of finite and monomial rings"};
  app.require_subcommand(1);
  app.fallthrough();
  int cap = kDefaultOrderCap;
  app.add_option("--max-order", cap, "order cap for finite rings")->check(CLI::Range(2, kMaxSupportedOrder));

  std::string expr;
  std::vector<int> gens;
  auto with_expr = [&](CLI::App* sub) { sub->add_option("expr", expr, "ring expression")->required(); };

  auto* describe = app.add_subcommand("describe", "order, units, centre, semiprime flag, element ids");
  with_expr(describe);
  auto* ideals = app.add_subcommand("ideals", "two-sided ideals");
  with_expr(ideals);
  auto* minprimes = app.add_subcommand("minprimes", "minimal prime ideals");
  with_expr(minprimes);
  auto* multsets = app.add_subcommand("multsets", "multiplicative sets with their classification");
  with_expr(multsets);
  auto* classify = app.add_subcommand("classify-set", "classify the multiplicative set generated by --gens");
  with_expr(classify);
  classify->add_option("--gens", gens, "element ids")->delimiter(',')->required();
  auto* loc = app.add_subcommand("localize", "localize at the set generated by --gens");
  with_expr(loc);
  loc->add_option("--gens", gens, "element ids")->delimiter(',')->required();
  bool normal = false;
  loc->add_flag("--normal", normal, "use R<S^-1> for normal generators");
  auto* centre = app.add_subcommand("centre", "centre and its primes");
  with_expr(centre);
  auto* rho_cmd = app.add_subcommand("rho", "restriction of primes to the centre");
  with_expr(rho_cmd);

  auto* mono_cmd = app.add_subcommand("mono", "commutative monomial quotients");
  mono_cmd->require_subcommand(1);
  auto* mono_min = mono_cmd->add_subcommand("minprimes", "minimal primes of a monomial ideal");
  with_expr(mono_min);
  auto* mono_loc = mono_cmd->add_subcommand("localize", "invert the variables --vars");
  with_expr(mono_loc);
  std::vector<std::string> vars;
  mono_loc->add_option("--vars", vars, "variables to invert")->delimiter(',')->required();

  auto* an_cmd = app.add_subcommand("an", "the algebras A_n");
  an_cmd->require_subcommand(1);
  auto* an_ver = an_cmd->add_subcommand("verify", "check the A_n statements to a degree bound");
  int an_n = 1, an_d = 0, an_m = -1;
  std::uint64_t seed = 1;
  an_ver->add_option("--n", an_n, "index n")->check(CLI::Range(1, mono::kMaxAnIndex))->required();
  an_ver->add_option("--degree", an_d, "degree bound (0: default)")->check(CLI::Range(0, mono::kMaxAnDegree));
  an_ver->add_option("--m", an_m, "number of free x generators, n..n+3 (default n)");
  an_ver->add_option("--seed", seed, "sampling seed");

  auto* verify = app.add_subcommand("verify", "run the theorem checks over the corpus");
  std::string suite = "all", format = "text";
  int jobs = 1;
  double budget = 0;
  bool no_selftest = false;
  verify->add_option("--suite", suite, "all | finite | monomial | id,id,...");
  verify->add_option("--seed", seed, "corpus seed");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--format", format, "text | machine")->check(CLI::IsMember({"text", "machine"}));
  verify->add_option("--budget", budget, "wall-clock budget in seconds (0: none)");
  verify->add_flag("--no-selftest", no_selftest, "skip the fault-injection self-test");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitClean : kExitUsage;
  }

  try {
    if (*describe) {
      print_describe(finite_ring(expr, cap));
    } else if (*ideals) {
      auto r = finite_ring(expr, cap);
      for (const auto& i : all_ideals(r).ideals) {
        auto rep = classify_ideal(i);
        std::cout << describe_ideal(i) << " = " << named(*r, i.members)
                  << (rep.is_prime ? " prime" : "") << (rep.is_completely_prime ? " completely-prime" : "")
                  << (rep.is_semiprime_ideal ? " semiprime" : "") << "\n";
      }
    } else if (*minprimes) {
      auto e = dsl::evaluate(expr, cap);
      if (e.finite) {
        std::cout << list_ideals(min_primes(e.finite)) << "\n";
      } else if (e.comm) {
        for (const auto& p : mono::min_primes_monomial(*e.comm))
          std::cout << mono::mask_to_string(p.vars, e.comm->names) << "\n";
      } else {
        for (auto m : mono::an_min_primes(*e.an)) std::cout << mono::subset_to_string(m, e.an->n) << "\n";
      }
    } else if (*multsets) {
      auto r = finite_ring(expr, cap);
      if (r->order() > kExhaustiveMultSetOrder)
        std::cout << "# order above " << kExhaustiveMultSetOrder << ": closures of at most two generators\n";
      for (const auto& s : enumerate_mult_sets(r)) {
        auto c = classify_set(s);
        std::cout << named(*r, s.members) << (c.left_den ? " left-den" : c.left_ore ? " left-ore" : "")
                  << (c.right_den ? " right-den" : c.right_ore ? " right-ore" : "");
        if (c.left_den) std::cout << " ass_l=" << describe_ideal(Ideal{r, c.ass_l, Side::two_sided});
        std::cout << "\n";
      }
    } else if (*classify) {
      auto r = finite_ring(expr, cap);
      auto s = close_multiplicative(r, parse_gens(r, gens));
      auto c = classify_set(s);
      std::cout << "S: " << named(*r, s.members) << "\n";
      std::cout << "left Ore: " << (c.left_ore ? "yes" : "no") << "\n";
      std::cout << "right Ore: " << (c.right_ore ? "yes" : "no") << "\n";
      std::cout << "left denominator: " << (c.left_den ? "yes" : "no") << "\n";
      std::cout << "right denominator: " << (c.right_den ? "yes" : "no") << "\n";
      std::cout << "ass_l: " << named(*r, c.ass_l) << "\n";
      std::cout << "ass_r: " << named(*r, c.ass_r) << "\n";
      if (!c.left_den) std::cout << "violation: " << c.left_violation << "\n";
    } else if (*loc) {
      auto r = finite_ring(expr, cap);
      const ElementSet g = parse_gens(r, gens);
      print_localization(normal ? localize_normal(r, g) : localize(r, g));
    } else if (*centre) {
      auto r = finite_ring(expr, cap);
      auto cd = centre_ring(r);
      std::cout << "centre: " << named(*r, cd.lift(cd.centre->all())) << " (order " << cd.centre->order() << ")\n";
      std::cout << "primes of the centre:";
      for (const auto& q : prime_ideals(all_ideals(cd.centre))) std::cout << " " << named(*r, cd.lift(q.members));
      std::cout << "\n";
    } else if (*rho_cmd) {
      auto r = finite_ring(expr, cap);
      auto m = rho(r);
      for (const auto& row : m.table)
        std::cout << describe_ideal(row.prime) << (row.minimal_in_R ? " [min]" : "") << " -> "
                  << named(*r, m.centre.lift(row.centre)) << (row.minimal_in_Z ? " [min]" : "") << "\n";
      std::cout << "rho_min well defined: " << (m.well_defined ? "yes" : "no") << "\n";
      std::cout << "rho_min surjective: " << (m.surjective_onto_min ? "yes" : "no") << "\n";
    } else if (*mono_min) {
      auto e = dsl::evaluate(expr, cap);
      if (!e.comm) throw Error(ErrorCode::invalid_argument, expr + " is not a mono(...) expression");
      for (const auto& p : mono::min_primes_monomial(*e.comm))
        std::cout << mono::mask_to_string(p.vars, e.comm->names) << "\n";
    } else if (*mono_loc) {
      auto e = dsl::evaluate(expr, cap);
      if (!e.comm) throw Error(ErrorCode::invalid_argument, expr + " is not a mono(...) expression");
      std::vector<std::string> vs;
      for (const auto& v : vars)
        for (const auto& x : split_commas(v)) vs.push_back(x);
      auto lm = mono::localize_monomial(*e.comm, parse_vars(*e.comm, vs));
      std::cout << checks::mono_loc_str(lm) << "\n";
      std::cout << "regular V: " << (lm.regular ? "yes" : "no") << "\n";
      std::cout << "bijection min(a) -> min(S^-1 R): " << (lm.bijection ? "yes" : "no") << "\n";
    } else if (*an_ver) {
      auto a = mono::an_build(an_n, an_d, an_m);
      auto o = checks::b29Sep23_an(a, seed);
      std::cout << "A_" << a.n << " with m=" << a.m << ", degree " << a.d << "\n";
      for (mono::Mask v = 1; v < (mono::Mask{1} << a.n); ++v) {
        auto rep = mono::an_localize_normal(a, v);
        std::cout << "localize V=" << mono::subset_to_string(v, a.n) << ": " << (rep.ok() ? "ok" : "FAIL") << "\n";
        if (!rep.ok()) o.failures.push_back({"A2Oct23 (4a)", rep.witness});
      }
      if (o.failures.empty()) std::cout << "all clauses hold\n";
      for (const auto& f : o.failures) std::cout << "FAIL " << f.clause << ": " << f.detail << "\n";
      return o.failures.empty() ? kExitClean : kExitCounterexample;
    } else if (*verify) {
      SuiteOptions opt;
      opt.jobs = jobs;
      opt.budget_seconds = budget;
      if (suite == "finite") {
        opt.monomial_track = false;
        for (const auto& c : build_registry())
          if (c.finite) opt.ids.push_back(c.id);
      } else if (suite == "monomial") {
        opt.finite_track = false;
        for (const auto& c : build_registry())
          if (c.comm || c.an) opt.ids.push_back(c.id);
      } else if (suite != "all") {
        opt.ids = split_commas(suite);
      }
      CorpusConfig cfg;
      cfg.order_cap = cap;
      cfg.seed = seed;
      if (!no_selftest) {
        SelfTest st = fault_selftest(seed);
        if (!st.ok()) {
          std::cerr << "fault-injection self-test failed: expected exactly one counterexample from the axiom audit\n"
                    << render_text(st.result);
          return kExitCounterexample;
        }
      }
      SuiteResult res = run_suite(build_corpus(cfg), opt);
      if (format == "machine") {
        std::cout << to_json(res).dump(2) << "\n";
      } else {
        std::cout << render_text(res);
        char line[64];
        std::snprintf(line, sizeof line, "wall time %.1f s\n", res.wall_ms / 1000.0);
        std::cout << line;
      }
      if (res.budget_exceeded) return kExitBudget;
      return res.clean() ? kExitClean : kExitCounterexample;
    }
  } catch (const dsl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitClean;
}
