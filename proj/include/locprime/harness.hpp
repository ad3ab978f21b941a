#pragma once

// Suite runner: axiom audit, theorem checks over a corpus, reports.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "checks.hpp"

namespace locprime {

inline constexpr const char* kAxiomsId = "axioms";

struct Counterexample {
  std::string theorem_id;
  std::string recipe;
  std::uint64_t seed = 1;
  std::optional<Fault> fault;
  std::string provenance;
  std::string clause;                 // first failed clause
  std::vector<Failure> failures;      // every failed clause with its witness
};

struct CheckReport {
  std::string theorem_id;
  std::string kind;
  std::string statement;
  std::string coverage;               // registry annotation
  long long considered = 0;
  long long applicable = 0;
  long long passed = 0;
  long long cases = 0;
  std::map<std::string, long long> applicable_by_track;  // which track produced substantive coverage
  std::vector<Counterexample> counterexamples;
  double wall_ms = 0;

  bool consistent() const { return applicable == passed + static_cast<long long>(counterexamples.size()); }
};

struct EngineError {
  std::string theorem_id;
  std::string provenance;
  std::string message;
};

struct SuiteOptions {
  std::vector<std::string> ids;  // empty: every registered check
  bool finite_track = true;
  bool monomial_track = true;
  int jobs = 1;
  double budget_seconds = 0;     // 0: unlimited
};

struct SuiteResult {
  std::vector<CheckReport> reports;  // axioms first, then registry order
  std::vector<EngineError> errors;
  std::vector<std::string> coverage_missing;
  bool budget_exceeded = false;
  long long instances = 0;
  double wall_ms = 0;

  long long counterexample_count() const {
    long long n = 0;
    for (const auto& r : reports) n += static_cast<long long>(r.counterexamples.size());
    return n;
  }
  bool clean() const { return counterexample_count() == 0 && errors.empty() && !budget_exceeded; }
};

/// Resolves a suite name or comma-separated id list to registry indices.
inline std::vector<std::size_t> resolve_ids(const std::vector<TheoremCheck>& reg, const std::vector<std::string>& ids) {
  std::vector<std::size_t> out;
  if (ids.empty()) {
    for (std::size_t i = 0; i < reg.size(); ++i) out.push_back(i);
    return out;
  }
  for (const auto& id : ids) {
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < reg.size() && !hit; ++i) {
      if (reg[i].id == id) hit = i;
      for (const auto& a : reg[i].aliases)
        if (a == id) hit = i;
    }
    if (!hit) throw Error(ErrorCode::unknown_theorem, "no check registered for '" + id + "'");
    if (std::find(out.begin(), out.end(), *hit) == out.end()) out.push_back(*hit);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

struct CellResult {
  bool ran = false;
  Outcome outcome;
  std::string track;
  std::optional<std::string> error;
  double ms = 0;
};

struct InstanceResult {
  bool skipped = false;                 // budget exhausted before this instance
  bool in_track = true;                 // instance kind selected by the options
  std::optional<std::string> audit_failure;
  std::vector<CellResult> cells;        // parallel to the selected checks
};

inline InstanceResult run_instance(const Instance& in, const std::vector<const TheoremCheck*>& sel,
                                   const SuiteOptions& opt) {
  using clock = std::chrono::steady_clock;
  InstanceResult res;
  res.cells.resize(sel.size());
  if (in.ring) {
    if (auto bad = audit(*in.ring)) {
      res.audit_failure = *bad;
      return res;  // a table that is not a ring never reaches the theorem checks
    }
  }
  const bool finite = in.kind == InstanceKind::finite;
  if (finite ? !opt.finite_track : !opt.monomial_track) {
    res.in_track = false;
    return res;
  }
  std::optional<FiniteData> fd;
  std::optional<std::string> prep_error;
  if (finite) {
    try {
      fd = prepare_finite(in.ring);
    } catch (const std::exception& e) {
      prep_error = e.what();
    }
  }
  for (std::size_t k = 0; k < sel.size(); ++k) {
    const TheoremCheck& c = *sel[k];
    CellResult& cell = res.cells[k];
    const auto t0 = clock::now();
    try {
      if (finite && c.finite) {
        cell.ran = true;
        cell.track = "finite";
        if (prep_error) throw Error(ErrorCode::internal, *prep_error);
        cell.outcome = c.finite(*fd);
      } else if (in.comm && c.comm) {
        cell.ran = true;
        cell.track = "monomial";
        cell.outcome = c.comm(*in.comm);
      } else if (in.an && c.an) {
        cell.ran = true;
        cell.track = "an";
        cell.outcome = c.an(*in.an, in.seed);
      }
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
    cell.ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  }
  return res;
}

}  // namespace detail

inline SuiteResult run_suite(const std::vector<Instance>& corpus, const SuiteOptions& opt = {}) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  static const std::vector<TheoremCheck> registry = build_registry();
  SuiteResult out;
  out.coverage_missing = coverage_gaps(registry);
  if (!out.coverage_missing.empty()) {
    std::string m;
    for (const auto& s : out.coverage_missing) m += " " + s;
    throw Error(ErrorCode::internal, "registry misses in-scope labels:" + m);
  }
  const auto idx = resolve_ids(registry, opt.ids);
  std::vector<const TheoremCheck*> sel;
  for (auto i : idx) sel.push_back(&registry[i]);

  std::vector<detail::InstanceResult> results(corpus.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> over_budget{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      if (opt.budget_seconds > 0 &&
          std::chrono::duration<double>(clock::now() - start).count() > opt.budget_seconds) {
        over_budget = true;
        results[i].skipped = true;
        continue;
      }
      results[i] = detail::run_instance(corpus[i], sel, opt);
    }
  };
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CheckReport axioms{kAxiomsId, "Audit", "tables satisfy the ring axioms", "finite"};
  std::vector<CheckReport> reports;
  for (const auto* c : sel) reports.push_back({c->id, c->kind, c->statement, c->coverage});

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Instance& in = corpus[i];
    const auto& r = results[i];
    if (r.skipped) continue;
    if (r.in_track) ++out.instances;
    if (in.ring) {
      ++axioms.considered;
      ++axioms.applicable;
      ++axioms.cases;
      ++axioms.applicable_by_track["finite"];
      if (r.audit_failure) {
        axioms.counterexamples.push_back({kAxiomsId, in.recipe, in.seed, in.fault, in.provenance(),
                                          "ring axioms hold", {{"ring axioms hold", *r.audit_failure}}});
        continue;
      }
      ++axioms.passed;
    }
    for (std::size_t k = 0; k < sel.size(); ++k) {
      const auto& cell = r.cells[k];
      CheckReport& rep = reports[k];
      rep.wall_ms += cell.ms;
      if (cell.error) {
        ++rep.considered;
        out.errors.push_back({sel[k]->id, in.provenance(), *cell.error});
        continue;
      }
      if (!cell.ran) continue;
      ++rep.considered;
      if (!cell.outcome.applicable) continue;
      ++rep.applicable;
      ++rep.applicable_by_track[cell.track];
      rep.cases += cell.outcome.cases;
      if (cell.outcome.failures.empty()) {
        ++rep.passed;
      } else {
        rep.counterexamples.push_back({sel[k]->id, in.recipe, in.seed, in.fault, in.provenance(),
                                       cell.outcome.failures.front().clause, cell.outcome.failures});
      }
    }
  }
  out.budget_exceeded = over_budget;
  out.reports.push_back(std::move(axioms));
  for (auto& rep : reports) out.reports.push_back(std::move(rep));
  out.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  return out;
}

inline SuiteResult run_suite(const std::vector<Instance>& corpus, const std::vector<std::string>& ids, int jobs = 1) {
  SuiteOptions opt;
  opt.ids = ids;
  opt.jobs = jobs;
  return run_suite(corpus, opt);
}

// ---------------------------------------------------------------------------
// Rendering

inline std::string explain(const CheckReport& report, std::size_t index) {
  if (index >= report.counterexamples.size())
    throw Error(ErrorCode::index_out_of_range, "counterexample " + std::to_string(index) + " of " +
                                                   std::to_string(report.counterexamples.size()) + " for " +
                                                   report.theorem_id);
  const Counterexample& cx = report.counterexamples[index];
  std::ostringstream os;
  os << "theorem: " << cx.theorem_id << "\n";
  os << "instance: " << cx.provenance << " (seed " << cx.seed << ")\n";
  os << "failed clause: " << cx.clause << "\n";
  try {
    Instance in = instance_from_recipe(cx.recipe, cx.seed);
    if (cx.fault) in = inject_fault(in, *cx.fault);
    if (in.ring) {
      os << "ring: order " << in.ring->order() << (in.ring->is_commutative() ? ", commutative" : "") << "\n";
      if (!audit(*in.ring)) {
        const auto lat = all_ideals(in.ring);
        os << "ideals: " << detail::ideals_str(lat.ideals) << "\n";
        os << "min primes: " << detail::ideals_str(min_primes(lat)) << "\n";
      }
    } else if (in.comm) {
      os << "ring: " << in.comm->to_string() << "\n";
    } else if (in.an) {
      os << "ring: A_" << in.an->n << " (m=" << in.an->m << ", degree " << in.an->d << ")\n";
    }
  } catch (const std::exception& e) {
    os << "instance could not be rebuilt: " << e.what() << "\n";
  }
  for (const auto& f : cx.failures) os << "  - " << f.clause << ": " << f.detail << "\n";
  return os.str();
}

inline std::string render_text(const CheckReport& r) {
  std::ostringstream os;
  os << r.theorem_id << ": considered " << r.considered << ", applicable " << r.applicable << ", passed " << r.passed
     << ", counterexamples " << r.counterexamples.size() << "\n";
  if (r.counterexamples.empty()) os << "  no counterexamples\n";
  for (std::size_t i = 0; i < r.counterexamples.size(); ++i)
    os << "  [" << i << "] " << r.counterexamples[i].provenance << ": " << r.counterexamples[i].clause << "\n";
  return os.str();
}

inline std::string render_text(const SuiteResult& s) {
  std::ostringstream os;
  char line[200];
  std::snprintf(line, sizeof line, "%-10s %10s %10s %8s %8s  %s\n", "theorem", "considered", "applicable", "passed",
                "failed", "coverage");
  os << line;
  for (const auto& r : s.reports) {
    std::string tracks;
    for (const auto& [t, n] : r.applicable_by_track) tracks += (tracks.empty() ? "" : ", ") + t + " " + std::to_string(n);
    std::snprintf(line, sizeof line, "%-10s %10lld %10lld %8lld %8zu  %s\n", r.theorem_id.c_str(), r.considered,
                  r.applicable, r.passed, r.counterexamples.size(), tracks.empty() ? "-" : tracks.c_str());
    os << line;
  }
  os << "\n";
  for (const auto& r : s.reports)
    for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
      os << "COUNTEREXAMPLE (engine or statement defect)\n";
      os << explain(r, i);
    }
  for (const auto& e : s.errors) os << "ENGINE ERROR " << e.theorem_id << " on " << e.provenance << ": " << e.message << "\n";
  if (s.budget_exceeded) os << "budget exceeded: some instances were skipped\n";
  os << "instances " << s.instances << ", counterexamples " << s.counterexample_count() << ", engine errors "
     << s.errors.size() << "\n";
  return os.str();
}

/// Machine format. Field names are stable; wall time is omitted so output is reproducible.
inline nlohmann::ordered_json to_json(const SuiteResult& s) {
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const auto& r : s.reports) {
    nlohmann::ordered_json cxs = nlohmann::ordered_json::array();
    for (const auto& c : r.counterexamples) {
      nlohmann::ordered_json fails = nlohmann::ordered_json::array();
      for (const auto& f : c.failures) fails.push_back({{"clause", f.clause}, {"detail", f.detail}});
      cxs.push_back({{"provenance", c.provenance}, {"recipe", c.recipe}, {"seed", c.seed}, {"clause", c.clause},
                     {"failures", fails}});
    }
    nlohmann::ordered_json tracks = nlohmann::ordered_json::object();
    for (const auto& [t, n] : r.applicable_by_track) tracks[t] = n;
    reports.push_back({{"theorem_id", r.theorem_id},
                       {"kind", r.kind},
                       {"considered", r.considered},
                       {"applicable", r.applicable},
                       {"passed", r.passed},
                       {"cases", r.cases},
                       {"coverage", r.coverage},
                       {"applicable_by_track", tracks},
                       {"counterexamples", cxs}});
  }
  nlohmann::ordered_json errors = nlohmann::ordered_json::array();
  for (const auto& e : s.errors)
    errors.push_back({{"theorem_id", e.theorem_id}, {"provenance", e.provenance}, {"message", e.message}});
  return {{"instances", s.instances},
          {"counterexamples", s.counterexample_count()},
          {"budget_exceeded", s.budget_exceeded},
          {"coverage_missing", s.coverage_missing},
          {"engine_errors", errors},
          {"reports", reports}};
}

// ---------------------------------------------------------------------------
// Fault-injection self-test

struct SelfTest {
  Instance faulty;
  SuiteResult result;
  bool ok() const {
    return result.counterexample_count() == 1 && result.reports.front().theorem_id == kAxiomsId &&
           result.reports.front().counterexamples.size() == 1;
  }
};

/// Corrupts one multiplication cell of zmod(5) and runs every check on it.
inline SelfTest fault_selftest(std::uint64_t seed = 1, int jobs = 1) {
  Instance base = instance_from_recipe("zmod(5)", seed);
  SelfTest t{inject_fault(base, Fault{2, 3, 2}), {}};
  SuiteOptions opt;
  opt.jobs = jobs;
  t.result = run_suite({t.faulty}, opt);
  return t;
}

}  // namespace locprime
