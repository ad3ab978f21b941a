#pragma once

// Deterministic instance corpus. Every instance is rebuilt from its recipe text.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dsl.hpp"

namespace locprime {

enum class InstanceKind { finite, commutative_monomial, an_algebra };

inline const char* to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::finite: return "finite";
    case InstanceKind::commutative_monomial: return "monomial";
    case InstanceKind::an_algebra: return "an";
  }
  return "?";
}

struct Fault {
  Elem a = 0, b = 0, value = 0;  // mul(a, b) overwritten with value
};

struct Instance {
  std::string recipe;
  InstanceKind kind = InstanceKind::finite;
  RingPtr ring;
  std::optional<mono::CommMonomialRing> comm;
  std::optional<mono::AnAlgebra> an;
  std::uint64_t seed = 1;
  std::optional<Fault> fault;

  std::string provenance() const {
    std::string s = recipe;
    if (fault)
      s += " with mul(" + std::to_string(fault->a) + "," + std::to_string(fault->b) + ")=" + std::to_string(fault->value);
    return s;
  }
};

inline Instance instance_from_recipe(const std::string& recipe, std::uint64_t seed, int cap = kMaxSupportedOrder) {
  dsl::Evaluated e = dsl::evaluate(recipe, cap);
  Instance in{recipe};
  in.seed = seed;
  if (e.finite) {
    in.kind = InstanceKind::finite;
    in.ring = e.finite;
  } else if (e.comm) {
    in.kind = InstanceKind::commutative_monomial;
    in.comm = e.comm;
  } else {
    in.kind = InstanceKind::an_algebra;
    in.an = e.an;
  }
  return in;
}

/// Copy of a finite instance whose multiplication table has one corrupted cell.
inline Instance inject_fault(const Instance& in, Fault f) {
  if (!in.ring) throw Error(ErrorCode::invalid_argument, "fault injection needs a finite instance");
  Instance out = in;
  out.ring = with_corrupted_cell(*in.ring, f.a, f.b, f.value);
  out.fault = f;
  return out;
}

struct CorpusConfig {
  int order_cap = kDefaultOrderCap;
  std::vector<std::string> allow{"zmod", "gf", "mat", "tri", "prod", "quot", "mono", "an"};
  std::uint64_t seed = 1;
};

namespace detail {

/// Constructor names appearing in a recipe.
inline void collect_ctors(const dsl::RingExpr& e, std::set<std::string>& out) {
  out.insert(e.ctor);
  auto walk = [&](auto&& self, const dsl::Value& v) -> void {
    if (v.kind == dsl::Value::Kind::expr) collect_ctors(*v.expr, out);
    for (const auto& i : v.items) self(self, i);
  };
  for (const auto& v : e.positional) walk(walk, v);
  for (const auto& kv : e.named) walk(walk, kv.second);
}

inline std::string join_ids(const std::vector<Elem>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s;
}

/// Squarefree monomial ideals in n variables: antichains of non-empty supports.
inline std::vector<std::string> squarefree_recipes(int n) {
  std::vector<mono::Mask> supports;
  for (mono::Mask m = 1; m < (mono::Mask{1} << n); ++m) supports.push_back(m);
  std::vector<std::string> out;
  const std::size_t k = supports.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
    std::vector<mono::Mask> chosen;
    for (std::size_t i = 0; i < k; ++i)
      if (pick & (std::uint64_t{1} << i)) chosen.push_back(supports[i]);
    bool antichain = true;
    for (auto a : chosen)
      for (auto b : chosen)
        if (a != b && (a & b) == a) antichain = false;
    if (!antichain) continue;
    std::string gens;
    for (std::size_t g = 0; g < chosen.size(); ++g) {
      std::string m;
      for (int v = 0; v < n; ++v)
        if (chosen[g] & (mono::Mask{1} << v)) m += (m.empty() ? "v" : "*v") + std::to_string(v + 1);
      gens += (g ? ", " : "") + m;
    }
    out.push_back("mono(vars=" + std::to_string(n) + ", gens=[" + gens + "])");
  }
  return out;
}

}  // namespace detail

inline std::vector<Instance> build_corpus(const CorpusConfig& cfg) {
  if (cfg.order_cap < 2 || cfg.order_cap > kMaxSupportedOrder)
    throw Error(ErrorCode::invalid_argument,
                "order cap " + std::to_string(cfg.order_cap) + " outside 2.." + std::to_string(kMaxSupportedOrder));
  std::vector<std::string> recipes;
  std::set<std::string> seen;
  auto allowed = [&](const std::string& recipe) {
    std::set<std::string> used;
    detail::collect_ctors(dsl::parse_ring_expr(recipe), used);
    for (const auto& c : used)
      if (std::find(cfg.allow.begin(), cfg.allow.end(), c) == cfg.allow.end()) return false;
    return true;
  };
  auto add = [&](const std::string& r) {
    if (seen.insert(r).second && allowed(r)) recipes.push_back(r);
  };

  std::vector<std::pair<std::string, RingPtr>> bases;
  auto base = [&](const std::string& r) {
    try {
      bases.emplace_back(r, dsl::evaluate(r, cfg.order_cap).finite);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::size_limit) throw;
    }
  };
  for (int n = 2; n <= std::min(16, cfg.order_cap); ++n) base("zmod(" + std::to_string(n) + ")");
  for (int q : {2, 3, 4}) base("gf(" + std::to_string(q) + ")");
  base("mat(2, gf(2))");
  base("tri(2, gf(2))");
  base("tri(2, gf(3))");

  std::vector<std::pair<std::string, RingPtr>> rings = bases;
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = i; j < bases.size(); ++j)
      if (bases[i].second->order() * bases[j].second->order() <= cfg.order_cap) {
        const std::string r = "prod(" + bases[i].first + ", " + bases[j].first + ")";
        rings.emplace_back(r, make_product(*bases[i].second, *bases[j].second, cfg.order_cap));
      }
  for (const auto& [r, ring] : rings) add(r);
  for (const auto& [r, ring] : rings) {
    for (const auto& i : all_ideals(ring).ideals) {
      if (i.is_zero() || i.is_whole()) continue;
      add("quot(" + r + ", gens=[" + detail::join_ids(ideal_generators(i)) + "])");
    }
  }

  for (int n = 1; n <= 3; ++n)
    for (const auto& r : detail::squarefree_recipes(n)) add(r);
  for (const char* r : {"mono(vars=1, gens=[v1^2])", "mono(vars=2, gens=[v1^2*v2, v1*v2^2])",
                        "mono(vars=2, gens=[v1^2*v2^2])", "mono(vars=3, gens=[v1^2*v2, v2*v3^2])",
                        "mono(vars=3, gens=[v1^3, v1*v2*v3])"})
    add(r);
  for (int n = 1; n <= 3; ++n) {
    add("an(n=" + std::to_string(n) + ")");
    add("an(n=" + std::to_string(n) + ", m=" + std::to_string(n + 2) + ")");
  }

  std::vector<Instance> out;
  for (const auto& r : recipes) out.push_back(instance_from_recipe(r, cfg.seed, cfg.order_cap));
  return out;
}

}  // namespace locprime
