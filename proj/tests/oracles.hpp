#pragma once

// Brute-force reference computations used by the tests. They read only the raw
// operation tables, never the engine's own ideal or localization code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "locprime/finring.hpp"

namespace oracle {

using locprime::Elem;
using locprime::RingTable;

inline Elem by_name(const RingTable& r, const std::string& name) {
  for (Elem e = 0; e < r.order(); ++e)
    if (r.name(e) == name) return e;
  throw std::runtime_error("no element named " + name);
}

inline bool has(std::uint64_t bits, Elem e) { return (bits >> e) & 1U; }

/// Every two-sided ideal as a bitmask, by scanning all subsets containing 0.
inline std::vector<std::uint64_t> ideals(const RingTable& r) {
  const int n = r.order();
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!has(s, r.zero())) continue;
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) {
      if (!has(s, a)) continue;
      for (Elem b = 0; b < n && ok; ++b) {
        if (has(s, b) && !has(s, r.sub(a, b))) ok = false;
        if (!has(s, r.mul(a, b)) || !has(s, r.mul(b, a))) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

/// aRb in P implies a in P or b in P.
inline bool prime(const RingTable& r, std::uint64_t p) {
  const int n = r.order();
  if (p == (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1)) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (has(p, a) || has(p, b)) continue;
      bool inside = true;
      for (Elem x = 0; x < n && inside; ++x) inside = has(p, r.mul(r.mul(a, x), b));
      if (inside) return false;
    }
  return true;
}

inline std::vector<std::uint64_t> min_primes(const RingTable& r) {
  std::vector<std::uint64_t> primes;
  for (auto s : ideals(r))
    if (prime(r, s)) primes.push_back(s);
  std::vector<std::uint64_t> out;
  for (auto p : primes) {
    bool minimal = true;
    for (auto q : primes)
      if (q != p && (q & p) == q) minimal = false;
    if (minimal) out.push_back(p);
  }
  return out;
}

/// Submonoids of (R, *) that avoid 0, by scanning subsets of the nonzero elements.
inline std::vector<std::uint64_t> mult_sets(const RingTable& r) {
  const int n = r.order();
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!has(s, r.one()) || has(s, r.zero())) continue;
    bool closed = true;
    for (Elem a = 0; a < n && closed; ++a)
      for (Elem b = 0; b < n && closed; ++b)
        if (has(s, a) && has(s, b) && !has(s, r.mul(a, b))) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

/// An isomorphism a -> b found by backtracking over bijections.
inline bool isomorphic(const RingTable& a, const RingTable& b) {
  const int n = a.order();
  if (n != b.order() || a.is_commutative() != b.is_commutative()) return false;
  std::vector<int> f(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto consistent = [&](Elem k) {
    for (Elem x = 0; x <= k; ++x)
      for (Elem y = 0; y <= k; ++y) {
        const Elem s = a.add(x, y), p = a.mul(x, y);
        if (s <= k && f[s] != b.add(f[x], f[y])) return false;
        if (p <= k && f[p] != b.mul(f[x], f[y])) return false;
      }
    return true;
  };
  auto go = [&](auto&& self, Elem k) -> bool {
    if (k == n) return true;
    for (Elem c = 0; c < n; ++c) {
      if (used[c]) continue;
      if ((k == a.zero()) != (c == b.zero()) || (k == a.one()) != (c == b.one())) continue;
      f[k] = c;
      used[c] = true;
      if (consistent(k) && self(self, k + 1)) return true;
      used[c] = false;
    }
    f[k] = -1;
    return false;
  };
  return go(go, 0);
}

}  // namespace oracle
