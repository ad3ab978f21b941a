#pragma once

// Monomial quotient rings k[v]/I and the algebras A_n = F_m (x) P_n / (x_i z_i).
// Coefficients are taken in GF(2) wherever elementwise checks need them.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace locprime::mono {

using Mask = std::uint32_t;
using Exponents = std::vector<int>;

inline constexpr int kMaxVariables = 16;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask support(const Exponents& e) {
  Mask m = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) m |= Mask{1} << i;
  return m;
}

inline int total_degree(const Exponents& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Drops duplicates and non-minimal generators; sorted by (degree, exponents).
inline std::vector<Exponents> minimize(std::vector<Exponents> gens) {
  std::sort(gens.begin(), gens.end(), [](const Exponents& a, const Exponents& b) {
    const int da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponents> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) redundant = redundant || divides(h, g);
    if (!redundant) out.push_back(g);
  }
  return out;
}

inline std::string mask_to_string(Mask m, const std::vector<std::string>& names) {
  std::string s = "(";
  bool first = true;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (m & (Mask{1} << i)) {
      if (!first) s += ",";
      s += names[i];
      first = false;
    }
  return s + ")";
}

struct CommMonomialRing {
  int n = 0;
  std::vector<Exponents> gens;  // minimal generators of I
  std::vector<std::string> names;
  int degree = 6;               // bound for elementwise scans

  bool is_unit_ideal() const {
    return std::any_of(gens.begin(), gens.end(), [](const Exponents& g) { return total_degree(g) == 0; });
  }
  bool contains(const Exponents& m) const {
    return std::any_of(gens.begin(), gens.end(), [&](const Exponents& g) { return divides(g, m); });
  }
  std::string monomial_to_string(const Exponents& e) const {
    std::string s;
    for (int i = 0; i < n; ++i) {
      if (e[static_cast<std::size_t>(i)] == 0) continue;
      if (!s.empty()) s += "*";
      s += names[static_cast<std::size_t>(i)];
      if (e[static_cast<std::size_t>(i)] > 1) s += "^" + std::to_string(e[static_cast<std::size_t>(i)]);
    }
    return s.empty() ? "1" : s;
  }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + monomial_to_string(gens[i]);
    return s + ")";
  }
};

inline std::vector<std::string> default_names(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("v" + std::to_string(i));
  return v;
}

inline CommMonomialRing make_comm_monomial(int n, std::vector<Exponents> gens, std::vector<std::string> names = {},
                                           int degree = 6) {
  if (n < 0 || n > kMaxVariables)
    throw Error(ErrorCode::size_limit, "variable count " + std::to_string(n) + " outside 0.." +
                                           std::to_string(kMaxVariables));
  if (names.empty()) names = default_names(n);
  if (static_cast<int>(names.size()) != n) throw Error(ErrorCode::invalid_argument, "variable name count mismatch");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != n) throw Error(ErrorCode::invalid_argument, "exponent vector length mismatch");
    for (int e : g)
      if (e < 0) throw Error(ErrorCode::invalid_argument, "negative exponent");
  }
  return CommMonomialRing{n, minimize(std::move(gens)), std::move(names), degree};
}

struct MonomialPrime {
  int n = 0;
  Mask vars = 0;  // the prime is generated by these variables
  bool contains(const Exponents& m) const { return (support(m) & vars) != 0; }
  friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) { return a.n == b.n && a.vars == b.vars; }
};

inline bool cover_order(const MonomialPrime& a, const MonomialPrime& b) {
  const int pa = popcount(a.vars), pb = popcount(b.vars);
  return pa != pb ? pa < pb : a.vars < b.vars;
}

/// Minimal transversals of the support hypergraph (Berge's incremental method).
inline std::vector<MonomialPrime> min_primes_monomial(const CommMonomialRing& r) {
  if (r.is_unit_ideal()) throw Error(ErrorCode::unit_ideal, "ideal " + r.to_string() + " contains 1");
  std::vector<Mask> covers{0};
  for (const auto& g : r.gens) {
    const Mask edge = support(g);
    std::vector<Mask> next;
    for (Mask t : covers) {
      if (t & edge) {
        next.push_back(t);
        continue;
      }
      for (Mask e = edge; e; e &= e - 1) next.push_back(t | (e & -e));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    covers.clear();
    for (Mask t : next) {
      bool minimal = true;
      for (Mask u : next)
        if (u != t && (u & t) == u) minimal = false;
      if (minimal) covers.push_back(t);
    }
  }
  std::vector<MonomialPrime> out;
  for (Mask c : covers) out.push_back({r.n, c});
  std::sort(out.begin(), out.end(), cover_order);
  return out;
}

/// I : (prod V)^infinity by stripping V-exponents.
inline CommMonomialRing saturate_monomial(const CommMonomialRing& r, Mask v) {
  CommMonomialRing s = r;
  for (auto& g : s.gens)
    for (int i = 0; i < r.n; ++i)
      if (v & (Mask{1} << i)) g[static_cast<std::size_t>(i)] = 0;
  s.gens = minimize(std::move(s.gens));
  if (s.is_unit_ideal())
    throw Error(ErrorCode::collapsed_localization,
                "saturation of " + r.to_string() + " by " + mask_to_string(v, r.names) + " is the unit ideal");
  return s;
}

inline CommMonomialRing radical_monomial(const CommMonomialRing& r) {
  CommMonomialRing s = r;
  for (auto& g : s.gens)
    for (auto& e : g) e = e > 0 ? 1 : 0;
  s.gens = minimize(std::move(s.gens));
  return s;
}

inline bool is_squarefree(const CommMonomialRing& r) {
  for (const auto& g : r.gens)
    for (int e : g)
      if (e > 1) return false;
  return true;
}

/// All exponent vectors in n variables of total degree <= d.
inline std::vector<Exponents> monomials_up_to(int n, int d) {
  std::vector<Exponents> out;
  Exponents e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
    e[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, d);
  return out;
}

/// I equals the intersection of its minimal primes on every monomial of degree <= d.
inline bool is_radical_by_scan(const CommMonomialRing& r, int d) {
  const auto mins = min_primes_monomial(r);
  for (const auto& m : monomials_up_to(r.n, d)) {
    bool in_all = std::all_of(mins.begin(), mins.end(), [&](const MonomialPrime& p) { return p.contains(m); });
    if (in_all != r.contains(m)) return false;
  }
  return true;
}

/// Variables lying in no minimal prime; these are regular when I is radical.
inline Mask regular_variables(const CommMonomialRing& r) {
  Mask used = 0;
  for (const auto& p : min_primes_monomial(r)) used |= p.vars;
  const Mask all = r.n == 32 ? ~Mask{0} : ((Mask{1} << r.n) - 1);
  return all & ~used;
}

struct MonoLocalization {
  CommMonomialRing ring;
  Mask v = 0;
  CommMonomialRing saturated;          // I : (prod V)^inf, so ass = saturated / I
  std::vector<MonomialPrime> min_R;
  std::vector<MonomialPrime> min_ass;  // minimal covers of the saturation
  std::vector<MonomialPrime> min_loc;  // minimal primes of R avoiding V
  bool regular = false;                // V consists of regular variables of a radical ideal
  bool bijection = false;              // min_ass and min_loc agree as sets
  bool count_preserved = false;        // |min_loc| = |min_R|, required when regular

  bool ok() const { return bijection && (!regular || count_preserved); }
};

inline MonoLocalization localize_monomial(const CommMonomialRing& r, Mask v) {
  MonoLocalization out{r, v, saturate_monomial(r, v)};
  out.min_R = min_primes_monomial(r);
  out.min_ass = min_primes_monomial(out.saturated);
  for (const auto& p : out.min_R)
    if ((p.vars & v) == 0) out.min_loc.push_back(p);
  out.regular = is_squarefree(r) && (v & ~regular_variables(r)) == 0;
  out.bijection = out.min_ass == out.min_loc;
  out.count_preserved = out.min_loc.size() == out.min_R.size();
  return out;
}

// ---------------------------------------------------------------------------
// A_n: x_1..x_m free, z_1..z_n central, x_i z_i = 0 for i <= n.

inline constexpr int kMaxAnIndex = 4;
inline constexpr int kMaxAnDegree = 8;

inline int default_an_degree(int n) { return n <= 2 ? 6 : n == 3 ? 5 : 4; }

struct AnAlgebra {
  int n = 1;  // index pairs (x_i, z_i)
  int m = 1;  // free x generators, m >= n
  int d = 6;  // degree bound
};

inline AnAlgebra an_build(int n, int d = 0, int m = -1) {
  if (n < 0 || n > kMaxAnIndex)
    throw Error(ErrorCode::size_limit, "A_n needs 0 <= n <= " + std::to_string(kMaxAnIndex));
  if (m < 0) m = n;
  if (m < n || m > n + 3) throw Error(ErrorCode::invalid_argument, "A_n needs n <= m <= n+3");
  if (d <= 0) d = default_an_degree(n);
  if (d > kMaxAnDegree) throw Error(ErrorCode::size_limit, "degree bound above " + std::to_string(kMaxAnDegree));
  return {n, m, d};
}

struct NCMonomial {
  std::vector<int> word;  // 0-based x indices
  std::vector<int> zexp;  // length n
  bool is_zero = false;
  bool overflow = false;  // degree exceeds the algebra's bound

  int degree() const { return static_cast<int>(word.size()) + total_degree(zexp); }
  friend bool operator==(const NCMonomial& a, const NCMonomial& b) {
    return a.is_zero == b.is_zero && (a.is_zero || (a.word == b.word && a.zexp == b.zexp));
  }
  friend bool operator<(const NCMonomial& a, const NCMonomial& b) {
    if (a.is_zero != b.is_zero) return a.is_zero;
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::tie(a.word, a.zexp) < std::tie(b.word, b.zexp);
  }
};

inline Mask word_support(const std::vector<int>& w) {
  Mask s = 0;
  for (int i : w) s |= Mask{1} << i;
  return s;
}

inline NCMonomial normalize(const AnAlgebra& a, NCMonomial x) {
  x.is_zero = x.is_zero || (word_support(x.word) & support(x.zexp)) != 0;
  if (x.is_zero) {
    x.word.clear();
    std::fill(x.zexp.begin(), x.zexp.end(), 0);
  }
  x.overflow = !x.is_zero && x.degree() > a.d;
  return x;
}

inline NCMonomial an_one(const AnAlgebra& a) { return {{}, std::vector<int>(static_cast<std::size_t>(a.n), 0)}; }
inline NCMonomial an_zero(const AnAlgebra& a) {
  NCMonomial z = an_one(a);
  z.is_zero = true;
  return z;
}
inline NCMonomial an_x(const AnAlgebra& a, int i) {
  NCMonomial x = an_one(a);
  x.word.push_back(i);
  return x;
}
inline NCMonomial an_z(const AnAlgebra& a, int j) {
  NCMonomial x = an_one(a);
  x.zexp[static_cast<std::size_t>(j)] = 1;
  return x;
}

inline NCMonomial an_multiply(const AnAlgebra& a, const NCMonomial& p, const NCMonomial& q) {
  if (p.is_zero || q.is_zero) return an_zero(a);
  NCMonomial r = p;
  r.word.insert(r.word.end(), q.word.begin(), q.word.end());
  for (std::size_t j = 0; j < r.zexp.size(); ++j) r.zexp[j] += q.zexp[j];
  return normalize(a, std::move(r));
}

inline std::string to_string(const NCMonomial& x) {
  if (x.is_zero) return "0";
  std::string s;
  auto put = [&](const std::string& f) { s += (s.empty() ? "" : "*") + f; };
  for (std::size_t k = 0; k < x.word.size();) {
    std::size_t e = k;
    while (e < x.word.size() && x.word[e] == x.word[k]) ++e;
    put("x" + std::to_string(x.word[k] + 1) + (e - k > 1 ? "^" + std::to_string(e - k) : ""));
    k = e;
  }
  for (std::size_t j = 0; j < x.zexp.size(); ++j)
    if (x.zexp[j] > 0) put("z" + std::to_string(j + 1) + (x.zexp[j] > 1 ? "^" + std::to_string(x.zexp[j]) : ""));
  return s.empty() ? "1" : s;
}

/// Nonzero normal forms of degree <= d, sorted.
inline std::vector<NCMonomial> an_monomials(const AnAlgebra& a, int d) {
  std::vector<NCMonomial> out;
  std::vector<int> word;
  auto zrec = [&](auto&& self, std::vector<int>& z, int j, int left) -> void {
    if (j == a.n) {
      NCMonomial x{word, z};
      x = normalize(a, x);
      if (!x.is_zero) {
        x.overflow = false;
        out.push_back(x);
      }
      return;
    }
    if (word_support(word) & (Mask{1} << j)) {
      self(self, z, j + 1, left);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      z[static_cast<std::size_t>(j)] = k;
      self(self, z, j + 1, left - k);
    }
    z[static_cast<std::size_t>(j)] = 0;
  };
  auto wrec = [&](auto&& self, int left) -> void {
    std::vector<int> z(static_cast<std::size_t>(a.n), 0);
    zrec(zrec, z, 0, left);
    if (left == 0) return;
    for (int i = 0; i < a.m; ++i) {
      word.push_back(i);
      self(self, left - 1);
      word.pop_back();
    }
  };
  wrec(wrec, d);
  std::sort(out.begin(), out.end());
  return out;
}

/// Subsets I of [n] indexing p_I = (x_i, z_j)_{i in I, j notin I}.
inline std::vector<Mask> an_min_primes(const AnAlgebra& a) {
  std::vector<Mask> v;
  for (Mask i = 0; i < (Mask{1} << a.n); ++i) v.push_back(i);
  return v;
}

inline bool an_in_prime(const AnAlgebra& a, Mask i, const NCMonomial& x) {
  if (x.is_zero) return true;
  const Mask full = (Mask{1} << a.n) - 1;
  return (word_support(x.word) & i) != 0 || (support(x.zexp) & (full & ~i)) != 0;
}

inline std::string subset_to_string(Mask s, int n) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < n; ++i)
    if (s & (Mask{1} << i)) {
      out += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
  return out + "}";
}

// GF(2) polynomials as sorted sets of monomials.
using Poly = std::vector<NCMonomial>;

inline Poly poly_multiply(const AnAlgebra& a, const Poly& p, const Poly& q) {
  std::map<NCMonomial, int> acc;
  for (const auto& x : p)
    for (const auto& y : q) {
      NCMonomial r = an_multiply(a, x, y);
      if (!r.is_zero) {
        r.overflow = false;
        acc[r] ^= 1;
      }
    }
  Poly out;
  for (const auto& [k, c] : acc)
    if (c) out.push_back(k);
  return out;
}

inline std::string to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& x : p) s += (s.empty() ? "" : " + ") + to_string(x);
  return s;
}

namespace detail {

using Row = std::vector<std::uint64_t>;

inline void set_bit(Row& r, std::size_t i) { r[i / 64] |= std::uint64_t{1} << (i % 64); }
inline bool get_bit(const Row& r, std::size_t i) { return (r[i / 64] >> (i % 64)) & 1; }

/// Kernel basis of the map given by `images` (row i = image of source i), over GF(2).
inline std::vector<Row> kernel_basis(std::vector<Row> images, std::size_t cols, std::size_t sources) {
  const std::size_t iw = (sources + 63) / 64;
  std::vector<Row> tag(sources, Row(iw, 0));
  for (std::size_t i = 0; i < sources; ++i) set_bit(tag[i], i);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < sources; ++c) {
    std::size_t piv = rank;
    while (piv < sources && !get_bit(images[piv], c)) ++piv;
    if (piv == sources) continue;
    std::swap(images[piv], images[rank]);
    std::swap(tag[piv], tag[rank]);
    for (std::size_t r = 0; r < sources; ++r)
      if (r != rank && get_bit(images[r], c)) {
        for (std::size_t w = 0; w < images[r].size(); ++w) images[r][w] ^= images[rank][w];
        for (std::size_t w = 0; w < iw; ++w) tag[r][w] ^= tag[rank][w];
      }
    ++rank;
  }
  return {tag.begin() + static_cast<std::ptrdiff_t>(rank), tag.end()};
}

inline std::size_t rank_of(std::vector<Row> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && !get_bit(rows[piv], c)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
      if (get_bit(rows[r], c))
        for (std::size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[rank][w];
    ++rank;
  }
  return rank;
}

inline std::vector<int> letter_counts(const AnAlgebra& a, const NCMonomial& x) {
  std::vector<int> c(static_cast<std::size_t>(a.m), 0);
  for (int i : x.word) ++c[static_cast<std::size_t>(i)];
  return c;
}

}  // namespace detail

/// Degree-<= d part of the centre, one block per multidegree.
struct CentreBlock {
  std::vector<NCMonomial> basis;        // monomials of this multidegree
  std::vector<detail::Row> kernel;      // central combinations, as bit rows over `basis`
};

inline std::vector<CentreBlock> an_centre(const AnAlgebra& a) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, CentreBlock> blocks;
  for (const auto& x : an_monomials(a, a.d)) blocks[{detail::letter_counts(a, x), x.zexp}].basis.push_back(x);
  std::vector<CentreBlock> out;
  for (auto& [key, blk] : blocks) {
    // Targets: x_j*b and b*x_j for every generator x_j (z's are central).
    std::map<std::pair<int, NCMonomial>, std::size_t> col;
    std::vector<std::vector<std::size_t>> hits(blk.basis.size());
    for (std::size_t s = 0; s < blk.basis.size(); ++s)
      for (int j = 0; j < a.m; ++j) {
        const NCMonomial l = an_multiply(a, an_x(a, j), blk.basis[s]);
        const NCMonomial r = an_multiply(a, blk.basis[s], an_x(a, j));
        if (l == r) continue;
        for (const NCMonomial* t : {&l, &r}) {
          if (t->is_zero) continue;
          NCMonomial k = *t;
          k.overflow = false;
          auto it = col.emplace(std::make_pair(j, k), col.size()).first;
          hits[s].push_back(it->second);
        }
      }
    const std::size_t cols = col.size();
    std::vector<detail::Row> images(blk.basis.size(), detail::Row((cols + 63) / 64 + 1, 0));
    for (std::size_t s = 0; s < hits.size(); ++s)
      for (std::size_t c : hits[s]) images[s][c / 64] ^= std::uint64_t{1} << (c % 64);
    blk.kernel = detail::kernel_basis(std::move(images), cols, blk.basis.size());
    out.push_back(std::move(blk));
  }
  return out;
}

inline Poly block_poly(const CentreBlock& b, const detail::Row& v) {
  Poly p;
  for (std::size_t i = 0; i < b.basis.size(); ++i)
    if (detail::get_bit(v, i)) p.push_back(b.basis[i]);
  return p;
}

/// dim of (centre cap p_I) in degree <= d.
inline std::size_t centre_cap_prime_dim(const AnAlgebra& a, const std::vector<CentreBlock>& blocks, Mask i) {
  std::size_t dim = 0;
  for (const auto& b : blocks) {
    if (b.kernel.empty()) continue;
    std::vector<std::size_t> outside;
    for (std::size_t k = 0; k < b.basis.size(); ++k)
      if (!an_in_prime(a, i, b.basis[k])) outside.push_back(k);
    std::vector<detail::Row> proj;
    for (const auto& v : b.kernel) {
      detail::Row r((outside.size() + 63) / 64 + 1, 0);
      for (std::size_t k = 0; k < outside.size(); ++k)
        if (detail::get_bit(v, outside[k])) detail::set_bit(r, k);
      proj.push_back(std::move(r));
    }
    dim += b.kernel.size() - detail::rank_of(std::move(proj), outside.size());
  }
  return dim;
}

struct AnPrimeRow {
  Mask subset = 0;
  bool domain = false;             // (i) verified to degree d
  std::string domain_witness;
  std::size_t centre_cap_dim = 0;  // dim(Z cap p_I), degree <= d
  std::size_t expected_cap_dim = 0;
  bool restriction_ok = false;     // (v)
  bool restriction_zero = false;   // p_I cap Z = 0
};

struct AnReport {
  AnAlgebra algebra;
  std::vector<AnPrimeRow> primes;
  bool incomparable = false;        // (ii)
  std::string incomparable_witness;
  bool intersection_zero = false;   // (iii)
  std::string intersection_witness;
  std::size_t centre_dim = 0;
  std::size_t z_monomials = 0;
  bool z_central = false;
  bool centre_is_Pn = false;        // (iv)
  std::string extra_central;        // a central element outside P_n, if any
  std::vector<std::string> x_witnesses;
  bool rho_evaluated = false;       // needs centre = P_n
  bool rho_ill_defined_exactly_off_full = false;  // (vi)
  bool criterion_witness = false;   // z1 regular in Z, z1*x1 = 0
  std::string criterion_text;

  bool domains_ok() const {
    return std::all_of(primes.begin(), primes.end(), [](const AnPrimeRow& r) { return r.domain; });
  }
  bool restrictions_ok() const {
    return std::all_of(primes.begin(), primes.end(), [](const AnPrimeRow& r) { return r.restriction_ok; });
  }
  bool rho_ok() const { return rho_evaluated && rho_ill_defined_exactly_off_full && criterion_witness; }
  bool ok() const {
    return domains_ok() && incomparable && intersection_zero && centre_is_Pn && restrictions_ok() && rho_ok();
  }
};

inline AnReport an_verify(const AnAlgebra& a, std::uint64_t seed = 1, int samples = 200) {
  AnReport rep{a};
  const auto mons = an_monomials(a, a.d);
  const Mask full = (Mask{1} << a.n) - 1;
  std::mt19937_64 rng(seed);

  // (iii) every nonzero monomial escapes some p_I
  rep.intersection_zero = true;
  for (const auto& x : mons) {
    bool in_all = true;
    for (Mask i : an_min_primes(a)) in_all = in_all && an_in_prime(a, i, x);
    if (in_all) {
      rep.intersection_zero = false;
      rep.intersection_witness = to_string(x);
      break;
    }
  }

  // (ii) p_I not inside p_J: some generator of p_I escapes p_J
  rep.incomparable = true;
  for (Mask i : an_min_primes(a))
    for (Mask j : an_min_primes(a)) {
      if (i == j) continue;
      bool escapes = false;
      for (int k = 0; k < a.n; ++k) {
        const NCMonomial g = (i & (Mask{1} << k)) ? an_x(a, k) : an_z(a, k);
        escapes = escapes || !an_in_prime(a, j, g);
      }
      if (!escapes && rep.incomparable) {
        rep.incomparable = false;
        rep.incomparable_witness = subset_to_string(i, a.n) + " inside " + subset_to_string(j, a.n);
      }
    }

  // (iv) centre at degree <= d
  const auto blocks = an_centre(a);
  rep.z_central = true;
  for (const auto& b : blocks) {
    rep.centre_dim += b.kernel.size();
    const bool zblock = b.basis.front().word.empty();
    if (zblock) {
      rep.z_monomials += b.basis.size();
      if (b.kernel.size() != b.basis.size()) rep.z_central = false;
    } else if (!b.kernel.empty() && rep.extra_central.empty()) {
      rep.extra_central = to_string(block_poly(b, b.kernel.front()));
    }
  }
  rep.centre_is_Pn = rep.z_central && rep.centre_dim == rep.z_monomials;
  for (int i = 0; i < a.n; ++i) {
    std::string w;
    for (int j = 0; j < a.m && w.empty(); ++j) {
      const NCMonomial l = an_multiply(a, an_x(a, i), an_x(a, j)), r = an_multiply(a, an_x(a, j), an_x(a, i));
      if (!(l == r)) w = "x" + std::to_string(i + 1) + "*x" + std::to_string(j + 1) + " != " + to_string(r);
    }
    rep.x_witnesses.push_back(w.empty() ? "x" + std::to_string(i + 1) + " is central" : w);
  }

  // (i) and (v) per prime
  for (Mask i : an_min_primes(a)) {
    AnPrimeRow row{i};
    std::vector<NCMonomial> surv;
    for (const auto& x : mons)
      if (!an_in_prime(a, i, x)) surv.push_back(x);
    row.domain = true;
    for (std::size_t p = 0; p < surv.size() && row.domain; ++p)
      for (std::size_t q = 0; q < surv.size() && row.domain; ++q) {
        if (surv[p].degree() + surv[q].degree() > a.d) continue;
        const NCMonomial r = an_multiply(a, surv[p], surv[q]);
        if (an_in_prime(a, i, r)) {
          row.domain = false;
          row.domain_witness = to_string(surv[p]) + " * " + to_string(surv[q]) + " in p_I";
        }
      }
    std::vector<NCMonomial> half;
    for (const auto& x : surv)
      if (2 * x.degree() <= a.d) half.push_back(x);
    for (int s = 0; s < samples && row.domain && !half.empty(); ++s) {
      Poly f, g;
      for (const auto& x : half) {
        if (rng() & 1) f.push_back(x);
        if (rng() & 1) g.push_back(x);
      }
      if (f.empty() || g.empty()) continue;
      Poly h;
      for (const auto& x : poly_multiply(a, f, g))
        if (!an_in_prime(a, i, x)) h.push_back(x);
      if (h.empty()) {
        row.domain = false;
        row.domain_witness = "(" + to_string(f) + ")(" + to_string(g) + ") = 0 mod p_I";
      }
    }
    row.centre_cap_dim = centre_cap_prime_dim(a, blocks, i);
    for (const auto& b : blocks)
      if (b.basis.front().word.empty())
        for (const auto& x : b.basis)
          if (support(x.zexp) & (full & ~i)) ++row.expected_cap_dim;
    row.restriction_ok = rep.z_central && row.centre_cap_dim == row.expected_cap_dim;
    row.restriction_zero = row.centre_cap_dim == 0;
    rep.primes.push_back(row);
  }

  // (vi) with min(Z) = {(0)} when Z = P_n
  if (rep.centre_is_Pn) {
    rep.rho_evaluated = true;
    rep.rho_ill_defined_exactly_off_full = true;
    for (const auto& row : rep.primes)
      if (row.restriction_zero != (row.subset == full)) rep.rho_ill_defined_exactly_off_full = false;
  }
  if (a.n >= 1) {
    const NCMonomial zx = an_multiply(a, an_z(a, 0), an_x(a, 0));
    // z1 is regular in the centre when the centre is the domain P_n.
    rep.criterion_witness = rep.centre_is_Pn && zx.is_zero;
    rep.criterion_text = "z1*x1 = " + to_string(zx);
  }
  return rep;
}

struct AnLocalizationReport {
  AnAlgebra algebra;
  Mask v = 0;
  std::size_t expected = 0;       // 2^(n - |V|)
  std::size_t min_ass = 0;        // primes p_I containing ass
  bool ass_matches = false;       // ass = (x_v : v in V) at degree <= d
  bool ass_sides_agree = false;   // s*m = 0 and s*m*t = 0 give the same ideal
  bool images_match = false;      // definitional image = formula image on the model
  bool injective = false;
  bool incomparable = false;
  bool proper = false;
  bool intersection_zero = false;
  std::string witness;

  bool ok() const {
    return expected == min_ass && ass_matches && ass_sides_agree && images_match && injective && incomparable &&
           proper && intersection_zero;
  }
};

/// Localization at the central monoid generated by z_v, v in V.
inline AnLocalizationReport an_localize_normal(const AnAlgebra& a, Mask v) {
  const Mask full = (Mask{1} << a.n) - 1;
  if (v == 0 || (v & ~full)) throw Error(ErrorCode::invalid_argument, "V must be a non-empty subset of [n]");
  AnLocalizationReport rep{a, v};
  rep.expected = std::size_t{1} << (a.n - popcount(v));

  NCMonomial s = an_one(a);
  for (int j = 0; j < a.n; ++j)
    if (v & (Mask{1} << j)) s = an_multiply(a, s, an_z(a, j));
  const auto mons = an_monomials(a, a.d);
  std::vector<NCMonomial> ass;
  rep.ass_matches = rep.ass_sides_agree = true;
  for (const auto& x : mons) {
    const bool two_sided = an_multiply(a, an_multiply(a, s, x), s).is_zero;
    const bool left = an_multiply(a, s, x).is_zero;
    const bool formula = (word_support(x.word) & v) != 0;
    if (two_sided != left) rep.ass_sides_agree = false;
    if (two_sided != formula) {
      rep.ass_matches = false;
      if (rep.witness.empty()) rep.witness = "ass membership differs at " + to_string(x);
    }
    if (two_sided) ass.push_back(x);
  }

  std::vector<Mask> over;
  for (Mask i : an_min_primes(a)) {
    bool contains = std::all_of(ass.begin(), ass.end(), [&](const NCMonomial& x) { return an_in_prime(a, i, x); });
    if (contains) over.push_back(i);
  }
  rep.min_ass = over.size();

  // Model monomials: words avoiding V, z exponents >= 0 off V and in [-d, d] on V.
  struct ModelMon {
    std::vector<int> word;
    std::vector<int> zexp;
  };
  std::vector<ModelMon> model;
  for (const auto& x : an_monomials(a, a.d)) {
    if (word_support(x.word) & v) continue;
    const int budget = a.d - x.degree();
    std::vector<std::vector<int>> shifts{x.zexp};
    for (int j = 0; j < a.n; ++j) {
      if (!(v & (Mask{1} << j)) || x.zexp[static_cast<std::size_t>(j)] != 0) continue;
      std::vector<std::vector<int>> next;
      for (const auto& e : shifts)
        for (int k = -budget; k <= 0; ++k) {
          auto f = e;
          f[static_cast<std::size_t>(j)] = k;
          next.push_back(f);
        }
      shifts = std::move(next);
    }
    for (auto& e : shifts) model.push_back({x.word, e});
  }
  auto lift = [&](const ModelMon& y) {
    int k = 0;
    for (int e : y.zexp) k = std::max(k, -e);
    NCMonomial x{y.word, y.zexp};
    for (int j = 0; j < a.n; ++j)
      if (v & (Mask{1} << j)) x.zexp[static_cast<std::size_t>(j)] += k;
    return normalize(a, x);
  };

  std::vector<std::vector<bool>> images;
  rep.images_match = true;
  for (Mask i : over) {
    std::vector<bool> img;
    for (const auto& y : model) {
      const bool defn = an_in_prime(a, i, lift(y));
      Mask zpos = 0;
      for (int j = 0; j < a.n; ++j)
        if (y.zexp[static_cast<std::size_t>(j)] > 0) zpos |= Mask{1} << j;
      const bool formula = (word_support(y.word) & (i & ~v)) != 0 || (zpos & ~v & (full & ~i)) != 0;
      if (defn != formula) rep.images_match = false;
      img.push_back(defn);
    }
    images.push_back(std::move(img));
  }
  rep.proper = true;
  for (const auto& img : images)
    for (std::size_t k = 0; k < model.size(); ++k)
      if (img[k] && model[k].word.empty() &&
          std::all_of(model[k].zexp.begin(), model[k].zexp.end(), [](int e) { return e == 0; }))
        rep.proper = false;
  rep.injective = rep.incomparable = true;
  for (std::size_t p = 0; p < images.size(); ++p)
    for (std::size_t q = 0; q < images.size(); ++q) {
      if (p == q) continue;
      if (images[p] == images[q]) rep.injective = false;
      bool sub = true;
      for (std::size_t k = 0; k < model.size(); ++k) sub = sub && (!images[p][k] || images[q][k]);
      if (sub) rep.incomparable = false;
    }
  rep.intersection_zero = true;
  for (std::size_t k = 0; k < model.size(); ++k) {
    bool all = !images.empty();
    for (const auto& img : images) all = all && img[k];
    if (all) rep.intersection_zero = false;
  }
  return rep;
}

}  // namespace locprime::mono
