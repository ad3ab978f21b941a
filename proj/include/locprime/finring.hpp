#pragma once

// Finite rings stored as explicit addition / multiplication tables over dense ids.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "error.hpp"

namespace locprime {

inline constexpr int kDefaultOrderCap = 16;

class RingTable;
using RingPtr = std::shared_ptr<const RingTable>;

/// A finite ring with 1 given by full operation tables. Immutable after construction.
class RingTable {
 public:
  /// Builds a table without auditing it. Callers that accept untrusted tables must run audit().
  static RingTable unchecked(int order, std::vector<std::uint8_t> add, std::vector<std::uint8_t> mul,
                             Elem zero, Elem one, std::string label,
                             std::vector<std::string> names = {}) {
    if (order < 1 || order > kMaxSupportedOrder)
      throw Error(ErrorCode::invalid_order, "ring order " + std::to_string(order));
    const auto cells = static_cast<std::size_t>(order) * static_cast<std::size_t>(order);
    if (add.size() != cells || mul.size() != cells)
      throw Error(ErrorCode::invalid_argument, "operation tables must have order^2 entries");
    RingTable r;
    r.order_ = order;
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.zero_ = zero;
    r.one_ = one;
    r.label_ = std::move(label);
    r.names_ = std::move(names);
    if (r.names_.size() != static_cast<std::size_t>(order)) {
      r.names_.clear();
      for (int i = 0; i < order; ++i) r.names_.push_back(std::to_string(i));
    }
    r.neg_.assign(static_cast<std::size_t>(order), -1);
    for (Elem a = 0; a < order; ++a)
      for (Elem b = 0; b < order; ++b)
        if (r.add(a, b) == zero) {
          r.neg_[a] = b;
          break;
        }
    r.commutative_ = true;
    for (Elem a = 0; a < order && r.commutative_; ++a)
      for (Elem b = a + 1; b < order; ++b)
        if (r.mul(a, b) != r.mul(b, a)) {
          r.commutative_ = false;
          break;
        }
    return r;
  }

  int order() const noexcept { return order_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }
  const std::string& label() const noexcept { return label_; }
  const std::string& name(Elem e) const { return names_.at(static_cast<std::size_t>(e)); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[idx(a, b)]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[idx(a, b)]; }
  Elem neg(Elem a) const noexcept { return neg_[static_cast<std::size_t>(a)]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  bool is_commutative() const noexcept { return commutative_; }

  const std::vector<std::uint8_t>& add_table() const noexcept { return add_; }
  const std::vector<std::uint8_t>& mul_table() const noexcept { return mul_; }

  ElementSet empty_set() const { return ElementSet(order_); }
  ElementSet all() const { return ElementSet::full(order_); }

  /// Same tables, same distinguished elements.
  bool same_tables(const RingTable& o) const {
    return order_ == o.order_ && zero_ == o.zero_ && one_ == o.one_ && add_ == o.add_ && mul_ == o.mul_;
  }

 private:
  RingTable() = default;
  std::size_t idx(Elem a, Elem b) const noexcept {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(b);
  }

  int order_ = 0;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  Elem one_ = 0;
  bool commutative_ = false;
  std::string label_;
  std::vector<std::string> names_;
};

/// First violated ring axiom, or nullopt when the tables define a ring with 1 (0 != 1).
inline std::optional<std::string> audit(const RingTable& r) {
  const int n = r.order();
  auto cell = [&](const char* law, Elem a, Elem b, Elem c) {
    return std::string(law) + " fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ")";
  };
  if (n < 2) return "order must be at least 2";
  if (r.zero() < 0 || r.zero() >= n || r.one() < 0 || r.one() >= n) return "zero/one out of range";
  if (r.zero() == r.one()) return "zero equals one";
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (r.add(a, b) >= n || r.mul(a, b) >= n) return cell("closure", a, b, 0);
    }
  for (Elem a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a || r.add(r.zero(), a) != a) return cell("additive identity", a, 0, 0);
    if (r.neg(a) < 0) return cell("additive inverse", a, 0, 0);
    if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a) return cell("multiplicative identity", a, 0, 0);
    for (Elem b = 0; b < n; ++b)
      if (r.add(a, b) != r.add(b, a)) return cell("additive commutativity", a, b, 0);
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return cell("additive associativity", a, b, c);
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return cell("associativity", a, b, c);
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return cell("left distributivity", a, b, c);
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return cell("right distributivity", a, b, c);
      }
  return std::nullopt;
}

/// Audits and freezes a table; an axiom failure here is an engine bug.
inline RingPtr finalize(RingTable r) {
  if (auto bad = audit(r)) fail_internal("constructed table for " + r.label() + " is not a ring: " + *bad);
  return std::make_shared<const RingTable>(std::move(r));
}

/// Copy of `r` with a single multiplication cell overwritten. Not audited.
inline RingPtr with_corrupted_cell(const RingTable& r, Elem a, Elem b, Elem value) {
  auto mul = r.mul_table();
  mul.at(static_cast<std::size_t>(a * r.order() + b)) = static_cast<std::uint8_t>(value);
  return std::make_shared<const RingTable>(RingTable::unchecked(
      r.order(), r.add_table(), std::move(mul), r.zero(), r.one(), r.label() + "[corrupted]", r.names()));
}

// ---------------------------------------------------------------------------
// Constructors

inline RingPtr make_zmod(int n) {
  if (n < 2) throw Error(ErrorCode::invalid_order, "zmod needs n >= 2, got " + std::to_string(n));
  if (n > kMaxSupportedOrder) throw Error(ErrorCode::size_limit, "zmod(" + std::to_string(n) + ") exceeds 64");
  const auto cells = static_cast<std::size_t>(n * n);
  std::vector<std::uint8_t> add(cells), mul(cells);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[static_cast<std::size_t>(a * n + b)] = static_cast<std::uint8_t>((a + b) % n);
      mul[static_cast<std::size_t>(a * n + b)] = static_cast<std::uint8_t>((a * b) % n);
    }
  return finalize(RingTable::unchecked(n, std::move(add), std::move(mul), 0, 1, "zmod(" + std::to_string(n) + ")"));
}

namespace detail {
inline bool is_prime_number(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace detail

/// Finite field of order q: q prime, or q = 4 (elements 0, 1, a, a+1 with a^2 = a + 1).
inline RingPtr make_gf(int q) {
  if (detail::is_prime_number(q)) {
    auto z = make_zmod(q);
    return std::make_shared<const RingTable>(RingTable::unchecked(
        q, z->add_table(), z->mul_table(), 0, 1, "gf(" + std::to_string(q) + ")", z->names()));
  }
  if (q != 4) throw Error(ErrorCode::invalid_argument, "gf(q) supports q prime or q = 4, got " + std::to_string(q));
  std::vector<std::uint8_t> add(16), mul(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      add[static_cast<std::size_t>(a * 4 + b)] = static_cast<std::uint8_t>(a ^ b);
      // carry-less product of degree <= 2, reduced by a^2 = a + 1
      int p = 0;
      for (int i = 0; i < 2; ++i)
        if ((b >> i) & 1) p ^= a << i;
      if (p & 4) p ^= 0b111;
      mul[static_cast<std::size_t>(a * 4 + b)] = static_cast<std::uint8_t>(p);
    }
  return finalize(RingTable::unchecked(4, std::move(add), std::move(mul), 0, 1, "gf(4)", {"0", "1", "a", "a+1"}));
}

namespace detail {

inline int checked_power(int base, int exp, int cap, const std::string& what) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap)
      throw Error(ErrorCode::size_limit, what + " has order above the cap " + std::to_string(cap));
  }
  return static_cast<int>(v);
}

inline void check_cap(int cap) {
  if (cap < 2 || cap > kMaxSupportedOrder)
    throw Error(ErrorCode::size_limit, "order cap must lie in [2, 64], got " + std::to_string(cap));
}

/// Matrix rings over a commutative base; `positions` lists the (row, col) slots that may be non-zero.
inline RingPtr make_matrix_like(int k, const RingTable& base, int cap,
                                const std::vector<std::pair<int, int>>& positions, const std::string& label) {
  check_cap(cap);
  if (k < 1) throw Error(ErrorCode::invalid_argument, "matrix size must be >= 1");
  if (!base.is_commutative()) throw Error(ErrorCode::invalid_argument, "matrix base ring must be commutative");
  const int q = base.order();
  const int slots = static_cast<int>(positions.size());
  const int order = checked_power(q, slots, cap, label);

  using Mat = std::vector<Elem>;  // k*k entries, row-major
  auto decode = [&](int id) {
    Mat m(static_cast<std::size_t>(k * k), base.zero());
    for (int s = slots - 1; s >= 0; --s) {
      auto [i, j] = positions[static_cast<std::size_t>(s)];
      m[static_cast<std::size_t>(i * k + j)] = id % q;
      id /= q;
    }
    return m;
  };
  auto encode = [&](const Mat& m) {
    int id = 0;
    for (int s = 0; s < slots; ++s) {
      auto [i, j] = positions[static_cast<std::size_t>(s)];
      id = id * q + m[static_cast<std::size_t>(i * k + j)];
    }
    return id;
  };

  std::vector<Mat> mats;
  mats.reserve(static_cast<std::size_t>(order));
  for (int id = 0; id < order; ++id) mats.push_back(decode(id));

  const auto cells = static_cast<std::size_t>(order * order);
  std::vector<std::uint8_t> add(cells), mul(cells);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const Mat& x = mats[static_cast<std::size_t>(a)];
      const Mat& y = mats[static_cast<std::size_t>(b)];
      Mat s(x.size()), p(x.size(), base.zero());
      for (std::size_t t = 0; t < x.size(); ++t) s[t] = base.add(x[t], y[t]);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          Elem acc = base.zero();
          for (int l = 0; l < k; ++l)
            acc = base.add(acc, base.mul(x[static_cast<std::size_t>(i * k + l)], y[static_cast<std::size_t>(l * k + j)]));
          p[static_cast<std::size_t>(i * k + j)] = acc;
        }
      add[static_cast<std::size_t>(a * order + b)] = static_cast<std::uint8_t>(encode(s));
      mul[static_cast<std::size_t>(a * order + b)] = static_cast<std::uint8_t>(encode(p));
    }

  Mat identity(static_cast<std::size_t>(k * k), base.zero());
  for (int i = 0; i < k; ++i) identity[static_cast<std::size_t>(i * k + i)] = base.one();

  std::vector<std::string> names;
  for (const Mat& m : mats) {
    std::string s = "[";
    for (int i = 0; i < k; ++i) {
      s += i ? ";" : "";
      for (int j = 0; j < k; ++j) s += (j ? " " : "") + base.name(m[static_cast<std::size_t>(i * k + j)]);
    }
    names.push_back(s + "]");
  }
  return finalize(RingTable::unchecked(order, std::move(add), std::move(mul), encode(Mat(identity.size(), base.zero())),
                                       encode(identity), label, std::move(names)));
}

}  // namespace detail

/// Full k x k matrices over a commutative base. Ids encode entries row-major, first entry most significant.
inline RingPtr make_matrix_ring(int k, const RingTable& base, int cap = kDefaultOrderCap) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) pos.emplace_back(i, j);
  return detail::make_matrix_like(k, base, cap, pos, "mat(" + std::to_string(k) + "," + base.label() + ")");
}

/// Upper-triangular k x k matrices; ids encode the entries (i <= j) row-major.
inline RingPtr make_upper_triangular(int k, const RingTable& base, int cap = kDefaultOrderCap) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) pos.emplace_back(i, j);
  return detail::make_matrix_like(k, base, cap, pos, "tri(" + std::to_string(k) + "," + base.label() + ")");
}

/// Direct product; element (x, y) has id x * |b| + y.
inline RingPtr make_product(const RingTable& a, const RingTable& b, int cap = kDefaultOrderCap) {
  detail::check_cap(cap);
  const long long order = static_cast<long long>(a.order()) * b.order();
  if (order > cap)
    throw Error(ErrorCode::size_limit, "product of orders " + std::to_string(a.order()) + " and " +
                                           std::to_string(b.order()) + " exceeds the cap " + std::to_string(cap));
  const int n = static_cast<int>(order);
  const int m = b.order();
  const auto cells = static_cast<std::size_t>(n * n);
  std::vector<std::uint8_t> add(cells), mul(cells);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const int ux = u / m, uy = u % m, vx = v / m, vy = v % m;
      add[static_cast<std::size_t>(u * n + v)] = static_cast<std::uint8_t>(a.add(ux, vx) * m + b.add(uy, vy));
      mul[static_cast<std::size_t>(u * n + v)] = static_cast<std::uint8_t>(a.mul(ux, vx) * m + b.mul(uy, vy));
    }
  std::vector<std::string> names;
  for (int u = 0; u < n; ++u) names.push_back("(" + a.name(u / m) + "," + b.name(u % m) + ")");
  return finalize(RingTable::unchecked(n, std::move(add), std::move(mul), a.zero() * m + b.zero(),
                                       a.one() * m + b.one(), "prod(" + a.label() + "," + b.label() + ")",
                                       std::move(names)));
}

// ---------------------------------------------------------------------------
// Homomorphisms

struct RingHom {
  RingPtr source;
  RingPtr target;
  std::vector<Elem> map;

  Elem operator()(Elem e) const { return map.at(static_cast<std::size_t>(e)); }

  ElementSet image(const ElementSet& s) const {
    ElementSet out(target->order());
    s.for_each([&](Elem e) { out.insert((*this)(e)); });
    return out;
  }
  ElementSet preimage(const ElementSet& t) const {
    ElementSet out(source->order());
    for (Elem e = 0; e < source->order(); ++e)
      if (t.contains((*this)(e))) out.insert(e);
    return out;
  }
  ElementSet kernel() const { return preimage(ElementSet::single(target->order(), target->zero())); }

  bool injective() const { return image(source->all()).size() == source->order(); }
  bool surjective() const { return image(source->all()).is_full(); }
};

/// Unital ring homomorphism check over all pairs.
inline bool is_ring_hom(const RingHom& h) {
  const RingTable& s = *h.source;
  const RingTable& t = *h.target;
  if (static_cast<int>(h.map.size()) != s.order()) return false;
  if (h(s.zero()) != t.zero() || h(s.one()) != t.one()) return false;
  for (Elem a = 0; a < s.order(); ++a)
    for (Elem b = 0; b < s.order(); ++b) {
      if (h(s.add(a, b)) != t.add(h(a), h(b))) return false;
      if (h(s.mul(a, b)) != t.mul(h(a), h(b))) return false;
    }
  return true;
}

inline RingHom identity_hom(const RingPtr& r) {
  RingHom h{r, r, {}};
  for (Elem e = 0; e < r->order(); ++e) h.map.push_back(e);
  return h;
}

// ---------------------------------------------------------------------------
// Element-level structure

/// {y x : y in R}
inline ElementSet left_multiples(const RingTable& r, Elem x) {
  ElementSet out(r.order());
  for (Elem y = 0; y < r.order(); ++y) out.insert(r.mul(y, x));
  return out;
}

/// {x y : y in R}
inline ElementSet right_multiples(const RingTable& r, Elem x) {
  ElementSet out(r.order());
  for (Elem y = 0; y < r.order(); ++y) out.insert(r.mul(x, y));
  return out;
}

/// Two-sided inverse of x, if any.
inline std::optional<Elem> inverse(const RingTable& r, Elem x) {
  for (Elem y = 0; y < r.order(); ++y)
    if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) return y;
  return std::nullopt;
}

inline ElementSet units(const RingTable& r) {
  ElementSet out(r.order());
  for (Elem x = 0; x < r.order(); ++x)
    if (inverse(r, x)) out.insert(x);
  return out;
}

inline bool is_left_zero_divisor(const RingTable& r, Elem x) {
  for (Elem y = 0; y < r.order(); ++y)
    if (y != r.zero() && r.mul(x, y) == r.zero()) return true;
  return false;
}

inline bool is_right_zero_divisor(const RingTable& r, Elem x) {
  for (Elem y = 0; y < r.order(); ++y)
    if (y != r.zero() && r.mul(y, x) == r.zero()) return true;
  return false;
}

/// Elements that are neither left nor right zero divisors.
inline ElementSet regular_elements(const RingTable& r) {
  ElementSet out(r.order());
  for (Elem x = 0; x < r.order(); ++x)
    if (!is_left_zero_divisor(r, x) && !is_right_zero_divisor(r, x)) out.insert(x);
  return out;
}

inline bool is_normal_element(const RingTable& r, Elem x) { return left_multiples(r, x) == right_multiples(r, x); }

inline ElementSet normal_elements(const RingTable& r) {
  ElementSet out(r.order());
  for (Elem x = 0; x < r.order(); ++x)
    if (is_normal_element(r, x)) out.insert(x);
  return out;
}

inline ElementSet centre_set(const RingTable& r) {
  ElementSet out(r.order());
  for (Elem x = 0; x < r.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < r.order() && central; ++y) central = r.mul(x, y) == r.mul(y, x);
    if (central) out.insert(x);
  }
  return out;
}

/// Additive closure of a set (the subgroup it generates), containing zero.
inline ElementSet additive_closure(const RingTable& r, ElementSet s) {
  s.insert(r.zero());
  for (;;) {
    ElementSet next = s;
    s.for_each([&](Elem a) { s.for_each([&](Elem b) { next.insert(r.add(a, b)); }); });
    if (next == s) return s;
    s = next;
  }
}

/// Is the element set closed under + and containing 0 (hence a subgroup, the group being finite)?
inline bool is_additive_subgroup(const RingTable& r, const ElementSet& s) {
  if (!s.contains(r.zero())) return false;
  bool ok = true;
  s.for_each([&](Elem a) {
    s.for_each([&](Elem b) {
      if (!s.contains(r.add(a, b))) ok = false;
    });
  });
  return ok;
}

}  // namespace locprime
