#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "error.hpp"

namespace locprime {

/// Dense element id inside a finite ring.
using Elem = int;

/// Rings are capped at 64 elements so that every subset fits in one machine word.
inline constexpr int kMaxSupportedOrder = 64;

/// Subset of {0..order-1}. Value type; the owning ring is identified by order only,
/// callers that mix rings are caught by the Ideal/MultSet wrappers.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int order) : order_(order) {
    if (order < 0 || order > kMaxSupportedOrder)
      throw Error(ErrorCode::size_limit, "element set order " + std::to_string(order) + " exceeds 64");
  }
  ElementSet(int order, std::uint64_t bits) : ElementSet(order) { bits_ = bits & mask(); }
  ElementSet(int order, std::initializer_list<Elem> elems) : ElementSet(order) {
    for (Elem e : elems) insert(e);
  }

  static ElementSet full(int order) { return ElementSet(order, ~std::uint64_t{0}); }
  static ElementSet single(int order, Elem e) { return ElementSet(order, {e}); }
  static ElementSet from(int order, const std::vector<Elem>& elems) {
    ElementSet s(order);
    for (Elem e : elems) s.insert(e);
    return s;
  }

  int order() const noexcept { return order_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(Elem e) const noexcept { return (bits_ >> e) & 1u; }
  void insert(Elem e) {
    check(e);
    bits_ |= std::uint64_t{1} << e;
  }
  void erase(Elem e) {
    check(e);
    bits_ &= ~(std::uint64_t{1} << e);
  }

  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == mask(); }

  bool subset_of(const ElementSet& o) const noexcept { return (bits_ & ~o.bits_) == 0; }
  bool intersects(const ElementSet& o) const noexcept { return (bits_ & o.bits_) != 0; }

  ElementSet operator|(const ElementSet& o) const { return {order_, bits_ | o.bits_}; }
  ElementSet operator&(const ElementSet& o) const { return {order_, bits_ & o.bits_}; }
  ElementSet operator-(const ElementSet& o) const { return {order_, bits_ & ~o.bits_}; }
  ElementSet complement() const { return {order_, ~bits_}; }
  ElementSet& operator|=(const ElementSet& o) {
    bits_ |= o.bits_;
    return *this;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Members in increasing id order.
  std::vector<Elem> members() const {
    std::vector<Elem> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Smallest member, or -1 when empty.
  Elem first() const noexcept { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  std::string to_string() const {
    std::string out = "{";
    bool sep = false;
    for (Elem e : members()) {
      if (sep) out += ",";
      out += std::to_string(e);
      sep = true;
    }
    return out + "}";
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Elem>(std::countr_zero(b)));
  }

 private:
  std::uint64_t mask() const noexcept {
    return order_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1;
  }
  void check(Elem e) const {
    if (e < 0 || e >= order_)
      throw Error(ErrorCode::invalid_argument,
                  "element id " + std::to_string(e) + " outside ring of order " + std::to_string(order_));
  }

  int order_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace locprime
