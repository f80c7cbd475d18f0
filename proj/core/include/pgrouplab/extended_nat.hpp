#ifndef PGROUPLAB_EXTENDED_NAT_HPP
#define PGROUPLAB_EXTENDED_NAT_HPP

#include <compare>
#include <string>

#include "pgrouplab/common.hpp"

namespace pgrouplab {

/// A natural number or infinity. Heights of zero elements and exhausted
/// alpha entries are infinite; infinity compares above every natural and
/// absorbs addition.
class ExtendedNat {
 public:
  constexpr ExtendedNat() : v_(0), inf_(false) {}
  constexpr ExtendedNat(u64 v) : v_(v), inf_(false) {}  // NOLINT: implicit by design
  static constexpr ExtendedNat infinity() {
    ExtendedNat e;
    e.inf_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return inf_; }
  constexpr u64 finite_value() const {
    return inf_ ? throw PropertyError("finite_value() on infinity") : v_;
  }

  friend constexpr bool operator==(const ExtendedNat& a, const ExtendedNat& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b) {
    if (a.inf_ && b.inf_) return std::strong_ordering::equal;
    if (a.inf_) return std::strong_ordering::greater;
    if (b.inf_) return std::strong_ordering::less;
    return a.v_ <=> b.v_;
  }

  friend constexpr ExtendedNat operator+(const ExtendedNat& a, u64 b) {
    return a.inf_ ? a : ExtendedNat(a.v_ + b);
  }

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  u64 v_;
  bool inf_;
};

}  // namespace pgrouplab

#endif
