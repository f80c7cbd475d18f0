#ifndef PGROUPLAB_COMMON_HPP
#define PGROUPLAB_COMMON_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace pgrouplab {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Raised when an operation would exceed a configured resource bound.
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a mathematical postcondition that must hold fails to hold.
/// Reaching this is a defect, not a user error.
struct PropertyError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Raised on malformed textual input; carries the offending position.
struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

/// p^exp with overflow-free exponent arithmetic. Orders of p-groups, their
/// subgroups, indexes and quotients are always powers of p, so they are kept
/// in exponent form and rendered as a value only when that fits in 64 bits.
struct PPower {
  u64 p = 2;
  u64 exp = 0;

  std::optional<u64> value() const {
    u64 v = 1;
    for (u64 i = 0; i < exp; ++i) {
      if (v > UINT64_MAX / p) return std::nullopt;
      v *= p;
    }
    return v;
  }

  std::string str() const {
    if (auto v = value()) return std::to_string(*v);
    return std::to_string(p) + "^" + std::to_string(exp);
  }

  bool operator==(const PPower&) const = default;
};

/// p^e as a u64; throws BoundError when the result does not fit.
inline u64 checked_pow(u64 p, u64 e) {
  u64 v = 1;
  for (u64 i = 0; i < e; ++i) {
    if (v > UINT64_MAX / p) throw BoundError("p^" + std::to_string(e) + " exceeds 64-bit range");
    v *= p;
  }
  return v;
}

namespace limits {
/// Default cap on |G| for element/subgroup enumeration.
inline constexpr u64 kMaxOrder = u64{1} << 16;
/// Default cap on |End(G)| for endomorphism/automorphism enumeration.
inline constexpr u64 kMaxEndos = u64{1} << 20;
/// Default candidate budget for two_auto_decompose.
inline constexpr u64 kBudget = 1'000'000;
}  // namespace limits

}  // namespace pgrouplab

#endif
