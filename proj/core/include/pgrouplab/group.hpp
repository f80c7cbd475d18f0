#ifndef PGROUPLAB_GROUP_HPP
#define PGROUPLAB_GROUP_HPP

#include <string>
#include <vector>

#include "pgrouplab/common.hpp"
#include "pgrouplab/extended_nat.hpp"

namespace pgrouplab {

/// Isomorphism type of a finite abelian p-group: a prime p and the exponent
/// partition lambda, G = (+)_i Z_{p^lambda[i]}. Canonical form keeps lambda
/// sorted non-decreasing; element coordinates follow that order, coords[i]
/// reduced into [0, p^lambda[i]). The rank k may be 0 (trivial group).
class GroupShape {
 public:
  GroupShape() : p_(2) {}  // trivial group; prime is irrelevant but fixed
  GroupShape(u64 p, std::vector<u32> exponents);

  u64 p() const { return p_; }
  std::size_t rank() const { return lambda_.size(); }
  const std::vector<u32>& exponents() const { return lambda_; }
  u32 exponent_at(std::size_t i) const { return lambda_[i]; }
  u64 modulus_at(std::size_t i) const { return moduli_[i]; }
  const std::vector<u64>& moduli() const { return moduli_; }

  /// Largest exponent (0 for the trivial group).
  u32 max_exponent() const { return lambda_.empty() ? 0 : lambda_.back(); }
  /// log_p |G|.
  u64 order_exponent() const;
  PPower order() const { return {p_, order_exponent()}; }
  PPower group_exponent() const { return {p_, max_exponent()}; }
  bool is_trivial() const { return lambda_.empty(); }

  std::string str() const;

  bool operator==(const GroupShape&) const = default;

 private:
  u64 p_;
  std::vector<u32> lambda_;  // non-decreasing
  std::vector<u64> moduli_;  // p^lambda[i]
};

/// An element of a GroupShape: a reduced residue vector. Immutable value.
class Element {
 public:
  Element(GroupShape shape, std::vector<u64> coords);

  static Element zero(const GroupShape& g);
  /// e_i, the i-th canonical generator.
  static Element basis(const GroupShape& g, std::size_t i);

  const GroupShape& shape() const { return shape_; }
  const std::vector<u64>& coords() const { return coords_; }
  u64 coord(std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  std::string str() const;

  bool operator==(const Element&) const = default;
  /// Coordinate-lexicographic order; total on elements of one shape.
  bool operator<(const Element& o) const { return coords_ < o.coords_; }

 private:
  GroupShape shape_;
  std::vector<u64> coords_;
};

Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x);
Element operator-(const Element& x, const Element& y);
/// m * x for any integer m (negatives act through the inverse).
Element scale(i64 m, const Element& x);

/// p-height |x| = max{n : x in p^n G}; infinite exactly for x = 0.
ExtendedNat height(const Element& x);

/// Smallest k with p^k x = 0.
u32 order_exponent(const Element& x);

/// Exponent of the largest power of p dividing x. Requires x != 0.
u64 p_valuation(u64 x, u64 p);

/// The sequence (|x|, |px|, |p^2 x|, ...), of length max_exponent + 1.
/// Strictly increasing until it reaches infinity and stays there.
class HeightSequence {
 public:
  static HeightSequence of(const Element& x);
  explicit HeightSequence(std::vector<ExtendedNat> entries);

  const std::vector<ExtendedNat>& entries() const { return h_; }
  std::size_t size() const { return h_.size(); }
  const ExtendedNat& operator[](std::size_t i) const { return h_[i]; }

  /// Pointwise comparison; sequences must have equal length.
  bool leq(const HeightSequence& o) const;

  std::string str() const;
  bool operator==(const HeightSequence&) const = default;

 private:
  std::vector<ExtendedNat> h_;
};

/// f_n(G) = #{i : lambda[i] = n + 1}, the dimension of the n-th Ulm factor
/// U_n = {g in p^n G : pg in p^{n+2} G} / p^{n+1} G over F_p.
u64 ulm_invariant(const GroupShape& g, u32 n);

/// Representatives in (p^n G)[p] whose classes form a basis of U_n, chosen
/// greedily in coordinate-lexicographic order. Size equals ulm_invariant.
std::vector<Element> ulm_factor_basis(const GroupShape& g, u32 n);

/// All |G| elements in coordinate-lexicographic order. Guarded by max_order.
std::vector<Element> all_elements(const GroupShape& g, u64 max_order = limits::kMaxOrder);

}  // namespace pgrouplab

#endif
