#ifndef PGROUPLAB_SUBGROUP_HPP
#define PGROUPLAB_SUBGROUP_HPP

#include <string>
#include <utility>
#include <vector>

#include "pgrouplab/common.hpp"
#include "pgrouplab/extended_nat.hpp"
#include "pgrouplab/group.hpp"

namespace pgrouplab {

/// Subgroup of a finite abelian p-group, stored as the canonical
/// upper-triangular basis of its coordinate lattice. Equal subgroups always
/// compare equal; basis rows are a deterministic fingerprint.
class Subgroup {
 public:
  /// Zero subgroup of the trivial group; useful only as a placeholder.
  Subgroup() = default;

  static Subgroup zero(const GroupShape& g);
  static Subgroup full(const GroupShape& g);
  static Subgroup span(const GroupShape& g, const std::vector<Element>& gens);
  /// Span of raw coordinate rows (reduced modulo the coordinate moduli).
  static Subgroup from_rows(const GroupShape& g, const std::vector<std::vector<u64>>& rows);
  /// Direct sum of cyclic pieces: component i has order p^{c_i}, c_i <= lambda_i.
  static Subgroup box(const GroupShape& g, const std::vector<u32>& component_exponents);

  const GroupShape& shape() const { return shape_; }
  /// Canonical basis: k x k, upper triangular, pivot p-powers dividing the
  /// column modulus, entries above a pivot reduced modulo it.
  const std::vector<std::vector<u64>>& basis_rows() const { return basis_; }
  /// Nonzero basis rows as group elements.
  std::vector<Element> generators() const;

  bool contains(const Element& x) const;
  bool is_subset_of(const Subgroup& other) const;
  bool is_zero() const;
  bool is_full() const;

  u64 order_exponent() const;
  PPower order() const;

  /// All elements, sorted in coordinate-lexicographic order.
  /// Throws BoundError if the subgroup has more than max_order elements.
  std::vector<Element> elements(u64 max_order = limits::kMaxOrder) const;

  std::string str() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) = default;

 private:
  Subgroup(GroupShape shape, std::vector<std::vector<u64>> basis)
      : shape_(std::move(shape)), basis_(std::move(basis)) {}

  GroupShape shape_;
  std::vector<std::vector<u64>> basis_;
};

/// Deterministic total order on subgroups of one group (basis-lexicographic).
bool lex_less(const Subgroup& a, const Subgroup& b);

Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup meet(const Subgroup& a, const Subgroup& b);

/// log_p [y : x]; requires x to be a subgroup of y.
u64 index_exponent(const Subgroup& y, const Subgroup& x);
PPower index_of(const Subgroup& y, const Subgroup& x);

/// Isomorphism type of y/x as a group shape (requires x subgroup of y).
GroupShape quotient_shape(const Subgroup& y, const Subgroup& x);
/// Cyclic-decomposition exponents of y/x, sorted non-decreasing.
std::vector<u32> quotient_type(const Subgroup& y, const Subgroup& x);

/// Indexes ([x : x^y], [y : x^y]) over the meet; both trivial iff x == y.
std::pair<PPower, PPower> commensurability_defect(const Subgroup& x, const Subgroup& y);

/// Height-threshold sequence (m_0, m_1, ...): entry n constrains |p^n z|.
class AlphaSequence {
 public:
  AlphaSequence() = default;
  explicit AlphaSequence(std::vector<ExtendedNat> entries) : entries_(std::move(entries)) {}

  const std::vector<ExtendedNat>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::string str() const;

  friend bool operator==(const AlphaSequence& a, const AlphaSequence& b) = default;

 private:
  std::vector<ExtendedNat> entries_;
};

/// {z : |p^n z| >= a_n for all n}; always fully invariant.
Subgroup g_alpha(const GroupShape& g, const AlphaSequence& a);

/// Pointwise-minimal height data of a subgroup: entry n is min |p^n z| over z.
/// Has max_exponent(G)+1 entries.
AlphaSequence canonical_alpha(const Subgroup& x);

/// Canonical representative defining the same threshold subgroup.
AlphaSequence normalize_alpha(const GroupShape& g, const AlphaSequence& a);

/// p^k G.
Subgroup power_subgroup(const GroupShape& g, u32 k);
/// G[p^k] = kernel of multiplication by p^k.
Subgroup socle_subgroup(const GroupShape& g, u32 k = 1);

/// Every subgroup, sorted basis-lexicographically.
/// Throws BoundError if the search space or result exceeds max_count.
std::vector<Subgroup> enumerate_subgroups(const GroupShape& g, u64 max_count = limits::kBudget);

}  // namespace pgrouplab

#endif
