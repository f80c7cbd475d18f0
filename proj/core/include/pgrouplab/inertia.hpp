#ifndef PGROUPLAB_INERTIA_HPP
#define PGROUPLAB_INERTIA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pgrouplab/common.hpp"
#include "pgrouplab/group.hpp"
#include "pgrouplab/hom.hpp"
#include "pgrouplab/subgroup.hpp"

namespace pgrouplab {

/// Isomorphism data of (phi(X)+X)/X — how far phi pushes X outside itself.
/// order = p^(sum of type); order 1 iff phi(X) is contained in X.
struct InertiaQuotient {
  PPower order;
  std::vector<u32> type;  // cyclic-decomposition exponents, non-decreasing
};

InertiaQuotient hat(const Homomorphism& phi, const Subgroup& x);

enum class MapFamily { endomorphisms, automorphisms };

/// Which maps of the family a profile visits.
struct ProfileStrategy {
  static ProfileStrategy exhaustive() { return {true, 0, 0}; }
  static ProfileStrategy sampled(u64 seed, u64 count) { return {false, seed, count}; }

  bool is_exhaustive = true;
  u64 seed = 0;   // sampled only
  u64 count = 0;  // sampled only
};

/// Observed inertia quotient orders of one subgroup over a map family.
/// records pair each map's ordinal (family enumeration order when exhaustive,
/// probe index when sampled) with its quotient order; sup is the largest.
/// exact is true iff every map of the family was visited, making sup the
/// true supremum.
struct InertiaProfile {
  Subgroup subgroup;
  MapFamily mode = MapFamily::endomorphisms;
  ProfileStrategy strategy;
  std::vector<std::pair<u64, PPower>> records;
  PPower sup;
  bool exact = false;
};

/// Throws BoundError if the exhaustive strategy would enumerate more than
/// max_maps endomorphisms; sampling never enumerates.
InertiaProfile inertia_profile(const Subgroup& x, MapFamily mode, const ProfileStrategy& strategy,
                               u64 max_maps = limits::kMaxEndos);

/// |gamma^(X)| <= |phi_1^(X)| ... |phi_k^(X)| for gamma = phi_1 + ... + phi_k.
struct SumBoundReport {
  PPower lhs;   // quotient order of the summed map
  PPower rhs;   // product of the parts' quotient orders
  bool holds = false;
};

SumBoundReport check_sum_bound(const std::vector<Homomorphism>& parts, const Subgroup& x);

/// target written as a sum of certified automorphisms (2 or 4 parts).
struct AutDecomposition {
  Homomorphism target;
  std::vector<AutCertificate> parts;
};

/// Splits an endomorphism of a square A+A into four automorphisms via its
/// 2x2 block form (a b; c d): the shear (1 0; c 1), the shear-negation
/// (-1 b; 0 -1), and the two swap-like blocks (a 1; 1 0) and (0 -1; -1 d),
/// each invertible for every block value. Throws std::invalid_argument when
/// the domain is not a recognized square.
AutDecomposition four_auto_decompose(const Homomorphism& gamma);

/// Sum-of-two-automorphisms decomposition, decided per equal-exponent
/// diagonal block of the matrix mod p: gamma = alpha + beta with both
/// invertible iff every diagonal block D splits as A + (D - A) with A and
/// D - A invertible mod p. For odd p such an A always exists (triangular
/// construction); for p = 2 each block is searched exhaustively, so nullopt
/// is proven absence and BoundError means the search would exceed budget.
std::optional<AutDecomposition> two_auto_decompose(const Homomorphism& gamma,
                                                   u64 budget = limits::kBudget);

/// True iff every endomorphism of G is a finite sum of automorphisms;
/// decided by spanning: the additive closure of Aut(G) inside the additive
/// group of End(G) (coordinates: matrix entries over all (i, j) slots).
/// Throws BoundError if |End(G)| exceeds max_maps.
bool sum_of_autos_spanning(const GroupShape& g, u64 max_maps = limits::kMaxEndos);

/// Smallest square Y+Y containing X, built from the copy projections, with
/// the quadruple-product bound on its index over X.
struct SquareHullResult {
  Subgroup hull_half;  // Y, a subgroup of the half shape A
  Subgroup hull;       // Y+Y inside the square; contains X
  PPower index;        // |(Y+Y)/X|
  PPower bound;        // product of the four copy-map quotient orders
  bool holds = false;  // index <= bound
};

SquareHullResult square_hull(const Subgroup& x);

/// Swap family on G = B+B with B = Z_p + Z_{p^2} + ... + Z_{p^n} and
/// X = 0+B[p]: phi_k exchanges the first k summand pairs of the two copies,
/// and its inertia quotient over X has order exactly p^k. The strict growth
/// in k is the finite signature that no single bound works for all of Aut(G).
struct NoOneFamily {
  GroupShape group;
  Subgroup x;
  std::vector<AutCertificate> phis;  // indexed k = 0..n; phi_0 = identity
  std::vector<u64> hat_exponents;    // log_p |phi_k^(X)| = k, verified
};

NoOneFamily noone_family(u64 p, u32 n);

}  // namespace pgrouplab

#endif
