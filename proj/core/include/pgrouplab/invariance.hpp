#ifndef PGROUPLAB_INVARIANCE_HPP
#define PGROUPLAB_INVARIANCE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pgrouplab/hom.hpp"
#include "pgrouplab/subgroup.hpp"

namespace pgrouplab {

/// Evidence that a subgroup is not invariant: a structure map carries one of
/// its basis elements outside.
struct InvarianceViolation {
  Homomorphism map;
  Element source;
  Element image;
};

/// X is fully invariant iff every additive generator of End(G) keeps it
/// inside itself. Returns the first violation in generator order, if any.
std::optional<InvarianceViolation> full_invariance_violation(const Subgroup& x);
bool is_fully_invariant(const Subgroup& x);

/// X is characteristic iff the automorphism generators (and their inverses,
/// checked for a direct two-sided argument) keep it inside itself.
std::optional<InvarianceViolation> characteristic_violation(const Subgroup& x);
bool is_characteristic(const Subgroup& x);

/// Least fully invariant subgroup containing x.
Subgroup fi_closure(const Subgroup& x);
/// Least characteristic subgroup containing x.
Subgroup char_closure(const Subgroup& x);

/// End(G)x — the fully invariant closure of a single element, computed in
/// closed form from coordinate valuations.
Subgroup endo_orbit(const Element& x);

/// {y : every p^n y has height >= |p^n x|}; contains endo_orbit(x), with
/// equality at every x exactly when the group is fully transitive.
Subgroup height_hull(const Element& x);

/// Some endomorphism with phi(x) = y, if one exists (decided exactly).
std::optional<Homomorphism> find_endo_mapping(const Element& x, const Element& y);

/// Some automorphism with alpha(x) = y, found by orbit search over the
/// automorphism generators. Exhaustive: nullopt proves absence. Throws
/// BoundError if the group is larger than the budget.
std::optional<AutCertificate> find_automorphism_mapping(const Element& x, const Element& y,
                                                        u64 budget = limits::kBudget);

/// Pair (x, y) with equal height sequences but no automorphism x -> y.
std::optional<std::pair<Element, Element>> transitivity_violation(const GroupShape& g,
                                                                  u64 budget = limits::kBudget);
bool is_transitive(const GroupShape& g, u64 budget = limits::kBudget);

/// Pair (x, y) with pointwise |p^n x| <= |p^n y| but no endomorphism x -> y.
std::optional<std::pair<Element, Element>> full_transitivity_violation(
    const GroupShape& g, u64 budget = limits::kBudget);
bool is_fully_transitive(const GroupShape& g, u64 budget = limits::kBudget);

/// Every subgroup sorted into its invariance classes, with an escape witness
/// for each characteristic subgroup that is not fully invariant.
struct ClassificationReport {
  GroupShape group;
  std::vector<Subgroup> subgroups;  // all of them, enumeration order
  std::vector<Subgroup> fully_invariant;
  std::vector<Subgroup> characteristic;
  std::vector<std::pair<Subgroup, InvarianceViolation>> gap;  // char but not f.i.
};
ClassificationReport classify(const GroupShape& g, u64 max_count = limits::kBudget);

/// One level of the height-balanced splitting: p^j z = y + y_prime with
/// |y| = |y_prime| = |p^j x| and p y = the level-(j+1) y.
struct SplitLevel {
  u32 level;
  Element y;
  Element y_prime;
};

/// Backward-induction chain, levels j = k down to 0 where p^k is the order
/// of x. The j = 0 entry gives z = y0 + y0p with both height sequences
/// equal to x's.
struct SplitChain {
  std::vector<SplitLevel> levels;
  const Element& y0() const { return levels.back().y; }
  const Element& y0p() const { return levels.back().y_prime; }
};

/// Splits z into two summands whose height sequences both equal x's.
/// Requires: ||x|| <= ||z|| pointwise, p^k z = 0 for p^k the order of x, and
/// Ulm invariant >= 2 at every finite height |p^j x| (throws PropertyError
/// naming the first failing level otherwise). Deterministic: lexicographically
/// smallest choices at every step.
SplitChain split_by_height(const Element& x, const Element& z, u64 budget = limits::kBudget);

/// Automorphisms (alpha, alpha') with alpha(x) + alpha'(x) = z, found by
/// splitting z and mapping x onto each half. Returns nullopt when z fails the
/// necessary conditions (||x|| <= ||z||, p^k z = 0) or when a half is not in
/// the automorphism orbit of x; complete on transitive groups.
std::optional<std::pair<AutCertificate, AutCertificate>> sum_of_two_autos_mapping(
    const Element& x, const Element& z, u64 budget = limits::kBudget);

}  // namespace pgrouplab

#endif
