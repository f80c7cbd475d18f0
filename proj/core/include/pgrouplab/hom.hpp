#ifndef PGROUPLAB_HOM_HPP
#define PGROUPLAB_HOM_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pgrouplab/common.hpp"
#include "pgrouplab/group.hpp"
#include "pgrouplab/rng.hpp"
#include "pgrouplab/subgroup.hpp"

namespace pgrouplab {

/// Homomorphism between finite abelian p-groups of the same prime, stored as
/// an integer matrix acting on coordinate columns: row i of the matrix gives
/// codomain coordinate i. Entry (i, j) must be a multiple of
/// p^{max(0, mu_i - lambda_j)} — exactly the condition making e_j |-> column j
/// well defined — and is kept reduced modulo p^{mu_i}.
class Homomorphism {
 public:
  Homomorphism(GroupShape domain, GroupShape codomain, std::vector<std::vector<u64>> rows);

  static Homomorphism zero(const GroupShape& domain, const GroupShape& codomain);
  static Homomorphism identity(const GroupShape& g);

  const GroupShape& domain() const { return domain_; }
  const GroupShape& codomain() const { return codomain_; }
  const std::vector<std::vector<u64>>& matrix() const { return rows_; }
  bool is_endo() const { return domain_ == codomain_; }

  Element apply(const Element& x) const;
  Element operator()(const Element& x) const { return apply(x); }

  /// Span of the images of the subgroup's basis.
  Subgroup image(const Subgroup& x) const;
  Subgroup image() const;
  Subgroup kernel() const;

  std::string str() const;

  friend bool operator==(const Homomorphism& a, const Homomorphism& b) = default;
  /// Deterministic order among homomorphisms of one signature.
  friend bool operator<(const Homomorphism& a, const Homomorphism& b) {
    return a.rows_ < b.rows_;
  }

 private:
  GroupShape domain_;
  GroupShape codomain_;
  std::vector<std::vector<u64>> rows_;
};

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);
Homomorphism add(const Homomorphism& a, const Homomorphism& b);
Homomorphism sub(const Homomorphism& a, const Homomorphism& b);
Homomorphism scale_hom(i64 m, const Homomorphism& f);

/// An automorphism together with its two-sided inverse; both verified.
struct AutCertificate {
  Homomorphism forward;
  Homomorphism inverse;
};

/// Decides invertibility by checking that the image spans the whole group and
/// solving for a two-sided inverse; returns the certificate on success.
std::optional<AutCertificate> is_automorphism(const Homomorphism& f);

/// Fast equivalent test: an endomorphism is invertible iff its matrix is
/// invertible entrywise mod p (the induced map on G/pG).
bool is_invertible_mod_p(const Homomorphism& f);

/// log_p |End(G)| = sum_{i,j} min(lambda_i, lambda_j).
u64 endo_order_exponent(const GroupShape& g);
PPower endo_order(const GroupShape& g);
/// |Aut(G)| by the closed product formula over the exponent partition.
/// Throws BoundError if the count overflows 64 bits.
u64 aut_order(const GroupShape& g);

/// Additive generators of End(G): eps_{ij} sends e_j to p^{max(0,l_i-l_j)} e_i,
/// listed row-major in (i, j).
std::vector<Homomorphism> endo_additive_generators(const GroupShape& g);

/// A small generating set of Aut(G): coordinate unit scalings, swaps of
/// equal-exponent coordinates, and elementary shears id + eps_{ij}.
std::vector<AutCertificate> aut_generators(const GroupShape& g);

/// Streams every endomorphism in a fixed deterministic order (entry odometer,
/// last matrix entry fastest). Stop early by returning false.
void for_each_endo(const GroupShape& g, const std::function<bool(const Homomorphism&)>& visit);

/// Throws BoundError if |End(G)| exceeds max_count.
std::vector<Homomorphism> enumerate_endos(const GroupShape& g, u64 max_count = limits::kMaxEndos);

/// All automorphisms with certificates; deterministic order as above.
std::vector<AutCertificate> enumerate_autos(const GroupShape& g,
                                            u64 max_count = limits::kMaxEndos);

Homomorphism random_hom(const GroupShape& domain, const GroupShape& codomain, Rng& rng);
Homomorphism random_endo(const GroupShape& g, Rng& rng);
AutCertificate random_auto(const GroupShape& g, Rng& rng);

/// Shape made of the selected coordinates of g (indices strictly increasing).
GroupShape sub_shape(const GroupShape& g, const std::vector<std::size_t>& coords);

/// Shear along a coordinate split G = V + W: v + w |-> v + gamma(v) + w.
/// v_coords/w_coords must partition the coordinates of g; gamma maps the
/// V shape into the W shape. Always invertible, with inverse the -gamma shear.
AutCertificate shear(const GroupShape& g, const std::vector<std::size_t>& v_coords,
                     const std::vector<std::size_t>& w_coords, const Homomorphism& gamma);

/// G = H + H with the two copies interleaved coordinate-wise: half component
/// i sits at coordinates 2i (copy 0) and 2i+1 (copy 1) of the square.
class SquareStructure {
 public:
  explicit SquareStructure(const GroupShape& half);

  const GroupShape& whole() const { return whole_; }
  const GroupShape& half() const { return half_; }
  std::size_t position(std::size_t half_index, int copy) const;

  Homomorphism inject(int copy) const;   // half -> whole
  Homomorphism project(int copy) const;  // whole -> half
  AutCertificate swap_copies() const;    // exchanges the two copies
  /// Idempotent inject(copy) o project(copy); the two sum to the identity.
  Homomorphism kappa(int copy) const;

 private:
  GroupShape half_;
  GroupShape whole_;
};

/// Views g as a square if its exponent multiset pairs up exactly.
std::optional<SquareStructure> recognize_square(const GroupShape& g);

}  // namespace pgrouplab

#endif
