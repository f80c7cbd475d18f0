#include "pgrouplab/inertia.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "pgrouplab/rng.hpp"

namespace pgrouplab {

InertiaQuotient hat(const Homomorphism& phi, const Subgroup& x) {
  if (!phi.is_endo() || !(phi.domain() == x.shape()))
    throw std::invalid_argument("inertia quotient requires an endomorphism of the ambient group");
  const Subgroup extended = join(phi.image(x), x);
  std::vector<u32> type = quotient_type(extended, x);
  u64 exp = 0;
  for (u32 e : type) exp += e;
  if (exp != index_exponent(extended, x))
    throw PropertyError("inertia quotient type does not match its order");
  return {{x.shape().p(), exp}, std::move(type)};
}

InertiaProfile inertia_profile(const Subgroup& x, MapFamily mode, const ProfileStrategy& strategy,
                               u64 max_maps) {
  const GroupShape& g = x.shape();
  InertiaProfile out{x, mode, strategy, {}, {g.p(), 0}, strategy.is_exhaustive};
  auto note = [&](u64 id, const Homomorphism& f) {
    const PPower order = hat(f, x).order;
    out.records.emplace_back(id, order);
    if (out.sup.exp < order.exp) out.sup = order;
  };
  if (strategy.is_exhaustive) {
    const std::optional<u64> total = endo_order(g).value();
    if (!total || *total > max_maps)
      throw BoundError("|End(G)| = " + endo_order(g).str() + " exceeds the enumeration bound " +
                       std::to_string(max_maps));
    u64 id = 0;
    for_each_endo(g, [&](const Homomorphism& f) {
      if (mode == MapFamily::automorphisms && !is_invertible_mod_p(f)) return true;
      note(id++, f);
      return true;
    });
  } else {
    Rng rng(strategy.seed);
    for (u64 i = 0; i < strategy.count; ++i)
      note(i, mode == MapFamily::endomorphisms ? random_endo(g, rng) : random_auto(g, rng).forward);
  }
  return out;
}

SumBoundReport check_sum_bound(const std::vector<Homomorphism>& parts, const Subgroup& x) {
  const GroupShape& g = x.shape();
  Homomorphism gamma = Homomorphism::zero(g, g);
  u64 rhs_exp = 0;
  for (const Homomorphism& f : parts) {
    rhs_exp += hat(f, x).order.exp;
    gamma = add(gamma, f);
  }
  const PPower lhs = hat(gamma, x).order;
  return {lhs, {g.p(), rhs_exp}, lhs.exp <= rhs_exp};
}

namespace {

// Square endomorphism with the given A -> A blocks: row block r, column
// block c reads copy c and writes copy r.
Homomorphism assemble(const SquareStructure& sq, const Homomorphism& m00, const Homomorphism& m01,
                      const Homomorphism& m10, const Homomorphism& m11) {
  auto lift = [&](const Homomorphism& block, int r, int c) {
    return compose(sq.inject(r), compose(block, sq.project(c)));
  };
  return add(add(lift(m00, 0, 0), lift(m01, 0, 1)), add(lift(m10, 1, 0), lift(m11, 1, 1)));
}

AutCertificate certify(Homomorphism forward, Homomorphism inverse) {
  const Homomorphism id = Homomorphism::identity(forward.domain());
  if (!(compose(forward, inverse) == id) || !(compose(inverse, forward) == id))
    throw PropertyError("decomposition part failed to verify as an automorphism");
  return {std::move(forward), std::move(inverse)};
}

}  // namespace

AutDecomposition four_auto_decompose(const Homomorphism& gamma) {
  if (!gamma.is_endo()) throw std::invalid_argument("decomposition requires an endomorphism");
  const std::optional<SquareStructure> sq = recognize_square(gamma.domain());
  if (!sq) throw std::invalid_argument("four-automorphism decomposition requires a square-shaped group");

  const GroupShape& half = sq->half();
  auto block = [&](int r, int c) {
    return compose(sq->project(r), compose(gamma, sq->inject(c)));
  };
  const Homomorphism a = block(0, 0), b = block(0, 1), c = block(1, 0), d = block(1, 1);
  const Homomorphism id = Homomorphism::identity(half);
  const Homomorphism nid = scale_hom(-1, id);
  const Homomorphism z = Homomorphism::zero(half, half);

  std::vector<AutCertificate> parts;
  parts.push_back(certify(assemble(*sq, id, z, c, id), assemble(*sq, id, z, scale_hom(-1, c), id)));
  parts.push_back(certify(assemble(*sq, nid, b, z, nid), assemble(*sq, nid, scale_hom(-1, b), z, nid)));
  parts.push_back(certify(assemble(*sq, a, id, id, z), assemble(*sq, z, id, id, scale_hom(-1, a))));
  parts.push_back(certify(assemble(*sq, z, nid, nid, d), assemble(*sq, scale_hom(-1, d), nid, nid, z)));

  Homomorphism sum = Homomorphism::zero(gamma.domain(), gamma.domain());
  for (const AutCertificate& part : parts) sum = add(sum, part.forward);
  if (!(sum == gamma)) throw PropertyError("decomposition parts do not sum to the target");
  return {gamma, std::move(parts)};
}

namespace {

// d x d bit matrix, rows packed low-to-high in a u64 (d <= 7). Rank test
// over the field with two elements by elimination.
bool invertible_mod2(u64 bits, std::size_t d) {
  std::array<u64, 8> rows{};
  const u64 row_mask = (u64{1} << d) - 1;
  for (std::size_t r = 0; r < d; ++r) rows[r] = (bits >> (r * d)) & row_mask;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t pivot = d;
    for (std::size_t r = c; r < d; ++r)
      if ((rows[r] >> c) & 1) {
        pivot = r;
        break;
      }
    if (pivot == d) return false;
    std::swap(rows[c], rows[pivot]);
    for (std::size_t r = c + 1; r < d; ++r)
      if ((rows[r] >> c) & 1) rows[r] ^= rows[c];
  }
  return true;
}

}  // namespace

std::optional<AutDecomposition> two_auto_decompose(const Homomorphism& gamma, u64 budget) {
  if (!gamma.is_endo()) throw std::invalid_argument("decomposition requires an endomorphism");
  const GroupShape& g = gamma.domain();
  const u64 p = g.p();
  const std::size_t k = g.rank();
  const auto& m = gamma.matrix();

  // Mod p the matrix is block-upper-triangular over the equal-exponent runs,
  // and an endomorphism is invertible iff its diagonal blocks are. So
  // gamma = alpha + beta with both invertible iff every diagonal block D
  // splits as A + (D - A) with A and D - A invertible mod p; alpha is then
  // the block-diagonal lift of the chosen A's and beta the remainder.
  std::vector<std::vector<u64>> alpha_rows(k, std::vector<u64>(k, 0));
  u64 spent = 0;
  std::size_t s = 0;
  while (s < k) {
    std::size_t e = s;
    while (e < k && g.exponent_at(e) == g.exponent_at(s)) ++e;
    const std::size_t d = e - s;
    if (p != 2) {
      // Take the strict lower part of D plus a unit diagonal avoiding the
      // diagonal of D: A is lower-triangular invertible and D - A is
      // upper-triangular invertible.
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < r; ++c) alpha_rows[s + r][s + c] = m[s + r][s + c] % p;
        alpha_rows[s + r][s + r] = m[s + r][s + r] % p == 1 ? 2 : 1;
      }
    } else {
      if (d >= 8 || (u64{1} << (d * d)) > budget - spent)
        throw BoundError("two-automorphism block search over 2^" + std::to_string(d * d) +
                         " candidates exceeds the budget");
      spent += u64{1} << (d * d);
      u64 dbits = 0;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) dbits |= (m[s + r][s + c] & 1) << (r * d + c);
      bool found = false;
      for (u64 mask = 0; mask < (u64{1} << (d * d)); ++mask) {
        if (!invertible_mod2(mask, d) || !invertible_mod2(mask ^ dbits, d)) continue;
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) alpha_rows[s + r][s + c] = (mask >> (r * d + c)) & 1;
        found = true;
        break;
      }
      if (!found) return std::nullopt;  // proven: no split of this block exists
    }
    s = e;
  }

  const Homomorphism alpha(g, g, std::move(alpha_rows));
  const Homomorphism beta = sub(gamma, alpha);
  const std::optional<AutCertificate> ca = is_automorphism(alpha);
  const std::optional<AutCertificate> cb = is_automorphism(beta);
  if (!ca || !cb) throw PropertyError("two-automorphism lift failed to certify");
  if (!(add(ca->forward, cb->forward) == gamma))
    throw PropertyError("two-automorphism parts do not sum to the target");
  return AutDecomposition{gamma, {*ca, *cb}};
}

bool sum_of_autos_spanning(const GroupShape& g, u64 max_maps) {
  const std::vector<AutCertificate> autos = enumerate_autos(g, max_maps);
  const std::size_t k = g.rank();

  // One coordinate per matrix slot (i, j); the slot group is cyclic of order
  // p^{min(li, lj)} after dividing out the forced p^{max(0, li - lj)} factor.
  struct Slot {
    u32 exp;
    std::size_t i, j;
  };
  std::vector<Slot> slots;
  slots.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      slots.push_back({std::min(g.exponent_at(i), g.exponent_at(j)), i, j});
  std::stable_sort(slots.begin(), slots.end(),
                   [](const Slot& a, const Slot& b) { return a.exp < b.exp; });
  std::vector<u32> exps;
  exps.reserve(slots.size());
  for (const Slot& sl : slots) exps.push_back(sl.exp);
  const GroupShape end_shape(g.p(), std::move(exps));

  std::vector<Element> gens;
  gens.reserve(autos.size());
  for (const AutCertificate& cert : autos) {
    const auto& m = cert.forward.matrix();
    std::vector<u64> v(slots.size());
    for (std::size_t c = 0; c < slots.size(); ++c) {
      const u32 li = g.exponent_at(slots[c].i), lj = g.exponent_at(slots[c].j);
      v[c] = m[slots[c].i][slots[c].j] / checked_pow(g.p(), li > lj ? li - lj : 0);
    }
    gens.emplace_back(end_shape, std::move(v));
  }
  return Subgroup::span(end_shape, gens).order_exponent() == endo_order_exponent(g);
}

SquareHullResult square_hull(const Subgroup& x) {
  const std::optional<SquareStructure> sq = recognize_square(x.shape());
  if (!sq) throw std::invalid_argument("square hull requires a square-shaped ambient group");
  const Homomorphism sigma = sq->swap_copies().forward;
  const Homomorphism k0 = sq->kappa(0), k1 = sq->kappa(1);
  const Homomorphism s0 = compose(sigma, k0), s1 = compose(sigma, k1);

  // kappa_0(X) lands in copy 0 directly and sigma kappa_1(X) carries the
  // copy-1 component over, so projecting their join reads Y off copy 0.
  const Subgroup embedded = join(k0.image(x), s1.image(x));
  const Subgroup y = sq->project(0).image(embedded);
  const Subgroup hull = join(sq->inject(0).image(y), sq->inject(1).image(y));
  if (!x.is_subset_of(hull)) throw PropertyError("square hull does not contain the subgroup");

  const PPower index = index_of(hull, x);
  const u64 bound_exp =
      hat(k0, x).order.exp + hat(k1, x).order.exp + hat(s0, x).order.exp + hat(s1, x).order.exp;
  return {y, hull, index, {x.shape().p(), bound_exp}, index.exp <= bound_exp};
}

NoOneFamily noone_family(u64 p, u32 n) {
  std::vector<u32> exps(n);
  std::iota(exps.begin(), exps.end(), 1);
  const GroupShape half(p, std::move(exps));  // ctor bounds the coordinate moduli
  const SquareStructure sq(half);
  const GroupShape g = sq.whole();
  const Subgroup x = sq.inject(1).image(socle_subgroup(half, 1));

  NoOneFamily out{g, x, {}, {}};
  const Homomorphism id = Homomorphism::identity(g);
  for (u32 swapped = 0; swapped <= n; ++swapped) {
    std::vector<std::vector<u64>> rows(g.rank(), std::vector<u64>(g.rank(), 0));
    for (std::size_t i = 0; i < g.rank(); ++i) rows[i][i] = 1;
    for (std::size_t i = 0; i < swapped; ++i) {
      const std::size_t a = sq.position(i, 0), b = sq.position(i, 1);
      rows[a][a] = rows[b][b] = 0;
      rows[a][b] = rows[b][a] = 1;
    }
    Homomorphism f(g, g, std::move(rows));
    if (!(compose(f, f) == id)) throw PropertyError("swap map failed to square to the identity");
    const PPower order = hat(f, x).order;
    if (!(order == PPower{p, swapped}))
      throw PropertyError("swap inertia order " + order.str() + " differs from p^" +
                          std::to_string(swapped));
    out.phis.push_back({f, f});
    out.hat_exponents.push_back(order.exp);
  }
  return out;
}

}  // namespace pgrouplab
