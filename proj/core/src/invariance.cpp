#include "pgrouplab/invariance.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>

#include "pgrouplab/group.hpp"

namespace pgrouplab {

namespace {

// First basis generator of x that f moves outside x, if any.
std::optional<InvarianceViolation> first_escape(const Subgroup& x, const Homomorphism& f) {
  for (const Element& g : x.generators()) {
    Element img = f(g);
    if (!x.contains(img)) return InvarianceViolation{f, g, std::move(img)};
  }
  return std::nullopt;
}

}  // namespace

std::optional<InvarianceViolation> full_invariance_violation(const Subgroup& x) {
  // End(G) is additively spanned by the scaled coordinate maps, and x is a
  // subgroup, so checking those generators on the basis of x decides the
  // property for every endomorphism.
  for (const Homomorphism& f : endo_additive_generators(x.shape())) {
    if (auto v = first_escape(x, f)) return v;
  }
  return std::nullopt;
}

bool is_fully_invariant(const Subgroup& x) { return !full_invariance_violation(x).has_value(); }

std::optional<InvarianceViolation> characteristic_violation(const Subgroup& x) {
  // Aut(G) is generated by the certified generator list; alpha(x) <= x for
  // every generator and inverse gives alpha(x) = x for the whole group.
  for (const AutCertificate& cert : aut_generators(x.shape())) {
    if (auto v = first_escape(x, cert.forward)) return v;
    if (auto v = first_escape(x, cert.inverse)) return v;
  }
  return std::nullopt;
}

bool is_characteristic(const Subgroup& x) { return !characteristic_violation(x).has_value(); }

namespace {

// Least subgroup containing x closed under every map in gens: iterate
// y <- y + sum of images until stable. Terminates because the lattice is finite.
Subgroup invariant_closure(const Subgroup& x, const std::vector<Homomorphism>& gens) {
  Subgroup y = x;
  for (;;) {
    Subgroup next = y;
    for (const Homomorphism& f : gens) next = join(next, f.image(y));
    if (next == y) return y;
    y = std::move(next);
  }
}

}  // namespace

Subgroup fi_closure(const Subgroup& x) {
  return invariant_closure(x, endo_additive_generators(x.shape()));
}

Subgroup char_closure(const Subgroup& x) {
  std::vector<Homomorphism> gens;
  for (const AutCertificate& cert : aut_generators(x.shape())) {
    gens.push_back(cert.forward);
    gens.push_back(cert.inverse);
  }
  return invariant_closure(x, gens);
}

Subgroup endo_orbit(const Element& x) {
  // The image of x under every endomorphism fills, in coordinate i, exactly
  // the multiples of p^{c_i} where c_i = min over j of v(x_j) + max(0, l_i - l_j):
  // entry (i,j) of an endomorphism can be any multiple of p^{max(0, l_i - l_j)}.
  const GroupShape& g = x.shape();
  const u64 p = g.p();
  std::vector<Element> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const u32 li = g.exponent_at(i);
    u32 c = li;
    for (std::size_t j = 0; j < g.rank(); ++j) {
      if (x.coord(j) == 0) continue;
      const u32 vj = static_cast<u32>(p_valuation(x.coord(j), p));
      const u32 lj = g.exponent_at(j);
      const u32 need = vj + (li > lj ? li - lj : 0);
      c = std::min(c, need);
    }
    if (c >= li) continue;
    std::vector<u64> row(g.rank(), 0);
    row[i] = checked_pow(p, c);
    gens.emplace_back(g, std::move(row));
  }
  return Subgroup::span(g, gens);
}

Subgroup height_hull(const Element& x) {
  const HeightSequence hs = HeightSequence::of(x);
  return g_alpha(x.shape(), AlphaSequence(hs.entries()));
}

std::optional<Homomorphism> find_endo_mapping(const Element& x, const Element& y) {
  // Build phi row by row: row i must satisfy sum_j phi_{ij} x_j = y_i with
  // p^{max(0, l_i - l_j)} | phi_{ij}. Using a single best column j* (the one
  // minimizing w_i = min(l_i, v(x_j) + max(0, l_i - l_j))) is complete: the
  // attainable values of row i on x are exactly the multiples of p^{w_i}.
  const GroupShape& g = x.shape();
  if (&g != &y.shape() && !(g == y.shape()))
    throw std::invalid_argument("elements live in different groups");
  const u64 p = g.p();
  const std::size_t k = g.rank();
  std::vector<std::vector<u64>> rows(k, std::vector<u64>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    const u32 li = g.exponent_at(i);
    const u64 mi = g.modulus_at(i);
    u32 w = li;
    std::size_t best = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (x.coord(j) == 0) continue;
      const u32 lj = g.exponent_at(j);
      const u32 cand =
          std::min(li, static_cast<u32>(p_valuation(x.coord(j), p)) + (li > lj ? li - lj : 0));
      if (cand < w) {
        w = cand;
        best = j;
      }
    }
    const u64 yi = y.coord(i);
    if (yi == 0) continue;
    const u32 vy = static_cast<u32>(p_valuation(yi, p));
    if (vy < w) return std::nullopt;  // y_i not a multiple of p^{w}
    assert(best < k);
    // phi_{i,best} = (y_i / p^w) * u^{-1} * p^{w - need... } folded into one
    // congruence: phi_{i,best} * x_best = y_i (mod p^{l_i}) with the divisor
    // constraint already guaranteed because v(phi) >= required exponent.
    const u32 lb = g.exponent_at(best);
    const u32 req = li > lb ? li - lb : 0;
    const u32 vx = static_cast<u32>(p_valuation(x.coord(best), p));
    // x_best = p^{vx} * u with u a unit mod p^{l_b}; we need
    // phi * p^{vx} * u = y_i (mod p^{l_i}), phi a multiple of p^{req}.
    // Take phi = p^{w - vx... } — more directly: solve in the cyclic group.
    const u64 unit = x.coord(best) / checked_pow(p, vx);
    // Inverse of unit modulo p^{l_i} (unit is coprime to p).
    u64 inv = 1;
    {
      // Extended Euclid on (unit mod mi, mi).
      i64 r0 = static_cast<i64>(mi), r1 = static_cast<i64>(unit % mi);
      i64 s0 = 0, s1 = 1;
      while (r1 != 0) {
        const i64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
      }
      i64 s = s0 % static_cast<i64>(mi);
      if (s < 0) s += static_cast<i64>(mi);
      inv = static_cast<u64>(s);
    }
    // w = min(li, vx + req) and vy >= w. Need phi with phi * x_best = y_i
    // (mod mi): phi = (y_i / p^{vx}) * inv works when vy >= vx; when
    // vx > vy it cannot (but then w > vy, already rejected)... vx <= w <= vy.
    assert(vx <= vy || w == li);
    u64 phi = 0;
    if (w < li) {
      const u64 quotient = yi / checked_pow(p, vx);
      phi = static_cast<u64>((static_cast<i128>(quotient) * inv) % mi);
      // Divisibility constraint: v(phi) = vy - vx >= w - vx >= req.
      assert(p_valuation(phi == 0 ? mi : phi, p) >= req || phi == 0);
    }
    rows[i][best] = phi;
  }
  Homomorphism f(g, g, rows);
  if (!(f(x) == y)) return std::nullopt;  // defensive: construction is complete
  return f;
}

std::optional<AutCertificate> find_automorphism_mapping(const Element& x, const Element& y,
                                                        u64 budget) {
  const GroupShape& g = x.shape();
  if (!(g == y.shape())) throw std::invalid_argument("elements live in different groups");
  if (g.order_exponent() > 62 || g.order().value() > budget)
    throw BoundError("group too large for automorphism orbit search");
  if (x == y) {
    const Homomorphism id = Homomorphism::identity(g);
    return AutCertificate{id, id};
  }
  // BFS over the orbit of x under the generator certificates, remembering
  // which generator (and direction) reached each element.
  std::vector<AutCertificate> gens = aut_generators(g);
  struct Step {
    std::size_t parent;
    std::size_t gen;
    bool inverse;
  };
  std::map<std::vector<u64>, std::size_t> seen;
  std::vector<Element> order;
  std::vector<Step> steps;
  order.push_back(x);
  steps.push_back({0, 0, false});
  seen.emplace(x.coords(), 0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      for (const bool use_inverse : {false, true}) {
        const Homomorphism& f = use_inverse ? gens[gi].inverse : gens[gi].forward;
        Element next = f(order[head]);
        if (seen.count(next.coords())) continue;
        const std::size_t idx = order.size();
        seen.emplace(next.coords(), idx);
        order.push_back(next);
        steps.push_back({head, gi, use_inverse});
        if (next == y) {
          // Compose the path root -> y.
          std::vector<std::size_t> path;
          for (std::size_t at = idx; at != 0; at = steps[at].parent) path.push_back(at);
          Homomorphism fwd = Homomorphism::identity(g);
          Homomorphism inv = Homomorphism::identity(g);
          for (auto it = path.rbegin(); it != path.rend(); ++it) {
            const Step& s = steps[*it];
            const AutCertificate& c = gens[s.gen];
            fwd = compose(s.inverse ? c.inverse : c.forward, fwd);
            inv = compose(inv, s.inverse ? c.forward : c.inverse);
          }
          assert(fwd(x) == y);
          return AutCertificate{std::move(fwd), std::move(inv)};
        }
      }
    }
  }
  return std::nullopt;  // full orbit explored: no automorphism maps x to y
}

namespace {

// Orbit partition of all elements under Aut(G), via the generator certs.
std::vector<std::vector<Element>> aut_orbits(const GroupShape& g, u64 budget) {
  if (g.order_exponent() > 62 || g.order().value() > budget)
    throw BoundError("group too large for orbit partition");
  std::vector<Element> all = all_elements(g);
  std::vector<AutCertificate> gens = aut_generators(g);
  std::map<std::vector<u64>, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i].coords(), i);
  std::vector<bool> visited(all.size(), false);
  std::vector<std::vector<Element>> orbits;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (visited[i]) continue;
    std::vector<Element> orbit;
    std::deque<std::size_t> queue{i};
    visited[i] = true;
    while (!queue.empty()) {
      const std::size_t at = queue.front();
      queue.pop_front();
      orbit.push_back(all[at]);
      for (const AutCertificate& cert : gens) {
        for (const Homomorphism* f : {&cert.forward, &cert.inverse}) {
          const std::size_t to = index.at((*f)(all[at]).coords());
          if (!visited[to]) {
            visited[to] = true;
            queue.push_back(to);
          }
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

std::optional<std::pair<Element, Element>> transitivity_violation(const GroupShape& g,
                                                                  u64 budget) {
  // Transitive: any two elements with the same height sequence are linked by
  // an automorphism, i.e. each orbit is exactly a height-sequence class.
  for (const std::vector<Element>& orbit : aut_orbits(g, budget)) {
    const HeightSequence hs = HeightSequence::of(orbit.front());
    // All orbit members share hs (heights are preserved); a violation is an
    // element outside the orbit with the same sequence.
    for (const Element& e : all_elements(g)) {
      if (!(HeightSequence::of(e) == hs)) continue;
      if (std::none_of(orbit.begin(), orbit.end(), [&](const Element& o) { return o == e; }))
        return std::make_pair(orbit.front(), e);
    }
  }
  return std::nullopt;
}

bool is_transitive(const GroupShape& g, u64 budget) {
  return !transitivity_violation(g, budget).has_value();
}

std::optional<std::pair<Element, Element>> full_transitivity_violation(const GroupShape& g,
                                                                       u64 budget) {
  // Fully transitive: |p^n x| <= |p^n y| pointwise forces an endomorphism
  // x -> y. find_endo_mapping is exact, so scanning pairs decides it.
  if (g.order_exponent() > 62 || g.order().value() > budget)
    throw BoundError("group too large for pairwise transitivity scan");
  const std::vector<Element> all = all_elements(g);
  std::vector<HeightSequence> seqs;
  seqs.reserve(all.size());
  for (const Element& e : all) seqs.push_back(HeightSequence::of(e));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (!seqs[i].leq(seqs[j])) continue;
      if (!find_endo_mapping(all[i], all[j]))
        return std::make_pair(all[i], all[j]);
    }
  }
  return std::nullopt;
}

bool is_fully_transitive(const GroupShape& g, u64 budget) {
  return !full_transitivity_violation(g, budget).has_value();
}

ClassificationReport classify(const GroupShape& g, u64 max_count) {
  ClassificationReport report{g, enumerate_subgroups(g, max_count), {}, {}, {}};
  for (const Subgroup& x : report.subgroups) {
    const auto escape = full_invariance_violation(x);
    const bool characteristic = is_characteristic(x);
    if (!escape) report.fully_invariant.push_back(x);
    if (characteristic) report.characteristic.push_back(x);
    if (characteristic && escape) report.gap.emplace_back(x, *escape);
  }
  return report;
}

namespace {

// All solutions y of p y = target, as the coordinatewise quotient plus the
// p-torsion coset. target must lie in pG.
std::vector<Element> division_coset(const Element& target) {
  const GroupShape& g = target.shape();
  const u64 p = g.p();
  std::vector<u64> base(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (target.coord(i) % p != 0) throw PropertyError("element is not divisible by p");
    base[i] = target.coord(i) / p;
  }
  std::vector<Element> out;
  const Element particular(g, std::move(base));
  for (const Element& t : socle_subgroup(g, 1).elements()) out.push_back(particular + t);
  return out;
}

// Lexicographically smallest element of the candidate list passing the filter.
template <typename Pred>
std::optional<Element> lex_min_if(const std::vector<Element>& candidates, Pred&& keep) {
  std::optional<Element> best;
  for (const Element& e : candidates)
    if (keep(e) && (!best || e < *best)) best = e;
  return best;
}

}  // namespace

SplitChain split_by_height(const Element& x, const Element& z, u64 budget) {
  const GroupShape& g = x.shape();
  if (!(g == z.shape())) throw std::invalid_argument("elements live in different groups");
  const u64 p = g.p();
  const u32 k = order_exponent(x);
  if (!HeightSequence::of(x).leq(HeightSequence::of(z)))
    throw PropertyError("height sequence of z does not dominate x");
  if (!scale(static_cast<i64>(checked_pow(p, k)), z).is_zero())
    throw PropertyError("z is not annihilated by the order of x");
  for (u32 j = 0; j < k; ++j) {
    const ExtendedNat n = height(scale(static_cast<i64>(checked_pow(p, j)), x));
    if (n.is_infinite()) throw PropertyError("height chain broke before the order exponent");
    if (ulm_invariant(g, static_cast<u32>(n.finite_value())) < 2)
      throw PropertyError("Ulm invariant below 2 at level " + std::to_string(n.finite_value()));
  }
  if (checked_pow(p, static_cast<u32>(g.rank())) > budget)
    throw BoundError("socle too large for height splitting");

  SplitChain chain;
  chain.levels.push_back({k, Element::zero(g), Element::zero(g)});
  for (u32 j = k; j-- > 0;) {
    const Element pjx = scale(static_cast<i64>(checked_pow(p, j)), x);
    const Element pjz = scale(static_cast<i64>(checked_pow(p, j)), z);
    const u32 n = static_cast<u32>(height(pjx).finite_value());
    const ExtendedNat next_height = height(scale(static_cast<i64>(p), pjx));
    const Element& y_next = chain.levels.back().y;
    std::optional<Element> y;
    if (next_height == ExtendedNat{n + 1}) {
      // Unit height step: every solution of p y = y_next with height >= n has
      // height exactly n, so the filtered coset minimum is well defined.
      y = lex_min_if(division_coset(y_next),
                     [&](const Element& e) { return height(e) == ExtendedNat{n}; });
      if (!y) throw PropertyError("no preimage of the required height");
    } else {
      // Height gap: take s of height > n with p s = y_next, then add a socle
      // element t of height exactly n whose residue differs from p^j z's, so
      // that both y and p^j z - y land at height n.
      const auto deep = lex_min_if(division_coset(y_next), [&](const Element& e) {
        return ExtendedNat{n} < height(e);
      });
      if (!deep) throw PropertyError("no deep preimage at the gap level");
      const Subgroup pn1 = power_subgroup(g, n + 1);
      std::optional<Element> w;
      for (const Element& rep : ulm_factor_basis(g, n)) {
        if (!pn1.contains(rep - pjz)) {
          w = rep;
          break;
        }
      }
      if (!w) throw PropertyError("no independent residue at level " + std::to_string(n));
      const std::vector<Element> torsion =
          meet(power_subgroup(g, n), socle_subgroup(g, 1)).elements();
      const auto t =
          lex_min_if(torsion, [&](const Element& e) { return pn1.contains(e - *w); });
      if (!t) throw PropertyError("residue class has no socle representative");
      y = *deep + *t;
    }
    const Element y_prime = pjz - *y;
    if (!(scale(static_cast<i64>(p), *y) == y_next))
      throw PropertyError("chain condition p y_j = y_{j+1} failed");
    if (!(height(*y) == ExtendedNat{n}) || !(height(y_prime) == ExtendedNat{n}))
      throw PropertyError("split heights drifted from |p^j x|");
    chain.levels.push_back({j, *y, y_prime});
  }
  return chain;
}

std::optional<std::pair<AutCertificate, AutCertificate>> sum_of_two_autos_mapping(
    const Element& x, const Element& z, u64 budget) {
  const GroupShape& g = x.shape();
  if (!(g == z.shape())) throw std::invalid_argument("elements live in different groups");
  const u32 k = order_exponent(x);
  // Both conditions are necessary for z = alpha(x) + alpha'(x): heights only
  // grow under homomorphisms, and p^k kills both images.
  if (!HeightSequence::of(x).leq(HeightSequence::of(z))) return std::nullopt;
  if (!scale(static_cast<i64>(checked_pow(g.p(), k)), z).is_zero()) return std::nullopt;
  const SplitChain chain = split_by_height(x, z, budget);
  auto first = find_automorphism_mapping(x, chain.y0(), budget);
  if (!first) return std::nullopt;
  auto second = find_automorphism_mapping(x, chain.y0p(), budget);
  if (!second) return std::nullopt;
  if (!(first->forward(x) + second->forward(x) == z))
    throw PropertyError("automorphism halves do not reassemble z");
  return std::make_pair(std::move(*first), std::move(*second));
}

}  // namespace pgrouplab
