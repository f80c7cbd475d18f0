#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "pgrouplab/group.hpp"
#include "pgrouplab/hom.hpp"
#include "pgrouplab/inertia.hpp"
#include "pgrouplab/invariance.hpp"
#include "pgrouplab/rng.hpp"
#include "pgrouplab/subgroup.hpp"
#include "support/brute.hpp"

using namespace pgrouplab;

namespace {

GroupShape u_group() { return GroupShape(2, {1, 3}); }

Element el(const GroupShape& g, std::vector<u64> c) { return Element(g, std::move(c)); }

Subgroup s_in_u() { return Subgroup::span(u_group(), {el(u_group(), {1, 2})}); }

// Oracle for |(f(X)+X)/X| by element counting alone.
u64 brute_hat_order(const Homomorphism& f, const Subgroup& x) {
  std::vector<Element> gens = x.generators();
  for (const Element& e : x.generators()) gens.push_back(f(e));
  const u64 joined = brute::closure(x.shape(), gens).size();
  return joined / brute::closure(x.shape(), x.generators()).size();
}

Subgroup random_span(const GroupShape& g, Rng& rng) {
  const std::vector<Element> all = all_elements(g);
  std::vector<Element> gens;
  for (u64 i = rng.below(3) + 1; i > 0; --i) gens.push_back(all[rng.below(all.size())]);
  return Subgroup::span(g, gens);
}

}  // namespace

TEST_CASE("inertia quotient: frozen values and the containment reading") {
  const GroupShape u = u_group();
  const Subgroup s = s_in_u();
  CHECK(hat(Homomorphism::identity(u), s).order == PPower{2, 0});
  CHECK(hat(Homomorphism::identity(u), s).type.empty());

  const Homomorphism kappa = endo_additive_generators(u)[0];  // projection to coordinate 0
  const InertiaQuotient q = hat(kappa, s);
  CHECK(q.order == PPower{2, 1});
  CHECK(q.type == std::vector<u32>{1});

  // Fully invariant subgroups absorb every endomorphism.
  const Subgroup invariant = power_subgroup(u, 1);
  for (const Homomorphism& f : enumerate_endos(u)) CHECK(hat(f, invariant).order == PPower{2, 0});

  CHECK_THROWS_AS(hat(kappa, Subgroup::full(GroupShape(3, {1, 2}))), std::invalid_argument);

  // Order 1 exactly when the image stays inside, and the order always matches
  // element-level coset counting.
  Rng rng(41);
  for (const GroupShape& g : {GroupShape(2, {1, 2}), GroupShape(3, {1, 1}), GroupShape(2, {2, 2})}) {
    for (int probe = 0; probe < 25; ++probe) {
      const Subgroup x = random_span(g, rng);
      const Homomorphism f = random_endo(g, rng);
      const InertiaQuotient got = hat(f, x);
      CHECK((got.order == PPower{g.p(), 0}) == f.image(x).is_subset_of(x));
      CHECK(got.order.value() == brute_hat_order(f, x));
    }
  }
}

TEST_CASE("inertia profile: exhaustive suprema and sampled determinism") {
  const GroupShape u = u_group();
  const Subgroup s = s_in_u();

  const InertiaProfile aut = inertia_profile(s, MapFamily::automorphisms, ProfileStrategy::exhaustive());
  CHECK(aut.sup == PPower{2, 0});  // s is characteristic
  CHECK(aut.exact);
  CHECK(aut.records.size() == enumerate_autos(u).size());

  const InertiaProfile endo = inertia_profile(s, MapFamily::endomorphisms, ProfileStrategy::exhaustive());
  CHECK(endo.sup == PPower{2, 1});  // witnessed by the coordinate projection
  CHECK(endo.exact);
  CHECK(endo.records.size() == 64);
  CHECK(std::any_of(endo.records.begin(), endo.records.end(),
                    [](const auto& r) { return r.second == PPower{2, 1}; }));

  const InertiaProfile socle = inertia_profile(socle_subgroup(u, 1), MapFamily::endomorphisms,
                                               ProfileStrategy::exhaustive());
  CHECK(socle.sup == PPower{2, 0});  // fully invariant

  const InertiaProfile once = inertia_profile(s, MapFamily::endomorphisms, ProfileStrategy::sampled(7, 25));
  const InertiaProfile twice = inertia_profile(s, MapFamily::endomorphisms, ProfileStrategy::sampled(7, 25));
  CHECK(once.records == twice.records);
  CHECK(once.records.size() == 25);
  CHECK(!once.exact);
  const InertiaProfile sampled_auts =
      inertia_profile(s, MapFamily::automorphisms, ProfileStrategy::sampled(7, 25));
  CHECK(sampled_auts.sup == PPower{2, 0});

  CHECK_THROWS_AS(inertia_profile(Subgroup::full(GroupShape(2, {4, 4, 4, 4, 4})),
                                  MapFamily::endomorphisms, ProfileStrategy::exhaustive()),
                  BoundError);
}

TEST_CASE("sum bound: the quotient of a sum divides into the parts' product") {
  const GroupShape u = u_group();
  const Subgroup s = s_in_u();
  const Homomorphism kappa = endo_additive_generators(u)[0];

  const SumBoundReport single = check_sum_bound({kappa}, s);
  CHECK(single.lhs == single.rhs);
  CHECK(single.holds);

  const SumBoundReport cancel = check_sum_bound({kappa, scale_hom(-1, kappa)}, s);
  CHECK(cancel.lhs == PPower{2, 0});
  CHECK(cancel.holds);

  const SumBoundReport empty = check_sum_bound({}, s);
  CHECK(empty.lhs == PPower{2, 0});
  CHECK(empty.rhs == PPower{2, 0});
  CHECK(empty.holds);

  Rng rng(1203);
  for (const GroupShape& g : {GroupShape(2, {1, 3}), GroupShape(2, {2, 2}), GroupShape(3, {1, 2})}) {
    for (int probe = 0; probe < 50; ++probe) {
      const Subgroup x = random_span(g, rng);
      std::vector<Homomorphism> parts;
      for (u64 i = rng.below(4) + 1; i > 0; --i) parts.push_back(random_endo(g, rng));
      Homomorphism sum = Homomorphism::zero(g, g);
      for (const Homomorphism& f : parts) sum = add(sum, f);
      const SumBoundReport rep = check_sum_bound(parts, x);
      CHECK(rep.holds);
      CHECK(rep.lhs == hat(sum, x).order);
    }
  }
}

TEST_CASE("four automorphisms summing to any square endomorphism") {
  const GroupShape g(2, {1, 1, 2, 2});  // square of Z_2 + Z_4
  const SquareStructure sq = *recognize_square(g);

  // Zero splits into identity, its negative, the copy swap, and its negative.
  const AutDecomposition at_zero = four_auto_decompose(Homomorphism::zero(g, g));
  REQUIRE(at_zero.parts.size() == 4);
  CHECK(at_zero.parts[0].forward == Homomorphism::identity(g));
  CHECK(at_zero.parts[1].forward == scale_hom(-1, Homomorphism::identity(g)));
  CHECK(at_zero.parts[2].forward == sq.swap_copies().forward);
  CHECK(at_zero.parts[3].forward == scale_hom(-1, sq.swap_copies().forward));

  auto verify = [](const AutDecomposition& dec) {
    const GroupShape& shape = dec.target.domain();
    Homomorphism sum = Homomorphism::zero(shape, shape);
    for (const AutCertificate& part : dec.parts) {
      CHECK(compose(part.forward, part.inverse) == Homomorphism::identity(shape));
      CHECK(compose(part.inverse, part.forward) == Homomorphism::identity(shape));
      sum = add(sum, part.forward);
    }
    CHECK(sum == dec.target);
  };
  verify(four_auto_decompose(Homomorphism::identity(g)));

  Rng rng(77);
  const GroupShape odd(3, {1, 1, 2, 2});  // square of Z_3 + Z_9
  for (int probe = 0; probe < 60; ++probe) verify(four_auto_decompose(random_endo(odd, rng)));

  CHECK_THROWS_AS(four_auto_decompose(Homomorphism::identity(GroupShape(2, {1, 2}))),
                  std::invalid_argument);
  CHECK_THROWS_AS(four_auto_decompose(random_hom(g, GroupShape(2, {1, 2}), rng)),
                  std::invalid_argument);
}

namespace {

// All sums of two automorphisms, by raw enumeration.
std::set<std::vector<std::vector<u64>>> brute_two_auto_sums(const GroupShape& g) {
  std::set<std::vector<std::vector<u64>>> sums;
  const std::vector<AutCertificate> autos = enumerate_autos(g);
  for (const AutCertificate& a : autos)
    for (const AutCertificate& b : autos) sums.insert(add(a.forward, b.forward).matrix());
  return sums;
}

}  // namespace

TEST_CASE("two automorphisms: frozen splits, proven absence, completeness") {
  const GroupShape z9(3, {2});
  const auto triple = two_auto_decompose(Homomorphism(z9, z9, {{3}}));
  REQUIRE(triple.has_value());
  CHECK(triple->parts[0].forward.matrix() == std::vector<std::vector<u64>>{{1}});
  CHECK(triple->parts[1].forward.matrix() == std::vector<std::vector<u64>>{{2}});

  const GroupShape z3(3, {1});
  const auto at_zero = two_auto_decompose(Homomorphism::zero(z3, z3));
  REQUIRE(at_zero.has_value());
  CHECK(at_zero->parts[0].forward.matrix() == std::vector<std::vector<u64>>{{1}});
  CHECK(at_zero->parts[1].forward.matrix() == std::vector<std::vector<u64>>{{2}});

  const GroupShape z4(2, {2});
  const auto doubling = two_auto_decompose(Homomorphism(z4, z4, {{2}}));
  REQUIRE(doubling.has_value());
  CHECK(doubling->parts[0].forward.matrix() == std::vector<std::vector<u64>>{{1}});
  CHECK(doubling->parts[1].forward.matrix() == std::vector<std::vector<u64>>{{1}});

  const GroupShape z2(2, {1});
  CHECK(!two_auto_decompose(Homomorphism::identity(z2)).has_value());

  // The decision agrees with raw enumeration of all automorphism pairs.
  for (const GroupShape& g : {GroupShape(2, {1, 2}), GroupShape(2, {1, 1}), GroupShape(3, {1, 1})}) {
    const auto sums = brute_two_auto_sums(g);
    for (const Homomorphism& f : enumerate_endos(g)) {
      const auto dec = two_auto_decompose(f);
      CHECK(dec.has_value() == (sums.count(f.matrix()) == 1));
      if (dec) CHECK(add(dec->parts[0].forward, dec->parts[1].forward) == f);
    }
  }

  // Odd p: every endomorphism splits, with no search.
  for (const GroupShape& g : {GroupShape(3, {1, 2}), GroupShape(5, {1, 1})})
    for (const Homomorphism& f : enumerate_endos(g)) CHECK(two_auto_decompose(f).has_value());

  // p = 2 exhaustion limits: an 8-wide block can never be swept, and a
  // 3-wide block needs 512 candidates.
  const GroupShape wide(2, std::vector<u32>(8, 1));
  CHECK_THROWS_AS(two_auto_decompose(Homomorphism::identity(wide)), BoundError);
  const GroupShape three(2, {1, 1, 1});
  CHECK_THROWS_AS(two_auto_decompose(Homomorphism::identity(three), 100), BoundError);
  CHECK(two_auto_decompose(Homomorphism::identity(three), 512).has_value());
}

TEST_CASE("additive span of the automorphisms inside the endomorphisms") {
  CHECK(sum_of_autos_spanning(GroupShape(2, {1})));       // 1 + 1 = 0 already spans
  CHECK(!sum_of_autos_spanning(GroupShape(2, {1, 3})));   // diagonal parities stay equal
  CHECK(sum_of_autos_spanning(GroupShape(3, {1, 2})));    // odd p: two always suffice
  CHECK(sum_of_autos_spanning(GroupShape(2, {1, 1})));    // squares always span
  CHECK(sum_of_autos_spanning(GroupShape(2, {2, 2})));
  CHECK_THROWS_AS(sum_of_autos_spanning(GroupShape(2, {4, 4, 4, 4, 4})), BoundError);

  // Cross-check by closing the automorphism set under addition directly.
  for (const GroupShape& g : {GroupShape(2, {1, 1}), GroupShape(2, {1, 3}), GroupShape(3, {1, 1})}) {
    std::set<std::vector<std::vector<u64>>> closed;
    std::vector<Homomorphism> work;
    for (const AutCertificate& c : enumerate_autos(g))
      if (closed.insert(c.forward.matrix()).second) work.push_back(c.forward);
    const std::vector<Homomorphism> gens = work;
    while (!work.empty()) {
      const Homomorphism f = work.back();
      work.pop_back();
      for (const Homomorphism& a : gens) {
        Homomorphism next = add(f, a);
        if (closed.insert(next.matrix()).second) work.push_back(std::move(next));
      }
    }
    CHECK(sum_of_autos_spanning(g) == (closed.size() == enumerate_endos(g).size()));
  }
}

TEST_CASE("square hull: smallest square over a subgroup, with its index bound") {
  const GroupShape b(2, {1, 2});
  const SquareStructure sq(b);
  const Subgroup y0 = socle_subgroup(b, 1);
  const Subgroup boxed = join(sq.inject(0).image(y0), sq.inject(1).image(y0));
  const SquareHullResult square_case = square_hull(boxed);
  CHECK(square_case.hull_half == y0);
  CHECK(square_case.hull == boxed);
  CHECK(square_case.index == PPower{2, 0});
  CHECK(square_case.bound == PPower{2, 0});
  CHECK(square_case.holds);

  const GroupShape pair(2, {1, 1});
  const SquareHullResult diagonal = square_hull(Subgroup::span(pair, {el(pair, {1, 1})}));
  CHECK(diagonal.hull_half.is_full());
  CHECK(diagonal.hull.is_full());
  CHECK(diagonal.index == PPower{2, 1});
  CHECK(diagonal.bound == PPower{2, 4});
  CHECK(diagonal.holds);

  Rng rng(88);
  for (const GroupShape& g : {GroupShape(2, {1, 1, 2, 2}), GroupShape(3, {1, 1, 1, 1})}) {
    for (int probe = 0; probe < 40; ++probe) {
      const Subgroup x = random_span(g, rng);
      const SquareHullResult res = square_hull(x);
      CHECK(x.is_subset_of(res.hull));
      CHECK(res.holds);
      CHECK(res.hull.order_exponent() == 2 * res.hull_half.order_exponent());
    }
  }

  CHECK_THROWS_AS(square_hull(Subgroup::full(GroupShape(2, {1, 2}))), std::invalid_argument);
}

TEST_CASE("swap family: inertia of the k-swap grows as p^k") {
  for (const u64 p : {u64{2}, u64{3}}) {
    for (u32 n = 0; n <= 5; ++n) {
      const NoOneFamily fam = noone_family(p, n);
      CHECK(fam.phis.size() == std::size_t{n} + 1);
      CHECK(fam.group.order_exponent() == u64{n} * (n + 1));
      CHECK(fam.x.order_exponent() == n);
      CHECK(fam.phis[0].forward == Homomorphism::identity(fam.group));
      REQUIRE(fam.hat_exponents.size() == std::size_t{n} + 1);
      for (u32 swapped = 0; swapped <= n; ++swapped) CHECK(fam.hat_exponents[swapped] == swapped);
    }
  }
  // The growth keeps going at the widest supported sizes.
  CHECK(noone_family(2, 6).hat_exponents.back() == 6);
  CHECK_THROWS_AS(noone_family(2, 63), BoundError);
}
