#include <doctest.h>

#include <algorithm>
#include <set>

#include "pgrouplab/hom.hpp"
#include "support/brute.hpp"

using namespace pgrouplab;

namespace {

const GroupShape kU(2, {1, 3});

// Closure of the generators under composition; the certified inverses make
// the closure a subgroup, so its size must be the full automorphism count.
std::size_t aut_closure_size(const GroupShape& g) {
  const auto gens = aut_generators(g);
  std::set<std::vector<std::vector<u64>>> seen;
  std::vector<Homomorphism> work{Homomorphism::identity(g)};
  seen.insert(work.back().matrix());
  while (!work.empty()) {
    const Homomorphism f = work.back();
    work.pop_back();
    for (const auto& cert : gens) {
      for (const Homomorphism* step : {&cert.forward, &cert.inverse}) {
        Homomorphism next = compose(*step, f);
        if (seen.insert(next.matrix()).second) work.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("matrix validation enforces the divisibility constraint") {
  CHECK_THROWS_AS(Homomorphism(kU, kU, {{1, 0}, {1, 0}}), std::invalid_argument);
  CHECK_NOTHROW(Homomorphism(kU, kU, {{1, 0}, {4, 0}}));
  CHECK_THROWS_AS(Homomorphism(kU, kU, {{1, 0}}), std::invalid_argument);
  // Entries reduce modulo the codomain coordinate modulus.
  CHECK(Homomorphism(kU, kU, {{3, 2}, {8, 9}}).matrix() ==
        std::vector<std::vector<u64>>{{1, 0}, {0, 1}});
}

TEST_CASE("apply, compose, add, and scale act like the underlying maps") {
  const Homomorphism kappa(kU, kU, {{1, 0}, {0, 0}});
  CHECK(kappa(Element(kU, {1, 2})) == Element(kU, {1, 0}));

  const auto elems = all_elements(kU);
  const Homomorphism f(kU, kU, {{1, 1}, {4, 3}});
  const Homomorphism g(kU, kU, {{0, 1}, {4, 5}});
  for (const Element& x : elems) {
    CHECK(compose(f, g)(x) == f(g(x)));
    CHECK(add(f, g)(x) == f(x) + g(x));
    CHECK(sub(f, g)(x) == f(x) - g(x));
    CHECK(scale_hom(-3, f)(x) == scale(-3, f(x)));
    for (const Element& y : elems) CHECK(f(x + y) == f(x) + f(y));
  }
  CHECK(Homomorphism::identity(kU)(Element(kU, {1, 5})) == Element(kU, {1, 5}));
}

TEST_CASE("endomorphism counts and additive generators") {
  CHECK(endo_order(kU).value() == u64{64});
  CHECK(endo_order(GroupShape(3, {1, 1, 2})).value() == u64{59049});

  const auto gens = endo_additive_generators(kU);
  REQUIRE(gens.size() == 4);
  CHECK(gens[0].matrix() == std::vector<std::vector<u64>>{{1, 0}, {0, 0}});
  CHECK(gens[1].matrix() == std::vector<std::vector<u64>>{{0, 1}, {0, 0}});
  CHECK(gens[2].matrix() == std::vector<std::vector<u64>>{{0, 0}, {4, 0}});
  CHECK(gens[3].matrix() == std::vector<std::vector<u64>>{{0, 0}, {0, 1}});

  // The generators really span End additively: count distinct integer
  // combinations of them.
  std::set<std::vector<std::vector<u64>>> span;
  std::vector<u64> c(gens.size(), 0);
  while (true) {
    Homomorphism acc = Homomorphism::zero(kU, kU);
    for (std::size_t i = 0; i < gens.size(); ++i)
      acc = add(acc, scale_hom(static_cast<i64>(c[i]), gens[i]));
    span.insert(acc.matrix());
    std::size_t i = gens.size();
    while (i > 0 && c[i - 1] + 1 == 8) c[--i] = 0;
    if (i == 0) break;
    ++c[i - 1];
  }
  CHECK(span.size() == 64);
}

TEST_CASE("enumeration is exhaustive and deterministic") {
  const auto endos = enumerate_endos(kU);
  CHECK(endos.size() == 64);
  CHECK(std::set<Homomorphism>(endos.begin(), endos.end()).size() == 64);
  const auto again = enumerate_endos(kU);
  CHECK(endos == again);
  CHECK_THROWS_AS(enumerate_endos(kU, 10), BoundError);
  CHECK_THROWS_AS(enumerate_endos(GroupShape(2, {6, 6, 6}), 1 << 20), BoundError);
}

TEST_CASE("automorphism recognition, certificates, and counts") {
  u64 certified = 0;
  for (const Homomorphism& f : enumerate_endos(kU)) {
    const auto cert = is_automorphism(f);
    CHECK(cert.has_value() == is_invertible_mod_p(f));
    if (cert) {
      ++certified;
      CHECK(compose(cert->forward, cert->inverse) == Homomorphism::identity(kU));
      CHECK(compose(cert->inverse, cert->forward) == Homomorphism::identity(kU));
      CHECK(cert->forward == f);
    }
  }
  CHECK(certified == 16);
  CHECK(aut_order(kU) == 16);
  CHECK(aut_order(GroupShape(2, {1, 1})) == 6);
  CHECK(aut_order(GroupShape(3, {1, 1, 2})) == 23328);
  CHECK(enumerate_autos(kU).size() == 16);
  CHECK(enumerate_autos(GroupShape(3, {1, 1, 2})).size() == 23328);

  // Non-endomorphisms are never automorphisms.
  CHECK_FALSE(is_automorphism(Homomorphism::zero(kU, GroupShape(2, {1, 1}))).has_value());
}

TEST_CASE("generators reach the whole automorphism group") {
  for (const GroupShape& g : {GroupShape(2, {1, 3}), GroupShape(2, {1, 1}), GroupShape(2, {2}),
                              GroupShape(3, {1, 2}), GroupShape(3, {1, 1, 2}),
                              GroupShape(2, {1, 1, 2})}) {
    CHECK(aut_closure_size(g) == aut_order(g));
  }
}

TEST_CASE("kernel and image sizes multiply to the group order") {
  for (const Homomorphism& f : enumerate_endos(kU)) {
    const Subgroup ker = f.kernel();
    const Subgroup im = f.image();
    CHECK(ker.order_exponent() + im.order_exponent() == kU.order_exponent());
    for (const Element& x : ker.elements()) CHECK(f(x).is_zero());
    for (const Element& x : all_elements(kU)) CHECK(im.contains(f(x)));
  }
  CHECK(scale_hom(2, Homomorphism::identity(kU)).kernel() == socle_subgroup(kU, 1));
  CHECK(scale_hom(2, Homomorphism::identity(kU)).image() == power_subgroup(kU, 1));

  const Subgroup s = Subgroup::span(kU, {Element(kU, {1, 2})});
  const Homomorphism kappa(kU, kU, {{1, 0}, {0, 0}});
  CHECK(kappa.image(s) == Subgroup::span(kU, {Element(kU, {1, 0})}));
}

TEST_CASE("square structure plumbing") {
  const GroupShape half(2, {1, 3});
  const SquareStructure sq(half);
  CHECK(sq.whole() == GroupShape(2, {1, 1, 3, 3}));
  CHECK(sq.position(0, 0) == 0);
  CHECK(sq.position(1, 1) == 3);

  const Homomorphism in0 = sq.inject(0);
  const Homomorphism in1 = sq.inject(1);
  const Homomorphism pr0 = sq.project(0);
  const Homomorphism pr1 = sq.project(1);
  CHECK(compose(pr0, in0) == Homomorphism::identity(half));
  CHECK(compose(pr1, in1) == Homomorphism::identity(half));
  CHECK(compose(pr1, in0) == Homomorphism::zero(half, half));

  const AutCertificate swap = sq.swap_copies();
  CHECK(compose(swap.forward, swap.forward) == Homomorphism::identity(sq.whole()));
  CHECK(compose(swap.forward, in0) == in1);

  CHECK(recognize_square(GroupShape(2, {1, 1, 3, 3})).has_value());
  CHECK_FALSE(recognize_square(GroupShape(2, {1, 3})).has_value());
  CHECK_FALSE(recognize_square(GroupShape(2, {1, 1, 3})).has_value());
  CHECK(recognize_square(GroupShape(2, {1, 1, 3, 3}))->half() == half);
}

TEST_CASE("random sampling is seeded and well formed") {
  Rng r1(mix_seed(42, 1));
  Rng r2(mix_seed(42, 1));
  const Homomorphism f1 = random_endo(kU, r1);
  const Homomorphism f2 = random_endo(kU, r2);
  CHECK(f1 == f2);

  Rng r3(7);
  for (int i = 0; i < 50; ++i) {
    const AutCertificate cert = random_auto(kU, r3);
    CHECK(compose(cert.forward, cert.inverse) == Homomorphism::identity(kU));
    const Homomorphism h = random_hom(kU, GroupShape(2, {2}), r3);
    const auto x = Element(kU, {1, 1});
    const auto y = Element(kU, {0, 3});
    CHECK(h(x + y) == h(x) + h(y));
  }
}

TEST_CASE("kappa maps: idempotents summing to the identity") {
  const SquareStructure sq{GroupShape(2, {1, 2})};
  const Homomorphism k0 = sq.kappa(0);
  const Homomorphism k1 = sq.kappa(1);
  CHECK(compose(k0, k0) == k0);
  CHECK(compose(k1, k1) == k1);
  CHECK(add(k0, k1) == Homomorphism::identity(sq.whole()));
  CHECK(compose(k0, k1) == Homomorphism::zero(sq.whole(), sq.whole()));
  const Homomorphism sigma = sq.swap_copies().forward;
  CHECK(compose(compose(sigma, k0), sigma) == k1);
}

TEST_CASE("shear along a coordinate split") {
  const GroupShape u(2, {1, 3});
  const GroupShape v = sub_shape(u, {0});
  const GroupShape w = sub_shape(u, {1});
  CHECK(v == GroupShape(2, {1}));
  CHECK(w == GroupShape(2, {3}));

  // gamma: Z2 -> Z8 sending 1 to 4 (the only nonzero choice).
  const Homomorphism gamma(v, w, {{4}});
  const AutCertificate cert = shear(u, {0}, {1}, gamma);
  CHECK(cert.forward(Element(u, {1, 0})) == Element(u, {1, 4}));
  CHECK(cert.forward.matrix() == std::vector<std::vector<u64>>{{1, 0}, {4, 1}});
  CHECK(compose(cert.forward, cert.inverse) == Homomorphism::identity(u));

  // Zero map gives the identity shear.
  const AutCertificate id_cert = shear(u, {0}, {1}, Homomorphism::zero(v, w));
  CHECK(id_cert.forward == Homomorphism::identity(u));

  // Empty V part degenerates to the identity as well.
  const AutCertificate empty_cert =
      shear(u, {}, {0, 1}, Homomorphism::zero(GroupShape(2, {}), u));
  CHECK(empty_cert.forward == Homomorphism::identity(u));

  CHECK_THROWS_AS(shear(u, {0}, {0}, gamma), std::invalid_argument);
  CHECK_THROWS_AS(shear(u, {0}, {}, gamma), std::invalid_argument);
  CHECK_THROWS_AS(shear(u, {1}, {0}, gamma), std::invalid_argument);
}

TEST_CASE("random shears invert and respect the split") {
  Rng rng(2024);
  for (const GroupShape& g :
       {GroupShape(2, {1, 2, 3}), GroupShape(3, {1, 1, 2}), GroupShape(2, {2, 2, 2})}) {
    for (u64 mask = 0; mask < (u64{1} << g.rank()); ++mask) {
      std::vector<std::size_t> vc, wc;
      for (std::size_t i = 0; i < g.rank(); ++i) (mask >> i & 1 ? vc : wc).push_back(i);
      const GroupShape vs = sub_shape(g, vc);
      const GroupShape ws = sub_shape(g, wc);
      const Homomorphism gamma = random_hom(vs, ws, rng);
      const AutCertificate cert = shear(g, vc, wc, gamma);
      CHECK(compose(cert.forward, cert.inverse) == Homomorphism::identity(g));
      CHECK(compose(cert.inverse, cert.forward) == Homomorphism::identity(g));
      // W coordinates pass through unchanged; V coordinates are fixed too.
      for (const std::size_t c : vc) {
        const Element e = Element::basis(g, c);
        for (const std::size_t c2 : vc) CHECK(cert.forward(e).coord(c2) == e.coord(c2));
      }
      for (const std::size_t c : wc) CHECK(cert.forward(Element::basis(g, c)) == Element::basis(g, c));
    }
  }
}
