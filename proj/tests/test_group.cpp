#include <doctest.h>

#include <algorithm>
#include <set>

#include "pgrouplab/group.hpp"
#include "support/brute.hpp"

using namespace pgrouplab;

TEST_CASE("group shape canonicalization and validation") {
  const GroupShape g(2, {3, 1});
  CHECK(g.exponents() == std::vector<u32>{1, 3});
  CHECK(g.rank() == 2);
  CHECK(g.p() == 2);
  CHECK(g.modulus_at(0) == 2);
  CHECK(g.modulus_at(1) == 8);
  CHECK(g.max_exponent() == 3);
  CHECK(g.order_exponent() == 4);
  CHECK(g.order().value() == u64{16});
  CHECK(g.str() == "2:[1,3]");

  CHECK_THROWS_AS(GroupShape(4, {1}), std::invalid_argument);
  CHECK_THROWS_AS(GroupShape(1, {1}), std::invalid_argument);
  CHECK_THROWS_AS(GroupShape(3, {0}), std::invalid_argument);

  const GroupShape trivial(5, {});
  CHECK(trivial.is_trivial());
  CHECK(trivial.order().value() == u64{1});
  CHECK(trivial.max_exponent() == 0);
}

TEST_CASE("element arithmetic reduces modulo coordinate moduli") {
  const GroupShape g(2, {1, 3});
  const Element x(g, {1, 2});
  const Element y(g, {1, 7});
  CHECK((x + y) == Element(g, {0, 1}));
  CHECK((x - y) == Element(g, {0, 3}));
  CHECK(-x == Element(g, {1, 6}));
  CHECK(scale(-3, x) == Element(g, {1, 2}));
  CHECK(scale(4, x) == Element::zero(g));
  CHECK(Element(g, {3, 10}) == Element(g, {1, 2}));
  CHECK_THROWS_AS(Element(g, {1}), std::invalid_argument);
  CHECK_THROWS_AS(x + Element(GroupShape(2, {1, 1}), {0, 0}), std::invalid_argument);
}

TEST_CASE("heights match the divisibility definition") {
  const GroupShape g(2, {1, 3});
  CHECK(height(Element(g, {1, 2})) == ExtendedNat(0));
  CHECK(height(Element(g, {0, 2})) == ExtendedNat(1));
  CHECK(height(Element(g, {0, 4})) == ExtendedNat(2));
  CHECK(height(Element::zero(g)).is_infinite());

  for (const GroupShape& shape : {GroupShape(2, {1, 3}), GroupShape(3, {1, 2}), GroupShape(2, {2, 2})}) {
    for (const Element& x : all_elements(shape)) CHECK(height(x) == brute::height(x));
  }
}

TEST_CASE("height sequences") {
  const GroupShape g(2, {1, 3});
  const HeightSequence hx = HeightSequence::of(Element(g, {1, 2}));
  CHECK(hx.entries() == std::vector<ExtendedNat>{ExtendedNat(0), ExtendedNat(2),
                                                 ExtendedNat::infinity(), ExtendedNat::infinity()});
  const HeightSequence hz = HeightSequence::of(Element(g, {0, 1}));
  CHECK(hz.entries() == std::vector<ExtendedNat>{ExtendedNat(0), ExtendedNat(1), ExtendedNat(2),
                                                 ExtendedNat::infinity()});
  CHECK(hz.leq(hx));
  CHECK_FALSE(hx.leq(hz));
  CHECK(hx.str() == "(0,2,inf,inf)");

  // Entries must rise strictly until they hit infinity.
  CHECK_THROWS_AS(HeightSequence({ExtendedNat(1), ExtendedNat(1)}), std::invalid_argument);
  CHECK_THROWS_AS(HeightSequence({ExtendedNat::infinity(), ExtendedNat(1)}), std::invalid_argument);
}

TEST_CASE("ulm invariants count cyclic pieces") {
  const GroupShape g(2, {1, 3});
  CHECK(ulm_invariant(g, 0) == 1);
  CHECK(ulm_invariant(g, 1) == 0);
  CHECK(ulm_invariant(g, 2) == 1);
  CHECK(ulm_invariant(g, 3) == 0);

  const GroupShape h(3, {1, 1, 2});
  CHECK(ulm_invariant(h, 0) == 2);
  CHECK(ulm_invariant(h, 1) == 1);
}

TEST_CASE("ulm factor representatives have exact height and are independent") {
  const GroupShape u(2, {1, 3});
  const auto reps0 = ulm_factor_basis(u, 0);
  REQUIRE(reps0.size() == 1);
  CHECK(reps0[0] == Element(u, {1, 0}));

  for (const GroupShape& g :
       {GroupShape(2, {1, 3}), GroupShape(2, {1, 1, 2}), GroupShape(3, {1, 1, 2})}) {
    for (u32 n = 0; n < g.max_exponent(); ++n) {
      const auto reps = ulm_factor_basis(g, n);
      CHECK(reps.size() == ulm_invariant(g, n));
      // Nonzero F_p-combinations keep height exactly n: that is independence
      // in the n-th composition factor of the height filtration.
      std::vector<u64> c(reps.size(), 0);
      while (!reps.empty()) {
        Element combo = Element::zero(g);
        for (std::size_t i = 0; i < reps.size(); ++i)
          combo = combo + scale(static_cast<i64>(c[i]), reps[i]);
        const bool nontrivial = std::any_of(c.begin(), c.end(), [](u64 v) { return v != 0; });
        if (nontrivial) {
          CHECK(brute::height(combo) == ExtendedNat(n));
          CHECK(scale(static_cast<i64>(g.p()), combo).is_zero());
        }
        std::size_t i = reps.size();
        bool done = true;
        while (i > 0) {
          --i;
          if (++c[i] < g.p()) {
            done = false;
            break;
          }
          c[i] = 0;
        }
        if (done) break;
      }
    }
  }
}

TEST_CASE("element enumeration is sorted and complete") {
  const GroupShape g(2, {1, 1});
  const auto elems = all_elements(g);
  REQUIRE(elems.size() == 4);
  CHECK(elems[0] == Element(g, {0, 0}));
  CHECK(elems[1] == Element(g, {0, 1}));
  CHECK(elems[2] == Element(g, {1, 0}));
  CHECK(elems[3] == Element(g, {1, 1}));
  CHECK(std::is_sorted(elems.begin(), elems.end()));

  const auto big = all_elements(GroupShape(3, {1, 2}));
  CHECK(big.size() == 27);
  CHECK(std::set<Element>(big.begin(), big.end()).size() == 27);

  CHECK_THROWS_AS(all_elements(GroupShape(2, {30, 30}), 1024), BoundError);
}
