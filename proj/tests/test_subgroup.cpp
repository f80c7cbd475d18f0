#include <doctest.h>

#include <algorithm>
#include <set>

#include "pgrouplab/subgroup.hpp"
#include "support/brute.hpp"

using namespace pgrouplab;

namespace {

const GroupShape kU(2, {1, 3});

std::vector<Element> sorted_elements(const Subgroup& s) { return s.elements(); }

// Cross-check a subgroup against the closure oracle of its generators.
void check_matches_closure(const Subgroup& s) {
  const auto oracle = brute::closure(s.shape(), s.generators());
  CHECK(sorted_elements(s) == oracle);
}

}  // namespace

TEST_CASE("span computes the canonical basis") {
  const Subgroup s = Subgroup::span(kU, {Element(kU, {1, 2})});
  CHECK(s.basis_rows() == std::vector<std::vector<u64>>{{1, 2}, {0, 4}});
  CHECK(s.order_exponent() == 2);
  CHECK(s.order().str() == "4");
  const auto elems = s.elements();
  CHECK(elems == std::vector<Element>{Element(kU, {0, 0}), Element(kU, {0, 4}),
                                      Element(kU, {1, 2}), Element(kU, {1, 6})});
  CHECK(s.contains(Element(kU, {1, 6})));
  CHECK_FALSE(s.contains(Element(kU, {1, 0})));
  check_matches_closure(s);

  CHECK(Subgroup::zero(kU).order_exponent() == 0);
  CHECK(Subgroup::zero(kU).is_zero());
  CHECK(Subgroup::full(kU).is_full());
  CHECK(Subgroup::full(kU).order_exponent() == 4);
}

TEST_CASE("canonical bases are generator-order independent") {
  for (const GroupShape& g : {GroupShape(2, {1, 3}), GroupShape(3, {1, 2}), GroupShape(2, {2, 2})}) {
    const auto elems = all_elements(g);
    for (const Element& a : elems) {
      for (const Element& b : elems) {
        const Subgroup s1 = Subgroup::span(g, {a, b});
        const Subgroup s2 = Subgroup::span(g, {b, a, a + b});
        CHECK(s1 == s2);
        check_matches_closure(s1);
      }
    }
  }
}

TEST_CASE("join and meet agree with element-set union and intersection") {
  const Subgroup s = Subgroup::span(kU, {Element(kU, {1, 2})});
  const Subgroup t = Subgroup::span(kU, {Element(kU, {1, 0})});
  const Subgroup j = join(s, t);
  CHECK(j.order_exponent() == 3);
  CHECK(j.basis_rows() == std::vector<std::vector<u64>>{{1, 0}, {0, 2}});

  const Subgroup socle = socle_subgroup(kU, 1);
  CHECK(socle.basis_rows() == std::vector<std::vector<u64>>{{1, 0}, {0, 4}});
  const Subgroup m = meet(s, socle);
  CHECK(m == Subgroup::span(kU, {Element(kU, {0, 4})}));

  for (const GroupShape& g : {GroupShape(2, {1, 3}), GroupShape(3, {1, 2})}) {
    const auto elems = all_elements(g);
    for (const Element& a : elems) {
      for (const Element& b : elems) {
        const Subgroup x = Subgroup::span(g, {a});
        const Subgroup y = Subgroup::span(g, {b});
        const auto xs = sorted_elements(x);
        const auto ys = sorted_elements(y);
        std::vector<Element> expect_meet;
        std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(),
                              std::back_inserter(expect_meet));
        CHECK(sorted_elements(meet(x, y)) == expect_meet);
        std::vector<Element> both = xs;
        both.insert(both.end(), ys.begin(), ys.end());
        CHECK(sorted_elements(join(x, y)) == brute::closure(g, both));
      }
    }
  }
}

TEST_CASE("indexes and quotient types") {
  const Subgroup s = Subgroup::span(kU, {Element(kU, {1, 2})});
  const Subgroup full = Subgroup::full(kU);
  CHECK(index_exponent(full, s) == 2);
  CHECK(index_of(full, s).str() == "4");
  CHECK(quotient_type(full, s) == std::vector<u32>{2});
  CHECK(quotient_shape(full, s) == GroupShape(2, {2}));
  CHECK(quotient_type(s, s).empty());
  CHECK_THROWS_AS(index_exponent(s, full), std::invalid_argument);

  const auto defect = commensurability_defect(s, socle_subgroup(kU, 1));
  CHECK(defect.first.str() == "2");
  CHECK(defect.second.str() == "2");

  // Quotient by the n-th power subgroup recovers the truncated shape.
  const GroupShape g(3, {1, 2, 2});
  CHECK(quotient_type(Subgroup::full(g), power_subgroup(g, 1)) == std::vector<u32>{1, 1, 1});
  CHECK(quotient_type(Subgroup::full(g), power_subgroup(g, 2)) == std::vector<u32>{1, 2, 2});
  CHECK(quotient_type(power_subgroup(g, 1), power_subgroup(g, 2)) == std::vector<u32>{1, 1});
}

TEST_CASE("alpha thresholds carve out the expected subgroups") {
  const AlphaSequence a({ExtendedNat(1), ExtendedNat(3), ExtendedNat::infinity()});
  const Subgroup cut = g_alpha(kU, a);
  CHECK(cut == Subgroup::span(kU, {Element(kU, {0, 4})}));

  const Subgroup s = Subgroup::span(kU, {Element(kU, {1, 2})});
  CHECK(canonical_alpha(s).str() == "(0,2,inf,inf)");
  CHECK(normalize_alpha(kU, a).str() == "(2,inf,inf,inf)");

  // Normalization is idempotent and preserves the subgroup.
  const AlphaSequence n1 = normalize_alpha(kU, a);
  CHECK(g_alpha(kU, n1) == cut);
  CHECK(normalize_alpha(kU, n1) == n1);

  // The threshold subgroup is an intersection of height conditions; verify
  // membership elementwise.
  for (const Element& x : all_elements(kU)) {
    bool ok = true;
    Element y = x;
    for (std::size_t n = 0; n < a.size(); ++n) {
      if (height(y) < a.entries()[n]) ok = false;
      y = scale(2, y);
    }
    CHECK(cut.contains(x) == ok);
  }
}

TEST_CASE("power and socle sections") {
  CHECK(power_subgroup(kU, 1).basis_rows() == std::vector<std::vector<u64>>{{2, 0}, {0, 2}});
  CHECK(power_subgroup(kU, 3).is_zero());
  CHECK(socle_subgroup(kU, 1).order_exponent() == 2);
  CHECK(socle_subgroup(kU, 3).is_full());

  for (const GroupShape& g : {GroupShape(2, {1, 3}), GroupShape(3, {1, 2})}) {
    for (u32 k = 0; k <= g.max_exponent(); ++k) {
      const auto pk = static_cast<i64>(checked_pow(g.p(), k));
      std::set<Element> powers;
      std::vector<Element> killed;
      for (const Element& x : all_elements(g)) {
        powers.insert(scale(pk, x));
        if (scale(pk, x).is_zero()) killed.push_back(x);
      }
      CHECK(sorted_elements(power_subgroup(g, k)) ==
            std::vector<Element>(powers.begin(), powers.end()));
      CHECK(sorted_elements(socle_subgroup(g, k)) == killed);
    }
  }
}

TEST_CASE("subgroup enumeration is exhaustive, canonical, and sorted") {
  CHECK(enumerate_subgroups(GroupShape(2, {1, 1})).size() == 5);
  CHECK(enumerate_subgroups(GroupShape(2, {2})).size() == 3);

  for (const GroupShape& g : {GroupShape(2, {1, 1}), GroupShape(2, {1, 3}), GroupShape(3, {1, 2}),
                              GroupShape(2, {1, 1, 2})}) {
    const auto subs = enumerate_subgroups(g);
    std::set<std::vector<Element>> got;
    for (const Subgroup& s : subs) got.insert(sorted_elements(s));
    const auto oracle = brute::all_subgroups(g);
    CHECK(got.size() == subs.size());
    CHECK(std::vector<std::vector<Element>>(got.begin(), got.end()) == oracle);
    for (std::size_t i = 1; i < subs.size(); ++i) CHECK(lex_less(subs[i - 1], subs[i]));
  }

  CHECK_THROWS_AS(enumerate_subgroups(GroupShape(2, {1, 1}), 2), BoundError);
}

TEST_CASE("subset and equality behave like element sets") {
  const Subgroup s = Subgroup::span(kU, {Element(kU, {1, 2})});
  CHECK(s.is_subset_of(Subgroup::full(kU)));
  CHECK(Subgroup::zero(kU).is_subset_of(s));
  CHECK_FALSE(s.is_subset_of(socle_subgroup(kU, 1)));
  CHECK(meet(s, socle_subgroup(kU, 1)).is_subset_of(s));
}
