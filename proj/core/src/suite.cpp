#include "pgrouplab/suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "pgrouplab/hom.hpp"
#include "pgrouplab/inertia.hpp"
#include "pgrouplab/invariance.hpp"
#include "pgrouplab/json_io.hpp"
#include "pgrouplab/parse.hpp"
#include "pgrouplab/rng.hpp"
#include "pgrouplab/subgroup.hpp"

namespace pgrouplab {

namespace {

// Accumulates elementary checks; keeps the first failure only. Failure
// messages passed as literals cost nothing on the hot paths.
struct Tally {
  u64 checks = 0;
  bool passed = true;
  std::string detail;

  void require(bool ok, const char* what) {
    ++checks;
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }

  template <typename F>
  void require_f(bool ok, const F& message) {
    ++checks;
    if (!ok && passed) {
      passed = false;
      detail = message();
    }
  }
};

Rng seeded(const SuiteOptions& o, u64 salt) { return Rng(mix_seed(o.seed, salt)); }

Subgroup random_span(const GroupShape& g, const std::vector<Element>& all, Rng& rng) {
  std::vector<Element> gens;
  for (u64 i = rng.below(3) + 1; i > 0; --i) gens.push_back(all[rng.below(all.size())]);
  return Subgroup::span(g, gens);
}

// |closure of gens under + and -|, by element walking alone.
u64 closure_size(const GroupShape& g, const std::vector<Element>& gens) {
  std::set<Element> seen{Element::zero(g)};
  std::vector<Element> work{Element::zero(g)};
  while (!work.empty()) {
    const Element x = work.back();
    work.pop_back();
    for (const Element& e : gens)
      for (const Element& y : {x + e, x - e})
        if (seen.insert(y).second) work.push_back(y);
  }
  return seen.size();
}

// --- 1: the mixed 2-group Z_2 + Z_8 has a characteristic subgroup that the
// coordinate projection moves off itself.

void criterion_classify_witness(const SuiteOptions& o, Tally& t) {
  const GroupShape g = parse_group("2:[3,1]");
  const ClassificationReport rep = classify(g);
  const Element source(g, {1, 2});
  // Self-test hook: the corrupted oracle expects a wrong witness image.
  const Element expected_image(g, {o.corrupt_oracle ? u64{0} : u64{1}, 0});
  const Subgroup s = Subgroup::span(g, {source});

  t.require(std::count(rep.characteristic.begin(), rep.characteristic.end(), s) == 1,
            "span{(1,2)} should be listed characteristic in 2:[3,1]");
  t.require(std::count(rep.fully_invariant.begin(), rep.fully_invariant.end(), s) == 0,
            "span{(1,2)} should not be listed fully invariant in 2:[3,1]");

  bool witnessed = false;
  for (const auto& [subgroup, witness] : rep.gap) {
    if (!(subgroup == s)) continue;
    witnessed = witness.map == endo_additive_generators(g)[0] && witness.source == source &&
                witness.image == expected_image && !s.contains(witness.image);
  }
  t.require(witnessed,
            "gap witness for span{(1,2)} should be the coordinate projection sending (1,2) to (1,0)");
}

// --- 2: every endomorphism of a square splits into the four block
// automorphisms, reconstructed here independently and compared exactly.

void criterion_four_auto(const SuiteOptions& o, Tally& t) {
  const std::vector<GroupShape> squares = {GroupShape(2, {1, 1, 3, 3}), GroupShape(3, {1, 1, 2, 2}),
                                           GroupShape(2, {1, 1, 1, 1, 2, 2})};
  for (std::size_t gi = 0; gi < squares.size(); ++gi) {
    const GroupShape& g = squares[gi];
    const SquareStructure sq = *recognize_square(g);
    const GroupShape& half = sq.half();
    const Homomorphism id = Homomorphism::identity(half);
    const Homomorphism nid = scale_hom(-1, id);
    const Homomorphism z = Homomorphism::zero(half, half);
    auto assemble = [&](const Homomorphism& m00, const Homomorphism& m01, const Homomorphism& m10,
                        const Homomorphism& m11) {
      auto lift = [&](const Homomorphism& blk, int r, int c) {
        return compose(sq.inject(r), compose(blk, sq.project(c)));
      };
      return add(add(lift(m00, 0, 0), lift(m01, 0, 1)), add(lift(m10, 1, 0), lift(m11, 1, 1)));
    };

    Rng rng = seeded(o, 200 + gi);
    for (int probe = 0; probe < 200; ++probe) {
      const Homomorphism gamma = random_endo(g, rng);
      const AutDecomposition dec = four_auto_decompose(gamma);
      t.require(dec.parts.size() == 4, "four-part decomposition expected");

      auto blk = [&](int r, int c) { return compose(sq.project(r), compose(gamma, sq.inject(c))); };
      const Homomorphism a = blk(0, 0), b = blk(0, 1), c = blk(1, 0), d = blk(1, 1);
      const std::array<Homomorphism, 4> expected = {assemble(id, z, c, id), assemble(nid, b, z, nid),
                                                    assemble(a, id, id, z), assemble(z, nid, nid, d)};
      Homomorphism sum = Homomorphism::zero(g, g);
      for (std::size_t i = 0; i < 4; ++i) {
        t.require(dec.parts[i].forward == expected[i], "part differs from its block formula");
        t.require(compose(dec.parts[i].forward, dec.parts[i].inverse) == Homomorphism::identity(g) &&
                      compose(dec.parts[i].inverse, dec.parts[i].forward) == Homomorphism::identity(g),
                  "part inverse failed to verify");
        sum = add(sum, dec.parts[i].forward);
      }
      t.require(sum == gamma, "parts do not sum to the endomorphism");
    }
  }
}

// --- 3: inertia of a sum is bounded by the product of the parts' inertias.

void criterion_sum_bound(const SuiteOptions& o, Tally& t) {
  for (std::size_t gi = 0; gi < o.corpus.size(); ++gi) {
    const GroupShape& g = o.corpus[gi];
    const std::vector<Element> all = all_elements(g);
    Rng rng = seeded(o, 300 + gi);
    for (int probe = 0; probe < 500; ++probe) {
      const Subgroup x = random_span(g, all, rng);
      std::vector<Homomorphism> parts;
      for (u64 i = rng.below(4) + 1; i > 0; --i) parts.push_back(random_endo(g, rng));
      t.require(check_sum_bound(parts, x).holds, "sum bound violated");
    }
  }
}

// --- 4: two-automorphism decomposition succeeds for every endomorphism of
// every odd-p group of order <= p^4, and fails exactly for the identity of
// Z_2. Decomposability depends only on the diagonal equal-exponent blocks
// of the matrix mod p, so large groups are covered by sweeping every block
// class (or, for M_4(F_5), every left-right rank class) and spot-checking
// the full pipeline on seeded endomorphisms.

u64 small_inverse_modp(u64 a, u64 p) {
  for (u64 x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw PropertyError("not invertible");
}

bool full_rank_modp(std::array<u64, 16> m, std::size_t d, u64 p) {
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = d;
    for (std::size_t r = c; r < d; ++r)
      if (m[r * d + c] % p != 0) {
        piv = r;
        break;
      }
    if (piv == d) return false;
    if (piv != c)
      for (std::size_t j = 0; j < d; ++j) std::swap(m[c * d + j], m[piv * d + j]);
    const u64 inv = small_inverse_modp(m[c * d + c] % p, p);
    for (std::size_t j = c; j < d; ++j) m[c * d + j] = m[c * d + j] * inv % p;
    for (std::size_t r = c + 1; r < d; ++r) {
      const u64 f = m[r * d + c] % p;
      if (f)
        for (std::size_t j = c; j < d; ++j)
          m[r * d + j] = (m[r * d + j] + (p - f) * m[c * d + j]) % p;
    }
  }
  return true;
}

// The split rule used by the library: strict lower part of D plus a unit
// diagonal avoiding D's diagonal. Returns both halves.
std::pair<std::array<u64, 16>, std::array<u64, 16>> split_rule(const std::array<u64, 16>& dmat,
                                                               std::size_t d, u64 p) {
  std::array<u64, 16> a{}, rest{};
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const u64 v = dmat[r * d + c] % p;
      u64 av = 0;
      if (r > c) av = v;
      if (r == c) av = v == 1 ? 2 : 1;
      a[r * d + c] = av;
      rest[r * d + c] = (v + p - av) % p;
    }
  return {a, rest};
}

void sweep_block_classes(u64 p, std::size_t d, Tally& t) {
  u64 total = 1;
  for (std::size_t i = 0; i < d * d; ++i) total *= p;
  std::array<u64, 16> dmat{};
  for (u64 it = 0; it < total; ++it) {
    const auto [a, rest] = split_rule(dmat, d, p);
    t.require(full_rank_modp(a, d, p) && full_rank_modp(rest, d, p),
              "block class without a two-unit split");
    for (std::size_t i = 0; i < d * d; ++i) {
      if (++dmat[i] < p) break;
      dmat[i] = 0;
    }
  }
}

std::vector<std::vector<u32>> shapes_up_to_weight(u32 max_total) {
  std::vector<std::vector<u32>> out;
  std::vector<u32> cur;
  const std::function<void(u32, u32)> rec = [&](u32 least, u32 left) {
    for (u32 next = least; next <= left; ++next) {
      cur.push_back(next);
      out.push_back(cur);
      rec(next, left - next);
      cur.pop_back();
    }
  };
  rec(1, max_total);
  return out;
}

void criterion_two_auto(const SuiteOptions& o, Tally& t) {
  constexpr u64 kFullApiBound = 200'000;    // run every endomorphism end to end
  constexpr u64 kClassSweepBound = 50'000'000;  // sweep every diagonal-block class

  std::set<std::pair<u64, std::size_t>> swept;
  for (const u64 p : {u64{3}, u64{5}}) {
    for (const std::vector<u32>& shape : shapes_up_to_weight(4)) {
      const GroupShape g(p, shape);
      Rng rng = seeded(o, 400 + p * 16 + g.rank());

      // Block sizes are the multiplicities of each exponent.
      std::vector<std::size_t> block_sizes;
      for (std::size_t s = 0; s < g.rank();) {
        std::size_t e = s;
        while (e < g.rank() && g.exponent_at(e) == g.exponent_at(s)) ++e;
        block_sizes.push_back(e - s);
        s = e;
      }

      const std::optional<u64> endos = endo_order(g).value();
      if (endos && *endos <= kFullApiBound) {
        for_each_endo(g, [&](const Homomorphism& f) {
          t.require(two_auto_decompose(f).has_value(), "odd-p endomorphism failed to split");
          return true;
        });
        continue;
      }

      for (const std::size_t d : block_sizes) {
        u64 classes = 1;
        bool overflow = false;
        for (std::size_t i = 0; i < d * d && !overflow; ++i) {
          if (classes > kClassSweepBound / p) overflow = true;
          classes *= p;
        }
        if (!overflow && classes <= kClassSweepBound) {
          if (swept.insert({p, d}).second) sweep_block_classes(p, d, t);
          continue;
        }
        // Too many classes (M_4(F_5)): splitting is invariant under
        // two-sided unit multiplication, D = A + B iff uDv = uAv + uBv, and
        // every class reduces to a rank normal form diag(1...1, 0...0).
        for (std::size_t rank_rep = 0; rank_rep <= d; ++rank_rep) {
          std::array<u64, 16> dmat{};
          for (std::size_t i = 0; i < rank_rep; ++i) dmat[i * d + i] = 1;
          const auto [a, rest] = split_rule(dmat, d, p);
          t.require(full_rank_modp(a, d, p) && full_rank_modp(rest, d, p),
                    "rank representative without a two-unit split");
        }
      }

      // Seeded endomorphisms exercise the full pipeline on the big groups.
      for (int probe = 0; probe < 200; ++probe)
        t.require(two_auto_decompose(random_endo(g, rng)).has_value(),
                  "seeded odd-p endomorphism failed to split");
    }
  }

  const GroupShape z2(2, {1});
  t.require(!two_auto_decompose(Homomorphism::identity(z2)).has_value(),
            "the identity of Z_2 should have no two-unit split");
  t.require(two_auto_decompose(Homomorphism::zero(z2, z2)).has_value(),
            "the zero map of Z_2 should split as 1 + 1");
}

// --- 5: fully invariant subgroups are exactly the fixed points of the
// height-threshold closure, with full invariance decided by raw sweeps.

void criterion_threshold_fixed_points(const SuiteOptions&, Tally& t) {
  const std::vector<GroupShape> scope = {GroupShape(2, {1, 2}), GroupShape(2, {1, 3}),
                                         GroupShape(2, {1, 1, 2}), GroupShape(3, {1, 2}),
                                         GroupShape(3, {1, 3}), GroupShape(3, {1, 1, 2})};
  for (const GroupShape& g : scope) {
    const std::vector<Homomorphism> endos = enumerate_endos(g);
    auto brute_invariant = [&](const Subgroup& x) {
      const std::vector<Element> gens = x.generators();
      for (const Homomorphism& f : endos)
        for (const Element& e : gens)
          if (!x.contains(f(e))) return false;
      return true;
    };

    for (const Subgroup& x : enumerate_subgroups(g)) {
      const bool fixed = g_alpha(g, canonical_alpha(x)) == x;
      t.require(brute_invariant(x) == fixed,
                "fully invariant subgroups must be the height-threshold fixed points");
    }

    // Every threshold subgroup is fully invariant, over all threshold
    // sequences: strictly increasing entries from {0..E}, then infinity.
    const u32 top = g.max_exponent();
    for (u64 mask = 0; mask < (u64{1} << (top + 1)); ++mask) {
      std::vector<ExtendedNat> entries;
      for (u32 v = 0; v <= top; ++v)
        if ((mask >> v) & 1) entries.push_back(ExtendedNat{v});
      while (entries.size() < std::size_t{top} + 1) entries.push_back(ExtendedNat::infinity());
      t.require(brute_invariant(g_alpha(g, AlphaSequence(entries))),
                "height-threshold subgroup must be fully invariant");
    }
  }
}

// --- 6: at p = 3 the characteristic list collapses onto the fully invariant
// one; the mixed 2-group keeps a strict gap.

void criterion_odd_collapse(const SuiteOptions&, Tally& t) {
  for (const GroupShape& g :
       {GroupShape(3, {1, 2}), GroupShape(3, {1, 3}), GroupShape(3, {1, 1, 2})}) {
    const ClassificationReport rep = classify(g);
    t.require(rep.characteristic == rep.fully_invariant,
              "odd-p characteristic subgroups must all be fully invariant");
    t.require(rep.gap.empty(), "odd-p classification should have an empty gap");
  }
  const GroupShape u(2, {1, 3});
  const ClassificationReport rep = classify(u);
  const Subgroup s = Subgroup::span(u, {Element(u, {1, 2})});
  bool in_gap = false;
  for (const auto& [subgroup, witness] : rep.gap) in_gap = in_gap || subgroup == s;
  t.require(in_gap, "2:[1,3] must keep span{(1,2)} characteristic but not fully invariant");
}

// --- 7: the swap family's inertia quotient grows as p^k.

void criterion_swap_growth(const SuiteOptions&, Tally& t) {
  for (const u64 p : {u64{2}, u64{3}}) {
    for (u32 n = 0; n <= 6; ++n) {
      const NoOneFamily fam = noone_family(p, n);
      t.require(fam.hat_exponents.size() == std::size_t{n} + 1, "family size mismatch");
      for (u32 swapped = 0; swapped <= n; ++swapped)
        t.require(fam.hat_exponents[swapped] == swapped, "swap inertia order should be p^k");
    }
  }
}

// --- 8: shears invert exactly, and their inertia quotients agree with raw
// coset counting.

void criterion_shears(const SuiteOptions& o, Tally& t) {
  const std::vector<GroupShape> pool = {GroupShape(2, {1, 3}), GroupShape(2, {1, 1, 2}),
                                        GroupShape(3, {1, 2}), GroupShape(2, {1, 2, 3}),
                                        GroupShape(3, {1, 1, 2})};
  Rng rng = seeded(o, 800);
  for (int probe = 0; probe < 200; ++probe) {
    const GroupShape& g = pool[rng.below(pool.size())];
    const u64 mask = rng.below(u64{1} << g.rank());
    std::vector<std::size_t> v_coords, w_coords;
    for (std::size_t i = 0; i < g.rank(); ++i)
      ((mask >> i) & 1 ? v_coords : w_coords).push_back(i);
    const GroupShape vs = sub_shape(g, v_coords), ws = sub_shape(g, w_coords);
    const Homomorphism gamma = random_hom(vs, ws, rng);
    const AutCertificate cert = shear(g, v_coords, w_coords, gamma);
    t.require(compose(cert.forward, cert.inverse) == Homomorphism::identity(g) &&
                  compose(cert.inverse, cert.forward) == Homomorphism::identity(g),
              "shear inverse failed");

    const std::vector<Element> all = all_elements(g);
    const Subgroup x = random_span(g, all, rng);
    std::vector<Element> joined = x.generators();
    for (const Element& e : x.generators()) joined.push_back(cert.forward(e));
    const u64 raw = closure_size(g, joined) / closure_size(g, x.generators());
    t.require_f(hat(cert.forward, x).order.value() == raw,
                [] { return std::string("shear inertia differs from raw coset count"); });
  }
}

// --- 9: the square hull contains its subgroup and obeys the quadruple
// product bound.

void criterion_square_hull(const SuiteOptions& o, Tally& t) {
  const std::vector<GroupShape> squares = {GroupShape(2, {1, 1, 2, 2}), GroupShape(3, {1, 1, 1, 1})};
  for (std::size_t gi = 0; gi < squares.size(); ++gi) {
    const GroupShape& g = squares[gi];
    const std::vector<Element> all = all_elements(g);
    Rng rng = seeded(o, 900 + gi);
    for (int probe = 0; probe < 100; ++probe) {
      const Subgroup x = random_span(g, all, rng);
      const SquareHullResult res = square_hull(x);
      t.require(x.is_subset_of(res.hull), "square hull must contain the subgroup");
      t.require(res.holds, "square hull index exceeded the quadruple bound");
      t.require(res.hull.order_exponent() == 2 * res.hull_half.order_exponent(),
                "square hull must be a square");
    }
  }
}

// --- 10: height splits satisfy their three chain conditions at every level,
// and a matching pair exists by raw search on small groups.

void criterion_height_split(const SuiteOptions& o, Tally& t) {
  const std::vector<GroupShape> pool = {GroupShape(2, {1, 1}), GroupShape(2, {1, 1, 1, 1}),
                                        GroupShape(2, {1, 1, 2, 2}), GroupShape(3, {1, 1}),
                                        GroupShape(3, {1, 1, 2, 2}),
                                        GroupShape(2, {1, 1, 2, 2, 3, 3})};
  int probes = 0;
  for (std::size_t gi = 0; gi < pool.size(); ++gi) {
    const GroupShape& g = pool[gi];
    const u64 p = g.p();
    const std::vector<Element> all = all_elements(g);
    Rng rng = seeded(o, 1000 + gi);
    int used = 0;
    while (used < 500 / static_cast<int>(pool.size()) + (gi < 500 % pool.size() ? 1 : 0)) {
      const Element x = all[rng.below(all.size())];
      const Element z = all[rng.below(all.size())];
      const u32 k = order_exponent(x);
      if (!HeightSequence::of(x).leq(HeightSequence::of(z))) continue;
      if (!scale(static_cast<i64>(checked_pow(p, k)), z).is_zero()) continue;
      ++used;
      ++probes;

      const SplitChain chain = split_by_height(x, z);
      t.require(chain.levels.size() == std::size_t{k} + 1, "split chain has one level per power");
      for (const SplitLevel& lv : chain.levels) {
        const Element pjx = scale(static_cast<i64>(checked_pow(p, lv.level)), x);
        const Element pjz = scale(static_cast<i64>(checked_pow(p, lv.level)), z);
        t.require(lv.y + lv.y_prime == pjz, "level sum condition failed");
        t.require(height(lv.y) == height(pjx) && height(lv.y_prime) == height(pjx),
                  "level height condition failed");
      }
      for (std::size_t i = 0; i + 1 < chain.levels.size(); ++i)
        t.require(scale(static_cast<i64>(p), chain.levels[i + 1].y) == chain.levels[i].y,
                  "level divisibility condition failed");

      if (g.order_exponent() <= 10) {
        const HeightSequence hx = HeightSequence::of(x);
        bool exists = false;
        for (const Element& y : all)
          if (HeightSequence::of(y) == hx && HeightSequence::of(z - y) == hx) {
            exists = true;
            break;
          }
        t.require(exists, "raw pair search found no split");
      }
    }
  }
  t.require(probes == 500, "probe budget should be spent exactly");
}

// --- 11: the published generating sets generate exactly the automorphism
// and endomorphism sets, by exhaustive enumeration.

void criterion_generators(const SuiteOptions& o, Tally& t) {
  for (const GroupShape& g : o.corpus) {
    const u64 bound = g.p() == 2 ? 256 : 729;
    const std::optional<u64> order = g.order().value();
    if (!order || *order > bound) continue;

    std::set<std::vector<std::vector<u64>>> reached{Homomorphism::identity(g).matrix()};
    std::vector<Homomorphism> work{Homomorphism::identity(g)};
    const std::vector<AutCertificate> gens = aut_generators(g);
    while (!work.empty()) {
      const Homomorphism f = work.back();
      work.pop_back();
      for (const AutCertificate& c : gens) {
        Homomorphism next = compose(c.forward, f);
        if (reached.insert(next.matrix()).second) work.push_back(std::move(next));
      }
    }
    std::set<std::vector<std::vector<u64>>> autos;
    for (const AutCertificate& c : enumerate_autos(g)) autos.insert(c.forward.matrix());
    t.require(reached == autos, "generated automorphisms differ from the enumeration");

    std::set<std::vector<std::vector<u64>>> added{Homomorphism::zero(g, g).matrix()};
    std::vector<Homomorphism> frontier{Homomorphism::zero(g, g)};
    const std::vector<Homomorphism> eps = endo_additive_generators(g);
    while (!frontier.empty()) {
      const Homomorphism f = frontier.back();
      frontier.pop_back();
      for (const Homomorphism& e : eps) {
        Homomorphism next = add(f, e);
        if (added.insert(next.matrix()).second) frontier.push_back(std::move(next));
      }
    }
    std::set<std::vector<std::vector<u64>>> endos;
    for (const Homomorphism& f : enumerate_endos(g)) endos.insert(f.matrix());
    t.require(added == endos, "additively generated endomorphisms differ from the enumeration");
  }
}

using CriterionFn = std::function<void(const SuiteOptions&, Tally&)>;

struct Entry {
  int id;
  const char* name;
  CriterionFn run;
};

const std::vector<Entry>& criteria() {
  static const std::vector<Entry> list = {
      {1, "classify-mixed-2group-witness", criterion_classify_witness},
      {2, "four-automorphism-sum-on-squares", criterion_four_auto},
      {3, "sum-bound-inequality", criterion_sum_bound},
      {4, "two-automorphism-completeness", criterion_two_auto},
      {5, "height-threshold-fixed-points", criterion_threshold_fixed_points},
      {6, "odd-p-characteristic-collapse", criterion_odd_collapse},
      {7, "swap-family-inertia-growth", criterion_swap_growth},
      {8, "shear-inverse-and-inertia", criterion_shears},
      {9, "square-hull-bound", criterion_square_hull},
      {10, "height-split-chain", criterion_height_split},
      {11, "generator-soundness", criterion_generators},
  };
  return list;
}

CriterionResult run_one(const Entry& entry, const SuiteOptions& options) {
  CriterionResult result;
  result.id = entry.id;
  result.name = entry.name;
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  try {
    entry.run(options, tally);
  } catch (const std::exception& e) {
    tally.passed = false;
    tally.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = tally.passed;
  result.checks = tally.checks;
  result.detail = tally.detail;
  return result;
}

std::vector<CriterionResult> run_fixed(const SuiteOptions& options) {
  std::vector<CriterionResult> results;
  for (const Entry& entry : criteria())
    if (options.only == 0 || options.only == entry.id) results.push_back(run_one(entry, options));
  return results;
}

std::string render(const SuiteOptions& options, const std::vector<CriterionResult>& results) {
  SuiteReport report;
  report.seed = options.seed;
  report.corpus = options.corpus;
  report.results = results;
  report.all_passed = std::all_of(results.begin(), results.end(),
                                  [](const CriterionResult& r) { return r.passed; });
  return suite_report_text(report);
}

}  // namespace

std::vector<GroupShape> default_corpus() {
  return {GroupShape(2, {1, 2}), GroupShape(2, {1, 3}), GroupShape(2, {1, 1, 2}),
          GroupShape(3, {1, 2}), GroupShape(3, {1, 3}), GroupShape(3, {1, 1, 2})};
}

SuiteReport run_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.seed = options.seed;
  report.corpus = options.corpus;
  report.results = run_fixed(options);

  if (options.only == 0 || options.only == 12) {
    // Re-running every check from the same configuration must render the
    // same bytes; the first pass doubles as one of the two runs.
    CriterionResult replay;
    replay.id = 12;
    replay.name = "deterministic-replay";
    const auto start = std::chrono::steady_clock::now();
    try {
      SuiteOptions base = options;
      base.only = 0;
      const std::string first = options.only == 0 ? render(base, report.results)
                                                  : render(base, run_fixed(base));
      const std::string second = render(base, run_fixed(base));
      replay.checks = 1;
      replay.passed = first == second;
      if (!replay.passed) replay.detail = "two identically seeded runs rendered different bytes";
    } catch (const std::exception& e) {
      replay.passed = false;
      replay.detail = std::string("exception: ") + e.what();
    }
    replay.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.results.push_back(replay);
  }

  report.all_passed = std::all_of(report.results.begin(), report.results.end(),
                                  [](const CriterionResult& r) { return r.passed; });
  return report;
}

std::string suite_report_text(const SuiteReport& report) {
  Json corpus = Json::array();
  for (const GroupShape& g : report.corpus) corpus.push_back(to_json(g));
  Json results = Json::array();
  for (const CriterionResult& r : report.results)
    results.push_back(Json{{"id", r.id},
                           {"name", r.name},
                           {"passed", r.passed},
                           {"checks", r.checks},
                           {"detail", r.detail}});
  const Json out{{"seed", report.seed},
                 {"corpus", corpus},
                 {"results", results},
                 {"all_passed", report.all_passed}};
  return out.dump(2) + "\n";
}

}  // namespace pgrouplab
