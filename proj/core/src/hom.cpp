#include "pgrouplab/hom.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "lattice.hpp"

namespace pgrouplab {
namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 out = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) out = mulmod(out, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return out;
}

void require_prime_match(const GroupShape& a, const GroupShape& b) {
  if (a.p() != b.p())
    throw std::invalid_argument("homomorphism endpoints have different primes");
}

u64 entry_divisor(const GroupShape& dom, const GroupShape& cod, std::size_t i, std::size_t j) {
  const u32 mu = cod.exponent_at(i);
  const u32 lam = dom.exponent_at(j);
  return mu > lam ? checked_pow(cod.p(), mu - lam) : u64{1};
}

std::string rows_str(const std::vector<std::vector<u64>>& rows) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out << ',';
      out << rows[i][j];
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace

Homomorphism::Homomorphism(GroupShape domain, GroupShape codomain,
                           std::vector<std::vector<u64>> rows)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), rows_(std::move(rows)) {
  require_prime_match(domain_, codomain_);
  if (rows_.size() != codomain_.rank()) throw std::invalid_argument("matrix has wrong row count");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != domain_.rank())
      throw std::invalid_argument("matrix has wrong column count");
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      rows_[i][j] %= codomain_.modulus_at(i);
      if (rows_[i][j] % entry_divisor(domain_, codomain_, i, j) != 0)
        throw std::invalid_argument("matrix entry does not define a homomorphism");
    }
  }
}

Homomorphism Homomorphism::zero(const GroupShape& domain, const GroupShape& codomain) {
  return Homomorphism(domain, codomain,
                      std::vector<std::vector<u64>>(codomain.rank(),
                                                    std::vector<u64>(domain.rank(), 0)));
}

Homomorphism Homomorphism::identity(const GroupShape& g) {
  std::vector<std::vector<u64>> rows(g.rank(), std::vector<u64>(g.rank(), 0));
  for (std::size_t i = 0; i < g.rank(); ++i) rows[i][i] = 1;
  return Homomorphism(g, g, std::move(rows));
}

Element Homomorphism::apply(const Element& x) const {
  if (!(x.shape() == domain_)) throw std::invalid_argument("element outside the domain");
  std::vector<u64> out(codomain_.rank(), 0);
  for (std::size_t i = 0; i < codomain_.rank(); ++i) {
    const u64 m = codomain_.modulus_at(i);
    u64 acc = 0;
    for (std::size_t j = 0; j < domain_.rank(); ++j)
      acc = (acc + mulmod(rows_[i][j], x.coord(j), m)) % m;
    out[i] = acc;
  }
  return Element(codomain_, std::move(out));
}

Subgroup Homomorphism::image(const Subgroup& x) const {
  if (!(x.shape() == domain_)) throw std::invalid_argument("subgroup outside the domain");
  std::vector<std::vector<u64>> rows;
  rows.reserve(x.basis_rows().size());
  for (const auto& row : x.basis_rows()) rows.push_back(apply(Element(domain_, row)).coords());
  return Subgroup::from_rows(codomain_, rows);
}

Subgroup Homomorphism::image() const { return image(Subgroup::full(domain_)); }

Subgroup Homomorphism::kernel() const {
  const u32 E = std::max(domain_.max_exponent(), codomain_.max_exponent());
  if (E == 0) return Subgroup::full(domain_);
  const u64 p = domain_.p();
  // Scale each congruence mod p^{mu_i} up to the common modulus p^E.
  std::vector<detail::Row> scaled(codomain_.rank(), detail::Row(domain_.rank()));
  for (std::size_t i = 0; i < codomain_.rank(); ++i) {
    const u64 lift = checked_pow(p, E - codomain_.exponent_at(i));
    for (std::size_t j = 0; j < domain_.rank(); ++j) scaled[i][j] = rows_[i][j] * lift;
  }
  const auto gens = detail::kernel_mod_q(scaled, domain_.rank(), p, E);
  return Subgroup::from_rows(domain_, gens);
}

std::string Homomorphism::str() const { return rows_str(rows_); }

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (!(inner.codomain() == outer.domain()))
    throw std::invalid_argument("composition endpoints do not match");
  const GroupShape& dom = inner.domain();
  const GroupShape& cod = outer.codomain();
  std::vector<std::vector<u64>> rows(cod.rank(), std::vector<u64>(dom.rank(), 0));
  for (std::size_t i = 0; i < cod.rank(); ++i) {
    const u64 m = cod.modulus_at(i);
    for (std::size_t k = 0; k < dom.rank(); ++k) {
      u64 acc = 0;
      for (std::size_t j = 0; j < outer.domain().rank(); ++j)
        acc = (acc + mulmod(outer.matrix()[i][j], inner.matrix()[j][k] % m, m)) % m;
      rows[i][k] = acc;
    }
  }
  return Homomorphism(dom, cod, std::move(rows));
}

namespace {

Homomorphism entrywise(const Homomorphism& a, const Homomorphism& b, bool negate_b) {
  if (!(a.domain() == b.domain()) || !(a.codomain() == b.codomain()))
    throw std::invalid_argument("homomorphism signatures do not match");
  std::vector<std::vector<u64>> rows = a.matrix();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const u64 m = a.codomain().modulus_at(i);
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const u64 bv = negate_b ? (m - b.matrix()[i][j]) % m : b.matrix()[i][j];
      rows[i][j] = (rows[i][j] + bv) % m;
    }
  }
  return Homomorphism(a.domain(), a.codomain(), std::move(rows));
}

}  // namespace

Homomorphism add(const Homomorphism& a, const Homomorphism& b) { return entrywise(a, b, false); }

Homomorphism sub(const Homomorphism& a, const Homomorphism& b) { return entrywise(a, b, true); }

Homomorphism scale_hom(i64 m, const Homomorphism& f) {
  std::vector<std::vector<u64>> rows = f.matrix();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const u64 mod = f.codomain().modulus_at(i);
    const u64 mm = static_cast<u64>(((m % static_cast<i64>(mod)) + static_cast<i64>(mod)) %
                                    static_cast<i64>(mod));
    for (u64& v : rows[i]) v = mulmod(v, mm, mod);
  }
  return Homomorphism(f.domain(), f.codomain(), std::move(rows));
}

std::optional<AutCertificate> is_automorphism(const Homomorphism& f) {
  if (!f.is_endo()) return std::nullopt;
  const GroupShape& g = f.domain();
  const std::size_t k = g.rank();
  if (k == 0) return AutCertificate{f, f};
  if (f.image().order_exponent() != g.order_exponent()) return std::nullopt;

  const u32 E = g.max_exponent();
  const u64 p = g.p();
  std::vector<detail::Row> scaled(k, detail::Row(k));
  for (std::size_t i = 0; i < k; ++i) {
    const u64 lift = checked_pow(p, E - g.exponent_at(i));
    for (std::size_t j = 0; j < k; ++j) scaled[i][j] = f.matrix()[i][j] * lift;
  }

  std::vector<std::vector<u64>> inverse(k, std::vector<u64>(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    detail::Row rhs(k, 0);
    rhs[j] = checked_pow(p, E - g.exponent_at(j));
    const auto x = detail::solve_mod_q(scaled, k, rhs, p, E);
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < k; ++i) inverse[i][j] = (*x)[i] % g.modulus_at(i);
  }

  try {
    Homomorphism back(g, g, std::move(inverse));
    const Homomorphism id = Homomorphism::identity(g);
    if (!(compose(f, back) == id) || !(compose(back, f) == id)) return std::nullopt;
    return AutCertificate{f, std::move(back)};
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

bool is_invertible_mod_p(const Homomorphism& f) {
  if (!f.is_endo()) throw std::invalid_argument("invertibility requires an endomorphism");
  const GroupShape& g = f.domain();
  const u64 p = g.p();
  const std::size_t k = g.rank();
  // Row-reduce the induced matrix on G/pG over F_p.
  std::vector<std::vector<u64>> m(k, std::vector<u64>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = f.matrix()[i][j] % p;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    while (pivot < k && m[pivot][c] == 0) ++pivot;
    if (pivot == k) return false;
    std::swap(m[c], m[pivot]);
    const u64 inv = powmod(m[c][c], p - 2, p);
    for (std::size_t j = c; j < k; ++j) m[c][j] = mulmod(m[c][j], inv, p);
    for (std::size_t i = c + 1; i < k; ++i) {
      if (m[i][c] == 0) continue;
      const u64 factor = m[i][c];
      for (std::size_t j = c; j < k; ++j)
        m[i][j] = (m[i][j] + mulmod(p - factor, m[c][j], p)) % p;
    }
  }
  return true;
}

u64 endo_order_exponent(const GroupShape& g) {
  u64 total = 0;
  for (const u32 a : g.exponents())
    for (const u32 b : g.exponents()) total += std::min(a, b);
  return total;
}

PPower endo_order(const GroupShape& g) { return PPower{g.p(), endo_order_exponent(g)}; }

u64 aut_order(const GroupShape& g) {
  const auto& e = g.exponents();
  const std::size_t k = e.size();
  const u64 p = g.p();
  const auto pow_checked = [&](u64 base, u64 exp) -> u128 {
    u128 out = 1;
    for (u64 i = 0; i < exp; ++i) {
      out *= base;
      if (out > static_cast<u128>(~u64{0})) throw BoundError("automorphism count overflows");
    }
    return out;
  };
  u128 total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    // Largest/smallest 1-based positions sharing exponent e[i].
    std::size_t d = i + 1, c = i + 1;
    while (d < k && e[d] == e[i]) ++d;
    while (c > 1 && e[c - 2] == e[i]) --c;
    const u128 f1 = pow_checked(p, d) - pow_checked(p, i);
    const u128 f2 = pow_checked(checked_pow(p, e[i]), k - d);
    const u128 f3 = pow_checked(checked_pow(p, e[i] - 1), k - c + 1);
    for (const u128 f : {f1, f2, f3}) {
      total *= f;
      if (total > static_cast<u128>(~u64{0})) throw BoundError("automorphism count overflows");
    }
  }
  return static_cast<u64>(total);
}

std::vector<Homomorphism> endo_additive_generators(const GroupShape& g) {
  std::vector<Homomorphism> out;
  const std::size_t k = g.rank();
  out.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::vector<u64>> rows(k, std::vector<u64>(k, 0));
      rows[i][j] = entry_divisor(g, g, i, j);
      out.emplace_back(g, g, std::move(rows));
    }
  }
  return out;
}

namespace {

// Smallest generator of the (cyclic) unit group mod p^lam for odd p.
u64 primitive_root(u64 p, u32 lam) {
  const u64 m = checked_pow(p, lam);
  u64 phi = m / p * (p - 1);
  // Distinct prime factors of phi.
  std::vector<u64> factors;
  u64 rest = phi;
  for (u64 d = 2; d * d <= rest; ++d) {
    if (rest % d) continue;
    factors.push_back(d);
    while (rest % d == 0) rest /= d;
  }
  if (rest > 1) factors.push_back(rest);
  for (u64 r = 2; r < m; ++r) {
    if (r % p == 0) continue;
    const bool generates = std::none_of(factors.begin(), factors.end(), [&](u64 f) {
      return powmod(r, phi / f, m) == 1;
    });
    if (generates) return r;
  }
  throw PropertyError("no primitive root found");
}

}  // namespace

std::vector<AutCertificate> aut_generators(const GroupShape& g) {
  const std::size_t k = g.rank();
  std::vector<Homomorphism> raw;

  // Unit scalings of a single coordinate: generators of (Z_{p^lam})^*.
  for (std::size_t i = 0; i < k; ++i) {
    const u32 lam = g.exponent_at(i);
    const u64 m = g.modulus_at(i);
    std::vector<u64> units;
    if (g.p() == 2) {
      if (lam == 2) units = {3};
      if (lam >= 3) units = {m - 1, 5};
    } else {
      units = {primitive_root(g.p(), lam)};
    }
    for (const u64 u : units) {
      std::vector<std::vector<u64>> rows = Homomorphism::identity(g).matrix();
      rows[i][i] = u;
      raw.emplace_back(g, g, std::move(rows));
    }
  }

  // Swaps of adjacent coordinates with equal exponents.
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (g.exponent_at(i) != g.exponent_at(i + 1)) continue;
    std::vector<std::vector<u64>> rows = Homomorphism::identity(g).matrix();
    rows[i][i] = rows[i + 1][i + 1] = 0;
    rows[i][i + 1] = rows[i + 1][i] = 1;
    raw.emplace_back(g, g, std::move(rows));
  }

  // Elementary shears id + eps_{ij}.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      std::vector<std::vector<u64>> rows = Homomorphism::identity(g).matrix();
      rows[i][j] = entry_divisor(g, g, i, j);
      raw.emplace_back(g, g, std::move(rows));
    }
  }

  std::vector<AutCertificate> out;
  out.reserve(raw.size());
  for (const Homomorphism& f : raw) {
    auto cert = is_automorphism(f);
    if (!cert) throw PropertyError("generator is not an automorphism");
    out.push_back(std::move(*cert));
  }
  return out;
}

void for_each_endo(const GroupShape& g, const std::function<bool(const Homomorphism&)>& visit) {
  const std::size_t k = g.rank();
  struct Slot {
    std::size_t i, j;
    u64 step;
    u64 radix;
  };
  std::vector<Slot> slots;
  slots.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      slots.push_back({i, j, entry_divisor(g, g, i, j),
                       checked_pow(g.p(), std::min(g.exponent_at(i), g.exponent_at(j)))});
    }
  }
  std::vector<u64> t(slots.size(), 0);
  while (true) {
    std::vector<std::vector<u64>> rows(k, std::vector<u64>(k, 0));
    for (std::size_t s = 0; s < slots.size(); ++s)
      rows[slots[s].i][slots[s].j] = t[s] * slots[s].step;
    if (!visit(Homomorphism(g, g, std::move(rows)))) return;
    std::size_t s = slots.size();
    while (s > 0 && t[s - 1] + 1 == slots[s - 1].radix) t[--s] = 0;
    if (s == 0) break;
    ++t[s - 1];
  }
}

std::vector<Homomorphism> enumerate_endos(const GroupShape& g, u64 max_count) {
  const auto total = endo_order(g).value();
  if (!total || *total > max_count)
    throw BoundError("endomorphism ring too large to enumerate: " + endo_order(g).str());
  std::vector<Homomorphism> out;
  out.reserve(static_cast<std::size_t>(*total));
  for_each_endo(g, [&](const Homomorphism& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<AutCertificate> enumerate_autos(const GroupShape& g, u64 max_count) {
  const auto total = endo_order(g).value();
  if (!total || *total > max_count)
    throw BoundError("endomorphism ring too large to scan: " + endo_order(g).str());
  std::vector<AutCertificate> out;
  for_each_endo(g, [&](const Homomorphism& f) {
    if (is_invertible_mod_p(f)) {
      auto cert = is_automorphism(f);
      if (!cert) throw PropertyError("invertibility tests disagree");
      out.push_back(std::move(*cert));
    }
    return true;
  });
  return out;
}

Homomorphism random_hom(const GroupShape& domain, const GroupShape& codomain, Rng& rng) {
  require_prime_match(domain, codomain);
  std::vector<std::vector<u64>> rows(codomain.rank(), std::vector<u64>(domain.rank(), 0));
  for (std::size_t i = 0; i < codomain.rank(); ++i) {
    for (std::size_t j = 0; j < domain.rank(); ++j) {
      const u64 choices =
          checked_pow(domain.p(), std::min(domain.exponent_at(j), codomain.exponent_at(i)));
      rows[i][j] = rng.below(choices) * entry_divisor(domain, codomain, i, j);
    }
  }
  return Homomorphism(domain, codomain, std::move(rows));
}

Homomorphism random_endo(const GroupShape& g, Rng& rng) { return random_hom(g, g, rng); }

AutCertificate random_auto(const GroupShape& g, Rng& rng) {
  for (int attempt = 0; attempt < 4096; ++attempt) {
    const Homomorphism f = random_endo(g, rng);
    if (!is_invertible_mod_p(f)) continue;
    auto cert = is_automorphism(f);
    if (!cert) throw PropertyError("invertibility tests disagree");
    return std::move(*cert);
  }
  throw PropertyError("failed to sample an automorphism");
}

GroupShape sub_shape(const GroupShape& g, const std::vector<std::size_t>& coords) {
  std::vector<u32> exps;
  exps.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= g.rank()) throw std::invalid_argument("coordinate index out of range");
    if (i > 0 && coords[i] <= coords[i - 1])
      throw std::invalid_argument("coordinate indices must be strictly increasing");
    exps.push_back(g.exponent_at(coords[i]));
  }
  return GroupShape(g.p(), exps);
}

AutCertificate shear(const GroupShape& g, const std::vector<std::size_t>& v_coords,
                     const std::vector<std::size_t>& w_coords, const Homomorphism& gamma) {
  if (v_coords.size() + w_coords.size() != g.rank())
    throw std::invalid_argument("split does not cover the group");
  std::vector<bool> used(g.rank(), false);
  for (const std::size_t c : v_coords) {
    if (c >= g.rank() || used[c]) throw std::invalid_argument("split is not a partition");
    used[c] = true;
  }
  for (const std::size_t c : w_coords) {
    if (c >= g.rank() || used[c]) throw std::invalid_argument("split is not a partition");
    used[c] = true;
  }
  if (!(gamma.domain() == sub_shape(g, v_coords)) ||
      !(gamma.codomain() == sub_shape(g, w_coords)))
    throw std::invalid_argument("map does not match the split shapes");
  // v + w |-> v + gamma(v) + w: identity plus gamma's entries routed from the
  // V columns into the W rows. The inverse is the same construction on -gamma;
  // the composition telescopes because gamma never reads W coordinates.
  const auto build = [&](bool negate) {
    std::vector<std::vector<u64>> rows(g.rank(), std::vector<u64>(g.rank(), 0));
    for (std::size_t i = 0; i < g.rank(); ++i) rows[i][i] = 1;
    for (std::size_t a = 0; a < w_coords.size(); ++a) {
      const u64 m = g.modulus_at(w_coords[a]);
      for (std::size_t b = 0; b < v_coords.size(); ++b) {
        const u64 entry = gamma.matrix()[a][b] % m;
        rows[w_coords[a]][v_coords[b]] = negate && entry != 0 ? m - entry : entry;
      }
    }
    return Homomorphism(g, g, std::move(rows));
  };
  Homomorphism fwd = build(false);
  Homomorphism inv = build(true);
  if (!(compose(fwd, inv) == Homomorphism::identity(g)) ||
      !(compose(inv, fwd) == Homomorphism::identity(g)))
    throw PropertyError("shear inverse failed to verify");
  return AutCertificate{std::move(fwd), std::move(inv)};
}

SquareStructure::SquareStructure(const GroupShape& half) : half_(half) {
  std::vector<u32> doubled;
  doubled.reserve(2 * half.rank());
  for (const u32 e : half.exponents()) {
    doubled.push_back(e);
    doubled.push_back(e);
  }
  whole_ = GroupShape(half.p(), doubled);
  for (std::size_t i = 0; i < half_.rank(); ++i) {
    assert(whole_.exponent_at(2 * i) == half_.exponent_at(i));
    assert(whole_.exponent_at(2 * i + 1) == half_.exponent_at(i));
  }
}

std::size_t SquareStructure::position(std::size_t half_index, int copy) const {
  if (copy != 0 && copy != 1) throw std::invalid_argument("copy must be 0 or 1");
  if (half_index >= half_.rank()) throw std::invalid_argument("component out of range");
  return 2 * half_index + static_cast<std::size_t>(copy);
}

Homomorphism SquareStructure::inject(int copy) const {
  std::vector<std::vector<u64>> rows(whole_.rank(), std::vector<u64>(half_.rank(), 0));
  for (std::size_t j = 0; j < half_.rank(); ++j) rows[position(j, copy)][j] = 1;
  return Homomorphism(half_, whole_, std::move(rows));
}

Homomorphism SquareStructure::project(int copy) const {
  std::vector<std::vector<u64>> rows(half_.rank(), std::vector<u64>(whole_.rank(), 0));
  for (std::size_t j = 0; j < half_.rank(); ++j) rows[j][position(j, copy)] = 1;
  return Homomorphism(whole_, half_, std::move(rows));
}

AutCertificate SquareStructure::swap_copies() const {
  std::vector<std::vector<u64>> rows(whole_.rank(), std::vector<u64>(whole_.rank(), 0));
  for (std::size_t j = 0; j < half_.rank(); ++j) {
    rows[position(j, 0)][position(j, 1)] = 1;
    rows[position(j, 1)][position(j, 0)] = 1;
  }
  auto cert = is_automorphism(Homomorphism(whole_, whole_, std::move(rows)));
  if (!cert) throw PropertyError("copy swap is not an automorphism");
  return std::move(*cert);
}

Homomorphism SquareStructure::kappa(int copy) const {
  return compose(inject(copy), project(copy));
}

std::optional<SquareStructure> recognize_square(const GroupShape& g) {
  const auto& e = g.exponents();
  if (e.size() % 2 != 0) return std::nullopt;
  std::vector<u32> half;
  for (std::size_t i = 0; i < e.size(); i += 2) {
    if (e[i] != e[i + 1]) return std::nullopt;
    half.push_back(e[i]);
  }
  SquareStructure s{GroupShape(g.p(), half)};
  assert(s.whole() == g);
  return s;
}

}  // namespace pgrouplab
