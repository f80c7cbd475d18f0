#include "pgrouplab/group.hpp"

#include <algorithm>

namespace pgrouplab {

namespace {

bool is_prime(u64 p) {
  if (p < 2) return false;
  for (u64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Largest safe coordinate modulus: products of two coordinates plus carries
// must stay inside signed 128-bit intermediates.
constexpr u64 kMaxModulus = u64{1} << 62;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

}  // namespace

u64 p_valuation(u64 x, u64 p) {
  // Caller guarantees x != 0.
  u64 v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

GroupShape::GroupShape(u64 p, std::vector<u32> exponents) : p_(p), lambda_(std::move(exponents)) {
  if (!is_prime(p_)) throw std::invalid_argument("p = " + std::to_string(p_) + " is not prime");
  for (u32 e : lambda_)
    if (e == 0) throw std::invalid_argument("exponents must be positive");
  std::sort(lambda_.begin(), lambda_.end());
  moduli_.reserve(lambda_.size());
  for (u32 e : lambda_) {
    u64 m = checked_pow(p_, e);
    if (m > kMaxModulus) throw BoundError("p^" + std::to_string(e) + " exceeds the supported coordinate range");
    moduli_.push_back(m);
  }
}

u64 GroupShape::order_exponent() const {
  u64 s = 0;
  for (u32 e : lambda_) s += e;
  return s;
}

std::string GroupShape::str() const {
  std::string s = std::to_string(p_) + ":[";
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lambda_[i]);
  }
  return s + "]";
}

Element::Element(GroupShape shape, std::vector<u64> coords)
    : shape_(std::move(shape)), coords_(std::move(coords)) {
  if (coords_.size() != shape_.rank())
    throw std::invalid_argument("coordinate count does not match the group rank");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] %= shape_.modulus_at(i);
}

Element Element::zero(const GroupShape& g) {
  return Element(g, std::vector<u64>(g.rank(), 0));
}

Element Element::basis(const GroupShape& g, std::size_t i) {
  if (i >= g.rank()) throw std::invalid_argument("basis index out of range");
  std::vector<u64> c(g.rank(), 0);
  c[i] = 1;
  return Element(g, std::move(c));
}

bool Element::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](u64 c) { return c == 0; });
}

std::string Element::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

namespace {
void require_same_shape(const Element& x, const Element& y) {
  if (x.shape() != y.shape()) throw std::invalid_argument("elements belong to different groups");
}
}  // namespace

Element operator+(const Element& x, const Element& y) {
  require_same_shape(x, y);
  std::vector<u64> c(x.coords());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + y.coord(i)) % x.shape().modulus_at(i);
  return Element(x.shape(), std::move(c));
}

Element operator-(const Element& x) {
  std::vector<u64> c(x.coords());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = c[i] == 0 ? 0 : x.shape().modulus_at(i) - c[i];
  return Element(x.shape(), std::move(c));
}

Element operator-(const Element& x, const Element& y) { return x + (-y); }

Element scale(i64 m, const Element& x) {
  std::vector<u64> c(x.coords());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const u64 mod = x.shape().modulus_at(i);
    u64 mm = static_cast<u64>(((m % static_cast<i64>(mod)) + static_cast<i64>(mod))) % mod;
    c[i] = mulmod(mm, c[i], mod);
  }
  return Element(x.shape(), std::move(c));
}

ExtendedNat height(const Element& x) {
  if (x.is_zero()) return ExtendedNat::infinity();
  const u64 p = x.shape().p();
  ExtendedNat h = ExtendedNat::infinity();
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    if (x.coord(i) == 0) continue;
    ExtendedNat v{p_valuation(x.coord(i), p)};
    if (v < h) h = v;
  }
  return h;
}

u32 order_exponent(const Element& x) {
  const u64 p = x.shape().p();
  u32 k = 0;
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    if (x.coord(i) == 0) continue;
    const u32 v = static_cast<u32>(p_valuation(x.coord(i), p));
    k = std::max(k, x.shape().exponent_at(i) - v);
  }
  return k;
}

HeightSequence HeightSequence::of(const Element& x) {
  std::vector<ExtendedNat> h;
  h.reserve(x.shape().max_exponent() + 1);
  Element y = x;
  for (u32 n = 0; n <= x.shape().max_exponent(); ++n) {
    h.push_back(height(y));
    y = scale(static_cast<i64>(x.shape().p()), y);
  }
  return HeightSequence(std::move(h));
}

HeightSequence::HeightSequence(std::vector<ExtendedNat> entries) : h_(std::move(entries)) {
  for (std::size_t i = 0; i + 1 < h_.size(); ++i) {
    if (h_[i].is_infinite() && !h_[i + 1].is_infinite())
      throw std::invalid_argument("height sequence drops below infinity");
    if (!h_[i].is_infinite() && !h_[i + 1].is_infinite() && !(h_[i] < h_[i + 1]))
      throw std::invalid_argument("height sequence is not strictly increasing");
  }
}

bool HeightSequence::leq(const HeightSequence& o) const {
  if (h_.size() != o.h_.size())
    throw std::invalid_argument("height sequences of different groups are not comparable");
  for (std::size_t i = 0; i < h_.size(); ++i)
    if (!(h_[i] <= o.h_[i])) return false;
  return true;
}

std::string HeightSequence::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (i) s += ",";
    s += h_[i].str();
  }
  return s + ")";
}

u64 ulm_invariant(const GroupShape& g, u32 n) {
  u64 c = 0;
  for (u32 e : g.exponents())
    if (e == n + 1) ++c;
  return c;
}

std::vector<Element> ulm_factor_basis(const GroupShape& g, u32 n) {
  const u64 p = g.p();
  const u64 f = ulm_invariant(g, n);
  std::vector<Element> reps;
  if (f == 0) return reps;

  // Classes in U_n are read off from the coordinates with lambda[i] = n + 1:
  // class(t)_j = t[i_j] / p^n mod p. Candidates with any other coordinate
  // nonzero are lexicographically later twins of the same classes, so the
  // greedy lex-first scan only needs the box spanned by those coordinates.
  std::vector<std::size_t> cls;
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (g.exponent_at(i) == n + 1) cls.push_back(i);

  const u64 step = checked_pow(p, n);
  std::vector<std::vector<u64>> echelon;  // rows over F_p, reduced
  std::vector<u64> digits(cls.size(), 0);

  auto reduce = [&](std::vector<u64> v) {
    for (const auto& row : echelon) {
      std::size_t lead = 0;
      while (lead < row.size() && row[lead] == 0) ++lead;
      if (lead < row.size() && v[lead] != 0) {
        // row[lead] is normalized to 1.
        u64 c = v[lead];
        for (std::size_t j = lead; j < v.size(); ++j)
          v[j] = (v[j] + (p - c % p) * row[j]) % p;
      }
    }
    return v;
  };

  while (true) {
    // Skip the all-zero tuple implicitly via the reduction below.
    std::vector<u64> v = reduce(digits);
    bool nonzero = std::any_of(v.begin(), v.end(), [](u64 d) { return d != 0; });
    if (nonzero) {
      std::size_t lead = 0;
      while (v[lead] == 0) ++lead;
      // Normalize the leading entry to 1 (Fermat inverse; p is prime).
      u64 inv = 1, base = v[lead] % p;
      for (u64 e = p - 2; e; e >>= 1) {
        if (e & 1) inv = mulmod(inv, base, p);
        base = mulmod(base, base, p);
      }
      for (auto& d : v) d = mulmod(d, inv, p);
      echelon.push_back(v);
      std::vector<u64> c(g.rank(), 0);
      for (std::size_t j = 0; j < cls.size(); ++j) c[cls[j]] = digits[j] * step;
      reps.emplace_back(g, std::move(c));
      if (reps.size() == f) break;
    }
    // Lexicographic odometer over class digits.
    std::size_t i = cls.size();
    while (i > 0 && digits[i - 1] + 1 == p) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  if (reps.size() != f) throw PropertyError("ulm_factor_basis failed to reach full rank");
  return reps;
}

std::vector<Element> all_elements(const GroupShape& g, u64 max_order) {
  if (auto v = g.order().value(); !v || *v > max_order)
    throw BoundError("group order " + g.order().str() + " exceeds the enumeration bound");
  std::vector<Element> out;
  out.reserve(*g.order().value());
  std::vector<u64> c(g.rank(), 0);
  while (true) {
    out.emplace_back(g, c);
    std::size_t i = g.rank();
    while (i > 0 && c[i - 1] + 1 == g.modulus_at(i - 1)) c[--i] = 0;
    if (i == 0) break;
    ++c[i - 1];
  }
  return out;
}

}  // namespace pgrouplab
