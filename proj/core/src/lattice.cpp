#include "lattice.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <utility>

#include "pgrouplab/common.hpp"

namespace pgrouplab::detail {
namespace {

struct ExtGcd {
  i64 g = 0;
  i64 x = 0;
  i64 y = 0;
};

// g = gcd(a, b) >= 0 with a*x + b*y = g; coefficients stay below max(|a|,|b|).
ExtGcd extgcd(i64 a, i64 b) {
  if (b == 0) return {a >= 0 ? a : -a, a >= 0 ? i64{1} : i64{-1}, 0};
  ExtGcd r = extgcd(b, a % b);
  return {r.g, r.y, r.x - (a / b) * r.y};
}

u64 mod_u(i128 v, u64 m) {
  i128 r = v % static_cast<i128>(m);
  if (r < 0) r += static_cast<i128>(m);
  return static_cast<u64>(r);
}

u32 p_valuation_capped(u64 x, u64 p, u32 cap) {
  if (x == 0) return cap;
  u32 v = 0;
  while (v < cap && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// Replace (cur, row) by (combined, reduced) so that combined[c] = gcd of the
// two column-c entries and reduced[c] = 0; both stay in the spanned lattice
// (mod-modulus reduction only ever adds relation vectors).
void fold_rows(Row& cur, Row& row, std::size_t c, const std::vector<u64>& mods) {
  const i64 a = static_cast<i64>(cur[c]);
  const i64 b = static_cast<i64>(row[c]);
  const ExtGcd e = extgcd(a, b);
  const i64 ka = a / e.g;
  const i64 kb = b / e.g;
  for (std::size_t j = 0; j < cur.size(); ++j) {
    const i128 cj = static_cast<i128>(cur[j]);
    const i128 rj = static_cast<i128>(row[j]);
    const u64 combined = mod_u(static_cast<i128>(e.x) * cj + static_cast<i128>(e.y) * rj, mods[j]);
    const u64 reduced = mod_u(static_cast<i128>(ka) * rj - static_cast<i128>(kb) * cj, mods[j]);
    cur[j] = combined;
    row[j] = reduced;
  }
  assert(cur[c] == static_cast<u64>(e.g));
  assert(row[c] == 0);
}

bool is_zero_row(const Row& r) {
  for (u64 v : r)
    if (v != 0) return false;
  return true;
}

}  // namespace

std::vector<Row> hnf(const GroupShape& g, const std::vector<Row>& gens) {
  const std::size_t k = g.rank();
  const auto& mods = g.moduli();
  std::vector<Row> active;
  active.reserve(gens.size());
  for (const Row& src : gens) {
    if (src.size() != k) throw std::invalid_argument("generator row has wrong length");
    Row r(k);
    bool nonzero = false;
    for (std::size_t j = 0; j < k; ++j) {
      r[j] = src[j] % mods[j];
      nonzero |= r[j] != 0;
    }
    if (nonzero) active.push_back(std::move(r));
  }

  std::vector<Row> basis(k);
  for (std::size_t c = 0; c < k; ++c) {
    // Fold all rows with a nonzero column-c entry into a single carrier.
    std::optional<Row> cur;
    std::vector<Row> rest;
    rest.reserve(active.size());
    for (Row& row : active) {
      if (row[c] == 0) {
        if (!is_zero_row(row)) rest.push_back(std::move(row));
        continue;
      }
      if (!cur) {
        cur = std::move(row);
        continue;
      }
      fold_rows(*cur, row, c, mods);
      if (!is_zero_row(row)) rest.push_back(std::move(row));
    }

    if (!cur) {
      // Column is covered by the relation row alone.
      Row pivot(k, 0);
      pivot[c] = mods[c];
      basis[c] = std::move(pivot);
      active = std::move(rest);
      continue;
    }

    // Fold in the implicit relation row mods[c] * e_c; its only effect beyond
    // the gcd is a leftover multiple of cur with column c annihilated.
    const ExtGcd e = extgcd(static_cast<i64>((*cur)[c]), static_cast<i64>(mods[c]));
    const i64 lift = static_cast<i64>(mods[c]) / e.g;
    Row pivot(k);
    Row leftover(k);
    for (std::size_t j = 0; j < k; ++j) {
      const i128 cj = static_cast<i128>((*cur)[j]);
      pivot[j] = mod_u(static_cast<i128>(e.x) * cj, mods[j]);
      leftover[j] = mod_u(static_cast<i128>(lift) * cj, mods[j]);
    }
    pivot[c] = static_cast<u64>(e.g);
    assert(leftover[c] == 0);
    if (!is_zero_row(leftover)) rest.push_back(std::move(leftover));
    basis[c] = std::move(pivot);
    active = std::move(rest);
  }
  for (const Row& row : active) {
    (void)row;
    assert(is_zero_row(row));
  }

  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const u64 pivot = basis[j][j];
      const u64 qv = basis[i][j] / pivot;
      if (qv == 0) continue;
      for (std::size_t l = j; l < k; ++l) {
        basis[i][l] = mod_u(static_cast<i128>(basis[i][l]) -
                                static_cast<i128>(qv) * static_cast<i128>(basis[j][l]),
                            mods[l]);
      }
    }
  }
  return basis;
}

bool hnf_contains(const std::vector<Row>& h, const Row& vec) {
  const std::size_t k = h.size();
  if (vec.size() != k) throw std::invalid_argument("vector has wrong length");
  std::vector<i128> r(vec.begin(), vec.end());
  for (std::size_t c = 0; c < k; ++c) {
    const i128 pivot = static_cast<i128>(h[c][c]);
    i128 rc = r[c] % pivot;
    if (rc < 0) rc += pivot;
    if (rc != 0) return false;
    const i128 qv = (r[c] - rc) / pivot;
    if (qv == 0) continue;
    for (std::size_t l = c; l < k; ++l) r[l] -= qv * static_cast<i128>(h[c][l]);
  }
  for (std::size_t c = 0; c < k; ++c) {
    (void)c;
    assert(r[c] == 0);
  }
  return true;
}

u64 hnf_order_exponent(const GroupShape& g, const std::vector<Row>& h) {
  u64 total = 0;
  const auto& lam = g.exponents();
  for (std::size_t j = 0; j < h.size(); ++j) {
    const u32 v = p_valuation_capped(h[j][j], g.p(), lam[j]);
    total += lam[j] - v;
  }
  return total;
}

SmithQ smith_mod_q(std::vector<Row> a, std::size_t ncols, u64 p, u32 E, const Row* b) {
  const std::size_t m = a.size();
  const u64 q = E == 0 ? u64{1} : checked_pow(p, E);
  SmithQ out;
  out.p = p;
  out.E = E;
  out.ut.assign(ncols, Row(ncols, 0));
  for (std::size_t i = 0; i < ncols; ++i) out.ut[i][i] = 1 % q;
  for (Row& row : a) {
    if (row.size() != ncols) throw std::invalid_argument("matrix row has wrong length");
    for (u64& v : row) v %= q;
  }
  if (b) {
    if (b->size() != m) throw std::invalid_argument("rhs has wrong length");
    out.rhs = *b;
    for (u64& v : out.rhs) v %= q;
  }

  const auto val = [&](u64 x) { return p_valuation_capped(x, p, E); };
  std::size_t t = 0;
  while (t < m && t < ncols) {
    // Minimum-valuation pivot over the trailing submatrix.
    u32 best = E;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < ncols; ++j) {
        const u32 v = val(a[i][j]);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    }
    if (best >= E) break;
    std::swap(a[t], a[bi]);
    if (b) std::swap(out.rhs[t], out.rhs[bi]);
    if (bj != t) {
      for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][bj]);
      std::swap(out.ut[t], out.ut[bj]);
    }

    const u64 pv = checked_pow(p, best);
    const u64 unit = a[t][t] / pv;
    const ExtGcd e = extgcd(static_cast<i64>(unit), static_cast<i64>(q));
    assert(e.g == 1);
    const u64 inv = mod_u(e.x, q);
    for (std::size_t j = t; j < ncols; ++j)
      a[t][j] = mod_u(static_cast<i128>(a[t][j]) * static_cast<i128>(inv), q);
    if (b) out.rhs[t] = mod_u(static_cast<i128>(out.rhs[t]) * static_cast<i128>(inv), q);
    assert(a[t][t] == pv);

    for (std::size_t i = t + 1; i < m; ++i) {
      if (a[i][t] == 0) continue;
      const u64 f = a[i][t] / pv;
      for (std::size_t j = t; j < ncols; ++j) {
        a[i][j] = mod_u(static_cast<i128>(a[i][j]) -
                            static_cast<i128>(f) * static_cast<i128>(a[t][j]),
                        q);
      }
      if (b) {
        out.rhs[i] = mod_u(static_cast<i128>(out.rhs[i]) -
                               static_cast<i128>(f) * static_cast<i128>(out.rhs[t]),
                           q);
      }
      assert(a[i][t] == 0);
    }
    for (std::size_t j = t + 1; j < ncols; ++j) {
      if (a[t][j] == 0) continue;
      const u64 f = a[t][j] / pv;
      for (std::size_t l = 0; l < ncols; ++l) {
        out.ut[j][l] = mod_u(static_cast<i128>(out.ut[j][l]) -
                                 static_cast<i128>(f) * static_cast<i128>(out.ut[t][l]),
                             q);
      }
      a[t][j] = 0;
    }
    out.diag.push_back(best);
    ++t;
  }
  return out;
}

std::optional<Row> solve_mod_q(const std::vector<Row>& a, std::size_t ncols, const Row& b, u64 p,
                               u32 E) {
  const u64 q = E == 0 ? u64{1} : checked_pow(p, E);
  const SmithQ s = smith_mod_q(a, ncols, p, E, &b);
  const std::size_t t = s.diag.size();
  for (std::size_t i = t; i < a.size(); ++i)
    if (s.rhs[i] != 0) return std::nullopt;
  Row xprime(ncols, 0);
  for (std::size_t i = 0; i < t; ++i) {
    const u64 pv = checked_pow(p, s.diag[i]);
    if (s.rhs[i] % pv != 0) return std::nullopt;
    xprime[i] = (s.rhs[i] / pv) % q;
  }
  Row x(ncols, 0);
  for (std::size_t i = 0; i < ncols; ++i) {
    if (xprime[i] == 0) continue;
    for (std::size_t j = 0; j < ncols; ++j) {
      x[j] = mod_u(static_cast<i128>(x[j]) +
                       static_cast<i128>(xprime[i]) * static_cast<i128>(s.ut[i][j]),
                   q);
    }
  }
  return x;
}

std::vector<Row> kernel_mod_q(const std::vector<Row>& a, std::size_t ncols, u64 p, u32 E) {
  const u64 q = E == 0 ? u64{1} : checked_pow(p, E);
  const SmithQ s = smith_mod_q(a, ncols, p, E);
  const std::size_t t = s.diag.size();
  std::vector<Row> gens;
  for (std::size_t i = 0; i < t; ++i) {
    if (s.diag[i] == 0) continue;
    const u64 scale = checked_pow(p, E - s.diag[i]);
    Row g(ncols);
    for (std::size_t j = 0; j < ncols; ++j)
      g[j] = mod_u(static_cast<i128>(scale) * static_cast<i128>(s.ut[i][j]), q);
    if (!is_zero_row(g)) gens.push_back(std::move(g));
  }
  for (std::size_t i = t; i < ncols; ++i) gens.push_back(s.ut[i]);
  return gens;
}

Row embed_row(const GroupShape& g, const Row& coords) {
  if (coords.size() != g.rank()) throw std::invalid_argument("vector has wrong length");
  const u32 E = g.max_exponent();
  Row out(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const u64 scale = checked_pow(g.p(), E - g.exponent_at(i));
    out[i] = coords[i] % g.modulus_at(i) * scale;
  }
  return out;
}

Row deembed_row(const GroupShape& g, const Row& scaled) {
  if (scaled.size() != g.rank()) throw std::invalid_argument("vector has wrong length");
  const u32 E = g.max_exponent();
  Row out(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const u64 scale = checked_pow(g.p(), E - g.exponent_at(i));
    if (scaled[i] % scale != 0)
      throw PropertyError("vector is outside the image of the height embedding");
    out[i] = scaled[i] / scale % g.modulus_at(i);
  }
  return out;
}

}  // namespace pgrouplab::detail
