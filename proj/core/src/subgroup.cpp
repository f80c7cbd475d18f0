#include "pgrouplab/subgroup.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "lattice.hpp"

namespace pgrouplab {
namespace {

void require_same_shape(const Subgroup& a, const Subgroup& b) {
  if (!(a.shape() == b.shape()))
    throw std::invalid_argument("subgroups belong to different groups");
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

Subgroup Subgroup::zero(const GroupShape& g) { return from_rows(g, {}); }

Subgroup Subgroup::full(const GroupShape& g) {
  std::vector<std::vector<u64>> rows;
  rows.reserve(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::vector<u64> row(g.rank(), 0);
    row[i] = 1;
    rows.push_back(std::move(row));
  }
  return from_rows(g, rows);
}

Subgroup Subgroup::span(const GroupShape& g, const std::vector<Element>& gens) {
  std::vector<std::vector<u64>> rows;
  rows.reserve(gens.size());
  for (const Element& e : gens) {
    if (!(e.shape() == g)) throw std::invalid_argument("generator belongs to a different group");
    rows.push_back(e.coords());
  }
  return from_rows(g, rows);
}

Subgroup Subgroup::from_rows(const GroupShape& g, const std::vector<std::vector<u64>>& rows) {
  return Subgroup(g, detail::hnf(g, rows));
}

Subgroup Subgroup::box(const GroupShape& g, const std::vector<u32>& component_exponents) {
  if (component_exponents.size() != g.rank())
    throw std::invalid_argument("component list has wrong length");
  std::vector<std::vector<u64>> rows;
  rows.reserve(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const u32 c = component_exponents[i];
    if (c > g.exponent_at(i))
      throw std::invalid_argument("component exponent exceeds coordinate exponent");
    std::vector<u64> row(g.rank(), 0);
    row[i] = checked_pow(g.p(), g.exponent_at(i) - c);
    rows.push_back(std::move(row));
  }
  return from_rows(g, rows);
}

std::vector<Element> Subgroup::generators() const {
  std::vector<Element> out;
  for (const auto& row : basis_) {
    Element e(shape_, row);
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

bool Subgroup::contains(const Element& x) const {
  if (!(x.shape() == shape_)) throw std::invalid_argument("element belongs to a different group");
  return detail::hnf_contains(basis_, x.coords());
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  require_same_shape(*this, other);
  for (const auto& row : basis_)
    if (!detail::hnf_contains(other.basis_, row)) return false;
  return true;
}

bool Subgroup::is_zero() const { return order_exponent() == 0; }

bool Subgroup::is_full() const { return order_exponent() == shape_.order_exponent(); }

u64 Subgroup::order_exponent() const { return detail::hnf_order_exponent(shape_, basis_); }

PPower Subgroup::order() const { return PPower{shape_.p(), order_exponent()}; }

std::vector<Element> Subgroup::elements(u64 max_order) const {
  const auto count = order().value();
  if (!count || *count > max_order)
    throw BoundError("subgroup too large to enumerate: " + order().str() + " elements");
  const std::size_t k = shape_.rank();
  std::vector<u64> range(k);
  for (std::size_t i = 0; i < k; ++i) range[i] = shape_.modulus_at(i) / basis_[i][i];

  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(*count));
  std::vector<u64> c(k, 0);
  while (true) {
    std::vector<u64> coords(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (c[i] == 0) continue;
      for (std::size_t j = i; j < k; ++j) {
        const u128 term = static_cast<u128>(c[i]) * basis_[i][j] % shape_.modulus_at(j);
        coords[j] = (coords[j] + static_cast<u64>(term)) % shape_.modulus_at(j);
      }
    }
    out.emplace_back(shape_, coords);
    std::size_t i = k;
    while (i > 0 && ++c[i - 1] == range[i - 1]) {
      c[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  std::sort(out.begin(), out.end());
  assert(out.size() == static_cast<std::size_t>(*count));
  assert(std::adjacent_find(out.begin(), out.end()) == out.end());
  return out;
}

std::string Subgroup::str() const { return rows_str(basis_); }

bool lex_less(const Subgroup& a, const Subgroup& b) {
  require_same_shape(a, b);
  return a.basis_rows() < b.basis_rows();
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_shape(a, b);
  std::vector<std::vector<u64>> rows = a.basis_rows();
  rows.insert(rows.end(), b.basis_rows().begin(), b.basis_rows().end());
  return Subgroup::from_rows(a.shape(), rows);
}

Subgroup meet(const Subgroup& a, const Subgroup& b) {
  require_same_shape(a, b);
  const GroupShape& g = a.shape();
  const std::size_t k = g.rank();
  const u32 E = g.max_exponent();
  if (k == 0 || E == 0) return Subgroup::zero(g);

  std::vector<detail::Row> embedded;
  embedded.reserve(2 * k);
  for (const auto& row : a.basis_rows()) embedded.push_back(detail::embed_row(g, row));
  for (const auto& row : b.basis_rows()) embedded.push_back(detail::embed_row(g, row));

  // Row-vector kernel of the stacked matrix, via its transpose.
  std::vector<detail::Row> nt(k, detail::Row(2 * k));
  for (std::size_t i = 0; i < 2 * k; ++i)
    for (std::size_t j = 0; j < k; ++j) nt[j][i] = embedded[i][j];
  const auto zs = detail::kernel_mod_q(nt, 2 * k, g.p(), E);

  const u64 q = checked_pow(g.p(), E);
  std::vector<detail::Row> rows;
  rows.reserve(zs.size());
  for (const auto& z : zs) {
    detail::Row w(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (z[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        const u128 term = static_cast<u128>(z[i]) * embedded[i][j] % q;
        w[j] = (w[j] + static_cast<u64>(term)) % q;
      }
    }
    rows.push_back(detail::deembed_row(g, w));
  }
  return Subgroup::from_rows(g, rows);
}

u64 index_exponent(const Subgroup& y, const Subgroup& x) {
  if (!x.is_subset_of(y)) throw std::invalid_argument("index requires a contained subgroup");
  return y.order_exponent() - x.order_exponent();
}

PPower index_of(const Subgroup& y, const Subgroup& x) {
  return PPower{y.shape().p(), index_exponent(y, x)};
}

GroupShape quotient_shape(const Subgroup& y, const Subgroup& x) {
  const u64 expected = index_exponent(y, x);  // also checks containment
  const GroupShape& g = y.shape();
  const std::size_t k = g.rank();
  const u32 E = g.max_exponent();
  if (k == 0 || E == 0 || expected == 0) return GroupShape(g.p(), {});

  // Coefficient vectors w with w * basis(y) falling inside x, as the kernel
  // of [basis(y); -basis(x)] acting on row vectors.
  std::vector<detail::Row> embedded;
  embedded.reserve(2 * k);
  const u64 q = checked_pow(g.p(), E);
  for (const auto& row : y.basis_rows()) embedded.push_back(detail::embed_row(g, row));
  for (const auto& row : x.basis_rows()) {
    detail::Row r = detail::embed_row(g, row);
    for (u64& v : r) v = (q - v % q) % q;
    embedded.push_back(std::move(r));
  }
  std::vector<detail::Row> nt(k, detail::Row(2 * k));
  for (std::size_t i = 0; i < 2 * k; ++i)
    for (std::size_t j = 0; j < k; ++j) nt[j][i] = embedded[i][j];
  const auto zs = detail::kernel_mod_q(nt, 2 * k, g.p(), E);

  std::vector<detail::Row> relation;
  relation.reserve(zs.size());
  for (const auto& z : zs) relation.emplace_back(z.begin(), z.begin() + static_cast<long>(k));

  // (Z_{p^E})^k modulo the relation rowspan decomposes along the diagonal.
  const auto s = detail::smith_mod_q(relation, k, g.p(), E);
  std::vector<u32> type;
  for (const u32 v : s.diag)
    if (v > 0) type.push_back(v);
  for (std::size_t i = s.diag.size(); i < k; ++i) type.push_back(E);
  std::sort(type.begin(), type.end());

  u64 total = 0;
  for (const u32 v : type) total += v;
  if (total != expected) throw PropertyError("quotient decomposition does not match the index");
  return GroupShape(g.p(), type);
}

std::vector<u32> quotient_type(const Subgroup& y, const Subgroup& x) {
  return quotient_shape(y, x).exponents();
}

std::pair<PPower, PPower> commensurability_defect(const Subgroup& x, const Subgroup& y) {
  const Subgroup m = meet(x, y);
  return {index_of(x, m), index_of(y, m)};
}

std::string AlphaSequence::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << entries_[i].str();
  }
  out << ')';
  return out.str();
}

Subgroup g_alpha(const GroupShape& g, const AlphaSequence& a) {
  const std::size_t k = g.rank();
  std::vector<std::vector<u64>> rows;
  rows.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const u64 lam = g.exponent_at(i);
    u64 need = 0;  // required valuation of coordinate i
    for (std::size_t n = 0; n < a.size(); ++n) {
      const ExtendedNat& m = a.entries()[n];
      const u64 cap = m.is_infinite() ? lam : std::min<u64>(m.finite_value(), lam);
      if (cap > n) need = std::max(need, cap - n);
    }
    std::vector<u64> row(k, 0);
    row[i] = checked_pow(g.p(), static_cast<u32>(need));
    rows.push_back(std::move(row));
  }
  return Subgroup::from_rows(g, rows);
}

AlphaSequence canonical_alpha(const Subgroup& x) {
  const GroupShape& g = x.shape();
  std::vector<ExtendedNat> entries(g.max_exponent() + 1, ExtendedNat::infinity());
  for (const auto& row : x.basis_rows()) {
    Element y(g, row);
    for (std::size_t n = 0; n < entries.size(); ++n) {
      entries[n] = std::min(entries[n], height(y));
      y = scale(static_cast<i64>(g.p()), y);
    }
  }
  return AlphaSequence(entries);
}

AlphaSequence normalize_alpha(const GroupShape& g, const AlphaSequence& a) {
  return canonical_alpha(g_alpha(g, a));
}

Subgroup power_subgroup(const GroupShape& g, u32 k) {
  std::vector<u32> comps(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const u32 lam = g.exponent_at(i);
    comps[i] = lam > k ? lam - k : 0;
  }
  return Subgroup::box(g, comps);
}

Subgroup socle_subgroup(const GroupShape& g, u32 k) {
  std::vector<u32> comps(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) comps[i] = std::min(g.exponent_at(i), k);
  return Subgroup::box(g, comps);
}

namespace {

struct SubgroupSearch {
  const GroupShape& g;
  u64 max_count;
  u64 candidates = 0;
  std::vector<std::vector<u64>> h;
  std::vector<Subgroup> out;

  void run() {
    const std::size_t k = g.rank();
    h.assign(k, std::vector<u64>(k, 0));
    column(0);
  }

  void column(std::size_t j) {
    const std::size_t k = g.rank();
    if (j == k) {
      finish();
      return;
    }
    for (u32 e = 0; e <= g.exponent_at(j); ++e) {
      const u64 pivot = checked_pow(g.p(), e);
      h[j][j] = pivot;
      // Odometer over the entries above the pivot, each in [0, pivot).
      for (std::size_t i = 0; i < j; ++i) h[i][j] = 0;
      while (true) {
        column(j + 1);
        std::size_t i = j;
        bool carried = true;
        while (i > 0) {
          --i;
          if (++h[i][j] < pivot) {
            carried = false;
            break;
          }
          h[i][j] = 0;
        }
        if (j == 0 || carried) break;
      }
    }
  }

  void finish() {
    if (++candidates > limits::kBudget)
      throw BoundError("subgroup enumeration exceeds the search budget");
    const std::size_t k = g.rank();
    // The candidate matrix spans a valid coordinate lattice iff every
    // relation vector p^{lambda_j} e_j reduces to zero against it.
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<u64> rel(k, 0);
      rel[j] = g.modulus_at(j);
      if (!detail::hnf_contains(h, rel)) return;
    }
    if (out.size() >= max_count) throw BoundError("too many subgroups for the requested bound");
    out.push_back(Subgroup::from_rows(g, h));
    assert(out.back().basis_rows() == h);
  }
};

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const GroupShape& g, u64 max_count) {
  SubgroupSearch search{g, max_count};
  search.run();
  std::sort(search.out.begin(), search.out.end(),
            [](const Subgroup& a, const Subgroup& b) { return lex_less(a, b); });
  assert(std::adjacent_find(search.out.begin(), search.out.end()) == search.out.end());
  return search.out;
}

}  // namespace pgrouplab
