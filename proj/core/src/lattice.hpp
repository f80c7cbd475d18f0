#ifndef PGROUPLAB_SRC_LATTICE_HPP
#define PGROUPLAB_SRC_LATTICE_HPP

#include <optional>
#include <vector>

#include "pgrouplab/group.hpp"

// Exact linear algebra for subgroup calculus. Two engines:
//
//  * hnf: canonical bases of integer lattices L with diag(p^lambda) <= L <= Z^k.
//    Rows generate; the relation lattice is handled implicitly, which keeps
//    every entry in column j inside [0, p^lambda[j]) during elimination, so
//    intermediates never outgrow 64 bits.
//
//  * smith_mod_q / solve / kernel: diagonalization over Z_{p^E}. Z_{p^E} is
//    local, so pivoting on a minimum-valuation entry always eliminates the
//    rest of its row and column.
namespace pgrouplab::detail {

using Row = std::vector<u64>;

/// Canonical basis of span(gens) + diag(p^lambda): k x k, upper triangular,
/// pivots are p-powers dividing p^lambda[j], entries above a pivot reduced
/// modulo it. Unique per lattice; subgroup equality is row-matrix equality.
std::vector<Row> hnf(const GroupShape& g, const std::vector<Row>& gens);

/// Membership of a coordinate vector in the lattice spanned by HNF rows.
bool hnf_contains(const std::vector<Row>& h, const Row& vec);

/// log_p of the subgroup order: sum over columns of lambda[j] - v_p(pivot_j).
u64 hnf_order_exponent(const GroupShape& g, const std::vector<Row>& h);

struct SmithQ {
  u64 p = 2;
  u32 E = 0;
  /// Valuations of the diagonal pivots p^{v_i}, one per eliminated index.
  std::vector<u32> diag;
  /// Rows of ut are the columns of the right transform U (x = U x').
  std::vector<Row> ut;
  /// Right-hand side carried through the row operations, if provided.
  Row rhs;
};

/// Diagonalize a (m x n, entries mod p^E) as L a U = diag(p^{v_i}).
/// Only the right transform and the transformed rhs are reported.
SmithQ smith_mod_q(std::vector<Row> a, std::size_t ncols, u64 p, u32 E, const Row* b = nullptr);

/// One solution x of a x = b over Z_{p^E} (column-vector convention).
std::optional<Row> solve_mod_q(const std::vector<Row>& a, std::size_t ncols, const Row& b, u64 p,
                               u32 E);

/// Generators of {x in (Z_{p^E})^n : a x = 0} as a Z_{p^E}-module.
std::vector<Row> kernel_mod_q(const std::vector<Row>& a, std::size_t ncols, u64 p, u32 E);

/// Scale coordinates into the common-exponent module (Z_{p^E})^k,
/// x_i -> x_i * p^{E - lambda[i]} with E = max exponent.
Row embed_row(const GroupShape& g, const Row& coords);

/// Inverse of embed_row; throws PropertyError if the input is not in the
/// image of the embedding.
Row deembed_row(const GroupShape& g, const Row& scaled);

}  // namespace pgrouplab::detail

#endif
