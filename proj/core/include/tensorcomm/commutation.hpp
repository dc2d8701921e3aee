#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tensorcomm/complex_dense.hpp"

namespace tcm {

/// Sparse form of the swap permutation U_{n(x)p}: target_of[c] = r means the
/// single 1 of column c sits in row r (0-based).
struct PermutationSpec {
  int n = 0;
  int p = 0;
  std::vector<std::size_t> target_of;

  /// Materialize as a dense 0/1 matrix.
  ComplexDense to_dense() const;

  /// True iff target_of is a permutation of {0, ..., np-1}.
  bool is_bijection() const;
};

struct EntryPosition {
  std::size_t row = 0;
  std::size_t col = 0;
};

/// Closed-form support of U_{n(x)p}: the basis vector e_i (x) e_j at column
/// i*p + j maps to row j*n + i. Indices i < n and j < p are 0-based.
EntryPosition tcm_index(int n, int p, int i, int j);

/// Closed-form permutation assembled from tcm_index over all (i, j).
PermutationSpec tcm_from_index_map(int n, int p);

/// Swap matrix built by the stepping construction: walk the columns left to
/// right, descending n rows per column starting at row 1; when fewer than n
/// rows remain below the current 1, start the next pass one row lower.
/// The walk ends by placing a 1 at (np, np). Kept as a literal simulation;
/// agreement with tcm_index is a tested property, not an assumption.
PermutationSpec tcm_by_rule(int n, int p);

/// Swap matrix as the sum over i <= p, j <= n of
/// kron(E_{pxn}^(i,j), E_{nxp}^(j,i)).
ComplexDense tcm_by_elementary(int n, int p);

/// Swap matrix from the rectangular Gell-Mann system:
/// (1/min(n,p)) * kron(I_{nxp}^+, I_{nxp}) + (1/2) * sum_a kron(L_a^+, L_a).
/// For n > p this uses the tall system directly.
ComplexDense tcm_by_gellmann(int n, int p);

/// Both sides of the extra-column identity, for p >= n:
/// (1/2) * sum over the extra-column generators of kron(L_a^+, L_a), and
/// sum_{j<=n, n<l<=p} kron(E_{nxp}^(j,l)t, E_{nxp}^(j,l)). Both are empty
/// (zero) for n = p.
std::pair<ComplexDense, ComplexDense> tail_identity(int n, int p);

/// Matrix-free application of U_{n(x)p}: out[j*n + i] = v[i*p + j]. Runs in
/// O(np) time and matches multiplication by the materialized matrix.
std::vector<ComplexScalar> apply_swap(int n, int p, std::span<const ComplexScalar> v);

}  // namespace tcm
