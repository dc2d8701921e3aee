#pragma once

#include <vector>

#include "tensorcomm/complex_dense.hpp"

namespace tcm {

/// Trace-orthogonal system spanning the n x p complex matrix space together
/// with the padded identity: np-1 generators, each of shape n x p, satisfying
/// Tr(L_a^+ L_b) = 2 delta_ab.
struct GellMannSystem {
  int n = 0;
  int p = 0;
  std::vector<ComplexDense> lambdas;
  ComplexDense padded_identity;
};

/// Generalized Gell-Mann basis of su(n): n^2 - 1 hermitian traceless n x n
/// matrices with Tr(L^2) = 2, pairwise trace-orthogonal.
///
/// Ordering: for k = 2..n emit, for each j < k, the symmetric pair
/// E^(j,k) + E^(k,j) followed by the antisymmetric pair -i E^(j,k) + i E^(k,j),
/// then the diagonal generator sqrt(2/((k-1)k)) * diag(1,..,1,-(k-1),0,..)
/// with k-1 leading ones. For n = 2 this yields exactly (sigma_1, sigma_2,
/// sigma_3).
std::vector<ComplexDense> square_gellmann(int n);

/// I_min(n,p) extended to shape n x p by zero columns (p > n) or zero rows
/// (n > p).
ComplexDense padded_identity(int n, int p);

/// Rectangular Gell-Mann system of shape n x p.
///
/// Wide case (p >= n): the first n^2 - 1 generators are square_gellmann(n)
/// padded with p - n zero columns; the remaining ones sweep the extra columns
/// in column-major order, sqrt(2) * E^(r, n+t) for t = 1..p-n, r = 1..n.
/// Tall case (n > p): the entrywise hermitian conjugates of the p x n system,
/// in the same order.
GellMannSystem rect_gellmann(int n, int p);

}  // namespace tcm
