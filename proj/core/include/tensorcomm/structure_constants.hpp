#pragma once

#include <array>
#include <map>
#include <vector>

#include "tensorcomm/complex_dense.hpp"
#include "tensorcomm/gellmann.hpp"

namespace tcm {

/// Antisymmetric coefficients f[a,b,c] of the expansion
///   L_a L_b^+ - L_b L_a^+ = i * sum_c f[a,b,c] * S_c
/// over the square basis S = square_gellmann(n), extracted by trace
/// projection from the n x p system. Indices are 1-based with
/// a, b in [1, np-1] and c in [1, n^2-1]. Entries are stored sparse for
/// a < b only; antisymmetry in the first two slots is applied on lookup.
struct StructureConstants {
  int n = 0;
  int p = 0;
  double cutoff = 1e-9;
  std::map<std::array<int, 3>, double> entries;

  /// f[a,b,c], resolving a > b by sign flip; 0 for a == b or entries below
  /// the sparsity cutoff. Out-of-range indices throw.
  double get(int a, int b, int c) const;
};

/// Gram matrix G[a,b] = Tr(L_a^+ L_b) of a system's generators.
ComplexDense gram(const GellMannSystem& system);

struct TracelessDecomposition {
  std::vector<double> coeffs;
  double residual = 0.0;
};

/// Expand a square matrix X as (Tr(X)/n) * I + sum_c coeffs[c] * S_c with
/// real coefficients coeffs[c] = Re Tr(X S_c) / 2. The residual is the
/// largest entry modulus of the difference between X and the reconstruction;
/// it vanishes exactly when X is hermitian (imaginary coefficient parts are
/// folded into the residual otherwise).
TracelessDecomposition decompose_traceless_hermitian(const ComplexDense& x);

/// Extract all structure constants of the n x p system (requires p >= n >= 2).
/// For every pair a < b the difference L_a L_b^+ - L_b L_a^+ is projected
/// onto the square basis; tol is both the sparsity cutoff for stored values
/// and the gate on the reconstruction residual (exceeding it throws, since
/// the expansion is exact for these inputs).
StructureConstants structure_constants(int n, int p, double tol = 1e-9);

}  // namespace tcm
