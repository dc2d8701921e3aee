#include "tensorcomm/structure_constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tcm {

double StructureConstants::get(int a, int b, int c) const {
  const int pair_max = n * p - 1;
  const int square_max = n * n - 1;
  if (a < 1 || a > pair_max || b < 1 || b > pair_max || c < 1 || c > square_max) {
    throw std::out_of_range("StructureConstants::get: index out of range");
  }
  if (a == b) return 0.0;
  if (a > b) return -get(b, a, c);
  const auto it = entries.find({a, b, c});
  return it == entries.end() ? 0.0 : it->second;
}

ComplexDense gram(const GellMannSystem& system) {
  const std::size_t count = system.lambdas.size();
  ComplexDense g(count, count);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      g(a, b) = trace(matmul(dagger(system.lambdas[a]), system.lambdas[b]));
    }
  }
  return g;
}

TracelessDecomposition decompose_traceless_hermitian(const ComplexDense& x) {
  if (!x.is_square()) {
    throw std::invalid_argument("decompose_traceless_hermitian: matrix must be square");
  }
  const auto n = x.rows();
  ComplexDense reconstruction = (trace(x) / static_cast<double>(n)) * identity(n);
  TracelessDecomposition result;
  if (n >= 2) {
    const auto basis = square_gellmann(static_cast<int>(n));
    result.coeffs.reserve(basis.size());
    for (const auto& generator : basis) {
      const double coeff = 0.5 * trace(matmul(x, generator)).real();
      result.coeffs.push_back(coeff);
      reconstruction += coeff * generator;
    }
  }
  result.residual = max_abs_diff(x, reconstruction);
  return result;
}

StructureConstants structure_constants(int n, int p, double tol) {
  if (n < 2 || p < n) {
    throw std::domain_error("structure_constants: requires p >= n >= 2");
  }
  const GellMannSystem system = rect_gellmann(n, p);
  StructureConstants f{n, p, tol, {}};
  const int count = n * p - 1;
  constexpr ComplexScalar minus_i{0.0, -1.0};
  for (int a = 1; a <= count; ++a) {
    for (int b = a + 1; b <= count; ++b) {
      const ComplexDense x = matmul(system.lambdas[a - 1], dagger(system.lambdas[b - 1])) -
                             matmul(system.lambdas[b - 1], dagger(system.lambdas[a - 1]));
      // x is anti-hermitian and traceless, so -i*x expands exactly
      const TracelessDecomposition dec = decompose_traceless_hermitian(minus_i * x);
      if (dec.residual > tol) {
        throw std::runtime_error("structure_constants: expansion residual " +
                                 std::to_string(dec.residual) + " exceeds tolerance at pair (" +
                                 std::to_string(a) + "," + std::to_string(b) + ")");
      }
      for (std::size_t c = 0; c < dec.coeffs.size(); ++c) {
        if (std::abs(dec.coeffs[c]) > tol) {
          f.entries[{a, b, static_cast<int>(c) + 1}] = dec.coeffs[c];
        }
      }
    }
  }
  return f;
}

}  // namespace tcm
