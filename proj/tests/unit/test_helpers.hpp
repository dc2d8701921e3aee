#pragma once

#include <random>
#include <vector>

#include "tensorcomm/complex_dense.hpp"

namespace test_util {

inline tcm::ComplexDense random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                       bool integer = false) {
  std::uniform_int_distribution<int> ints(-3, 3);
  std::uniform_real_distribution<double> reals(-1.0, 1.0);
  tcm::ComplexDense m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = integer ? tcm::ComplexScalar(ints(rng), ints(rng))
                        : tcm::ComplexScalar(reals(rng), reals(rng));
    }
  }
  return m;
}

inline std::vector<tcm::ComplexScalar> random_vector(std::mt19937& rng, std::size_t len) {
  std::uniform_real_distribution<double> reals(-1.0, 1.0);
  std::vector<tcm::ComplexScalar> v(len);
  for (auto& z : v) z = tcm::ComplexScalar(reals(rng), reals(rng));
  return v;
}

inline double vec_max_diff(std::span<const tcm::ComplexScalar> a,
                           std::span<const tcm::ComplexScalar> b) {
  double best = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) best = std::max(best, std::abs(a[k] - b[k]));
  return best;
}

// the three Pauli matrices
inline tcm::ComplexDense sigma1() { return {{0, 1}, {1, 0}}; }
inline tcm::ComplexDense sigma2() { return {{0, {0, -1}}, {{0, 1}, 0}}; }
inline tcm::ComplexDense sigma3() { return {{1, 0}, {0, -1}}; }

}  // namespace test_util
