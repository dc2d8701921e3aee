#include "tensorcomm/gellmann.hpp"

#include <cmath>
#include <stdexcept>

namespace tcm {

namespace {

void require_domain(int n, int p) {
  if (n < 2 || p < 2) {
    throw std::domain_error("gellmann: both dimensions must be >= 2");
  }
}

// embed m into the top-left corner of a rows x cols zero matrix
ComplexDense pad_to(const ComplexDense& m, std::size_t rows, std::size_t cols) {
  ComplexDense out(rows, cols);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = m(i, j);
    }
  }
  return out;
}

}  // namespace

std::vector<ComplexDense> square_gellmann(int n) {
  if (n < 2) {
    throw std::domain_error("square_gellmann: n must be >= 2");
  }
  const auto un = static_cast<std::size_t>(n);
  std::vector<ComplexDense> out;
  out.reserve(un * un - 1);
  constexpr ComplexScalar pos_i{0.0, 1.0};
  for (std::size_t k = 2; k <= un; ++k) {
    for (std::size_t j = 1; j < k; ++j) {
      out.push_back(elementary(un, un, j, k) + elementary(un, un, k, j));
      out.push_back(-pos_i * elementary(un, un, j, k) + pos_i * elementary(un, un, k, j));
    }
    // diagonal generator with k-1 leading ones and -(k-1) at position k
    const double scale = std::sqrt(2.0 / (static_cast<double>(k - 1) * static_cast<double>(k)));
    ComplexDense diag(un, un);
    for (std::size_t r = 0; r + 1 < k; ++r) diag(r, r) = scale;
    diag(k - 1, k - 1) = -scale * static_cast<double>(k - 1);
    out.push_back(std::move(diag));
  }
  return out;
}

ComplexDense padded_identity(int n, int p) {
  require_domain(n, p);
  const auto rows = static_cast<std::size_t>(n);
  const auto cols = static_cast<std::size_t>(p);
  ComplexDense out(rows, cols);
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) out(i, i) = 1.0;
  return out;
}

GellMannSystem rect_gellmann(int n, int p) {
  require_domain(n, p);
  if (n > p) {
    GellMannSystem wide = rect_gellmann(p, n);
    GellMannSystem tall{n, p, {}, dagger(wide.padded_identity)};
    tall.lambdas.reserve(wide.lambdas.size());
    for (const auto& lam : wide.lambdas) tall.lambdas.push_back(dagger(lam));
    return tall;
  }

  const auto rows = static_cast<std::size_t>(n);
  const auto cols = static_cast<std::size_t>(p);
  GellMannSystem system{n, p, {}, padded_identity(n, p)};
  system.lambdas.reserve(rows * cols - 1);
  for (const auto& sq : square_gellmann(n)) {
    system.lambdas.push_back(pad_to(sq, rows, cols));
  }
  const double root2 = std::sqrt(2.0);
  for (std::size_t t = 1; t <= cols - rows; ++t) {
    for (std::size_t r = 1; r <= rows; ++r) {
      system.lambdas.push_back(root2 * elementary(rows, cols, r, rows + t));
    }
  }
  return system;
}

}  // namespace tcm
