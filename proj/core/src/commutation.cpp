#include "tensorcomm/commutation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tensorcomm/gellmann.hpp"

namespace tcm {

namespace {

void require_domain(int n, int p) {
  if (n < 2 || p < 2) {
    throw std::domain_error("commutation: both dimensions must be >= 2");
  }
}

}  // namespace

ComplexDense PermutationSpec::to_dense() const {
  const std::size_t dim = target_of.size();
  ComplexDense out(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    out(target_of[col], col) = 1.0;
  }
  return out;
}

bool PermutationSpec::is_bijection() const {
  std::vector<bool> seen(target_of.size(), false);
  for (const std::size_t row : target_of) {
    if (row >= target_of.size() || seen[row]) return false;
    seen[row] = true;
  }
  return true;
}

EntryPosition tcm_index(int n, int p, int i, int j) {
  require_domain(n, p);
  if (i < 0 || i >= n || j < 0 || j >= p) {
    throw std::out_of_range("tcm_index: (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside [0," + std::to_string(n) + ")x[0," + std::to_string(p) +
                            ")");
  }
  return {static_cast<std::size_t>(j) * n + i, static_cast<std::size_t>(i) * p + j};
}

PermutationSpec tcm_from_index_map(int n, int p) {
  require_domain(n, p);
  PermutationSpec spec{n, p, std::vector<std::size_t>(static_cast<std::size_t>(n) * p)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < p; ++j) {
      const auto pos = tcm_index(n, p, i, j);
      spec.target_of[pos.col] = pos.row;
    }
  }
  return spec;
}

PermutationSpec tcm_by_rule(int n, int p) {
  require_domain(n, p);
  const std::size_t dim = static_cast<std::size_t>(n) * p;
  PermutationSpec spec{n, p, std::vector<std::size_t>(dim)};
  // literal walk, 1-based counters
  std::size_t start_row = 1;  // first row of the current pass
  std::size_t row = 1;
  for (std::size_t col = 1; col <= dim; ++col) {
    spec.target_of[col - 1] = row - 1;
    if (dim - row >= static_cast<std::size_t>(n)) {
      row += n;  // full descent available
    } else {
      ++start_row;  // fewer than n rows left: next pass begins one row lower
      row = start_row;
    }
  }
  return spec;
}

ComplexDense tcm_by_elementary(int n, int p) {
  require_domain(n, p);
  const auto un = static_cast<std::size_t>(n);
  const auto up = static_cast<std::size_t>(p);
  ComplexDense out(un * up, un * up);
  for (std::size_t i = 1; i <= up; ++i) {
    for (std::size_t j = 1; j <= un; ++j) {
      out += kron(elementary(up, un, i, j), elementary(un, up, j, i));
    }
  }
  return out;
}

ComplexDense tcm_by_gellmann(int n, int p) {
  require_domain(n, p);
  const GellMannSystem system = rect_gellmann(n, p);
  ComplexDense out = (1.0 / std::min(n, p)) *
                     kron(dagger(system.padded_identity), system.padded_identity);
  for (const auto& lam : system.lambdas) {
    out += 0.5 * kron(dagger(lam), lam);
  }
  return out;
}

std::pair<ComplexDense, ComplexDense> tail_identity(int n, int p) {
  require_domain(n, p);
  if (n > p) {
    throw std::domain_error("tail_identity: requires p >= n");
  }
  const auto un = static_cast<std::size_t>(n);
  const auto up = static_cast<std::size_t>(p);
  const std::size_t dim = un * up;

  const GellMannSystem system = rect_gellmann(n, p);
  ComplexDense lhs(dim, dim);
  for (std::size_t a = un * un; a <= un * up - 1; ++a) {
    const ComplexDense& lam = system.lambdas[a - 1];  // 1-based generator index
    lhs += 0.5 * kron(dagger(lam), lam);
  }

  ComplexDense rhs(dim, dim);
  for (std::size_t j = 1; j <= un; ++j) {
    for (std::size_t l = un + 1; l <= up; ++l) {
      const ComplexDense e = elementary(un, up, j, l);
      rhs += kron(transpose(e), e);
    }
  }
  return {std::move(lhs), std::move(rhs)};
}

std::vector<ComplexScalar> apply_swap(int n, int p, std::span<const ComplexScalar> v) {
  require_domain(n, p);
  const std::size_t dim = static_cast<std::size_t>(n) * p;
  if (v.size() != dim) {
    throw std::invalid_argument("apply_swap: vector length " + std::to_string(v.size()) +
                                " does not match np = " + std::to_string(dim));
  }
  std::vector<ComplexScalar> out(dim);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(p); ++j) {
      out[j * n + i] = v[i * p + j];
    }
  }
  return out;
}

}  // namespace tcm
