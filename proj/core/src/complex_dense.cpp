#include "tensorcomm/complex_dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tcm {

namespace {

void require_positive_dims(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexDense: dimensions must be >= 1");
  }
}

// rows*cols with overflow detection, used before any allocation happens
std::size_t checked_extent_product(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    throw std::length_error("ComplexDense: extent product overflows the index range");
  }
  return a * b;
}

void require_same_shape(const ComplexDense& a, const ComplexDense& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch (" +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
  }
}

}  // namespace

ComplexDense::ComplexDense(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  require_positive_dims(rows, cols);
  entries_.resize(checked_extent_product(rows, cols));
}

ComplexDense::ComplexDense(std::size_t rows, std::size_t cols, std::vector<ComplexScalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_positive_dims(rows, cols);
  if (entries_.size() != checked_extent_product(rows, cols)) {
    throw std::invalid_argument("ComplexDense: entry count does not match rows*cols");
  }
  for (const auto& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("ComplexDense: entries must be finite");
    }
  }
}

ComplexDense::ComplexDense(std::initializer_list<std::initializer_list<ComplexScalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  require_positive_dims(rows_, cols_);
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("ComplexDense: ragged initializer rows");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexDense& ComplexDense::operator+=(const ComplexDense& rhs) {
  require_same_shape(*this, rhs, "operator+=");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

ComplexDense& ComplexDense::operator-=(const ComplexDense& rhs) {
  require_same_shape(*this, rhs, "operator-=");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

ComplexDense& ComplexDense::operator*=(ComplexScalar factor) noexcept {
  for (auto& z : entries_) z *= factor;
  return *this;
}

ComplexDense zeros(std::size_t rows, std::size_t cols) { return ComplexDense(rows, cols); }

ComplexDense identity(std::size_t n) {
  ComplexDense m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexDense elementary(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  if (i < 1 || i > rows || j < 1 || j > cols) {
    throw std::out_of_range("elementary: index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  ComplexDense m(rows, cols);
  m(i - 1, j - 1) = 1.0;
  return m;
}

ComplexDense kron(const ComplexDense& a, const ComplexDense& b) {
  const std::size_t rows = checked_extent_product(a.rows(), b.rows());
  const std::size_t cols = checked_extent_product(a.cols(), b.cols());
  checked_extent_product(rows, cols);
  ComplexDense out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const ComplexScalar aij = a(i, j);
      if (aij == ComplexScalar{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexDense matmul(const ComplexDense& a, const ComplexDense& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: inner dimensions disagree (" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + ")");
  }
  ComplexDense out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const ComplexScalar aik = a(i, k);
      if (aik == ComplexScalar{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

std::vector<ComplexScalar> matvec(const ComplexDense& m, std::span<const ComplexScalar> v) {
  if (v.size() != m.cols()) {
    throw std::invalid_argument("matvec: vector length does not match column count");
  }
  std::vector<ComplexScalar> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ComplexScalar acc{};
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

ComplexDense dagger(const ComplexDense& a) {
  ComplexDense out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = std::conj(a(i, j));
    }
  }
  return out;
}

ComplexDense transpose(const ComplexDense& a) {
  ComplexDense out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = a(i, j);
    }
  }
  return out;
}

ComplexScalar trace(const ComplexDense& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("trace: matrix must be square");
  }
  ComplexScalar acc{};
  for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, i);
  return acc;
}

double max_abs(const ComplexDense& a) {
  double best = 0.0;
  for (const auto& z : a.entries()) best = std::max(best, std::abs(z));
  return best;
}

double max_abs_diff(const ComplexDense& a, const ComplexDense& b) {
  require_same_shape(a, b, "max_abs_diff");
  double best = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    best = std::max(best, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return best;
}

Comparison approx_eq(const ComplexDense& a, const ComplexDense& b, double tol) {
  const double diff = max_abs_diff(a, b);
  return {diff <= tol, diff};
}

}  // namespace tcm
