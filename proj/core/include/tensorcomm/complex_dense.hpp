#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tcm {

using ComplexScalar = std::complex<double>;

/// Dense rectangular complex matrix with row-major storage.
///
/// This is the single value type every construction in the library produces
/// and compares against. Entry access through operator() is 0-based;
/// elementary() below is 1-based to match the conventional E^(i,j) notation
/// for single-entry basis matrices.
///
/// Values are immutable in spirit: all operations return fresh matrices and
/// none keep shared state, so instances are safe to copy and use across
/// threads.
class ComplexDense {
 public:
  ComplexDense() = default;

  /// Zero matrix of the given shape. Dimensions must be >= 1.
  ComplexDense(std::size_t rows, std::size_t cols);

  /// Matrix from row-major entries; the entry count must equal rows*cols and
  /// every entry must be finite.
  ComplexDense(std::size_t rows, std::size_t cols, std::vector<ComplexScalar> entries);

  /// Row-wise literal, e.g. ComplexDense{{1, 0}, {0, -1}}. Rows must have
  /// equal lengths.
  ComplexDense(std::initializer_list<std::initializer_list<ComplexScalar>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  /// 0-based unchecked element access.
  ComplexScalar& operator()(std::size_t i, std::size_t j) noexcept {
    return entries_[i * cols_ + j];
  }
  const ComplexScalar& operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }

  std::span<const ComplexScalar> entries() const noexcept { return entries_; }

  ComplexDense& operator+=(const ComplexDense& rhs);
  ComplexDense& operator-=(const ComplexDense& rhs);
  ComplexDense& operator*=(ComplexScalar factor) noexcept;

  friend ComplexDense operator+(ComplexDense lhs, const ComplexDense& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ComplexDense operator-(ComplexDense lhs, const ComplexDense& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ComplexDense operator*(ComplexScalar factor, ComplexDense m) {
    m *= factor;
    return m;
  }
  friend ComplexDense operator*(ComplexDense m, ComplexScalar factor) {
    m *= factor;
    return m;
  }

  /// Exact (bitwise up to signed zero) comparison of shape and entries.
  friend bool operator==(const ComplexDense&, const ComplexDense&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ComplexScalar> entries_;
};

ComplexDense zeros(std::size_t rows, std::size_t cols);
ComplexDense identity(std::size_t n);

/// Single-entry matrix E^(i,j): all zeros except a 1 at row i, column j.
/// Indices are 1-based.
ComplexDense elementary(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);

/// Kronecker product: block (i,j) of the result is a(i,j) * b. Rejects
/// products whose extents overflow the platform index range.
ComplexDense kron(const ComplexDense& a, const ComplexDense& b);

/// Standard matrix product; a.cols() must equal b.rows().
ComplexDense matmul(const ComplexDense& a, const ComplexDense& b);

/// Matrix-vector product; v.size() must equal m.cols().
std::vector<ComplexScalar> matvec(const ComplexDense& m, std::span<const ComplexScalar> v);

/// Conjugate transpose.
ComplexDense dagger(const ComplexDense& a);

/// Transpose without conjugation.
ComplexDense transpose(const ComplexDense& a);

/// Sum of diagonal entries; requires a square input.
ComplexScalar trace(const ComplexDense& a);

/// Largest entry modulus.
double max_abs(const ComplexDense& a);

/// Largest entry modulus of (a - b); shapes must match.
double max_abs_diff(const ComplexDense& a, const ComplexDense& b);

struct Comparison {
  bool equal = false;
  double max_abs_diff = 0.0;
};

/// Entrywise comparison: equal iff the largest modulus of (a - b) is <= tol.
Comparison approx_eq(const ComplexDense& a, const ComplexDense& b, double tol);

}  // namespace tcm
