#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qanyon {

using Complex = std::complex<double>;

struct Triplet {
  std::size_t row;
  std::size_t col;
  Complex value;
};

/// Square complex sparse matrix in compressed-row form.
///
/// Column indices are strictly increasing within each row and exact zeros are
/// never stored. Round-off is kept, so residuals show it. Values are immutable once built; every
/// arithmetic operation returns a new operator.
class SparseOperator {
 public:
  using Index = std::uint32_t;

  /// Zero operator of the given dimension.
  explicit SparseOperator(std::size_t dimension = 1);

  static SparseOperator identity(std::size_t dimension);
  static SparseOperator diagonal(std::span<const Complex> entries);
  /// Duplicate (row, col) pairs are summed.
  static SparseOperator from_triplets(std::size_t dimension, std::vector<Triplet> triplets);
  /// Takes ownership of already-canonical CSR arrays (sorted, no duplicates);
  /// small entries are still dropped.
  static SparseOperator from_csr(std::size_t dimension, std::vector<std::size_t> row_ptr,
                                 std::vector<Index> cols, std::vector<Complex> values);

  std::size_t dimension() const { return dimension_; }
  std::size_t nnz() const { return values_.size(); }
  bool is_zero() const { return values_.empty(); }

  std::span<const std::size_t> row_ptr() const { return row_ptr_; }
  std::span<const Index> cols() const { return cols_; }
  std::span<const Complex> values() const { return values_; }

  Complex at(std::size_t row, std::size_t col) const;
  std::vector<Triplet> triplets() const;

  SparseOperator adjoint() const;
  SparseOperator scaled(Complex factor) const;

  /// Largest entry modulus; 0 for the zero operator.
  double max_abs() const;
  /// sqrt(||X||_1 ||X||_inf), an upper bound on the spectral norm.
  double norm_estimate() const;

  /// True when every off-diagonal entry has modulus below tol.
  bool is_diagonal(double tol = 1e-12) const;
  std::vector<Complex> diagonal_entries() const;
  Complex trace() const;

  std::vector<Complex> apply(std::span<const Complex> vec) const;

  friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator*(Complex s, const SparseOperator& a) { return a.scaled(s); }
  friend SparseOperator operator*(const SparseOperator& a, Complex s) { return a.scaled(s); }
  SparseOperator operator-() const { return scaled(-1.0); }
  SparseOperator& operator+=(const SparseOperator& o) { return *this = *this + o; }

 private:
  std::size_t dimension_;
  std::vector<std::size_t> row_ptr_;
  std::vector<Index> cols_;
  std::vector<Complex> values_;
};

/// a + factor * b, merged row by row.
SparseOperator add_scaled(const SparseOperator& a, const SparseOperator& b, Complex factor);

/// Kronecker product a (x) b; a acts on the most significant index.
SparseOperator kron(const SparseOperator& a, const SparseOperator& b);

/// max_abs(a - b).
double distance(const SparseOperator& a, const SparseOperator& b);

void require_same_dimension(const SparseOperator& a, const SparseOperator& b, const char* what);

}  // namespace qanyon
