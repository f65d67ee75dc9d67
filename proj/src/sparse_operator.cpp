#include "qanyon/sparse_operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qanyon/kernels.hpp"

namespace qanyon {

namespace {

bool keep(const Complex& v) { return v != Complex{}; }

}  // namespace

SparseOperator::SparseOperator(std::size_t dimension)
    : dimension_(dimension), row_ptr_(dimension + 1, 0) {
  if (dimension == 0) throw std::invalid_argument("operator dimension must be positive");
  if (dimension > std::size_t{UINT32_MAX}) throw std::length_error("operator dimension exceeds 2^32");
}

SparseOperator SparseOperator::identity(std::size_t dimension) {
  std::vector<Complex> ones(dimension, Complex{1.0, 0.0});
  return diagonal(ones);
}

SparseOperator SparseOperator::diagonal(std::span<const Complex> entries) {
  SparseOperator out(entries.size());
  out.cols_.reserve(entries.size());
  out.values_.reserve(entries.size());
  for (std::size_t r = 0; r < entries.size(); ++r) {
    if (keep(entries[r])) {
      out.cols_.push_back(static_cast<Index>(r));
      out.values_.push_back(entries[r]);
    }
    out.row_ptr_[r + 1] = out.values_.size();
  }
  return out;
}

SparseOperator SparseOperator::from_triplets(std::size_t dimension, std::vector<Triplet> triplets) {
  SparseOperator out(dimension);
  for (const auto& t : triplets) {
    if (t.row >= dimension || t.col >= dimension) {
      throw std::out_of_range("triplet index outside dimension " + std::to_string(dimension));
    }
  }
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::size_t i = 0;
  for (std::size_t r = 0; r < dimension; ++r) {
    while (i < triplets.size() && triplets[i].row == r) {
      const std::size_t c = triplets[i].col;
      Complex sum{};
      while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c) sum += triplets[i++].value;
      if (keep(sum)) {
        out.cols_.push_back(static_cast<Index>(c));
        out.values_.push_back(sum);
      }
    }
    out.row_ptr_[r + 1] = out.values_.size();
  }
  return out;
}

SparseOperator SparseOperator::from_csr(std::size_t dimension, std::vector<std::size_t> row_ptr,
                                        std::vector<Index> cols, std::vector<Complex> values) {
  if (row_ptr.size() != dimension + 1 || cols.size() != values.size() || row_ptr.back() != values.size()) {
    throw std::invalid_argument("inconsistent CSR arrays");
  }
  SparseOperator out(dimension);
  out.cols_.reserve(cols.size());
  out.values_.reserve(values.size());
  for (std::size_t r = 0; r < dimension; ++r) {
    for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
      if (keep(values[k])) {
        out.cols_.push_back(cols[k]);
        out.values_.push_back(values[k]);
      }
    }
    out.row_ptr_[r + 1] = out.values_.size();
  }
  return out;
}

Complex SparseOperator::at(std::size_t row, std::size_t col) const {
  if (row >= dimension_ || col >= dimension_) throw std::out_of_range("operator index out of range");
  const auto begin = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row]);
  const auto end = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row + 1]);
  const auto it = std::lower_bound(begin, end, static_cast<Index>(col));
  if (it == end || *it != col) return {};
  return values_[static_cast<std::size_t>(it - cols_.begin())];
}

std::vector<Triplet> SparseOperator::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t r = 0; r < dimension_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) out.push_back({r, cols_[k], values_[k]});
  return out;
}

SparseOperator SparseOperator::adjoint() const {
  SparseOperator out(dimension_);
  std::vector<std::size_t> counts(dimension_ + 1, 0);
  for (const Index c : cols_) ++counts[c + 1];
  for (std::size_t r = 0; r < dimension_; ++r) counts[r + 1] += counts[r];
  out.row_ptr_ = counts;
  out.cols_.resize(nnz());
  out.values_.resize(nnz());
  // Rows are visited in increasing order, so each output row stays sorted.
  for (std::size_t r = 0; r < dimension_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const std::size_t dst = counts[cols_[k]]++;
      out.cols_[dst] = static_cast<Index>(r);
      out.values_[dst] = std::conj(values_[k]);
    }
  }
  return out;
}

SparseOperator SparseOperator::scaled(Complex factor) const {
  SparseOperator out(dimension_);
  out.cols_.reserve(nnz());
  out.values_.reserve(nnz());
  for (std::size_t r = 0; r < dimension_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const Complex v = factor * values_[k];
      if (keep(v)) {
        out.cols_.push_back(cols_[k]);
        out.values_.push_back(v);
      }
    }
    out.row_ptr_[r + 1] = out.values_.size();
  }
  return out;
}

double SparseOperator::max_abs() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double SparseOperator::norm_estimate() const {
  std::vector<double> col_sums(dimension_, 0.0);
  double row_max = 0.0;
  for (std::size_t r = 0; r < dimension_; ++r) {
    double row_sum = 0.0;
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      row_sum += std::abs(values_[k]);
      col_sums[cols_[k]] += std::abs(values_[k]);
    }
    row_max = std::max(row_max, row_sum);
  }
  const double col_max = col_sums.empty() ? 0.0 : *std::max_element(col_sums.begin(), col_sums.end());
  return std::sqrt(row_max * col_max);
}

bool SparseOperator::is_diagonal(double tol) const {
  for (std::size_t r = 0; r < dimension_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      if (cols_[k] != r && std::abs(values_[k]) >= tol) return false;
  return true;
}

std::vector<Complex> SparseOperator::diagonal_entries() const {
  std::vector<Complex> d(dimension_);
  for (std::size_t r = 0; r < dimension_; ++r) d[r] = at(r, r);
  return d;
}

Complex SparseOperator::trace() const {
  Complex t{};
  for (std::size_t r = 0; r < dimension_; ++r) t += at(r, r);
  return t;
}

std::vector<Complex> SparseOperator::apply(std::span<const Complex> vec) const {
  if (vec.size() != dimension_) throw std::invalid_argument("vector length does not match operator dimension");
  std::vector<Complex> out(dimension_);
  for (std::size_t r = 0; r < dimension_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) out[r] += values_[k] * vec[cols_[k]];
  return out;
}

void require_same_dimension(const SparseOperator& a, const SparseOperator& b, const char* what) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch " + std::to_string(a.dimension()) +
                                " vs " + std::to_string(b.dimension()));
  }
}

SparseOperator add_scaled(const SparseOperator& a, const SparseOperator& b, Complex factor) {
  require_same_dimension(a, b, "add");
  const std::size_t n = a.dimension();
  std::vector<std::size_t> row_ptr(n + 1, 0);
  std::vector<SparseOperator::Index> cols;
  std::vector<Complex> values;
  cols.reserve(a.nnz() + b.nnz());
  values.reserve(a.nnz() + b.nnz());
  const auto arp = a.row_ptr(), brp = b.row_ptr();
  const auto ac = a.cols(), bc = b.cols();
  const auto av = a.values(), bv = b.values();
  auto push = [&](SparseOperator::Index c, Complex v) {
    if (keep(v)) {
      cols.push_back(c);
      values.push_back(v);
    }
  };
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t i = arp[r], j = brp[r];
    while (i < arp[r + 1] || j < brp[r + 1]) {
      if (j == brp[r + 1] || (i < arp[r + 1] && ac[i] < bc[j])) {
        push(ac[i], av[i]);
        ++i;
      } else if (i == arp[r + 1] || bc[j] < ac[i]) {
        push(bc[j], factor * bv[j]);
        ++j;
      } else {
        push(ac[i], av[i] + factor * bv[j]);
        ++i;
        ++j;
      }
    }
    row_ptr[r + 1] = values.size();
  }
  return SparseOperator::from_csr(n, std::move(row_ptr), std::move(cols), std::move(values));
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) { return add_scaled(a, b, 1.0); }
SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) { return add_scaled(a, b, -1.0); }
SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  return kernels::multiply_parallel(a, b);
}

SparseOperator kron(const SparseOperator& a, const SparseOperator& b) {
  const std::size_t db = b.dimension();
  const std::size_t n = a.dimension() * db;
  std::vector<std::size_t> row_ptr(n + 1, 0);
  std::vector<SparseOperator::Index> cols;
  std::vector<Complex> values;
  cols.reserve(a.nnz() * b.nnz());
  values.reserve(a.nnz() * b.nnz());
  const auto arp = a.row_ptr(), brp = b.row_ptr();
  for (std::size_t ra = 0; ra < a.dimension(); ++ra) {
    for (std::size_t rb = 0; rb < db; ++rb) {
      for (std::size_t i = arp[ra]; i < arp[ra + 1]; ++i) {
        for (std::size_t j = brp[rb]; j < brp[rb + 1]; ++j) {
          cols.push_back(static_cast<SparseOperator::Index>(a.cols()[i] * db + b.cols()[j]));
          values.push_back(a.values()[i] * b.values()[j]);
        }
      }
      row_ptr[ra * db + rb + 1] = values.size();
    }
  }
  return SparseOperator::from_csr(n, std::move(row_ptr), std::move(cols), std::move(values));
}

double distance(const SparseOperator& a, const SparseOperator& b) { return (a - b).max_abs(); }

}  // namespace qanyon
