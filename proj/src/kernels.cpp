#include "qanyon/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qanyon/sparse_operator.hpp"

namespace qanyon::kernels {

namespace {

using Index = SparseOperator::Index;

struct Entry {
  Index col;
  Complex value;
};

// Dense scatter workspace for one output row at a time.
class RowAccumulator {
 public:
  explicit RowAccumulator(std::size_t n) : dense_(n), seen_(n, 0) {}

  void compute(const SparseOperator& a, const SparseOperator& b, std::size_t row, std::vector<Entry>& out) {
    const auto arp = a.row_ptr(), brp = b.row_ptr();
    const auto ac = a.cols(), bc = b.cols();
    const auto av = a.values(), bv = b.values();
    touched_.clear();
    for (std::size_t i = arp[row]; i < arp[row + 1]; ++i) {
      const Index k = ac[i];
      const Complex aik = av[i];
      for (std::size_t j = brp[k]; j < brp[k + 1]; ++j) {
        const Index c = bc[j];
        if (!seen_[c]) {
          seen_[c] = 1;
          dense_[c] = Complex{};
          touched_.push_back(c);
        }
        dense_[c] += aik * bv[j];
      }
    }
    std::sort(touched_.begin(), touched_.end());
    out.clear();
    for (const Index c : touched_) {
      seen_[c] = 0;
      if (dense_[c] != Complex{}) out.push_back({c, dense_[c]});
    }
  }

 private:
  std::vector<Complex> dense_;
  std::vector<unsigned char> seen_;
  std::vector<Index> touched_;
};

SparseOperator assemble(std::size_t n, const std::vector<std::vector<Entry>>& rows) {
  std::vector<std::size_t> row_ptr(n + 1, 0);
  for (std::size_t r = 0; r < n; ++r) row_ptr[r + 1] = row_ptr[r] + rows[r].size();
  std::vector<Index> cols(row_ptr[n]);
  std::vector<Complex> values(row_ptr[n]);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t k = row_ptr[r];
    for (const auto& e : rows[r]) {
      cols[k] = e.col;
      values[k++] = e.value;
    }
  }
  return SparseOperator::from_csr(n, std::move(row_ptr), std::move(cols), std::move(values));
}

}  // namespace

SparseOperator multiply_serial(const SparseOperator& a, const SparseOperator& b) {
  require_same_dimension(a, b, "multiply");
  const std::size_t n = a.dimension();
  std::vector<std::vector<Entry>> rows(n);
  RowAccumulator acc(n);
  for (std::size_t r = 0; r < n; ++r) acc.compute(a, b, r, rows[r]);
  return assemble(n, rows);
}

SparseOperator multiply_parallel(const SparseOperator& a, const SparseOperator& b) {
  require_same_dimension(a, b, "multiply");
  const std::size_t n = a.dimension();
  if (n < kParallelRowThreshold || max_threads() == 1) return multiply_serial(a, b);
  std::vector<std::vector<Entry>> rows(n);
  const auto signed_n = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
  {
    RowAccumulator acc(n);
#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t r = 0; r < signed_n; ++r) acc.compute(a, b, static_cast<std::size_t>(r), rows[r]);
  }
  return assemble(n, rows);
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qanyon::kernels
