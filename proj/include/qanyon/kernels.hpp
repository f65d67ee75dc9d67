#pragma once

#include "qanyon/sparse_operator.hpp"

namespace qanyon::kernels {

/// Row-by-row Gustavson product with a dense scatter accumulator.
/// Reference path kept for testing the parallel kernel.
SparseOperator multiply_serial(const SparseOperator& a, const SparseOperator& b);

/// OpenMP row-parallel product. Each row is accumulated in the same order as
/// multiply_serial, so results are bitwise identical to it.
SparseOperator multiply_parallel(const SparseOperator& a, const SparseOperator& b);

/// Rows below this count run serially inside multiply_parallel.
inline constexpr std::size_t kParallelRowThreshold = 1024;

int max_threads();

}  // namespace qanyon::kernels
