#include <doctest.h>

#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dense_oracle.hpp"
#include "qanyon/generators.hpp"
#include "qanyon/kernels.hpp"

using namespace qanyon;

namespace {

bool bitwise_equal(const SparseOperator& a, const SparseOperator& b) {
  if (a.dimension() != b.dimension() || a.nnz() != b.nnz()) return false;
  for (std::size_t i = 0; i <= a.dimension(); ++i)
    if (a.row_ptr()[i] != b.row_ptr()[i]) return false;
  for (std::size_t i = 0; i < a.nnz(); ++i)
    if (a.cols()[i] != b.cols()[i] || a.values()[i] != b.values()[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("serial kernel matches dense product") {
  std::mt19937_64 rng(11);
  const auto a = oracle::random_sparse(40, 0.1, rng);
  const auto b = oracle::random_sparse(40, 0.1, rng);
  CHECK(oracle::distance(oracle::mul(oracle::to_dense(a), oracle::to_dense(b)), kernels::multiply_serial(a, b)) <
        1e-13);
}

TEST_CASE("parallel kernel is bitwise identical to the serial reference") {
#ifdef _OPENMP
  omp_set_num_threads(4);
#endif
  std::mt19937_64 rng(5);
  const std::size_t dim = 2 * kernels::kParallelRowThreshold;
  std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Triplet> ta, tb;
  for (int i = 0; i < 20000; ++i) {
    ta.push_back({pick(rng), pick(rng), {u(rng), u(rng)}});
    tb.push_back({pick(rng), pick(rng), {u(rng), u(rng)}});
  }
  const auto a = SparseOperator::from_triplets(dim, ta);
  const auto b = SparseOperator::from_triplets(dim, tb);
  CHECK(bitwise_equal(kernels::multiply_serial(a, b), kernels::multiply_parallel(a, b)));
}

TEST_CASE("parallel kernel on generator products") {
#ifdef _OPENMP
  omp_set_num_threads(3);
#endif
  const FockSpace space(3, Lattice(2, 2));
  const auto g = build_generators(space, DeformationParams::generic(3));
  CHECK(bitwise_equal(kernels::multiply_serial(g.E(1), g.F(2)), kernels::multiply_parallel(g.E(1), g.F(2))));
  CHECK(bitwise_equal(kernels::multiply_serial(g.F(2), g.E(1)), kernels::multiply_parallel(g.F(2), g.E(1))));
}
