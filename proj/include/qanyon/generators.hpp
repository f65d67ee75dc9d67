#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qanyon/anyon_ops.hpp"
#include "qanyon/fock_space.hpp"
#include "qanyon/sparse_operator.hpp"

namespace qanyon {

/// Names one simple generator: I_kk (cartan), I_{k,k+1} (raising) or I_{k+1,k} (lowering).
struct GeneratorId {
  enum class Kind { cartan, raising, lowering };
  Kind kind = Kind::cartan;
  std::size_t k = 1;

  std::string to_string() const;
  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

/// Global generators of the deformed gl_n. Indices are 1-based.
///
/// The same container holds the Fock realization and its coproduct images on
/// tensor spaces, so every suite can run against either.
struct GeneratorSet {
  std::size_t n = 0;
  std::vector<SparseOperator> raising;   // I_{k,k+1}, k = 1..n-1
  std::vector<SparseOperator> lowering;  // I_{k+1,k}, k = 1..n-1
  std::vector<SparseOperator> cartan;    // I_{ii}, i = 1..n

  const SparseOperator& E(std::size_t k) const { return raising.at(k - 1); }
  const SparseOperator& F(std::size_t k) const { return lowering.at(k - 1); }
  const SparseOperator& H(std::size_t i) const { return cartan.at(i - 1); }
  const SparseOperator& get(const GeneratorId& id) const;
  std::size_t dimension() const { return cartan.front().dimension(); }
  std::vector<GeneratorId> ids() const;
};

/// I_{k,k+1}(x) = A_k^dag(x_gamma) A_{k+1}(x_gamma).
SparseOperator local_density_raising(const FockSpace& space, const DeformationParams& params, std::size_t k,
                                     const LatticeSite& x);
/// I_{k+1,k}(x) = A_{k+1}^dag(x_delta) A_k(x_delta).
SparseOperator local_density_lowering(const FockSpace& space, const DeformationParams& params, std::size_t k,
                                      const LatticeSite& x);
/// I_kk(x) = A_k^dag(x_cut) A_k(x_cut); equals N_k(x) for either cut.
SparseOperator local_density_cartan(const FockSpace& space, const DeformationParams& params, std::size_t k,
                                    const LatticeSite& x, CutType cut = CutType::gamma);

/// Lattice sums of the local densities.
GeneratorSet build_generators(const FockSpace& space, const DeformationParams& params);

/// Undressed fermion bilinears sum_x c_k^dag c_{k+1}, sum_x c_{k+1}^dag c_k, N_k.
GeneratorSet bare_fermion_generators(const FockSpace& space);

}  // namespace qanyon
