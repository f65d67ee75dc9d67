#pragma once

#include <cstddef>
#include <vector>

#include "qanyon/fock_space.hpp"
#include "qanyon/lattice.hpp"
#include "qanyon/sparse_operator.hpp"

namespace qanyon {

/// Deformation constants: q = exp(i pi nu) and s_j = exp(i pi rho_j), j = 1..n-1.
/// Stored as phases so |q| = |s_j| = 1 exactly.
struct DeformationParams {
  double nu = 0.0;
  std::vector<double> rho;

  std::size_t n_sorts() const { return rho.size() + 1; }
  Complex q() const;
  /// s_j for 1-based j.
  Complex s(std::size_t j) const;
  double rho_at(std::size_t j) const;

  /// Throws std::invalid_argument unless rho has exactly n_sorts - 1 entries.
  void require_sorts(std::size_t n_sorts) const;

  /// nu = 0.3, rho = (0.17, 0.23, 0.29, ...): generic values away from small roots of unity.
  static DeformationParams generic(std::size_t n_sorts);
  static DeformationParams uniform(std::size_t n_sorts, double nu, double rho);
};

/// K_sort(x_cut) = exp(i nu sum_{y != x} Theta_cut(x, y) N_sort(y)), a diagonal unitary.
SparseOperator disorder_operator(const FockSpace& space, const DeformationParams& params, std::size_t sort,
                                 const LatticeSite& x, CutType cut);

/// Anyonic oscillator a_sort(x_cut) = K_sort(x_cut) c_sort(x).
SparseOperator anyon(const FockSpace& space, const DeformationParams& params, std::size_t sort,
                     const LatticeSite& x, CutType cut);

/// Quasi-anyonic oscillator A_k(x_cut): the anyon dressed by s-dependent phases of
/// the total occupation of the other sorts (sorts j < k for gamma, sorts j > k for delta).
SparseOperator quasi_anyon(const FockSpace& space, const DeformationParams& params, std::size_t sort,
                           const LatticeSite& x, CutType cut);

/// All oscillators of one family and their adjoints, built once.
class OscillatorTable {
 public:
  enum class Kind { anyon, quasi_anyon };

  OscillatorTable(const FockSpace& space, const DeformationParams& params, Kind kind);

  const SparseOperator& get(std::size_t sort, std::size_t site_index, CutType cut) const {
    return ops_[slot(sort, site_index, cut)];
  }
  const SparseOperator& dag(std::size_t sort, std::size_t site_index, CutType cut) const {
    return adj_[slot(sort, site_index, cut)];
  }
  Kind kind() const { return kind_; }

 private:
  std::size_t slot(std::size_t sort, std::size_t site_index, CutType cut) const {
    return ((sort - 1) * sites_ + site_index) * 2 + (cut == CutType::gamma ? 0 : 1);
  }

  Kind kind_;
  std::size_t sites_;
  std::vector<SparseOperator> ops_;
  std::vector<SparseOperator> adj_;
};

}  // namespace qanyon
