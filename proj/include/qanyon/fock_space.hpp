#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "qanyon/lattice.hpp"
#include "qanyon/sparse_operator.hpp"

namespace qanyon {

inline constexpr std::size_t kDefaultDimensionCap = std::size_t{1} << 16;

/// Thrown when a requested space would exceed the configured dimension cap.
class DimensionCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A fermion mode: sort (1-based) at a lattice site.
struct ModeIndex {
  std::size_t sort = 1;
  LatticeSite site;
};

/// Fock space of n_sorts fermion species over a lattice.
///
/// Modes are enumerated sort-major, then in lattice order; bit m of a basis
/// index is the occupation of mode m, so the vacuum is index 0. Creation and
/// annihilation operators carry Jordan-Wigner strings over lower modes.
class FockSpace {
 public:
  FockSpace(std::size_t n_sorts, Lattice lattice, std::size_t dimension_cap = kDefaultDimensionCap);

  std::size_t n_sorts() const { return n_sorts_; }
  const Lattice& lattice() const { return lattice_; }
  std::size_t site_count() const { return lattice_.site_count(); }
  std::size_t mode_count() const { return n_sorts_ * lattice_.site_count(); }
  std::size_t dimension() const { return std::size_t{1} << mode_count(); }
  std::size_t vacuum_index() const { return 0; }

  /// Position of a mode in the fixed enumeration. Throws std::out_of_range.
  std::size_t mode_number(const ModeIndex& mode) const;
  ModeIndex mode(std::size_t number) const;

  bool occupied(std::uint64_t basis, std::size_t mode_number) const { return (basis >> mode_number) & 1U; }
  /// Occupation of sort (1-based) at the site with the given lattice index.
  int occupation(std::uint64_t basis, std::size_t sort, std::size_t site_index) const;
  /// Number of particles of the given sort in a basis state.
  int sort_count(std::uint64_t basis, std::size_t sort) const;

  SparseOperator annihilator(const ModeIndex& mode) const;
  SparseOperator creator(const ModeIndex& mode) const;
  SparseOperator number_operator(const ModeIndex& mode) const;
  /// Sum of number operators of one sort over every site.
  SparseOperator total_number(std::size_t sort) const;
  SparseOperator identity() const { return SparseOperator::identity(dimension()); }
  SparseOperator zero() const { return SparseOperator(dimension()); }

  std::string describe() const;

 private:
  void check_sort(std::size_t sort) const;

  std::size_t n_sorts_;
  Lattice lattice_;
};

FockSpace build_space(std::size_t n_sorts, const Lattice& lattice,
                      std::size_t dimension_cap = kDefaultDimensionCap);

/// 2^bits, or throws DimensionCapError when it exceeds cap.
std::size_t checked_dimension(std::size_t bits, std::size_t cap, const std::string& what);

/// [X, Y]_r = XY - r YX.
SparseOperator deformed_commutator(const SparseOperator& x, const SparseOperator& y, Complex r);
SparseOperator commutator(const SparseOperator& x, const SparseOperator& y);
SparseOperator anticommutator(const SparseOperator& x, const SparseOperator& y);

/// Diagonal operator exp(i * base_phase * scale * d_k) for the diagonal entries d_k of d.
/// This fixes lambda^t := exp(i pi mu t) for lambda = exp(i pi mu) and any real t.
/// Throws std::invalid_argument if d has off-diagonal entries or complex eigenvalues.
SparseOperator diagonal_power(double base_phase, const SparseOperator& d, double scale);

inline double residual_norm(const SparseOperator& x) { return x.max_abs(); }

}  // namespace qanyon
