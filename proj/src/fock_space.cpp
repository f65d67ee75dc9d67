#include "qanyon/fock_space.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace qanyon {

std::size_t checked_dimension(std::size_t bits, std::size_t cap, const std::string& what) {
  if (bits >= 63 || (std::size_t{1} << bits) > cap) {
    throw DimensionCapError(what + " needs dimension 2^" + std::to_string(bits) + ", above the cap of " +
                            std::to_string(cap) + "; shrink the lattice or sort count, or raise --cap");
  }
  return std::size_t{1} << bits;
}

FockSpace::FockSpace(std::size_t n_sorts, Lattice lattice, std::size_t dimension_cap)
    : n_sorts_(n_sorts), lattice_(lattice) {
  if (n_sorts == 0) throw std::invalid_argument("at least one fermion sort is required");
  checked_dimension(mode_count(), dimension_cap,
                    "Fock space of " + std::to_string(n_sorts) + " sorts on a " + lattice_.to_string() + " lattice");
}

void FockSpace::check_sort(std::size_t sort) const {
  if (sort < 1 || sort > n_sorts_) {
    throw std::out_of_range("sort " + std::to_string(sort) + " outside 1.." + std::to_string(n_sorts_));
  }
}

std::size_t FockSpace::mode_number(const ModeIndex& mode) const {
  check_sort(mode.sort);
  return (mode.sort - 1) * site_count() + lattice_.index(mode.site);
}

ModeIndex FockSpace::mode(std::size_t number) const {
  if (number >= mode_count()) throw std::out_of_range("mode number out of range");
  return {number / site_count() + 1, lattice_.site(number % site_count())};
}

int FockSpace::occupation(std::uint64_t basis, std::size_t sort, std::size_t site_index) const {
  return occupied(basis, (sort - 1) * site_count() + site_index) ? 1 : 0;
}

int FockSpace::sort_count(std::uint64_t basis, std::size_t sort) const {
  check_sort(sort);
  const std::uint64_t mask = ((std::uint64_t{1} << site_count()) - 1) << ((sort - 1) * site_count());
  return std::popcount(basis & mask);
}

SparseOperator FockSpace::annihilator(const ModeIndex& mode) const {
  const std::size_t m = mode_number(mode);
  const std::uint64_t bit = std::uint64_t{1} << m;
  const std::uint64_t lower = bit - 1;
  std::vector<Triplet> entries;
  entries.reserve(dimension() / 2);
  for (std::uint64_t b = 0; b < dimension(); ++b) {
    if (!(b & bit)) continue;
    const double sign = (std::popcount(b & lower) % 2 == 0) ? 1.0 : -1.0;
    entries.push_back({b ^ bit, b, Complex{sign, 0.0}});
  }
  return SparseOperator::from_triplets(dimension(), std::move(entries));
}

SparseOperator FockSpace::creator(const ModeIndex& mode) const { return annihilator(mode).adjoint(); }

SparseOperator FockSpace::number_operator(const ModeIndex& mode) const {
  const std::size_t m = mode_number(mode);
  std::vector<Complex> d(dimension());
  for (std::uint64_t b = 0; b < dimension(); ++b) d[b] = occupied(b, m) ? 1.0 : 0.0;
  return SparseOperator::diagonal(d);
}

SparseOperator FockSpace::total_number(std::size_t sort) const {
  check_sort(sort);
  std::vector<Complex> d(dimension());
  for (std::uint64_t b = 0; b < dimension(); ++b) d[b] = static_cast<double>(sort_count(b, sort));
  return SparseOperator::diagonal(d);
}

std::string FockSpace::describe() const {
  return std::to_string(n_sorts_) + " sorts on " + lattice_.to_string() + " (dim " + std::to_string(dimension()) +
         ")";
}

FockSpace build_space(std::size_t n_sorts, const Lattice& lattice, std::size_t dimension_cap) {
  return FockSpace(n_sorts, lattice, dimension_cap);
}

SparseOperator deformed_commutator(const SparseOperator& x, const SparseOperator& y, Complex r) {
  require_same_dimension(x, y, "deformed_commutator");
  return add_scaled(x * y, y * x, -r);
}

SparseOperator commutator(const SparseOperator& x, const SparseOperator& y) { return deformed_commutator(x, y, 1.0); }

SparseOperator anticommutator(const SparseOperator& x, const SparseOperator& y) {
  return deformed_commutator(x, y, -1.0);
}

SparseOperator diagonal_power(double base_phase, const SparseOperator& d, double scale) {
  constexpr double tol = 1e-12;
  if (!d.is_diagonal(tol)) throw std::invalid_argument("diagonal_power requires a diagonal operator");
  std::vector<Complex> out(d.dimension());
  for (std::size_t k = 0; k < d.dimension(); ++k) {
    const Complex v = d.at(k, k);
    if (std::abs(v.imag()) >= tol) throw std::invalid_argument("diagonal_power requires real eigenvalues");
    out[k] = std::polar(1.0, base_phase * scale * v.real());
  }
  return SparseOperator::diagonal(out);
}

}  // namespace qanyon
