#include "qanyon/anyon_ops.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace qanyon {

Complex DeformationParams::q() const { return std::polar(1.0, std::numbers::pi * nu); }

Complex DeformationParams::s(std::size_t j) const { return std::polar(1.0, std::numbers::pi * rho_at(j)); }

double DeformationParams::rho_at(std::size_t j) const {
  if (j < 1 || j > rho.size()) {
    throw std::out_of_range("s_" + std::to_string(j) + " requested but rho has " + std::to_string(rho.size()) +
                            " entries");
  }
  return rho[j - 1];
}

void DeformationParams::require_sorts(std::size_t n_sorts) const {
  if (n_sorts == 0 || rho.size() != n_sorts - 1) {
    throw std::invalid_argument("rho must have " + std::to_string(n_sorts == 0 ? 0 : n_sorts - 1) +
                                " entries for " + std::to_string(n_sorts) + " sorts, got " +
                                std::to_string(rho.size()));
  }
}

DeformationParams DeformationParams::generic(std::size_t n_sorts) {
  DeformationParams p;
  p.nu = 0.3;
  for (std::size_t j = 0; j + 1 < n_sorts; ++j) p.rho.push_back(0.17 + 0.06 * static_cast<double>(j));
  return p;
}

DeformationParams DeformationParams::uniform(std::size_t n_sorts, double nu, double rho) {
  DeformationParams p;
  p.nu = nu;
  p.rho.assign(n_sorts == 0 ? 0 : n_sorts - 1, rho);
  return p;
}

namespace {

// nu * sum_{y != x} Theta_cut(x, y) N_sort(y), evaluated on every basis state.
std::vector<double> disorder_phase(const FockSpace& space, double nu, std::size_t sort, const LatticeSite& x,
                                   CutType cut) {
  const Lattice& lat = space.lattice();
  const std::size_t xi = lat.index(x);
  std::vector<double> weights(lat.site_count(), 0.0);
  for (std::size_t y = 0; y < lat.site_count(); ++y)
    if (y != xi) weights[y] = nu * angle(cut, x, lat.site(y));
  std::vector<double> phase(space.dimension(), 0.0);
  for (std::uint64_t b = 0; b < space.dimension(); ++b)
    for (std::size_t y = 0; y < lat.site_count(); ++y)
      if (space.occupation(b, sort, y)) phase[b] += weights[y];
  return phase;
}

SparseOperator phase_diagonal(const std::vector<double>& phase) {
  std::vector<Complex> d(phase.size());
  for (std::size_t b = 0; b < phase.size(); ++b) d[b] = std::polar(1.0, phase[b]);
  return SparseOperator::diagonal(d);
}

}  // namespace

SparseOperator disorder_operator(const FockSpace& space, const DeformationParams& params, std::size_t sort,
                                 const LatticeSite& x, CutType cut) {
  space.mode_number({sort, x});
  return phase_diagonal(disorder_phase(space, params.nu, sort, x, cut));
}

SparseOperator anyon(const FockSpace& space, const DeformationParams& params, std::size_t sort,
                     const LatticeSite& x, CutType cut) {
  return disorder_operator(space, params, sort, x, cut) * space.annihilator({sort, x});
}

SparseOperator quasi_anyon(const FockSpace& space, const DeformationParams& params, std::size_t sort,
                           const LatticeSite& x, CutType cut) {
  params.require_sorts(space.n_sorts());
  SparseOperator dressing = disorder_operator(space, params, sort, x, cut);
  // Products of s_j^{N_j}: the s-sums run over every site, x included.
  if (cut == CutType::gamma) {
    for (std::size_t j = 1; j < sort; ++j)
      dressing = diagonal_power(std::numbers::pi * params.rho_at(j), space.total_number(j), 1.0) * dressing;
  } else {
    for (std::size_t j = sort; j + 1 <= space.n_sorts(); ++j)
      dressing = diagonal_power(std::numbers::pi * params.rho_at(j), space.total_number(j + 1), 1.0) * dressing;
  }
  return dressing * space.annihilator({sort, x});
}

OscillatorTable::OscillatorTable(const FockSpace& space, const DeformationParams& params, Kind kind)
    : kind_(kind), sites_(space.site_count()) {
  if (kind == Kind::quasi_anyon) params.require_sorts(space.n_sorts());
  const std::size_t slots = space.n_sorts() * sites_ * 2;
  ops_.reserve(slots);
  adj_.reserve(slots);
  for (std::size_t k = 1; k <= space.n_sorts(); ++k) {
    for (std::size_t x = 0; x < sites_; ++x) {
      for (const CutType cut : {CutType::gamma, CutType::delta}) {
        const LatticeSite site = space.lattice().site(x);
        ops_.push_back(kind == Kind::anyon ? anyon(space, params, k, site, cut)
                                           : quasi_anyon(space, params, k, site, cut));
        adj_.push_back(ops_.back().adjoint());
      }
    }
  }
}

}  // namespace qanyon
