#include "qanyon/generators.hpp"

#include <stdexcept>

namespace qanyon {

std::string GeneratorId::to_string() const {
  const std::string a = std::to_string(k);
  const std::string b = std::to_string(k + 1);
  switch (kind) {
    case Kind::cartan:
      return "I_" + a + a;
    case Kind::raising:
      return "I_" + a + "," + b;
    case Kind::lowering:
      return "I_" + b + "," + a;
  }
  return {};
}

const SparseOperator& GeneratorSet::get(const GeneratorId& id) const {
  switch (id.kind) {
    case GeneratorId::Kind::cartan:
      return H(id.k);
    case GeneratorId::Kind::raising:
      return E(id.k);
    case GeneratorId::Kind::lowering:
      return F(id.k);
  }
  throw std::invalid_argument("unknown generator kind");
}

std::vector<GeneratorId> GeneratorSet::ids() const {
  std::vector<GeneratorId> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back({GeneratorId::Kind::cartan, i});
  for (std::size_t k = 1; k < n; ++k) out.push_back({GeneratorId::Kind::raising, k});
  for (std::size_t k = 1; k < n; ++k) out.push_back({GeneratorId::Kind::lowering, k});
  return out;
}

namespace {

void check_raising_index(const FockSpace& space, std::size_t k) {
  if (k < 1 || k + 1 > space.n_sorts()) {
    throw std::out_of_range("generator index k=" + std::to_string(k) + " outside 1.." +
                            std::to_string(space.n_sorts() - 1));
  }
}

}  // namespace

SparseOperator local_density_raising(const FockSpace& space, const DeformationParams& params, std::size_t k,
                                     const LatticeSite& x) {
  check_raising_index(space, k);
  return quasi_anyon(space, params, k, x, CutType::gamma).adjoint() *
         quasi_anyon(space, params, k + 1, x, CutType::gamma);
}

SparseOperator local_density_lowering(const FockSpace& space, const DeformationParams& params, std::size_t k,
                                      const LatticeSite& x) {
  check_raising_index(space, k);
  return quasi_anyon(space, params, k + 1, x, CutType::delta).adjoint() *
         quasi_anyon(space, params, k, x, CutType::delta);
}

SparseOperator local_density_cartan(const FockSpace& space, const DeformationParams& params, std::size_t k,
                                    const LatticeSite& x, CutType cut) {
  const SparseOperator a = quasi_anyon(space, params, k, x, cut);
  return a.adjoint() * a;
}

GeneratorSet build_generators(const FockSpace& space, const DeformationParams& params) {
  params.require_sorts(space.n_sorts());
  const std::size_t n = space.n_sorts();
  const std::size_t sites = space.site_count();
  const OscillatorTable table(space, params, OscillatorTable::Kind::quasi_anyon);

  GeneratorSet g;
  g.n = n;
  for (std::size_t k = 1; k < n; ++k) {
    SparseOperator e = space.zero();
    SparseOperator f = space.zero();
    for (std::size_t x = 0; x < sites; ++x) {
      e += table.dag(k, x, CutType::gamma) * table.get(k + 1, x, CutType::gamma);
      f += table.dag(k + 1, x, CutType::delta) * table.get(k, x, CutType::delta);
    }
    g.raising.push_back(std::move(e));
    g.lowering.push_back(std::move(f));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    SparseOperator h = space.zero();
    for (std::size_t x = 0; x < sites; ++x) h += table.dag(i, x, CutType::gamma) * table.get(i, x, CutType::gamma);
    g.cartan.push_back(std::move(h));
  }
  return g;
}

GeneratorSet bare_fermion_generators(const FockSpace& space) {
  const std::size_t n = space.n_sorts();
  GeneratorSet g;
  g.n = n;
  for (std::size_t k = 1; k < n; ++k) {
    SparseOperator e = space.zero();
    SparseOperator f = space.zero();
    for (const auto& x : space.lattice().sites()) {
      e += space.creator({k, x}) * space.annihilator({k + 1, x});
      f += space.creator({k + 1, x}) * space.annihilator({k, x});
    }
    g.raising.push_back(std::move(e));
    g.lowering.push_back(std::move(f));
  }
  for (std::size_t i = 1; i <= n; ++i) g.cartan.push_back(space.total_number(i));
  return g;
}

}  // namespace qanyon
