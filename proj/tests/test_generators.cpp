#include <doctest.h>

#include <tuple>

#include "dense_oracle.hpp"
#include "qanyon/generators.hpp"

using namespace qanyon;

TEST_CASE("generator ids") {
  CHECK(GeneratorId{GeneratorId::Kind::cartan, 2}.to_string() == "I_22");
  CHECK(GeneratorId{GeneratorId::Kind::raising, 1}.to_string() == "I_1,2");
  CHECK(GeneratorId{GeneratorId::Kind::lowering, 2}.to_string() == "I_3,2");
  const FockSpace space(3, Lattice(1, 1));
  const auto g = build_generators(space, DeformationParams::generic(3));
  CHECK(g.ids().size() == 7);
  CHECK(g.dimension() == 8);
  CHECK(distance(g.get({GeneratorId::Kind::lowering, 2}), g.F(2)) == 0.0);
  CHECK_THROWS(g.E(3));
}

TEST_CASE("generators annihilate the vacuum") {
  const FockSpace space(3, Lattice(2, 1));
  const auto g = build_generators(space, DeformationParams::generic(3));
  std::vector<Complex> vac(space.dimension());
  vac[0] = 1.0;
  for (const auto& id : g.ids())
    for (const auto& v : g.get(id).apply(vac)) CHECK(v == Complex{});
}

TEST_CASE("two sorts on one site: hopping between the one-particle states") {
  const FockSpace space(2, Lattice(1, 1));
  const auto g = build_generators(space, DeformationParams::generic(2));
  // |1> = sort 1 occupied (basis 1), |2> = sort 2 occupied (basis 2).
  CHECK(std::abs(g.E(1).at(1, 2) - 1.0) < 1e-15);
  CHECK(std::abs(g.F(1).at(2, 1) - 1.0) < 1e-15);
  CHECK(g.E(1).nnz() == 1);
  CHECK(g.F(1).nnz() == 1);
}

TEST_CASE("undeformed generators are the bare fermion bilinears") {
  for (const auto& [n, w, h] : {std::tuple{2u, 3u, 1u}, {3u, 2u, 1u}, {2u, 2u, 2u}}) {
    const FockSpace space(n, Lattice(w, h));
    const auto g = build_generators(space, DeformationParams::uniform(n, 0.0, 0.0));
    const auto bare = bare_fermion_generators(space);
    for (const auto& id : g.ids()) CHECK(distance(g.get(id), bare.get(id)) < 1e-15);
    // Independent construction of one hopping term.
    SparseOperator e1(space.dimension());
    for (const auto& x : space.lattice().sites()) e1 += space.creator({1, x}) * space.annihilator({2, x});
    CHECK(distance(bare.E(1), e1) == 0.0);
  }
}

TEST_CASE("local cartan density is the number operator for both cuts") {
  const FockSpace space(3, Lattice(2, 1));
  const auto p = DeformationParams::generic(3);
  for (std::size_t k = 1; k <= 3; ++k) {
    for (const auto& x : space.lattice().sites()) {
      const auto n = space.number_operator({k, x});
      CHECK(distance(local_density_cartan(space, p, k, x, CutType::gamma), n) < 1e-14);
      CHECK(distance(local_density_cartan(space, p, k, x, CutType::delta), n) < 1e-14);
    }
  }
}

TEST_CASE("cartan generators") {
  const FockSpace space(3, Lattice(2, 1));
  const auto g = build_generators(space, DeformationParams::generic(3));
  for (std::size_t i = 1; i <= 3; ++i) {
    CHECK(g.H(i).is_diagonal());
    CHECK(g.H(i).trace().real() == doctest::Approx(2.0 * static_cast<double>(space.dimension()) / 2.0));
    for (std::size_t j = 1; j <= 3; ++j) CHECK(residual_norm(commutator(g.H(i), g.H(j))) == 0.0);
  }
}

TEST_CASE("total number commutes with every generator") {
  const FockSpace space(3, Lattice(2, 1));
  const auto g = build_generators(space, DeformationParams::generic(3));
  const auto total = g.H(1) + g.H(2) + g.H(3);
  for (const auto& id : g.ids()) CHECK(residual_norm(commutator(total, g.get(id))) < 1e-14);
}

TEST_CASE("raising generator shifts sort weights") {
  const FockSpace space(3, Lattice(2, 1));
  const auto g = build_generators(space, DeformationParams::generic(3));
  for (std::size_t k = 1; k <= 2; ++k) {
    // [H_k, E_k] = E_k and [H_{k+1}, E_k] = -E_k
    CHECK(distance(commutator(g.H(k), g.E(k)), g.E(k)) < 1e-14);
    CHECK(distance(commutator(g.H(k + 1), g.E(k)), -g.E(k)) < 1e-14);
    CHECK(distance(commutator(g.H(k), g.F(k)), -g.F(k)) < 1e-14);
  }
}

TEST_CASE("classical sl2 at nu = rho = 0") {
  const FockSpace space(2, Lattice(2, 1));
  const auto g = build_generators(space, DeformationParams::uniform(2, 0.0, 0.0));
  CHECK(space.dimension() == 16);
  CHECK(distance(commutator(g.E(1), g.F(1)), g.H(1) - g.H(2)) < 1e-14);
}

TEST_CASE("lowering is not the adjoint of raising once deformed") {
  const FockSpace space(2, Lattice(2, 1));
  const auto g = build_generators(space, DeformationParams::generic(2));
  CHECK(distance(g.F(1), g.E(1).adjoint()) == doctest::Approx(1.3460250270195466).epsilon(1e-12));
  const auto flat = build_generators(space, DeformationParams::uniform(2, 0.0, 0.0));
  CHECK(distance(flat.F(1), flat.E(1).adjoint()) == 0.0);
}

TEST_CASE("global generators are sums of the local densities") {
  const FockSpace space(3, Lattice(2, 1));
  const auto p = DeformationParams::generic(3);
  const auto g = build_generators(space, p);
  for (std::size_t k = 1; k <= 2; ++k) {
    SparseOperator e(space.dimension()), f(space.dimension());
    for (const auto& x : space.lattice().sites()) {
      e += local_density_raising(space, p, k, x);
      f += local_density_lowering(space, p, k, x);
    }
    CHECK(distance(g.E(k), e) == 0.0);
    CHECK(distance(g.F(k), f) == 0.0);
  }
}
