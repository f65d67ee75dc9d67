#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <set>

#include "dense_oracle.hpp"
#include "qanyon/relations.hpp"

using namespace qanyon;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<RelationInstance> by_id(const RelationReport& r, const std::string& id) {
  std::vector<RelationInstance> out;
  for (const auto& inst : r.instances)
    if (inst.relation_id == id) out.push_back(inst);
  return out;
}

std::size_t checked(const RelationReport& r, const std::string& id) {
  std::size_t k = 0;
  for (const auto& inst : by_id(r, id)) k += !inst.mutation;
  return k;
}

bool all_mutations_detected(const RelationReport& r) {
  const auto s = r.summary();
  return s.mutations > 0 && s.mutations == s.mutations_detected;
}

double min_mutation_residual(const RelationReport& r) {
  double m = 1e300;
  for (const auto& inst : r.instances)
    if (inst.mutation && inst.status != Status::skipped) m = std::min(m, inst.residual);
  return m;
}

}  // namespace

TEST_CASE("fermion suite on one mode has the three basic instances") {
  const FockSpace space(1, Lattice(1, 1));
  const auto r = verify_fermion_suite(space);
  CHECK(r.instances.size() == 3);
  CHECK(r.ok());
  CHECK(r.summary().passed == 3);
  CHECK(r.dimension == 2);
}

TEST_CASE("fermion suite on larger spaces") {
  for (const auto& [n, w] : {std::pair{2u, 2u}, {3u, 2u}, {4u, 1u}}) {
    const FockSpace space(n, Lattice(w, 1));
    const auto r = verify_fermion_suite(space, {kDefaultTolerance, true});
    CHECK(r.ok());
    const std::size_t modes = space.mode_count();
    CHECK(checked(r, "eq6.cc") == modes * (modes + 1) / 2);
    CHECK(checked(r, "eq7") == modes * modes);
    CHECK(all_mutations_detected(r));
  }
}

TEST_CASE("pass rule") {
  SuiteRecorder rec("demo", {kDefaultTolerance, true});
  const SparseOperator small = SparseOperator::identity(2).scaled(1.5e-10);
  rec.check({.relation_id = "a"}, small, 0.0);
  rec.check({.relation_id = "b"}, small, 1.0);
  rec.mutation({.relation_id = "c"}, SparseOperator::identity(2).scaled(2e-3));
  rec.mutation({.relation_id = "d"}, SparseOperator::identity(2).scaled(5e-4));
  rec.check_absolute({.relation_id = "e"}, 1e-13, kEntrywiseTolerance);
  const SparseOperator same = SparseOperator::identity(2).scaled(1e-4);
  rec.mutation({.relation_id = "f"}, same, &same);
  const auto r = rec.finish(DeformationParams::generic(2), 2, "1x1", 2);
  CHECK(r.instances[0].status == Status::failed);
  CHECK(r.instances[1].status == Status::passed);
  CHECK(r.instances[1].threshold == doctest::Approx(2e-10));
  CHECK(r.instances[2].status == Status::passed);
  CHECK(r.instances[3].status == Status::failed);
  CHECK(r.instances[4].status == Status::passed);
  CHECK(r.instances[5].status == Status::skipped);
  const auto s = r.summary();
  CHECK(s.total == 6);
  CHECK(s.skipped == 1);
  CHECK(s.failed == 2);
  CHECK(s.mutations == 2);
  CHECK(s.mutations_detected == 1);
  CHECK(s.max_residual == doctest::Approx(1.5e-10));
  CHECK_FALSE(r.ok());
}

TEST_CASE("summary tallies match the instance list") {
  const FockSpace space(3, Lattice(2, 1));
  const auto r = verify_algebra_suite(build_generators(space, DeformationParams::generic(3)),
                                      CoefficientModel::multiparameter(DeformationParams::generic(3)), {1e-10, true});
  const auto s = r.summary();
  std::size_t counted = 0;
  for (Status st : {Status::passed, Status::failed, Status::skipped, Status::not_applicable, Status::informational}) {
    counted += static_cast<std::size_t>(
        std::count_if(r.instances.begin(), r.instances.end(), [&](const auto& i) { return i.status == st; }));
  }
  CHECK(counted == s.total);
  CHECK(s.total == r.instances.size());
  CHECK(s.passed + s.failed + s.skipped + s.not_applicable + s.informational == s.total);
}

TEST_CASE("anyon suite on 2 sorts, 1x3") {
  const FockSpace space(2, Lattice(3, 1));
  CHECK(space.dimension() == 64);
  const auto r = verify_anyon_suite(space, DeformationParams::uniform(2, 0.3, 0.0), {kDefaultTolerance, true});
  CHECK(r.ok());
  CHECK(all_mutations_detected(r));
  for (const char* id : {"eq10.aa", "eq10.aadag", "eq11", "eq12", "eq13.square", "eq13.anticomm", "eq14", "eq15",
                         "eq16"})
    CHECK_MESSAGE(!by_id(r, id).empty(), id);
  std::set<std::string> variants;
  for (const auto& i : by_id(r, "eq11")) variants.insert(i.variant);
  CHECK(variants.count("gamma") == 1);
  CHECK(variants.count("delta") == 1);
  CHECK(std::any_of(r.instances.begin(), r.instances.end(), [](const auto& i) { return i.conjugate; }));
}

TEST_CASE("opposite-cut on-site anticommutator against an independent diagonal") {
  const FockSpace space(2, Lattice(3, 1));
  const double nu = 0.3;
  const auto p = DeformationParams::uniform(2, nu, 0.0);
  const std::size_t sites = space.site_count();
  for (std::size_t sort = 1; sort <= 2; ++sort) {
    for (std::size_t xi = 0; xi < sites; ++xi) {
      const auto x = space.lattice().site(xi);
      const auto expected = oracle::phase_diagonal(space.dimension(), [&](std::uint64_t b) {
        double e = 0.0;
        for (std::size_t y = 0; y < sites; ++y) {
          const double occ = static_cast<double>(b >> ((sort - 1) * sites + y) & 1U);
          if (y < xi) e += occ;
          if (y > xi) e -= occ;
        }
        return pi * nu * e;
      });
      CHECK(oracle::distance(expected, ordered_number_phase(space, nu, sort, x)) < 1e-14);
      const auto lhs = anticommutator(anyon(space, p, sort, x, CutType::gamma),
                                      anyon(space, p, sort, x, CutType::delta).adjoint());
      CHECK(oracle::distance(expected, lhs) < 1e-13);
    }
  }
}

TEST_CASE("quasi-anyon suite exhaustive at generic parameters") {
  const FockSpace space(3, Lattice(2, 1));
  const auto r = verify_quasi_anyon_suite(space, DeformationParams::generic(3), {kDefaultTolerance, true});
  CHECK(r.ok());
  CHECK(r.summary().max_residual < 1e-10);
  CHECK(all_mutations_detected(r));
  CHECK(min_mutation_residual(r) > kMutationThreshold);
  for (const char* id : {"eq18", "eq19.AA", "eq19.AAdag", "eq20.AA", "eq20.AAdag", "eq21.AA", "eq21.AAdag",
                         "eq22", "eq23", "eq11", "eq12", "eq13.square", "eq13.anticomm"})
    CHECK_MESSAGE(!by_id(r, id).empty(), id);
  // ordered sort pairs i > j on every ordered site pair, both relation and conjugate
  CHECK(checked(r, "eq22") == 3 * 4 * 2);
}

TEST_CASE("quasi-anyon suite at rho = 0 agrees with the anyon suite on shared relations") {
  const FockSpace space(3, Lattice(2, 1));
  const auto p = DeformationParams::uniform(3, 0.3, 0.0);
  const auto quasi = verify_quasi_anyon_suite(space, p);
  const auto plain = verify_anyon_suite(space, p);
  for (const char* id : {"eq11", "eq12", "eq13.square", "eq13.anticomm"}) {
    const auto a = by_id(quasi, id);
    const auto b = by_id(plain, id);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].indices == b[k].indices);
      CHECK(a[k].sites == b[k].sites);
      CHECK(a[k].residual == b[k].residual);
      CHECK(a[k].status == b[k].status);
    }
  }
}

TEST_CASE("cross-cut sort exchange coefficient for sorts (3,1)") {
  const FockSpace space(3, Lattice(2, 1));
  const auto p = DeformationParams::generic(3);
  const Complex coeff = std::conj(p.s(1)) * p.s(2);
  for (const auto& x : space.lattice().sites()) {
    for (const auto& y : space.lattice().sites()) {
      const auto a3 = quasi_anyon(space, p, 3, x, CutType::gamma);
      const auto a1 = quasi_anyon(space, p, 1, y, CutType::delta);
      CHECK(residual_norm(deformed_commutator(a3, a1, -coeff)) < 1e-13);
      CHECK(residual_norm(deformed_commutator(a3, a1, -std::conj(coeff))) > 1e-3);
    }
  }
  const auto r = verify_quasi_anyon_suite(space, p);
  for (const auto& inst : by_id(r, "eq22")) CHECK(inst.status == Status::passed);
}

TEST_CASE("algebra suite at generic parameters") {
  for (const auto& [n, w] : {std::pair{2u, 2u}, {3u, 2u}, {4u, 1u}}) {
    const FockSpace space(n, Lattice(w, 1));
    const auto p = DeformationParams::generic(n);
    const auto r = verify_algebra_suite(build_generators(space, p), CoefficientModel::multiparameter(p),
                                        {kDefaultTolerance, true});
    CHECK(r.ok());
    if (w > 1) CHECK(all_mutations_detected(r));
    CHECK(min_mutation_residual(r) > kMutationThreshold);
    CHECK(checked(r, "eq1.line5") == (n - 1) * (n - 1) - (n - 2));
    if (n < 3) CHECK(by_id(r, "eq1.line6").front().status == Status::not_applicable);
    if (n >= 3) CHECK(checked(r, "eq1.line6") == n - 2);
    if (n < 4) CHECK(by_id(r, "eq1.line4").front().status == Status::not_applicable);
    if (n == 4) CHECK(by_id(r, "eq1.line4.raising").size() == 1);
  }
}

TEST_CASE("excluded j = i-1 instance is informational with a known value") {
  const FockSpace space(3, Lattice(2, 1));
  const auto p = DeformationParams::generic(3);
  const auto r = verify_algebra_suite(build_generators(space, p), CoefficientModel::multiparameter(p));
  const auto ex = by_id(r, "eq1.line5.excluded");
  REQUIRE(ex.size() == 1);
  CHECK(ex.front().status == Status::informational);
  CHECK(ex.front().residual == doctest::Approx(0.18821662663702882).epsilon(1e-10));
  const FockSpace single(3, Lattice(1, 1));
  const auto r1 = verify_algebra_suite(build_generators(single, p), CoefficientModel::multiparameter(p));
  CHECK(by_id(r1, "eq1.line5.excluded").front().residual < 1e-14);
}

TEST_CASE("cartan relation: cleared denominator and limit form") {
  const FockSpace space(2, Lattice(2, 1));
  const auto p = DeformationParams::generic(2);
  const auto g = build_generators(space, p);
  const auto rel = cartan_relation(g, CoefficientModel::multiparameter(p), 1);
  CHECK_FALSE(rel.limit_form);
  CHECK(residual_norm(rel.residual) < 1e-12);
  CHECK(rel.scale > 0.1);
  for (double nu : {0.0, 1.0, 2.0}) {
    const auto pn = DeformationParams::uniform(2, nu, 0.3);
    const auto lim = cartan_relation(build_generators(space, pn), CoefficientModel::multiparameter(pn), 1);
    CHECK(lim.limit_form);
    CHECK(residual_norm(lim.residual) < 1e-12);
  }
  // Off-generic rho still fine where q^2 != 1.
  const auto odd = DeformationParams::uniform(2, 0.3, 0.7);
  CHECK(residual_norm(cartan_relation(build_generators(space, odd), CoefficientModel::multiparameter(odd), 1)
                          .residual) < 1e-12);
}

TEST_CASE("cartan relation at the classical point is the gl_n commutator") {
  const FockSpace space(3, Lattice(2, 1));
  const auto g = bare_fermion_generators(space);
  for (std::size_t i = 1; i <= 2; ++i) {
    CHECK(distance(commutator(g.E(i), g.F(i)), g.H(i) - g.H(i + 1)) < 1e-14);
    CHECK(residual_norm(cartan_relation(g, CoefficientModel::drinfeld_jimbo(0.0), i).residual) < 1e-14);
  }
}

TEST_CASE("line 5 mutation is detected") {
  const FockSpace space(2, Lattice(2, 1));
  const auto p = DeformationParams::generic(2);
  const auto g = build_generators(space, p);
  auto shifted = p;
  shifted.rho[0] += kMutationPhase;
  CHECK(residual_norm(cartan_relation(g, CoefficientModel::multiparameter(shifted), 1).residual) > 1e-3);
}

TEST_CASE("mutations that cannot act on a single site are skipped") {
  const FockSpace space(4, Lattice(1, 1));
  const auto p = DeformationParams::generic(4);
  const auto r = verify_algebra_suite(build_generators(space, p), CoefficientModel::multiparameter(p),
                                      {kDefaultTolerance, true});
  CHECK(r.ok());
  for (const auto& i : r.instances)
    if (i.mutation) CHECK(i.status == Status::skipped);
  CHECK(r.summary().mutations == 0);
}

TEST_CASE("Serre suite") {
  for (const auto& [n, w] : {std::pair{3u, 2u}, {4u, 1u}}) {
    const FockSpace space(n, Lattice(w, 1));
    const auto p = DeformationParams::generic(n);
    const auto r = verify_serre_suite(build_generators(space, p), CoefficientModel::multiparameter(p),
                                      {kDefaultTolerance, true});
    CHECK(r.ok());
    if (w > 1) CHECK(all_mutations_detected(r));
    CHECK(min_mutation_residual(r) > kMutationThreshold);
    for (const char* id : {"eq2.serre1", "eq2.serre2", "eq2.serre3", "eq2.serre4"}) {
      const auto inst = by_id(r, id);
      CHECK_MESSAGE(!inst.empty(), id);
      for (const auto& i : inst)
        if (!i.mutation) CHECK(i.status == Status::passed);
    }
  }
  const FockSpace two(2, Lattice(2, 1));
  const auto p2 = DeformationParams::generic(2);
  const auto r2 = verify_serre_suite(build_generators(two, p2), CoefficientModel::multiparameter(p2));
  REQUIRE(r2.instances.size() == 1);
  CHECK(r2.instances.front().status == Status::not_applicable);
}

TEST_CASE("wrong coefficient model fails the algebra suite") {
  const FockSpace space(3, Lattice(2, 1));
  const auto p = DeformationParams::generic(3);
  const auto g = build_generators(space, p);
  CHECK_FALSE(verify_algebra_suite(g, CoefficientModel::drinfeld_jimbo(0.3)).ok());
  CHECK_FALSE(verify_serre_suite(g, CoefficientModel::two_parameter(0.3, 0.2)).ok());
}

TEST_CASE("reduction suite") {
  for (const auto& [n, w] : {std::pair{3u, 2u}, {2u, 2u}}) {
    const FockSpace space(n, Lattice(w, 1));
    const auto r = verify_reduction_suite(space, 0.3, 0.21, {kDefaultTolerance, true});
    CHECK(r.ok());
    CHECK(all_mutations_detected(r));
    std::set<std::string> variants;
    for (const auto& i : r.instances) variants.insert(i.variant);
    CHECK(variants.count("two-parameter") == 1);
    CHECK(variants.count("drinfeld-jimbo") == 1);
    CHECK(variants.count("classical-bare-fermion") == 1);
    for (const auto& i : by_id(r, "reduction.quasi_equals_anyon")) CHECK(i.residual <= kEntrywiseTolerance);
  }
  const FockSpace space(3, Lattice(2, 1));
  CHECK(verify_reduction_suite(space, 0.0).ok());
  CHECK(verify_reduction_suite(space, 1.0).ok());
}

TEST_CASE("coefficient models") {
  const auto p = DeformationParams::generic(3);
  const auto multi = CoefficientModel::multiparameter(p);
  CHECK(std::string(multi.label()) == "multiparameter");
  CHECK(multi.rho_at(2) == doctest::Approx(0.23));
  const auto two = CoefficientModel::two_parameter(0.3, 0.21);
  CHECK(std::string(two.label()) == "two-parameter");
  CHECK(std::abs(two.s(1) - two.s(5)) == 0.0);
  const auto dj = CoefficientModel::drinfeld_jimbo(0.3);
  CHECK(std::string(dj.label()) == "drinfeld-jimbo");
  CHECK(dj.s(2) == Complex{1.0, 0.0});
  CHECK(std::abs(dj.q() - p.q()) < 1e-15);
}

TEST_CASE("reports are deterministic") {
  const FockSpace space(3, Lattice(2, 1));
  const auto p = DeformationParams::generic(3);
  const auto a = verify_quasi_anyon_suite(space, p, {kDefaultTolerance, true});
  const auto b = verify_quasi_anyon_suite(space, p, {kDefaultTolerance, true});
  REQUIRE(a.instances.size() == b.instances.size());
  for (std::size_t k = 0; k < a.instances.size(); ++k) {
    CHECK(a.instances[k].relation_id == b.instances[k].relation_id);
    CHECK(a.instances[k].indices == b.instances[k].indices);
    CHECK(a.instances[k].sites == b.instances[k].sites);
    CHECK(a.instances[k].residual == b.instances[k].residual);
  }
}

TEST_CASE("verdicts survive doubling the lattice") {
  const auto p = DeformationParams::generic(3);
  for (unsigned w : {1u, 2u}) {
    const FockSpace space(3, Lattice(w, 1));
    const auto g = build_generators(space, p);
    CHECK(verify_quasi_anyon_suite(space, p).ok());
    CHECK(verify_algebra_suite(g, CoefficientModel::multiparameter(p)).ok());
    CHECK(verify_serre_suite(g, CoefficientModel::multiparameter(p)).ok());
  }
  const FockSpace square(2, Lattice(2, 2));
  CHECK(verify_anyon_suite(square, DeformationParams::uniform(2, 0.3, 0.0)).ok());
}

TEST_CASE("every relation family is covered") {
  const FockSpace space(4, Lattice(1, 1));
  const auto p = DeformationParams::generic(4);
  const auto g = build_generators(space, p);
  const auto alg = verify_algebra_suite(g, CoefficientModel::multiparameter(p));
  for (const char* id : {"eq1.line1", "eq1.line2", "eq1.line3", "eq1.line4.raising", "eq1.line4.lowering",
                         "eq1.line5", "eq1.line6"})
    CHECK_MESSAGE(!by_id(alg, id).empty(), id);
  const auto serre = verify_serre_suite(g, CoefficientModel::multiparameter(p));
  for (const char* id : {"eq2.serre1", "eq2.serre2", "eq2.serre3", "eq2.serre4"})
    CHECK_MESSAGE(by_id(serre, id).size() == 2, id);
}
