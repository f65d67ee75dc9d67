#include "qanyon/relations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qanyon {

namespace {

constexpr double pi = std::numbers::pi;

using Indices = std::vector<std::pair<std::string, long>>;
using Sites = std::vector<std::pair<std::string, std::string>>;

RelationInstance meta(std::string relation, std::string variant, Indices indices = {}, Sites sites = {}) {
  RelationInstance m;
  m.relation_id = std::move(relation);
  m.variant = std::move(variant);
  m.indices = std::move(indices);
  m.sites = std::move(sites);
  return m;
}

long as_long(std::size_t v) { return static_cast<long>(v); }

Complex phase(double radians) { return std::polar(1.0, radians); }

double max_of(std::initializer_list<double> values) { return *std::max_element(values.begin(), values.end()); }

}  // namespace

// ---------------------------------------------------------------------------
// CoefficientModel

CoefficientModel CoefficientModel::multiparameter(const DeformationParams& p) {
  CoefficientModel m;
  m.kind = Kind::multiparameter;
  m.nu = p.nu;
  m.rho = p.rho;
  return m;
}

CoefficientModel CoefficientModel::two_parameter(double nu, double rho) {
  CoefficientModel m;
  m.kind = Kind::two_parameter;
  m.nu = nu;
  m.common_rho = rho;
  return m;
}

CoefficientModel CoefficientModel::drinfeld_jimbo(double nu) {
  CoefficientModel m;
  m.kind = Kind::drinfeld_jimbo;
  m.nu = nu;
  return m;
}

double CoefficientModel::rho_at(std::size_t j) const {
  switch (kind) {
    case Kind::multiparameter:
      if (j < 1 || j > rho.size()) throw std::out_of_range("coefficient s_" + std::to_string(j) + " out of range");
      return rho[j - 1];
    case Kind::two_parameter:
      return common_rho;
    case Kind::drinfeld_jimbo:
      return 0.0;
  }
  return 0.0;
}

Complex CoefficientModel::q() const { return phase(pi * nu); }
Complex CoefficientModel::s(std::size_t j) const { return phase(pi * rho_at(j)); }

const char* CoefficientModel::label() const {
  switch (kind) {
    case Kind::multiparameter:
      return "multiparameter";
    case Kind::two_parameter:
      return "two-parameter";
    case Kind::drinfeld_jimbo:
      return "drinfeld-jimbo";
  }
  return "";
}

namespace {

// Same model with s_j replaced by s_j exp(i pi delta), as a multiparameter model.
CoefficientModel shift_rho(const CoefficientModel& m, std::size_t n, std::size_t j, double delta) {
  CoefficientModel out;
  out.kind = CoefficientModel::Kind::multiparameter;
  out.nu = m.nu;
  for (std::size_t k = 1; k < n; ++k) out.rho.push_back(m.rho_at(k) + (k == j ? delta : 0.0));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// SuiteRecorder

SuiteRecorder::SuiteRecorder(std::string suite, const VerifyOptions& options)
    : suite_(std::move(suite)), options_(options), start_(std::chrono::steady_clock::now()) {
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

void SuiteRecorder::check(RelationInstance m, const SparseOperator& residual, double scale) {
  m.suite = suite_;
  m.residual = residual_norm(residual);
  m.scale = scale;
  m.threshold = options_.tolerance * (1.0 + scale);
  m.status = m.residual < m.threshold ? Status::passed : Status::failed;
  instances_.push_back(std::move(m));
}

void SuiteRecorder::mutation(RelationInstance m, const SparseOperator& residual, const SparseOperator* unmutated) {
  if (!options_.mutations) return;
  m.suite = suite_;
  m.mutation = true;
  m.residual = residual_norm(residual);
  m.threshold = kMutationThreshold;
  if (unmutated != nullptr && distance(residual, *unmutated) <= kMutationThreshold) {
    m.status = Status::skipped;
    m.note = "mutation leaves the relation unchanged on this space";
    instances_.push_back(std::move(m));
    return;
  }
  m.status = m.residual > kMutationThreshold ? Status::passed : Status::failed;
  m.note = m.status == Status::passed ? "mutation detected" : "mutation NOT detected";
  instances_.push_back(std::move(m));
}

void SuiteRecorder::check_absolute(RelationInstance m, double deviation, double threshold) {
  m.suite = suite_;
  m.residual = deviation;
  m.threshold = threshold;
  m.status = deviation < threshold ? Status::passed : Status::failed;
  instances_.push_back(std::move(m));
}

void SuiteRecorder::record(RelationInstance m, Status status, std::string note, double residual) {
  m.suite = suite_;
  m.status = status;
  m.note = std::move(note);
  m.residual = residual;
  instances_.push_back(std::move(m));
}

void SuiteRecorder::check_pair(const RelationInstance& m, const SparseOperator& x, const SparseOperator& y,
                               Complex r, const SparseOperator* rhs, const SparseOperator& x_dag,
                               const SparseOperator& y_dag) {
  const double rhs_scale = rhs ? rhs->max_abs() : 0.0;
  const double scale = max_of({x.max_abs(), y.max_abs(), rhs_scale});

  SparseOperator residual = add_scaled(x * y, y * x, r);
  if (rhs) residual = residual - *rhs;
  check(m, residual, scale);

  SparseOperator conj_residual = add_scaled(y_dag * x_dag, x_dag * y_dag, std::conj(r));
  if (rhs) conj_residual = conj_residual - rhs->adjoint();
  RelationInstance c = m;
  c.conjugate = true;
  check(std::move(c), conj_residual, scale);
}

RelationReport SuiteRecorder::finish(const DeformationParams& params, std::size_t n_sorts, std::string lattice,
                                     std::size_t dimension) {
  RelationReport r;
  r.suite = suite_;
  r.params = params;
  r.n_sorts = n_sorts;
  r.lattice = std::move(lattice);
  r.dimension = dimension;
  r.instances = std::move(instances_);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  instances_.clear();
  return r;
}

// ---------------------------------------------------------------------------
// Fermions

RelationReport verify_fermion_suite(const FockSpace& space, const VerifyOptions& options) {
  SuiteRecorder rec("fermion", options);
  const std::size_t modes = space.mode_count();
  std::vector<SparseOperator> c, cd;
  for (std::size_t m = 0; m < modes; ++m) {
    c.push_back(space.annihilator(space.mode(m)));
    cd.push_back(c.back().adjoint());
  }
  const SparseOperator id = space.identity();
  auto bind = [&](std::size_t a, std::size_t b) {
    const ModeIndex ma = space.mode(a), mb = space.mode(b);
    return std::pair{Indices{{"i", as_long(ma.sort)}, {"j", as_long(mb.sort)}},
                     Sites{{"x", ma.site.to_string()}, {"y", mb.site.to_string()}}};
  };
  for (std::size_t a = 0; a < modes; ++a) {
    for (std::size_t b = a; b < modes; ++b) {
      auto [ix, st] = bind(a, b);
      rec.check(meta("eq6.cc", "fermion", ix, st), anticommutator(c[a], c[b]), 1.0);
      rec.check(meta("eq6.cdagcdag", "fermion", ix, st), anticommutator(cd[a], cd[b]), 1.0);
    }
  }
  for (std::size_t a = 0; a < modes; ++a) {
    for (std::size_t b = 0; b < modes; ++b) {
      auto [ix, st] = bind(a, b);
      const SparseOperator lhs = anticommutator(c[a], cd[b]);
      rec.check(meta("eq7", "fermion", ix, st), a == b ? lhs - id : lhs, 1.0);
    }
  }
  if (rec.mutations()) {
    auto [ix, st] = bind(0, 0);
    rec.mutation(meta("eq7", "rhs phase-shifted", ix, st),
                 anticommutator(c[0], cd[0]) - id.scaled(phase(pi * kMutationPhase)));
  }
  return rec.finish(DeformationParams::uniform(space.n_sorts(), 0.0, 0.0), space.n_sorts(),
                    space.lattice().to_string(), space.dimension());
}

// ---------------------------------------------------------------------------
// Anyons and quasi-anyons

SparseOperator ordered_number_phase(const FockSpace& space, double nu, std::size_t sort, const LatticeSite& x) {
  SparseOperator exponent = space.zero();
  for (const auto& y : space.lattice().sites()) {
    const int sign = order_sign(x, y);
    if (sign != 0) exponent = add_scaled(exponent, space.number_operator({sort, y}), static_cast<double>(sign));
  }
  return diagonal_power(pi * nu, exponent, 1.0);
}

namespace {

struct SitePair {
  std::size_t xi, yi;
  LatticeSite x, y;
};

std::vector<SitePair> site_pairs(const Lattice& lat, bool include_equal) {
  std::vector<SitePair> out;
  for (std::size_t a = 0; a < lat.site_count(); ++a)
    for (std::size_t b = 0; b < lat.site_count(); ++b)
      if (include_equal || a != b) out.push_back({a, b, lat.site(a), lat.site(b)});
  return out;
}

Sites xy(const SitePair& p) { return {{"x", p.x.to_string()}, {"y", p.y.to_string()}}; }

// Relations shared by anyons and quasi-anyons of one sort and one cut:
// braiding on distinct sites, nilpotency and the on-site anticommutator.
// The delta cut uses q^{-1}.
void same_mode_relations(SuiteRecorder& rec, const FockSpace& space, const OscillatorTable& t, double nu, CutType cut) {
  const double cut_nu = cut == CutType::gamma ? nu : -nu;
  const std::string variant = to_string(cut);
  const SparseOperator id = space.identity();
  for (std::size_t k = 1; k <= space.n_sorts(); ++k) {
    for (const auto& p : site_pairs(space.lattice(), false)) {
      const int sgn = order_sign(p.x, p.y);
      const auto& ax = t.get(k, p.xi, cut);
      const auto& ay = t.get(k, p.yi, cut);
      const auto& axd = t.dag(k, p.xi, cut);
      const auto& ayd = t.dag(k, p.yi, cut);
      const Indices ix{{"i", as_long(k)}};
      rec.check_pair(meta("eq11", variant, ix, xy(p)), ax, ay, phase(-pi * cut_nu * sgn), nullptr, axd, ayd);
      rec.check_pair(meta("eq12", variant, ix, xy(p)), ax, ayd, phase(pi * cut_nu * sgn), nullptr, axd, ay);
    }
    for (std::size_t x = 0; x < space.site_count(); ++x) {
      const auto& a = t.get(k, x, cut);
      const auto& ad = t.dag(k, x, cut);
      const Indices ix{{"i", as_long(k)}};
      const Sites st{{"x", space.lattice().site(x).to_string()}};
      rec.check_pair(meta("eq13.square", variant, ix, st), a, a, 0.0, nullptr, ad, ad);
      rec.check_pair(meta("eq13.anticomm", variant, ix, st), a, ad, 1.0, &id, ad, a);
    }
  }
  if (rec.mutations() && cut == CutType::gamma) {
    const auto& a = t.get(1, 0, cut);
    rec.mutation(meta("eq13.anticomm", variant + " rhs phase-shifted", {{"i", 1}}, {{"x", "(0,0)"}}),
                 anticommutator(a, t.dag(1, 0, cut)) - id.scaled(phase(pi * kMutationPhase)));
    if (space.site_count() > 1) {
      const int sgn = order_sign(space.lattice().site(0), space.lattice().site(1));
      const auto& ax = t.get(1, 0, cut);
      const auto& ay = t.get(1, 1, cut);
      rec.mutation(meta("eq11", variant + " q phase-shifted", {{"i", 1}},
                        {{"x", space.lattice().site(0).to_string()}, {"y", space.lattice().site(1).to_string()}}),
                   add_scaled(ax * ay, ay * ax, phase(-pi * (cut_nu + kMutationPhase) * sgn)));
    }
  }
}

}  // namespace

RelationReport verify_anyon_suite(const FockSpace& space, const DeformationParams& params,
                                  const VerifyOptions& options) {
  SuiteRecorder rec("anyon", options);
  const OscillatorTable t(space, params, OscillatorTable::Kind::anyon);
  const std::size_t n = space.n_sorts();
  const auto all_pairs = site_pairs(space.lattice(), true);

  for (const CutType cut : {CutType::gamma, CutType::delta}) {
    const std::string variant = to_string(cut);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        if (i == j) continue;
        for (const auto& p : all_pairs) {
          const Indices ix{{"i", as_long(i)}, {"j", as_long(j)}};
          rec.check_pair(meta("eq10.aa", variant, ix, xy(p)), t.get(i, p.xi, cut), t.get(j, p.yi, cut), 1.0,
                         nullptr, t.dag(i, p.xi, cut), t.dag(j, p.yi, cut));
          rec.check_pair(meta("eq10.aadag", variant, ix, xy(p)), t.get(i, p.xi, cut), t.dag(j, p.yi, cut), 1.0,
                         nullptr, t.dag(i, p.xi, cut), t.get(j, p.yi, cut));
        }
      }
    }
    same_mode_relations(rec, space, t, params.nu, cut);
  }

  const CutType g = CutType::gamma, d = CutType::delta;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const Indices ix{{"i", as_long(i)}, {"j", as_long(j)}};
      for (const auto& p : all_pairs) {
        rec.check_pair(meta("eq14", "gamma-delta", ix, xy(p)), t.get(i, p.xi, g), t.get(j, p.yi, d), 1.0, nullptr,
                       t.dag(i, p.xi, g), t.dag(j, p.yi, d));
        if (p.xi != p.yi) {
          rec.check_pair(meta("eq15", "gamma-delta", ix, xy(p)), t.get(i, p.xi, g), t.dag(j, p.yi, d), 1.0,
                         nullptr, t.dag(i, p.xi, g), t.get(j, p.yi, d));
        }
      }
      for (std::size_t x = 0; x < space.site_count(); ++x) {
        const LatticeSite site = space.lattice().site(x);
        const SparseOperator rhs = i == j ? ordered_number_phase(space, params.nu, i, site) : space.zero();
        rec.check_pair(meta("eq16", "gamma-delta", ix, {{"x", site.to_string()}}), t.get(i, x, g), t.dag(j, x, d),
                       1.0, &rhs, t.dag(i, x, g), t.get(j, x, d));
      }
    }
  }
  if (rec.mutations() && space.site_count() > 1) {
    const LatticeSite site = space.lattice().site(space.site_count() - 1);
    const std::size_t x = space.site_count() - 1;
    rec.mutation(meta("eq16", "gamma-delta q phase-shifted", {{"i", 1}, {"j", 1}}, {{"x", site.to_string()}}),
                 anticommutator(t.get(1, x, g), t.dag(1, x, d)) -
                     ordered_number_phase(space, params.nu + kMutationPhase, 1, site));
  }
  return rec.finish(params, n, space.lattice().to_string(), space.dimension());
}

namespace {

// Right side of the opposite-cut on-site anticommutator of quasi-anyons:
// q^{sum sgn(x-y) N_k(y)} prod_{j<k} s_j^{N_j} prod_{j>=k} s_j^{-N_{j+1}}.
SparseOperator quasi_cross_cut_rhs(const FockSpace& space, double nu, const std::vector<double>& rho, std::size_t k,
                                   const LatticeSite& x) {
  SparseOperator rhs = ordered_number_phase(space, nu, k, x);
  for (std::size_t j = 1; j < k; ++j) rhs = rhs * diagonal_power(pi * rho[j - 1], space.total_number(j), 1.0);
  for (std::size_t j = k; j < space.n_sorts(); ++j)
    rhs = rhs * diagonal_power(pi * rho[j - 1], space.total_number(j + 1), -1.0);
  return rhs;
}

}  // namespace

RelationReport verify_quasi_anyon_suite(const FockSpace& space, const DeformationParams& params,
                                        const VerifyOptions& options) {
  params.require_sorts(space.n_sorts());
  SuiteRecorder rec("quasi", options);
  const OscillatorTable t(space, params, OscillatorTable::Kind::quasi_anyon);
  const std::size_t n = space.n_sorts();
  const auto all_pairs = site_pairs(space.lattice(), true);
  const CutType g = CutType::gamma, d = CutType::delta;
  auto s_phase = [&](std::size_t j) { return pi * params.rho_at(j); };

  same_mode_relations(rec, space, t, params.nu, g);
  same_mode_relations(rec, space, t, params.nu, d);

  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& p : all_pairs) {
      const SparseOperator rhs =
          p.xi == p.yi ? quasi_cross_cut_rhs(space, params.nu, params.rho, k, p.x) : space.zero();
      rec.check_pair(meta("eq18", "gamma-delta", {{"k", as_long(k)}}, {{"x", p.x.to_string()}, {"z", p.y.to_string()}}),
                     t.get(k, p.xi, g), t.dag(k, p.yi, d), 1.0, &rhs, t.dag(k, p.xi, g), t.get(k, p.yi, d));
    }
  }

  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const Indices ix{{"i", as_long(i)}, {"j", as_long(j)}};
      for (const auto& p : all_pairs) {
        const auto& aig = t.get(i, p.xi, g);
        const auto& aigd = t.dag(i, p.xi, g);
        const auto& aid = t.get(i, p.xi, d);
        const auto& aidd = t.dag(i, p.xi, d);
        const auto& ajg = t.get(j, p.yi, g);
        const auto& ajgd = t.dag(j, p.yi, g);
        const auto& ajd = t.get(j, p.yi, d);
        const auto& ajdd = t.dag(j, p.yi, d);
        if (i > j) {
          rec.check_pair(meta("eq19.AA", "gamma", ix, xy(p)), aig, ajg, phase(-s_phase(j)), nullptr, aigd, ajgd);
          rec.check_pair(meta("eq19.AAdag", "gamma", ix, xy(p)), aig, ajgd, phase(s_phase(j)), nullptr, aigd, ajg);
          rec.check_pair(meta("eq20.AA", "delta", ix, xy(p)), aid, ajd, phase(s_phase(i - 1)), nullptr, aidd, ajdd);
          rec.check_pair(meta("eq20.AAdag", "delta", ix, xy(p)), aid, ajdd, phase(-s_phase(i - 1)), nullptr, aidd,
                         ajd);
          rec.check_pair(meta("eq22", "gamma-delta", ix, xy(p)), aig, ajd, phase(s_phase(i - 1) - s_phase(j)),
                         nullptr, aigd, ajdd);
          rec.check_pair(meta("eq23", "gamma-delta", ix, xy(p)), aig, ajdd, phase(s_phase(j) - s_phase(i - 1)),
                         nullptr, aigd, ajd);
        }
        if (i <= j) {
          rec.check_pair(meta("eq21.AA", "gamma-delta", ix, xy(p)), aig, ajd, 1.0, nullptr, aigd, ajdd);
        }
        if (i < j) {
          rec.check_pair(meta("eq21.AAdag", "gamma-delta", ix, xy(p)), aig, ajdd, 1.0, nullptr, aigd, ajd);
        }
        if (i == j && p.xi != p.yi) {
          rec.check_pair(meta("eq21.AAdag.same_sort", "gamma-delta", ix, xy(p)), aig, ajdd, 1.0, nullptr, aigd, ajd);
        }
      }
    }
  }

  if (rec.mutations() && n >= 2) {
    const Sites st{{"x", space.lattice().site(0).to_string()}, {"y", space.lattice().site(0).to_string()}};
    const double shift = pi * kMutationPhase;
    rec.mutation(meta("eq19.AA", "gamma s_j phase-shifted", {{"i", 2}, {"j", 1}}, st),
                 add_scaled(t.get(2, 0, g) * t.get(1, 0, g), t.get(1, 0, g) * t.get(2, 0, g),
                            phase(-s_phase(1) + shift)));
    rec.mutation(meta("eq22", "gamma-delta s_{i-1} phase-shifted", {{"i", 2}, {"j", 1}}, st),
                 add_scaled(t.get(2, 0, g) * t.get(1, 0, d), t.get(1, 0, d) * t.get(2, 0, g),
                            phase(s_phase(1) + shift - s_phase(1))));
    std::vector<double> shifted = params.rho;
    shifted[0] += kMutationPhase;
    rec.mutation(meta("eq18", "gamma-delta s_1 phase-shifted", {{"k", 1}},
                      {{"x", space.lattice().site(0).to_string()}, {"z", space.lattice().site(0).to_string()}}),
                 anticommutator(t.get(1, 0, g), t.dag(1, 0, d)) -
                     quasi_cross_cut_rhs(space, params.nu, shifted, 1, space.lattice().site(0)));
  }
  return rec.finish(params, n, space.lattice().to_string(), space.dimension());
}

// ---------------------------------------------------------------------------
// Algebra relations

CartanRelation cartan_relation(const GeneratorSet& gens, const CoefficientModel& model, std::size_t i) {
  const SparseOperator& e = gens.E(i);
  const SparseOperator& f = gens.F(i);
  const SparseOperator& hi = gens.H(i);
  const SparseOperator& hj = gens.H(i + 1);
  const double rho = model.rho_at(i);
  const double a = pi * (model.nu + rho);  // s_i q = e^{i a}
  const double b = pi * (model.nu - rho);  // s_i^{-1} q = e^{i b}
  const Complex den = phase(a) - phase(-b);
  const SparseOperator lhs = commutator(e, f);

  CartanRelation out;
  if (std::abs(den) > 1e-9) {
    const SparseOperator num = diagonal_power(a, hi, 1.0) * diagonal_power(b, hj, -1.0) -
                               diagonal_power(a, hj, 1.0) * diagonal_power(b, hi, -1.0);
    out.residual = add_scaled(lhs.scaled(den), num, -1.0);
    out.scale = max_of({e.max_abs(), f.max_abs(), num.max_abs()});
    return out;
  }
  // q^2 = 1: the q-number [h]_q tends to h q^{h-1}.
  const auto dh = (hi - hj).diagonal_entries();
  const auto dt = (hi + hj).diagonal_entries();
  std::vector<Complex> limit(dh.size());
  for (std::size_t k = 0; k < dh.size(); ++k) {
    const double h = dh[k].real();
    limit[k] = phase(pi * rho * (dt[k].real() - 1.0)) * h * phase(pi * model.nu * (h - 1.0));
  }
  const SparseOperator rhs = SparseOperator::diagonal(limit);
  out.residual = lhs - rhs;
  out.scale = max_of({e.max_abs(), f.max_abs(), rhs.max_abs()});
  out.limit_form = true;
  return out;
}

namespace {

// I_{a,b} in terms of simple generators, when it is one.
const SparseOperator* resolve(const GeneratorSet& g, std::size_t a, std::size_t b) {
  if (a == b) return &g.H(a);
  if (b == a + 1) return &g.E(a);
  if (a == b + 1) return &g.F(b);
  return nullptr;
}

struct Term {
  double sign;
  std::size_t a, b;
};

// Checks [H_i, X] = sum of resolved terms, or records a skip naming the unresolved generator.
void check_cartan_action(SuiteRecorder& rec, const GeneratorSet& g, RelationInstance m, const SparseOperator& x,
                         std::size_t i, const std::vector<Term>& terms) {
  SparseOperator rhs(g.dimension());
  for (const auto& t : terms) {
    const SparseOperator* op = resolve(g, t.a, t.b);
    if (!op) {
      rec.record(std::move(m), Status::skipped,
                 "skipped: non-simple generator I_" + std::to_string(t.a) + "," + std::to_string(t.b));
      return;
    }
    rhs = add_scaled(rhs, *op, t.sign);
  }
  const double scale = max_of({g.H(i).max_abs(), x.max_abs(), rhs.max_abs()});
  rec.check(std::move(m), commutator(g.H(i), x) - rhs, scale);
}

}  // namespace

RelationReport verify_algebra_suite(const GeneratorSet& g, const CoefficientModel& model,
                                    const VerifyOptions& options) {
  SuiteRecorder rec("algebra", options);
  const std::size_t n = g.n;
  const std::string variant = model.label();

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      rec.check(meta("eq1.line1", variant, {{"i", as_long(i)}, {"j", as_long(j)}}), commutator(g.H(i), g.H(j)),
                std::max(g.H(i).max_abs(), g.H(j).max_abs()));

  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      const Indices ix{{"i", as_long(i)}, {"j", as_long(j)}};
      std::vector<Term> line2, line3;
      if (i == j) line2.push_back({1.0, i, j + 1});
      if (i == j + 1) line2.push_back({-1.0, j, i});
      if (i == j + 1) line3.push_back({1.0, i, j});
      if (i == j) line3.push_back({-1.0, j + 1, i});
      check_cartan_action(rec, g, meta("eq1.line2", variant, ix), g.E(j), i, line2);
      check_cartan_action(rec, g, meta("eq1.line3", variant, ix), g.F(j), i, line3);
    }
  }

  if (n < 4) rec.record(meta("eq1.line4", variant), Status::not_applicable, "requires n >= 4");
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      const Indices ix{{"i", as_long(i)}, {"j", as_long(j)}};
      rec.check(meta("eq1.line4.raising", variant, ix), commutator(g.E(i), g.E(j)),
                std::max(g.E(i).max_abs(), g.E(j).max_abs()));
      rec.check(meta("eq1.line4.lowering", variant, ix), commutator(g.F(i), g.F(j)),
                std::max(g.F(i).max_abs(), g.F(j).max_abs()));
    }
  }

  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      const Indices ix{{"i", as_long(i)}, {"j", as_long(j)}};
      if (i == j) {
        const CartanRelation rel = cartan_relation(g, model, i);
        RelationInstance m = meta("eq1.line5", variant, ix);
        if (rel.limit_form) m.note = "degenerate denominator: compared with the q^2 = 1 limit";
        rec.check(std::move(m), rel.residual, rel.scale);
      } else if (j + 1 == i) {
        rec.record(meta("eq1.line5.excluded", variant, ix), Status::informational,
                   "j = i-1 is excluded from the relation; plain commutator norm reported",
                   residual_norm(commutator(g.E(i), g.F(j))));
      } else {
        rec.check(meta("eq1.line5", variant, ix), commutator(g.E(i), g.F(j)),
                  std::max(g.E(i).max_abs(), g.F(j).max_abs()));
      }
    }
  }

  if (n < 3) {
    rec.record(meta("eq1.line6", variant), Status::not_applicable, "requires n >= 3");
  }
  for (std::size_t i = 2; i < n; ++i) {
    const Complex r = model.s(i) / model.s(i - 1);
    rec.check(meta("eq1.line6", variant, {{"i", as_long(i)}}), deformed_commutator(g.E(i), g.F(i - 1), r),
              std::max(g.E(i).max_abs(), g.F(i - 1).max_abs()));
  }

  for (std::size_t k = 1; k < n; ++k) {
    rec.record(meta("adjoint_pair", variant, {{"k", as_long(k)}}), Status::informational,
               "max |I_{k+1,k} - (I_{k,k+1})^dag|", distance(g.F(k), g.E(k).adjoint()));
  }

  if (rec.mutations() && n >= 2) {
    const CartanRelation bad = cartan_relation(g, shift_rho(model, n, 1, kMutationPhase), 1);
    const CartanRelation good = cartan_relation(g, model, 1);
    rec.mutation(meta("eq1.line5", std::string(variant) + " s_1 phase-shifted", {{"i", 1}, {"j", 1}}), bad.residual,
                 &good.residual);
    if (n >= 3) {
      const Complex r0 = model.s(2) / model.s(1);
      const SparseOperator unmutated = deformed_commutator(g.E(2), g.F(1), r0);
      rec.mutation(meta("eq1.line6", std::string(variant) + " coefficient phase-shifted", {{"i", 2}}),
                   deformed_commutator(g.E(2), g.F(1), r0 * phase(pi * kMutationPhase)), &unmutated);
    }
  }
  return rec.finish(DeformationParams{model.nu, [&] {
                      std::vector<double> r;
                      for (std::size_t k = 1; k < n; ++k) r.push_back(model.rho_at(k));
                      return r;
                    }()},
                    n, "", g.dimension());
}

RelationReport verify_serre_suite(const GeneratorSet& g, const CoefficientModel& model,
                                  const VerifyOptions& options) {
  SuiteRecorder rec("serre", options);
  const std::size_t n = g.n;
  const std::string variant = model.label();
  const Complex q = model.q();
  if (n < 3) {
    rec.record(meta("eq2", variant), Status::not_applicable, "requires n >= 3");
  }
  auto serre = [](const SparseOperator& x, const SparseOperator& y, Complex r1, Complex r2) {
    return deformed_commutator(deformed_commutator(x, y, r1), x, r2);
  };
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    const Indices ix{{"i", as_long(i)}};
    const Complex sn = model.s(i + 1);
    const Complex si = model.s(i);
    const double e_scale = std::max(g.E(i).max_abs(), g.E(i + 1).max_abs());
    const double f_scale = std::max(g.F(i).max_abs(), g.F(i + 1).max_abs());
    rec.check(meta("eq2.serre1", variant, ix), serre(g.E(i), g.E(i + 1), sn * q, q / sn), e_scale);
    rec.check(meta("eq2.serre2", variant, ix), serre(g.E(i + 1), g.E(i), q / sn, sn * q), e_scale);
    rec.check(meta("eq2.serre3", variant, ix), serre(g.F(i), g.F(i + 1), q / si, si * q), f_scale);
    rec.check(meta("eq2.serre4", variant, ix), serre(g.F(i + 1), g.F(i), si * q, q / si), f_scale);
  }
  if (rec.mutations() && n >= 3) {
    const Complex sn = model.s(2);
    const Complex si = model.s(1);
    const SparseOperator serre1 = serre(g.E(1), g.E(2), sn * q, q / sn);
    const SparseOperator serre3 = serre(g.F(1), g.F(2), q / si, si * q);
    rec.mutation(meta("eq2.serre1", std::string(variant) + " parameters swapped", {{"i", 1}}),
                 serre(g.E(1), g.E(2), q / sn, sn * q), &serre1);
    const Complex qm = q * phase(pi * kMutationPhase);
    rec.mutation(meta("eq2.serre3", std::string(variant) + " q phase-shifted", {{"i", 1}}),
                 serre(g.F(1), g.F(2), qm / si, si * qm), &serre3);
  }
  return rec.finish(DeformationParams{model.nu, [&] {
                      std::vector<double> r;
                      for (std::size_t k = 1; k < n; ++k) r.push_back(model.rho_at(k));
                      return r;
                    }()},
                    n, "", g.dimension());
}

// ---------------------------------------------------------------------------
// Reductions

namespace {

void absorb_as(RelationReport& into, RelationReport part, const std::string& variant) {
  for (auto& inst : part.instances) inst.variant = variant + (inst.mutation ? " (mutation)" : "");
  into.absorb(part);
}

}  // namespace

RelationReport verify_reduction_suite(const FockSpace& space, double nu, double common_rho,
                                      const VerifyOptions& options) {
  const std::size_t n = space.n_sorts();
  const auto start = std::chrono::steady_clock::now();
  SuiteRecorder rec("reduction", options);

  // Entrywise comparisons are recorded first; algebra sub-suites are appended below.
  const DeformationParams dj = DeformationParams::uniform(n, nu, 0.0);
  {
    const OscillatorTable quasi(space, dj, OscillatorTable::Kind::quasi_anyon);
    const OscillatorTable plain(space, dj, OscillatorTable::Kind::anyon);
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t x = 0; x < space.site_count(); ++x) {
        for (const CutType cut : {CutType::gamma, CutType::delta}) {
          rec.check_absolute(meta("reduction.quasi_equals_anyon", to_string(cut), {{"k", as_long(k)}},
                                  {{"x", space.lattice().site(x).to_string()}}),
                             distance(quasi.get(k, x, cut), plain.get(k, x, cut)), kEntrywiseTolerance);
        }
      }
    }
  }
  const DeformationParams classical = DeformationParams::uniform(n, 0.0, 0.0);
  const GeneratorSet classical_gens = build_generators(space, classical);
  const GeneratorSet bare = bare_fermion_generators(space);
  for (const auto& id : classical_gens.ids()) {
    RelationInstance m = meta("reduction.classical_generators", "classical");
    m.note = id.to_string();
    m.indices = {{"k", as_long(id.k)}};
    rec.check_absolute(std::move(m), distance(classical_gens.get(id), bare.get(id)), kEntrywiseTolerance);
  }

  RelationReport report = rec.finish(DeformationParams::uniform(n, nu, common_rho), n, space.lattice().to_string(),
                                     space.dimension());

  const GeneratorSet two = build_generators(space, DeformationParams::uniform(n, nu, common_rho));
  const CoefficientModel two_model = CoefficientModel::two_parameter(nu, common_rho);
  absorb_as(report, verify_algebra_suite(two, two_model, options), "two-parameter");
  absorb_as(report, verify_serre_suite(two, two_model, options), "two-parameter");

  const GeneratorSet dj_gens = build_generators(space, dj);
  const CoefficientModel dj_model = CoefficientModel::drinfeld_jimbo(nu);
  absorb_as(report, verify_algebra_suite(dj_gens, dj_model, options), "drinfeld-jimbo");
  absorb_as(report, verify_serre_suite(dj_gens, dj_model, options), "drinfeld-jimbo");

  const CoefficientModel classical_model = CoefficientModel::drinfeld_jimbo(0.0);
  absorb_as(report, verify_algebra_suite(classical_gens, classical_model, options), "classical");
  absorb_as(report, verify_algebra_suite(bare, classical_model, options), "classical-bare-fermion");

  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qanyon
