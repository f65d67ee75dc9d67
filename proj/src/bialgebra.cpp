#include "qanyon/bialgebra.hpp"

#include <chrono>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qanyon {

namespace {

constexpr double pi = std::numbers::pi;

using Kind = GeneratorId::Kind;

TensorTerm term(Factor a, Factor b) { return {Complex{1.0, 0.0}, {std::move(a), std::move(b)}}; }

std::string dims_label(std::size_t dim, std::size_t power) {
  return "(" + std::to_string(dim) + ")^" + std::to_string(power);
}

bool exceeds(std::size_t dim, std::size_t power, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t p = 0; p < power; ++p) {
    if (total > cap / dim) return true;
    total *= dim;
  }
  return total > cap;
}

}  // namespace

TensorOperator make_tensor(std::span<const SparseOperator> factors) {
  if (factors.empty()) throw std::invalid_argument("tensor product needs at least one factor");
  TensorOperator t{factors[0], factors.size(), factors[0].dimension()};
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i].dimension() != t.factor_dimension) throw std::invalid_argument("tensor factors differ in dimension");
    t.op = kron(t.op, factors[i]);
  }
  return t;
}

TensorExpr coproduct_terms(const GeneratorId& id, const DeformationParams& params) {
  const std::size_t k = id.k;
  const double nu = params.nu;
  switch (id.kind) {
    case Kind::cartan:
      return {term(Factor::of(id), Factor::one()), term(Factor::one(), Factor::of(id))};
    case Kind::raising: {
      const double rho = params.rho_at(k);
      // (s_k^{-1} q)^{-I_kk} q^{(I_kk + I_{k+1,k+1})/2}
      Factor right = Factor::exp({{k, -(nu - rho)}, {k, nu / 2}, {k + 1, nu / 2}});
      // (s_k q)^{I_kk} q^{-(I_kk + I_{k+1,k+1})/2}
      Factor left = Factor::exp({{k, nu + rho}, {k, -nu / 2}, {k + 1, -nu / 2}});
      return {term(Factor::of(id), right), term(left, Factor::of(id))};
    }
    case Kind::lowering: {
      const double rho = params.rho_at(k);
      // (s_k q)^{I_{k+1,k+1}} q^{-(I_kk + I_{k+1,k+1})/2}
      Factor right = Factor::exp({{k + 1, nu + rho}, {k, -nu / 2}, {k + 1, -nu / 2}});
      // (s_k^{-1} q)^{-I_{k+1,k+1}} q^{(I_kk + I_{k+1,k+1})/2}
      Factor left = Factor::exp({{k + 1, -(nu - rho)}, {k, nu / 2}, {k + 1, nu / 2}});
      return {term(Factor::of(id), right), term(left, Factor::of(id))};
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

TensorExpr coproduct_of(const Factor& f, const DeformationParams& params) {
  switch (f.kind) {
    case Factor::Kind::identity:
      return {term(Factor::one(), Factor::one())};
    case Factor::Kind::exponential:
      return {term(f, f)};
    case Factor::Kind::generator:
      return coproduct_terms(f.generator, params);
  }
  return {};
}

namespace {

TensorExpr coproduct_at(const TensorExpr& expr, const DeformationParams& params, bool left) {
  TensorExpr out;
  for (const auto& t : expr) {
    if (t.factors.empty()) throw std::invalid_argument("empty tensor term");
    const std::size_t pos = left ? 0 : t.factors.size() - 1;
    for (const auto& split : coproduct_of(t.factors[pos], params)) {
      TensorTerm nt;
      nt.coefficient = t.coefficient * split.coefficient;
      for (std::size_t i = 0; i < t.factors.size(); ++i) {
        if (i == pos) {
          nt.factors.insert(nt.factors.end(), split.factors.begin(), split.factors.end());
        } else {
          nt.factors.push_back(t.factors[i]);
        }
      }
      out.push_back(std::move(nt));
    }
  }
  return out;
}

TensorExpr counit_at(const TensorExpr& expr, bool left, const Complex* override_value) {
  TensorExpr out;
  for (const auto& t : expr) {
    if (t.factors.size() < 2) throw std::invalid_argument("counit needs at least two tensor factors");
    const std::size_t pos = left ? 0 : t.factors.size() - 1;
    TensorTerm nt;
    nt.coefficient = t.coefficient * counit_of(t.factors[pos], override_value);
    for (std::size_t i = 0; i < t.factors.size(); ++i)
      if (i != pos) nt.factors.push_back(t.factors[i]);
    out.push_back(std::move(nt));
  }
  return out;
}

}  // namespace

TensorExpr coproduct_left(const TensorExpr& expr, const DeformationParams& params) {
  return coproduct_at(expr, params, true);
}

TensorExpr coproduct_right(const TensorExpr& expr, const DeformationParams& params) {
  return coproduct_at(expr, params, false);
}

Complex counit_of(const Factor& f, const Complex* exponential_override) {
  switch (f.kind) {
    case Factor::Kind::identity:
      return 1.0;
    case Factor::Kind::generator:
      return 0.0;
    case Factor::Kind::exponential: {
      if (exponential_override) return *exponential_override;
      constexpr double counit_of_cartan = 0.0;
      double exponent = 0.0;
      for (const auto& [k, c] : f.exponent) exponent += c * counit_of_cartan;
      return std::polar(1.0, pi * exponent);
    }
  }
  return 0.0;
}

TensorExpr counit_left(const TensorExpr& expr, const Complex* exponential_override) {
  return counit_at(expr, true, exponential_override);
}

TensorExpr counit_right(const TensorExpr& expr, const Complex* exponential_override) {
  return counit_at(expr, false, exponential_override);
}

SparseOperator evaluate(const Factor& f, const GeneratorSet& g) {
  switch (f.kind) {
    case Factor::Kind::identity:
      return SparseOperator::identity(g.dimension());
    case Factor::Kind::generator:
      return g.get(f.generator);
    case Factor::Kind::exponential: {
      SparseOperator out = SparseOperator::identity(g.dimension());
      for (const auto& [k, c] : f.exponent) out = out * diagonal_power(pi * c, g.H(k), 1.0);
      return out;
    }
  }
  throw std::invalid_argument("unknown factor kind");
}

TensorOperator evaluate(const TensorExpr& expr, const GeneratorSet& g) {
  if (expr.empty()) throw std::invalid_argument("cannot evaluate an empty tensor expression");
  const std::size_t factors = expr.front().factors.size();
  std::size_t dim = 1;
  for (std::size_t i = 0; i < factors; ++i) dim *= g.dimension();
  TensorOperator out{SparseOperator(dim), factors, g.dimension()};
  for (const auto& t : expr) {
    if (t.factors.size() != factors) throw std::invalid_argument("tensor terms differ in factor count");
    std::vector<SparseOperator> mats;
    mats.reserve(factors);
    for (const auto& f : t.factors) mats.push_back(evaluate(f, g));
    out.op = add_scaled(out.op, make_tensor(mats).op, t.coefficient);
  }
  return out;
}

TensorOperator coproduct(const GeneratorSet& g, const DeformationParams& params, const GeneratorId& id) {
  return evaluate(coproduct_terms(id, params), g);
}

GeneratorSet coproduct_images(const GeneratorSet& g, const DeformationParams& params) {
  GeneratorSet out;
  out.n = g.n;
  for (std::size_t k = 1; k < g.n; ++k) {
    out.raising.push_back(coproduct(g, params, {Kind::raising, k}).op);
    out.lowering.push_back(coproduct(g, params, {Kind::lowering, k}).op);
  }
  for (std::size_t i = 1; i <= g.n; ++i) out.cartan.push_back(coproduct(g, params, {Kind::cartan, i}).op);
  return out;
}

RelationReport verify_coproduct_homomorphism(const GeneratorSet& g, const DeformationParams& params,
                                             const VerifyOptions& options, std::size_t dimension_cap) {
  params.require_sorts(g.n);
  const auto start = std::chrono::steady_clock::now();
  SuiteRecorder rec("coproduct", options);
  const std::size_t dim = g.dimension();
  if (exceeds(dim, 2, dimension_cap)) {
    RelationInstance m;
    m.relation_id = "coproduct";
    rec.record(m, Status::skipped,
               "skipped: V(x)V dimension " + dims_label(dim, 2) + " exceeds cap " + std::to_string(dimension_cap));
    return rec.finish(params, g.n, "", dim);
  }
  const GeneratorSet images = coproduct_images(g, params);
  const CoefficientModel model = CoefficientModel::multiparameter(params);

  if (rec.mutations()) {
    // Drop the second term of Delta(I_12).
    GeneratorSet broken = images;
    const TensorExpr full = coproduct_terms({Kind::raising, 1}, params);
    broken.raising[0] = evaluate(TensorExpr{full.front()}, g).op;
    RelationInstance m;
    m.relation_id = "eq1.line5";
    m.variant = "Delta(I_12) second term dropped";
    m.indices = {{"i", 1}, {"j", 1}};
    rec.mutation(m, cartan_relation(broken, model, 1).residual);
  }

  RelationReport report = rec.finish(params, g.n, "", images.dimension());
  report.absorb(verify_algebra_suite(images, model, options));
  report.absorb(verify_serre_suite(images, model, options));
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

RelationReport verify_coassociativity(const GeneratorSet& g, const DeformationParams& params,
                                      const VerifyOptions& options, std::size_t dimension_cap) {
  params.require_sorts(g.n);
  SuiteRecorder rec("coassoc", options);
  const std::size_t dim = g.dimension();
  if (exceeds(dim, 3, dimension_cap)) {
    RelationInstance m;
    m.relation_id = "coassociativity";
    rec.record(m, Status::skipped,
               "skipped: V(x)V(x)V dimension " + dims_label(dim, 3) + " exceeds cap " + std::to_string(dimension_cap));
    return rec.finish(params, g.n, "", dim);
  }
  std::size_t triple = dim * dim * dim;
  for (const auto& id : g.ids()) {
    const TensorExpr delta = coproduct_terms(id, params);
    const TensorOperator lhs = evaluate(coproduct_left(delta, params), g);
    const TensorOperator rhs = evaluate(coproduct_right(delta, params), g);
    RelationInstance m;
    m.relation_id = "coassociativity";
    m.variant = id.to_string();
    m.indices = {{"k", static_cast<long>(id.k)}};
    rec.check(m, lhs.op - rhs.op, std::max(lhs.op.max_abs(), rhs.op.max_abs()));
  }
  if (rec.mutations() && g.n >= 2) {
    // Apply (id (x) Delta) with s_1 shifted, so the two sides use different parameters.
    DeformationParams shifted = params;
    shifted.rho[0] += kMutationPhase;
    const GeneratorId id{Kind::raising, 1};
    const TensorExpr delta = coproduct_terms(id, params);
    RelationInstance m;
    m.relation_id = "coassociativity";
    m.variant = id.to_string() + " s_1 phase-shifted on one side";
    m.indices = {{"k", 1}};
    rec.mutation(m, evaluate(coproduct_left(delta, params), g).op -
                        evaluate(coproduct_right(coproduct_terms(id, shifted), shifted), g).op);
  }
  return rec.finish(params, g.n, "", triple);
}

RelationReport verify_counit(const GeneratorSet& g, const DeformationParams& params, const VerifyOptions& options) {
  params.require_sorts(g.n);
  SuiteRecorder rec("counit", options);
  for (const auto& id : g.ids()) {
    const TensorExpr delta = coproduct_terms(id, params);
    const SparseOperator& target = g.get(id);
    for (const bool left : {true, false}) {
      const TensorOperator reduced = evaluate(left ? counit_left(delta) : counit_right(delta), g);
      RelationInstance m;
      m.relation_id = left ? "eq4.counit_left" : "eq4.counit_right";
      m.variant = id.to_string();
      m.indices = {{"k", static_cast<long>(id.k)}};
      rec.check(m, reduced.op - target, target.max_abs());
    }
  }
  if (rec.mutations() && g.n >= 2) {
    const Complex wrong = std::polar(1.0, pi * kMutationPhase);
    const GeneratorId id{Kind::raising, 1};
    RelationInstance m;
    m.relation_id = "eq4.counit_left";
    m.variant = id.to_string() + " eps(exponential) phase-shifted";
    m.indices = {{"k", 1}};
    rec.mutation(m, evaluate(counit_left(coproduct_terms(id, params), &wrong), g).op - g.get(id));
  }
  return rec.finish(params, g.n, "", g.dimension());
}

}  // namespace qanyon
