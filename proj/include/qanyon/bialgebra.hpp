#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qanyon/anyon_ops.hpp"
#include "qanyon/fock_space.hpp"
#include "qanyon/generators.hpp"
#include "qanyon/relations.hpp"
#include "qanyon/report.hpp"
#include "qanyon/sparse_operator.hpp"

namespace qanyon {

/// Operator on a tensor power V^{(x) factors}, built from Kronecker products.
struct TensorOperator {
  SparseOperator op;
  std::size_t factors = 2;
  std::size_t factor_dimension = 1;
};

TensorOperator make_tensor(std::span<const SparseOperator> factors);

/// One tensor factor in a symbolic coproduct expression.
///
/// `exponential` stands for exp(i pi sum_k c_k I_kk) with the (k, c_k) pairs in
/// `exponent`; every power (s_k q)^{t I_kk} and q^{t (I_kk + I_{k+1,k+1})/2} is of this form.
struct Factor {
  enum class Kind { identity, generator, exponential };
  Kind kind = Kind::identity;
  GeneratorId generator;
  std::vector<std::pair<std::size_t, double>> exponent;

  static Factor one() { return {}; }
  static Factor of(GeneratorId id) { return {Kind::generator, id, {}}; }
  static Factor exp(std::vector<std::pair<std::size_t, double>> e) { return {Kind::exponential, {}, std::move(e)}; }
};

struct TensorTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<Factor> factors;
};

/// Sum of tensor terms, all with the same number of factors.
using TensorExpr = std::vector<TensorTerm>;

/// Delta(g) as a two-factor expression.
TensorExpr coproduct_terms(const GeneratorId& id, const DeformationParams& params);

/// Delta applied to one factor: exponentials are group-like, I_kk primitive,
/// raising/lowering generators use coproduct_terms.
TensorExpr coproduct_of(const Factor& f, const DeformationParams& params);

/// (Delta (x) id) or (id (x) Delta) applied to a two-factor expression.
TensorExpr coproduct_left(const TensorExpr& expr, const DeformationParams& params);
TensorExpr coproduct_right(const TensorExpr& expr, const DeformationParams& params);

/// Counit of one factor: 1 for the identity, 0 for generators, and exp(i pi sum c_k eps(I_kk)) = 1
/// for exponentials. `exponential_override` replaces the latter (used by mutation checks).
Complex counit_of(const Factor& f, const Complex* exponential_override = nullptr);

/// (eps (x) id) or (id (x) eps) of a two-factor expression, as a one-factor expression.
TensorExpr counit_left(const TensorExpr& expr, const Complex* exponential_override = nullptr);
TensorExpr counit_right(const TensorExpr& expr, const Complex* exponential_override = nullptr);

SparseOperator evaluate(const Factor& f, const GeneratorSet& generators);
TensorOperator evaluate(const TensorExpr& expr, const GeneratorSet& generators);

/// Delta(g) evaluated on V (x) V.
TensorOperator coproduct(const GeneratorSet& generators, const DeformationParams& params, const GeneratorId& id);

/// Images of every generator under Delta, as a generator set on V (x) V.
GeneratorSet coproduct_images(const GeneratorSet& generators, const DeformationParams& params);

/// Relations (1) and (2) on the coproduct images. Emits a single skipped record
/// if (dim V)^2 exceeds the cap.
RelationReport verify_coproduct_homomorphism(const GeneratorSet& generators, const DeformationParams& params,
                                             const VerifyOptions& options = {},
                                             std::size_t dimension_cap = kDefaultDimensionCap);

/// (Delta (x) id) Delta(g) = (id (x) Delta) Delta(g) on V^{(x)3}. Emits a single skipped
/// record if (dim V)^3 exceeds the cap.
RelationReport verify_coassociativity(const GeneratorSet& generators, const DeformationParams& params,
                                      const VerifyOptions& options = {},
                                      std::size_t dimension_cap = kDefaultDimensionCap);

/// (eps (x) id) Delta(g) = g = (id (x) eps) Delta(g) for every generator.
RelationReport verify_counit(const GeneratorSet& generators, const DeformationParams& params,
                             const VerifyOptions& options = {});

}  // namespace qanyon
