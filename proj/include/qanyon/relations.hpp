#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>

#include "qanyon/anyon_ops.hpp"
#include "qanyon/fock_space.hpp"
#include "qanyon/generators.hpp"
#include "qanyon/report.hpp"

namespace qanyon {

inline constexpr double kDefaultTolerance = 1e-10;
/// A planted mutation counts as detected when its residual exceeds this.
inline constexpr double kMutationThreshold = 1e-3;
/// Phase shift (in units of pi) applied to one parameter by planted mutations.
inline constexpr double kMutationPhase = 0.05;
/// Entrywise agreement required when the reduction suite compares operator families.
inline constexpr double kEntrywiseTolerance = 1e-12;

struct VerifyOptions {
  double tolerance = kDefaultTolerance;
  bool mutations = false;
};

/// Source of the structure constants used on the right-hand sides of the algebra relations.
///
/// `multiparameter` reads s_j from rho; `two_parameter` uses one common s for every j;
/// `drinfeld_jimbo` fixes s_j = 1.
struct CoefficientModel {
  enum class Kind { multiparameter, two_parameter, drinfeld_jimbo };
  Kind kind = Kind::multiparameter;
  double nu = 0.0;
  std::vector<double> rho;  // multiparameter only
  double common_rho = 0.0;  // two_parameter only

  static CoefficientModel multiparameter(const DeformationParams& p);
  static CoefficientModel two_parameter(double nu, double rho);
  static CoefficientModel drinfeld_jimbo(double nu);

  /// Phase of s_j in units of pi.
  double rho_at(std::size_t j) const;
  Complex q() const;
  Complex s(std::size_t j) const;
  const char* label() const;
};

/// Collects instances for one suite and applies the pass rule
/// residual < tolerance * (1 + scale).
class SuiteRecorder {
 public:
  SuiteRecorder(std::string suite, const VerifyOptions& options);

  const VerifyOptions& options() const { return options_; }
  bool mutations() const { return options_.mutations; }

  void check(RelationInstance meta, const SparseOperator& residual, double scale);
  /// Records a planted mutation; passes iff the residual exceeds kMutationThreshold.
  /// With `unmutated` given, a mutation that leaves the expression unchanged on this
  /// space (within kMutationThreshold) is recorded as skipped instead.
  void mutation(RelationInstance meta, const SparseOperator& residual, const SparseOperator* unmutated = nullptr);
  /// Pass iff max deviation < threshold (no scale factor).
  void check_absolute(RelationInstance meta, double deviation, double threshold);
  void record(RelationInstance meta, Status status, std::string note, double residual = 0.0);

  /// Checks X Y + r Y X = rhs and its Hermitian conjugate Y^dag X^dag + conj(r) X^dag Y^dag = rhs^dag,
  /// the conjugate built from the supplied adjoints.
  void check_pair(const RelationInstance& meta, const SparseOperator& x, const SparseOperator& y, Complex r,
                  const SparseOperator* rhs, const SparseOperator& x_dag, const SparseOperator& y_dag);

  RelationReport finish(const DeformationParams& params, std::size_t n_sorts, std::string lattice,
                        std::size_t dimension);

 private:
  std::string suite_;
  VerifyOptions options_;
  std::vector<RelationInstance> instances_;
  std::chrono::steady_clock::time_point start_;
};

/// Anticommutation relations of the bare fermions over all mode pairs.
RelationReport verify_fermion_suite(const FockSpace& space, const VerifyOptions& options = {});

/// Anyonic oscillator relations for both cuts and across cuts, plus conjugates. rho is ignored.
RelationReport verify_anyon_suite(const FockSpace& space, const DeformationParams& params,
                                  const VerifyOptions& options = {});

/// Quasi-anyon relations: same-mode carryovers and the graded cross-mode relations.
RelationReport verify_quasi_anyon_suite(const FockSpace& space, const DeformationParams& params,
                                        const VerifyOptions& options = {});

/// Defining relations of the deformed gl_n evaluated on a generator set.
RelationReport verify_algebra_suite(const GeneratorSet& generators, const CoefficientModel& model,
                                    const VerifyOptions& options = {});

/// The four trilinear q-Serre families; not applicable for n < 3.
RelationReport verify_serre_suite(const GeneratorSet& generators, const CoefficientModel& model,
                                  const VerifyOptions& options = {});

/// Two-parameter, Drinfeld-Jimbo and classical specializations.
RelationReport verify_reduction_suite(const FockSpace& space, double nu, double common_rho = 0.21,
                                      const VerifyOptions& options = {});

/// [E_i, F_i] * den - num for the Cartan relation between E_i and F_i, or, when the
/// denominator vanishes (q^2 = 1), [E_i, F_i] minus its q -> +-1 limit.
struct CartanRelation {
  SparseOperator residual;
  double scale = 0.0;
  bool limit_form = false;
};
CartanRelation cartan_relation(const GeneratorSet& generators, const CoefficientModel& model, std::size_t i);

/// Diagonal operator q^{sum_{y != x} sgn(x - y) N_sort(y)}, built from number operators.
SparseOperator ordered_number_phase(const FockSpace& space, double nu, std::size_t sort, const LatticeSite& x);

}  // namespace qanyon
