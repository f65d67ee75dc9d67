#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qanyon/anyon_ops.hpp"

namespace qanyon {

enum class Status { passed, failed, skipped, not_applicable, informational };

const char* to_string(Status status);

/// One checked instance of a relation with concrete index and site bindings.
struct RelationInstance {
  std::string suite;
  std::string relation_id;  // e.g. "eq1.line5", "eq2.serre1", "eq18"
  std::string variant;      // cut or specialization, e.g. "gamma", "gamma-delta", "two-parameter"
  bool conjugate = false;   // Hermitian-conjugated form of the relation
  bool mutation = false;    // planted wrong-parameter check; passes when the residual is large
  std::vector<std::pair<std::string, long>> indices;
  std::vector<std::pair<std::string, std::string>> sites;
  double residual = 0.0;
  double scale = 0.0;
  double threshold = 0.0;
  Status status = Status::passed;
  std::string note;
};

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t not_applicable = 0;
  std::size_t informational = 0;
  std::size_t mutations = 0;
  std::size_t mutations_detected = 0;
  double max_residual = 0.0;  // over non-mutation checked instances
};

/// Result of running one suite.
struct RelationReport {
  std::string suite;
  DeformationParams params;
  std::size_t n_sorts = 0;
  std::string lattice;
  std::size_t dimension = 0;
  std::vector<RelationInstance> instances;
  double wall_seconds = 0.0;

  SuiteSummary summary() const;
  /// True when no instance failed.
  bool ok() const { return summary().failed == 0; }
  /// Appends another report's instances, relabelled to this suite.
  void absorb(const RelationReport& other);
};

}  // namespace qanyon
