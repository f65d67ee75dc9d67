#include "qanyon/report.hpp"

#include <algorithm>

namespace qanyon {

const char* to_string(Status status) {
  switch (status) {
    case Status::passed:
      return "passed";
    case Status::failed:
      return "failed";
    case Status::skipped:
      return "skipped";
    case Status::not_applicable:
      return "not_applicable";
    case Status::informational:
      return "informational";
  }
  return "unknown";
}

SuiteSummary RelationReport::summary() const {
  SuiteSummary s;
  for (const auto& inst : instances) {
    ++s.total;
    switch (inst.status) {
      case Status::passed:
        ++s.passed;
        break;
      case Status::failed:
        ++s.failed;
        break;
      case Status::skipped:
        ++s.skipped;
        break;
      case Status::not_applicable:
        ++s.not_applicable;
        break;
      case Status::informational:
        ++s.informational;
        break;
    }
    if (inst.mutation) {
      if (inst.status == Status::skipped) continue;
      ++s.mutations;
      if (inst.status == Status::passed) ++s.mutations_detected;
    } else if (inst.status == Status::passed || inst.status == Status::failed) {
      s.max_residual = std::max(s.max_residual, inst.residual);
    }
  }
  return s;
}

void RelationReport::absorb(const RelationReport& other) {
  for (auto inst : other.instances) {
    inst.suite = suite;
    instances.push_back(std::move(inst));
  }
}

}  // namespace qanyon
