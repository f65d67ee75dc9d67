#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qanyon/fock_space.hpp"
#include "qanyon/relations.hpp"
#include "qanyon/report.hpp"

namespace qanyon {

/// Invalid configuration; the CLI exits with status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Suites in execution order.
inline const std::vector<std::string> kSuiteOrder = {"fermion", "anyon",     "quasi",   "algebra", "serre",
                                                     "reduction", "coproduct", "coassoc", "counit"};

struct RunConfig {
  std::size_t n_sorts = 3;
  std::size_t lattice_width = 2;
  std::size_t lattice_height = 1;
  double nu = 0.3;
  std::vector<double> rho = {0.17, 0.23};
  double tolerance = kDefaultTolerance;
  std::vector<std::string> suites = {"all"};
  std::string report_path = "qanyon_report.json";
  bool mutation_mode = false;
  bool timestamp = true;
  std::size_t dimension_cap = kDefaultDimensionCap;

  /// Throws ConfigError describing the first problem found.
  void validate() const;
  /// Requested suites expanded ("all") and put in execution order.
  std::vector<std::string> ordered_suites() const;
};

/// Reads a JSON config file; keys mirror the RunConfig fields. Unknown keys are rejected.
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Parses command-line flags (argv[0] excluded), applying --config first and flags over it.
/// Validates the result; throws ConfigError on bad input. Sets `help` when usage was requested and printed.
RunConfig parse_arguments(const std::vector<std::string>& args, std::ostream& out, bool* help = nullptr);

/// Runs the selected suites in fixed order.
std::vector<RelationReport> run_suites(const RunConfig& config);

nlohmann::ordered_json report_json(const RunConfig& config, const std::vector<RelationReport>& reports);

/// Full CLI behaviour: validate, run, write the report, print a summary line per suite.
/// Returns 0 when every instance passed, 1 on any failure, 2 on configuration errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qanyon
